#ifndef ZETALAB_ZETA_HPP
#define ZETALAB_ZETA_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "zetalab/bernoulli.hpp"
#include "zetalab/core.hpp"

// Evaluation of zeta(s), zeta(s,alpha) and periodic-coefficient variants on
// sigma > -1 (s != 1) by Euler-Maclaurin summation.
//
// Everything reduces to one kernel: for a weight pattern w_0..w_{k-1} and an
// offset 0 < alpha <= 1,
//
//     f(s) = sum_{m>=0} w_{m mod k} (m+alpha)^{-s}
//          = k^{-s} sum_{r=0}^{k-1} w_r zeta(s, (r+alpha)/k),
//
// and each Hurwitz component is continued by the classical formula with N
// main terms, the integral term x^{1-s}/(s-1) at x = N + beta, the half
// term, and J Bernoulli correction terms.  The remainder after J terms is
// bounded rigorously via |~B_{2J+1}(x)| <= 2*zeta(2J+1)*(2J+1)!/(2pi)^{2J+1}:
//
//     |R| <= 2*zeta(2J+1)/(2pi)^{2J+1} * prod_{i=0}^{2J} |s+i|
//            * x^{-sigma-2J} / (sigma+2J),
//
// which is valid for sigma + 2J > 0, so any J >= 1 covers sigma > -1.
// N starts at max(ceil(|t|), 20) and J (then N) grows until the bound meets
// the requested tolerance.
//
// The pole contribution is grouped across components: with u = s-1 and
// L_r = log(N + beta_r),
//
//     k^{-s}/u * sum_r w_r x_r^{-u}
//       = k^{-s} * [ k*b/u - sum_r w_r L_r E(-u L_r) ],   E(z) = (e^z-1)/z,
//
// where b is the mean of the weights.  For b = 0 the series is entire and
// this form stays finite through s = 1; for b != 0 we refuse evaluation
// inside a small disk around the pole.

namespace zetalab {

inline constexpr double kPoleExclusionRadius = 1e-8;

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

class PeriodicSequence {
 public:
  explicit PeriodicSequence(std::vector<Complex> values) : values_(std::move(values)) {
    if (values_.empty())
      throw ConfigError("PeriodicSequence: period must be at least 1");
    for (const Complex& v : values_) require_finite(v, "PeriodicSequence value");
    // Reject non-minimal periods: the period length enters contracts
    // (residue formula, combination formula), so it must be canonical.
    const int k = static_cast<int>(values_.size());
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      bool repeats = true;
      for (int i = d; i < k && repeats; ++i)
        if (values_[i] != values_[i % d]) repeats = false;
      if (repeats)
        throw ConfigError("PeriodicSequence: period " + std::to_string(k) +
                          " is not minimal (repeats with period " + std::to_string(d) + ")");
    }
  }

  int period() const { return static_cast<int>(values_.size()); }
  const std::vector<Complex>& values() const { return values_; }
  Complex value_at(long m) const { return values_[m % values_.size()]; }

 private:
  std::vector<Complex> values_;
};

struct HurwitzParameter {
  enum class Provenance { preset_transcendental, user_supplied };

  double alpha;
  Provenance provenance;

  static HurwitzParameter user(double a) {
    check(a);
    return {a, Provenance::user_supplied};
  }
  static HurwitzParameter preset_inv_pi() {
    return {1.0 / M_PI, Provenance::preset_transcendental};
  }
  static HurwitzParameter preset_inv_e() {
    return {1.0 / M_E, Provenance::preset_transcendental};
  }
  static HurwitzParameter preset_log2() {
    return {M_LN2, Provenance::preset_transcendental};
  }

  static void check(double a) {
    if (!(a > 0.0) || !(a <= 1.0) || !std::isfinite(a))
      throw ConfigError("Hurwitz parameter must satisfy 0 < alpha <= 1");
  }
};

// mean of one period; the series has a simple pole at s = 1 iff nonzero
inline Complex residue_at_one(const PeriodicSequence& seq) {
  Complex sum = 0.0;
  for (const Complex& v : seq.values()) sum += v;
  return sum / static_cast<double>(seq.period());
}

inline Complex weight_residue(std::span<const Complex> w) {
  Complex sum = 0.0;
  for (const Complex& v : w) sum += v;
  return sum / static_cast<double>(w.size());
}

// ---------------------------------------------------------------------------
// Truncation planning
// ---------------------------------------------------------------------------

struct EmPlan {
  long n_main;       // main terms per Hurwitz component
  int n_bernoulli;   // Bernoulli correction terms
  double bound;      // rigorous remainder bound achieved
};

// Worst-case plan over the rectangle [sigma_lo, sigma_hi] x [-t_max, t_max].
// weight_sum = sum |w_r|, beta_min = smallest component offset, scale = k.
inline EmPlan plan_euler_maclaurin(double sigma_lo, double sigma_hi, double t_max,
                                   double beta_min, double weight_sum, int scale,
                                   double abs_tol, long max_terms) {
  if (sigma_lo <= -1.0)
    throw PreconditionError("evaluation supported only for sigma > -1");
  const double abs_sigma = std::max(std::abs(sigma_lo), std::abs(sigma_hi));
  const double log_w = std::log(std::max(weight_sum, 1e-300));
  const double log_k = std::log(static_cast<double>(scale));
  const double log_2pi = std::log(2.0 * M_PI);

  long n = std::max<long>(20, static_cast<long>(std::ceil(t_max)));
  for (;; n *= 2) {
    if (static_cast<long>(scale) * n > max_terms)
      throw AccuracyUnreachableError(
          "series-length cap exceeded before reaching abs_tol=" + fmt17(abs_tol));
    const double log_x = std::log(static_cast<double>(n) + beta_min);
    // log prod_{i=0}^{2J} |s+i| accumulated as J grows
    double log_rf = 0.5 * std::log(abs_sigma * abs_sigma + t_max * t_max);
    double best = HUGE_VAL;
    for (int j = 1; j <= kMaxBernoulliOrder; ++j) {
      for (int i = 2 * j - 1; i <= 2 * j; ++i) {
        const double a = abs_sigma + i;
        log_rf += 0.5 * std::log(a * a + t_max * t_max);
      }
      const double log_bound = log_w - sigma_lo * log_k +
                               std::log(2.0 * kZetaOddBound) - (2 * j + 1) * log_2pi +
                               log_rf - (sigma_lo + 2 * j) * log_x -
                               std::log(sigma_lo + 2 * j);
      const double bound = std::exp(log_bound);
      best = std::min(best, bound);
      if (bound <= abs_tol) return {n, j, bound};
    }
    (void)best;  // no J worked at this n; double the main series
  }
}

// ---------------------------------------------------------------------------
// Tail machinery shared by the scalar evaluator and the batched scanner
// ---------------------------------------------------------------------------

// E(z) = (e^z - 1)/z, stable at z = 0.
inline Complex expm1_over(Complex z) {
  if (std::abs(z) > 0.25) return (std::exp(z) - 1.0) / z;
  Complex sum = 1.0;
  Complex term = 1.0;
  for (int n = 2; n <= 14; ++n) {
    term *= z / static_cast<double>(n);
    sum += term;
  }
  return sum;
}

// Continuation terms past the first N main terms of
// k^{-s} sum_r w_r zeta(s, beta_r):  integral + half + Bernoulli corrections,
// with the pole grouped across components as described above.
inline Complex em_tail(Complex s, std::span<const Complex> weights,
                       std::span<const double> betas, long n_main, int n_bern,
                       int scale, Complex weight_mean) {
  const auto& brat = bernoulli_ratios();
  const Complex u = s - 1.0;
  const bool near_pole = std::abs(u) < 0.5;
  const double k = static_cast<double>(scale);

  Complex acc = 0.0;
  Complex pole = 0.0;
  if (near_pole && weight_mean != 0.0) pole = k * weight_mean / u;

  for (std::size_t r = 0; r < weights.size(); ++r) {
    const Complex w = weights[r];
    if (w == 0.0) continue;
    const double x = static_cast<double>(n_main) + betas[r];
    const double lx = std::log(x);
    const Complex xs = std::exp(-s * lx);  // x^{-s}

    if (near_pole)
      pole += w * (-lx) * expm1_over(-u * lx);
    else
      acc += w * x * xs / u;

    acc += 0.5 * w * xs;

    // Bernoulli corrections: brat_j * (s)_{2j-1} * x^{-s-2j+1}
    Complex rising = s;                 // (s)_1
    Complex xpow = xs / x;              // x^{-s-1}
    const double x2 = 1.0 / (x * x);
    for (int j = 1; j <= n_bern; ++j) {
      if (j > 1) {
        rising *= (s + static_cast<double>(2 * j - 3)) * (s + static_cast<double>(2 * j - 2));
        xpow *= x2;
      }
      acc += w * brat[j] * rising * xpow;
    }
  }
  acc += pole;

  const Complex ks = (scale == 1) ? Complex(1.0) : std::exp(-s * std::log(k));
  return ks * acc;
}

// ---------------------------------------------------------------------------
// Scalar evaluation
// ---------------------------------------------------------------------------

// f(s) = sum_{m>=0} w_{m mod k} (m+alpha)^{-s}, continued to sigma > -1.
inline Complex periodic_series_eval(Complex s, double alpha,
                                    std::span<const Complex> weights,
                                    const EvalControls& ctl) {
  ctl.validate();
  require_finite(s, "evaluation point");
  HurwitzParameter::check(alpha);
  if (s.real() <= -1.0)
    throw PreconditionError("evaluation supported only for sigma > -1, got sigma=" +
                            fmt17(s.real()));

  const int k = static_cast<int>(weights.size());
  const Complex mean = weight_residue(weights);
  if (mean != 0.0 && std::abs(s - 1.0) < kPoleExclusionRadius)
    throw PoleAtOneError("pole at s=1 (residue " + fmt_complex(mean) +
                         "): refused within radius " + fmt17(kPoleExclusionRadius));

  double wsum = 0.0;
  for (const Complex& w : weights) wsum += std::abs(w);
  if (wsum == 0.0) return 0.0;

  std::vector<double> betas(k);
  for (int r = 0; r < k; ++r) betas[r] = (r + alpha) / k;

  const EmPlan plan = plan_euler_maclaurin(s.real(), s.real(), std::abs(s.imag()),
                                           betas[0], wsum, k, ctl.abs_tol, ctl.max_terms);

  KahanComplexSum main;
  const long m_total = plan.n_main * k;
  for (long m = 0; m < m_total; ++m) {
    const Complex w = weights[m % k];
    if (w == 0.0) continue;
    main.add(w * std::exp(-s * std::log(static_cast<double>(m) + alpha)));
  }

  Complex value = main.value() +
                  em_tail(s, weights, betas, plan.n_main, plan.n_bernoulli, k, mean);
  require_finite(value, "evaluation result");
  return value;
}

inline Complex hurwitz_zeta(Complex s, const HurwitzParameter& a,
                            const EvalControls& ctl = {}) {
  const Complex one[1] = {Complex(1.0)};
  return periodic_series_eval(s, a.alpha, one, ctl);
}

inline Complex hurwitz_zeta(Complex s, double alpha, const EvalControls& ctl = {}) {
  return hurwitz_zeta(s, HurwitzParameter::user(alpha), ctl);
}

inline Complex riemann_zeta(Complex s, const EvalControls& ctl = {}) {
  return hurwitz_zeta(s, HurwitzParameter{1.0, HurwitzParameter::Provenance::user_supplied},
                      ctl);
}

inline Complex periodic_hurwitz_zeta(Complex s, const HurwitzParameter& a,
                                     const PeriodicSequence& seq,
                                     const EvalControls& ctl = {}) {
  return periodic_series_eval(s, a.alpha, seq.values(), ctl);
}

inline Complex periodic_hurwitz_zeta(Complex s, double alpha, const PeriodicSequence& seq,
                                     const EvalControls& ctl = {}) {
  return periodic_hurwitz_zeta(s, HurwitzParameter::user(alpha), seq, ctl);
}

}  // namespace zetalab

#endif  // ZETALAB_ZETA_HPP
