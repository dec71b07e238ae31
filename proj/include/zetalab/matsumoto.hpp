#ifndef ZETALAB_MATSUMOTO_HPP
#define ZETALAB_MATSUMOTO_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/primes.hpp"
#include "zetalab/shift_family.hpp"
#include "zetalab/textdoc.hpp"
#include "zetalab/zeta.hpp"

// Euler-product zeta-functions with polynomial local factors
//
//     phi~(s) = prod_m ( A_m(p_m^{-s}) )^{-1},
//     A_m(X)  = prod_{j=1}^{g(m)} (1 - a_m^{(j)} X^{f(j,m)}),
//
// shifted so the Dirichlet series phi(s) = phi~(s + alpha0 + beta0) converges
// absolutely for sigma > 1.  Members whose shifted coefficients follow a
// period-q pattern (the degree-one cases: zeta, Dirichlet L-functions) also
// get strip evaluation through the periodic-Hurwitz kernel; everything else
// is evaluable only to the right of the product's convergence line.

namespace zetalab {

struct EulerFactor {
  struct Term {
    int exponent;   // f_j >= 1
    Complex coeff;  // a_j
  };
  int index = 0;    // m, 1-based
  long prime = 0;   // p_m
  std::vector<Term> terms;
};

class MatsumotoSpec {
 public:
  enum class Rule { riemann, dirichlet_character, zero, table };

  struct Combination {
    int period = 1;
    std::vector<Complex> coeffs;  // a(1..q); shifted Dirichlet coefficients
  };

  Rule rule = Rule::riemann;
  std::string name = "riemann";
  double alpha0 = 0.0;
  double beta0 = 0.0;
  double c1 = 1.0;
  std::optional<Combination> combination;
  std::optional<double> declared_sigma_star;

  // rule payloads
  std::vector<Complex> character;     // chi(1..q) for dirichlet_character
  int modulus = 0;
  std::vector<EulerFactor> table;     // explicit factors, m = 1..table.size()

  static MatsumotoSpec riemann_spec() {
    MatsumotoSpec s;
    s.rule = Rule::riemann;
    s.name = "riemann";
    s.combination = Combination{1, {Complex(1.0)}};
    s.declared_sigma_star = 0.5;
    s.finish_validate();
    return s;
  }

  static MatsumotoSpec character_spec(int modulus, std::vector<Complex> chi) {
    MatsumotoSpec s;
    s.rule = Rule::dirichlet_character;
    s.name = "dirichlet-character(" + std::to_string(modulus) + ")";
    s.modulus = modulus;
    s.character = std::move(chi);
    s.combination = Combination{modulus, s.character};
    s.declared_sigma_star = 0.5;
    s.finish_validate();
    return s;
  }

  static MatsumotoSpec zero_spec() {
    MatsumotoSpec s;
    s.rule = Rule::zero;
    s.name = "zero";
    s.combination = Combination{1, {Complex(0.0)}};
    s.finish_validate();
    return s;
  }

  static MatsumotoSpec table_spec(std::vector<EulerFactor> factors, double a0, double b0,
                                  double growth_c1,
                                  std::optional<Combination> comb = std::nullopt,
                                  std::optional<double> sigma_star = std::nullopt) {
    MatsumotoSpec s;
    s.rule = Rule::table;
    s.name = "table";
    s.table = std::move(factors);
    s.alpha0 = a0;
    s.beta0 = b0;
    s.c1 = growth_c1;
    s.combination = std::move(comb);
    s.declared_sigma_star = sigma_star;
    s.finish_validate();
    return s;
  }

  static MatsumotoSpec parse(const TextDoc& doc);
  static MatsumotoSpec load_file(const std::string& path) {
    return parse(TextDoc::load(path));
  }

  // Local factor at the m-th prime.  Pure: callers supply p = p_m.
  EulerFactor factor_for(int m, long p) const {
    EulerFactor f;
    f.index = m;
    f.prime = p;
    switch (rule) {
      case Rule::riemann:
        f.terms = {{1, Complex(1.0)}};
        break;
      case Rule::dirichlet_character:
        f.terms = {{1, character[(p - 1) % modulus]}};
        break;
      case Rule::zero:
        f.terms = {{1, Complex(0.0)}};
        break;
      case Rule::table:
        if (m <= static_cast<int>(table.size())) return table[m - 1];
        f.terms = {{1, Complex(0.0)}};  // identity factor beyond the table
        break;
    }
    return f;
  }

  double shift() const { return alpha0 + beta0; }

  bool has_strip_strategy() const { return combination.has_value(); }

  // shifted coefficient a(m) under the declared periodic pattern
  Complex pattern_coefficient(long m) const {
    const auto& c = combination.value();
    return c.coeffs[(m - 1) % c.period];
  }

 private:
  void finish_validate();
};

// ---------------------------------------------------------------------------
// Dirichlet coefficients
// ---------------------------------------------------------------------------

class DirichletCoefficients {
 public:
  DirichletCoefficients(std::vector<Complex> c, long kmax)
      : c_(std::move(c)), kmax_(kmax) {}
  Complex at(long k) const {
    if (k < 1 || k > kmax_) throw ConfigError("coefficient index out of range");
    return c_[k];
  }
  long kmax() const { return kmax_; }

 private:
  std::vector<Complex> c_;
  long kmax_;
};

// 1/A(X) mod X^{degree+1}
inline std::vector<Complex> inverse_factor_series(const EulerFactor& f, int degree) {
  std::vector<Complex> a(degree + 1, Complex(0.0));
  a[0] = 1.0;
  for (const auto& t : f.terms) {
    if (t.exponent < 1) throw ConfigError("Euler factor exponent must be >= 1");
    if (t.exponent > degree) continue;
    for (int i = degree; i >= t.exponent; --i) a[i] -= t.coeff * a[i - t.exponent];
  }
  std::vector<Complex> r(degree + 1, Complex(0.0));
  r[0] = 1.0;  // A(0) = 1 always
  for (int n = 1; n <= degree; ++n) {
    Complex s = 0.0;
    for (int i = 1; i <= n; ++i) s += a[i] * r[n - i];
    r[n] = -s;
  }
  return r;
}

inline DirichletCoefficients dirichlet_coefficients(const MatsumotoSpec& spec, long kmax) {
  if (kmax < 1) throw ConfigError("kmax must be >= 1");
  std::vector<Complex> c(kmax + 1, Complex(0.0));
  c[1] = 1.0;
  const double theta = spec.shift();

  const std::vector<long> primes = primes_up_to(kmax);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const long p = primes[i];
    int emax = 0;
    for (long pe = p; pe <= kmax; pe *= p) {
      ++emax;
      if (pe > kmax / p) break;  // overflow guard
    }
    const EulerFactor f = spec.factor_for(static_cast<int>(i) + 1, p);
    const std::vector<Complex> inv = inverse_factor_series(f, emax);
    long pe = 1;
    for (int e = 1; e <= emax; ++e) {
      pe *= p;
      c[pe] = inv[e] * std::pow(static_cast<double>(pe), -theta);
    }
  }

  if (kmax >= 2) {
    const std::vector<std::int32_t> spf = spf_sieve(kmax);
    for (long k = 2; k <= kmax; ++k) {
      const long p = spf[k];
      long pe = 1, rest = k;
      while (rest % p == 0) {
        rest /= p;
        pe *= p;
      }
      if (rest == 1) continue;  // prime power, already set
      c[k] = c[pe] * c[rest];
    }
  }
  return {std::move(c), kmax};
}

// a(p): the k = p Dirichlet coefficient, directly from the local factor
inline Complex prime_coefficient(const MatsumotoSpec& spec, int m, long p) {
  const EulerFactor f = spec.factor_for(m, p);
  Complex d1 = 0.0;
  for (const auto& t : f.terms)
    if (t.exponent == 1) d1 += t.coeff;
  return d1 * std::pow(static_cast<double>(p), -spec.shift());
}

// ---------------------------------------------------------------------------
// Euler product
// ---------------------------------------------------------------------------

inline constexpr double kProductConvergenceMargin = 0.05;  // require sigma > 1.05

struct EulerProductResult {
  Complex value;
  double tail_bound;  // |phi(s) - value| <= tail_bound
};

inline EulerProductResult euler_product_eval(const MatsumotoSpec& spec, Complex s,
                                             long prime_cap) {
  require_finite(s, "evaluation point");
  if (prime_cap < 2) throw ConfigError("prime cap must be >= 2");
  const double sigma = s.real();
  if (sigma <= 1.0 + kProductConvergenceMargin)
    throw DivergentRegionError("Euler product needs sigma > " +
                               fmt17(1.0 + kProductConvergenceMargin) + ", got " +
                               fmt17(sigma));

  const Complex z = s + spec.shift();
  Complex value = 1.0;
  const std::vector<long> primes = primes_up_to(prime_cap);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const long p = primes[i];
    const EulerFactor f = spec.factor_for(static_cast<int>(i) + 1, p);
    const Complex x = std::exp(-z * std::log(static_cast<double>(p)));
    Complex a = 1.0;
    for (const auto& t : f.terms) {
      Complex xf = x;
      for (int e = 1; e < t.exponent; ++e) xf *= x;
      a *= 1.0 - t.coeff * xf;
    }
    if (std::abs(a) < 1e-14)
      throw FactorVanishesError("local factor vanishes at p=" + std::to_string(p) +
                                " for s=" + fmt_complex(s));
    value /= a;
  }

  // For p > P every |a_j p^{-z f_j}| <= p^{-sigma-alpha0} and g(m) <= C1 p^{alpha0},
  // so |log tail| <= C1 sum_{p>P} p^{-sigma} / (1 - qP) <= C1 P^{1-sigma}/((sigma-1)(1-qP)).
  const double qp = std::pow(static_cast<double>(prime_cap) + 1.0, -sigma - spec.alpha0);
  const double log_tail = spec.c1 * std::pow(static_cast<double>(prime_cap), 1.0 - sigma) /
                          ((sigma - 1.0) * (1.0 - qp));
  const double tail = std::abs(value) * std::expm1(log_tail);
  return {value, tail};
}

// ---------------------------------------------------------------------------
// Strip evaluation (hurwitz-combination members only)
// ---------------------------------------------------------------------------

inline const std::vector<Complex>& strip_weights(const MatsumotoSpec& spec) {
  if (!spec.has_strip_strategy())
    throw UnsupportedStrategyError("spec '" + spec.name +
                                   "' has no strip-evaluation strategy (euler-product-only)");
  return spec.combination->coeffs;
}

inline Complex strip_eval(const MatsumotoSpec& spec, Complex s, const EvalControls& ctl = {}) {
  const auto& w = strip_weights(spec);
  if (s.real() <= 0.5)
    throw PreconditionError("strip evaluation needs sigma > 1/2, got " + fmt17(s.real()));
  return periodic_series_eval(s, 1.0, w, ctl);
}

inline PeriodicSeriesFamily strip_family(const MatsumotoSpec& spec, std::vector<Complex> grid,
                                         double tau_abs_max, double abs_tol) {
  return PeriodicSeriesFamily(strip_weights(spec), 1.0, std::move(grid), tau_abs_max, abs_tol);
}

// ---------------------------------------------------------------------------
// Class-condition audits
// ---------------------------------------------------------------------------

struct GrowthReport {
  bool ok = true;
  int first_violation_m = 0;
  std::string message;
};

inline GrowthReport check_growth_bounds(const MatsumotoSpec& spec, int m_max) {
  if (m_max < 1) throw ConfigError("m_max must be >= 1");
  GrowthReport rep;
  const std::vector<long> primes = first_primes(m_max);
  for (int m = 1; m <= m_max; ++m) {
    const long p = primes[m - 1];
    const EulerFactor f = spec.factor_for(m, p);
    const double pd = static_cast<double>(p);
    const double g_bound = spec.c1 * std::pow(pd, spec.alpha0);
    const double a_bound = std::pow(pd, spec.beta0);
    if (static_cast<double>(f.terms.size()) > g_bound * (1.0 + 1e-12)) {
      rep.ok = false;
      rep.first_violation_m = m;
      rep.message = "degree " + std::to_string(f.terms.size()) + " at m=" +
                    std::to_string(m) + " (p=" + std::to_string(p) + ") exceeds C1*p^alpha0=" +
                    fmt17(g_bound);
      return rep;
    }
    for (const auto& t : f.terms) {
      if (std::abs(t.coeff) > a_bound * (1.0 + 1e-12)) {
        rep.ok = false;
        rep.first_violation_m = m;
        rep.message = "|a|=" + fmt17(std::abs(t.coeff)) + " at m=" + std::to_string(m) +
                      " (p=" + std::to_string(p) + ") exceeds p^beta0=" + fmt17(a_bound);
        return rep;
      }
    }
  }
  rep.message = "bounds hold for all m <= " + std::to_string(m_max);
  return rep;
}

// (1/pi(x)) * sum_{p <= x} |a(p)|^2
inline double steuding_kappa(const MatsumotoSpec& spec, long x) {
  if (x < 2) throw ConfigError("kappa needs x >= 2");
  const std::vector<long> primes = primes_up_to(x);
  KahanSum sum;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const Complex a = prime_coefficient(spec, static_cast<int>(i) + 1, primes[i]);
    sum.add(std::norm(a));
  }
  return sum.value() / static_cast<double>(primes.size());
}

struct MeanSquareEstimate {
  double value;       // trapezoid estimate of (1/T) int_0^T |phi(sigma0+it)|^2 dt
  double quad_error;  // Richardson estimate from the half-resolution rule
};

inline MeanSquareEstimate mean_square_line(const MatsumotoSpec& spec, double sigma0, double T,
                                           int n) {
  if (n < 100) throw ConfigError("mean_square_line needs n >= 100 nodes");
  if (!(T > 0.0)) throw ConfigError("T must be positive");
  if (n % 2 == 1) ++n;

  PeriodicSeriesFamily fam = strip_family(spec, {Complex(sigma0, 0.0)}, T, 1e-8);
  const double h = T / n;
  std::vector<double> f(n + 1);
  Complex val[1];
  for (int i = 0; i <= n; ++i) {
    fam.eval_shift(i * h, std::span<Complex>(val, 1));
    f[i] = std::norm(val[0]);
  }
  KahanSum full, half;
  full.add(0.5 * f[0]);
  half.add(0.5 * f[0]);
  for (int i = 1; i < n; ++i) {
    full.add(f[i]);
    if (i % 2 == 0) half.add(f[i]);
  }
  full.add(0.5 * f[n]);
  half.add(0.5 * f[n]);
  const double est = full.value() * h / T;
  const double est_half = half.value() * (2.0 * h) / T;
  return {est, std::abs(est - est_half) / 3.0};
}

struct SigmaStarRow {
  double sigma;
  double quad_mean;   // (1/2T) int_{-T}^{T} |phi(sigma+it)|^2 dt
  double series_sum;  // truncated sum |a(m)|^2 m^{-2 sigma}
  double tail_bound;
  bool within;
};

struct SigmaStarEstimate {
  double sigma;  // NaN when no grid point qualifies
  bool heuristic = true;
  std::vector<SigmaStarRow> rows;
};

// Empirical: smallest grid sigma whose two-sided mean square is within 20%
// of the coefficient sum.  A finite-T diagnostic, never a proof.
inline SigmaStarEstimate sigma_star_diagnostic(const MatsumotoSpec& spec,
                                               std::vector<double> sigma_grid, double T) {
  const auto& w = strip_weights(spec);
  if (sigma_grid.empty()) throw ConfigError("sigma grid must be nonempty");
  std::sort(sigma_grid.begin(), sigma_grid.end());
  for (double s : sigma_grid)
    if (!(s > 0.5)) throw PreconditionError("sigma grid values must exceed 1/2");

  bool real_coeffs = true;
  double w_max = 0.0;
  for (const Complex& c : w) {
    if (c.imag() != 0.0) real_coeffs = false;
    w_max = std::max(w_max, std::abs(c));
  }

  const double spacing = 0.1;
  const int n = std::max(100, static_cast<int>(std::ceil(T / spacing)));
  const double h = T / n;
  const long m_series = 20000;

  SigmaStarEstimate est;
  est.sigma = std::numeric_limits<double>::quiet_NaN();
  for (double sigma : sigma_grid) {
    PeriodicSeriesFamily fam =
        strip_family(spec, {Complex(sigma, 0.0)}, T, std::min(1e-6, 1e-3 / (T + 1)));
    Complex val[1];
    auto one_sided = [&](double sign) {
      KahanSum acc;
      for (int i = 0; i <= n; ++i) {
        fam.eval_shift(sign * i * h, std::span<Complex>(val, 1));
        const double fi = std::norm(val[0]);
        acc.add((i == 0 || i == n) ? 0.5 * fi : fi);
      }
      return acc.value() * h;
    };
    double integral = one_sided(1.0);
    integral += real_coeffs ? integral : one_sided(-1.0);
    const double quad_mean = integral / (2.0 * T);

    KahanSum series;
    for (long m = 1; m <= m_series; ++m) {
      const Complex a = spec.pattern_coefficient(m);
      if (a != 0.0) series.add(std::norm(a) * std::pow(static_cast<double>(m), -2.0 * sigma));
    }
    const double tail =
        w_max * w_max * std::pow(static_cast<double>(m_series), 1.0 - 2.0 * sigma) /
        (2.0 * sigma - 1.0);
    const double s_sum = series.value();
    const bool within = std::abs(quad_mean - s_sum) <= 0.2 * s_sum + tail;
    est.rows.push_back({sigma, quad_mean, s_sum, tail, within});
    if (within && std::isnan(est.sigma)) est.sigma = sigma;
  }
  return est;
}

struct GrowthSlope {
  double slope;  // least-squares exponent of |phi(sigma0+it)| over |t| in [10, 1000]
  std::vector<std::pair<double, double>> samples;  // (t, |phi|)
};

inline GrowthSlope growth_slope_audit(const MatsumotoSpec& spec, double sigma0,
                                      int n_samples = 25) {
  const double t_lo = 10.0, t_hi = 1000.0;
  PeriodicSeriesFamily fam = strip_family(spec, {Complex(sigma0, 0.0)}, t_hi, 1e-8);
  GrowthSlope out;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  Complex val[1];
  for (int i = 0; i < n_samples; ++i) {
    const double t = t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (n_samples - 1));
    fam.eval_shift(t, std::span<Complex>(val, 1));
    const double mag = std::max(std::abs(val[0]), 1e-300);
    out.samples.emplace_back(t, mag);
    const double x = std::log(t), y = std::log(mag);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n_samples * sxx - sx * sx;
  out.slope = (n_samples * sxy - sx * sy) / denom;
  return out;
}

// Condition audit bundle emitted by the diagnose command.
struct SteudingReport {
  std::vector<std::pair<long, double>> kappa_estimates;
  bool growth_ok = false;
  std::vector<std::pair<double, double>> mean_square_ratios;  // (T, estimate)
  std::string notes;
};

// ---------------------------------------------------------------------------
// Spec file parsing
// ---------------------------------------------------------------------------

inline void MatsumotoSpec::finish_validate() {
  if (!(alpha0 >= 0.0) || !(beta0 >= 0.0))
    throw ConfigError("alpha0 and beta0 must be nonnegative");
  if (!(c1 > 0.0)) throw ConfigError("C1 must be positive");
  if (declared_sigma_star) {
    const double ss = *declared_sigma_star;
    if (!(ss >= 0.5) || !(ss < 1.0))
      throw ConfigError("declared sigma_star must lie in [1/2, 1)");
  }
  if (rule == Rule::dirichlet_character) {
    if (modulus < 1) throw ConfigError("character modulus must be >= 1");
    if (static_cast<int>(character.size()) != modulus)
      throw ConfigError("character needs exactly q = " + std::to_string(modulus) + " values");
  }
  if (rule == Rule::table) {
    const std::vector<long> primes = first_primes(static_cast<int>(table.size()));
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i].index != static_cast<int>(i) + 1)
        throw ConfigError("table factors must be listed for m = 1,2,... in order");
      if (table[i].prime != primes[i])
        throw ConfigError("factor m=" + std::to_string(i + 1) + " declares p=" +
                          std::to_string(table[i].prime) + " but the " +
                          std::to_string(i + 1) + "-th prime is " + std::to_string(primes[i]));
      if (table[i].terms.empty())
        throw ConfigError("factor m=" + std::to_string(i + 1) + " needs at least one term");
    }
  }
  if (combination) {
    const auto& comb = *combination;
    if (comb.period < 1 ||
        static_cast<int>(comb.coeffs.size()) != comb.period)
      throw ConfigError("hurwitz-combination needs q coefficients for period q");
    bool all_zero = true;
    for (const Complex& a : comb.coeffs)
      if (a != 0.0) all_zero = false;
    // Round-trip check: the declared periodic pattern must reproduce the
    // shifted Dirichlet coefficients of the Euler product.  The all-zero
    // pattern is the degenerate diagnostic member and is accepted as-is.
    if (!all_zero) {
      const long kmax = std::max<long>(64, 8L * comb.period);
      const DirichletCoefficients dc = dirichlet_coefficients(*this, kmax);
      for (long k = 1; k <= kmax; ++k) {
        if (std::abs(dc.at(k) - pattern_coefficient(k)) > 1e-9)
          throw ConfigError(
              "hurwitz-combination pattern does not match the Euler-product "
              "coefficients (first mismatch at k=" + std::to_string(k) + ")");
      }
    }
  }
}

inline MatsumotoSpec MatsumotoSpec::parse(const TextDoc& doc) {
  const std::string S = "matsumoto";
  if (!doc.has(S, "rule")) throw ConfigError("spec file needs [matsumoto] rule = ...");
  const std::string rule = doc.get(S, "rule");

  // structural constraint: a single pole at s = 1 is the only supported shape
  for (const auto& tok : split_list(doc.get_or(S, "poles", "1"))) {
    const Complex p = parse_complex(tok);
    if (std::abs(p - 1.0) > 1e-12)
      throw SpecStructureError(
          "unsupported pole at s=" + fmt_complex(p) +
          ": only the single pole at s=1 is supported; multi-pole members are rejected");
  }

  MatsumotoSpec s;
  if (rule == "riemann") {
    s = riemann_spec();
  } else if (rule == "dirichlet-character") {
    const int q = static_cast<int>(parse_long(doc.get(S, "modulus")));
    s = character_spec(q, parse_complex_list(doc.get(S, "character")));
  } else if (rule == "zero") {
    s = zero_spec();
  } else if (rule == "table") {
    std::vector<EulerFactor> factors;
    for (const std::string& line : doc.get_all(S, "factor")) {
      const std::vector<std::string> tok = split_list(line);
      if (tok.size() < 3)
        throw ConfigError("factor line needs: m p f:re:im [f:re:im ...]");
      EulerFactor f;
      f.index = static_cast<int>(parse_long(tok[0]));
      f.prime = parse_long(tok[1]);
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const std::string& t = tok[i];
        const auto c1pos = t.find(':');
        const auto c2pos = t.find(':', c1pos + 1);
        if (c1pos == std::string::npos || c2pos == std::string::npos)
          throw ConfigError("factor term must be f:re:im, got '" + t + "'");
        EulerFactor::Term term;
        term.exponent = static_cast<int>(parse_long(t.substr(0, c1pos)));
        term.coeff = Complex(parse_double(t.substr(c1pos + 1, c2pos - c1pos - 1)),
                             parse_double(t.substr(c2pos + 1)));
        f.terms.push_back(term);
      }
      factors.push_back(std::move(f));
    }
    std::optional<Combination> comb;
    const std::string strategy = doc.get_or(S, "strategy", "euler-product-only");
    if (strategy == "hurwitz-combination") {
      Combination c;
      c.period = static_cast<int>(parse_long(doc.get(S, "period")));
      c.coeffs = parse_complex_list(doc.get(S, "coefficients"));
      comb = std::move(c);
    } else if (strategy != "euler-product-only") {
      throw ConfigError("unknown strategy '" + strategy + "'");
    }
    std::optional<double> ss;
    if (doc.has(S, "sigma_star")) ss = parse_double(doc.get(S, "sigma_star"));
    s = table_spec(std::move(factors), parse_double(doc.get_or(S, "alpha0", "0")),
                   parse_double(doc.get_or(S, "beta0", "0")),
                   parse_double(doc.get_or(S, "c1", "1")), std::move(comb), ss);
  } else {
    throw ConfigError("unknown rule '" + rule + "'");
  }

  if (rule != "table") {
    if (doc.has(S, "alpha0")) s.alpha0 = parse_double(doc.get(S, "alpha0"));
    if (doc.has(S, "beta0")) s.beta0 = parse_double(doc.get(S, "beta0"));
    if (doc.has(S, "c1")) s.c1 = parse_double(doc.get(S, "c1"));
    if (doc.has(S, "sigma_star")) s.declared_sigma_star = parse_double(doc.get(S, "sigma_star"));
    s.finish_validate();
  }
  if (doc.has(S, "name")) s.name = doc.get(S, "name");
  return s;
}

}  // namespace zetalab

#endif  // ZETALAB_MATSUMOTO_HPP
