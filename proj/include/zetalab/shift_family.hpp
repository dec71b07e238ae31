#ifndef ZETALAB_SHIFT_FAMILY_HPP
#define ZETALAB_SHIFT_FAMILY_HPP

#include <span>
#include <vector>

#include "zetalab/zeta.hpp"

// Batched evaluation of one periodic Dirichlet series at a fixed set of grid
// points under vertical shifts: out[i] = f(grid[i] + i*tau).
//
// The main Euler-Maclaurin sum factors as
//     (m+alpha)^{-(s+i tau)} = [(m+alpha)^{-s}] * e^{-i tau log(m+alpha)},
// so the s-dependent parts are precomputed per grid point and each shift
// costs one phase table (shared by all grid points) plus one dot product per
// point.  The continuation terms are cheap and evaluated exactly per shift.
//
// Truncation parameters are planned once for the worst case over the grid
// rectangle and |tau| <= tau_abs_max, so every evaluation meets abs_tol.

namespace zetalab {

class PeriodicSeriesFamily {
 public:
  PeriodicSeriesFamily(std::vector<Complex> weights, double alpha,
                       std::vector<Complex> grid, double tau_abs_max,
                       double abs_tol, long max_terms = 64'000'000)
      : weights_(std::move(weights)),
        alpha_(alpha),
        grid_(std::move(grid)),
        tau_abs_max_(tau_abs_max),
        abs_tol_(abs_tol) {
    if (weights_.empty()) throw ConfigError("family needs a nonempty weight pattern");
    if (grid_.empty()) throw ConfigError("family needs a nonempty grid");
    HurwitzParameter::check(alpha_);
    if (!(tau_abs_max_ >= 0.0)) throw ConfigError("tau_abs_max must be nonnegative");

    k_ = static_cast<int>(weights_.size());
    mean_ = weight_residue(weights_);

    double sigma_lo = grid_[0].real(), sigma_hi = grid_[0].real(), t_im = 0.0;
    for (const Complex& s : grid_) {
      require_finite(s, "grid point");
      sigma_lo = std::min(sigma_lo, s.real());
      sigma_hi = std::max(sigma_hi, s.real());
      t_im = std::max(t_im, std::abs(s.imag()));
    }

    betas_.resize(k_);
    for (int r = 0; r < k_; ++r) betas_[r] = (r + alpha_) / k_;

    double wsum = 0.0;
    for (const Complex& w : weights_) wsum += std::abs(w);
    if (wsum == 0.0) {
      n_main_ = 0;
      n_bern_ = 0;
      return;
    }

    const EmPlan plan =
        plan_euler_maclaurin(sigma_lo, sigma_hi, t_im + tau_abs_max_, betas_[0], wsum, k_,
                             abs_tol_, max_terms);
    n_main_ = plan.n_main;
    n_bern_ = plan.n_bernoulli;

    const long m_total = n_main_ * k_;
    for (long m = 0; m < m_total; ++m)
      if (weights_[m % k_] != 0.0) {
        active_m_.push_back(m);
        logs_.push_back(std::log(static_cast<double>(m) + alpha_));
      }
    const std::size_t a_count = active_m_.size();
    coef_.resize(a_count * grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      const Complex s = grid_[i];
      for (std::size_t a = 0; a < a_count; ++a)
        coef_[i * a_count + a] = weights_[active_m_[a] % k_] * std::exp(-s * logs_[a]);
    }
  }

  std::size_t grid_size() const { return grid_.size(); }
  const std::vector<Complex>& grid() const { return grid_; }
  double abs_tol() const { return abs_tol_; }
  double tau_abs_max() const { return tau_abs_max_; }
  Complex weight_mean() const { return mean_; }

  void eval_shift(double tau, std::span<Complex> out) const {
    if (out.size() != grid_.size())
      throw ConfigError("eval_shift: output span size mismatch");
    if (std::abs(tau) > tau_abs_max_ * (1.0 + 1e-12) + 1e-12)
      throw PreconditionError("shift tau=" + fmt17(tau) +
                              " exceeds the planned range " + fmt17(tau_abs_max_));
    if (n_main_ == 0) {  // all-zero weights
      for (auto& v : out) v = 0.0;
      return;
    }

    const std::size_t a_count = active_m_.size();
    static thread_local std::vector<Complex> phase;
    phase.resize(a_count);
    for (std::size_t a = 0; a < a_count; ++a)
      phase[a] = std::polar(1.0, -tau * logs_[a]);

    for (std::size_t i = 0; i < grid_.size(); ++i) {
      const Complex z = grid_[i] + Complex(0.0, tau);
      if (mean_ != 0.0 && std::abs(z - 1.0) < kPoleExclusionRadius)
        throw PoleAtOneError("pole at s=1 reached at tau=" + fmt17(tau));

      const Complex* c = coef_.data() + i * a_count;
      double acc_re = 0.0, acc_im = 0.0;
      for (std::size_t a = 0; a < a_count; ++a) {
        const Complex p = phase[a];
        acc_re += c[a].real() * p.real() - c[a].imag() * p.imag();
        acc_im += c[a].real() * p.imag() + c[a].imag() * p.real();
      }
      out[i] = Complex(acc_re, acc_im) +
               em_tail(z, weights_, betas_, n_main_, n_bern_, k_, mean_);
    }
  }

  std::vector<Complex> eval_shift(double tau) const {
    std::vector<Complex> out(grid_.size());
    eval_shift(tau, out);
    return out;
  }

 private:
  std::vector<Complex> weights_;
  double alpha_;
  std::vector<Complex> grid_;
  double tau_abs_max_;
  double abs_tol_;
  int k_ = 1;
  Complex mean_;
  long n_main_ = 0;
  int n_bern_ = 0;
  std::vector<double> betas_;
  std::vector<long> active_m_;
  std::vector<double> logs_;
  std::vector<Complex> coef_;
};

}  // namespace zetalab

#endif  // ZETALAB_SHIFT_FAMILY_HPP
