#ifndef ZETALAB_TARGET_HPP
#define ZETALAB_TARGET_HPP

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "zetalab/compact.hpp"
#include "zetalab/core.hpp"

// Approximation targets on compact sets: polynomials, exponentials of
// polynomials (never vanishing, the admissible first-component targets), and
// constants.  The least-squares fit plays the Mergelyan role: it only has to
// produce SOME polynomial close to the samples, and reports the residual it
// achieved.

namespace zetalab {

inline constexpr double kNormalConditionLimit = 1e12;

class TargetFunction {
 public:
  enum class Kind { polynomial, exp_polynomial, constant };

  static TargetFunction polynomial(std::vector<Complex> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    return TargetFunction(Kind::polynomial, std::move(coeffs));
  }
  static TargetFunction exp_polynomial(std::vector<Complex> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    return TargetFunction(Kind::exp_polynomial, std::move(coeffs));
  }
  static TargetFunction constant(Complex c) { return TargetFunction(Kind::constant, {c}); }

  Kind kind() const { return kind_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  Complex operator()(Complex s) const {
    switch (kind_) {
      case Kind::constant:
        return coeffs_[0];
      case Kind::polynomial:
        return horner(s);
      case Kind::exp_polynomial:
        return std::exp(horner(s));
    }
    return 0.0;
  }

  // Numerical H_0^c check: exp-polynomials cannot vanish; constants vanish
  // iff zero; polynomials are checked for roots inside (or touching) K.
  bool nonvanishing_on(const CompactSet& k) const {
    switch (kind_) {
      case Kind::exp_polynomial:
        return true;
      case Kind::constant:
        return coeffs_[0] != 0.0;
      case Kind::polynomial: {
        for (const Complex& root : roots())
          if (k.contains(root, 1e-9)) return false;
        return true;
      }
    }
    return false;
  }

  // polynomial roots via the companion matrix (empty for degree 0)
  std::vector<Complex> roots() const {
    int deg = static_cast<int>(coeffs_.size()) - 1;
    while (deg > 0 && coeffs_[deg] == 0.0) --deg;
    std::vector<Complex> out;
    if (deg == 0) {
      if (coeffs_[0] == 0.0) out.push_back(0.0);  // identically zero: flag via origin
      return out;
    }
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs_[i] / coeffs_[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (int i = 0; i < deg; ++i) out.push_back(es.eigenvalues()(i));
    return out;
  }

 private:
  TargetFunction(Kind kind, std::vector<Complex> coeffs)
      : kind_(kind), coeffs_(std::move(coeffs)) {
    for (const Complex& c : coeffs_) require_finite(c, "target coefficient");
  }

  Complex horner(Complex s) const {
    Complex v = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) v = v * s + coeffs_[i];
    return v;
  }

  Kind kind_;
  std::vector<Complex> coeffs_;
};

inline TargetFunction exp_polynomial_target(std::vector<Complex> p_coeffs) {
  return TargetFunction::exp_polynomial(std::move(p_coeffs));
}

// max_i |g(s_i) - f(s_i)| over the grid: a lower bound for the true sup norm,
// reported alongside the mesh so callers can budget the discretization error.
inline double sup_distance(const std::function<Complex(Complex)>& g, const TargetFunction& f,
                           const SampleGrid& grid) {
  double best = 0.0;
  for (const Complex& s : grid.boundary) best = std::max(best, std::abs(g(s) - f(s)));
  for (const Complex& s : grid.interior) best = std::max(best, std::abs(g(s) - f(s)));
  return best;
}

struct PolynomialFit {
  TargetFunction target;
  double max_residual;  // achieved max |p(s_i) - v_i| on the samples
  double condition;     // condition estimate of the normal system
};

// Least-squares polynomial through weighted samples.  Columns are scaled to
// unit max before the SVD solve; the normal-system condition estimate is the
// square of the scaled Vandermonde's spectral condition number.
inline PolynomialFit polynomial_target(std::span<const std::pair<Complex, Complex>> samples,
                                       int degree) {
  if (degree < 0) throw ConfigError("degree must be nonnegative");
  const int n = static_cast<int>(samples.size());
  if (n < degree + 1)
    throw ConfigError("need at least degree+1 samples, got " + std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (samples[i].first == samples[j].first)
        throw ConfigError("sample points must be pairwise distinct (duplicate at " +
                          fmt_complex(samples[i].first) + ")");

  const int cols = degree + 1;
  Eigen::MatrixXcd v(n, cols);
  Eigen::VectorXcd rhs(n);
  for (int i = 0; i < n; ++i) {
    Complex pw = 1.0;
    for (int j = 0; j < cols; ++j) {
      v(i, j) = pw;
      pw *= samples[i].first;
    }
    rhs(i) = samples[i].second;
  }

  Eigen::VectorXd scale(cols);
  for (int j = 0; j < cols; ++j) {
    double m = v.col(j).cwiseAbs().maxCoeff();
    scale(j) = (m > 0.0) ? m : 1.0;
    v.col(j) /= scale(j);
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(cols - 1);
  const double cond_v = (smin > 0.0) ? smax / smin : HUGE_VAL;
  const double cond_normal = cond_v * cond_v;
  if (cond_normal > kNormalConditionLimit)
    throw IllConditionedError("least-squares normal system condition " + fmt17(cond_normal) +
                                  " exceeds limit " + fmt17(kNormalConditionLimit),
                              cond_normal);

  Eigen::VectorXcd y = svd.solve(rhs);
  std::vector<Complex> coeffs(cols);
  for (int j = 0; j < cols; ++j) coeffs[j] = y(j) / scale(j);

  TargetFunction target = TargetFunction::polynomial(std::move(coeffs));
  double resid = 0.0;
  for (int i = 0; i < n; ++i)
    resid = std::max(resid, std::abs(target(samples[i].first) - samples[i].second));
  return {std::move(target), resid, cond_normal};
}

}  // namespace zetalab

#endif  // ZETALAB_TARGET_HPP
