#ifndef ZETALAB_BERNOULLI_HPP
#define ZETALAB_BERNOULLI_HPP

#include <array>
#include <cmath>

namespace zetalab {

inline constexpr int kMaxBernoulliOrder = 32;  // table covers B_2 .. B_64

// Ratios B_{2j}/(2j)!, j = 1..kMaxBernoulliOrder (index 0 unused).
// The first six are exact rationals; the rest come from
// B_{2j}/(2j)! = 2*(-1)^{j+1} * zeta(2j) / (2*pi)^{2j}, where zeta(2j)
// converges to machine precision in a few dozen terms for 2j >= 14.
inline const std::array<double, kMaxBernoulliOrder + 1>& bernoulli_ratios() {
  static const std::array<double, kMaxBernoulliOrder + 1> table = [] {
    std::array<double, kMaxBernoulliOrder + 1> t{};
    t[1] = 1.0 / 12.0;
    t[2] = -1.0 / 720.0;
    t[3] = 1.0 / 30240.0;
    t[4] = -1.0 / 1209600.0;
    t[5] = 1.0 / 47900160.0;
    t[6] = -691.0 / 1307674368000.0;
    const double two_pi = 2.0 * M_PI;
    for (int j = 7; j <= kMaxBernoulliOrder; ++j) {
      double z = 1.0;
      for (int n = 2; n <= 40; ++n) z += std::pow(double(n), -2.0 * j);
      double ratio = 2.0 * z * std::pow(two_pi, -2.0 * j);
      t[j] = (j % 2 == 1) ? ratio : -ratio;
    }
    return t;
  }();
  return table;
}

// Upper bound for zeta(2J+1), J >= 1, used in the tail remainder bound.
inline constexpr double kZetaOddBound = 1.2020569031595943;

}  // namespace zetalab

#endif  // ZETALAB_BERNOULLI_HPP
