#ifndef ZETALAB_COMPACT_HPP
#define ZETALAB_COMPACT_HPP

#include <cmath>
#include <string>
#include <vector>

#include "zetalab/core.hpp"

// Compact subsets of vertical strips D(a,b) = {a < sigma < b}.  The shape
// whitelist (closed disk, closed axis-aligned rectangle, horizontal segment)
// guarantees a connected complement without any topology machinery.

namespace zetalab {

class CompactSet {
 public:
  enum class Shape { disk, rectangle, segment };

  static CompactSet disk(Complex center, double radius, double strip_lo, double strip_hi) {
    require_finite(center, "disk center");
    if (!(radius >= 0.0)) throw ConfigError("disk radius must be nonnegative");
    CompactSet k;
    k.shape_ = Shape::disk;
    k.center_ = center;
    k.radius_ = radius;
    k.sigma_lo_ = center.real() - radius;
    k.sigma_hi_ = center.real() + radius;
    k.t_lo_ = center.imag() - radius;
    k.t_hi_ = center.imag() + radius;
    k.set_strip(strip_lo, strip_hi);
    return k;
  }

  static CompactSet rectangle(Complex c1, Complex c2, double strip_lo, double strip_hi) {
    require_finite(c1, "rectangle corner");
    require_finite(c2, "rectangle corner");
    CompactSet k;
    k.shape_ = Shape::rectangle;
    k.sigma_lo_ = std::min(c1.real(), c2.real());
    k.sigma_hi_ = std::max(c1.real(), c2.real());
    k.t_lo_ = std::min(c1.imag(), c2.imag());
    k.t_hi_ = std::max(c1.imag(), c2.imag());
    k.set_strip(strip_lo, strip_hi);
    return k;
  }

  static CompactSet segment(double sigma_lo, double sigma_hi, double t, double strip_lo,
                            double strip_hi) {
    if (!(sigma_lo <= sigma_hi)) throw ConfigError("segment needs sigma_lo <= sigma_hi");
    CompactSet k;
    k.shape_ = Shape::segment;
    k.sigma_lo_ = sigma_lo;
    k.sigma_hi_ = sigma_hi;
    k.t_lo_ = k.t_hi_ = t;
    k.set_strip(strip_lo, strip_hi);
    return k;
  }

  Shape shape() const { return shape_; }
  Complex center() const { return center_; }
  double radius() const { return radius_; }
  double sigma_lo() const { return sigma_lo_; }
  double sigma_hi() const { return sigma_hi_; }
  double t_lo() const { return t_lo_; }
  double t_hi() const { return t_hi_; }
  double strip_lo() const { return strip_lo_; }
  double strip_hi() const { return strip_hi_; }

  bool contains(Complex z, double margin = 0.0) const {
    switch (shape_) {
      case Shape::disk:
        return std::abs(z - center_) <= radius_ + margin;
      case Shape::rectangle:
        return z.real() >= sigma_lo_ - margin && z.real() <= sigma_hi_ + margin &&
               z.imag() >= t_lo_ - margin && z.imag() <= t_hi_ + margin;
      case Shape::segment:
        return z.real() >= sigma_lo_ - margin && z.real() <= sigma_hi_ + margin &&
               std::abs(z.imag() - t_lo_) <= margin;
    }
    return false;
  }

  std::string describe() const {
    switch (shape_) {
      case Shape::disk:
        return "disk(center=" + fmt_complex(center_) + ", r=" + fmt17(radius_) + ")";
      case Shape::rectangle:
        return "rectangle([" + fmt17(sigma_lo_) + "," + fmt17(sigma_hi_) + "]x[" +
               fmt17(t_lo_) + "," + fmt17(t_hi_) + "])";
      case Shape::segment:
        return "segment([" + fmt17(sigma_lo_) + "," + fmt17(sigma_hi_) + "] at t=" +
               fmt17(t_lo_) + ")";
    }
    return "?";
  }

 private:
  void set_strip(double lo, double hi) {
    if (!(lo < hi)) throw ConfigError("strip needs a < b");
    strip_lo_ = lo;
    strip_hi_ = hi;
    if (!(sigma_lo_ > lo && sigma_hi_ < hi))
      throw PreconditionError("compact set " + describe() +
                              " not contained in the open strip D(" + fmt17(lo) + "," +
                              fmt17(hi) + ")");
  }

  Shape shape_ = Shape::disk;
  Complex center_;
  double radius_ = 0.0;
  double sigma_lo_ = 0.0, sigma_hi_ = 0.0, t_lo_ = 0.0, t_hi_ = 0.0;
  double strip_lo_ = 0.0, strip_hi_ = 1.0;
};

// Re-check a compact against a strip chosen later (e.g. D(sigma*, 1) once
// sigma* is known).  Throws naming the violated hypothesis.
inline void require_in_strip(const CompactSet& k, double a, double b, const std::string& role) {
  if (!(k.sigma_lo() > a && k.sigma_hi() < b))
    throw PreconditionError(role + " " + k.describe() + " must be a compact subset of D(" +
                            fmt17(a) + "," + fmt17(b) + ")");
}

struct SampleGrid {
  std::vector<Complex> boundary;
  std::vector<Complex> interior;
  double mesh = 0.0;
  // For |g - f| with both holomorphic on K the sup over K is attained on the
  // boundary, so the boundary subset suffices.
  bool boundary_sufficient = false;

  std::vector<Complex> all() const {
    std::vector<Complex> out = boundary;
    out.insert(out.end(), interior.begin(), interior.end());
    return out;
  }
};

inline constexpr long kMaxGridPoints = 2'000'000;

inline SampleGrid sample_points(const CompactSet& k, double mesh) {
  if (!(mesh > 0.0)) throw ConfigError("mesh must be positive");
  SampleGrid grid;
  grid.mesh = mesh;

  auto guard = [&](double estimate) {
    if (estimate > static_cast<double>(kMaxGridPoints))
      throw MeshTooFineError("grid for " + k.describe() + " at mesh " + fmt17(mesh) +
                             " would exceed " + std::to_string(kMaxGridPoints) + " points");
  };

  switch (k.shape()) {
    case CompactSet::Shape::disk: {
      const Complex c = k.center();
      const double r = k.radius();
      if (r == 0.0) {
        grid.boundary.push_back(c);
        grid.boundary_sufficient = true;
        return grid;
      }
      const long nb = std::max<long>(8, static_cast<long>(std::ceil(2.0 * M_PI * r / mesh)));
      const double span = 2.0 * r / mesh + 2.0;
      guard(static_cast<double>(nb) + span * span);
      for (long i = 0; i < nb; ++i) {
        const double th = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(nb);
        grid.boundary.push_back(c + Complex(r * std::cos(th), r * std::sin(th)));
      }
      const long m = static_cast<long>(std::floor(r / mesh));
      for (long i = -m; i <= m; ++i)
        for (long j = -m; j <= m; ++j) {
          const Complex z = c + Complex(i * mesh, j * mesh);
          if (std::abs(z - c) < r) grid.interior.push_back(z);
        }
      grid.boundary_sufficient = true;
      return grid;
    }
    case CompactSet::Shape::rectangle: {
      const double slo = k.sigma_lo(), shi = k.sigma_hi();
      const double tlo = k.t_lo(), thi = k.t_hi();
      const double w = shi - slo, h = thi - tlo;
      if (w == 0.0 && h == 0.0) {
        grid.boundary.push_back(Complex(slo, tlo));
        grid.boundary_sufficient = true;
        return grid;
      }
      const long nw = std::max<long>(1, static_cast<long>(std::ceil(w / mesh)));
      const long nh = std::max<long>(1, static_cast<long>(std::ceil(h / mesh)));
      guard(static_cast<double>(nw + 1) * static_cast<double>(nh + 1) + 2.0 * (nw + nh));
      auto sig = [&](long i) { return slo + w * static_cast<double>(i) / nw; };
      auto tt = [&](long j) { return tlo + h * static_cast<double>(j) / nh; };
      // top and bottom edges carry all four corners exactly
      for (long i = 0; i <= nw; ++i) {
        grid.boundary.push_back(Complex(sig(i), tlo));
        if (h > 0.0) grid.boundary.push_back(Complex(sig(i), thi));
      }
      if (h > 0.0 && w > 0.0)
        for (long j = 1; j < nh; ++j) {
          grid.boundary.push_back(Complex(slo, tt(j)));
          grid.boundary.push_back(Complex(shi, tt(j)));
        }
      if (h > 0.0 && w > 0.0)
        for (long i = 1; i < nw; ++i)
          for (long j = 1; j < nh; ++j) grid.interior.push_back(Complex(sig(i), tt(j)));
      grid.boundary_sufficient = (w > 0.0 && h > 0.0);
      return grid;
    }
    case CompactSet::Shape::segment: {
      const double slo = k.sigma_lo(), shi = k.sigma_hi(), t = k.t_lo();
      const double w = shi - slo;
      const long n = std::max<long>(1, static_cast<long>(std::ceil(w / mesh)));
      guard(static_cast<double>(n + 1));
      for (long i = 0; i <= n; ++i)
        grid.boundary.push_back(Complex(slo + w * static_cast<double>(i) / n, t));
      if (w == 0.0) grid.boundary.resize(1);
      // a segment has empty interior in C: every sample matters
      grid.boundary_sufficient = false;
      return grid;
    }
  }
  throw ConfigError("unknown shape");
}

}  // namespace zetalab

#endif  // ZETALAB_COMPACT_HPP
