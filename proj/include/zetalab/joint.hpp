#ifndef ZETALAB_JOINT_HPP
#define ZETALAB_JOINT_HPP

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <numeric>

#include "zetalab/scan.hpp"
#include "zetalab/zeta.hpp"

// The several-parameter generalization: r Hurwitz parameters alpha_j, l(j)
// periodic sequences each, a rank condition on the per-parameter coefficient
// matrices, and a joint scan over lambda+1 simultaneous sup-distance
// constraints under one shared epsilon.

namespace zetalab {

struct JointComponent {
  HurwitzParameter alpha;                   // 0 < alpha < 1 (strict here)
  std::vector<PeriodicSequence> sequences;  // B_{j,1} .. B_{j,l(j)}
};

class JointSpec {
 public:
  explicit JointSpec(std::vector<JointComponent> components)
      : components_(std::move(components)) {
    if (components_.empty()) throw ConfigError("JointSpec needs r >= 1 components");
    for (const auto& c : components_) {
      if (!(c.alpha.alpha > 0.0 && c.alpha.alpha < 1.0))
        throw ConfigError("joint parameters need 0 < alpha < 1");
      if (c.sequences.empty())
        throw ConfigError("each joint component needs l(j) >= 1 sequences");
    }
  }

  int r() const { return static_cast<int>(components_.size()); }
  int l(int j) const { return static_cast<int>(components_[j - 1].sequences.size()); }
  int lambda() const {
    int sum = 0;
    for (const auto& c : components_) sum += static_cast<int>(c.sequences.size());
    return sum;
  }
  long k(int j) const {  // least common multiple of the component's periods
    long acc = 1;
    for (const auto& seq : components_[j - 1].sequences)
      acc = std::lcm(acc, static_cast<long>(seq.period()));
    return acc;
  }
  const JointComponent& component(int j) const { return components_[j - 1]; }

 private:
  std::vector<JointComponent> components_;
};

struct CoefficientMatrix {
  long rows = 0;
  int cols = 0;
  std::vector<Complex> entries;  // row-major

  Complex at(long row, int col) const { return entries[row * cols + col]; }
};

// k_j x l(j); column l repeats B_{j,l} cyclically
inline CoefficientMatrix build_matrix(const JointSpec& spec, int j) {
  if (j < 1 || j > spec.r()) throw ConfigError("component index out of range");
  const auto& comp = spec.component(j);
  CoefficientMatrix m;
  m.rows = spec.k(j);
  m.cols = static_cast<int>(comp.sequences.size());
  m.entries.resize(m.rows * m.cols);
  for (long row = 0; row < m.rows; ++row)
    for (int col = 0; col < m.cols; ++col)
      m.entries[row * m.cols + col] = comp.sequences[col].value_at(row);
  return m;
}

// ---------------------------------------------------------------------------
// Rank
// ---------------------------------------------------------------------------

namespace detail {

struct GaussInt {
  __int128 re = 0, im = 0;
};

inline GaussInt gi_sub_mul(const GaussInt& a, const GaussInt& b, const GaussInt& c,
                           const GaussInt& d, bool& overflow) {
  // a*b - c*d with a magnitude guard before each product
  const __int128 lim = static_cast<__int128>(1) << 62;
  auto big = [&](const GaussInt& g) {
    return g.re > lim || g.re < -lim || g.im > lim || g.im < -lim;
  };
  if (big(a) || big(b) || big(c) || big(d)) {
    overflow = true;
    return {};
  }
  GaussInt out;
  out.re = (a.re * b.re - a.im * b.im) - (c.re * d.re - c.im * d.im);
  out.im = (a.re * b.im + a.im * b.re) - (c.re * d.im + c.im * d.re);
  return out;
}

inline bool gi_divide_exact(const GaussInt& num, const GaussInt& den, GaussInt& out) {
  const __int128 n = den.re * den.re + den.im * den.im;
  if (n == 0) return false;
  const __int128 re = num.re * den.re + num.im * den.im;
  const __int128 im = num.im * den.re - num.re * den.im;
  if (re % n != 0 || im % n != 0) return false;
  out = {re / n, im / n};
  return true;
}

// Fraction-free (Bareiss) elimination over the Gaussian integers; exact rank
// for integer-valued matrices.  Returns -1 when intermediate growth would
// overflow, in which case the caller falls back to the SVD.
inline int bareiss_rank(const CoefficientMatrix& m) {
  const long rows = m.rows;
  const int cols = m.cols;
  std::vector<GaussInt> a(rows * cols);
  for (long i = 0; i < rows * cols; ++i)
    a[i] = {static_cast<__int128>(static_cast<long long>(m.entries[i].real())),
            static_cast<__int128>(static_cast<long long>(m.entries[i].imag()))};

  auto at = [&](long r, int c) -> GaussInt& { return a[r * cols + c]; };
  GaussInt prev{1, 0};
  long pivot_row = 0;
  int rank = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    long sel = -1;
    for (long r = pivot_row; r < rows; ++r)
      if (at(r, col).re != 0 || at(r, col).im != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int c = 0; c < cols; ++c) std::swap(at(sel, c), at(pivot_row, c));
    const GaussInt pivot = at(pivot_row, col);
    for (long r = pivot_row + 1; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if (c == col) continue;
        bool overflow = false;
        GaussInt num = gi_sub_mul(pivot, at(r, c), at(r, col), at(pivot_row, c), overflow);
        if (overflow) return -1;
        GaussInt q;
        if (!gi_divide_exact(num, prev, q)) return -1;
        at(r, c) = q;
      }
      at(r, col) = {0, 0};
    }
    prev = pivot;
    ++pivot_row;
    ++rank;
  }
  return rank;
}

inline bool integer_valued(const CoefficientMatrix& m) {
  for (const Complex& z : m.entries) {
    if (z.real() != std::floor(z.real()) || z.imag() != std::floor(z.imag())) return false;
    if (std::abs(z.real()) > 1e12 || std::abs(z.imag()) > 1e12) return false;
  }
  return true;
}

}  // namespace detail

// Singular values above tol * (largest singular value).  Integer matrices are
// additionally resolved by exact elimination, which wins on disagreement.
inline int numerical_rank(const CoefficientMatrix& m, double tol = 1e-10) {
  if (!(tol > 0.0)) throw ConfigError("rank tolerance must be positive");
  if (m.rows == 0 || m.cols == 0) throw ConfigError("rank of an empty matrix");
  double max_entry = 0.0;
  for (const Complex& z : m.entries) max_entry = std::max(max_entry, std::abs(z));
  if (max_entry < 1e-300)
    throw DegenerateMatrixError("all matrix entries below the underflow guard");

  if (detail::integer_valued(m)) {
    const int exact = detail::bareiss_rank(m);
    if (exact >= 0) return exact;
  }

  Eigen::MatrixXcd em(m.rows, m.cols);
  for (long r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) em(r, c) = m.at(r, c);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(em);
  const auto& sv = svd.singularValues();
  const double cut = tol * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  return rank;
}

inline void require_full_rank(const JointSpec& spec, double tol = 1e-10) {
  std::string offenders;
  for (int j = 1; j <= spec.r(); ++j) {
    const CoefficientMatrix m = build_matrix(spec, j);
    if (numerical_rank(m, tol) != spec.l(j))
      offenders += (offenders.empty() ? "j=" : ", j=") + std::to_string(j);
  }
  if (!offenders.empty())
    throw RankPreconditionError("rank(B_j) = l(j) fails for " + offenders);
}

// ---------------------------------------------------------------------------
// Joint scanning
// ---------------------------------------------------------------------------

struct JointScanRecord {
  double tau;
  double d_phi;
  std::vector<double> d;  // per (j,l) in spec order

  double max_distance() const {
    double m = d_phi;
    for (double x : d) m = std::max(m, x);
    return m;
  }
};

struct JointScanResult {
  std::vector<JointScanRecord> records;

  std::vector<double> taus() const {
    std::vector<double> out(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) out[i] = records[i].tau;
    return out;
  }
  std::vector<double> max_distances() const {
    std::vector<double> out(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) out[i] = records[i].max_distance();
    return out;
  }
};

// phi_curve plus one curve per (j,l), in spec order.
inline JointScanResult joint_scan(const ShiftCurve& phi_curve,
                                  const std::vector<const ShiftCurve*>& hurwitz_curves,
                                  const JointSpec& spec, const ScanConfig& cfg,
                                  int threads = 1, double rank_tol = 1e-10) {
  if (static_cast<int>(hurwitz_curves.size()) != spec.lambda())
    throw ConfigError("need exactly lambda = " + std::to_string(spec.lambda()) +
                      " periodic-Hurwitz curves");
  require_full_rank(spec, rank_tol);

  std::vector<const ShiftCurve*> curves;
  curves.push_back(&phi_curve);
  curves.insert(curves.end(), hurwitz_curves.begin(), hurwitz_curves.end());
  const FamilyScanResult r = scan_family(curves, cfg, threads);

  JointScanResult out;
  out.records.resize(r.taus.size());
  for (std::size_t i = 0; i < r.taus.size(); ++i) {
    out.records[i].tau = r.taus[i];
    out.records[i].d_phi = r.distances[i][0];
    out.records[i].d.assign(r.distances[i].begin() + 1, r.distances[i].end());
  }
  return out;
}

inline double joint_density(const JointScanResult& result, double eps, const ScanConfig& cfg,
                            const std::function<double(double)>* refine = nullptr) {
  const std::vector<double> taus = result.taus();
  const HitIntervals hits = hit_intervals(taus, result.max_distances(), eps, cfg, refine);
  return density_estimate(hits, taus.empty() ? cfg.T : taus.back());
}

}  // namespace zetalab

#endif  // ZETALAB_JOINT_HPP
