#ifndef ZETALAB_SCAN_HPP
#define ZETALAB_SCAN_HPP

#include <functional>
#include <memory>
#include <optional>
#include <thread>
#include <vector>

#include "zetalab/compact.hpp"
#include "zetalab/shift_family.hpp"
#include "zetalab/target.hpp"

// Vertical-shift scanning: sample sup-norm approximation distances on a
// coarse tau grid, locate epsilon-threshold crossings by bisection, assemble
// the hit set as disjoint intervals, and estimate its normalized Lebesgue
// measure.  Features narrower than the coarse step are invisible; delta is
// the stated resolution limit of every result.

namespace zetalab {

struct ScanConfig {
  double T = 100.0;
  double delta = 0.05;    // coarse tau step
  int refine_depth = 20;  // bisection levels at threshold crossings
  std::vector<double> epsilon_grid;

  // The delta <= T/100 ratio is what experiment configs must satisfy; library
  // callers may scan coarser grids (strict=false) for diagnostics and tests.
  void validate(bool strict_ratio = false) const {
    if (!(T > 0.0)) throw ConfigError("ScanConfig: T must be positive");
    if (!(delta > 0.0) || delta > T)
      throw ConfigError("ScanConfig: need 0 < delta <= T");
    if (strict_ratio && delta > T / 100.0)
      throw ConfigError("ScanConfig: delta must not exceed T/100");
    if (refine_depth < 0) throw ConfigError("ScanConfig: refine_depth must be >= 0");
    for (std::size_t i = 0; i + 1 < epsilon_grid.size(); ++i)
      if (!(epsilon_grid[i] < epsilon_grid[i + 1]))
        throw ConfigError("ScanConfig: epsilon grid must be strictly increasing");
    for (double e : epsilon_grid)
      if (!(e > 0.0)) throw ConfigError("ScanConfig: epsilon values must be positive");
  }

  long record_count() const {
    return static_cast<long>(std::floor(T / delta * (1.0 + 1e-12))) + 1;
  }
};

// ---------------------------------------------------------------------------
// Sup-distance curves
// ---------------------------------------------------------------------------

class ShiftCurve {
 public:
  virtual ~ShiftCurve() = default;
  virtual double distance_at(double tau) const = 0;
  // confirmation evaluation on a 4x finer grid; defaults to the plain one
  virtual double distance_at_refined(double tau) const { return distance_at(tau); }
};

// sup over a sampled compact of |series(s+i tau) - target(s)|
class SeriesShiftCurve : public ShiftCurve {
 public:
  SeriesShiftCurve(std::vector<Complex> weights, double alpha, const CompactSet& k,
                   const TargetFunction& target, double mesh, double tau_abs_max,
                   double abs_tol, bool boundary_only = true)
      : curve_name_("series curve") {
    const SampleGrid coarse = sample_points(k, mesh);
    const SampleGrid fine = sample_points(k, mesh / 4.0);
    const bool use_boundary = boundary_only && coarse.boundary_sufficient;
    std::vector<Complex> pts = use_boundary ? coarse.boundary : coarse.all();
    std::vector<Complex> fine_pts = use_boundary ? fine.boundary : fine.all();
    targets_.reserve(pts.size());
    for (const Complex& s : pts) targets_.push_back(target(s));
    fine_targets_.reserve(fine_pts.size());
    for (const Complex& s : fine_pts) fine_targets_.push_back(target(s));
    family_.emplace(weights, alpha, std::move(pts), tau_abs_max, abs_tol);
    fine_family_.emplace(std::move(weights), alpha, std::move(fine_pts), tau_abs_max, abs_tol);
  }

  double distance_at(double tau) const override { return sup_at(*family_, targets_, tau); }
  double distance_at_refined(double tau) const override {
    return sup_at(*fine_family_, fine_targets_, tau);
  }

 private:
  static double sup_at(const PeriodicSeriesFamily& fam, const std::vector<Complex>& targets,
                       double tau) {
    static thread_local std::vector<Complex> vals;
    vals.resize(fam.grid_size());
    fam.eval_shift(tau, vals);
    double best = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i)
      best = std::max(best, std::abs(vals[i] - targets[i]));
    return best;
  }

  std::optional<PeriodicSeriesFamily> family_;
  std::optional<PeriodicSeriesFamily> fine_family_;
  std::vector<Complex> targets_;
  std::vector<Complex> fine_targets_;
  std::string curve_name_;
};

// synthetic distance families (closed-form oracles, self-tests)
class FunctionShiftCurve : public ShiftCurve {
 public:
  explicit FunctionShiftCurve(std::function<double(double)> d) : d_(std::move(d)) {}
  double distance_at(double tau) const override { return d_(tau); }

 private:
  std::function<double(double)> d_;
};

// ---------------------------------------------------------------------------
// Coarse-grid scanning
// ---------------------------------------------------------------------------

struct FamilyScanResult {
  std::vector<double> taus;
  std::vector<std::vector<double>> distances;  // [record][curve]

  double max_distance(std::size_t i) const {
    double m = 0.0;
    for (double d : distances[i]) m = std::max(m, d);
    return m;
  }
  std::vector<double> max_distances() const {
    std::vector<double> out(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i) out[i] = max_distance(i);
    return out;
  }
};

// One record per coarse grid point; deterministic for any thread count
// (records are computed independently and merged in index order).
inline FamilyScanResult scan_family(std::span<const ShiftCurve* const> curves,
                                    const ScanConfig& cfg, int threads = 1) {
  cfg.validate();
  if (curves.empty()) throw ConfigError("scan needs at least one curve");
  if (threads < 1) threads = 1;

  const long count = cfg.record_count();
  FamilyScanResult result;
  result.taus.resize(count);
  result.distances.assign(count, std::vector<double>(curves.size()));

  std::vector<std::string> errors(threads);
  auto worker = [&](int w) {
    const long chunk = (count + threads - 1) / threads;
    const long lo = w * chunk, hi = std::min<long>(count, lo + chunk);
    try {
      for (long i = lo; i < hi; ++i) {
        const double tau = static_cast<double>(i) * cfg.delta;
        result.taus[i] = tau;
        for (std::size_t c = 0; c < curves.size(); ++c)
          result.distances[i][c] = curves[c]->distance_at(tau);
      }
    } catch (const std::exception& e) {
      errors[w] = std::string(e.what());
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  for (int w = 0; w < threads; ++w)
    if (!errors[w].empty())
      throw Error("scan failed in chunk " + std::to_string(w) + ": " + errors[w]);
  return result;
}

struct ScanRecord {
  double tau;
  double d1;
  double d2;
};

inline std::vector<ScanRecord> scan_shifts(const ShiftCurve& phi_curve,
                                           const ShiftCurve& zeta_curve, const ScanConfig& cfg,
                                           int threads = 1) {
  const ShiftCurve* curves[2] = {&phi_curve, &zeta_curve};
  const FamilyScanResult r = scan_family(curves, cfg, threads);
  std::vector<ScanRecord> out(r.taus.size());
  for (std::size_t i = 0; i < r.taus.size(); ++i)
    out[i] = {r.taus[i], r.distances[i][0], r.distances[i][1]};
  return out;
}

// ---------------------------------------------------------------------------
// Hit intervals and densities
// ---------------------------------------------------------------------------

struct HitInterval {
  double lo;
  double hi;
  bool confirmed = true;
};

struct HitIntervals {
  std::vector<HitInterval> intervals;
  double endpoint_accuracy = 0.0;
  int crossing_count = 0;

  double total_length() const {
    double sum = 0.0;
    for (const auto& it : intervals) sum += it.hi - it.lo;
    return sum;
  }
};

// Membership is the strict inequality d < eps; an exact tie counts as
// outside.  Crossings between consecutive grid points are refined by
// bisection when a re-evaluator is available, otherwise by linear
// interpolation of the recorded values.
inline HitIntervals hit_intervals(const std::vector<double>& taus,
                                  const std::vector<double>& dmax, double eps,
                                  const ScanConfig& cfg,
                                  const std::function<double(double)>* refine = nullptr) {
  if (taus.size() != dmax.size() || taus.empty())
    throw ConfigError("hit_intervals: records empty or malformed");
  for (std::size_t i = 0; i + 1 < taus.size(); ++i)
    if (!(taus[i] < taus[i + 1])) throw ConfigError("hit_intervals: records must be sorted by tau");

  HitIntervals out;
  out.endpoint_accuracy =
      refine ? cfg.delta / std::pow(2.0, cfg.refine_depth + 1) : cfg.delta / 2.0;

  auto locate = [&](std::size_t i) -> double {
    double a = taus[i], b = taus[i + 1];
    if (refine && cfg.refine_depth > 0) {
      bool a_in = dmax[i] < eps;
      for (int d = 0; d < cfg.refine_depth; ++d) {
        const double mid = 0.5 * (a + b);
        const bool mid_in = (*refine)(mid) < eps;
        if (mid_in == a_in)
          a = mid;
        else
          b = mid;
      }
      return 0.5 * (a + b);
    }
    const double da = dmax[i] - eps, db = dmax[i + 1] - eps;
    if (da == db) return 0.5 * (a + b);
    const double t = da / (da - db);
    return a + (b - a) * std::clamp(t, 0.0, 1.0);
  };

  bool open = false;
  double start = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const bool in = dmax[i] < eps;
    if (in && !open) {
      start = (i == 0) ? taus[0] : locate(i - 1);
      if (i > 0) ++out.crossing_count;
      open = true;
    } else if (!in && open) {
      out.intervals.push_back({start, locate(i - 1)});
      ++out.crossing_count;
      open = false;
    }
  }
  if (open) out.intervals.push_back({start, taus.back()});
  return out;
}

inline double density_estimate(const HitIntervals& hits, double T) {
  if (!(T > 0.0)) throw ConfigError("density needs T > 0");
  for (const auto& it : hits.intervals)
    if (it.lo < -1e-12 || it.hi > T * (1.0 + 1e-12) || it.lo > it.hi)
      throw ConfigError("hit interval outside [0,T]");
  return std::clamp(hits.total_length() / T, 0.0, 1.0);
}

// midpoint re-check of each interval on the 4x finer spatial grid
inline void confirm_intervals(HitIntervals& hits, const std::function<double(double)>& fine,
                              double eps) {
  for (auto& it : hits.intervals) it.confirmed = fine(0.5 * (it.lo + it.hi)) < eps;
}

struct DensityPoint {
  double epsilon;
  double density;
  double uncertainty;
};

struct DensityCurve {
  std::vector<DensityPoint> points;
};

inline DensityCurve density_curve(const std::vector<double>& taus,
                                  const std::vector<double>& dmax, const ScanConfig& cfg,
                                  const std::function<double(double)>* refine = nullptr) {
  if (cfg.epsilon_grid.empty()) throw ConfigError("density curve needs a nonempty epsilon grid");
  const double T = taus.empty() ? cfg.T : taus.back();
  DensityCurve curve;
  for (double eps : cfg.epsilon_grid) {
    const HitIntervals hits = hit_intervals(taus, dmax, eps, cfg, refine);
    const double dens = density_estimate(hits, T);
    curve.points.push_back({eps, dens, hits.crossing_count * hits.endpoint_accuracy / T});
  }
  // nondecreasing in epsilon up to refinement uncertainty, or the scanner is broken
  for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
    const auto& a = curve.points[i];
    const auto& b = curve.points[i + 1];
    if (b.density < a.density - (a.uncertainty + b.uncertainty + 1e-12))
      throw MonotonicityViolationError(
          "density curve decreases from eps=" + fmt17(a.epsilon) + " (" + fmt17(a.density) +
          ") to eps=" + fmt17(b.epsilon) + " (" + fmt17(b.density) + ")");
  }
  return curve;
}

// ---------------------------------------------------------------------------
// Convergence diagnostic and best shift
// ---------------------------------------------------------------------------

struct ConvergenceRow {
  double epsilon;
  std::vector<double> densities;  // D_{T_i}(epsilon)
  double max_diff;
  bool shrinking;  // successive differences nonincreasing
};

struct ConvergenceReport {
  std::vector<double> t_values;
  std::vector<ConvergenceRow> rows;
};

inline ConvergenceReport convergence_diagnostic(
    const std::vector<std::pair<double, DensityCurve>>& curves) {
  if (curves.size() < 3)
    throw ConfigError("convergence diagnostic needs at least 3 T values");
  for (std::size_t i = 0; i + 1 < curves.size(); ++i)
    if (!(curves[i].first < curves[i + 1].first))
      throw ConfigError("T values must be strictly increasing");
  const std::size_t n_eps = curves[0].second.points.size();
  for (const auto& [t, c] : curves)
    if (c.points.size() != n_eps)
      throw ConfigError("curves must share the same epsilon grid");

  ConvergenceReport rep;
  for (const auto& [t, c] : curves) rep.t_values.push_back(t);
  for (std::size_t e = 0; e < n_eps; ++e) {
    ConvergenceRow row;
    row.epsilon = curves[0].second.points[e].epsilon;
    for (const auto& [t, c] : curves) {
      if (c.points[e].epsilon != row.epsilon)
        throw ConfigError("curves must share the same epsilon grid");
      row.densities.push_back(c.points[e].density);
    }
    std::vector<double> diffs;
    for (std::size_t i = 0; i + 1 < row.densities.size(); ++i)
      diffs.push_back(std::abs(row.densities[i + 1] - row.densities[i]));
    row.max_diff = *std::max_element(diffs.begin(), diffs.end());
    row.shrinking = true;
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
      if (diffs[i + 1] > diffs[i] + 1e-15) row.shrinking = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline ScanRecord best_shift(const std::vector<ScanRecord>& records) {
  if (records.empty()) throw ConfigError("best_shift needs at least one record");
  const ScanRecord* best = &records[0];
  for (const auto& r : records)
    if (std::max(r.d1, r.d2) < std::max(best->d1, best->d2)) best = &r;
  return *best;
}

}  // namespace zetalab

#endif  // ZETALAB_SCAN_HPP
