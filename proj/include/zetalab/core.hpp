#ifndef ZETALAB_CORE_HPP
#define ZETALAB_CORE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zetalab {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Error taxonomy.  The CLI maps these onto its exit-code contract; library
// callers catch whatever granularity they need.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation requested too close to the simple pole at s = 1.
class PoleAtOneError : public Error {
 public:
  using Error::Error;
};

// The requested tolerance cannot be met within the series-length cap.
class AccuracyUnreachableError : public Error {
 public:
  using Error::Error;
};

// Euler product requested outside its convergence half-plane.
class DivergentRegionError : public Error {
 public:
  using Error::Error;
};

// A local Euler factor is numerically zero at the evaluation point.
class FactorVanishesError : public Error {
 public:
  using Error::Error;
};

// Operation needs a strip-evaluation strategy the spec does not provide.
class UnsupportedStrategyError : public Error {
 public:
  using Error::Error;
};

class MeshTooFineError : public Error {
 public:
  using Error::Error;
};

class IllConditionedError : public Error {
 public:
  explicit IllConditionedError(const std::string& msg, double cond)
      : Error(msg), condition(cond) {}
  double condition;
};

// Density curves must be nondecreasing in epsilon; a violation beyond the
// refinement uncertainty indicates a scanner bug, not bad input.
class MonotonicityViolationError : public Error {
 public:
  using Error::Error;
};

class RankPreconditionError : public Error {
 public:
  using Error::Error;
};

class DegenerateMatrixError : public Error {
 public:
  using Error::Error;
};

// Structural defect in a function spec (e.g. poles besides s = 1).
class SpecStructureError : public Error {
 public:
  using Error::Error;
};

// Unparseable input: config files, CSV schemas, complex literals.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A mathematical hypothesis of the scan setup is violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Evaluation controls
// ---------------------------------------------------------------------------

struct EvalControls {
  double abs_tol = 1e-12;        // target absolute error
  long max_terms = 8'000'000;    // cap on main-series length

  void validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol))
      throw ConfigError("EvalControls: abs_tol must be positive and finite");
    if (abs_tol < 1e-300)
      throw ConfigError("EvalControls: abs_tol below representable minimum");
    if (max_terms < 16)
      throw ConfigError("EvalControls: max_terms must be at least 16");
  }
};

inline void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ConfigError(std::string(what) + ": non-finite value");
}

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x))
    throw ConfigError(std::string(what) + ": non-finite value");
}

// ---------------------------------------------------------------------------
// Compensated summation (Neumaier).  Long Dirichlet partial sums otherwise
// accumulate O(n*eps) rounding, which matters at the 1e-10 contracts.
// ---------------------------------------------------------------------------

class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class KahanComplexSum {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum re_;
  KahanSum im_;
};

// ---------------------------------------------------------------------------
// Formatting: 17 significant digits round-trips a double exactly.
// ---------------------------------------------------------------------------

inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string fmt_complex(Complex z) {
  std::string s = fmt17(z.real());
  if (z.imag() >= 0.0 || std::isnan(z.imag()))
    s += "+" + fmt17(z.imag()) + "i";
  else
    s += fmt17(z.imag()) + "i";
  return s;
}

// FNV-1a, used for config digests and output-file fingerprints.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view data) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

}  // namespace zetalab

#endif  // ZETALAB_CORE_HPP
