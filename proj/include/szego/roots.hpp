#pragma once

#include <optional>
#include <span>
#include <vector>

#include "szego/error.hpp"
#include "szego/poly.hpp"

namespace szego {

/// One end of a real interval; nullopt value means infinite.
struct RealBound {
  enum class Kind { neg_inf, finite, pos_inf };
  Kind kind = Kind::finite;
  Rational value;

  static RealBound neg_infinity() { return {Kind::neg_inf, {}}; }
  static RealBound pos_infinity() { return {Kind::pos_inf, {}}; }
  static RealBound at(Rational v) { return {Kind::finite, std::move(v)}; }
};

/// Sturm chain of the square-free part of p.
std::vector<RatPoly> sturm_sequence(const RatPoly& p);

/// Distinct real roots of p in (lo, hi]. p must be nonzero.
unsigned sturm_count(const RatPoly& p, const RealBound& lo, const RealBound& hi);
/// Real roots in (lo, hi] counted with multiplicity.
unsigned sturm_count_multiplicity(const RatPoly& p, const RealBound& lo,
                                  const RealBound& hi);
inline unsigned count_positive_roots(const RatPoly& p) {
  return sturm_count_multiplicity(p, RealBound::at(0), RealBound::pos_infinity());
}

/// p / gcd(p, p'), monic.
RatPoly square_free_part(const RatPoly& p);
/// Yun factorization: result[i] is the monic product of the roots of
/// multiplicity i + 1.
std::vector<RatPoly> square_free_factorization(const RatPoly& p);

struct HyperbolicVerdict {
  bool hyperbolic = false;
  bool distinct = false;
};
HyperbolicVerdict is_hyperbolic(const RatPoly& p);

struct AberthOptions {
  double tol = 1e-10;
  int max_iter = 500;
};

/// Thrown when the iteration has not met the residual tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<Complex> best,
                   std::vector<double> residuals)
      : Error(ErrorCode::convergence, what),
        best_(std::move(best)),
        residuals_(std::move(residuals)) {}

  const std::vector<Complex>& best_iterate() const { return best_; }
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<Complex> best_;
  std::vector<double> residuals_;
};

/// All complex roots by Aberth-Ehrlich simultaneous iteration. Starting points
/// lie on the Cauchy-bound circle at angles 2 pi j / n + 0.4. The residual of
/// a root z is |p(z)| / sum_i |p_i| |z|^i.
std::vector<Complex> aberth_roots(const CPoly& p, const AberthOptions& opts = {});
double root_residual(const CPoly& p, Complex z);

struct RootCluster {
  Complex center;
  unsigned multiplicity = 1;
};

/// Groups roots whose pairwise distance is <= rel_tol * scale (union-find);
/// scale is the largest root modulus, at least 1. Centers are cluster means.
std::vector<RootCluster> cluster_roots(std::span<const Complex> roots,
                                       double rel_tol = 1e-6);
/// Cluster centers repeated by multiplicity, sorted by (real, imag).
std::vector<Complex> clustered_roots(const CPoly& p, const AberthOptions& opts = {});

/// Sign alternations after deleting zeros.
unsigned sign_changes(std::span<const Rational> seq);

/// N = floor(sum |d_i|) + m + 1 for the normalized x^m + d_1 x^{m-1} + ...;
/// every gamma_j of e^x p with j >= N is positive.
unsigned descartes_truncation_bound(const RatPoly& p);

enum class CoeffConvention {
  monic,          // x^n + c_1 x^{n-1} + ... + c_n
  unit_constant,  // 1 + c_1 x + ... + c_n x^n
};

enum class VStatus { inside, boundary_or_uncertain, outside };

struct RegionVerdict {
  bool in_U = false;
  bool in_Pi = false;
  VStatus in_V = VStatus::outside;
  std::vector<Complex> witnesses;  // filled when V needed numerical refinement

  /// Membership in the closed set V.
  bool in_closed_V() const { return in_V != VStatus::outside; }
};

/// RHP root count of p by the exact Routh array, or nullopt when a zero
/// pivot makes the array degenerate. p must have positive leading coefficient
/// after normalization.
std::optional<unsigned> routh_rhp_count(const RatPoly& p);

RegionVerdict region_membership(std::span<const Rational> c,
                                CoeffConvention convention = CoeffConvention::monic,
                                double refine_tol = 1e-9);

}  // namespace szego
