#pragma once

#include <span>
#include <vector>

#include "szego/poly.hpp"
#include "szego/roots.hpp"

namespace szego {

enum class DecompMode { finite, exp };

/// Selects one of the coefficient maps.
///  - finite(n, k): P = (x+1)^k (x^n + c_1 x^{n-1} + ... + c_n) split into
///    n factors K_{n,k;a_i}; sigma_j = e_j(a).
///  - exp(m, unit_constant): e^x (1 + c_1 x + ... + c_m x^m) split into
///    kappa_{a_i}; sigma_j = e_j(1/a).
///  - exp(m, monic): e^x (x^m + c_1 x^{m-1} + ... + c_m) split into factors
///    e^x (x + a_i); sigma_j = e_j(a).
struct PhiSpec {
  DecompMode mode = DecompMode::finite;
  unsigned n = 1;  // n for finite, m for exp
  unsigned k = 1;  // unused in exp mode
  CoeffConvention convention = CoeffConvention::monic;

  static PhiSpec finite(unsigned n, unsigned k) {
    return {DecompMode::finite, n, k, CoeffConvention::monic};
  }
  static PhiSpec exp(unsigned m, CoeffConvention convention = CoeffConvention::unit_constant) {
    return {DecompMode::exp, m, 0, convention};
  }
  unsigned dim() const { return n; }
};

struct Decomposition {
  PhiSpec spec;
  std::vector<Rational> sigma;  // sigma[j-1] = sigma_j, j = 1..n
  std::vector<Complex> roots;   // the numbers a_i, when requested

  /// Polynomial in t with roots -a_i: t^n + sigma_1 t^{n-1} + ... + sigma_n,
  /// or 1 + sigma_1 t + ... + sigma_m t^m for the unit_constant exp map.
  RatPoly root_polynomial() const;
};

/// Unchecked sigma computation by exact interpolation; valid for every
/// coefficient vector (including c_m = 0 in exp mode).
std::vector<Rational> phi_sigma(const PhiSpec& spec, std::span<const Rational> c);

/// Finite-mode decomposition. n >= 1, k >= 1.
Decomposition phi_nk(std::span<const Rational> c, unsigned n, unsigned k,
                     bool with_roots = false);
/// Exp-mode decomposition in the P(0) = 1 convention. Throws
/// ErrorCode::domain ("degree deficient") when c_m = 0.
Decomposition phi_exp(std::span<const Rational> c, bool with_roots = false);
/// Exp-mode decomposition in the monic convention. Accepts c_m = 0 (a factor
/// e^x x appears).
Decomposition phi_exp_monic(std::span<const Rational> c, bool with_roots = false);
Decomposition decompose(const PhiSpec& spec, std::span<const Rational> c,
                        bool with_roots = false);

/// Switches a coefficient (or sigma) vector between the monic and
/// unit_constant conventions: out_i = c_{m-i} / c_m with c_0 = 1. It is an
/// involution. Throws ErrorCode::domain when c_m = 0.
std::vector<Rational> switch_convention(std::span<const Rational> c);

/// Rebuilds the composed polynomial from sigma alone:
/// finite -> P = (x+1)^k (x^n + ...), exp -> the polynomial factor of e^x P.
RatPoly recompose(const Decomposition& dec);
/// The coefficient vector c that decompose() would map to dec.sigma.
std::vector<Rational> recompose_coeffs(const Decomposition& dec);

/// Recomposition through the numerical roots (complex arithmetic): composes
/// the factors K_{n,k;a_i} or e^x(x + a_i) one by one.
CPoly recompose_from_roots(const PhiSpec& spec, std::span<const Complex> roots);

struct AffineMap {
  std::vector<std::vector<Rational>> matrix;  // row-major, dim x dim
  std::vector<Rational> offset;

  std::vector<Rational> apply(std::span<const Rational> c) const;
  AffineMap compose(const AffineMap& inner) const;  // this o inner
};

/// offset = Phi(0), column i = Phi(e_i) - Phi(0); verified affine at 20
/// seeded random points, otherwise ErrorCode::internal.
AffineMap extract_affine_map(const PhiSpec& spec);

}  // namespace szego
