#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "szego/decompose.hpp"
#include "szego/verify.hpp"

namespace szego::detail {

using Inputs = std::vector<std::pair<std::string, std::string>>;

inline std::string show(const std::vector<Rational>& v) { return format_rational_list(v); }
inline std::string show(const Rational& r) { return r.to_string(); }
inline std::string show(const RatPoly& p) { return format_rational_list(p.coeffs()); }
inline std::string show(unsigned v) { return std::to_string(v); }
std::string show(const std::vector<Complex>& v);
std::string show(double v);

inline TrialOutcome pass(std::vector<std::string> tags = {}) { return {std::nullopt, std::move(tags)}; }
inline TrialOutcome failure(Inputs inputs, std::string observed, std::string expected) {
  return {FailureRecord{0, std::move(inputs), std::move(observed), std::move(expected)}, {}};
}

std::vector<Rational> random_list(TrialRng& rng, std::size_t count);
/// Tail of a random monic polynomial with a prescribed number of positive
/// rational roots (repeats allowed) times a random cofactor.
RatPoly random_monic_with_positive_roots(TrialRng& rng, unsigned degree, unsigned positive);
/// Random monic cofactor without positive roots (Sturm-confirmed).
RatPoly random_positive_root_free(TrialRng& rng, unsigned degree);
/// Descending tail c_1..c_n of a monic polynomial.
std::vector<Rational> monic_tail(const RatPoly& p);

/// Real parts of the roots with |Im| <= tol * max(1, |z|).
std::vector<double> real_roots(const std::vector<Complex>& roots, double tol);

/// Coordinates of U_n: (-1)^i c_i >= 0.
bool in_cone(const std::vector<Rational>& v);
bool on_cone_boundary(const std::vector<Rational>& v);

}  // namespace szego::detail
