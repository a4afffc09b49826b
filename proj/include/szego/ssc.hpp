#pragma once

#include <type_traits>

#include "szego/error.hpp"
#include "szego/poly.hpp"

namespace szego {

/// Ambient degree N of a Schur-Szego composition. Padding a polynomial with
/// leading zeros changes the composition, so N is always explicit.
struct SscContext {
  unsigned ambient_degree = 0;
};

namespace detail {

template <class T>
T binomial_as(unsigned n, unsigned s) {
  if constexpr (std::is_same_v<T, Rational>) {
    return Rational(binomial(n, s));
  } else {
    return T(binomial(n, s).get_d());
  }
}

}  // namespace detail

/// A*B with coefficient of x^j equal to a_j b_j / C(N, j).
/// Throws ErrorCode::domain ("ambiguous ambient degree") unless both degrees
/// are <= N and at least one operand has a nonzero x^N coefficient.
template <class T>
Poly<T> ssc_compose(const Poly<T>& a, const Poly<T>& b, SscContext ctx) {
  const unsigned n = ctx.ambient_degree;
  const auto too_big = [n](const Poly<T>& p) {
    return !p.is_zero() && p.degree() > static_cast<long>(n);
  };
  if (too_big(a) || too_big(b) ||
      (scalar_is_zero(a.coeff(n)) && scalar_is_zero(b.coeff(n))))
    fail(ErrorCode::domain, "ambiguous ambient degree");
  std::vector<T> out(n + 1, T{});
  for (unsigned j = 0; j <= n; ++j)
    out[j] = a.coeff(j) * b.coeff(j) / detail::binomial_as<T>(n, j);
  return Poly<T>(std::move(out));
}

/// K_{n,k;a} = (x+1)^{n+k-1} (x+a), built from its closed-form coefficients
/// C(n+k, s) ((n+k-s) a + s) / (n+k).
template <class T>
Poly<T> k_factor(unsigned n, unsigned k, const T& a) {
  if (n + k == 0) fail(ErrorCode::invalid_argument, "k_factor needs n + k >= 1");
  const unsigned total = n + k;
  std::vector<T> out(total + 1, T{});
  for (unsigned s = 0; s <= total; ++s) {
    const T weight = (T(static_cast<long>(total - s)) * a + T(static_cast<long>(s))) /
                     T(static_cast<long>(total));
    out[s] = detail::binomial_as<T>(total, s) * weight;
  }
  return Poly<T>(std::move(out));
}

/// Composition of e^x f and e^x g: gamma_j multiply. The result is recovered
/// exactly from deg f + deg g + 1 gamma values by inverting the
/// falling-factorial evaluation.
template <class T>
ExpPoly<T> exp_ssc(const ExpPoly<T>& f, const ExpPoly<T>& g) {
  if (f.poly.is_zero() || g.poly.is_zero()) return {};
  const auto d = static_cast<unsigned>(f.poly.degree() + g.poly.degree());
  std::vector<T> gammas(d + 1);
  for (unsigned j = 0; j <= d; ++j)
    gammas[j] = taylor_gamma(f, j) * taylor_gamma(g, j);
  return {poly_from_gammas<T>(gammas)};
}

/// kappa_a = e^x (1 + x/a). Throws ErrorCode::domain when a = 0.
template <class T>
ExpPoly<T> kappa_factor(const T& a) {
  if (scalar_is_zero(a)) fail(ErrorCode::domain, "kappa factor undefined at 0");
  return {Poly<T>({T{1}, T{1} / a})};
}

/// One step of e^x P_{m-1} * kappa_a = e^x ((1 + x/a) P_{m-1} + (x/a) P'_{m-1}).
template <class T>
ExpPoly<T> kappa_recursion_step(const ExpPoly<T>& prev, const T& a) {
  if (scalar_is_zero(a)) fail(ErrorCode::domain, "kappa factor undefined at 0");
  const T inv = T{1} / a;
  const Poly<T> one_plus = Poly<T>({T{1}, inv});
  const Poly<T> x_over_a = Poly<T>::monomial(inv, 1);
  return {one_plus * prev.poly + x_over_a * prev.poly.derivative()};
}

struct DerivativeIdentityResult {
  bool derivative_rule = false;  // (A*B)' = (1/N) (A'*B')
  bool shift_rule = false;       // (xS*B) = (x/N) (S*B'), S = (A - A(0)) / x
  bool holds() const { return derivative_rule && shift_rule; }
};

/// Checks both derivative identities of the composition exactly. The second
/// identity is evaluated with S := (a - a(0))/x, so deg S <= N - 1; with the
/// ambient degree N on the left and N - 1 on the right.
DerivativeIdentityResult ssc_derivative_identity_check(const RatPoly& a,
                                                       const RatPoly& b,
                                                       SscContext ctx);

}  // namespace szego
