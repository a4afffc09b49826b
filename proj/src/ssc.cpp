#include "szego/ssc.hpp"

namespace szego {

DerivativeIdentityResult ssc_derivative_identity_check(const RatPoly& a,
                                                       const RatPoly& b,
                                                       SscContext ctx) {
  DerivativeIdentityResult result;
  const unsigned n = ctx.ambient_degree;
  if (n == 0) fail(ErrorCode::invalid_argument, "derivative identities need N >= 1");
  const Rational inv_n = Rational(1, static_cast<long>(n));
  const SscContext lower{n - 1};

  const RatPoly lhs = ssc_compose(a, b, ctx).derivative();
  result.derivative_rule =
      lhs == ssc_compose(a.derivative(), b.derivative(), lower) * inv_n;

  // S = (a - a(0)) / x, so xS keeps every coefficient of a except the constant.
  std::vector<Rational> s_coeffs;
  if (a.coeffs().size() > 1) s_coeffs.assign(a.coeffs().begin() + 1, a.coeffs().end());
  const RatPoly s(std::move(s_coeffs));
  const RatPoly x = RatPoly::monomial(1, 1);
  const RatPoly shift_lhs = ssc_compose(x * s, b, ctx);
  result.shift_rule = shift_lhs == x * ssc_compose(s, b.derivative(), lower) * inv_n;
  return result;
}

}  // namespace szego
