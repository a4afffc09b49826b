#include "doctest.h"
#include "szego/error.hpp"
#include "szego/roots.hpp"
#include "szego/ssc.hpp"
#include "test_support.hpp"

using namespace szego;
using szego::testing::Draw;
using szego::testing::rpoly;

namespace {

RatPoly x_plus_one_pow(unsigned e) { return pow(rpoly({1, 1}), e); }

}  // namespace

TEST_CASE("(x+1)^N is the unit") {
  Draw draw(21);
  for (unsigned n = 1; n <= 6; ++n) {
    const RatPoly b = draw.poly(n);
    CHECK(ssc_compose(x_plus_one_pow(n), b, {n}) == b);
    CHECK(ssc_compose(b, x_plus_one_pow(n), {n}) == b);
  }
}

TEST_CASE("ssc_compose worked examples") {
  const RatPoly a = rpoly({0, 1, 2, 1});  // (x+1)^2 x
  const RatPoly expected({Rational(0), Rational(1, 3), Rational(4, 3), Rational(1)});
  CHECK(ssc_compose(a, a, {3}) == expected);
  CHECK(expected == rpoly({0, 1}) * rpoly({1, 1}) * RatPoly({Rational(1, 3), Rational(1)}));
  CHECK(ssc_compose(rpoly({4, -4, 1}), rpoly({9, -6, 1}), {2}) == pow(rpoly({6, 1}), 2));
}

TEST_CASE("ssc_compose rejects an ambiguous ambient degree") {
  CHECK_THROWS_AS(ssc_compose(rpoly({1, 1}), rpoly({1, 2}), {3}), Error);
  CHECK_THROWS_AS(ssc_compose(rpoly({1, 1, 1, 1, 1}), rpoly({1, 2}), {3}), Error);
  try {
    ssc_compose(rpoly({1, 1}), rpoly({1, 1}), {2});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain);
    CHECK(std::string(e.what()) == "ambiguous ambient degree");
  }
  // One operand with a nonzero leading coefficient is enough.
  CHECK_NOTHROW(ssc_compose(rpoly({1, 1}), rpoly({1, 2, 1}), {2}));
}

TEST_CASE("ssc_compose is commutative and associative") {
  Draw draw(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<unsigned>(draw.integer(1, 6));
    const RatPoly a = draw.poly(n), b = draw.poly(n), c = draw.poly(n);
    const SscContext ctx{n};
    CHECK(ssc_compose(a, b, ctx) == ssc_compose(b, a, ctx));
    CHECK(ssc_compose(ssc_compose(a, b, ctx), c, ctx) ==
          ssc_compose(a, ssc_compose(b, c, ctx), ctx));
  }
}

TEST_CASE("k_factor closed form equals (x+1)^{n+k-1}(x+a)") {
  CHECK(k_factor<Rational>(2, 1, Rational(0)) == rpoly({0, 1, 2, 1}));
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned k = 1; k <= 3; ++k) CHECK(k_factor<Rational>(n, k, Rational(1)) == x_plus_one_pow(n + k));
  Draw draw(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<unsigned>(draw.integer(1, 5));
    const auto k = static_cast<unsigned>(draw.integer(1, 4));
    const Rational a = draw.rational();
    CHECK(k_factor<Rational>(n, k, a) == x_plus_one_pow(n + k - 1) * RatPoly::linear(a));
  }
}

TEST_CASE("k_factor coefficient vanishes exactly at a = -s/(n+k-s)") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned k = 1; k <= 3; ++k)
      for (unsigned s = 0; s < n + k; ++s) {
        const Rational root(-static_cast<long>(s), static_cast<long>(n + k - s));
        const RatPoly f = k_factor<Rational>(n, k, root);
        for (unsigned t = 0; t <= n + k; ++t) CHECK(f.coeff(t).is_zero() == (t == s));
      }
}

TEST_CASE("composing a factor with a = -s/(n+k-s) zeroes x^s") {
  Draw draw(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<unsigned>(draw.integer(1, 4));
    const auto k = static_cast<unsigned>(draw.integer(1, 3));
    const auto s = static_cast<unsigned>(draw.integer(0, n + k - 1));
    const SscContext ctx{n + k};
    RatPoly acc = k_factor<Rational>(n, k, Rational(-static_cast<long>(s), static_cast<long>(n + k - s)));
    for (unsigned i = 1; i < n; ++i) acc = ssc_compose(acc, k_factor<Rational>(n, k, draw.rational()), ctx);
    CHECK(acc.coeff(s).is_zero());
  }
}

TEST_CASE("exp_ssc worked examples") {
  CHECK(exp_ssc(RatExpPoly{rpoly({1, 1})}, RatExpPoly{rpoly({1, 1})}).poly == rpoly({1, 3, 1}));
  CHECK(exp_ssc(RatExpPoly{rpoly({-1, 1})}, RatExpPoly{rpoly({-1, 1})}).poly == rpoly({1, -1, 1}));
  Draw draw(25);
  for (int trial = 0; trial < 20; ++trial) {
    const RatExpPoly f{draw.poly(static_cast<unsigned>(draw.integer(0, 5)))};
    CHECK(exp_ssc(RatExpPoly{rpoly({1})}, f) == f);
  }
}

TEST_CASE("exp_ssc multiplies gamma sequences and is commutative/associative") {
  Draw draw(26);
  for (int trial = 0; trial < 60; ++trial) {
    const RatExpPoly f{draw.poly(static_cast<unsigned>(draw.integer(0, 4)))};
    const RatExpPoly g{draw.poly(static_cast<unsigned>(draw.integer(0, 4)))};
    const RatExpPoly h{draw.poly(static_cast<unsigned>(draw.integer(0, 4)))};
    const RatExpPoly fg = exp_ssc(f, g);
    CHECK(fg.poly.degree() == f.poly.degree() + g.poly.degree());
    for (unsigned j = 0; j < 15; ++j) CHECK(taylor_gamma(fg, j) == taylor_gamma(f, j) * taylor_gamma(g, j));
    CHECK(fg == exp_ssc(g, f));
    CHECK(exp_ssc(fg, h) == exp_ssc(f, exp_ssc(g, h)));
  }
}

TEST_CASE("kappa_factor") {
  const RatExpPoly k1 = kappa_factor(Rational(1));
  CHECK(k1.poly == rpoly({1, 1}));
  const RatExpPoly km1 = kappa_factor(Rational(-1));
  std::vector<Rational> gammas;
  for (long j = 0; j < 12; ++j) {
    CHECK(taylor_gamma(k1, static_cast<unsigned>(j)) == Rational(1 + j));
    gammas.push_back(taylor_gamma(km1, static_cast<unsigned>(j)));
    CHECK(gammas.back() == Rational(1 - j));
  }
  CHECK(sign_changes(gammas) == 1);
  // gamma_j = 0 exactly at j = -a.
  const RatExpPoly km3 = kappa_factor(Rational(-3));
  for (unsigned j = 0; j < 10; ++j) CHECK(taylor_gamma(km3, j).is_zero() == (j == 3));
  CHECK(taylor_gamma(kappa_factor(Rational(-5, 2)), 2) != Rational(0));
  CHECK_THROWS_AS(kappa_factor(Rational(0)), Error);
}

TEST_CASE("kappa_recursion_step matches exp_ssc") {
  CHECK(kappa_recursion_step(RatExpPoly{rpoly({1})}, Rational(1)).poly == rpoly({1, 1}));
  CHECK(kappa_recursion_step(RatExpPoly{rpoly({1, 1})}, Rational(1)).poly == rpoly({1, 3, 1}));
  CHECK_THROWS_AS(kappa_recursion_step(RatExpPoly{rpoly({1})}, Rational(0)), Error);
  Draw draw(27);
  for (int trial = 0; trial < 100; ++trial) {
    const RatExpPoly prev{draw.poly(static_cast<unsigned>(draw.integer(0, 5)))};
    Rational a = draw.rational();
    if (a.is_zero()) a = Rational(3, 2);
    CHECK(kappa_recursion_step(prev, a) == exp_ssc(prev, kappa_factor(a)));
  }
}

TEST_CASE("derivative identities") {
  CHECK(ssc_derivative_identity_check(x_plus_one_pow(3), rpoly({1, 2, 3, 4}), {3}).holds());
  CHECK(ssc_derivative_identity_check(rpoly({4, -4, 1}), rpoly({9, -6, 1}), {2}).holds());
  Draw draw(28);
  for (int trial = 0; trial < 100; ++trial) {
    const RatPoly a = draw.poly(4), b = draw.poly(4);
    const auto r = ssc_derivative_identity_check(a, b, {4});
    CHECK(r.derivative_rule);
    CHECK(r.shift_rule);
  }
}

TEST_CASE("complex composition of conjugate factors is real") {
  const double eps = 0.01;
  for (unsigned k = 1; k <= 4; ++k) {
    const SscContext ctx{k + 2};
    const CPoly f = ssc_compose(k_factor<Complex>(1, k + 1, Complex(0, eps)),
                                k_factor<Complex>(1, k + 1, Complex(0, -eps)), ctx);
    for (const auto& c : f.coeffs()) CHECK(std::abs(c.imag()) < 1e-15);
  }
}
