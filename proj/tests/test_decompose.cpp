#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "szego/decompose.hpp"
#include "szego/error.hpp"
#include "szego/ssc.hpp"
#include "test_support.hpp"

using namespace szego;
using szego::testing::Draw;
using szego::testing::rpoly;

namespace {

std::vector<Rational> rats(std::initializer_list<Rational> v) { return v; }

double max_abs_coeff(const CPoly& p) {
  double m = 0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

TEST_CASE("phi_nk worked examples") {
  auto dec = phi_nk(rats({Rational(1, 3), 0}), 2, 1, true);
  CHECK(dec.sigma == rats({0, 0}));
  REQUIRE(dec.roots.size() == 2);
  for (const auto& a : dec.roots) CHECK(std::abs(a) < 1e-12);

  dec = phi_nk(rats({Rational(-2, 3), 1}), 2, 1, true);
  CHECK(dec.sigma == rats({-2, 1}));
  REQUIRE(dec.roots.size() == 2);
  for (const auto& a : dec.roots) CHECK(std::abs(a - Complex(-1, 0)) < 1e-12);

  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned k = 1; k <= 3; ++k) {
      std::vector<Rational> row;
      for (unsigned j = 1; j <= n; ++j) row.emplace_back(binomial(n, j));
      CHECK(phi_nk(row, n, k).sigma == row);
    }
}

TEST_CASE("phi_nk reproduces the composition of K factors") {
  Draw draw(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<unsigned>(draw.integer(1, 4));
    const auto k = static_cast<unsigned>(draw.integer(1, 3));
    // Compose factors with known rational a_i, then read back sigma.
    std::vector<Rational> a(n);
    for (auto& v : a) v = draw.rational();
    RatPoly p = k_factor<Rational>(n, k, a[0]);
    for (unsigned i = 1; i < n; ++i) p = ssc_compose(p, k_factor<Rational>(n, k, a[i]), {n + k});
    RatPoly expected_q = rpoly({1});
    for (const auto& v : a) expected_q *= RatPoly::linear(v);
    const auto [m, rem] = divmod(p, pow(rpoly({1, 1}), k));
    REQUIRE(rem.is_zero());
    const auto desc = to_descending(m, n);
    const std::vector<Rational> c(desc.begin() + 1, desc.end());
    const auto dec = phi_nk(c, n, k);
    CHECK(dec.root_polynomial() == expected_q);
  }
}

TEST_CASE("finite round trip is exact") {
  Draw draw(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<unsigned>(draw.integer(1, 5));
    const auto k = static_cast<unsigned>(draw.integer(1, 4));
    const auto c = draw.rationals(n);
    const auto dec = phi_nk(c, n, k);
    CHECK(recompose(dec) == pow(rpoly({1, 1}), k) * monic_from_tail(c));
    CHECK(recompose_coeffs(dec) == c);
  }
  const auto dec = phi_nk(rats({Rational(1, 3), 0}), 2, 1);
  CHECK(recompose_coeffs(dec) == rats({Rational(1, 3), 0}));
  CHECK(recompose(Decomposition{PhiSpec::finite(3, 2), rats({3, 3, 1}), {}}) == pow(rpoly({1, 1}), 5));
}

TEST_CASE("numerical roots recompose within 1e-8 and pair up by conjugation") {
  Draw draw(43);
  for (int trial = 0; trial < 80; ++trial) {
    const auto n = static_cast<unsigned>(draw.integer(1, 5));
    const auto k = static_cast<unsigned>(draw.integer(1, 4));
    const auto c = draw.rationals(n);
    const auto dec = phi_nk(c, n, k, true);
    const CPoly exact = to_complex(recompose(dec));
    const CPoly numeric = recompose_from_roots(dec.spec, dec.roots);
    const double scale = max_abs_coeff(exact);
    for (unsigned s = 0; s <= n + k; ++s)
      CHECK(std::abs(numeric.coeff(s) - exact.coeff(s)) <= 1e-8 * scale);
    for (const auto& a : dec.roots) {
      const bool paired = std::any_of(dec.roots.begin(), dec.roots.end(), [&](Complex b) {
        return std::abs(b - std::conj(a)) <= 1e-8 * std::max(1.0, std::abs(a));
      });
      CHECK(paired);
    }
  }
}

TEST_CASE("zero coefficient at x^s forces a_i = -s/(n+k-s)") {
  Draw draw(44);
  int exercised = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<unsigned>(draw.integer(1, 4));
    const auto k = static_cast<unsigned>(draw.integer(1, 3));
    const auto s = static_cast<unsigned>(draw.integer(0, n + k - 1));
    auto c = draw.rationals(n);
    // Coefficient of x^s in (x+1)^k M is sum_i C(k, s-i) m_i; solve for one m_i.
    const unsigned lo = s > k ? s - k : 0;
    const unsigned hi = std::min(s, n - 1);
    if (lo > hi) continue;
    const unsigned pivot = lo;
    RatPoly m = monic_from_tail(c);
    Rational rest;
    for (unsigned i = lo; i <= std::min(s, n); ++i)
      if (i != pivot) rest += Rational(binomial(k, s - i)) * m.coeff(i);
    c[n - 1 - pivot] = -rest / Rational(binomial(k, s - pivot));
    const RatPoly p = pow(rpoly({1, 1}), k) * monic_from_tail(c);
    REQUIRE(p.coeff(s).is_zero());
    const auto dec = phi_nk(c, n, k, true);
    const Complex target(-static_cast<double>(s) / static_cast<double>(n + k - s), 0.0);
    const bool found = std::any_of(dec.roots.begin(), dec.roots.end(), [&](Complex a) {
      return std::abs(a - target) <= 1e-6 * std::max(1.0, std::abs(target));
    });
    CHECK(found);
    // Exact form: the root polynomial vanishes at t = s/(n+k-s).
    CHECK(dec.root_polynomial()(Rational(static_cast<long>(s), static_cast<long>(n + k - s))).is_zero());
    ++exercised;
  }
  CHECK(exercised > 100);
}

TEST_CASE("phi_exp worked examples") {
  auto dec = phi_exp(rats({-1, 2}));
  CHECK(dec.sigma == rats({-3, 2}));
  dec = phi_exp(rats({1}), true);
  CHECK(dec.sigma == rats({1}));
  REQUIRE(dec.roots.size() == 1);
  CHECK(std::abs(dec.roots[0] - Complex(1, 0)) < 1e-14);

  dec = phi_exp_monic(rats({3, 1}), true);
  CHECK(dec.root_polynomial() == xi_transform(rpoly({1, 3, 1})));
  CHECK(dec.root_polynomial() == rpoly({1, 2, 1}));
  REQUIRE(dec.roots.size() == 2);
  for (const auto& a : dec.roots) CHECK(std::abs(a - Complex(1, 0)) < 1e-12);

  CHECK_THROWS_AS(phi_exp(rats({1, 0})), Error);
  try {
    phi_exp(rats({1, 0}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain);
  }
  CHECK_NOTHROW(phi_exp_monic(rats({1, 0})));
}

TEST_CASE("exp sigma agrees with the falling-factorial transform") {
  Draw draw(45);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = static_cast<unsigned>(draw.integer(1, 6));
    auto c = draw.rationals(m);
    if (c.back().is_zero()) c.back() = Rational(-1, 2);
    const RatPoly xi_unit = xi_transform(unit_from_tail(c));
    const auto unit = phi_exp(c);
    for (unsigned j = 1; j <= m; ++j) CHECK(unit.sigma[j - 1] == xi_unit.coeff(j));
    const auto monic = phi_exp_monic(c);
    CHECK(monic.root_polynomial() == xi_transform(monic_from_tail(c)));
    // The two conventions are related by the explicit switch.
    CHECK(phi_exp(switch_convention(c)).sigma == switch_convention(monic.sigma));
    CHECK(switch_convention(switch_convention(c)) == c);
  }
}

TEST_CASE("exp round trip and numeric roots") {
  Draw draw(46);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = static_cast<unsigned>(draw.integer(1, 6));
    auto c = draw.rationals(m);
    if (c.back().is_zero()) c.back() = 2;
    for (auto convention : {CoeffConvention::unit_constant, CoeffConvention::monic}) {
      const auto dec = decompose(PhiSpec::exp(m, convention), c, true);
      CHECK(recompose_coeffs(dec) == c);
      const CPoly exact = to_complex(recompose(dec));
      const CPoly numeric = recompose_from_roots(dec.spec, dec.roots);
      const double scale = max_abs_coeff(exact);
      for (unsigned s = 0; s <= m; ++s)
        CHECK(std::abs(numeric.coeff(s) - exact.coeff(s)) <= 1e-8 * scale);
      // -a_j are roots of the transform of the monic polynomial.
      const RatPoly monic_poly = convention == CoeffConvention::monic
                                     ? monic_from_tail(c)
                                     : make_monic(unit_from_tail(c));
      const CPoly xi = to_complex(xi_transform(monic_poly));
      for (const auto& a : dec.roots) CHECK(root_residual(xi, -a) <= 1e-8);
    }
  }
}

TEST_CASE("extract_affine_map examples") {
  const auto exp2 = extract_affine_map(PhiSpec::exp(2));
  CHECK(exp2.matrix == std::vector<std::vector<Rational>>{{1, -1}, {0, 1}});
  CHECK(exp2.offset == rats({0, 0}));

  const auto exp3 = extract_affine_map(PhiSpec::exp(3, CoeffConvention::monic));
  const Rational d(2), lambda(1, 3);
  CHECK(exp3.apply(rats({-d, lambda, -d * lambda})) == rats({-5, Rational(13, 3), Rational(-2, 3)}));

  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned k = 1; k <= 3; ++k) {
      const auto map = extract_affine_map(PhiSpec::finite(n, k));
      std::vector<Rational> row;
      for (unsigned j = 1; j <= n; ++j) row.emplace_back(binomial(n, j));
      CHECK(map.apply(row) == row);
    }
  // n = 1 is the identity.
  const auto id = extract_affine_map(PhiSpec::finite(1, 3));
  CHECK(id.matrix == std::vector<std::vector<Rational>>{{1}});
  CHECK(id.offset == rats({0}));
}

TEST_CASE("coefficient maps are affine") {
  Draw draw(47);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<unsigned>(draw.integer(1, 5));
    const PhiSpec spec = draw.integer(0, 1) ? PhiSpec::finite(n, static_cast<unsigned>(draw.integer(1, 4)))
                                            : PhiSpec::exp(n, CoeffConvention::monic);
    const auto c = draw.rationals(n), d = draw.rationals(n);
    const Rational lambda = draw.rational();
    std::vector<Rational> mix(n);
    for (unsigned i = 0; i < n; ++i) mix[i] = lambda * c[i] + (Rational(1) - lambda) * d[i];
    const auto pc = phi_sigma(spec, c), pd = phi_sigma(spec, d);
    std::vector<Rational> expected(n);
    for (unsigned i = 0; i < n; ++i) expected[i] = lambda * pc[i] + (Rational(1) - lambda) * pd[i];
    CHECK(phi_sigma(spec, mix) == expected);
  }
}

TEST_CASE("affine map composition") {
  const auto map = extract_affine_map(PhiSpec::exp(2));
  const auto twice = map.compose(map);
  CHECK(twice.apply(rats({-1, 2})) == rats({-5, 2}));
}

TEST_CASE("decompose validates dimensions") {
  CHECK_THROWS_AS(phi_nk(rats({1, 2}), 3, 1), Error);
  CHECK_THROWS_AS(phi_nk(rats({1}), 1, 0), Error);
  CHECK_THROWS_AS(phi_sigma(PhiSpec::finite(0, 1), {}), Error);
}
