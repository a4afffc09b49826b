#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "szego/roots.hpp"
#include "test_support.hpp"

using namespace szego;
using szego::testing::Draw;
using szego::testing::rpoly;

namespace {

const RealBound kNegInf = RealBound::neg_infinity();
const RealBound kPosInf = RealBound::pos_infinity();
const RealBound kZero = RealBound::at(0);

RatPoly prop8_cubic() {
  return RatPoly({Rational(-2, 3), Rational(1, 3), Rational(-2), Rational(1)});
}

bool contains_root(const std::vector<Complex>& roots, Complex z, double tol) {
  return std::any_of(roots.begin(), roots.end(),
                     [&](Complex r) { return std::abs(r - z) <= tol; });
}

}  // namespace

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(rpoly({1, 0, 1}), kNegInf, kPosInf) == 0);
  CHECK(sturm_count(rpoly({2, -3, 1}), kZero, kPosInf) == 2);
  CHECK(sturm_count(rpoly({1, 2, 1}), kNegInf, kPosInf) == 1);
  CHECK(sturm_count_multiplicity(rpoly({1, 2, 1}), kNegInf, kPosInf) == 2);
  // (lo, hi]: a root at hi counts, a root at lo does not.
  CHECK(sturm_count(rpoly({2, -3, 1}), RealBound::at(1), RealBound::at(2)) == 1);
  CHECK(sturm_count(rpoly({2, -3, 1}), RealBound::at(0), RealBound::at(1)) == 1);
  CHECK(sturm_count(rpoly({2, -3, 1}), RealBound::at(2), RealBound::at(1)) == 0);
}

TEST_CASE("sturm_count on products of known linear factors") {
  Draw draw(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto count = draw.integer(1, 6);
    std::vector<Rational> roots;
    while (static_cast<long>(roots.size()) < count) {
      const Rational r = draw.rational();
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    RatPoly p = rpoly({1});
    for (const auto& r : roots) p *= RatPoly::linear(-r);
    p *= rpoly({1, 1, 1});  // no real roots
    CHECK(sturm_count(p, kNegInf, kPosInf) == static_cast<unsigned>(count));
    const long positive = std::count_if(roots.begin(), roots.end(), [](const Rational& r) { return r.sign() > 0; });
    CHECK(sturm_count(p, kZero, kPosInf) == static_cast<unsigned>(positive));
    // Squaring keeps distinct roots and doubles the multiplicity count.
    CHECK(sturm_count(p * p, kNegInf, kPosInf) == static_cast<unsigned>(count));
    CHECK(sturm_count_multiplicity(p * p, kNegInf, kPosInf) == 2 * static_cast<unsigned>(count));
  }
}

TEST_CASE("square-free factorization") {
  const RatPoly p = pow(rpoly({-1, 1}), 3) * pow(rpoly({2, 1}), 2) * rpoly({5, 1});
  const auto f = square_free_factorization(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == rpoly({5, 1}));
  CHECK(f[1] == rpoly({2, 1}));
  CHECK(f[2] == rpoly({-1, 1}));
  CHECK(square_free_part(p) == rpoly({-1, 1}) * rpoly({2, 1}) * rpoly({5, 1}));
}

TEST_CASE("is_hyperbolic") {
  auto v = is_hyperbolic(pow(rpoly({1, 1}), 3));
  CHECK(v.hyperbolic);
  CHECK(!v.distinct);
  v = is_hyperbolic(rpoly({1, 3, 1}));
  CHECK(v.hyperbolic);
  CHECK(v.distinct);
  v = is_hyperbolic(rpoly({1, -1, 1}));
  CHECK(!v.hyperbolic);
  CHECK(v.distinct);
  CHECK(is_hyperbolic(rpoly({3})).hyperbolic);
}

TEST_CASE("aberth_roots examples") {
  const auto r1 = aberth_roots(to_complex(rpoly({1, 0, 1})));
  REQUIRE(r1.size() == 2);
  CHECK(contains_root(r1, Complex(0, 1), 1e-10));
  CHECK(contains_root(r1, Complex(0, -1), 1e-10));

  const auto r2 = aberth_roots(to_complex(prop8_cubic()));
  REQUIRE(r2.size() == 3);
  CHECK(contains_root(r2, Complex(2, 0), 1e-8));
  CHECK(contains_root(r2, Complex(0, 1 / std::sqrt(3.0)), 1e-8));
  CHECK(contains_root(r2, Complex(0, -1 / std::sqrt(3.0)), 1e-8));

  const auto clusters = cluster_roots(aberth_roots(to_complex(rpoly({36, 12, 1}))));
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0].multiplicity == 2);
  CHECK(std::abs(clusters[0].center - Complex(-6, 0)) < 1e-6);
  const auto polished = clustered_roots(to_complex(rpoly({36, 12, 1})));
  REQUIRE(polished.size() == 2);
  CHECK(std::abs(polished[0] - Complex(-6, 0)) < 1e-12);
  CHECK(polished[0] == polished[1]);

  const auto zeros = aberth_roots(to_complex(rpoly({0, 0, 2, 1})));
  CHECK(std::count(zeros.begin(), zeros.end(), Complex{}) == 2);
  CHECK(contains_root(zeros, Complex(-2, 0), 1e-12));

  CHECK_THROWS_AS(aberth_roots(to_complex(rpoly({1}))), Error);
}

TEST_CASE("aberth_roots is deterministic") {
  const CPoly p = to_complex(rpoly({7, -3, 0, 2, 5, 1}));
  CHECK(aberth_roots(p) == aberth_roots(p));
}

TEST_CASE("aberth non-convergence carries the best iterate") {
  AberthOptions opts;
  opts.max_iter = 1;
  try {
    aberth_roots(to_complex(rpoly({7, -3, 0, 2, 5, 1})), opts);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.code() == ErrorCode::convergence);
    CHECK(e.best_iterate().size() == 5);
    CHECK(e.residuals().size() == 5);
  }
}

TEST_CASE("aberth Vieta checks") {
  Draw draw(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<unsigned>(draw.integer(2, 8));
    RatPoly p = draw.poly(n);
    if (p.coeff(0).is_zero()) p += rpoly({1});
    const CPoly cp = to_complex(p);
    const auto roots = aberth_roots(cp);
    Complex sum{}, prod{1.0, 0.0};
    for (const auto& z : roots) {
      sum += z;
      prod *= z;
    }
    const Complex lead = cp.leading();
    CHECK(std::abs(sum + cp.coeff(n - 1) / lead) <= 1e-9 * std::max(1.0, std::abs(sum)));
    const Complex expected_prod = (n % 2 == 0 ? 1.0 : -1.0) * cp.coeff(0) / lead;
    CHECK(std::abs(prod - expected_prod) <= 1e-9 * std::max(1.0, std::abs(prod)));
  }
}

TEST_CASE("sign_changes") {
  CHECK(sign_changes(std::vector<Rational>{1, -1, -1, 1}) == 2);
  CHECK(sign_changes(std::vector<Rational>{0, 1, 2, 1}) == 0);
  CHECK(sign_changes(std::vector<Rational>{1, 0, -1, 0, 0, 1}) == 2);
  CHECK(sign_changes(std::vector<Rational>{}) == 0);
  // gamma_j of e^x (x-1)^2 is j^2 - 3j + 1.
  std::vector<Rational> gammas;
  for (unsigned j = 0; j <= 5; ++j) gammas.push_back(taylor_gamma(RatExpPoly{rpoly({1, -2, 1})}, j));
  CHECK(gammas == std::vector<Rational>{1, -1, -1, 1, 5, 11});
  CHECK(sign_changes(gammas) == 2);
}

TEST_CASE("descartes_truncation_bound") {
  CHECK(descartes_truncation_bound(rpoly({-1, 1})) == 3);
  std::vector<Rational> gammas;
  for (unsigned j = 0; j <= 3; ++j) gammas.push_back(taylor_gamma(RatExpPoly{rpoly({-1, 1})}, j));
  CHECK(gammas == std::vector<Rational>{-1, 0, 1, 2});
  CHECK(sign_changes(gammas) == 1);
  CHECK(descartes_truncation_bound(rpoly({1, -3, 1})) == 7);
  CHECK(descartes_truncation_bound(rpoly({0, 0, 0, 1})) == 4);
  // Non-monic input is normalized first.
  CHECK(descartes_truncation_bound(rpoly({-2, 2})) == 3);
}

TEST_CASE("truncated sign changes are stable past the bound") {
  Draw draw(33);
  for (int trial = 0; trial < 100; ++trial) {
    const RatPoly p = make_monic(draw.poly(static_cast<unsigned>(draw.integer(1, 5))));
    const unsigned bound = descartes_truncation_bound(p);
    std::vector<Rational> gammas;
    for (unsigned j = 0; j <= bound + 10; ++j) gammas.push_back(taylor_gamma(RatExpPoly{p}, j));
    for (unsigned j = bound; j < gammas.size(); ++j) CHECK(gammas[j].sign() > 0);
    const std::span<const Rational> all(gammas);
    CHECK(sign_changes(all.first(bound + 1)) == sign_changes(all));
  }
}

TEST_CASE("routh_rhp_count") {
  CHECK(routh_rhp_count(rpoly({6, 11, 6, 1})) == 0u);  // roots -1, -2, -3
  CHECK(routh_rhp_count(rpoly({-6, 11, -6, 1})) == 3u);
  CHECK(routh_rhp_count(rpoly({10, -13, 2, 1})) == 2u);  // roots 1, 2, -5
  CHECK(!routh_rhp_count(rpoly({1, 0, 1})).has_value());
  CHECK(!routh_rhp_count(rpoly({0, 1, 1})).has_value());
}

TEST_CASE("region_membership examples") {
  const std::vector<Rational> w{Rational(-2), Rational(1, 3), Rational(-2, 3)};
  auto v = region_membership(w);
  CHECK(v.in_U);
  CHECK(!v.in_Pi);
  CHECK(v.in_V == VStatus::boundary_or_uncertain);
  CHECK(v.witnesses.size() == 3);

  v = region_membership(std::vector<Rational>(3));
  CHECK(v.in_U);
  CHECK(v.in_Pi);
  CHECK(v.in_closed_V());

  v = region_membership(std::vector<Rational>{Rational(-3), Rational(1)});
  CHECK(v.in_U);
  CHECK(v.in_Pi);
  CHECK(v.in_V == VStatus::inside);

  v = region_membership(std::vector<Rational>{Rational(3), Rational(1)});
  CHECK(!v.in_U);
  CHECK(v.in_V == VStatus::outside);

  // 1 - 3x + x^2 in the unit-constant convention: same roots as x^2 - 3x + 1.
  v = region_membership(std::vector<Rational>{Rational(-3), Rational(1)}, CoeffConvention::unit_constant);
  CHECK(v.in_V == VStatus::inside);
}

TEST_CASE("region chain (Pi and U) => V => U on random points") {
  Draw draw(34);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(draw.integer(1, 5));
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = draw.rational();
      if (draw.integer(0, 1) == 1) c[i] = (i % 2 == 0 ? -1 : 1) * c[i].abs();
      if (draw.integer(0, 5) == 0) c[i] = 0;
    }
    const auto v = region_membership(c);
    if (v.in_Pi && v.in_U) CHECK(v.in_closed_V());
    if (v.in_closed_V()) CHECK(v.in_U);
  }
}
