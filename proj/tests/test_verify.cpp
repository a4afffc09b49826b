#include <array>
#include <set>

#include "doctest.h"
#include "szego/decompose.hpp"
#include "szego/error.hpp"
#include "szego/verify.hpp"
#include "test_support.hpp"

using namespace szego;
using szego::testing::rpoly;

TEST_CASE("TrialRng streams are reproducible and split per check") {
  TrialRng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  TrialRng c(7);
  for (int i = 0; i < 1000; ++i) {
    const long v = c.integer(-3, 4);
    CHECK(v >= -3);
    CHECK(v <= 4);
    const Rational r = c.nonnegative(5, 6);
    CHECK(r >= Rational(0));
    CHECK(r <= Rational(5));
    CHECK(c.positive() > Rational(0));
  }
  CHECK(trial_seed(42, "utm[n=1,k=1]", 0) != trial_seed(42, "utm[n=1,k=2]", 0));
  CHECK(trial_seed(42, "x", 0) != trial_seed(42, "x", 1));
  CHECK(trial_seed(42, "x", 3) == trial_seed(42, "x", 3));
  CHECK(trial_seed(41, "x", 3) != trial_seed(42, "x", 3));
}

TEST_CASE("run_trials aggregates in trial order regardless of jobs") {
  const TrialFn fn = [](std::size_t t, TrialRng& rng) {
    TrialOutcome o;
    const auto v = rng.next();
    if (t % 7 == 3) o.failure = FailureRecord{0, {{"v", std::to_string(v)}}, "odd", "even"};
    if (t == 11) throw Error(ErrorCode::domain, "boom");
    o.tags.push_back(t % 2 ? "odd" : "even");
    return o;
  };
  const auto one = run_trials("demo", 40, 9, 1, fn);
  const auto many = run_trials("demo", 40, 9, 4, fn);
  REQUIRE(one.failures.size() == many.failures.size());
  for (std::size_t i = 0; i < one.failures.size(); ++i) {
    CHECK(one.failures[i].trial == many.failures[i].trial);
    CHECK(one.failures[i].inputs == many.failures[i].inputs);
    CHECK(one.failures[i].observed == many.failures[i].observed);
    if (i > 0) CHECK(one.failures[i - 1].trial < one.failures[i].trial);
  }
  CHECK(one.notes == many.notes);
  // Trials 3, 10, 17, 24, 31, 38 fail; trial 11 throws.
  CHECK(one.failures.size() == 7);
  CHECK(one.failures[2].trial == 11);
  CHECK(one.failures[2].observed.find("boom") != std::string::npos);
  CHECK_FALSE(one.passed());
}

TEST_CASE("interval matching uses shared endpoints once per interval") {
  // n=2, k=2: I_1 = [-1, -1/3] and I_2 = [-3, -1] share -1.
  const std::array<double, 2> values{-1.0, -1.0};
  const std::array<std::optional<double>, 4> lower{-1.0 / 3, -1.0, -3.0, std::nullopt};
  const std::array<double, 4> upper{0.0, -1.0 / 3, -1.0, -3.0};
  CHECK(max_interval_matching(values, lower, upper, 1e-8) == 2);

  // Integer intervals [-l-1, -l]: a = {-1, -1} still fits twice.
  const std::array<std::optional<double>, 3> ilower{-1.0, -2.0, -3.0};
  const std::array<double, 3> iupper{0.0, -1.0, -2.0};
  CHECK(max_interval_matching(values, ilower, iupper, 1e-8) == 2);

  // Three values inside one interval match only once.
  const std::array<double, 3> crowded{-0.2, -0.3, -0.25};
  CHECK(max_interval_matching(crowded, ilower, iupper, 1e-8) == 1);

  // Tolerance at the ends.
  const std::array<double, 1> near{-1.0 - 5e-9};
  const std::array<std::optional<double>, 1> l1{-1.0};
  const std::array<double, 1> u1{0.0};
  CHECK(max_interval_matching(near, l1, u1, 1e-8) == 1);
  const std::array<double, 1> far{-1.0 - 1e-6};
  CHECK(max_interval_matching(far, l1, u1, 1e-8) == 0);
}

TEST_CASE("worked examples behind the checks") {
  // e^x(x-1): gamma_j = j - 1, one sign change; (x-1)^2: j^2 - 3j + 1.
  std::vector<Rational> g1, g2;
  for (long j = 0; j <= 4; ++j) {
    g1.push_back(taylor_gamma(RatExpPoly{rpoly({-1, 1})}, static_cast<unsigned>(j)));
    g2.push_back(taylor_gamma(RatExpPoly{rpoly({1, -2, 1})}, static_cast<unsigned>(j)));
    CHECK(g1.back() == Rational(j - 1));
    CHECK(g2.back() == Rational(j * j - 3 * j + 1));
  }
  CHECK(sign_changes(g1) == 1);
  CHECK(sign_changes(g2) == 2);

  // (a, b) = (-1, 2): three applications give (-7, 2), hyperbolic.
  std::vector<Rational> ab{-1, 2};
  for (int s = 0; s < 3; ++s) ab = phi_exp(ab).sigma;
  CHECK(ab == std::vector<Rational>{-7, 2});
  CHECK(is_hyperbolic(unit_from_tail(ab)).hyperbolic);
}

TEST_CASE("deterministic checks pass") {
  CHECK(check_identities().passed());
  CHECK(check_identities().trials == 14);
  CHECK(check_notv().passed());
  const std::array<unsigned, 3> ks{1, 2, 3};
  CHECK(check_posneg(ks, Rational(1, 100), 10, 1).passed());
  CHECK(check_iter(rpoly({1, 3, 1}), 100).passed());
  CHECK(check_iter(rpoly({0, 2, -1, 1}), 100).passed());
  CHECK(check_limithyp(rpoly({1, -1, 1}), 10000).passed());
  CHECK(check_limithyp(rpoly({0, 5, 1, 1}), 10000).passed());
  CHECK(check_limithyp(rpoly({1, 1, 0, 1}), 10000).passed());
  CHECK_THROWS_AS(check_iter(rpoly({3}), 10), Error);
  CHECK_THROWS_AS(check_utm(0, 1, 1, 1), Error);
}

TEST_CASE("randomized checks pass on small budgets") {
  const std::uint64_t seed = 2024;
  const std::vector<CheckReport> reports = {
      check_roundtrip(60, seed),
      check_utm(1, 2, 40, seed),
      check_utm(3, 2, 60, seed),
      check_ucor(1, 40, seed),
      check_ucor(4, 60, seed),
      check_pitm(2, 1, 40, seed),
      check_pitm(3, 2, 40, seed),
      check_descartes(3, 40, seed),
      check_descartescor(4, 40, seed),
      check_xiprop(40, seed, 5),
      check_iter(20, seed, 4, 10000),
      check_limithyp(20, seed, 4, 10000),
      check_derivative_identities(60, seed),
      check_multiplicity(60, seed),
      check_lemma1(60, seed),
      check_affinity(20, seed),
      check_conjugates(40, seed),
      check_xirem(40, seed),
      check_kappa_recursion(40, seed),
      check_exploratory_pi(2, 1, 20, 10, seed),
  };
  for (const auto& r : reports) {
    INFO(r.check_id);
    CHECK(r.passed());
    CHECK(r.seed == seed);
  }
}

TEST_CASE("suite selection") {
  const auto names = suite_families();
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  SuiteOptions opts;
  opts.trials = 5;
  const auto reports = run_suite("identities,notv", opts);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].check_id == "identities");
  CHECK(reports[1].check_id == "notv");
  CHECK(run_suite("utm", opts).size() == 12);
  CHECK_THROWS_AS(run_suite("nope", opts), Error);
  CHECK_THROWS_AS(run_suite("utm,", opts), Error);
}

TEST_CASE("report serialization is stable") {
  SuiteOptions opts;
  opts.trials = 8;
  opts.jobs = 1;
  const auto a = run_suite("utm,pitm,limithyp", opts);
  opts.jobs = 3;
  const auto b = run_suite("utm,pitm,limithyp", opts);
  const std::string ja = reports_to_json(a), jb = reports_to_json(b);
  CHECK(strip_metadata(ja) == strip_metadata(jb));
  CHECK(strip_metadata(ja).find("elapsed") == std::string::npos);
  CHECK(ja.find("\"metadata\"") != std::string::npos);

  const std::string csv = reports_to_csv(a);
  CHECK(csv.rfind("check_id,trials,failures,seed,seconds\n", 0) == 0);
  CHECK(reports_json_to_csv(ja) == csv);
  CHECK_THROWS_AS(reports_json_to_csv("{}"), Error);
  CHECK_THROWS_AS(strip_metadata("[1,"), Error);

  CheckReport fake;
  fake.check_id = "fake";
  fake.trials = 2;
  fake.seed = 5;
  fake.failures.push_back({1, {{"c", "1/3,-2"}}, "x", "y"});
  const std::array<CheckReport, 1> one{fake};
  const std::string j = reports_to_json(one);
  CHECK(j.find("\"c\": \"1/3,-2\"") != std::string::npos);
  CHECK(j.find("\"passed\": false") != std::string::npos);
  CHECK(reports_to_csv(one) == "check_id,trials,failures,seed,seconds\nfake,2,1,5,0.000\n");
}
