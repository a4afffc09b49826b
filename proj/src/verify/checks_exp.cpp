#include <algorithm>
#include <cmath>

#include "check_util.hpp"
#include "szego/ssc.hpp"

namespace szego {

using namespace detail;

namespace {

std::string degree_id(const char* name, unsigned m) {
  return std::string(name) + "[m=" + std::to_string(m) + "]";
}

std::vector<Rational> gammas_upto(const RatPoly& p, unsigned last) {
  const RatExpPoly f{p};
  std::vector<Rational> g;
  for (unsigned j = 0; j <= last; ++j) g.push_back(taylor_gamma(f, j));
  return g;
}

// Descending coefficients c_0 = 1, c_1, ..., c_n of a monic polynomial.
std::vector<Rational> descending(const RatPoly& p) {
  return to_descending(p, static_cast<std::size_t>(p.degree()));
}

bool alternates(const std::vector<Rational>& desc, std::size_t count) {
  for (std::size_t s = 0; s < count; ++s)
    if (desc[s].sign() != (s % 2 == 0 ? 1 : -1)) return false;
  return true;
}

RatPoly random_monic(TrialRng& rng, unsigned degree) {
  return monic_from_tail(random_list(rng, degree));
}

unsigned expected_positive(const RatPoly& p) {
  const auto n = static_cast<unsigned>(p.degree());
  const int sign = p.coeff(0).sign() * (n % 2 == 0 ? 1 : -1);
  return sign > 0 ? n : n - 1;
}

}  // namespace

CheckReport check_ucor(unsigned m, std::size_t trials, std::uint64_t seed, unsigned jobs) {
  if (m < 1) fail(ErrorCode::invalid_argument, "check_ucor needs m >= 1");
  return run_trials(degree_id("ucor", m), trials, seed, jobs, [m](std::size_t, TrialRng& rng) {
    std::vector<Rational> c(m);
    for (unsigned i = 0; i < m; ++i) {
      const Rational u = rng.chance(5) ? Rational(0) : rng.nonnegative();
      c[i] = (i + 1) % 2 == 0 ? u : -u;
    }
    if (rng.chance(4)) c[m - 1] = 0;
    const auto sigma = phi_exp_monic(c).sigma;
    const Inputs in{{"m", show(m)}, {"c", show(c)}};
    if (!in_cone(sigma)) return failure(in, show(sigma), "(-1)^j sigma_j >= 0");
    const bool boundary_in = c[m - 1].is_zero();
    if (boundary_in != on_cone_boundary(sigma))
      return failure(in, show(sigma),
                     boundary_in ? "image on the boundary" : "image in the interior");
    if (boundary_in) return pass({"boundary input with c_m = 0"});
    // Same point in the P(0) = 1 convention.
    const auto unit_in = switch_convention(c);
    const auto unit_sigma = phi_exp(unit_in).sigma;
    if (!in_cone(unit_sigma))
      return failure({{"m", show(m)}, {"unit c", show(unit_in)}}, show(unit_sigma),
                     "(-1)^j sigma_j >= 0");
    return pass();
  });
}

CheckReport check_descartes(unsigned m, std::size_t trials, std::uint64_t seed, unsigned jobs) {
  if (m < 1) fail(ErrorCode::invalid_argument, "check_descartes needs m >= 1");
  return run_trials(degree_id("descartes", m), trials, seed, jobs,
                    [m](std::size_t, TrialRng& rng) {
    const auto planted = static_cast<unsigned>(rng.integer(0, m));
    const RatPoly p = random_monic_with_positive_roots(rng, m, planted);
    const unsigned k = count_positive_roots(p);
    const Inputs in{{"P", show(p)}};
    if (k < planted)
      return failure(in, "constructed " + show(k) + " positive roots", "at least " + show(planted));
    const unsigned bound = descartes_truncation_bound(p);
    const auto g = gammas_upto(p, bound + m);
    for (unsigned j = bound; j <= bound + m; ++j)
      if (g[j].sign() <= 0)
        return failure(in, "gamma_" + show(j) + " = " + show(g[j]), "positive past the bound");
    const std::vector<Rational> head(g.begin(), g.begin() + bound + 1);
    const unsigned changes = sign_changes(head);
    if (changes < k)
      return failure(in, show(changes) + " sign changes", "at least " + show(k));
    return pass({"positive roots " + std::to_string(k)});
  });
}

CheckReport check_descartescor(unsigned m, std::size_t trials, std::uint64_t seed,
                               unsigned jobs) {
  if (m < 1) fail(ErrorCode::invalid_argument, "check_descartescor needs m >= 1");
  return run_trials(degree_id("descartescor", m), trials, seed, jobs,
                    [m](std::size_t, TrialRng& rng) {
    const auto planted = static_cast<unsigned>(rng.integer(0, m));
    RatPoly p = random_monic_with_positive_roots(rng, m, planted);
    if (p.coeff(0).is_zero()) p += RatPoly::constant(rng.positive());
    const unsigned bound = descartes_truncation_bound(p);
    const unsigned k = sign_changes(gammas_upto(p, bound));
    const std::vector<Rational> unit = switch_convention(monic_tail(p));
    const Inputs in{{"P", show(p)}};
    const Decomposition dec = phi_exp(unit, true);
    std::vector<double> negatives;
    double most_negative = 0.0;
    for (double v : real_roots(dec.roots, 1e-8))
      if (v < 0) {
        negatives.push_back(v);
        most_negative = std::min(most_negative, v);
      }
    const auto intervals = static_cast<std::size_t>(std::ceil(-most_negative)) + 2;
    std::vector<std::optional<double>> lower;
    std::vector<double> upper;
    for (std::size_t l = 0; l < intervals; ++l) {
      lower.emplace_back(-static_cast<double>(l) - 1);
      upper.push_back(-static_cast<double>(l));
    }
    const std::size_t matched = max_interval_matching(negatives, lower, upper, 1e-8);
    if (matched < k)
      return failure(in, "a = " + show(dec.roots) + ", matched " + std::to_string(matched),
                     "at least " + show(k) + " in distinct intervals");
    std::vector<std::string> tags{"sign changes " + std::to_string(k)};
    std::sort(negatives.begin(), negatives.end());
    for (std::size_t i = 1; i < negatives.size(); ++i) {
      const double v = negatives[i];
      if (std::abs(v - negatives[i - 1]) <= 1e-8 * std::max(1.0, std::abs(v)) &&
          std::abs(v - std::round(v)) <= 1e-8 * std::max(1.0, std::abs(v))) {
        tags.emplace_back("repeated a at a shared endpoint");
        break;
      }
    }
    return pass(std::move(tags));
  });
}

CheckReport check_xiprop(std::size_t trials, std::uint64_t seed, unsigned degree_max,
                         unsigned jobs) {
  return run_trials("xiprop", trials, seed, jobs, [degree_max](std::size_t, TrialRng& rng) {
    const auto d = static_cast<unsigned>(rng.integer(1, degree_max));
    RatPoly p = RatPoly::constant(1);
    Rational last;
    for (unsigned i = 0; i < d; ++i) {
      const Rational r = (i > 0 && rng.chance(3)) ? last : rng.positive();
      p *= RatPoly::linear(-r);
      last = r;
    }
    const RatPoly xi = xi_transform(p);
    const auto verdict = is_hyperbolic(xi);
    const unsigned positive = sturm_count(xi, RealBound::at(0), RealBound::pos_infinity());
    if (verdict.hyperbolic && verdict.distinct && positive == d) return pass();
    return failure({{"P", show(p)}}, "Xi[P] = " + show(xi) + ", distinct positive roots " +
                                         show(positive),
                   show(d) + " distinct positive roots");
  });
}

CheckReport check_iter(const RatPoly& p, unsigned long max_nu) {
  if (p.degree() < 1) fail(ErrorCode::invalid_argument, "check_iter needs degree >= 1");
  return run_trials("iter", 1, 0, 1, [p, max_nu](std::size_t, TrialRng&) {
    const RatPoly monic = make_monic(p);
    const auto n = static_cast<std::size_t>(monic.degree());
    const Inputs in{{"P", show(monic)}, {"max_nu", std::to_string(max_nu)}};
    const Rational constant = monic.coeff(0);
    RatPoly cur = monic;
    unsigned long nu0 = 0;
    while (!alternates(descending(cur), n)) {
      if (nu0 == max_nu)
        return failure(in, "no alternation up to nu = " + std::to_string(max_nu),
                       "alternation from some nu_0");
      cur = xi_transform(cur);
      ++nu0;
      if (cur.coeff(0) != constant)
        return failure(in, "constant term changed at nu = " + std::to_string(nu0),
                       show(constant));
    }
    std::vector<std::vector<Rational>> history;
    for (unsigned step = 0; step <= 20; ++step) {
      const auto desc = descending(cur);
      const std::string at = "nu = " + std::to_string(nu0 + step);
      if (!alternates(desc, n)) return failure(in, "alternation lost at " + at, "persists");
      if (desc[n] != constant) return failure(in, "constant term changed at " + at, show(constant));
      history.push_back(desc);
      cur = xi_transform(cur);
    }
    for (std::size_t s = 1; s < n; ++s)
      for (std::size_t i = history.size() - 10; i < history.size(); ++i) {
        const Rational before = (history[i - 1][s] / history[i - 1][s - 1]).abs();
        const Rational now = (history[i][s] / history[i][s - 1]).abs();
        if (!(now > before))
          return failure(in, "|c_s/c_{s-1}| not increasing at s = " + std::to_string(s) +
                                 ", nu = " + std::to_string(nu0 + i),
                         "strictly increasing");
      }
    return pass({"nu0 " + std::string(nu0 < 10 ? "< 10" : nu0 < 100 ? "< 100" : ">= 100")});
  });
}

CheckReport check_iter(std::size_t trials, std::uint64_t seed, unsigned degree_max,
                       unsigned long max_nu, unsigned jobs) {
  return run_trials("iter", trials, seed, jobs,
                    [degree_max, max_nu](std::size_t, TrialRng& rng) {
    const RatPoly p = random_monic(rng, static_cast<unsigned>(rng.integer(1, degree_max)));
    CheckReport one = check_iter(p, max_nu);
    if (one.passed()) return TrialOutcome{std::nullopt, {}};
    return TrialOutcome{std::move(one.failures.front()), {}};
  });
}

CheckReport check_limithyp(const RatPoly& p, unsigned long max_nu) {
  if (p.degree() < 1) fail(ErrorCode::invalid_argument, "check_limithyp needs degree >= 1");
  return run_trials("limithyp", 1, 0, 1, [p, max_nu](std::size_t, TrialRng&) {
    const RatPoly monic = make_monic(p);
    const auto n = static_cast<std::size_t>(monic.degree());
    const Inputs in{{"P", show(monic)}, {"max_nu", std::to_string(max_nu)}};
    RatPoly cur = monic;
    unsigned long nu = 0;
    // Start where the leading signs alternate, then wait for distinct real roots.
    while (!alternates(descending(cur), n) || !is_hyperbolic(cur).hyperbolic ||
           !is_hyperbolic(cur).distinct) {
      if (nu == max_nu)
        return failure(in, "no distinct real roots up to nu = " + std::to_string(max_nu),
                       "eventually hyperbolic with distinct roots");
      cur = xi_transform(cur);
      ++nu;
    }
    const unsigned expected = expected_positive(monic);
    for (unsigned step = 0; step <= 20; ++step) {
      const auto v = is_hyperbolic(cur);
      const unsigned positive = count_positive_roots(cur);
      if (!v.hyperbolic || !v.distinct || positive != expected)
        return failure(in,
                       "nu = " + std::to_string(nu + step) + ": " +
                           (v.hyperbolic && v.distinct ? "" : "not distinct real, ") +
                           show(positive) + " positive",
                       "distinct real, " + show(expected) + " positive");
      cur = xi_transform(cur);
    }
    return pass({"nu " + std::string(nu < 10 ? "< 10" : nu < 100 ? "< 100" : ">= 100")});
  });
}

CheckReport check_limithyp(std::size_t trials, std::uint64_t seed, unsigned degree_max,
                           unsigned long max_nu, unsigned jobs) {
  return run_trials("limithyp", trials, seed, jobs,
                    [degree_max, max_nu](std::size_t, TrialRng& rng) {
    const RatPoly p = random_monic(rng, static_cast<unsigned>(rng.integer(1, degree_max)));
    CheckReport one = check_limithyp(p, max_nu);
    std::vector<std::string> tags;
    for (const auto& note : one.notes) tags.push_back(note.substr(0, note.rfind(':')));
    if (one.passed()) return TrialOutcome{std::nullopt, std::move(tags)};
    return TrialOutcome{std::move(one.failures.front()), {}};
  });
}

CheckReport check_notv(std::size_t trials, std::uint64_t seed) {
  return run_trials("notv", trials + 2, seed, 1, [trials](std::size_t t, TrialRng& rng) {
    if (t < trials) {
      const Rational d = rng.nonnegative(), lambda = rng.nonnegative();
      const std::vector<Rational> c{-d, lambda, -d * lambda};
      const std::vector<Rational> expected{-d - 3, lambda + d + 2, -d * lambda};
      const auto got = phi_exp_monic(c).sigma;
      if (got == expected) return pass();
      return failure({{"d", show(d)}, {"Lambda", show(lambda)}}, show(got), show(expected));
    }
    const Rational a(-2);
    if (t == trials) {
      const Rational b(1, 3), c(-2, 3);
      const bool on_p = c == a * b;
      const bool on_y = c == (a + 3) * (b + a + 1);
      if (on_p && on_y) return pass();
      return failure({{"W", "-2,1/3,-2/3"}},
                     std::string("on c=ab: ") + (on_p ? "yes" : "no") +
                         ", on Y: " + (on_y ? "yes" : "no"),
                     "on both");
    }
    // Points of Y near W with a = -2: c = (a+3)(b+a+1).
    unsigned inside = 0, outside = 0;
    for (long i = 0; i <= 40; ++i) {
      const Rational b = Rational(1, 3) + Rational(i - 20, 200);
      const std::vector<Rational> c{a, b, (a + 3) * (b + a + 1)};
      const VStatus v = region_membership(c).in_V;
      inside += v == VStatus::inside;
      outside += v == VStatus::outside;
    }
    if (inside > 0 && outside > 0)
      return pass({"scan inside " + std::to_string(inside), "scan outside " + std::to_string(outside)});
    return failure({{"a", "-2"}, {"b", "1/3 +- 1/10, 41 points"}},
                   "inside " + std::to_string(inside) + ", outside " + std::to_string(outside),
                   "both verdicts present");
  });
}

CheckReport check_xirem(std::size_t trials, std::uint64_t seed, unsigned jobs) {
  return run_trials("xirem", trials, seed, jobs, [](std::size_t, TrialRng& rng) {
    const auto m = static_cast<unsigned>(rng.integer(1, 6));
    const RatPoly p = random_monic(rng, m);
    const RatPoly xi = xi_transform(p);
    const Inputs in{{"P", show(p)}};
    // gamma_j = j! [x^j] e^x P = sum_i p_i j! / (j - i)!.
    for (unsigned j = 0; j <= m + 3; ++j) {
      Rational gamma;
      for (unsigned i = 0; i <= std::min(j, m); ++i)
        gamma += p.coeff(i) * Rational(factorial(j)) / Rational(factorial(j - i));
      if (xi(Rational(static_cast<long>(j))) != gamma)
        return failure(in, "Xi[P](" + show(j) + ") = " + show(xi(Rational(static_cast<long>(j)))),
                       show(gamma));
    }
    const Decomposition dec = phi_exp_monic(monic_tail(p), true);
    const CPoly cxi = to_complex(xi);
    for (const auto& a : dec.roots)
      if (root_residual(cxi, -a) > 1e-8)
        return failure(in, "residual " + show(root_residual(cxi, -a)) + " at -a = " +
                               show(std::vector<Complex>{-a}),
                       "<= 1e-8");
    return pass();
  });
}

CheckReport check_kappa_recursion(std::size_t trials, std::uint64_t seed, unsigned jobs) {
  return run_trials("kappa", trials, seed, jobs, [](std::size_t, TrialRng& rng) {
    const auto nonzero = [&] {
      Rational r = rng.rational();
      return r.is_zero() ? Rational(-1) : r;
    };
    // One step against exp_ssc.
    const RatExpPoly prev{RatPoly(random_list(rng, static_cast<std::size_t>(rng.integer(1, 5))))};
    const Rational a0 = nonzero();
    const RatExpPoly step = kappa_recursion_step(prev, a0);
    const RatExpPoly direct = exp_ssc(prev, kappa_factor(a0));
    if (step != direct)
      return failure({{"prev", show(prev.poly)}, {"a", show(a0)}}, show(step.poly),
                     show(direct.poly));
    // Build e^x P_m from m factors and read back e_j(1/a).
    const auto m = static_cast<unsigned>(rng.integer(1, 5));
    std::vector<Rational> a(m);
    RatExpPoly acc{RatPoly::constant(1)};
    for (auto& v : a) {
      v = nonzero();
      acc = kappa_recursion_step(acc, v);
    }
    std::vector<Rational> elem(m + 1);
    elem[0] = 1;
    for (const auto& v : a)
      for (unsigned j = m; j >= 1; --j) elem[j] += elem[j - 1] * v.inverse();
    const std::vector<Rational> expected(elem.begin() + 1, elem.end());
    const Inputs in{{"a", show(a)}};
    if (acc.poly.coeff(0) != Rational(1) || acc.poly.degree() > static_cast<long>(m))
      return failure(in, show(acc.poly), "P(0) = 1, degree <= m");
    if (acc.poly.degree() < static_cast<long>(m)) return pass({"degree deficient product"});
    std::vector<Rational> c;
    for (unsigned i = 1; i <= m; ++i) c.push_back(acc.poly.coeff(i));
    const auto sigma = phi_exp(c).sigma;
    if (sigma != expected) return failure(in, show(sigma), show(expected));
    return pass();
  });
}

}  // namespace szego
