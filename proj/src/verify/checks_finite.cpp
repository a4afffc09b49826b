#include <algorithm>
#include <cmath>

#include "check_util.hpp"
#include "szego/ssc.hpp"

namespace szego {

using namespace detail;

namespace {

RatPoly x_plus_one_pow(unsigned k) { return pow(RatPoly::linear(1), k); }

std::string finite_id(const char* name, unsigned n, unsigned k) {
  return std::string(name) + "[n=" + std::to_string(n) + ",k=" + std::to_string(k) + "]";
}

// Composition of K_{n,k;a_i} by direct expansion of each factor.
RatPoly compose_factors(unsigned n, unsigned k, const std::vector<Rational>& a) {
  const SscContext ctx{n + k};
  RatPoly acc = x_plus_one_pow(n + k - 1) * RatPoly::linear(a[0]);
  for (std::size_t i = 1; i < a.size(); ++i)
    acc = ssc_compose(acc, x_plus_one_pow(n + k - 1) * RatPoly::linear(a[i]), ctx);
  return acc;
}

struct IntervalFamily {
  std::vector<std::optional<double>> lower;
  std::vector<double> upper;
};

// I_s = [-(s+1)/(N-1-s), -s/(N-s)], s = 0..N-1; the last one is unbounded.
IntervalFamily pitm_intervals(unsigned total) {
  IntervalFamily f;
  for (unsigned s = 0; s < total; ++s) {
    f.upper.push_back(-static_cast<double>(s) / (total - s));
    if (s + 1 < total)
      f.lower.emplace_back(-static_cast<double>(s + 1) / (total - 1 - s));
    else
      f.lower.emplace_back(std::nullopt);
  }
  return f;
}

unsigned root_multiplicity(RatPoly p, const Rational& r) {
  unsigned m = 0;
  const RatPoly lin = RatPoly::linear(-r);
  while (!p.is_zero() && p.degree() > 0) {
    auto [q, rem] = divmod(p, lin);
    if (!rem.is_zero()) break;
    p = std::move(q);
    ++m;
  }
  return m;
}

double max_abs_diff(const CPoly& a, const CPoly& b, double& scale) {
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  double diff = 0.0;
  scale = 1.0;
  for (std::size_t i = 0; i < len; ++i) {
    diff = std::max(diff, std::abs(a.coeff(i) - b.coeff(i)));
    scale = std::max(scale, std::abs(b.coeff(i)));
  }
  return diff;
}

PhiSpec random_spec(TrialRng& rng, unsigned max_dim) {
  const auto dim = static_cast<unsigned>(rng.integer(1, max_dim));
  switch (rng.below(3)) {
    case 0:
      return PhiSpec::finite(dim, static_cast<unsigned>(rng.integer(1, 4)));
    case 1:
      return PhiSpec::exp(dim, CoeffConvention::unit_constant);
    default:
      return PhiSpec::exp(dim, CoeffConvention::monic);
  }
}

std::string spec_text(const PhiSpec& s) {
  if (s.mode == DecompMode::finite)
    return "finite n=" + std::to_string(s.n) + " k=" + std::to_string(s.k);
  return std::string("exp m=") + std::to_string(s.n) +
         (s.convention == CoeffConvention::monic ? " monic" : " unit");
}

std::vector<Rational> random_coeffs(TrialRng& rng, const PhiSpec& spec) {
  std::vector<Rational> c = random_list(rng, spec.n);
  if (spec.mode == DecompMode::exp && spec.convention == CoeffConvention::unit_constant &&
      c.back().is_zero())
    c.back() = 1;
  return c;
}

// Exact Gaussian elimination.
bool invertible(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return true;
}

}  // namespace

CheckReport check_identities(unsigned k_max) {
  const std::size_t trials = 2 * static_cast<std::size_t>(k_max) + 2;
  return run_trials("identities", trials, 0, 1, [k_max](std::size_t t, TrialRng&) {
    if (t >= 2 * k_max) {
      // e^x(x+1)*e^x(x+1) and e^x(x-1)*e^x(x-1).
      const long sgn = t == 2 * k_max ? 1 : -1;
      const RatExpPoly f{RatPoly::linear(sgn)};
      const RatPoly expected = t == 2 * k_max ? RatPoly({1, 3, 1}) : RatPoly({1, -1, 1});
      const RatPoly got = exp_ssc(f, f).poly;
      if (got == expected) return pass();
      return failure({{"factor", show(f.poly)}}, show(got), show(expected));
    }
    const auto k = static_cast<unsigned>(t / 2 + 1);
    const SscContext ctx{k + 2};
    RatPoly factor, expected;
    if (t % 2 == 0) {
      factor = x_plus_one_pow(k + 1) * RatPoly::monomial(1, 1);
      expected = x_plus_one_pow(k) * RatPoly::monomial(1, 1) *
                 RatPoly::linear(Rational(1, static_cast<long>(k + 2)));
    } else {
      factor = x_plus_one_pow(k + 1) * RatPoly::linear(-1);
      const Rational mid(-2 * static_cast<long>(k), static_cast<long>(k + 2));
      expected = x_plus_one_pow(k) * RatPoly({Rational(1), mid, Rational(1)});
    }
    const RatPoly got = ssc_compose(factor, factor, ctx);
    if (got == expected) return pass();
    return failure({{"k", show(k)}, {"factor", show(factor)}}, show(got), show(expected));
  });
}

CheckReport check_roundtrip(std::size_t trials, std::uint64_t seed, unsigned jobs) {
  return run_trials("roundtrip", trials, seed, jobs, [](std::size_t, TrialRng& rng) {
    const PhiSpec spec = random_spec(rng, 6);
    const std::vector<Rational> c = random_coeffs(rng, spec);
    const Decomposition dec = decompose(spec, c);
    RatPoly expected;
    if (spec.mode == DecompMode::finite)
      expected = x_plus_one_pow(spec.k) * monic_from_tail(c);
    else if (spec.convention == CoeffConvention::unit_constant)
      expected = unit_from_tail(c);
    else
      expected = monic_from_tail(c);
    const RatPoly got = recompose(dec);
    const Inputs in{{"spec", spec_text(spec)}, {"c", show(c)}};
    if (got != expected) return failure(in, show(got), show(expected));
    const auto back = recompose_coeffs(dec);
    if (back != c) return failure(in, "coeffs " + show(back), show(c));
    return pass();
  });
}

CheckReport check_utm(unsigned n, unsigned k, std::size_t trials, std::uint64_t seed,
                      unsigned jobs) {
  if (n < 1 || k < 1) fail(ErrorCode::invalid_argument, "check_utm needs n >= 1, k >= 1");
  return run_trials(finite_id("utm", n, k), trials, seed, jobs,
                    [n, k](std::size_t, TrialRng& rng) {
    std::vector<Rational> c(n);
    for (unsigned i = 0; i < n; ++i) {
      const Rational u = rng.chance(5) ? Rational(0) : rng.nonnegative();
      c[i] = (i + 1) % 2 == 0 ? u : -u;
    }
    if (rng.chance(4)) c[n - 1] = 0;
    const auto sigma = phi_nk(c, n, k).sigma;
    const Inputs in{{"n", show(n)}, {"k", show(k)}, {"c", show(c)}};
    if (!in_cone(sigma)) return failure(in, show(sigma), "(-1)^j sigma_j >= 0");
    const bool boundary_in = c[n - 1].is_zero();
    const bool boundary_out = on_cone_boundary(sigma);
    if (boundary_in != boundary_out)
      return failure(in, show(sigma),
                     boundary_in ? "image on the boundary" : "image in the interior");
    std::vector<std::string> tags;
    if (on_cone_boundary(c)) tags.emplace_back("boundary input");
    if (boundary_in) tags.emplace_back("boundary input with c_n = 0");
    return pass(std::move(tags));
  });
}

CheckReport check_pitm(unsigned n, unsigned k, std::size_t trials, std::uint64_t seed,
                       unsigned jobs) {
  if (n < 1 || n + k < 2) fail(ErrorCode::invalid_argument, "check_pitm needs n + k >= 2");
  return run_trials(finite_id("pitm", n, k), trials, seed, jobs,
                    [n, k](std::size_t, TrialRng& rng) {
    const auto nu = static_cast<unsigned>(rng.integer(1, n));
    const RatPoly monic = random_monic_with_positive_roots(rng, n, nu);
    const std::vector<Rational> c = monic_tail(monic);
    Inputs in{{"n", show(n)}, {"k", show(k)}, {"c", show(c)}};
    const unsigned counted = count_positive_roots(monic);
    if (counted < nu)
      return failure(in, "constructed " + show(counted) + " positive roots",
                     "at least " + show(nu));
    const Decomposition dec = phi_nk(c, n, k, true);
    std::vector<double> negatives;
    for (double v : real_roots(dec.roots, 1e-8))
      if (v < 0) negatives.push_back(v);
    const IntervalFamily f = pitm_intervals(n + k);
    const std::size_t matched = max_interval_matching(negatives, f.lower, f.upper, 1e-8);
    if (matched < counted)
      return failure(in, "a = " + show(dec.roots) + ", matched " + std::to_string(matched),
                     "at least " + show(counted) + " in distinct intervals");
    std::vector<std::string> tags;
    const std::span<const std::optional<double>> bounded_lower(f.lower.data(), f.lower.size() - 1);
    const std::span<const double> bounded_upper(f.upper.data(), f.upper.size() - 1);
    if (max_interval_matching(negatives, bounded_lower, bounded_upper, 1e-8) < counted)
      tags.emplace_back("needs the unbounded interval");
    return pass(std::move(tags));
  });
}

CheckReport check_lemma1(std::size_t trials, std::uint64_t seed, unsigned jobs) {
  return run_trials("lemma1", trials, seed, jobs, [](std::size_t t, TrialRng& rng) {
    const auto n = static_cast<unsigned>(rng.integer(1, 4));
    const auto k = static_cast<unsigned>(rng.integer(1, 3));
    const unsigned total = n + k;
    const auto s = static_cast<unsigned>(rng.integer(0, total - 1));
    const Rational zero_at(-static_cast<long>(s), static_cast<long>(total - s));
    Inputs in{{"n", show(n)}, {"k", show(k)}, {"s", show(s)}};
    if (t % 2 == 0) {
      // Forward: a factor with a = -s/(N-s) kills the x^s coefficient.
      std::vector<Rational> a = random_list(rng, n);
      a[rng.below(n)] = zero_at;
      const RatPoly p = compose_factors(n, k, a);
      in.emplace_back("a", show(a));
      if (!p.coeff(s).is_zero()) return failure(in, show(p), "zero coefficient at x^s");
      return pass({"forward"});
    }
    // Converse: force [x^s]P = 0 through one c_i and locate the factor.
    std::vector<Rational> c = random_list(rng, n);
    const auto weight = [&](unsigned i) -> Rational {
      const long e = static_cast<long>(s) - static_cast<long>(n - i);
      return (e < 0 || e > static_cast<long>(k)) ? Rational(0)
                                                 : Rational(binomial(k, static_cast<unsigned>(e)));
    };
    unsigned pick = n;
    while (pick > 0 && weight(pick).is_zero()) --pick;
    if (pick == 0) fail(ErrorCode::internal, "lemma1: no adjustable coefficient");
    c[pick - 1] = 0;
    Rational rest = weight(0);
    for (unsigned i = 1; i <= n; ++i) rest += weight(i) * c[i - 1];
    c[pick - 1] = -rest / weight(pick);
    in.emplace_back("c", show(c));
    const RatPoly p = x_plus_one_pow(k) * monic_from_tail(c);
    if (!p.coeff(s).is_zero()) fail(ErrorCode::internal, "lemma1: construction failed");
    const Decomposition dec = phi_nk(c, n, k, true);
    const Rational q_value = dec.root_polynomial()(-zero_at);
    if (!q_value.is_zero())
      return failure(in, "sigma " + show(dec.sigma), "some a_i = " + show(zero_at));
    double best = 1e300;
    for (const auto& a : dec.roots) best = std::min(best, std::abs(a - Complex(zero_at.to_double())));
    if (best > 1e-8 * std::max(1.0, std::abs(zero_at.to_double())))
      return failure(in, "numerical a = " + show(dec.roots),
                     "some a_i within 1e-8 of " + show(zero_at));
    return pass({"converse"});
  });
}

CheckReport check_multiplicity(std::size_t trials, std::uint64_t seed, unsigned jobs) {
  return run_trials("multiplicity", trials, seed, jobs, [](std::size_t, TrialRng& rng) {
    const auto total = static_cast<unsigned>(rng.integer(2, 6));
    const auto ma = static_cast<unsigned>(rng.integer(1, total));
    const auto mb = static_cast<unsigned>(rng.integer(std::max(1u, total - ma), total));
    const auto nonzero = [&] {
      Rational r = rng.rational();
      return r.is_zero() ? Rational(1) : r;
    };
    const Rational xa = nonzero(), xb = nonzero();
    const auto build = [&](const Rational& root, unsigned m) {
      std::vector<Rational> u = random_list(rng, total - m + 1);
      if (u.back().is_zero()) u.back() = 1;
      return pow(RatPoly::linear(-root), m) * RatPoly(std::move(u));
    };
    const RatPoly a = build(xa, ma), b = build(xb, mb);
    const RatPoly comp = ssc_compose(a, b, SscContext{total});
    const unsigned law = ma + mb - total;
    const Inputs in{{"N", show(total)}, {"A", show(a)}, {"B", show(b)},
                    {"x_A", show(xa)}, {"x_B", show(xb)}};
    if (comp.is_zero()) return pass({"zero composition"});
    const unsigned got = root_multiplicity(comp, -xa * xb);
    if (got < law)
      return failure(in, "multiplicity " + show(got), "at least " + show(law));
    std::vector<std::string> tags;
    if (got > law) tags.emplace_back("multiplicity above m_A + m_B - N");
    return pass(std::move(tags));
  });
}

CheckReport check_derivative_identities(std::size_t trials, std::uint64_t seed,
                                        unsigned jobs) {
  return run_trials("derivative", trials, seed, jobs, [](std::size_t, TrialRng& rng) {
    const auto total = static_cast<unsigned>(rng.integer(1, 6));
    std::vector<Rational> ca = random_list(rng, total + 1), cb = random_list(rng, total + 1);
    if (ca.back().is_zero()) ca.back() = 1;
    if (rng.chance(3)) cb.back() = 0;
    const RatPoly a(std::move(ca)), b(std::move(cb));
    const auto r = ssc_derivative_identity_check(a, b, SscContext{total});
    if (r.holds()) return pass();
    return failure({{"N", show(total)}, {"A", show(a)}, {"B", show(b)}},
                   std::string("derivative rule ") + (r.derivative_rule ? "holds" : "fails") +
                       ", shift rule " + (r.shift_rule ? "holds" : "fails"),
                   "both hold");
  });
}

CheckReport check_posneg(std::span<const unsigned> k_values, const Rational& eps,
                         std::size_t random_trials, std::uint64_t seed) {
  const std::size_t per_k = 2 * k_values.size();
  const std::vector<unsigned> ks(k_values.begin(), k_values.end());
  const double e = eps.to_double();
  const auto fn = [ks, per_k, e, eps](std::size_t t, TrialRng& rng) -> TrialOutcome {
    if (t < per_k) {
      const unsigned k = ks[t / 2];
      const SscContext ctx{k + 2};
      if (t % 2 == 0) {
        const RatPoly factor = x_plus_one_pow(k + 1) * RatPoly::monomial(1, 1);
        const RatPoly expected = x_plus_one_pow(k) * RatPoly::monomial(1, 1) *
                                 RatPoly::linear(Rational(1, static_cast<long>(k + 2)));
        const RatPoly got = ssc_compose(factor, factor, ctx);
        if (got == expected) return pass();
        return failure({{"k", show(k)}}, show(got), show(expected));
      }
      // Perturbed factors (x+1)^{k+1}(x +- eps i); divide out the k-fold root at -1.
      const CPoly base = to_complex(x_plus_one_pow(k + 1));
      const CPoly plus = base * CPoly({Complex(0, e), Complex(1)});
      const CPoly minus = base * CPoly({Complex(0, -e), Complex(1)});
      CPoly rest = ssc_compose(plus, minus, ctx);
      for (unsigned i = 0; i < k; ++i) {
        std::vector<Complex> q(rest.coeffs().size() - 1);
        Complex carry{};
        for (std::size_t j = rest.coeffs().size() - 1; j >= 1; --j) {
          carry = rest.coeffs()[j] + carry;
          q[j - 1] = carry;
          carry = -carry;  // synthetic division by (x + 1)
        }
        rest = CPoly(std::move(q));
      }
      const auto roots = aberth_roots(rest);
      const Inputs in{{"k", show(k)}, {"eps", show(eps)}};
      for (const auto& z : roots)
        if (!(z.real() < 0) || std::abs(z.imag()) > 1e-6)
          return failure(in, "roots " + show(roots), "negative real (|Im| <= 1e-6)");
      return pass();
    }
    if (t == per_k) {
      const CExpPoly f{CPoly({Complex(1, e), Complex(1)})};
      const CExpPoly g{CPoly({Complex(1, -e), Complex(1)})};
      const CPoly h = exp_ssc(f, g).poly;
      const auto roots = aberth_roots(h);
      for (const auto& z : roots)
        if (h.degree() != 2 || !(z.real() < 0) || std::abs(z.imag()) > 1e-6)
          return failure({{"eps", show(eps)}}, "roots " + show(roots),
                         "two negative real roots");
      return pass();
    }
    // All a_i > 0: the composition has only negative roots.
    const auto n = static_cast<unsigned>(rng.integer(1, 4));
    const auto k = static_cast<unsigned>(rng.integer(1, 3));
    std::vector<Rational> a(n);
    for (auto& v : a) v = rng.positive();
    const RatPoly p = compose_factors(n, k, a);
    const unsigned negative =
        sturm_count_multiplicity(p, RealBound::neg_infinity(), RealBound::at(0)) -
        (p.coeff(0).is_zero() ? 1u : 0u);
    if (negative == n + k) return pass();
    return failure({{"n", show(n)}, {"k", show(k)}, {"a", show(a)}},
                   show(negative) + " negative roots of " + show(p), show(n + k));
  };
  return run_trials("posneg", per_k + 1 + random_trials, seed, 1, fn);
}

CheckReport check_affinity(std::size_t trials, std::uint64_t seed, unsigned jobs) {
  return run_trials("affinity", trials, seed, jobs, [](std::size_t, TrialRng& rng) {
    const PhiSpec spec = random_spec(rng, 5);
    const std::vector<Rational> c = random_list(rng, spec.n), d = random_list(rng, spec.n);
    const Rational lambda = rng.rational();
    std::vector<Rational> mix(spec.n);
    for (unsigned i = 0; i < spec.n; ++i) mix[i] = lambda * c[i] + (1 - lambda) * d[i];
    const auto pc = phi_sigma(spec, c), pd = phi_sigma(spec, d), pm = phi_sigma(spec, mix);
    std::vector<Rational> expected(spec.n);
    for (unsigned i = 0; i < spec.n; ++i) expected[i] = lambda * pc[i] + (1 - lambda) * pd[i];
    const Inputs in{{"spec", spec_text(spec)}, {"c", show(c)}, {"c'", show(d)},
                    {"lambda", show(lambda)}};
    if (pm != expected) return failure(in, show(pm), show(expected));
    const AffineMap map = extract_affine_map(spec);
    if (map.apply(c) != pc) return failure(in, "matrix form " + show(map.apply(c)), show(pc));
    if (!invertible(map.matrix)) return failure(in, "singular matrix", "invertible");
    return pass();
  });
}

CheckReport check_conjugates(std::size_t trials, std::uint64_t seed, unsigned jobs) {
  return run_trials("conjugates", trials, seed, jobs, [](std::size_t, TrialRng& rng) {
    const PhiSpec spec = random_spec(rng, 6);
    const std::vector<Rational> c = random_coeffs(rng, spec);
    const Decomposition dec = decompose(spec, c, true);
    const Inputs in{{"spec", spec_text(spec)}, {"c", show(c)}};
    std::vector<char> used(dec.roots.size(), 0);
    for (const auto& z : dec.roots) {
      const double tol = 1e-8 * std::max(1.0, std::abs(z));
      bool found = false;
      for (std::size_t j = 0; j < dec.roots.size() && !found; ++j)
        if (!used[j] && std::abs(std::conj(z) - dec.roots[j]) <= tol) used[j] = found = true;
      if (!found) return failure(in, "roots " + show(dec.roots), "closed under conjugation");
    }
    const CPoly numeric = recompose_from_roots(spec, dec.roots);
    const CPoly exact = to_complex(recompose(dec));
    double scale = 1.0;
    const double diff = max_abs_diff(numeric, exact, scale);
    if (diff > 1e-8 * scale)
      return failure(in, "numerical recomposition off by " + show(diff / scale),
                     "relative error <= 1e-8");
    return pass();
  });
}

CheckReport check_exploratory_pi(unsigned n, unsigned k, unsigned nu_max, std::size_t trials,
                                 std::uint64_t seed, unsigned jobs) {
  const std::string id = finite_id("exploratory_pi", n, k);
  return run_trials(id, trials, seed, jobs, [n, k, nu_max](std::size_t, TrialRng& rng) {
    std::vector<std::string> tags;
    // Iterated finite map on a point of U_n.
    std::vector<Rational> c(n);
    for (unsigned i = 0; i < n; ++i) {
      const Rational u = rng.nonnegative();
      c[i] = (i + 1) % 2 == 0 ? u : -u;
    }
    const AffineMap map = extract_affine_map(PhiSpec::finite(n, k));
    std::vector<Rational> point = c;
    unsigned first = nu_max + 1;
    for (unsigned nu = 0; nu <= nu_max; ++nu) {
      if (is_hyperbolic(monic_from_tail(point)).hyperbolic) {
        first = nu;
        break;
      }
      point = map.apply(point);
    }
    tags.push_back(first <= nu_max ? "hyperbolic from nu=" + std::to_string(first)
                                   : "not hyperbolic by nu_max");

    // The quadratic exp example: Phi^s(a, b) = (a - s b, b).
    const Rational a = -rng.positive(), b = rng.positive();
    Inputs in{{"a", show(a)}, {"b", show(b)}};
    std::vector<Rational> cur{a, b};
    int iterated_s0 = -1;
    for (unsigned s = 0; s <= 60; ++s) {
      const std::vector<Rational> closed{a - Rational(static_cast<long>(s)) * b, b};
      if (cur != closed) return failure(in, "Phi^" + show(s) + " = " + show(cur), show(closed));
      const bool hyp = is_hyperbolic(unit_from_tail(cur)).hyperbolic;
      if (hyp != (closed[0] * closed[0] >= 4 * b))
        return failure(in, "s=" + show(s) + " hyperbolic verdict", "discriminant sign");
      if (hyp && iterated_s0 < 0) iterated_s0 = static_cast<int>(s);
      cur = phi_exp(cur).sigma;
    }
    const double x = (a.to_double() + 2 * std::sqrt(b.to_double())) / b.to_double();
    if (std::abs(x - std::round(x)) < 1e-9) {
      tags.emplace_back("s0 tie skipped");
    } else if (iterated_s0 >= 0) {
      const int formula = std::max(0, static_cast<int>(std::ceil(x)));
      if (formula != iterated_s0)
        return failure(in, "iteration s0 = " + std::to_string(iterated_s0),
                       "ceil((a + 2 sqrt b) / b) = " + std::to_string(formula));
    }
    return pass(std::move(tags));
  });
}

}  // namespace szego
