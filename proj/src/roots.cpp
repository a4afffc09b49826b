#include "szego/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace szego {

namespace {

int sign_at(const RatPoly& p, const RealBound& b) {
  if (p.is_zero()) return 0;
  switch (b.kind) {
    case RealBound::Kind::pos_inf:
      return p.leading().sign();
    case RealBound::Kind::neg_inf:
      return (p.degree() % 2 == 0 ? 1 : -1) * p.leading().sign();
    case RealBound::Kind::finite:
      return p(b.value).sign();
  }
  return 0;
}

unsigned variations(const std::vector<RatPoly>& chain, const RealBound& b) {
  unsigned count = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign_at(q, b);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

bool ordered(const RealBound& lo, const RealBound& hi) {
  if (lo.kind == RealBound::Kind::pos_inf || hi.kind == RealBound::Kind::neg_inf) return false;
  if (lo.kind == RealBound::Kind::finite && hi.kind == RealBound::Kind::finite)
    return lo.value < hi.value;
  return true;
}

// Positive rescaling keeps the Sturm signs and stops coefficient blow-up.
RatPoly normalize_positive(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p * p.leading().abs().inverse();
}

}  // namespace

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  if (p.is_zero()) fail(ErrorCode::invalid_argument, "Sturm sequence of the zero polynomial");
  std::vector<RatPoly> chain{square_free_part(p)};
  chain.push_back(normalize_positive(chain.front().derivative()));
  while (!chain.back().is_zero()) {
    const RatPoly rem = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(normalize_positive(-rem));
  }
  chain.pop_back();
  return chain;
}

unsigned sturm_count(const RatPoly& p, const RealBound& lo, const RealBound& hi) {
  if (!ordered(lo, hi)) return 0;
  const auto chain = sturm_sequence(p);
  return variations(chain, lo) - variations(chain, hi);
}

unsigned sturm_count_multiplicity(const RatPoly& p, const RealBound& lo,
                                  const RealBound& hi) {
  if (p.is_zero()) fail(ErrorCode::invalid_argument, "root count of the zero polynomial");
  unsigned total = 0;
  const auto factors = square_free_factorization(p);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].degree() > 0)
      total += static_cast<unsigned>(i + 1) * sturm_count(factors[i], lo, hi);
  return total;
}

RatPoly square_free_part(const RatPoly& p) {
  if (p.is_zero()) return p;
  return make_monic(divmod(p, gcd(p, p.derivative())).first);
}

std::vector<RatPoly> square_free_factorization(const RatPoly& p) {
  if (p.is_zero()) fail(ErrorCode::invalid_argument, "factorization of the zero polynomial");
  std::vector<RatPoly> out;
  const RatPoly f = make_monic(p);
  if (f.degree() == 0) return out;
  const RatPoly a0 = gcd(f, f.derivative());
  RatPoly b = divmod(f, a0).first;
  RatPoly c = divmod(f.derivative(), a0).first;
  RatPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RatPoly a = gcd(b, d);
    out.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

HyperbolicVerdict is_hyperbolic(const RatPoly& p) {
  if (p.is_zero()) fail(ErrorCode::invalid_argument, "hyperbolicity of the zero polynomial");
  HyperbolicVerdict v;
  const RatPoly g = gcd(p, p.derivative());
  v.distinct = g.degree() <= 0;
  const RatPoly sf = square_free_part(p);
  if (sf.degree() <= 0) {
    v.hyperbolic = true;
    return v;
  }
  v.hyperbolic = sturm_count(sf, RealBound::neg_infinity(), RealBound::pos_infinity()) ==
                 static_cast<unsigned>(sf.degree());
  return v;
}

double root_residual(const CPoly& p, Complex z) {
  Complex acc{};
  double weight = 0.0;
  const double az = std::abs(z);
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * z + c[i];
    weight = weight * az + std::abs(c[i]);
  }
  return weight == 0.0 ? 0.0 : std::abs(acc) / weight;
}

std::vector<Complex> aberth_roots(const CPoly& p, const AberthOptions& opts) {
  if (p.degree() < 1) fail(ErrorCode::invalid_argument, "aberth_roots needs degree >= 1");
  // Roots at the origin are split off exactly.
  std::size_t zeros = 0;
  while (p.coeffs()[zeros] == Complex{}) ++zeros;
  const CPoly q(std::vector<Complex>(p.coeffs().begin() + static_cast<long>(zeros),
                                     p.coeffs().end()));
  std::vector<Complex> roots(zeros, Complex{});
  const auto n = static_cast<std::size_t>(q.degree());
  if (n == 0) return roots;
  const auto& c = q.coeffs();
  if (n == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }

  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i] / c[n]));
  const double radius = 1.0 + bound;
  std::vector<Complex> z(n);
  for (std::size_t j = 0; j < n; ++j)
    z[j] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                  static_cast<double>(n) + 0.4);

  const double eps = std::numeric_limits<double>::epsilon();
  const double stop = 4.0 * static_cast<double>(n) * eps;
  const CPoly dq = q.derivative();
  std::vector<char> done(n, 0);
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    bool all_done = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      const Complex pz = q.eval(z[j]);
      if (root_residual(q, z[j]) <= stop) {
        done[j] = 1;
        continue;
      }
      all_done = false;
      const Complex dpz = dq.eval(z[j]);
      Complex sum{};
      for (std::size_t l = 0; l < n; ++l) {
        if (l == j) continue;
        const Complex gap = z[j] - z[l];
        if (gap != Complex{}) sum += 1.0 / gap;
      }
      if (dpz == Complex{}) {
        z[j] += Complex(eps, eps) * radius;
        continue;
      }
      const Complex ratio = pz / dpz;
      const Complex step = ratio / (1.0 - ratio * sum);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) z[j] -= step;
      else z[j] += Complex(eps, eps) * radius;
    }
    if (all_done) break;
  }

  std::vector<double> residuals(n);
  bool ok = true;
  for (std::size_t j = 0; j < n; ++j) {
    residuals[j] = root_residual(q, z[j]);
    if (!(residuals[j] <= opts.tol)) ok = false;
  }
  if (!ok)
    throw ConvergenceError("Aberth iteration did not converge within " +
                               std::to_string(opts.max_iter) + " iterations",
                           z, residuals);
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<RootCluster> cluster_roots(std::span<const Complex> roots, double rel_tol) {
  const std::size_t n = roots.size();
  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r));
  const double threshold = rel_tol * scale;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(roots[i] - roots[j]) <= threshold) parent[find(i)] = find(j);

  std::vector<RootCluster> clusters;
  std::vector<std::size_t> slot(n, n);
  std::vector<Complex> sums;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = clusters.size();
      clusters.push_back({Complex{}, 0});
      sums.emplace_back();
    }
    sums[slot[r]] += roots[i];
    ++clusters[slot[r]].multiplicity;
  }
  for (std::size_t i = 0; i < clusters.size(); ++i)
    clusters[i].center = sums[i] / static_cast<double>(clusters[i].multiplicity);
  return clusters;
}

namespace {

// A root of multiplicity m is a simple root of the (m-1)-th derivative.
Complex polish_multiple_root(const CPoly& p, Complex z, unsigned multiplicity) {
  CPoly d = p;
  for (unsigned i = 1; i < multiplicity; ++i) d = d.derivative();
  const CPoly dd = d.derivative();
  for (int iter = 0; iter < 8; ++iter) {
    const Complex slope = dd.eval(z);
    if (slope == Complex{}) break;
    const Complex step = d.eval(z) / slope;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    z -= step;
    if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

}  // namespace

std::vector<Complex> clustered_roots(const CPoly& p, const AberthOptions& opts) {
  const auto raw = aberth_roots(p, opts);
  std::vector<Complex> out;
  out.reserve(raw.size());
  for (auto c : cluster_roots(raw)) {
    if (c.multiplicity > 1) c.center = polish_multiple_root(p, c.center, c.multiplicity);
    out.insert(out.end(), c.multiplicity, c.center);
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

unsigned sign_changes(std::span<const Rational> seq) {
  unsigned count = 0;
  int last = 0;
  for (const auto& v : seq) {
    const int s = v.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

unsigned descartes_truncation_bound(const RatPoly& p) {
  if (p.is_zero()) fail(ErrorCode::invalid_argument, "truncation bound of the zero polynomial");
  const RatPoly monic = make_monic(p);
  const auto m = static_cast<std::size_t>(monic.degree());
  Rational d;
  for (std::size_t i = 0; i < m; ++i) d += monic.coeffs()[i].abs();
  return static_cast<unsigned>(d.floor().get_ui()) + static_cast<unsigned>(m) + 1;
}

std::optional<unsigned> routh_rhp_count(const RatPoly& p) {
  if (p.is_zero()) fail(ErrorCode::invalid_argument, "Routh array of the zero polynomial");
  const RatPoly q = p.leading().sign() < 0 ? -p : p;
  const auto n = static_cast<std::size_t>(q.degree());
  if (n == 0) return 0u;
  const std::size_t width = n / 2 + 1;
  std::vector<Rational> upper(width), lower(width);
  for (std::size_t j = 0; j < width; ++j) {
    if (2 * j <= n) upper[j] = q.coeff(n - 2 * j);
    if (2 * j + 1 <= n) lower[j] = q.coeff(n - 2 * j - 1);
  }
  std::vector<Rational> column{upper[0]};
  for (std::size_t row = 1; row <= n; ++row) {
    if (lower[0].is_zero()) return std::nullopt;
    column.push_back(lower[0]);
    std::vector<Rational> next(width);
    for (std::size_t j = 0; j + 1 < width; ++j)
      next[j] = (lower[0] * upper[j + 1] - upper[0] * lower[j + 1]) / lower[0];
    upper = std::move(lower);
    lower = std::move(next);
  }
  return sign_changes(column);
}

RegionVerdict region_membership(std::span<const Rational> c, CoeffConvention convention,
                                double refine_tol) {
  RegionVerdict v;
  v.in_U = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int expected = (i % 2 == 0) ? -1 : 1;  // c_{i+1}
    if (c[i].sign() != 0 && c[i].sign() != expected) v.in_U = false;
  }
  const RatPoly p = convention == CoeffConvention::monic ? monic_from_tail(c)
                                                         : unit_from_tail(c);
  v.in_Pi = is_hyperbolic(p).hyperbolic;

  // Roots of P have Re >= 0 exactly when roots of P(-x) have Re <= 0.
  std::vector<Rational> mirrored = p.coeffs();
  for (std::size_t i = 1; i < mirrored.size(); i += 2) mirrored[i] = -mirrored[i];
  const auto rhp = routh_rhp_count(RatPoly(std::move(mirrored)));
  if (rhp) {
    v.in_V = *rhp == 0 ? VStatus::inside : VStatus::outside;
    return v;
  }
  v.witnesses = clustered_roots(to_complex(p));
  bool strictly_right = true;
  v.in_V = VStatus::boundary_or_uncertain;
  for (const auto& z : v.witnesses) {
    const double scale = std::max(1.0, std::abs(z));
    if (z.real() < -refine_tol * scale) {
      v.in_V = VStatus::outside;
      return v;
    }
    if (z.real() <= refine_tol * scale) strictly_right = false;
  }
  if (strictly_right) v.in_V = VStatus::inside;
  return v;
}

}  // namespace szego
