#include "szego/decompose.hpp"

#include <random>

#include "szego/ssc.hpp"

namespace szego {

namespace {

void require_dim(const PhiSpec& spec, std::span<const Rational> c) {
  if (spec.n == 0) fail(ErrorCode::invalid_argument, "coefficient map needs n >= 1");
  if (spec.mode == DecompMode::finite && spec.k == 0)
    fail(ErrorCode::invalid_argument, "finite coefficient map needs k >= 1");
  if (c.size() != spec.n)
    fail(ErrorCode::invalid_argument, "expected " + std::to_string(spec.n) +
                                          " coefficients, got " + std::to_string(c.size()));
}

std::vector<Rational> finite_sigma(std::span<const Rational> c, unsigned n, unsigned k) {
  const unsigned total = n + k;
  const RatPoly p = pow(RatPoly::linear(1), k) * monic_from_tail(c);
  const Rational total_r(static_cast<long>(total));
  // beta_s = prod_i ((N-s) a_i + s) / N = ((N-s)/N)^n Q(s/(N-s)), Q(t) = prod (t + a_i).
  const auto normalized = [&](unsigned s) { return p.coeff(s) / Rational(binomial(total, s)); };
  const auto node = [&](unsigned s) { return Rational(static_cast<long>(s), static_cast<long>(total - s)); };
  const auto scale = [&](unsigned s) {
    return pow(Rational(static_cast<long>(total - s)) / total_r, n);
  };
  std::vector<Rational> nodes, values;
  for (unsigned s = 0; s <= n; ++s) {
    nodes.push_back(node(s));
    values.push_back(normalized(s) / scale(s));
  }
  const RatPoly q = interpolate(nodes, values);
  if (q.degree() != static_cast<long>(n) || q.leading() != Rational(1))
    fail(ErrorCode::internal, "finite decomposition: interpolant is not monic of degree n");
  for (unsigned s = n + 1; s < total; ++s)
    if (q(node(s)) * scale(s) != normalized(s))
      fail(ErrorCode::internal, "finite decomposition: inconsistent coefficient at x^" +
                                    std::to_string(s));
  std::vector<Rational> sigma(n);
  for (unsigned j = 1; j <= n; ++j) sigma[j - 1] = q.coeff(n - j);
  return sigma;
}

RatPoly gamma_interpolant(const RatPoly& p, unsigned m) {
  const RatExpPoly f{p};
  std::vector<Rational> nodes, values;
  for (unsigned j = 0; j <= m; ++j) {
    nodes.emplace_back(static_cast<long>(j));
    values.push_back(taylor_gamma(f, j));
  }
  return interpolate(nodes, values);
}

std::vector<Rational> exp_sigma(std::span<const Rational> c, CoeffConvention convention) {
  const auto m = static_cast<unsigned>(c.size());
  std::vector<Rational> sigma(m);
  if (convention == CoeffConvention::unit_constant) {
    const RatPoly q = gamma_interpolant(unit_from_tail(c), m);
    if (q.coeff(0) != Rational(1))
      fail(ErrorCode::internal, "exp decomposition: gamma_0 != 1");
    for (unsigned j = 1; j <= m; ++j) sigma[j - 1] = q.coeff(j);
  } else {
    const RatPoly q = gamma_interpolant(monic_from_tail(c), m);
    if (q.degree() != static_cast<long>(m) || q.leading() != Rational(1))
      fail(ErrorCode::internal, "exp decomposition: interpolant is not monic of degree m");
    for (unsigned j = 1; j <= m; ++j) sigma[j - 1] = q.coeff(m - j);
  }
  return sigma;
}

void attach_roots(Decomposition& dec) {
  const RatPoly q = dec.root_polynomial();
  dec.roots.clear();
  if (q.degree() < 1) return;
  for (const auto& t : clustered_roots(to_complex(q))) dec.roots.push_back(-t);
}

// Deterministic coordinates for the affinity self-check.
Rational sample_rational(std::mt19937_64& gen) {
  const auto num = static_cast<long>(gen() % 41) - 20;
  const auto den = static_cast<long>(gen() % 7) + 1;
  return Rational(num, den);
}

}  // namespace

RatPoly Decomposition::root_polynomial() const {
  if (spec.mode == DecompMode::exp && spec.convention == CoeffConvention::unit_constant)
    return unit_from_tail(sigma);
  return monic_from_tail(sigma);
}

std::vector<Rational> phi_sigma(const PhiSpec& spec, std::span<const Rational> c) {
  require_dim(spec, c);
  if (spec.mode == DecompMode::finite) return finite_sigma(c, spec.n, spec.k);
  return exp_sigma(c, spec.convention);
}

Decomposition decompose(const PhiSpec& spec, std::span<const Rational> c, bool with_roots) {
  require_dim(spec, c);
  if (spec.mode == DecompMode::exp && spec.convention == CoeffConvention::unit_constant &&
      c.back().is_zero())
    fail(ErrorCode::domain, "degree deficient: c_m must be nonzero");
  Decomposition dec{spec, phi_sigma(spec, c), {}};
  if (with_roots) attach_roots(dec);
  return dec;
}

Decomposition phi_nk(std::span<const Rational> c, unsigned n, unsigned k, bool with_roots) {
  return decompose(PhiSpec::finite(n, k), c, with_roots);
}

Decomposition phi_exp(std::span<const Rational> c, bool with_roots) {
  return decompose(PhiSpec::exp(static_cast<unsigned>(c.size()), CoeffConvention::unit_constant),
                   c, with_roots);
}

Decomposition phi_exp_monic(std::span<const Rational> c, bool with_roots) {
  return decompose(PhiSpec::exp(static_cast<unsigned>(c.size()), CoeffConvention::monic), c,
                   with_roots);
}

std::vector<Rational> switch_convention(std::span<const Rational> c) {
  if (c.empty() || c.back().is_zero())
    fail(ErrorCode::domain, "convention switch needs a nonzero last coefficient");
  const std::size_t m = c.size();
  const Rational inv = c.back().inverse();
  std::vector<Rational> out(m);
  for (std::size_t i = 1; i <= m; ++i)
    out[i - 1] = (i == m ? Rational(1) : c[m - i - 1]) * inv;
  return out;
}

RatPoly recompose(const Decomposition& dec) {
  const PhiSpec& spec = dec.spec;
  const unsigned n = spec.n;
  if (dec.sigma.size() != n) fail(ErrorCode::invalid_argument, "sigma has the wrong length");
  if (spec.mode == DecompMode::finite) {
    const unsigned total = n + spec.k;
    const Rational denom = pow(Rational(static_cast<long>(total)), n);
    std::vector<Rational> coeffs(total + 1);
    for (unsigned s = 0; s <= total; ++s) {
      // Homogenized Q: prod_i ((N-s) a_i + s) = sum_j sigma_j (N-s)^j s^(n-j).
      Rational beta;
      for (unsigned j = 0; j <= n; ++j) {
        const Rational sig = j == 0 ? Rational(1) : dec.sigma[j - 1];
        beta += sig * pow(Rational(static_cast<long>(total - s)), j) *
                pow(Rational(static_cast<long>(s)), n - j);
      }
      coeffs[s] = Rational(binomial(total, s)) * beta / denom;
    }
    return RatPoly(std::move(coeffs));
  }
  const RatPoly q = dec.root_polynomial();
  std::vector<Rational> gammas;
  for (unsigned j = 0; j <= n; ++j) gammas.push_back(q(Rational(static_cast<long>(j))));
  return poly_from_gammas<Rational>(gammas);
}

std::vector<Rational> recompose_coeffs(const Decomposition& dec) {
  const RatPoly p = recompose(dec);
  const unsigned n = dec.spec.n;
  if (dec.spec.mode == DecompMode::finite) {
    const auto [quot, rem] = divmod(p, pow(RatPoly::linear(1), dec.spec.k));
    if (!rem.is_zero() || quot.degree() != static_cast<long>(n) || quot.leading() != Rational(1))
      fail(ErrorCode::internal, "recomposed polynomial lacks the (x+1)^k factor");
    auto desc = to_descending(quot, n);
    return {desc.begin() + 1, desc.end()};
  }
  if (dec.spec.convention == CoeffConvention::unit_constant) {
    std::vector<Rational> out;
    for (unsigned i = 1; i <= n; ++i) out.push_back(p.coeff(i));
    return out;
  }
  auto desc = to_descending(p, n);
  return {desc.begin() + 1, desc.end()};
}

CPoly recompose_from_roots(const PhiSpec& spec, std::span<const Complex> roots) {
  if (roots.empty()) fail(ErrorCode::invalid_argument, "no roots to recompose");
  if (spec.mode == DecompMode::finite) {
    const SscContext ctx{spec.n + spec.k};
    CPoly acc = k_factor<Complex>(spec.n, spec.k, roots[0]);
    for (std::size_t i = 1; i < roots.size(); ++i)
      acc = ssc_compose(acc, k_factor<Complex>(spec.n, spec.k, roots[i]), ctx);
    return acc;
  }
  const auto factor = [&](Complex a) {
    return spec.convention == CoeffConvention::unit_constant ? kappa_factor(a)
                                                             : CExpPoly{CPoly({a, Complex{1}})};
  };
  CExpPoly acc = factor(roots[0]);
  for (std::size_t i = 1; i < roots.size(); ++i) acc = exp_ssc(acc, factor(roots[i]));
  return acc.poly;
}

std::vector<Rational> AffineMap::apply(std::span<const Rational> c) const {
  if (c.size() != offset.size()) fail(ErrorCode::invalid_argument, "affine map dimension mismatch");
  std::vector<Rational> out = offset;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!c[j].is_zero()) out[i] += matrix[i][j] * c[j];
  return out;
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  const std::size_t dim = offset.size();
  AffineMap out{std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim)),
                apply(inner.offset)};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t l = 0; l < dim; ++l) out.matrix[i][j] += matrix[i][l] * inner.matrix[l][j];
  return out;
}

AffineMap extract_affine_map(const PhiSpec& spec) {
  const unsigned dim = spec.dim();
  std::vector<Rational> zero(dim);
  AffineMap map{std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim)),
                phi_sigma(spec, zero)};
  for (unsigned j = 0; j < dim; ++j) {
    std::vector<Rational> unit(dim);
    unit[j] = 1;
    const auto image = phi_sigma(spec, unit);
    for (unsigned i = 0; i < dim; ++i) map.matrix[i][j] = image[i] - map.offset[i];
  }
  std::mt19937_64 gen(0x5eed5eedULL + dim);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c(dim);
    for (auto& v : c) v = sample_rational(gen);
    if (map.apply(c) != phi_sigma(spec, c))
      fail(ErrorCode::internal, "coefficient map failed the affinity check");
  }
  return map;
}

}  // namespace szego
