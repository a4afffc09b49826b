#include "szego/poly.hpp"

#include "szego/error.hpp"

namespace szego {

CPoly to_complex(const RatPoly& p) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v.to_double(), 0.0);
  return CPoly(std::move(c));
}

RatPoly from_descending(std::span<const Rational> desc) {
  return RatPoly(std::vector<Rational>(desc.rbegin(), desc.rend()));
}

std::vector<Rational> to_descending(const RatPoly& p, std::size_t degree) {
  std::vector<Rational> out(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) out[degree - i] = p.coeff(i);
  return out;
}

RatPoly monic_from_tail(std::span<const Rational> c) {
  std::vector<Rational> asc(c.size() + 1);
  asc[c.size()] = 1;
  for (std::size_t i = 0; i < c.size(); ++i) asc[c.size() - 1 - i] = c[i];
  return RatPoly(std::move(asc));
}

RatPoly unit_from_tail(std::span<const Rational> c) {
  std::vector<Rational> asc;
  asc.reserve(c.size() + 1);
  asc.emplace_back(1);
  asc.insert(asc.end(), c.begin(), c.end());
  return RatPoly(std::move(asc));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) fail(ErrorCode::invalid_argument, "polynomial division by zero");
  if (num.degree() < den.degree()) return {RatPoly{}, num};
  std::vector<Rational> rem = num.coeffs();
  const auto dd = static_cast<std::size_t>(den.degree());
  std::vector<Rational> quot(rem.size() - dd);
  const Rational lead_inv = den.leading().inverse();
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Rational q = rem[i] * lead_inv;
    quot[i - dd] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.coeffs()[j];
  }
  rem.resize(dd);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p * p.leading().inverse();
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

RatPoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values) {
  if (nodes.size() != values.size())
    fail(ErrorCode::invalid_argument, "interpolate: node/value count mismatch");
  const std::size_t count = nodes.size();
  // Divided differences in place.
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t i = count - 1; i >= level; --i) {
      const Rational gap = nodes[i] - nodes[i - level];
      if (gap.is_zero()) fail(ErrorCode::invalid_argument, "interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  // Horner on the Newton form.
  RatPoly result;
  for (std::size_t i = count; i-- > 0;)
    result = result * RatPoly::linear(-nodes[i]) + RatPoly::constant(dd[i]);
  return result;
}

namespace {

std::vector<std::vector<Rational>> stirling_table(std::size_t max_degree) {
  std::vector<std::vector<Rational>> table;
  table.reserve(max_degree + 1);
  for (std::size_t i = 0; i <= max_degree; ++i) {
    const auto s = stirling_first(static_cast<unsigned>(i));
    table.emplace_back(s.begin(), s.end());
  }
  return table;
}

RatPoly apply_xi(const RatPoly& p, const std::vector<std::vector<Rational>>& table) {
  std::vector<Rational> out(p.coeffs().size());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= i; ++j) out[j] += c * table[i][j];
  }
  return RatPoly(std::move(out));
}

}  // namespace

RatPoly xi_transform(const RatPoly& p) {
  if (p.is_zero()) return p;
  return apply_xi(p, stirling_table(static_cast<std::size_t>(p.degree())));
}

RatPoly xi_iterate(const RatPoly& p, unsigned long nu) {
  if (p.is_zero() || nu == 0) return p;
  const auto table = stirling_table(static_cast<std::size_t>(p.degree()));
  RatPoly q = p;
  for (unsigned long i = 0; i < nu; ++i) q = apply_xi(q, table);
  return q;
}

}  // namespace szego
