#include "check_util.hpp"

#include <cmath>
#include <sstream>

namespace szego::detail {

std::string show(const std::vector<Complex>& v) {
  std::ostringstream os;
  os.precision(12);
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i].real() << (v[i].imag() < 0 ? "" : "+") << v[i].imag() << "i";
  return os.str();
}

std::string show(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::vector<Rational> random_list(TrialRng& rng, std::size_t count) {
  std::vector<Rational> v(count);
  for (auto& x : v) x = rng.rational();
  return v;
}

RatPoly random_positive_root_free(TrialRng& rng, unsigned degree) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Rational> c = random_list(rng, degree);
    const RatPoly p = monic_from_tail(c);
    if (count_positive_roots(p) == 0) return p;
  }
  // Fallback: all roots real and nonpositive.
  RatPoly p = RatPoly::constant(1);
  for (unsigned i = 0; i < degree; ++i) p *= RatPoly::linear(rng.nonnegative());
  return p;
}

RatPoly random_monic_with_positive_roots(TrialRng& rng, unsigned degree, unsigned positive) {
  RatPoly p = random_positive_root_free(rng, degree - positive);
  Rational last;
  for (unsigned i = 0; i < positive; ++i) {
    const Rational r = (i > 0 && rng.chance(4)) ? last : rng.positive();
    p *= RatPoly::linear(-r);
    last = r;
  }
  return p;
}

std::vector<Rational> monic_tail(const RatPoly& p) {
  auto desc = to_descending(p, static_cast<std::size_t>(p.degree()));
  return {desc.begin() + 1, desc.end()};
}

std::vector<double> real_roots(const std::vector<Complex>& roots, double tol) {
  std::vector<double> out;
  for (const auto& z : roots)
    if (std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z))) out.push_back(z.real());
  return out;
}

bool in_cone(const std::vector<Rational>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int expected = (i + 1) % 2 == 0 ? 1 : -1;
    if (v[i].sign() == -expected) return false;
  }
  return true;
}

bool on_cone_boundary(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x.is_zero()) return true;
  return false;
}

}  // namespace szego::detail
