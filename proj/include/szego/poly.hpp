#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "szego/rational.hpp"

namespace szego {

using Complex = std::complex<double>;

inline bool scalar_is_zero(const Rational& v) { return v.is_zero(); }
inline bool scalar_is_zero(const Complex& v) { return v == Complex{}; }

/// Degree reported for the zero polynomial. Compare against it explicitly;
/// never do arithmetic with it.
inline constexpr long kZeroDegree = std::numeric_limits<long>::min();

/// Dense univariate polynomial, coefficients ascending by power. The stored
/// vector never ends in a zero, so the zero polynomial is the empty vector.
template <class T>
class Poly {
 public:
  using scalar_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
  static Poly monomial(const T& c, std::size_t power) {
    std::vector<T> v(power + 1, T{});
    v[power] = c;
    return Poly(std::move(v));
  }
  /// x + root_shift, i.e. the linear factor with root -root_shift.
  static Poly linear(const T& root_shift) { return Poly({root_shift, T{1}}); }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
  }
  /// Coefficient of x^i; zero past the degree.
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T{}; }
  T leading() const { return coeffs_.empty() ? T{} : coeffs_.back(); }

  template <class U>
  U eval(const U& x) const {
    U acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + U(*it);
    return acc;
  }
  T operator()(const T& x) const { return eval<T>(x); }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      d[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, T{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && scalar_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RatPoly = Poly<Rational>;
using CPoly = Poly<Complex>;

template <class T>
Poly<T> pow(const Poly<T>& base, unsigned exponent) {
  Poly<T> result = Poly<T>::constant(T{1});
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

/// The function e^x * poly(x). Its Taylor series is sum_j gamma_j x^j / j!.
template <class T>
struct ExpPoly {
  Poly<T> poly;

  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;
};

using RatExpPoly = ExpPoly<Rational>;
using CExpPoly = ExpPoly<Complex>;

/// gamma_j = j! [x^j](e^x P) = sum_i p_i * j(j-1)...(j-i+1).
template <class T>
T taylor_gamma(const ExpPoly<T>& f, unsigned j) {
  T acc{};
  T falling{1};
  const auto& c = f.poly.coeffs();
  for (std::size_t i = 0; i < c.size() && i <= j; ++i) {
    acc += c[i] * falling;
    falling *= T(static_cast<long>(j - i));
  }
  return acc;
}

/// Inverse of the gamma map: the unique P with deg P <= gammas.size()-1 whose
/// e^x P has the given gamma_0..gamma_d. Uses p_i = (forward difference
/// Delta^i gamma)_0 / i!.
template <class T>
Poly<T> poly_from_gammas(std::span<const T> gammas) {
  std::vector<T> diff(gammas.begin(), gammas.end());
  std::vector<T> out(gammas.size(), T{});
  T fact{1};
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (i > 0) fact *= T(static_cast<long>(i));
    out[i] = diff[0] / fact;
    for (std::size_t r = 0; r + 1 < diff.size() - i; ++r)
      diff[r] = diff[r + 1] - diff[r];
  }
  return Poly<T>(std::move(out));
}

CPoly to_complex(const RatPoly& p);

/// Builds a polynomial from descending coefficients [lead, ..., constant].
RatPoly from_descending(std::span<const Rational> desc);
std::vector<Rational> to_descending(const RatPoly& p, std::size_t degree);

/// x^n + c_1 x^{n-1} + ... + c_n.
RatPoly monic_from_tail(std::span<const Rational> c);
/// 1 + c_1 x + ... + c_m x^m.
RatPoly unit_from_tail(std::span<const Rational> c);

/// Euclidean division; throws invalid_argument when divisor is zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);
/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);
RatPoly make_monic(const RatPoly& p);

/// Newton-form interpolation through distinct nodes, exact.
RatPoly interpolate(std::span<const Rational> nodes,
                    std::span<const Rational> values);

/// Falling-factorial transform: replaces each x^i by x(x-1)...(x-i+1).
RatPoly xi_transform(const RatPoly& p);
RatPoly xi_iterate(const RatPoly& p, unsigned long nu);

}  // namespace szego
