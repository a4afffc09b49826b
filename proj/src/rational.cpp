#include "szego/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "szego/error.hpp"

namespace szego {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    fail(ErrorCode::parse, "malformed rational '" + std::string(whole) + "'");
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  return BigInt(text, 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::domain, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = strip(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  const BigInt num = parse_integer(strip(s.substr(0, slash)), text);
  const std::string_view den_text = strip(s.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    fail(ErrorCode::parse, "malformed rational '" + std::string(text) + "'");
  const BigInt den = parse_integer(den_text, text);
  if (den == 0) fail(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::domain, "inverse of zero");
  return Rational(value_.get_den(), value_.get_num());
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::domain, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return Rational(num, den);
}

BigInt binomial(unsigned n, unsigned s) {
  if (s > n)
    fail(ErrorCode::invalid_argument,
         "binomial(" + std::to_string(n) + ", " + std::to_string(s) + "): s > n");
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, s);
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::vector<BigInt> stirling_first(unsigned j) {
  // Multiply out x(x-1)...(x-j+1) one factor at a time.
  std::vector<BigInt> c{1};
  for (unsigned r = 0; r < j; ++r) {
    std::vector<BigInt> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * r;
    }
    c = std::move(next);
  }
  return c;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  const std::string_view s = strip(text);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    try {
      out.push_back(Rational::parse(s.substr(start, comma - start)));
    } catch (const Error& e) {
      fail(e.code(), "item " + std::to_string(out.size() + 1) + ": " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_rational_list(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].to_string();
  }
  return out;
}

}  // namespace szego
