#include "salemtwist/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "salemtwist/error.hpp"

namespace salemtwist {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial t_poly() { return IntPolynomial::monomial(1, 1); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

const mpz_class& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::zero_polynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + mpq_class(*it);
  }
  acc.canonicalize();
  return acc;
}

int IntPolynomial::sign_at(const mpq_class& x) const {
  if (coeffs_.empty()) return 0;
  // den^d * p(num/den), evaluated homogeneously in integers.
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0;
  mpz_class den_power = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_power;
    den_power *= den;
  }
  return sgn(acc);
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reflected() const {
  IntPolynomial r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<mpz_class> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(r));
}

bool IntPolynomial::is_palindromic() const {
  return !coeffs_.empty() && std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::normalized() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (sgn(leading()) < 0) g = -g;
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 't';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPolynomial parse() {
    IntPolynomial result;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += term(sign);
      skip_space();
    }
    return result;
  }

 private:
  IntPolynomial term(int sign) {
    mpz_class coeff = 1;
    bool have_number = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = mpz_class(digits());
      have_number = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 't') fail("expected 't' after '*'");
      }
    }
    std::size_t exponent = 0;
    if (!at_end() && peek() == 't') {
      ++pos_;
      exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        exponent = std::stoul(digits());
      }
    } else if (!have_number) {
      fail("expected a term");
    }
    return IntPolynomial::monomial(coeff * sign, exponent);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::parse_error, "polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial IntPolynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::zero_polynomial, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const mpz_class lc = abs(b.leading());
  const int db = b.degree();
  std::vector<mpz_class> r = a.coefficients();
  int dr = a.degree();
  int steps = a.degree() - db + 1;
  while (dr >= db && dr >= 0) {
    mpz_class factor = r[static_cast<std::size_t>(dr)];
    if (sgn(b.leading()) < 0) factor = -factor;
    for (auto& c : r) c *= lc;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(dr - db + i)] -= factor * b.coefficients()[static_cast<std::size_t>(i)];
    --steps;
    while (dr >= 0 && sgn(r[static_cast<std::size_t>(dr)]) == 0) --dr;
  }
  IntPolynomial rem(std::move(r));
  // Pad to the full multiplier so the result is the textbook prem.
  for (; steps > 0; --steps) rem *= lc;
  return rem;
}

Division divide(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw Error(ErrorCode::zero_polynomial, "division by the zero polynomial");
  Division out;
  if (p.degree() < q.degree()) {
    out.remainder = p;
    out.exact = p.is_zero();
    out.complete = true;
    return out;
  }
  std::vector<mpz_class> r = p.coefficients();
  std::vector<mpz_class> quot(static_cast<std::size_t>(p.degree() - q.degree() + 1));
  const int dq = q.degree();
  const mpz_class& lc = q.leading();
  for (int d = p.degree(); d >= dq; --d) {
    const mpz_class& top = r[static_cast<std::size_t>(d)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      out.quotient = IntPolynomial(std::move(quot));
      out.remainder = IntPolynomial(std::move(r));
      out.exact = false;
      return out;
    }
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    quot[static_cast<std::size_t>(d - dq)] = f;
    for (int i = 0; i <= dq; ++i) r[static_cast<std::size_t>(d - dq + i)] -= f * q.coefficients()[static_cast<std::size_t>(i)];
  }
  out.quotient = IntPolynomial(std::move(quot));
  out.remainder = IntPolynomial(std::move(r));
  out.exact = out.remainder.is_zero();
  out.complete = true;
  return out;
}

IntPolynomial poly_divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
  Division d = divide(p, q);
  if (!d.exact) {
    throw Error(ErrorCode::inexact_division, "(" + q.to_string() + ") does not divide (" + p.to_string() + ")");
  }
  return d.quotient;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.normalized();
  IntPolynomial y = b.normalized();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).normalized();
    x = std::move(y);
    y = std::move(r);
  }
  return x.normalized();
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::zero_polynomial, "square-free part of the zero polynomial");
  if (p.degree() <= 0) return IntPolynomial{1};
  IntPolynomial g = gcd(p, p.derivative());
  return poly_divide_exact(p.normalized(), g).normalized();
}

bool equal_up_to_sign(const IntPolynomial& a, const IntPolynomial& b) { return a == b || a == -b; }

}  // namespace salemtwist
