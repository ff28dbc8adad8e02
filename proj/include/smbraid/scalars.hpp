#pragma once

// Exact scalars: arbitrary-precision rationals and Laurent polynomials in one
// variable t over the rationals.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "smbraid/error.hpp"

namespace smbraid {

using Integer = mpz_class;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

inline long parse_long(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body) || body.size() > 18) throw parse_error("bad integer '" + std::string(s) + "'");
  return std::stol(std::string(s));
}

}  // namespace detail

/// Rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw domain_error("zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const Integer& z) : v_(z) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Accepts `p` or `p/q` with optional leading sign.
  static Rational parse(std::string_view text) {
    auto s = detail::trim(text);
    std::string_view body = s;
    bool neg = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      neg = body.front() == '-';
      body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      throw parse_error("bad rational '" + std::string(text) + "'");
    Integer n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    if (neg) n = -n;
    return Rational(mpq_class(n, d));
  }

  const mpq_class& value() const { return v_; }
  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return v_ == 1; }

  std::string str() const { return v_.get_str(); }

  Rational inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rational pow(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) return pow(x.inverse(), -e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.value().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.value().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(num, den));
}

/// Sparse Laurent polynomial sum c_k t^k; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<long, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Rational& c, long exponent) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
  }
  static LaurentPoly t() { return monomial(Rational(1), 1); }

  /// Accepts `c1*t^e1 + c2*t^e2 + ...`; also the shorthands `t`, `-t`,
  /// `t^e`, `c*t` and bare rational constants.
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  Rational constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  long min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  long max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(long exponent, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Units of Q[t, 1/t] are exactly the nonzero monomials.
  bool is_unit() const { return is_monomial(); }

  LaurentPoly inverse() const {
    if (!is_unit()) throw domain_error("Laurent polynomial " + str() + " is not a unit");
    auto [k, c] = *terms_.begin();
    return monomial(c.inverse(), -k);
  }

  /// Canonical text: descending exponents, `c*t^e` terms joined by ` + `.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += it->second.str() + "*t^" + std::to_string(it->first);
    }
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

 private:
  Terms terms_;
};

inline LaurentPoly pow(const LaurentPoly& x, long e) {
  if (e < 0) return pow(x.inverse(), -e);
  LaurentPoly result(Rational(1)), base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

inline LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw parse_error("empty Laurent polynomial");

  // Split on top-level signs; a sign right after '^' belongs to the exponent.
  std::vector<std::string> pieces;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    bool is_sign = ch == '+' || ch == '-';
    bool in_exponent = i > 0 && s[i - 1] == '^';
    bool after_sign = i > 0 && (s[i - 1] == '+' || s[i - 1] == '-');
    if (is_sign && !in_exponent && !cur.empty() && !after_sign) {
      pieces.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  pieces.push_back(cur);

  LaurentPoly result;
  for (std::string piece : pieces) {
    // `+ -1*t^-1` style pieces carry two signs.
    bool neg = false;
    std::size_t pos = 0;
    while (pos < piece.size() && (piece[pos] == '+' || piece[pos] == '-')) {
      if (piece[pos] == '-') neg = !neg;
      ++pos;
    }
    std::string_view body = std::string_view(piece).substr(pos);
    if (body.empty()) throw parse_error("bad Laurent term in '" + std::string(text) + "'");

    Rational coeff(1);
    long exponent = 0;
    auto tpos = body.find('t');
    if (tpos == std::string_view::npos) {
      coeff = Rational::parse(body);
    } else {
      std::string_view head = body.substr(0, tpos);
      std::string_view tail = body.substr(tpos + 1);
      if (!head.empty()) {
        if (head.back() == '*') head.remove_suffix(1);
        coeff = Rational::parse(head);
      }
      if (tail.empty()) {
        exponent = 1;
      } else if (tail.front() == '^') {
        exponent = detail::parse_long(tail.substr(1));
      } else {
        throw parse_error("bad Laurent term '" + std::string(body) + "'");
      }
    }
    result.add_term(exponent, neg ? -coeff : coeff);
  }
  return result;
}

/// Exact scalar: a rational number or a Laurent polynomial in t.
///
/// Values are kept canonical: a Laurent polynomial that is constant is stored
/// as a Rational, so structural equality is mathematical equality and the text
/// form of a scalar is unique.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long v) : v_(Rational(v)) {}            // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r) : v_(r) {}           // NOLINT(google-explicit-constructor)
  Scalar(const LaurentPoly& p) { assign(p); }    // NOLINT(google-explicit-constructor)

  static Scalar t() { return Scalar(LaurentPoly::t()); }

  /// Rational text (`p/q`) or Laurent text (anything mentioning `t`).
  static Scalar parse(std::string_view text) {
    auto s = detail::trim(text);
    if (s.find('t') != std::string_view::npos) return Scalar(LaurentPoly::parse(s));
    return Scalar(Rational::parse(s));
  }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_laurent() const { return std::holds_alternative<LaurentPoly>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  LaurentPoly laurent() const {
    if (is_rational()) return LaurentPoly(rational());
    return std::get<LaurentPoly>(v_);
  }

  bool is_zero() const { return is_rational() && rational().is_zero(); }
  bool is_one() const { return is_rational() && rational().is_one(); }
  bool is_unit() const { return is_rational() ? !rational().is_zero() : std::get<LaurentPoly>(v_).is_unit(); }

  Scalar inverse() const {
    if (is_rational()) return Scalar(rational().inverse());
    return Scalar(std::get<LaurentPoly>(v_).inverse());
  }

  std::string str() const {
    return is_rational() ? rational().str() : std::get<LaurentPoly>(v_).str();
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rational() + b.rational());
    return Scalar(a.laurent() + b.laurent());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rational() - b.rational());
    return Scalar(a.laurent() - b.laurent());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rational() * b.rational());
    if (a.is_zero() || b.is_zero()) return Scalar(0);
    return Scalar(a.laurent() * b.laurent());
  }
  friend Scalar operator-(const Scalar& a) {
    if (a.is_rational()) return Scalar(-a.rational());
    return Scalar(-std::get<LaurentPoly>(a.v_));
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  void assign(const LaurentPoly& p) {
    if (p.is_constant())
      v_ = p.constant_term();
    else
      v_ = p;
  }

  std::variant<Rational, LaurentPoly> v_;
};

/// Exact power; negative exponents require a unit, and 0^0 = 1.
inline Scalar pow(const Scalar& x, long e) {
  if (e == 0) return Scalar(1);
  if (e < 0 && !x.is_unit()) throw domain_error("negative power of non-unit " + x.str());
  if (x.is_rational()) return Scalar(pow(x.rational(), e));
  return Scalar(pow(x.laurent(), e));
}

inline Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

/// p! / (i! j! k!) for i + j + k = p.
inline Integer multinomial_coeff(unsigned long p, unsigned long i, unsigned long j, unsigned long k) {
  if (i + j + k != p) throw domain_error("multinomial indices must sum to p");
  return factorial(p) / (factorial(i) * factorial(j) * factorial(k));
}

}  // namespace smbraid

template <>
struct std::hash<smbraid::Scalar> {
  std::size_t operator()(const smbraid::Scalar& s) const { return std::hash<std::string>{}(s.str()); }
};
