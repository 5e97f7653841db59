#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skein {

/// Exponent pair (a-degree, z-degree) of a monomial in Z[a^{+-1}, z^{+-1}].
struct Monomial {
  int a = 0;
  int z = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Exact two-variable Laurent polynomial with integer coefficients.
///
/// Zero coefficients are never stored, so structural equality of the term
/// maps is polynomial equality.
class LaurentPoly2 {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<Monomial, Coeff>;

  LaurentPoly2() = default;
  LaurentPoly2(Coeff constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_[{0, 0}] = constant;
  }

  static LaurentPoly2 monomial(Coeff coeff, int a_exp, int z_exp) {
    LaurentPoly2 p;
    if (coeff != 0) p.terms_[{a_exp, z_exp}] = coeff;
    return p;
  }

  /// The variable a.
  static LaurentPoly2 a() { return monomial(1, 1, 0); }
  static LaurentPoly2 z() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(int a_exp, int z_exp) const {
    auto it = terms_.find({a_exp, z_exp});
    return it == terms_.end() ? 0 : it->second;
  }

  LaurentPoly2& operator+=(const LaurentPoly2& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly2& operator-=(const LaurentPoly2& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  LaurentPoly2& operator*=(const LaurentPoly2& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend LaurentPoly2 operator+(LaurentPoly2 lhs, const LaurentPoly2& rhs) { return lhs += rhs; }
  friend LaurentPoly2 operator-(LaurentPoly2 lhs, const LaurentPoly2& rhs) { return lhs -= rhs; }
  friend LaurentPoly2 operator-(const LaurentPoly2& p) {
    LaurentPoly2 r;
    for (const auto& [m, c] : p.terms_) r.terms_[m] = -c;
    return r;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
    LaurentPoly2 r;
    for (const auto& [m1, c1] : lhs.terms_)
      for (const auto& [m2, c2] : rhs.terms_) r.add_term({m1.a + m2.a, m1.z + m2.z}, c1 * c2);
    return r;
  }

  /// Multiplies by coeff * a^a_exp * z^z_exp.
  LaurentPoly2 shifted(Coeff coeff, int a_exp, int z_exp) const {
    LaurentPoly2 r;
    if (coeff == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_[{m.a + a_exp, m.z + z_exp}] = c * coeff;
    return r;
  }

  LaurentPoly2 pow(unsigned n) const {
    LaurentPoly2 result(1);
    LaurentPoly2 base = *this;
    while (n > 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n > 0) base *= base;
    }
    return result;
  }

  /// p(a, z) -> p(a^-1, -z); the HOMFLY-PT value of the mirror image.
  LaurentPoly2 mirrored() const {
    LaurentPoly2 r;
    for (const auto& [m, c] : terms_) r.terms_[{-m.a, m.z}] = (m.z % 2 == 0) ? c : -c;
    return r;
  }

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;
  friend bool operator<(const LaurentPoly2& l, const LaurentPoly2& r) { return l.terms_ < r.terms_; }

  /// Canonical text form: terms ordered by z-degree ascending, then a-degree
  /// descending; each term is `<coeff>*a^<p>*z^<q>` with zero exponents
  /// omitted. Non-leading negative terms are joined with ` - `.
  std::string to_string() const;

  /// Inverse of to_string(). Also accepts `+ -c*...` joins.
  static LaurentPoly2 parse(std::string_view text);

 private:
  void add_term(const Monomial& m, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Largest z-exponent of a nonzero polynomial.
inline int z_degree(const LaurentPoly2& p) {
  if (p.is_zero()) throw std::domain_error("z_degree of the zero polynomial");
  int best = p.terms().begin()->first.z;
  for (const auto& [m, c] : p.terms()) best = std::max(best, m.z);
  return best;
}

/// One-variable integer polynomial in z, coefficient i of z^i.
struct ZPoly {
  std::vector<LaurentPoly2::Coeff> coeffs;

  int degree() const { return coeffs.empty() ? -1 : static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const ZPoly&, const ZPoly&) = default;
};

/// Substitutes a := 1, giving the Conway polynomial of a HOMFLY-PT value.
inline ZPoly specialize_conway(const LaurentPoly2& p) {
  std::map<int, LaurentPoly2::Coeff> by_z;
  for (const auto& [m, c] : p.terms()) by_z[m.z] += c;
  ZPoly out;
  for (const auto& [zexp, c] : by_z) {
    if (c == 0) continue;
    if (zexp < 0)
      throw std::domain_error("negative z-exponent survives a=1; not a link polynomial");
    if (out.coeffs.size() <= static_cast<std::size_t>(zexp)) out.coeffs.resize(zexp + 1, 0);
    out.coeffs[zexp] = c;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace detail {

inline void append_term(std::string& out, LaurentPoly2::Coeff coeff, const Monomial& m) {
  out += std::to_string(coeff);
  if (m.a != 0) out += "*a^" + std::to_string(m.a);
  if (m.z != 0) out += "*z^" + std::to_string(m.z);
}

}  // namespace detail

inline std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Coeff>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    if (l.first.z != r.first.z) return l.first.z < r.first.z;
    return l.first.a > r.first.a;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    if (first) {
      detail::append_term(out, c, m);
      first = false;
    } else if (c < 0) {
      out += " - ";
      detail::append_term(out, -c, m);
    } else {
      out += " + ";
      detail::append_term(out, c, m);
    }
  }
  return out;
}

inline LaurentPoly2 LaurentPoly2::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad polynomial text '" + std::string(text) + "': " + why);
  };
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.empty()) fail("empty");
  if (s == "0") return {};

  LaurentPoly2 result;
  std::size_t pos = 0;
  auto read_int = [&]() -> long long {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail("expected integer at offset " + std::to_string(start));
    return std::stoll(s.substr(start, pos - start));
  };

  int sign = 1;
  bool first = true;
  while (pos < s.size()) {
    if (!first) {
      if (s[pos] == '+') {
        sign = 1;
      } else if (s[pos] == '-') {
        sign = -1;
      } else {
        fail("expected '+' or '-' between terms");
      }
      ++pos;
    }
    first = false;
    Coeff coeff = read_int() * sign;
    Monomial m;
    while (pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos + 1 >= s.size() || s[pos + 1] != '^') fail("expected a^ or z^");
      char var = s[pos];
      pos += 2;
      int e = static_cast<int>(read_int());
      if (var == 'a') {
        m.a += e;
      } else if (var == 'z') {
        m.z += e;
      } else {
        fail(std::string("unknown variable '") + var + "'");
      }
    }
    result.add_term(m, coeff);
    sign = 1;
  }
  return result;
}

}  // namespace skein
