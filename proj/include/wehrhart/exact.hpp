#pragma once

// Exact arithmetic substrate: big rationals, univariate Laurent polynomials
// with rational coefficients, Lagrange interpolation, and polynomials in z
// whose coefficients are Laurent polynomials in y.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wehrhart/error.hpp"

namespace wehrhart {

using Integer = boost::multiprecision::cpp_int;
/// Always canonical: positive denominator, reduced, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// num/den in canonical form; den may be negative but not zero.
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

namespace detail {

inline int checked_add(int a, int b) {
  int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::ExponentOverflow,
                "exponent overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline int checked_neg(int a) {
  if (a == std::numeric_limits<int>::min()) {
    throw Error(ErrorKind::ExponentOverflow, "exponent overflow negating " + std::to_string(a));
  }
  return -a;
}

inline int checked_mul(int a, int b) {
  int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::ExponentOverflow,
                "exponent overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

inline std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

}  // namespace detail

/// Univariate Laurent polynomial with rational coefficients. The variable is
/// anonymous; it plays y for weights, z for Ehrhart polynomials, and t or s
/// for g- and h-polynomials. Zero coefficients are never stored, so equality
/// of canonical forms is polynomial equality.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(Rational constant) { add_term(0, std::move(constant)); }  // NOLINT
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}        // NOLINT

  static LaurentPoly monomial(Rational coeff, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, std::move(coeff));
    return p;
  }
  /// The variable itself.
  static LaurentPoly var() { return monomial(1, 1); }

  /// Builds sum_i coeffs[i] * x^(i + lowest).
  static LaurentPoly from_coefficients(const std::vector<Rational>& coeffs, int lowest = 0) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      p.add_term(detail::checked_add(lowest, static_cast<int>(i)), coeffs[i]);
    }
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::optional<int> min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<int> max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  /// True when no negative exponents occur.
  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  /// Evaluates at a nonzero rational point (or any point if no negative exponents).
  Rational evaluate(const Rational& x) const {
    Rational out = 0;
    for (const auto& [e, c] : terms_) {
      if (e < 0 && x == 0) {
        throw Error(ErrorKind::Inconsistent, "evaluating a negative power at zero");
      }
      Rational power = 1;
      const Rational base = e >= 0 ? x : Rational(1) / x;
      for (int k = 0; k < (e >= 0 ? e : -e); ++k) power *= base;
      out += c * power;
    }
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(detail::checked_add(ea, eb), ca * cb);
    }
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplication by x^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(detail::checked_add(e, k), c);
    return out;
  }

  LaurentPoly pow(unsigned exponent) const {
    LaurentPoly result = 1;
    LaurentPoly base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  /// p(x) -> p(c * x^k) for an integer k (k may be negative or zero).
  LaurentPoly substitute_monomial(const Rational& c, int k) const {
    LaurentPoly out;
    for (const auto& [e, coef] : terms_) {
      Rational scale = 1;
      for (int i = 0; i < (e >= 0 ? e : -e); ++i) scale *= c;
      if (e < 0) scale = Rational(1) / scale;
      out.add_term(detail::checked_mul(e, k), coef * scale);
    }
    return out;
  }

  /// Ascending exponents; x^{k} written with braces for every power other than 1.
  std::string to_string(std::string_view variable = "y") const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += detail::rational_to_string(mag);
        continue;
      }
      if (mag != 1) out += detail::rational_to_string(mag) + "*";
      out += variable;
      if (e != 1) out += "^{" + std::to_string(e) + "}";
    }
    return out;
  }

 private:
  void add_term(int exponent, Rational c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// (a + b*x)^d with d >= 0, the recurring (1+y)^d and (-1-y)^d factors.
inline LaurentPoly linear_power(const Rational& a, const Rational& b, unsigned d) {
  return (LaurentPoly(a) + LaurentPoly::monomial(b, 1)).pow(d);
}

/// y -> 1/y. An involution.
inline LaurentPoly substitute_reciprocal(const LaurentPoly& p) { return p.substitute_monomial(1, -1); }

/// Unique polynomial of degree <= degree_bound through the samples, by exact
/// Lagrange interpolation.
inline LaurentPoly interpolate_univariate(std::span<const std::pair<std::int64_t, Rational>> samples,
                                         std::size_t degree_bound) {
  if (samples.size() != degree_bound + 1) {
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(degree_bound + 1) + " samples, got " +
                                              std::to_string(samples.size()));
  }
  std::set<std::int64_t> seen;
  for (const auto& s : samples) {
    if (!seen.insert(s.first).second) {
      throw Error(ErrorKind::DuplicateNode, "node " + std::to_string(s.first) + " repeats");
    }
  }
  LaurentPoly result;
  const LaurentPoly x = LaurentPoly::var();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].second == 0) continue;
    LaurentPoly basis = 1;
    Rational denom = 1;
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (j == i) continue;
      basis *= x - LaurentPoly(Rational(samples[j].first));
      denom *= Rational(samples[i].first - samples[j].first);
    }
    result += basis * LaurentPoly(samples[i].second / denom);
  }
  return result;
}

/// Polynomial in z whose coefficients are Laurent polynomials in y; entry k is
/// the coefficient of z^k. Trailing zero coefficients are trimmed.
class WeightedEhrhartPoly {
 public:
  WeightedEhrhartPoly() = default;
  explicit WeightedEhrhartPoly(std::vector<LaurentPoly> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  /// Lifts a polynomial in z with rational coefficients (constant in y).
  static WeightedEhrhartPoly from_z_polynomial(const LaurentPoly& pz) {
    if (!pz.is_polynomial()) {
      throw Error(ErrorKind::Inconsistent, "z-polynomial has negative powers: " + pz.to_string("z"));
    }
    std::vector<LaurentPoly> coeffs;
    if (auto top = pz.max_exponent()) coeffs.resize(static_cast<std::size_t>(*top) + 1);
    for (const auto& [e, c] : pz.terms()) coeffs[static_cast<std::size_t>(e)] = LaurentPoly(c);
    return WeightedEhrhartPoly(std::move(coeffs));
  }

  const std::vector<LaurentPoly>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree in z; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  LaurentPoly coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : LaurentPoly(); }
  LaurentPoly constant_term() const { return coeff(0); }

  /// Sum_k coeff_k * z^k at an integer z (negative values allowed).
  LaurentPoly evaluate(std::int64_t z) const {
    LaurentPoly out;
    Integer power = 1;
    for (const auto& c : coeffs_) {
      if (power != 0) out += c * LaurentPoly(Rational(power));
      power *= z;
    }
    return out;
  }

  WeightedEhrhartPoly& operator+=(const WeightedEhrhartPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
  }
  friend WeightedEhrhartPoly operator+(WeightedEhrhartPoly a, const WeightedEhrhartPoly& b) { return a += b; }
  friend WeightedEhrhartPoly operator-(const WeightedEhrhartPoly& a, const WeightedEhrhartPoly& b) {
    return a + (b * LaurentPoly(-1));
  }
  /// Scaling by a Laurent polynomial in y.
  friend WeightedEhrhartPoly operator*(const WeightedEhrhartPoly& a, const LaurentPoly& scale) {
    std::vector<LaurentPoly> coeffs;
    coeffs.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) coeffs.push_back(c * scale);
    return WeightedEhrhartPoly(std::move(coeffs));
  }
  friend WeightedEhrhartPoly operator*(const LaurentPoly& scale, const WeightedEhrhartPoly& a) { return a * scale; }

  friend bool operator==(const WeightedEhrhartPoly& a, const WeightedEhrhartPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Coefficient table, one line per power of z.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k > 0) out += '\n';
      out += "z^" + std::to_string(k) + ": " + coeffs_[k].to_string("y");
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<LaurentPoly> coeffs_;
};

}  // namespace wehrhart
