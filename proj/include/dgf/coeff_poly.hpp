#pragma once

// Exact coefficient ring: sparse integer polynomials in the edge marker w and
// the feature marker u, plus the Numeric specialization where both markers are
// fixed to integers.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dgf {

using BigInt = mpz_class;

/// One monomial c * w^w_exp * u^u_exp.
struct Term {
  std::uint32_t w_exp = 0;
  std::uint32_t u_exp = 0;
  BigInt coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.w_exp == b.w_exp && a.u_exp == b.u_exp && a.coeff == b.coeff;
  }
};

/// Sparse polynomial in w and u with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted lexicographically on (w_exp, u_exp) and never hold a
/// zero coefficient, so structural equality is polynomial equality.
class CoeffPoly {
 public:
  CoeffPoly() = default;
  CoeffPoly(long c);  // NOLINT(google-explicit-constructor): integers embed into the ring
  CoeffPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  /// Builds from arbitrary terms: sorts, merges equal exponents, drops zeros.
  static CoeffPoly from_terms(std::vector<Term> terms);
  static CoeffPoly monomial(BigInt c, std::uint32_t w_exp, std::uint32_t u_exp);
  static CoeffPoly w() { return monomial(1, 1, 0); }
  static CoeffPoly u() { return monomial(1, 0, 1); }

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool depends_on_u() const;
  BigInt constant_term() const { return coeff(0, 0); }
  BigInt coeff(std::uint32_t w_exp, std::uint32_t u_exp) const;

  /// Highest power of w (0 for the zero polynomial).
  std::uint32_t deg_w() const;
  std::uint32_t deg_u() const;

  CoeffPoly operator-() const;
  CoeffPoly& operator+=(const CoeffPoly& other);
  CoeffPoly& operator-=(const CoeffPoly& other);
  CoeffPoly& operator*=(const CoeffPoly& other);
  CoeffPoly& operator*=(const BigInt& scalar);

  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);

  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;
};

CoeffPoly poly_add(const CoeffPoly& a, const CoeffPoly& b);
CoeffPoly poly_mul(const CoeffPoly& a, const CoeffPoly& b);

/// The expanded polynomial (1+w)^k. Results are cached; safe for concurrent use.
const CoeffPoly& one_plus_w_pow(std::uint64_t k);

/// p(w, u + delta), fully expanded.
CoeffPoly poly_subst_u(const CoeffPoly& p, long delta);

/// p(w_value, u_value).
BigInt poly_eval(const CoeffPoly& p, const BigInt& w_value, const BigInt& u_value);

/// p(w, u_value): partial evaluation keeping w symbolic.
CoeffPoly poly_eval_u(const CoeffPoly& p, const BigInt& u_value);

/// Renders as a sorted sum, e.g. "1 + 2*w + w^2" or "u^2 + 2*w*u".
std::string to_string(const CoeffPoly& p);

std::ostream& operator<<(std::ostream& os, const CoeffPoly& p);

/// How coefficients are represented: full polynomials in (w, u), or integers
/// obtained by fixing w and u.
class CoeffMode {
 public:
  static CoeffMode polynomial() { return CoeffMode{}; }
  static CoeffMode numeric(long w_value, long u_value) {
    CoeffMode m;
    m.numeric_ = true;
    m.w_value_ = w_value;
    m.u_value_ = u_value;
    return m;
  }

  bool is_numeric() const { return numeric_; }
  long w_value() const { return w_value_; }
  long u_value() const { return u_value_; }

  /// Maps a polynomial into this mode: identity for Polynomial, evaluation at
  /// (w_value, u_value) for Numeric.
  CoeffPoly lift(const CoeffPoly& p) const;

  /// (1+w)^k in this mode.
  CoeffPoly shift_factor(std::uint64_t k) const;

  /// Multiplies p in place by (1+w)^k.
  void apply_shift(CoeffPoly& p, std::uint64_t k) const;
  /// Numeric mode only: multiplies value in place by (1+w_value)^k.
  void apply_shift(BigInt& value, std::uint64_t k) const;

  std::string describe() const;

  friend bool operator==(const CoeffMode&, const CoeffMode&) = default;

 private:
  bool numeric_ = false;
  long w_value_ = 0;
  long u_value_ = 0;
};

}  // namespace dgf
