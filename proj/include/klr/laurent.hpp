#pragma once

// Exact Laurent polynomials in q with int64 coefficients.
//
// Terms are kept in a sorted map with zero coefficients stripped, so
// structural equality is mathematical equality. Coefficient overflow throws
// std::overflow_error.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "klr/combinatorics.hpp"

namespace klr {

// Image of a Laurent polynomial in Z[q,q^-1]/(q^2 - 1) = Z1 + Zu.
struct ParityElem {
  std::int64_t even = 0;
  std::int64_t odd = 0;

  friend bool operator==(const ParityElem&, const ParityElem&) = default;
  ParityElem operator*(const ParityElem& o) const {
    return {even * o.even + odd * o.odd, even * o.odd + odd * o.even};
  }
};

class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  // The constant c.
  LaurentPoly(Coeff c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Terms& terms);

  // c * q^exponent
  static LaurentPoly monomial(int exponent, Coeff c = 1);
  // [n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [0] = 0.
  static LaurentPoly q_integer(int n);
  // [n]! = [1][2]...[n]; [0]! = 1.
  static LaurentPoly q_factorial(int n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  // Lowest / highest exponent; the polynomial must be nonzero.
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  // Adds c * q^exponent in place.
  void add_term(int exponent, Coeff c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);

  // Multiplication by q^k.
  LaurentPoly shifted(int k) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

// f(q) -> f(q^-1).
LaurentPoly bar(const LaurentPoly& f);
bool is_bar_symmetric(const LaurentPoly& f);

ParityElem parity_project(const LaurentPoly& f);
LaurentPoly::Coeff eval_at_one(const LaurentPoly& f);

// Every exponent with a nonzero coefficient has parity p and every
// coefficient is positive. The zero polynomial is pure of both parities.
bool is_pure_parity(const LaurentPoly& f, Parity p);

// All coefficients are >= 0.
bool has_nonnegative_coefficients(const LaurentPoly& f);
// Every exponent is >= 1 and every coefficient >= 0, i.e. f lies in qN[q].
bool in_q_N_q(const LaurentPoly& f);

// Exact division. Throws ConsistencyError when the divisor does not divide
// the dividend in Z[q,q^-1].
LaurentPoly divide_exact(const LaurentPoly& dividend, const LaurentPoly& divisor);

// Text form, ascending exponent: "q^-1+3q", "1+2q+q^2", "-q^-2", "0".
std::string to_string(const LaurentPoly& f);
// Accepts the output of to_string, plus optional spaces and '*' between
// coefficient and q.
LaurentPoly parse_laurent(std::string_view text);

// [[exponent, coefficient], ...] ascending by exponent.
std::vector<std::pair<int, LaurentPoly::Coeff>> to_pairs(const LaurentPoly& f);
LaurentPoly from_pairs(const std::vector<std::pair<int, LaurentPoly::Coeff>>& pairs);

}  // namespace klr
