#include "klr/laurent.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "klr/errors.hpp"

namespace klr {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

int checked_exp_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent exponent overflow");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly::LaurentPoly(const Terms& terms) {
  for (auto [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, Coeff c) {
  LaurentPoly f;
  f.add_term(exponent, c);
  return f;
}

LaurentPoly LaurentPoly::q_integer(int n) {
  if (n < 0) throw InvalidInput("q-integer of negative argument");
  LaurentPoly f;
  for (int e = n - 1; e >= 1 - n; e -= 2) f.add_term(e, 1);
  return f;
}

LaurentPoly LaurentPoly::q_factorial(int n) {
  LaurentPoly f(1);
  for (int j = 2; j <= n; ++j) f *= q_integer(j);
  return f;
}

Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw InvalidInput("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw InvalidInput("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (auto [ea, ca] : a.terms_) {
    for (auto [eb, cb] : b.terms_) out.add_term(checked_exp_add(ea, eb), checked_mul(ca, cb));
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out;
  for (auto [e, c] : a.terms_) out.add_term(e, checked_mul(c, -1));
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.terms_.emplace(checked_exp_add(e, k), c);
  return out;
}

LaurentPoly bar(const LaurentPoly& f) {
  LaurentPoly out;
  for (auto [e, c] : f.terms()) out.add_term(-e, c);
  return out;
}

bool is_bar_symmetric(const LaurentPoly& f) { return bar(f) == f; }

ParityElem parity_project(const LaurentPoly& f) {
  ParityElem p;
  for (auto [e, c] : f.terms()) {
    Coeff& slot = (e % 2 == 0) ? p.even : p.odd;
    slot = checked_add(slot, c);
  }
  return p;
}

Coeff eval_at_one(const LaurentPoly& f) {
  Coeff sum = 0;
  for (auto [e, c] : f.terms()) sum = checked_add(sum, c);
  return sum;
}

bool is_pure_parity(const LaurentPoly& f, Parity p) {
  for (auto [e, c] : f.terms()) {
    if (Parity(e) != p || c < 0) return false;
  }
  return true;
}

bool has_nonnegative_coefficients(const LaurentPoly& f) {
  for (auto [e, c] : f.terms()) {
    if (c < 0) return false;
  }
  return true;
}

bool in_q_N_q(const LaurentPoly& f) {
  return has_nonnegative_coefficients(f) && (f.is_zero() || f.min_exponent() >= 1);
}

LaurentPoly divide_exact(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw InvalidInput("division by zero polynomial");
  LaurentPoly rem = dividend;
  LaurentPoly quot;
  const int top = divisor.max_exponent();
  const int span = top - divisor.min_exponent();
  const Coeff lead = divisor.coeff(top);
  while (!rem.is_zero()) {
    const int rtop = rem.max_exponent();
    if (rtop - rem.min_exponent() < span || rem.coeff(rtop) % lead != 0) {
      throw ConsistencyError("inexact division: (" + to_string(dividend) + ") / (" +
                             to_string(divisor) + ")");
    }
    const auto term = LaurentPoly::monomial(rtop - top, rem.coeff(rtop) / lead);
    quot += term;
    rem -= term * divisor;
  }
  return quot;
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto [e, c] : f.terms()) {
    const Coeff mag = c < 0 ? -c : c;
    if (c < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += 'q';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s += ch;
  }
  auto fail = [&]() -> LaurentPoly {
    throw InvalidInput("malformed Laurent polynomial: '" + std::string(text) + "'");
  };
  if (s.empty()) return fail();
  if (s == "0") return {};

  LaurentPoly out;
  std::size_t pos = 0;
  auto read_int = [&](long long& value) {
    const char* begin = s.data() + pos;
    auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == begin) return false;
    pos = static_cast<std::size_t>(ptr - s.data());
    return true;
  };
  while (pos < s.size()) {
    Coeff sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      return fail();
    }
    long long mag = 1;
    bool has_digits = pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    if (has_digits && !read_int(mag)) return fail();
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        long long e = 0;
        if (!read_int(e)) return fail();
        exponent = static_cast<int>(e);
      }
    } else if (!has_digits) {
      return fail();
    }
    out.add_term(exponent, sign * mag);
  }
  return out;
}

std::vector<std::pair<int, Coeff>> to_pairs(const LaurentPoly& f) {
  return {f.terms().begin(), f.terms().end()};
}

LaurentPoly from_pairs(const std::vector<std::pair<int, Coeff>>& pairs) {
  LaurentPoly out;
  for (auto [e, c] : pairs) out.add_term(e, c);
  return out;
}

}  // namespace klr
