#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "utp/rational.hpp"

namespace utp {

// Univariate polynomial with exact rational coefficients, constant term
// first. Canonical form strips trailing zeros; the zero polynomial is the
// empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Rational& v) { return Poly({v}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // degree of the zero polynomial is reported as 0
  int degree() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }

  Rational eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  // p(t) -> p(t + d), exact via binomial expansion. Used when a segment's
  // local time origin moves: the remainder of a split segment and the
  // mergeability test both need it.
  Poly shift_origin(const Rational& d) const {
    if (c_.empty() || d.is_zero()) return *this;
    std::vector<Rational> out(c_.size(), Rational(0));
    // accumulate c_k * (t + d)^k
    std::vector<Rational> pw{Rational(1)};  // (t+d)^k coefficients
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (k > 0) {
        std::vector<Rational> next(pw.size() + 1, Rational(0));
        for (std::size_t i = 0; i < pw.size(); ++i) {
          next[i] += pw[i] * d;
          next[i + 1] += pw[i];
        }
        pw = std::move(next);
      }
      if (c_[k].is_zero()) continue;
      for (std::size_t i = 0; i < pw.size(); ++i) out[i] += c_[k] * pw[i];
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (!s.empty()) s += " + ";
      s += c_[k].str();
      if (k == 1) s += "*t";
      if (k > 1) s += "*t^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace utp
