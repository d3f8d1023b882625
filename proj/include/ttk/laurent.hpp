#ifndef TTK_LAURENT_HPP
#define TTK_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ttk/errors.hpp"

namespace ttk {

using Int = boost::multiprecision::cpp_int;
using Exp = std::int64_t;

// Exact Laurent polynomial in one variable t over arbitrary-precision
// integers.  Invariant: no zero coefficient is ever stored, so the zero
// polynomial is the empty map and equality is equality of maps.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(Int c);
  static LaurentPoly monomial(Int c, Exp e);
  // t^1
  static LaurentPoly variable() { return monomial(1, 1); }
  // t^e - 1, the cyclotomic-product building block of the torus formulas
  static LaurentPoly power_minus_one(Exp e);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp, Int>& terms() const { return terms_; }
  Int coeff(Exp e) const;

  // min/max stored exponent; throws invalid_input on the zero polynomial
  Exp min_exp() const;
  Exp max_exp() const;
  Exp span() const { return max_exp() - min_exp(); }

  // multiply by t^k
  LaurentPoly shifted(Exp k) const;

  // value at t = 1 or t = -1 (the only unit evaluations the artifact needs;
  // negative exponents are well defined there)
  Int eval_at_one() const;
  Int eval_at_minus_one() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  void add_term(Exp e, const Int& c);

 private:
  std::map<Exp, Int> terms_;
};

// Exact quotient q with q*b == a; throws inexact_division when b does not
// divide a over Z[t, t^-1], invalid_input when b is zero.
LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b);

// The unique unit multiple +-t^k * p whose exponent range is centered
// (min = -max for even span, min = -max + 1 for odd span) and whose leading
// coefficient is positive.  Equality up to units becomes literal equality of
// normalized forms.  Throws invalid_input on the zero polynomial.
LaurentPoly normalize_symmetric(const LaurentPoly& p);

// "t^-1 - 1 + t" style, ascending exponents
std::string to_string(const LaurentPoly& p);

}  // namespace ttk

#endif
