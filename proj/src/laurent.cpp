#include "ttk/laurent.hpp"

#include <sstream>

namespace ttk {

LaurentPoly LaurentPoly::constant(Int c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(Int c, Exp e) {
  LaurentPoly p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::power_minus_one(Exp e) {
  LaurentPoly p = monomial(1, e);
  p.add_term(0, -1);
  return p;
}

Int LaurentPoly::coeff(Exp e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

Exp LaurentPoly::min_exp() const {
  if (terms_.empty()) throw invalid_input("zero polynomial has no exponents");
  return terms_.begin()->first;
}

Exp LaurentPoly::max_exp() const {
  if (terms_.empty()) throw invalid_input("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(Exp k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

Int LaurentPoly::eval_at_one() const {
  Int acc = 0;
  for (const auto& [e, c] : terms_) acc += c;
  return acc;
}

Int LaurentPoly::eval_at_minus_one() const {
  Int acc = 0;
  for (const auto& [e, c] : terms_) acc += (e % 2 == 0) ? c : -c;
  return acc;
}

void LaurentPoly::add_term(Exp e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw invalid_input("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly();

  // Shift both to ordinary polynomials with nonzero constant term; the unit
  // factor t^(shift) is restored at the end.
  const Exp shift = a.min_exp() - b.min_exp();
  LaurentPoly rem = a.shifted(-a.min_exp());
  const LaurentPoly den = b.shifted(-b.min_exp());
  const Exp den_deg = den.max_exp();
  const Int den_lead = den.coeff(den_deg);

  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exp() >= den_deg) {
    const Int lead = rem.coeff(rem.max_exp());
    if (lead % den_lead != 0)
      throw inexact_division("leading coefficient not divisible");
    LaurentPoly term = LaurentPoly::monomial(lead / den_lead,
                                             rem.max_exp() - den_deg);
    quot += term;
    rem -= term * den;
  }
  if (!rem.is_zero()) throw inexact_division("nonzero remainder");
  return quot.shifted(shift);
}

LaurentPoly normalize_symmetric(const LaurentPoly& p) {
  if (p.is_zero())
    throw invalid_input("zero polynomial cannot be normalized");
  const Exp span = p.span();
  // Even span centers exactly; odd span puts the extra exponent on top.
  const Exp target_max = (span % 2 == 0) ? span / 2 : (span + 1) / 2;
  LaurentPoly out = p.shifted(target_max - p.max_exp());
  if (out.coeff(out.max_exp()) < 0) out = -out;
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || e == 0) os << mag.str();
    if (e != 0) {
      if (mag != 1) os << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace ttk
