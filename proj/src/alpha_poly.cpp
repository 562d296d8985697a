#include "bautin/alpha_poly.hpp"

#include <algorithm>
#include <cmath>

#include "bautin/errors.hpp"

namespace bautin {

AlphaPoly::AlphaPoly(std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.i < 0 || t.j < 0)
      throw ParseError("polynomial term has a negative exponent");
    if (!std::isfinite(t.c))
      throw ParseError("polynomial coefficient is not finite");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (const Term& t : terms) {
    if (!terms_.empty() && terms_.back().i == t.i && terms_.back().j == t.j)
      terms_.back().c += t.c;
    else
      terms_.push_back(t);
  }
  std::erase_if(terms_, [](const Term& t) { return t.c == 0.0; });
}

AlphaPoly AlphaPoly::constant(double c) {
  return AlphaPoly(c == 0.0 ? std::vector<Term>{} : std::vector<Term>{{c, 0, 0}});
}

double AlphaPoly::eval(const ParamPoint& p) const {
  double total = 0.0;
  for (const Term& t : terms_) {
    double m = t.c;
    for (int k = 0; k < t.i; ++k) m *= p.a1;
    for (int k = 0; k < t.j; ++k) m *= p.a2;
    total += m;
  }
  return total;
}

bool AlphaPoly::operator==(const AlphaPoly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].c != other.terms_[k].c || terms_[k].i != other.terms_[k].i ||
        terms_[k].j != other.terms_[k].j)
      return false;
  }
  return true;
}

}  // namespace bautin
