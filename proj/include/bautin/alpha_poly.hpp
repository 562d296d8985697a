#pragma once

#include <vector>

namespace bautin {

// A point in the two-dimensional parameter plane.
struct ParamPoint {
  double a1 = 0.0;
  double a2 = 0.0;
};

// Real polynomial in the parameters (a1, a2).
//
// Terms are normalized on construction: sorted by (i, j), duplicate
// monomials merged, exact zeros dropped.
class AlphaPoly {
 public:
  struct Term {
    double c = 0.0;  // coefficient
    int i = 0;       // exponent of a1
    int j = 0;       // exponent of a2
  };

  AlphaPoly() = default;
  explicit AlphaPoly(std::vector<Term> terms);

  static AlphaPoly constant(double c);

  double eval(const ParamPoint& p) const;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const AlphaPoly& other) const;

 private:
  std::vector<Term> terms_;
};

}  // namespace bautin
