#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "bautin/delay_system.hpp"

namespace bautin {

using Complex = std::complex<double>;

// Axis-aligned rectangle in the complex plane.
struct Rect {
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;

  double width() const { return re_max - re_min; }
  double height() const { return im_max - im_min; }
  Complex center() const { return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)}; }
  bool contains(Complex z, double slack = 0.0) const {
    return z.real() >= re_min - slack && z.real() <= re_max + slack &&
           z.imag() >= im_min - slack && z.imag() <= im_max + slack;
  }
};

// Where to look for characteristic roots. A delay system has finitely many
// roots to the right of any vertical line but there is no universal bound,
// so the window is configuration-exposed.
struct ScanWindow {
  double sigma_max = 0.0;  // Re in [-sigma_max, sigma_max]
  double omega_max = 0.0;  // Im in [-im_pad, omega_max]; conjugates inferred

  static ScanWindow defaults_for(double r) { return {5.0 / r, 20.0 * M_PI / r}; }
  Rect band(double r) const { return {-sigma_max, sigma_max, -0.02 / r, omega_max}; }
};

// Characteristic matrix machinery at a fixed (system, alpha):
//   Delta(lambda) = lambda I - A - exp(-lambda r) B.
class CharFunction {
 public:
  CharFunction(const DelaySystem& sys, const ParamPoint& alpha);

  int dim() const { return n_; }
  double delay() const { return r_; }
  const Eigen::MatrixXd& A() const { return A_; }
  const Eigen::MatrixXd& B() const { return B_; }

  Eigen::MatrixXcd matrix(Complex lambda) const;        // Delta(lambda)
  Eigen::MatrixXcd matrix_deriv(Complex lambda) const;  // Delta'(lambda) = I + r e^{-lr} B

  Complex det(Complex lambda) const;
  Complex det_deriv(Complex lambda) const;  // d/dlambda det Delta, via Jacobi's formula

  // Magnitude scale of det Delta near lambda, used for relative tolerances.
  double det_scale(Complex lambda) const;
  double deriv_scale(Complex lambda) const;

  // Newton iteration on det Delta; returns the polished root.
  // Throws NotARootError when it fails to reach |det| <= tol * det_scale.
  Complex newton(Complex lambda0, double tol = 1e-12, int max_iter = 60) const;

 private:
  int n_;
  double r_;
  Eigen::MatrixXd A_, B_;
  double coef_scale_;
};

struct CharRoot {
  Complex lambda;
  double residual = 0.0;  // |det Delta(lambda)|
  bool simple = true;
  int multiplicity = 1;  // >1 for unresolved clusters
};

// Number of roots of det Delta inside rect, with multiplicity, by the
// winding number of det Delta along the boundary.
// Throws BoundaryRootError when |det| dips below a safe floor on the contour.
int count_roots(const CharFunction& f, const Rect& rect);
int count_roots(const DelaySystem& sys, const ParamPoint& alpha, const Rect& rect);

// Locates every root in `rect` by recursive bisection of the argument
// principle count plus Newton polish. Roots are sorted by (Re, Im).
std::vector<CharRoot> locate_roots(const CharFunction& f, const Rect& rect);

// The leading eigenvalue pair: the member with Im > 0 of the rightmost
// simple conjugate pair in the scan window.
CharRoot find_leading_pair(const DelaySystem& sys, const ParamPoint& alpha,
                           const ScanWindow& window);
CharRoot find_leading_pair(const DelaySystem& sys, const ParamPoint& alpha);

struct H1Report {
  bool holds = false;
  bool have_pair = false;
  CharRoot lambda1;         // valid when have_pair
  double mu = 0.0;          // Re lambda1
  double omega = 0.0;       // Im lambda1
  double margin = 0.0;      // max Re among the other roots found
  std::vector<CharRoot> others;
  std::string failure;      // empty when holds
};

// Verifies hypothesis H1 at one parameter point: exactly one simple
// conjugate pair with Re >= -delta, everything else strictly below -delta.
H1Report check_H1(const DelaySystem& sys, const ParamPoint& alpha, double delta,
                  const ScanWindow& window);
H1Report check_H1(const DelaySystem& sys, const ParamPoint& alpha);

}  // namespace bautin
