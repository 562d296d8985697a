#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bautin/alpha_poly.hpp"

namespace bautin {

// One monomial of the nonlinearity, contributing
//   coef(alpha) * prod_i x_i^kx[i] * prod_i y_i^ky[i]
// to component `eq` of f, where x = x(t) and y = x(t - r).
// Equation indices are 0-based internally, 1-based in config files.
struct FTerm {
  int eq = 0;
  AlphaPoly coef;
  std::vector<int> kx, ky;

  int degree() const;
};

// The nonlinearity f frozen at one parameter point: an exact polynomial
// in the 2n variables (x, y), total degrees 2..5.
class TaylorF {
 public:
  struct Mono {
    int eq = 0;
    double c = 0.0;
    std::vector<int> kx, ky;
  };

  TaylorF() = default;
  TaylorF(int n, std::vector<Mono> monos);

  int dim() const { return n_; }
  bool empty() const { return monos_.empty(); }
  const std::vector<Mono>& monomials() const { return monos_; }

 private:
  int n_ = 0;
  std::vector<Mono> monos_;
};

// The full problem datum:
//   x'(t) = A(alpha) x(t) + B(alpha) x(t - r) + f(x(t), x(t - r), alpha)
// with polynomial entries in alpha and polynomial f of degrees 2..5.
class DelaySystem {
 public:
  DelaySystem(int n, double r, std::vector<std::vector<AlphaPoly>> a_entries,
              std::vector<std::vector<AlphaPoly>> b_entries, std::vector<FTerm> f_terms);

  // Parses the JSON configuration document (see README for the format).
  static DelaySystem parse(const std::string& text);
  static DelaySystem parse_file(const std::string& path);

  // Serializes to the normalized JSON form; parse(serialize()) == *this.
  std::string serialize() const;

  int dim() const { return n_; }
  double delay() const { return r_; }

  Eigen::MatrixXd eval_A(const ParamPoint& alpha) const;
  Eigen::MatrixXd eval_B(const ParamPoint& alpha) const;
  TaylorF taylor_f(const ParamPoint& alpha) const;

  const std::vector<FTerm>& f_terms() const { return f_terms_; }
  const AlphaPoly& a_entry(int i, int j) const { return a_[i][j]; }
  const AlphaPoly& b_entry(int i, int j) const { return b_[i][j]; }

 private:
  int n_;
  double r_;
  std::vector<std::vector<AlphaPoly>> a_, b_;
  std::vector<FTerm> f_terms_;
};

}  // namespace bautin
