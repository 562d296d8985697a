#include "bautin/delay_system.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "bautin/errors.hpp"

namespace bautin {

namespace {

constexpr int kMaxFDegree = 5;  // orders above this do not enter l2

using nlohmann::json;

AlphaPoly poly_from_json(const json& j, const char* where) {
  // A polynomial entry is a list of {c, i, j} terms; a bare number is
  // shorthand for a constant.
  if (j.is_number()) return AlphaPoly::constant(j.get<double>());
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected a term list or number");
  std::vector<AlphaPoly::Term> terms;
  for (const json& t : j) {
    if (!t.is_object() || !t.contains("c"))
      throw ParseError(std::string(where) + ": each term needs fields c, i, j");
    AlphaPoly::Term term;
    term.c = t.at("c").get<double>();
    term.i = t.value("i", 0);
    term.j = t.value("j", 0);
    terms.push_back(term);
  }
  return AlphaPoly(std::move(terms));
}

json poly_to_json(const AlphaPoly& p) {
  json out = json::array();
  for (const auto& t : p.terms()) out.push_back({{"c", t.c}, {"i", t.i}, {"j", t.j}});
  return out;
}

std::vector<int> exponents_from_json(const json& j, int n, const char* where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(std::string(where) + ": expected an array of " + std::to_string(n) +
                     " exponents");
  std::vector<int> k(n);
  for (int i = 0; i < n; ++i) {
    k[i] = j[i].get<int>();
    if (k[i] < 0) throw ParseError(std::string(where) + ": negative exponent");
  }
  return k;
}

std::vector<std::vector<AlphaPoly>> matrix_from_json(const json& j, int n, const char* name) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(std::string(name) + " must be an " + std::to_string(n) + "x" +
                     std::to_string(n) + " array");
  std::vector<std::vector<AlphaPoly>> m(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      throw ParseError(std::string(name) + " row " + std::to_string(i + 1) + " has wrong length");
    m[i].reserve(n);
    for (int c = 0; c < n; ++c) m[i].push_back(poly_from_json(j[i][c], name));
  }
  return m;
}

}  // namespace

int FTerm::degree() const {
  return std::accumulate(kx.begin(), kx.end(), 0) + std::accumulate(ky.begin(), ky.end(), 0);
}

TaylorF::TaylorF(int n, std::vector<Mono> monos) : n_(n), monos_(std::move(monos)) {}

DelaySystem::DelaySystem(int n, double r, std::vector<std::vector<AlphaPoly>> a_entries,
                         std::vector<std::vector<AlphaPoly>> b_entries,
                         std::vector<FTerm> f_terms)
    : n_(n), r_(r), a_(std::move(a_entries)), b_(std::move(b_entries)),
      f_terms_(std::move(f_terms)) {
  if (n_ < 1) throw ParseError("system dimension n must be >= 1");
  if (!(r_ > 0.0) || !std::isfinite(r_)) throw ParseError("delay r must be strictly positive");
  if (static_cast<int>(a_.size()) != n_ || static_cast<int>(b_.size()) != n_)
    throw ParseError("A and B must be n x n");
  for (int i = 0; i < n_; ++i)
    if (static_cast<int>(a_[i].size()) != n_ || static_cast<int>(b_[i].size()) != n_)
      throw ParseError("A and B must be n x n");
  for (FTerm& t : f_terms_) {
    if (t.eq < 0 || t.eq >= n_) throw ParseError("f term equation index out of range");
    if (static_cast<int>(t.kx.size()) != n_ || static_cast<int>(t.ky.size()) != n_)
      throw ParseError("f term exponent vectors must have length n");
    const int deg = t.degree();
    if (deg < 2)
      throw ParseError("f term of degree " + std::to_string(deg) +
                       ": f must vanish to second order at the origin");
    if (deg > kMaxFDegree)
      throw ParseError("f term of degree " + std::to_string(deg) + " exceeds the supported " +
                       std::to_string(kMaxFDegree) + "; drop it explicitly if it is irrelevant");
  }
  // Normalize: sort by (eq, kx, ky) and merge duplicate monomials.
  std::sort(f_terms_.begin(), f_terms_.end(), [](const FTerm& a, const FTerm& b) {
    if (a.eq != b.eq) return a.eq < b.eq;
    if (a.kx != b.kx) return a.kx < b.kx;
    return a.ky < b.ky;
  });
  std::vector<FTerm> merged;
  for (FTerm& t : f_terms_) {
    if (!merged.empty() && merged.back().eq == t.eq && merged.back().kx == t.kx &&
        merged.back().ky == t.ky) {
      std::vector<AlphaPoly::Term> sum = merged.back().coef.terms();
      const auto& more = t.coef.terms();
      sum.insert(sum.end(), more.begin(), more.end());
      merged.back().coef = AlphaPoly(std::move(sum));
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const FTerm& t) { return t.coef.is_zero(); });
  f_terms_ = std::move(merged);
}

DelaySystem DelaySystem::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.contains("n") || !j.contains("r"))
      throw ParseError("config must provide n and r");
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParseError("system dimension n must be >= 1");
    const double r = j.at("r").get<double>();
    auto a = matrix_from_json(j.value("A", json::array()), n, "A");
    auto b = matrix_from_json(j.value("B", json::array()), n, "B");
    std::vector<FTerm> f;
    for (const json& jt : j.value("f", json::array())) {
      FTerm t;
      t.eq = jt.at("eq").get<int>() - 1;  // config is 1-based
      t.coef = poly_from_json(jt.at("c"), "f coefficient");
      t.kx = exponents_from_json(jt.at("kx"), n, "f kx");
      t.ky = exponents_from_json(jt.at("ky"), n, "f ky");
      f.push_back(std::move(t));
    }
    return DelaySystem(n, r, std::move(a), std::move(b), std::move(f));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid config: ") + e.what());
  }
}

DelaySystem DelaySystem::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open system file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string DelaySystem::serialize() const {
  json j;
  j["n"] = n_;
  j["r"] = r_;
  json a = json::array(), b = json::array();
  for (int i = 0; i < n_; ++i) {
    json ra = json::array(), rb = json::array();
    for (int c = 0; c < n_; ++c) {
      ra.push_back(poly_to_json(a_[i][c]));
      rb.push_back(poly_to_json(b_[i][c]));
    }
    a.push_back(ra);
    b.push_back(rb);
  }
  j["A"] = a;
  j["B"] = b;
  json f = json::array();
  for (const FTerm& t : f_terms_) {
    f.push_back({{"eq", t.eq + 1},
                 {"c", poly_to_json(t.coef)},
                 {"kx", t.kx},
                 {"ky", t.ky}});
  }
  j["f"] = f;
  return j.dump(2);
}

Eigen::MatrixXd DelaySystem::eval_A(const ParamPoint& alpha) const {
  Eigen::MatrixXd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = a_[i][j].eval(alpha);
  return m;
}

Eigen::MatrixXd DelaySystem::eval_B(const ParamPoint& alpha) const {
  Eigen::MatrixXd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = b_[i][j].eval(alpha);
  return m;
}

TaylorF DelaySystem::taylor_f(const ParamPoint& alpha) const {
  std::vector<TaylorF::Mono> monos;
  for (const FTerm& t : f_terms_) {
    const double c = t.coef.eval(alpha);
    if (c == 0.0) continue;
    monos.push_back({t.eq, c, t.kx, t.ky});
  }
  return TaylorF(n_, std::move(monos));
}

}  // namespace bautin
