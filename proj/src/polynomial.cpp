#include "orbitkit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace orbitkit {

namespace {

double ipow(double x, int e) {
  double r = 1.0;
  double b = x;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) r *= b;
    b *= b;
  }
  return r;
}

int total_degree(const Term& t) {
  return std::accumulate(t.exps.begin(), t.exps.end(), 0);
}

// Graded lexicographic order on exponent vectors.
bool term_less(const Term& a, const Term& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return a.exps < b.exps;
}

} // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("polynomial: nvars must be positive");
}

Polynomial::Polynomial(int nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  if (nvars < 1) throw std::invalid_argument("polynomial: nvars must be positive");
  for (auto& t : terms_) {
    if (static_cast<int>(t.exps.size()) != nvars_)
      throw std::invalid_argument("polynomial: term exponent arity mismatch");
    for (int e : t.exps)
      if (e < 0) throw std::invalid_argument("polynomial: negative exponent");
  }
  normalize();
}

Polynomial Polynomial::constant(int nvars, double c) {
  return Polynomial(nvars, {Term{c, std::vector<int>(nvars, 0)}});
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("polynomial: variable index out of range");
  std::vector<int> e(nvars, 0);
  e[index] = 1;
  return Polynomial(nvars, {Term{1.0, std::move(e)}});
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_less);
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exps == t.exps)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.coeff == 0.0; }),
               merged.end());
  terms_ = std::move(merged);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, total_degree(t));
  return d;
}

double Polynomial::operator()(const Vec& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("polynomial: evaluation dimension mismatch");
  double s = 0.0;
  for (const auto& t : terms_) {
    double m = t.coeff;
    for (int i = 0; i < nvars_; ++i)
      if (t.exps[i] != 0) m *= ipow(x[i], t.exps[i]);
    s += m;
  }
  return s;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("polynomial: derivative index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exps[var] == 0) continue;
    Term d = t;
    d.coeff *= t.exps[var];
    d.exps[var] -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomial: arity mismatch in +");
  std::vector<Term> out = terms_;
  out.insert(out.end(), rhs.terms_.begin(), rhs.terms_.end());
  return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return *this + rhs.scaled(-1.0);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomial: arity mismatch in *");
  std::vector<Term> out;
  out.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      Term t;
      t.coeff = a.coeff * b.coeff;
      t.exps.resize(nvars_);
      for (int i = 0; i < nvars_; ++i) t.exps[i] = a.exps[i] + b.exps[i];
      out.push_back(std::move(t));
    }
  }
  return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::scaled(double c) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("polynomial: negative power");
  Polynomial r = Polynomial::constant(nvars_, 1.0);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_)
    throw std::invalid_argument("polynomial: substitution arity mismatch");
  const int m = subs.empty() ? 0 : subs[0].nvars();
  for (const auto& s : subs)
    if (s.nvars() != m) throw std::invalid_argument("polynomial: substitution polynomials disagree on arity");

  // Precompute the powers of each substituted variable we will need.
  std::vector<int> max_exp(nvars_, 0);
  for (const auto& t : terms_)
    for (int i = 0; i < nvars_; ++i) max_exp[i] = std::max(max_exp[i], t.exps[i]);
  std::vector<std::vector<Polynomial>> pows(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    pows[i].push_back(Polynomial::constant(m, 1.0));
    for (int e = 1; e <= max_exp[i]; ++e) pows[i].push_back(pows[i][e - 1] * subs[i]);
  }

  Polynomial result(m);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(m, t.coeff);
    for (int i = 0; i < nvars_; ++i)
      if (t.exps[i] != 0) prod = prod * pows[i][t.exps[i]];
    result = result + prod;
  }
  return result;
}

Polynomial Polynomial::pruned(double tol) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (std::fabs(t.coeff) > tol) out.push_back(t);
  return Polynomial(nvars_, std::move(out));
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::fabs(t.coeff));
  return m;
}

bool Polynomial::same_terms(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_ || terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exps != rhs.terms_[i].exps || terms_[i].coeff != rhs.terms_[i].coeff) return false;
  return true;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var_name = [&](int i) {
    if (i < static_cast<int>(names.size())) return names[i];
    return "x" + std::to_string(i);
  };
  std::string out;
  // Print highest degree first; terms_ is sorted ascending.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Term& t = *it;
    const double c = t.coeff;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", std::fabs(c));
    if (out.empty())
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i);
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    if (mono.empty()) {
      out += buf;
    } else {
      if (std::fabs(std::fabs(c) - 1.0) > 0.0) {
        out += buf;
        out += "*";
      }
      out += mono;
    }
  }
  return out;
}

} // namespace orbitkit
