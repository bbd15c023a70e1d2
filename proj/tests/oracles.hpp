#ifndef ORBITKIT_TESTS_ORACLES_HPP
#define ORBITKIT_TESTS_ORACLES_HPP

// Independent numerical oracles for the test suites. These deliberately do
// not share code with the library: the matrix exponential here is a plain
// Taylor series with scaling and squaring, and the rotation matrices come
// straight from cos/sin.

#include <cmath>
#include <vector>

#include "orbitkit/polynomial.hpp"
#include "orbitkit/rng.hpp"
#include "orbitkit/types.hpp"

namespace oracles {

inline orbitkit::Mat expm_reference(const orbitkit::Mat& A) {
  using orbitkit::Mat;
  const double nrm = A.cwiseAbs().rowwise().sum().maxCoeff(); // infinity norm
  int s = 0;
  while (nrm / std::pow(2.0, s) > 0.5) ++s;
  const Mat T = A / std::pow(2.0, s);
  Mat sum = Mat::Identity(A.rows(), A.cols());
  Mat term = Mat::Identity(A.rows(), A.cols());
  for (int k = 1; k <= 24; ++k) {
    term = term * T / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

inline orbitkit::Mat rotation2(double theta) {
  orbitkit::Mat g(2, 2);
  g << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return g;
}

// Random polynomial with small integer coefficients. Integer data keeps all
// double arithmetic exact, so algebraic identities can be asserted bitwise.
inline orbitkit::Polynomial random_int_poly(orbitkit::Rng& rng, int nvars, int max_deg) {
  std::vector<orbitkit::Term> terms;
  const int nterms = 1 + static_cast<int>(rng.index(4));
  for (int t = 0; t < nterms; ++t) {
    orbitkit::Term term;
    term.coeff = static_cast<double>(static_cast<int>(rng.index(7)) - 3);
    term.exps.resize(nvars);
    int budget = max_deg;
    for (int v = 0; v < nvars; ++v) {
      term.exps[v] = static_cast<int>(rng.index(static_cast<std::size_t>(budget + 1)));
      budget -= term.exps[v];
    }
    terms.push_back(std::move(term));
  }
  return orbitkit::Polynomial(nvars, std::move(terms));
}

} // namespace oracles

#endif
