// Numerical Mahler measure of integer Laurent polynomials.
#pragma once

#include "km/polyring.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace km {

using Complex = std::complex<double>;

/// Complex roots of the polynomial part of a Laurent polynomial (monomial
/// unit and roots at zero removed), listed with multiplicity and ordered by
/// (modulus, argument).
struct RootSet {
  std::vector<Complex> roots;
  double leading_coeff_abs = 0.0;
  int degree = 0;
  double residual = 0.0;  // max relative reconstruction error on |t| = 1
  int iterations = 0;
};

class RootFindError : public std::runtime_error {
 public:
  RootFindError(const std::string& what, RootSet partial) : std::runtime_error(what), partial_(std::move(partial)) {}
  const RootSet& partial() const { return partial_; }

 private:
  RootSet partial_;
};

struct MeasureReport {
  double mahler = 0.0;
  double euclidean_mahler = 0.0;
  bool euclidean_defined = false;  // false for the zero polynomial
  double residual = 0.0;
  int iterations = 0;
};

/// Squarefree decomposition of an integer polynomial given by dense
/// coefficients (index = degree): returns (factor, multiplicity) pairs whose
/// product is the primitive part up to sign.
std::vector<std::pair<std::vector<BigInt>, int>> squarefree_decomposition(const std::vector<BigInt>& coeffs);

/// Roots of a polynomial with double coefficients (index = degree, nonzero
/// constant and leading terms), by simultaneous Aberth-Ehrlich iteration.
std::vector<Complex> aberth_roots(const std::vector<double>& coeffs, int* iterations = nullptr);

RootSet roots(const HalfLaurent1& p);
MeasureReport mahler_measure(const HalfLaurent1& p);
bool is_cyclotomic_product(const HalfLaurent1& p);

/// exp of the unit-circle mean of log max(|A(x)|, |B(x)|): the measure of
/// A(x) + B(x) z.
struct CircleResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int points = 0;
  bool converged = false;
};
CircleResult mahler_linear_z(const HalfLaurent1& a, const HalfLaurent1& b, double rel_tol = 1e-9);

}  // namespace km
