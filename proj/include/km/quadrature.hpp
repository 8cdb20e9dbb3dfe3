// Torus quadrature for the two-variable Mahler measure.
//
// The integrand log|p(x, z)| is summed on a half-offset N x N grid.  The
// parallel kernel splits rows across OpenMP threads; rows are reduced into a
// per-row buffer and summed serially so both kernels return bit-identical
// values.
#pragma once

#include "km/polyring.hpp"

#include <complex>
#include <vector>

namespace km {

enum class Kernel { serial, parallel };

/// p(x, z) prepared for fast evaluation: for every power of z a list of
/// (doubled-exponent-in-x, coefficient) pairs.
struct BivariateTable {
  int z_low = 0;  // doubled exponent of the lowest z power
  std::vector<std::vector<std::pair<int, double>>> rows;  // index j <-> z^{z_low/2 + j}
  static BivariateTable from(const HalfLaurentN& p);
};

/// Mean of log|p| over the N x N half-offset grid.
double torus_log_mean(const BivariateTable& table, int n, Kernel kernel);

struct TorusResult {
  double value = 0.0;           // the measure exp(mean log|p|)
  double error_estimate = 0.0;  // relative change between the last two levels
  int points_per_dim = 0;
  bool converged = false;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, TorusResult partial) : std::runtime_error(what), partial_(partial) {}
  const TorusResult& partial() const { return partial_; }

 private:
  TorusResult partial_;
};

/// Doubles the grid from 2^min_log2 up to 2^max_log2 points per dimension
/// until two successive levels agree to rel_tol.  Throws QuadratureError if
/// the last level still disagrees.
TorusResult mahler_torus_2var(const HalfLaurentN& p, double rel_tol = 1e-3, Kernel kernel = Kernel::parallel,
                              int min_log2 = 8, int max_log2 = 16);

}  // namespace km
