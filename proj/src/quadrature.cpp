#include "km/quadrature.hpp"

#include <cmath>
#include <omp.h>

namespace km {

BivariateTable BivariateTable::from(const HalfLaurentN& p) {
  if (p.vars().size() != 2) throw PolyError("torus quadrature needs exactly two variables");
  if (p.is_zero()) throw PolyError("torus quadrature of the zero polynomial");
  BivariateTable t;
  t.z_low = p.min_exp(1);
  const int hi = p.max_exp(1);
  t.rows.resize(static_cast<std::size_t>(hi - t.z_low) + 1);
  for (const auto& [e, c] : p.terms()) t.rows[static_cast<std::size_t>(e[1] - t.z_low)].emplace_back(e[0], c.convert_to<double>());
  return t;
}

namespace {

// Sum of log|p(x_i, z_j)| over j for one row x_i.  Half-offset nodes keep
// integrable singularities off the grid for generic inputs.
double row_sum(const BivariateTable& t, int n, int i) {
  const double theta = 2.0 * M_PI * (i + 0.5) / n;
  std::vector<std::complex<double>> coeff(t.rows.size());
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    std::complex<double> s = 0.0;
    for (const auto& [e, c] : t.rows[k]) s += c * std::polar(1.0, 0.5 * e * theta);
    coeff[k] = s;
  }
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double phi = 2.0 * M_PI * (j + 0.5) / n;
    // step in doubled-exponent units: z^{1/2} increments exist when z_low has
    // odd parity; rows are indexed by doubled exponent.
    const std::complex<double> step = std::polar(1.0, 0.5 * phi);
    std::complex<double> v = 0.0;
    for (std::size_t k = coeff.size(); k-- > 0;) v = v * step + coeff[k];
    acc += std::log(std::abs(v));
  }
  return acc;
}

}  // namespace

double torus_log_mean(const BivariateTable& table, int n, Kernel kernel) {
  std::vector<double> rows(static_cast<std::size_t>(n));
  if (kernel == Kernel::serial) {
    for (int i = 0; i < n; ++i) rows[i] = row_sum(table, n, i);
  } else {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) rows[i] = row_sum(table, n, i);
  }
  double total = 0.0;
  for (double r : rows) total += r;  // fixed order
  return total / (static_cast<double>(n) * n);
}

TorusResult mahler_torus_2var(const HalfLaurentN& p, double rel_tol, Kernel kernel, int min_log2, int max_log2) {
  const BivariateTable table = BivariateTable::from(p);
  TorusResult res;
  double prev = 0.0;
  for (int lg = min_log2; lg <= max_log2; ++lg) {
    const int n = 1 << lg;
    const double mean = torus_log_mean(table, n, kernel);
    res.points_per_dim = n;
    res.value = std::exp(mean);
    if (lg > min_log2) {
      res.error_estimate = std::abs(std::expm1(mean - prev));
      if (res.error_estimate < rel_tol) {
        res.converged = true;
        return res;
      }
    }
    prev = mean;
  }
  if (max_log2 <= min_log2) {
    res.converged = true;
    return res;
  }
  throw QuadratureError("torus quadrature did not reach tolerance", res);
}

}  // namespace km
