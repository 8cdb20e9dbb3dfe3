#include "km/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace km {

namespace {

using Dense = std::vector<BigInt>;  // index = degree

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt content(const Dense& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

Dense primitive(Dense p) {
  trim(p);
  if (p.empty()) return p;
  BigInt g = content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

Dense derivative(const Dense& p) {
  Dense d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// pseudo-remainder of a by b
Dense prem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

Dense gcd_poly(Dense a, Dense b) {
  a = primitive(a);
  b = primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = primitive(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// exact division in Z[x]; throws if inexact
Dense div_exact(Dense a, const Dense& b) {
  trim(a);
  if (a.empty()) return {};
  if (a.size() < b.size()) throw PolyError("div_exact: degree too small");
  const std::size_t db = b.size() - 1;
  Dense q(a.size() - db, 0);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    if (a.back() % b.back() != 0) throw PolyError("div_exact: inexact");
    const BigInt c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) throw PolyError("div_exact: nonzero remainder");
  trim(q);
  return q;
}

Dense sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Strip the monomial unit: p = sign * t^{shift/2} * dense(t).  Requires uniform
// exponent parity.
Dense polynomial_part(const HalfLaurent1& p) {
  if (!p.uniform_parity())
    throw PolyError("measure needs exponents of a single parity (t^{k/2} times a polynomial in t)");
  const int lo = p.min_exp();
  Dense d(static_cast<std::size_t>((p.max_exp() - lo) / 2 + 1), 0);
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>((e - lo) / 2)] = c;
  return d;
}

Complex horner(const std::vector<double>& c, Complex z) {
  Complex v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * z + c[i];
  return v;
}

void order_roots(std::vector<Complex>& r) {
  std::sort(r.begin(), r.end(), [](const Complex& a, const Complex& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-12 * (1.0 + ma)) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
}

}  // namespace

std::vector<std::pair<std::vector<BigInt>, int>> squarefree_decomposition(const std::vector<BigInt>& coeffs) {
  std::vector<std::pair<Dense, int>> out;
  Dense f = primitive(coeffs);
  if (f.size() <= 1) return {};
  // Yun's algorithm
  Dense fp = derivative(f);
  Dense a0 = gcd_poly(f, fp);
  Dense b = div_exact(f, a0);
  Dense c = div_exact(fp, a0);
  Dense d = sub(c, derivative(b));
  int i = 1;
  while (b.size() > 1) {
    Dense a = d.empty() ? b : gcd_poly(b, d);
    if (a.size() > 1) out.emplace_back(a, i);
    Dense bn = div_exact(b, a);
    Dense cn = d.empty() ? Dense{} : div_exact(d, a);
    d = sub(cn, derivative(bn));
    b = std::move(bn);
    ++i;
  }
  return out;
}

std::vector<Complex> aberth_roots(const std::vector<double>& coeffs, int* iterations) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n <= 0) return {};
  if (n == 1) {
    if (iterations) *iterations = 0;
    return {Complex(-coeffs[0] / coeffs[1], 0.0)};
  }
  std::vector<double> dc(n);
  for (int i = 1; i <= n; ++i) dc[i - 1] = coeffs[i] * i;

  // starting radius from the geometric mean of root moduli, clamped by Cauchy's bound
  const double lead = std::abs(coeffs[n]);
  double cauchy = 0.0;
  for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, std::abs(coeffs[i]) / lead);
  cauchy += 1.0;
  const double r0 = std::min(cauchy, std::pow(std::abs(coeffs[0]) / lead, 1.0 / n));

  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(n));
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  constexpr int kCap = 500;
  int total = 0;
  std::vector<Complex> z(n);
  for (int attempt = 0; attempt < 8; ++attempt) {
    for (int k = 0; k < n; ++k) {
      const double ang = 2.0 * M_PI * k / n + 0.4 + (attempt ? jitter(rng) : 0.0);
      const double rad = r0 * (1.0 + (attempt ? jitter(rng) : 0.0));
      z[k] = std::polar(rad, ang);
    }
    bool converged = false;
    for (int it = 0; it < kCap; ++it) {
      ++total;
      double worst = 0.0;
      for (int i = 0; i < n; ++i) {
        const Complex pv = horner(coeffs, z[i]);
        if (pv == 0.0) continue;
        const Complex ratio = pv / horner(dc, z[i]);
        Complex s = 0.0;
        for (int j = 0; j < n; ++j)
          if (j != i) s += 1.0 / (z[i] - z[j]);
        const Complex w = ratio / (1.0 - ratio * s);
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
          worst = INFINITY;
          break;
        }
        z[i] -= w;
        worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
      }
      if (!std::isfinite(worst)) break;
      if (worst < 1e-13) {
        converged = true;
        break;
      }
    }
    if (converged) {
      if (iterations) *iterations = total;
      return z;
    }
  }
  if (iterations) *iterations = total;
  throw RootFindError("root finder did not converge", RootSet{z, lead, n, INFINITY, total});
}

RootSet roots(const HalfLaurent1& p) {
  if (p.is_zero()) throw PolyError("roots of the zero polynomial");
  Dense d = polynomial_part(p);
  RootSet rs;
  rs.leading_coeff_abs = std::abs(d.back().convert_to<double>());
  rs.degree = static_cast<int>(d.size()) - 1;
  if (rs.degree == 0) return rs;

  for (const auto& [factor, mult] : squarefree_decomposition(d)) {
    std::vector<double> fc(factor.size());
    for (std::size_t i = 0; i < factor.size(); ++i) fc[i] = factor[i].convert_to<double>();
    int its = 0;
    std::vector<Complex> r;
    try {
      r = aberth_roots(fc, &its);
    } catch (const RootFindError& e) {
      RootSet partial = rs;
      partial.roots.insert(partial.roots.end(), e.partial().roots.begin(), e.partial().roots.end());
      throw RootFindError(e.what(), partial);
    }
    rs.iterations += its;
    for (int m = 0; m < mult; ++m) rs.roots.insert(rs.roots.end(), r.begin(), r.end());
  }
  order_roots(rs.roots);
  if (static_cast<int>(rs.roots.size()) != rs.degree)
    throw RootFindError("root count does not match degree", rs);

  // reconstruction check on the unit circle
  std::vector<double> dd(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) dd[i] = d[i].convert_to<double>();
  const double scale = length(p).convert_to<double>();
  for (int k = 0; k < 5; ++k) {
    const Complex x = std::polar(1.0, 0.7 + 1.3 * k);
    Complex prod = d.back().convert_to<double>();
    for (const auto& a : rs.roots) prod *= (x - a);
    rs.residual = std::max(rs.residual, std::abs(std::abs(prod) - std::abs(horner(dd, x))) / scale);
  }
  return rs;
}

MeasureReport mahler_measure(const HalfLaurent1& p) {
  MeasureReport rep;
  if (p.is_zero()) return rep;  // M(0) = 0, euclidean measure undefined
  const RootSet rs = roots(p);
  double me = 1.0;
  for (const auto& a : rs.roots) me *= std::max(std::abs(a), 1.0);
  rep.euclidean_mahler = me;
  rep.euclidean_defined = true;
  rep.mahler = rs.leading_coeff_abs * me;
  rep.residual = rs.residual;
  rep.iterations = rs.iterations;
  return rep;
}

namespace {

// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
Dense cyclotomic(long long n) {
  auto mobius = [](long long m) {
    int mu = 1;
    for (long long p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) return 0;
      mu = -mu;
    }
    return m > 1 ? -mu : mu;
  };
  Dense num{1}, den{1};
  for (long long d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    Dense f(static_cast<std::size_t>(d) + 1, 0);
    f.front() = -1;
    f.back() = 1;
    Dense& acc = mu > 0 ? num : den;
    Dense prod(acc.size() + f.size() - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (acc[i] != 0) {
        prod[i] -= acc[i];
        prod[i + static_cast<std::size_t>(d)] += acc[i];
      }
    acc = std::move(prod);
  }
  return div_exact(num, den);
}

}  // namespace

bool is_cyclotomic_product(const HalfLaurent1& p) {
  if (p.is_zero() || !p.uniform_parity()) return false;
  Dense d = polynomial_part(p);
  if (d.size() == 1) return boost::multiprecision::abs(d[0]) == 1;
  if (boost::multiprecision::abs(d.back()) != 1 || boost::multiprecision::abs(d.front()) != 1) return false;

  Dense radical{1};
  for (const auto& [factor, mult] : squarefree_decomposition(d)) {
    Dense prod(radical.size() + factor.size() - 1, 0);
    for (std::size_t i = 0; i < radical.size(); ++i)
      for (std::size_t j = 0; j < factor.size(); ++j) prod[i + j] += radical[i] * factor[j];
    radical = std::move(prod);
  }
  std::vector<double> rc(radical.size());
  for (std::size_t i = 0; i < radical.size(); ++i) rc[i] = radical[i].convert_to<double>();
  std::vector<Complex> r;
  try {
    r = aberth_roots(rc);
  } catch (const RootFindError&) {
    return false;
  }
  // Candidate orders from the root arguments; phi(n) <= degree forces n <= 2 degree^2.
  const long long deg = static_cast<long long>(d.size()) - 1;
  const long long cap = std::max(6LL, 2 * deg * deg);
  std::set<long long> orders;
  for (const auto& a : r) {
    if (std::abs(std::abs(a) - 1.0) > 1e-6) return false;
    double frac = std::arg(a) / (2.0 * M_PI);
    if (frac < 0) frac += 1.0;
    int found = 0;
    for (long long n = 1; n <= cap && found < 3; ++n) {
      const double x = frac * static_cast<double>(n);
      if (std::abs(x - std::round(x)) < 1e-7 * static_cast<double>(n)) {
        orders.insert(n);
        ++found;
      }
    }
    if (found == 0) return false;
  }
  // exact confirmation: divide out the candidate cyclotomic factors
  Dense rest = primitive(d);
  for (long long n : orders) {
    if (rest.size() <= 1) break;
    const Dense phi = cyclotomic(n);
    for (;;) {
      if (rest.size() < phi.size()) break;
      try {
        rest = div_exact(rest, phi);
      } catch (const PolyError&) {
        break;
      }
    }
  }
  return rest.size() == 1 && boost::multiprecision::abs(rest[0]) == 1;
}

CircleResult mahler_linear_z(const HalfLaurent1& a, const HalfLaurent1& b, double rel_tol) {
  if (a.is_zero() && b.is_zero()) throw PolyError("mahler_linear_z: both polynomials are zero");
  // Common zeros of A and B are the only singularities of log max(|A|, |B|).
  // Split off G = gcd(A, B) and measure it through its roots; the cofactors
  // have no common zero, so the remaining integrand is bounded.
  double common = 1.0;
  HalfLaurent1 ra = a, rb = b;
  if (!a.is_zero() && !b.is_zero()) {
    const Dense g = gcd_poly(polynomial_part(a), polynomial_part(b));
    if (g.size() > 1) {
      HalfLaurent1 gp;
      for (std::size_t i = 0; i < g.size(); ++i) gp.add_term(2 * static_cast<int>(i), g[i]);
      common = mahler_measure(gp).mahler;
      ra = divide_exact(a, gp).value();
      rb = divide_exact(b, gp).value();
    }
  }
  auto dense = [](const HalfLaurent1& p) {
    std::vector<std::pair<int, double>> v;
    for (const auto& [e, c] : p.terms()) v.emplace_back(e, c.convert_to<double>());
    return v;
  };
  const auto da = dense(ra);
  const auto db = dense(rb);
  auto modulus = [](const std::vector<std::pair<int, double>>& terms, double theta) {
    Complex s = 0.0;
    for (const auto& [e, c] : terms) s += c * std::polar(1.0, 0.5 * e * theta);
    return std::abs(s);
  };
  CircleResult res;
  double prev = 0.0;
  constexpr int kMinLog2 = 8;
  constexpr int kMaxLog2 = 20;
  for (int lg = kMinLog2; lg <= kMaxLog2; ++lg) {
    const int n = 1 << lg;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double theta = 2.0 * M_PI * (j + 0.5) / n;
      sum += std::log(std::max(modulus(da, theta), modulus(db, theta)));
    }
    const double mean = sum / n;
    res.points = n;
    res.value = common * std::exp(mean);
    if (lg > kMinLog2) {
      res.error_estimate = std::abs(std::expm1(mean - prev));
      if (res.error_estimate < rel_tol) {
        res.converged = true;
        return res;
      }
    }
    prev = mean;
  }
  return res;
}

}  // namespace km
