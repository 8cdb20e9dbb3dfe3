// Exact sparse Laurent polynomials over Z with half-integer exponents.
//
// Exponents are stored doubled: the key 3 stands for t^{3/2}.  All arithmetic
// is exact; coefficients are arbitrary precision.  Values are immutable once
// built and safe to share between threads.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace km {

using BigInt = boost::multiprecision::cpp_int;

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One-variable Laurent polynomial in t^{1/2}.
class HalfLaurent1 {
 public:
  using Terms = std::map<int, BigInt>;  // doubled exponent -> nonzero coefficient

  HalfLaurent1() = default;
  explicit HalfLaurent1(Terms terms);

  static HalfLaurent1 constant(const BigInt& c);
  /// c * t^{doubled_exp/2}
  static HalfLaurent1 monomial(const BigInt& c, int doubled_exp);
  /// sum_i coeffs[i] t^{lowest + i} with integer exponents.
  static HalfLaurent1 from_coeffs(const std::vector<long long>& coeffs, int lowest = 0);
  /// t^{1/2} - t^{-1/2}
  static HalfLaurent1 z_of_t();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coeff(int doubled_exp) const;
  /// Doubled exponents; undefined for the zero polynomial.
  int min_exp() const;
  int max_exp() const;
  const BigInt& leading_coeff() const;
  const BigInt& trailing_coeff() const;
  /// True if every exponent is an integer.
  bool integral_exponents() const;
  /// True if all exponents share a parity (so p = t^{k/2} * integer polynomial).
  bool uniform_parity() const;

  HalfLaurent1 shifted(int doubled) const;
  HalfLaurent1 pow(unsigned n) const;
  /// p(t) -> p(t^{-1})
  HalfLaurent1 reciprocal() const;
  /// p(t) -> p(-t); only defined for integral exponents.
  HalfLaurent1 negate_variable() const;
  /// p(t) -> p(t^k); doubled exponents scale by k.
  HalfLaurent1 power_variable(int k) const;

  HalfLaurent1& operator+=(const HalfLaurent1& o);
  HalfLaurent1& operator-=(const HalfLaurent1& o);
  HalfLaurent1& operator*=(const HalfLaurent1& o);
  HalfLaurent1& operator*=(const BigInt& c);

  friend HalfLaurent1 operator+(HalfLaurent1 a, const HalfLaurent1& b) { return a += b; }
  friend HalfLaurent1 operator-(HalfLaurent1 a, const HalfLaurent1& b) { return a -= b; }
  friend HalfLaurent1 operator*(const HalfLaurent1& a, const HalfLaurent1& b);
  friend HalfLaurent1 operator*(HalfLaurent1 a, const BigInt& c) { return a *= c; }
  friend HalfLaurent1 operator*(const BigInt& c, HalfLaurent1 a) { return a *= c; }
  HalfLaurent1 operator-() const;
  friend bool operator==(const HalfLaurent1& a, const HalfLaurent1& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HalfLaurent1& a, const HalfLaurent1& b) { return !(a == b); }

  void add_term(int doubled_exp, const BigInt& c);

 private:
  Terms terms_;
};

/// Laurent polynomial in several named variables, each with half-integer exponents.
class HalfLaurentN {
 public:
  using Exponents = std::vector<int>;  // doubled, one slot per variable
  using Terms = std::map<Exponents, BigInt>;

  HalfLaurentN() = default;
  explicit HalfLaurentN(std::vector<std::string> vars);
  HalfLaurentN(std::vector<std::string> vars, Terms terms);

  static HalfLaurentN constant(std::vector<std::string> vars, const BigInt& c);
  static HalfLaurentN monomial(std::vector<std::string> vars, const BigInt& c, Exponents e);
  /// The variable `name` raised to doubled exponent `doubled` (default t^1).
  static HalfLaurentN variable(std::vector<std::string> vars, const std::string& name, int doubled = 2);
  /// Embed a one-variable polynomial as variable `name`.
  static HalfLaurentN from1(std::vector<std::string> vars, const std::string& name, const HalfLaurent1& p);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int var_index(const std::string& name) const;  // -1 if absent
  BigInt coeff(const Exponents& e) const;
  int min_exp(int var) const;
  int max_exp(int var) const;

  HalfLaurentN pow(unsigned n) const;
  HalfLaurentN shifted(const Exponents& e) const;
  /// Collapse to a one-variable polynomial; every other variable must be absent.
  HalfLaurent1 to1(const std::string& name) const;

  HalfLaurentN& operator+=(const HalfLaurentN& o);
  HalfLaurentN& operator-=(const HalfLaurentN& o);
  HalfLaurentN& operator*=(const BigInt& c);
  friend HalfLaurentN operator+(HalfLaurentN a, const HalfLaurentN& b) { return a += b; }
  friend HalfLaurentN operator-(HalfLaurentN a, const HalfLaurentN& b) { return a -= b; }
  friend HalfLaurentN operator*(const HalfLaurentN& a, const HalfLaurentN& b);
  friend HalfLaurentN operator*(HalfLaurentN a, const BigInt& c) { return a *= c; }
  HalfLaurentN operator-() const;
  friend bool operator==(const HalfLaurentN& a, const HalfLaurentN& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HalfLaurentN& a, const HalfLaurentN& b) { return !(a == b); }

  void add_term(const Exponents& e, const BigInt& c);

 private:
  void check_compatible(const HalfLaurentN& o) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

BigInt length(const HalfLaurent1& p);
BigInt length(const HalfLaurentN& p);
std::size_t nonzero_count(const HalfLaurent1& p);
std::size_t nonzero_count(const HalfLaurentN& p);

/// p = unit_sign * t^{unit_doubled_shift/2} * poly, with poly having lowest
/// exponent 0 and positive leading coefficient.
struct UnitNormalForm {
  HalfLaurent1 poly;
  int unit_sign = 1;
  int unit_doubled_shift = 0;
};

UnitNormalForm unit_normalize(const HalfLaurent1& p);
bool eq_up_to_units(const HalfLaurent1& a, const HalfLaurent1& b);

struct DivResult {
  HalfLaurent1 quotient;
  HalfLaurent1 remainder;
};

/// Division in Z[t^{±1/2}] by a divisor whose leading coefficient is ±1 or
/// which divides evenly; remainder is zero iff b divides a.  Throws if b == 0
/// or the quotient would leave Z.
DivResult divide(const HalfLaurent1& a, const HalfLaurent1& b);
std::optional<HalfLaurent1> divide_exact(const HalfLaurent1& a, const HalfLaurent1& b);
/// Exact division of a multivariate polynomial by a one-variable divisor in `var`.
std::optional<HalfLaurentN> divide_exact(const HalfLaurentN& a, const HalfLaurent1& b, const std::string& var);

/// f(x, x^{q_1}, ..., x^{q_n}) where f has variables (x, y_1..y_n) in that order.
HalfLaurent1 substitute_monomials(const HalfLaurentN& f, const std::vector<long long>& q);

/// Groups f(x, y) by distinct y-monomials: y-exponents -> coefficient polynomial in x.
std::map<std::vector<int>, HalfLaurent1> group_by_tail(const HalfLaurentN& f);

/// A polynomial divided by den_base^den_exp, with the power reduced as far as
/// exact division allows.
struct Tracked1 {
  HalfLaurent1 num;
  HalfLaurent1 den_base;
  int den_exp = 0;
  bool is_polynomial() const { return den_exp == 0; }
  /// Throws PolyError if a denominator remains.
  const HalfLaurent1& value() const;
};

struct TrackedN {
  HalfLaurentN num;
  HalfLaurentN den_base;
  int den_exp = 0;
  bool is_polynomial() const { return den_exp == 0; }
  const HalfLaurentN& value() const;
};

/// Substitute each variable of p by an image polynomial over `target_vars`.
/// Unbound variables map to themselves (they must occur in target_vars).
/// At most one variable whose image is not a monomial may appear with negative
/// exponent; its image becomes the tracked denominator.
TrackedN specialize(const HalfLaurentN& p, const std::map<std::string, HalfLaurentN>& bindings,
                    const std::vector<std::string>& target_vars);
/// Same with a one-variable target.
Tracked1 specialize1(const HalfLaurentN& p, const std::map<std::string, HalfLaurent1>& bindings,
                     const std::string& target_var);

// Text format: `t^2 - 3*t + 5 - 3*t^-1 + t^-2`, `t^{1/2} - t^{-1/2}`.
std::string to_string(const HalfLaurent1& p, std::string_view var = "t");
std::string to_string(const HalfLaurentN& p);
HalfLaurent1 parse_poly1(std::string_view text, std::string_view var = "t");
/// Parses with the given variable list; unknown variable names are an error.
HalfLaurentN parse_polyN(std::string_view text, const std::vector<std::string>& vars);
/// Parses and infers the variables (sorted by first appearance).
HalfLaurentN parse_polyN(std::string_view text);

}  // namespace km
