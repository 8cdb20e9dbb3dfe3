#include "km/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace km {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void add_into(std::map<int, BigInt>& terms, int e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

void add_into(std::map<std::vector<int>, BigInt>& terms, const std::vector<int>& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// HalfLaurent1

HalfLaurent1::HalfLaurent1(Terms terms) {
  for (auto& [e, c] : terms)
    if (c != 0) terms_.emplace(e, std::move(c));
}

HalfLaurent1 HalfLaurent1::constant(const BigInt& c) { return monomial(c, 0); }

HalfLaurent1 HalfLaurent1::monomial(const BigInt& c, int doubled_exp) {
  HalfLaurent1 p;
  if (c != 0) p.terms_.emplace(doubled_exp, c);
  return p;
}

HalfLaurent1 HalfLaurent1::from_coeffs(const std::vector<long long>& coeffs, int lowest) {
  HalfLaurent1 p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.terms_.emplace(2 * (lowest + static_cast<int>(i)), BigInt(coeffs[i]));
  return p;
}

HalfLaurent1 HalfLaurent1::z_of_t() {
  HalfLaurent1 p;
  p.terms_.emplace(1, BigInt(1));
  p.terms_.emplace(-1, BigInt(-1));
  return p;
}

BigInt HalfLaurent1::coeff(int doubled_exp) const {
  auto it = terms_.find(doubled_exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int HalfLaurent1::min_exp() const {
  if (terms_.empty()) throw PolyError("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int HalfLaurent1::max_exp() const {
  if (terms_.empty()) throw PolyError("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

const BigInt& HalfLaurent1::leading_coeff() const {
  if (terms_.empty()) throw PolyError("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

const BigInt& HalfLaurent1::trailing_coeff() const {
  if (terms_.empty()) throw PolyError("trailing coefficient of zero polynomial");
  return terms_.begin()->second;
}

bool HalfLaurent1::integral_exponents() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first % 2 == 0; });
}

bool HalfLaurent1::uniform_parity() const {
  if (terms_.empty()) return true;
  const int parity = terms_.begin()->first & 1;
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return (t.first & 1) == parity; });
}

HalfLaurent1 HalfLaurent1::shifted(int doubled) const {
  HalfLaurent1 p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + doubled, c);
  return p;
}

HalfLaurent1 HalfLaurent1::pow(unsigned n) const {
  HalfLaurent1 result = constant(1);
  HalfLaurent1 base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

HalfLaurent1 HalfLaurent1::reciprocal() const {
  HalfLaurent1 p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

HalfLaurent1 HalfLaurent1::negate_variable() const {
  if (!integral_exponents()) throw PolyError("t -> -t needs integral exponents");
  HalfLaurent1 p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, (e / 2) % 2 == 0 ? c : BigInt(-c));
  return p;
}

HalfLaurent1 HalfLaurent1::power_variable(int k) const {
  if (k == 0) {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return constant(s);
  }
  HalfLaurent1 p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e * k, c);
  return p;
}

void HalfLaurent1::add_term(int doubled_exp, const BigInt& c) { add_into(terms_, doubled_exp, c); }

HalfLaurent1& HalfLaurent1::operator+=(const HalfLaurent1& o) {
  for (const auto& [e, c] : o.terms_) add_into(terms_, e, c);
  return *this;
}

HalfLaurent1& HalfLaurent1::operator-=(const HalfLaurent1& o) {
  for (const auto& [e, c] : o.terms_) add_into(terms_, e, BigInt(-c));
  return *this;
}

HalfLaurent1 operator*(const HalfLaurent1& a, const HalfLaurent1& b) {
  HalfLaurent1 p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) add_into(p.terms_, ea + eb, ca * cb);
  return p;
}

HalfLaurent1& HalfLaurent1::operator*=(const HalfLaurent1& o) { return *this = *this * o; }

HalfLaurent1& HalfLaurent1::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

HalfLaurent1 HalfLaurent1::operator-() const {
  HalfLaurent1 p = *this;
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

// ---------------------------------------------------------------------------
// HalfLaurentN

HalfLaurentN::HalfLaurentN(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw PolyError("duplicate variable " + vars_[i]);
}

HalfLaurentN::HalfLaurentN(std::vector<std::string> vars, Terms terms) : HalfLaurentN(std::move(vars)) {
  for (auto& [e, c] : terms) add_term(e, c);
}

HalfLaurentN HalfLaurentN::constant(std::vector<std::string> vars, const BigInt& c) {
  Exponents e(vars.size(), 0);
  return monomial(std::move(vars), c, std::move(e));
}

HalfLaurentN HalfLaurentN::monomial(std::vector<std::string> vars, const BigInt& c, Exponents e) {
  HalfLaurentN p(std::move(vars));
  p.add_term(e, c);
  return p;
}

HalfLaurentN HalfLaurentN::variable(std::vector<std::string> vars, const std::string& name, int doubled) {
  HalfLaurentN p(std::move(vars));
  const int i = p.var_index(name);
  if (i < 0) throw PolyError("unknown variable " + name);
  Exponents e(p.vars_.size(), 0);
  e[i] = doubled;
  p.add_term(e, 1);
  return p;
}

HalfLaurentN HalfLaurentN::from1(std::vector<std::string> vars, const std::string& name, const HalfLaurent1& q) {
  HalfLaurentN p(std::move(vars));
  const int i = p.var_index(name);
  if (i < 0) throw PolyError("unknown variable " + name);
  for (const auto& [e1, c] : q.terms()) {
    Exponents e(p.vars_.size(), 0);
    e[i] = e1;
    p.add_term(e, c);
  }
  return p;
}

int HalfLaurentN::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

BigInt HalfLaurentN::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int HalfLaurentN::min_exp(int var) const {
  if (terms_.empty()) throw PolyError("min_exp of zero polynomial");
  int m = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
  return m;
}

int HalfLaurentN::max_exp(int var) const {
  if (terms_.empty()) throw PolyError("max_exp of zero polynomial");
  int m = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
  return m;
}

void HalfLaurentN::add_term(const Exponents& e, const BigInt& c) {
  if (e.size() != vars_.size()) throw PolyError("exponent vector length mismatch");
  add_into(terms_, e, c);
}

void HalfLaurentN::check_compatible(const HalfLaurentN& o) const {
  if (vars_ != o.vars_) throw PolyError("variable list mismatch");
}

HalfLaurentN& HalfLaurentN::operator+=(const HalfLaurentN& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_into(terms_, e, c);
  return *this;
}

HalfLaurentN& HalfLaurentN::operator-=(const HalfLaurentN& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_into(terms_, e, BigInt(-c));
  return *this;
}

HalfLaurentN& HalfLaurentN::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

HalfLaurentN operator*(const HalfLaurentN& a, const HalfLaurentN& b) {
  a.check_compatible(b);
  HalfLaurentN p(a.vars_);
  const std::size_t n = a.vars_.size();
  HalfLaurentN::Exponents e(n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      add_into(p.terms_, e, ca * cb);
    }
  return p;
}

HalfLaurentN HalfLaurentN::operator-() const {
  HalfLaurentN p = *this;
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

HalfLaurentN HalfLaurentN::pow(unsigned n) const {
  HalfLaurentN result = constant(vars_, 1);
  HalfLaurentN base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

HalfLaurentN HalfLaurentN::shifted(const Exponents& s) const {
  if (s.size() != vars_.size()) throw PolyError("shift length mismatch");
  HalfLaurentN p(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += s[i];
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

HalfLaurent1 HalfLaurentN::to1(const std::string& name) const {
  const int idx = var_index(name);
  HalfLaurent1 p;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != idx && e[i] != 0)
        throw PolyError("to1: variable " + vars_[i] + " still present");
    p.add_term(idx < 0 ? 0 : e[idx], c);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Statistics and normalization

BigInt length(const HalfLaurent1& p) {
  BigInt s = 0;
  for (const auto& [e, c] : p.terms()) s += abs_big(c);
  return s;
}

BigInt length(const HalfLaurentN& p) {
  BigInt s = 0;
  for (const auto& [e, c] : p.terms()) s += abs_big(c);
  return s;
}

std::size_t nonzero_count(const HalfLaurent1& p) { return p.size(); }
std::size_t nonzero_count(const HalfLaurentN& p) { return p.size(); }

UnitNormalForm unit_normalize(const HalfLaurent1& p) {
  if (p.is_zero()) throw PolyError("unit_normalize of zero polynomial");
  UnitNormalForm u;
  u.unit_doubled_shift = p.min_exp();
  u.unit_sign = p.leading_coeff() > 0 ? 1 : -1;
  u.poly = p.shifted(-u.unit_doubled_shift);
  if (u.unit_sign < 0) u.poly = -u.poly;
  return u;
}

bool eq_up_to_units(const HalfLaurent1& a, const HalfLaurent1& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return unit_normalize(a).poly == unit_normalize(b).poly;
}

DivResult divide(const HalfLaurent1& a, const HalfLaurent1& b) {
  if (b.is_zero()) throw PolyError("division by zero polynomial");
  DivResult r;
  if (a.is_zero()) return r;
  // Work in s = t^{1/2}: doubled exponents are ordinary exponents.  Strip the
  // s-adic valuation so both sides are polynomials with nonzero constant term.
  const int va = a.min_exp();
  const int vb = b.min_exp();
  HalfLaurent1 rem = a.shifted(-va);
  const HalfLaurent1 div = b.shifted(-vb);
  const int db = div.max_exp();
  const BigInt& lb = div.leading_coeff();
  HalfLaurent1 quo;
  while (!rem.is_zero() && rem.max_exp() >= db) {
    const BigInt& lr = rem.leading_coeff();
    if (lr % lb != 0) break;
    const BigInt c = lr / lb;
    const int e = rem.max_exp() - db;
    quo.add_term(e, c);
    rem -= div.shifted(e) * c;
  }
  r.quotient = quo.shifted(va - vb);
  r.remainder = rem.shifted(va);
  return r;
}

std::optional<HalfLaurent1> divide_exact(const HalfLaurent1& a, const HalfLaurent1& b) {
  DivResult r = divide(a, b);
  if (!r.remainder.is_zero()) return std::nullopt;
  return std::move(r.quotient);
}

std::optional<HalfLaurentN> divide_exact(const HalfLaurentN& a, const HalfLaurent1& b, const std::string& var) {
  const int idx = a.var_index(var);
  if (idx < 0) throw PolyError("divide_exact: unknown variable " + var);
  // group by the exponents of all other variables
  std::map<std::vector<int>, HalfLaurent1> groups;
  for (const auto& [e, c] : a.terms()) {
    std::vector<int> key = e;
    key[idx] = 0;
    groups[key].add_term(e[idx], c);
  }
  HalfLaurentN out(a.vars());
  for (const auto& [key, poly] : groups) {
    auto q = divide_exact(poly, b);
    if (!q) return std::nullopt;
    for (const auto& [e1, c] : q->terms()) {
      std::vector<int> e = key;
      e[idx] = e1;
      out.add_term(e, c);
    }
  }
  return out;
}

HalfLaurent1 substitute_monomials(const HalfLaurentN& f, const std::vector<long long>& q) {
  if (f.vars().size() != q.size() + 1) throw PolyError("substitute_monomials: q length mismatch");
  HalfLaurent1 out;
  for (const auto& [e, c] : f.terms()) {
    long long d = e[0];
    for (std::size_t i = 0; i < q.size(); ++i) d += q[i] * e[i + 1];
    out.add_term(static_cast<int>(d), c);
  }
  return out;
}

std::map<std::vector<int>, HalfLaurent1> group_by_tail(const HalfLaurentN& f) {
  std::map<std::vector<int>, HalfLaurent1> groups;
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> tail(e.begin() + 1, e.end());
    groups[tail].add_term(e[0], c);
  }
  return groups;
}

const HalfLaurent1& Tracked1::value() const {
  if (den_exp != 0)
    throw PolyError("value has a denominator (" + to_string(den_base) + ")^" + std::to_string(den_exp));
  return num;
}

const HalfLaurentN& TrackedN::value() const {
  if (den_exp != 0)
    throw PolyError("value has a denominator (" + to_string(den_base) + ")^" + std::to_string(den_exp));
  return num;
}

// ---------------------------------------------------------------------------
// Specialization

namespace {

bool is_monomial(const HalfLaurentN& p) { return p.size() == 1; }

// (c * m)^{e/2} for a monomial image; e is a doubled exponent.
HalfLaurentN monomial_power(const HalfLaurentN& img, int e) {
  const auto& [ex, c] = *img.terms().begin();
  BigInt coef = 1;
  if (e % 2 != 0) {
    if (c != 1) throw PolyError("half power of a monomial with coefficient " + c.str());
  } else {
    const int k = e / 2;
    if (k < 0 && abs_big(c) != 1) throw PolyError("negative power of a non-unit coefficient");
    coef = (abs_big(c) == 1) ? BigInt((c < 0 && (k % 2 != 0)) ? -1 : 1) : boost::multiprecision::pow(c, static_cast<unsigned>(k));
  }
  std::vector<int> out(ex.size());
  for (std::size_t i = 0; i < ex.size(); ++i) {
    const long long prod = static_cast<long long>(ex[i]) * e;
    if (prod % 2 != 0) throw PolyError("substitution produces a quarter exponent");
    out[i] = static_cast<int>(prod / 2);
  }
  return HalfLaurentN::monomial(img.vars(), coef, out);
}

}  // namespace

TrackedN specialize(const HalfLaurentN& p, const std::map<std::string, HalfLaurentN>& bindings,
                    const std::vector<std::string>& target_vars) {
  const std::size_t n = p.vars().size();
  std::vector<HalfLaurentN> images;
  images.reserve(n);
  for (const auto& v : p.vars()) {
    auto it = bindings.find(v);
    if (it != bindings.end()) {
      if (it->second.vars() != target_vars) throw PolyError("binding for " + v + " has wrong variable list");
      images.push_back(it->second);
    } else {
      images.push_back(HalfLaurentN::variable(target_vars, v));
    }
  }
  TrackedN out;
  out.num = HalfLaurentN(target_vars);
  out.den_base = HalfLaurentN::constant(target_vars, 1);
  if (p.is_zero()) return out;

  // the single variable allowed to carry a polynomial denominator
  int den_var = -1;
  int shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_monomial(images[i])) continue;
    const int lo = p.min_exp(static_cast<int>(i));
    if (lo < 0) {
      if (den_var >= 0) throw PolyError("more than one non-monomial denominator");
      den_var = static_cast<int>(i);
      shift = (-lo + 1) / 2;
    }
    for (const auto& [e, c] : p.terms())
      if (e[i] % 2 != 0) throw PolyError("half power of a non-monomial image for " + p.vars()[i]);
  }

  std::vector<std::map<int, HalfLaurentN>> cache(n);
  auto power = [&](std::size_t i, int e) -> const HalfLaurentN& {
    auto it = cache[i].find(e);
    if (it != cache[i].end()) return it->second;
    HalfLaurentN v = is_monomial(images[i]) ? monomial_power(images[i], e)
                                            : images[i].pow(static_cast<unsigned>(e / 2));
    return cache[i].emplace(e, std::move(v)).first->second;
  };

  for (const auto& [e, c] : p.terms()) {
    HalfLaurentN term = HalfLaurentN::constant(target_vars, c);
    for (std::size_t i = 0; i < n; ++i) {
      int ei = e[i];
      if (static_cast<int>(i) == den_var) ei += 2 * shift;
      if (ei == 0) continue;
      term = term * power(i, ei);
    }
    out.num += term;
  }
  if (den_var >= 0) {
    out.den_base = images[den_var];
    out.den_exp = shift;
    // reduce: divide by the base while exact
    while (out.den_exp > 0) {
      if (out.num.is_zero()) {
        out.den_exp = 0;
        break;
      }
      // den_base must be a one-variable polynomial for the exact divide
      int var = -1;
      for (std::size_t j = 0; j < target_vars.size(); ++j)
        if (out.den_base.min_exp(static_cast<int>(j)) != 0 || out.den_base.max_exp(static_cast<int>(j)) != 0) {
          if (var >= 0) throw PolyError("tracked denominator must be univariate");
          var = static_cast<int>(j);
        }
      auto q = divide_exact(out.num, out.den_base.to1(target_vars[var]), target_vars[var]);
      if (!q) break;
      out.num = std::move(*q);
      --out.den_exp;
    }
    if (out.den_exp == 0) out.den_base = HalfLaurentN::constant(target_vars, 1);
  }
  return out;
}

Tracked1 specialize1(const HalfLaurentN& p, const std::map<std::string, HalfLaurent1>& bindings,
                     const std::string& target_var) {
  const std::vector<std::string> tv{target_var};
  std::map<std::string, HalfLaurentN> b;
  for (const auto& [k, v] : bindings) b.emplace(k, HalfLaurentN::from1(tv, target_var, v));
  for (const auto& v : p.vars())
    if (!b.count(v) && v != target_var) throw PolyError("specialize1: variable " + v + " left unbound");
  TrackedN r = specialize(p, b, tv);
  Tracked1 out;
  out.num = r.num.to1(target_var);
  out.den_base = r.den_base.to1(target_var);
  out.den_exp = r.den_exp;
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string exponent_suffix(int doubled) {
  if (doubled == 2) return "";
  if (doubled % 2 == 0) return "^" + std::to_string(doubled / 2);
  return "^{" + std::to_string(doubled) + "/2}";
}

std::string monomial_text(const std::vector<std::string>& vars, const std::vector<int>& e) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i] + exponent_suffix(e[i]);
  }
  return s;
}

std::string join_terms(const std::vector<std::pair<BigInt, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    const bool neg = c < 0;
    const BigInt mag = abs_big(c);
    std::string body;
    if (mono.empty())
      body = mag.str();
    else if (mag == 1)
      body = mono;
    else
      body = mag.str() + "*" + mono;
    if (first)
      out += (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> vars, bool infer)
      : s_(text), vars_(std::move(vars)), infer_(infer) {}

  HalfLaurentN::Terms parse() {
    HalfLaurentN::Terms terms;
    skip_ws();
    if (pos_ >= s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_ws();
      auto [c, e] = parse_term();
      if (sign < 0) c = -c;
      terms_.push_back({std::move(e), std::move(c)});
      first = false;
    }
    for (auto& [e, c] : terms_) {
      e.resize(vars_.size(), 0);
      add_into(terms, e, c);
    }
    return terms;
  }

  const std::vector<std::string>& vars() const { return vars_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw PolyError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  BigInt parse_uint() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  int parse_int() {
    int sign = 1;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    return sign * static_cast<int>(parse_uint());
  }

  // returns a doubled exponent
  int parse_exponent() {
    skip_ws();
    if (pos_ < s_.size() && (s_[pos_] == '{' || s_[pos_] == '(')) {
      const char close = s_[pos_] == '{' ? '}' : ')';
      ++pos_;
      skip_ws();
      const int num = parse_int();
      skip_ws();
      int doubled = 2 * num;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        const int den = parse_int();
        if (den == 1)
          doubled = 2 * num;
        else if (den == 2)
          doubled = num;
        else
          fail("exponent denominator must be 1 or 2");
        skip_ws();
      }
      if (pos_ >= s_.size() || s_[pos_] != close) fail("unterminated exponent");
      ++pos_;
      return doubled;
    }
    return 2 * parse_int();
  }

  std::pair<BigInt, std::vector<int>> parse_term() {
    BigInt coef = 1;
    std::vector<int> e(vars_.size(), 0);
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) fail("expected a factor");
      const char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coef *= parse_uint();
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        const std::string name(s_.substr(start, pos_ - start));
        int idx = static_cast<int>(std::find(vars_.begin(), vars_.end(), name) - vars_.begin());
        if (idx == static_cast<int>(vars_.size())) {
          if (!infer_) fail("unknown variable '" + name + "'");
          vars_.push_back(name);
          e.push_back(0);
        }
        skip_ws();
        int d = 2;
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          d = parse_exponent();
        }
        e[idx] += d;
      } else if (ch == '(' ) {
        fail("parenthesized subexpressions are not supported");
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      any = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {coef, e};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
  bool infer_;
  std::vector<std::pair<std::vector<int>, BigInt>> terms_;
};

}  // namespace

std::string to_string(const HalfLaurent1& p, std::string_view var) {
  std::vector<std::pair<BigInt, std::string>> terms;
  const std::vector<std::string> vars{std::string(var)};
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.emplace_back(it->second, monomial_text(vars, {it->first}));
  return join_terms(terms);
}

std::string to_string(const HalfLaurentN& p) {
  std::vector<std::pair<BigInt, std::string>> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.emplace_back(it->second, monomial_text(p.vars(), it->first));
  return join_terms(terms);
}

HalfLaurent1 parse_poly1(std::string_view text, std::string_view var) {
  Parser parser(text, {std::string(var)}, false);
  HalfLaurent1 p;
  for (const auto& [e, c] : parser.parse()) p.add_term(e[0], c);
  return p;
}

HalfLaurentN parse_polyN(std::string_view text, const std::vector<std::string>& vars) {
  Parser parser(text, vars, false);
  auto terms = parser.parse();
  return HalfLaurentN(vars, std::move(terms));
}

HalfLaurentN parse_polyN(std::string_view text) {
  Parser parser(text, {}, true);
  auto terms = parser.parse();
  return HalfLaurentN(parser.vars(), std::move(terms));
}

}  // namespace km
