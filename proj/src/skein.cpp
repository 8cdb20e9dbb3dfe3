#include "km/skein.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

namespace km {

namespace {

// P(v,z) with machine coefficients during the recursion; overflow is checked.
class VZ {
 public:
  using Key = std::pair<int, int>;  // (v exponent, z exponent), not doubled
  std::map<Key, long long> t;

  static VZ one() {
    VZ p;
    p.t[{0, 0}] = 1;
    return p;
  }
  // (v^-1 - v) z^-1
  static VZ delta() {
    VZ p;
    p.t[{-1, -1}] = 1;
    p.t[{1, -1}] = -1;
    return p;
  }
  void add_scaled(const VZ& o, int dv, int dz, long long c) {
    for (const auto& [k, a] : o.t) {
      long long prod, sum;
      if (__builtin_mul_overflow(a, c, &prod)) throw SkeinError("skein coefficient overflow");
      auto& slot = t[{k.first + dv, k.second + dz}];
      if (__builtin_add_overflow(slot, prod, &sum)) throw SkeinError("skein coefficient overflow");
      slot = sum;
      if (slot == 0) t.erase({k.first + dv, k.second + dz});
    }
  }
  friend VZ operator*(const VZ& a, const VZ& b) {
    VZ r;
    for (const auto& [k, c] : b.t) r.add_scaled(a, k.first, k.second, c);
    return r;
  }
  VZ pow(int n) const {
    VZ r = one();
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }
};

// Oriented crossing structure.  Each crossing has two strands 0 and 1; the
// incoming end of strand s at crossing c is node 2c+s, and next[s] is the node
// the strand enters after leaving c.
struct X {
  int sign;
  int over;  // strand index that passes over
  std::array<int, 2> next;
};

struct State {
  std::vector<X> xs;
  int loops = 0;
};

State from_diagram(const DiagramCode& d) {
  const EndGraph& g = d.graph();
  State s;
  s.loops = g.free_loops;
  s.xs.resize(g.size());
  auto node_of = [&](int end) {
    const Crossing& x = g.crossings[end / 4];
    return 2 * (end / 4) + (end % 4 == x.over_in() ? 0 : 1);
  };
  for (int c = 0; c < g.size(); ++c) {
    const Crossing& x = g.crossings[c];
    s.xs[c].sign = x.sign;
    s.xs[c].over = 0;
    s.xs[c].next[0] = node_of(g.partner[4 * c + x.over_out()]);
    s.xs[c].next[1] = node_of(g.partner[4 * c + x.under_out()]);
  }
  return s;
}

// Delete crossing c; `into[k]` gives the node that replaces incoming node 2c+k.
// Pointers equal to a node of c are chased through `into`; cycles become loops.
void remove_crossing(State& s, int c, std::array<int, 2> into) {
  const int a = 2 * c, b = 2 * c + 1;
  auto resolve = [&](int x) {
    for (int guard = 0; guard < 3 && (x == a || x == b); ++guard) x = into[x - a];
    return x;
  };
  // closed cycles entirely inside c
  if (into[0] == a) ++s.loops;
  if (into[1] == b) ++s.loops;
  if (into[0] == b && into[1] == a) ++s.loops;
  const int n = static_cast<int>(s.xs.size());
  for (int y = 0; y < n; ++y) {
    if (y == c) continue;
    for (int& nx : s.xs[y].next) nx = resolve(nx);
  }
  // renumber crossings above c
  s.xs.erase(s.xs.begin() + c);
  for (X& x : s.xs)
    for (int& nx : x.next)
      if (nx >= 2 * c) nx -= 2;
}

void smooth(State& s, int c) {
  // strand 0 in continues out of strand 1 and vice versa
  const X x = s.xs[c];
  remove_crossing(s, c, {x.next[1], x.next[0]});
}

bool remove_kink(State& s) {
  for (int c = 0; c < static_cast<int>(s.xs.size()); ++c) {
    const X x = s.xs[c];
    for (int k = 0; k < 2; ++k) {
      if (x.next[k] != 2 * c + (1 - k)) continue;
      // strand k leaves into strand 1-k: the loop is a curl
      if (x.next[1 - k] == 2 * c + k) {
        remove_crossing(s, c, {2 * c, 2 * c + 1});  // both into themselves: one loop
        s.loops -= 1;                                 // two counted, one closed curve
      } else {
        std::array<int, 2> into{};
        into[k] = x.next[1 - k];
        into[1 - k] = x.next[1 - k];
        remove_crossing(s, c, into);
      }
      return true;
    }
  }
  return false;
}

std::vector<std::vector<int>> pieces(const State& s) {
  const int n = static_cast<int>(s.xs.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (int c = 0; c < n; ++c)
    for (int nx : s.xs[c].next) p[find(c)] = find(nx / 2);
  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < n; ++c) groups[find(c)].push_back(c);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : groups) out.push_back(std::move(v));
  return out;
}

State restrict_to(const State& s, const std::vector<int>& cs) {
  std::vector<int> idx(s.xs.size(), -1);
  for (std::size_t i = 0; i < cs.size(); ++i) idx[cs[i]] = static_cast<int>(i);
  State r;
  for (int c : cs) {
    X x = s.xs[c];
    for (int& nx : x.next) nx = 2 * idx[nx / 2] + nx % 2;
    r.xs.push_back(x);
  }
  return r;
}

// Gauss code from one start node; components after the first start at the
// lowest-labelled crossing with an unvisited strand.
std::vector<int> code_from(const State& s, int start) {
  const int n = static_cast<int>(s.xs.size());
  std::vector<int> label(n, -1), order;
  std::vector<bool> seen(2 * n, false);
  std::vector<int> code;
  code.reserve(4 * n);
  int next_label = 0;
  int x = start;
  while (true) {
    while (!seen[x]) {
      seen[x] = true;
      const int c = x / 2;
      if (label[c] < 0) {
        label[c] = next_label++;
        order.push_back(c);
      }
      const X& cr = s.xs[c];
      code.push_back(4 * label[c] + (x % 2 == cr.over ? 2 : 0) + (cr.sign > 0 ? 1 : 0));
      x = cr.next[x % 2];
    }
    code.push_back(-1);
    x = -1;
    for (int c : order) {
      if (!seen[2 * c]) x = 2 * c;
      else if (!seen[2 * c + 1]) x = 2 * c + 1;
      if (x >= 0) break;
    }
    if (x < 0) break;
  }
  return code;
}

std::string canonical_key(const State& s) {
  std::vector<int> best;
  for (int st = 0; st < 2 * static_cast<int>(s.xs.size()); ++st) {
    auto c = code_from(s, st);
    if (best.empty() || c < best) best = std::move(c);
  }
  std::string key;
  key.reserve(best.size());
  for (int v : best) key.push_back(static_cast<char>(v + 1));
  return key;
}

// First crossing met from under in the descending traversal, or -1.
// Also reports the number of components.
int first_bad(const State& s, int& components) {
  const int n = static_cast<int>(s.xs.size());
  std::vector<bool> seen_node(2 * n, false), seen_cross(n, false);
  components = 0;
  for (int st = 0; st < 2 * n; ++st) {
    if (seen_node[st]) continue;
    ++components;
    for (int x = st; !seen_node[x]; x = s.xs[x / 2].next[x % 2]) {
      seen_node[x] = true;
      const int c = x / 2;
      if (!seen_cross[c]) {
        seen_cross[c] = true;
        if (x % 2 != s.xs[c].over) return c;
      }
    }
  }
  return -1;
}

class Engine {
 public:
  Engine(const SkeinOptions& opt, SkeinStats* stats) : opt_(opt), stats_(stats) {}

  VZ eval(State s) {
    if (stats_) ++stats_->calls;
    while (remove_kink(s)) {
    }
    VZ factor = VZ::one();
    if (s.loops > 0) {
      const int k = s.xs.empty() ? s.loops - 1 : s.loops;
      factor = VZ::delta().pow(k);
      s.loops = 0;
    }
    if (s.xs.empty()) return factor;
    const auto ps = pieces(s);
    if (ps.size() > 1) {
      VZ r = factor * VZ::delta().pow(static_cast<int>(ps.size()) - 1);
      for (const auto& p : ps) r = r * eval(restrict_to(s, p));
      return r;
    }
    std::string key;
    if (opt_.memo) {
      key = canonical_key(s);
      if (auto it = memo_.find(key); it != memo_.end()) {
        if (stats_) ++stats_->memo_hits;
        return factor * it->second;
      }
    }
    VZ r = connected(s);
    if (opt_.memo) memo_.emplace(std::move(key), r);
    return factor * r;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  VZ connected(const State& s) {
    int comps = 0;
    const int c = first_bad(s, comps);
    if (c < 0) return VZ::delta().pow(comps - 1);
    State sw = s;
    sw.xs[c].over = 1 - sw.xs[c].over;
    sw.xs[c].sign = -sw.xs[c].sign;
    State sm = s;
    smooth(sm, c);
    const VZ a = eval(std::move(sw));
    const VZ b = eval(std::move(sm));
    VZ r;
    if (s.xs[c].sign > 0) {
      // P+ = v^2 P- + v z P0
      r.add_scaled(a, 2, 0, 1);
      r.add_scaled(b, 1, 1, 1);
    } else {
      // P- = v^-2 P+ - v^-1 z P0
      r.add_scaled(a, -2, 0, 1);
      r.add_scaled(b, -1, 1, -1);
    }
    return r;
  }

  SkeinOptions opt_;
  SkeinStats* stats_;
  std::unordered_map<std::string, VZ> memo_;
};

HalfLaurentN to_poly(const VZ& p) {
  HalfLaurentN r(vz_vars());
  for (const auto& [k, c] : p.t) r.add_term({2 * k.first, 2 * k.second}, c);
  return r;
}

}  // namespace

const std::vector<std::string>& vz_vars() {
  static const std::vector<std::string> v{"v", "z"};
  return v;
}

HalfLaurentN homflypt(const DiagramCode& d, const SkeinOptions& opt, SkeinStats* stats) {
  if (d.crossing_count() > opt.crossing_cap)
    throw SkeinError("diagram has " + std::to_string(d.crossing_count()) + " crossings, above the cap of " +
                     std::to_string(opt.crossing_cap));
  if (d.crossing_count() == 0 && d.circles().empty()) throw SkeinError("empty diagram");
  Engine e(opt, stats);
  const HalfLaurentN r = to_poly(e.eval(from_diagram(d)));
  if (stats) stats->memo_size = e.memo_size();
  return r;
}

TrackedN hat_p_tracked(const HalfLaurentN& p) {
  static const std::vector<std::string> vt{"v", "t"};
  return specialize(p, {{"z", HalfLaurentN::from1(vt, "t", HalfLaurent1::z_of_t())}}, vt);
}

HalfLaurentN hat_p(const HalfLaurentN& p) {
  const TrackedN t = hat_p_tracked(p);
  if (!t.is_polynomial()) throw SkeinError("hat P has a (t^{1/2} - t^{-1/2}) denominator; use hat_p_tracked for links");
  return t.num;
}

HalfLaurent1 jones(const HalfLaurentN& p) {
  const Tracked1 r = specialize1(p, {{"v", HalfLaurent1::monomial(1, 2)}, {"z", HalfLaurent1::z_of_t()}}, "t");
  if (!r.is_polynomial()) throw SkeinError("Jones specialization left a denominator");
  return r.num;
}

HalfLaurent1 alexander(const HalfLaurentN& p) {
  const Tracked1 r = specialize1(p, {{"v", HalfLaurent1::constant(1)}, {"z", HalfLaurent1::z_of_t()}}, "t");
  if (!r.is_polynomial()) throw SkeinError("Alexander specialization left a denominator");
  return r.num;
}

HalfLaurentN hat_p(const DiagramCode& d, const SkeinOptions& opt) { return hat_p(homflypt(d, opt)); }
HalfLaurent1 jones(const DiagramCode& d, const SkeinOptions& opt) { return jones(homflypt(d, opt)); }
HalfLaurent1 alexander(const DiagramCode& d, const SkeinOptions& opt) { return alexander(homflypt(d, opt)); }

HalfLaurentN skein_residual(const DiagramCode& d, int c, const SkeinOptions& opt) {
  const DiagramCode other = switch_crossings(d, {c});
  const DiagramCode zero = smooth_crossings(d, {c}, false);
  const HalfLaurentN p = homflypt(d, opt), q = homflypt(other, opt), r = homflypt(zero, opt);
  const HalfLaurentN& plus = d.crossings()[c].sign > 0 ? p : q;
  const HalfLaurentN& minus = d.crossings()[c].sign > 0 ? q : p;
  const auto& vz = vz_vars();
  return HalfLaurentN::variable(vz, "v", -2) * plus - HalfLaurentN::variable(vz, "v") * minus -
         HalfLaurentN::variable(vz, "z") * r;
}

// ---------------------------------------------------------------------------
// tangles

Tangle basis_s1() { return Tangle::infinity(); }

Tangle basis_s2(int id) { return Tangle::crossing(1, id); }

DiagramCode closure_with(const Tangle& t, const Tangle& s) {
  return denominator(t.renumbered(1).oriented_downward() * s.renumbered(1000).oriented_downward());
}

TangleCoeffs tangle_coeffs_2strand(const Tangle& t, const SkeinOptions& opt) {
  const Tangle s1 = basis_s1();
  const Tangle s22 = basis_s2(1) * basis_s2(2);
  // S = S1: D(S1*S1) is a 2-component unlink (0), D(S2*S1) an unknot (1)
  const HalfLaurent1 g = alexander(closure_with(t, s1), opt);
  // S = S2*S2: D(S1*S) is a Hopf link, D(S2*S) a trefoil
  const HalfLaurent1 hopf = alexander(closure_with(s1, s22), opt);
  const HalfLaurent1 tre = alexander(closure_with(basis_s2(), s22), opt);
  const HalfLaurent1 lhs = alexander(closure_with(t, s22), opt) - g * tre;
  if (hopf.is_zero()) throw SkeinError("tangle_coeffs: degenerate closures");
  const auto f = divide_exact(lhs, hopf);
  if (!f) throw SkeinError("tangle_coeffs: coefficient f is not a Laurent polynomial");
  return {*f, g};
}

bool tangle_coeffs_reconstruct(const Tangle& t, const TangleCoeffs& c, const Tangle& s, const SkeinOptions& opt) {
  const HalfLaurent1 lhs = alexander(closure_with(t, s), opt);
  const HalfLaurent1 rhs = c.f * alexander(closure_with(basis_s1(), s), opt) +
                           c.g * alexander(closure_with(basis_s2(), s), opt);
  return lhs == rhs;
}

}  // namespace km
