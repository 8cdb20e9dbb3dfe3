#include "km/twistfam.hpp"

#include "km/construct.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace km {

std::string to_string(SiteKind k) {
  switch (k) {
    case SiteKind::parallel: return "par";
    case SiteKind::apar_even: return "apar-even";
    case SiteKind::apar_odd: return "apar-odd";
  }
  return "?";
}

SiteKind parse_site_kind(const std::string& s) {
  if (s == "par") return SiteKind::parallel;
  if (s == "apar-even") return SiteKind::apar_even;
  if (s == "apar-odd") return SiteKind::apar_odd;
  throw DiagramError("unknown site kind '" + s + "'");
}

std::string to_string(Invariant w) {
  switch (w) {
    case Invariant::alexander: return "alexander";
    case Invariant::jones: return "jones";
    case Invariant::hatp: return "hatp";
    case Invariant::homflypt: return "homflypt";
  }
  return "?";
}

Invariant parse_invariant(const std::string& s) {
  if (s == "alexander" || s == "delta" || s == "Δ") return Invariant::alexander;
  if (s == "jones" || s == "V") return Invariant::jones;
  if (s == "hatp" || s == "P̂") return Invariant::hatp;
  if (s == "homflypt" || s == "P") return Invariant::homflypt;
  throw std::invalid_argument("unknown polynomial '" + s + "'");
}

namespace {

// position p with p and p+1 both incoming
int in_pair(const Crossing& x) {
  for (int p = 0; p < 4; ++p)
    if (x.incoming(p) && x.incoming((p + 1) % 4)) return p;
  throw DiagramError("internal: crossing without an incoming pair");
}

bool is_anti(SiteKind k) { return k != SiteKind::parallel; }

}  // namespace

WiringDiagram::WiringDiagram(DiagramCode tmpl, std::vector<TwistSite> sites)
    : tmpl_(std::move(tmpl)), sites_(std::move(sites)) {
  std::set<int> used_x, used_arcs;
  const EndGraph& g = tmpl_.graph();
  for (const TwistSite& s : sites_) {
    const std::string where = "site " + s.label + ": ";
    if (s.at_crossing) {
      if (tmpl_.index_of(s.crossing_id) < 0)
        throw DiagramError(where + "no crossing X" + std::to_string(s.crossing_id));
      if (!used_x.insert(s.crossing_id).second) throw DiagramError(where + "crossing used twice");
      if (s.kind == SiteKind::apar_even)
        throw DiagramError(where + "an even anti-parallel site sits on two arcs, not a crossing");
    } else {
      if (!used_arcs.insert(s.arc_a).second || !used_arcs.insert(s.arc_b).second)
        throw DiagramError(where + "arc used twice");
      const auto [da, db] = arc_site_darts(g, s.arc_a, s.arc_b);
      const SiteKind actual = g.outgoing(da) == g.outgoing(db) ? SiteKind::apar_even : SiteKind::parallel;
      if (s.kind == SiteKind::apar_odd)
        throw DiagramError(where + "an odd anti-parallel site needs a crossing");
      if (s.kind != actual)
        throw DiagramError(where + "strands are " + (actual == SiteKind::parallel ? "parallel" : "anti-parallel") +
                           ", declared " + to_string(s.kind));
    }
  }
}

int WiringDiagram::base_value(int i) const {
  const TwistSite& s = sites_.at(i);
  if (!s.at_crossing) return 0;
  return tmpl_.crossings()[tmpl_.index_of(s.crossing_id)].sign;
}

std::vector<int> WiringDiagram::base_values() const {
  std::vector<int> q;
  for (int i = 0; i < order(); ++i) q.push_back(base_value(i));
  return q;
}

WiringDiagram parse_wiring(const std::string& text) {
  static const std::regex site(
      R"(^\s*SITE\s+(\S+)\s+kind=(\S+)\s+at=(?:(-?\d+)|\(?(\d+),(\d+)\)?)\s*(#.*)?$)");
  std::istringstream in(text);
  std::string line, body;
  std::vector<TwistSite> sites;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find("SITE") == std::string::npos || line.find("SITE") != line.find_first_not_of(" \t")) {
      body += line + "\n";
      continue;
    }
    body += "\n";  // keep diagram line numbers
    std::smatch m;
    if (!std::regex_match(line, m, site)) throw DiagramError("line " + std::to_string(lineno) + ": bad SITE line");
    TwistSite s;
    s.label = m[1];
    s.kind = parse_site_kind(m[2]);
    if (m[3].matched) {
      s.crossing_id = std::stoi(m[3]);
    } else {
      s.at_crossing = false;
      s.arc_a = std::stoi(m[4]);
      s.arc_b = std::stoi(m[5]);
    }
    sites.push_back(s);
  }
  return WiringDiagram(parse_diagram(body), std::move(sites));
}

WiringDiagram load_wiring_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DiagramError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_wiring(ss.str());
}

std::string print_wiring(const WiringDiagram& w) {
  std::string out = print_diagram(w.template_diagram());
  for (const TwistSite& s : w.sites()) {
    out += "SITE " + s.label + " kind=" + to_string(s.kind) + " at=";
    out += s.at_crossing ? std::to_string(s.crossing_id) : std::to_string(s.arc_a) + "," + std::to_string(s.arc_b);
    out += "\n";
  }
  return out;
}

void check_admissible(const WiringDiagram& w, const std::vector<int>& q) {
  if (static_cast<int>(q.size()) != w.order())
    throw DiagramError("expected " + std::to_string(w.order()) + " twist values, got " + std::to_string(q.size()));
  for (int i = 0; i < w.order(); ++i) {
    const TwistSite& s = w.sites()[i];
    const std::string where = "site " + s.label + ": ";
    if (q[i] == q_infinity) {
      if (!is_anti(s.kind)) throw DiagramError(where + "infinity is not allowed at a parallel site");
      continue;
    }
    if (s.kind == SiteKind::apar_even && q[i] % 2 != 0) throw DiagramError(where + "q must be even");
    if (s.kind == SiteKind::apar_odd && q[i] % 2 == 0) throw DiagramError(where + "q must be odd");
  }
}

DiagramCode realize(const WiringDiagram& w, const std::vector<int>& q) {
  check_admissible(w, q);
  const DiagramCode& d = w.template_diagram();
  std::vector<Splice> sp;
  std::vector<int> qs;
  for (int i = 0; i < w.order(); ++i) {
    if (q[i] == w.base_value(i)) continue;
    const TwistSite& s = w.sites()[i];
    Splice x;
    x.at_crossing = s.at_crossing;
    if (s.at_crossing) {
      x.crossing_index = d.index_of(s.crossing_id);
      x.axis = in_pair(d.crossings()[x.crossing_index]);
      if (s.kind == SiteKind::apar_odd) x.axis = (x.axis + 1) % 4;
    } else {
      x.arc_a = s.arc_a;
      x.arc_b = s.arc_b;
    }
    x.tangle = q[i] == q_infinity ? Tangle::infinity() : Tangle::integer(q[i]);
    sp.push_back(x);
    qs.push_back(q[i]);
  }
  if (sp.empty()) return d;
  // the crossing sign of a row depends on how the host orients it; flip rows that came out wrong
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<std::vector<int>> ids;
    DiagramCode r = splice(d, sp, &ids);
    bool again = false;
    for (std::size_t j = 0; j < sp.size(); ++j) {
      if (ids[j].empty()) continue;
      const int want = qs[j] > 0 ? 1 : -1;
      for (int id : ids[j])
        if (r.crossings()[r.index_of(id)].sign != want) {
          if (pass == 1) throw DiagramError("internal: twist row has mixed signs");
          sp[j].tangle = Tangle::integer(-qs[j]);
          again = true;
          break;
        }
    }
    if (!again) return r;
  }
  throw DiagramError("internal: twist sign calibration failed");
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string>& vars_for(Invariant w) {
  static const std::vector<std::string> t{"t"}, vt{"v", "t"}, vz{"v", "z"};
  switch (w) {
    case Invariant::alexander:
    case Invariant::jones: return t;
    case Invariant::hatp: return vt;
    case Invariant::homflypt: return vz;
  }
  return t;
}

// monomial v^{dv/2} t^{dt/2} (or z for homflypt) in the formula variables
HalfLaurentN mono(Invariant w, int dv, int dt, const BigInt& c = 1) {
  const auto& vars = vars_for(w);
  if (vars.size() == 1) {
    if (dv != 0) throw PolyError("internal: v in a one-variable formula");
    return HalfLaurentN::monomial(vars, c, {dt});
  }
  return HalfLaurentN::monomial(vars, c, {dv, dt});
}

HalfLaurentN div_t_plus_1(const HalfLaurentN& p, const char* what) {
  static const HalfLaurent1 tp1 = HalfLaurent1::from_coeffs({1, 1});
  auto r = divide_exact(p, tp1, "t");
  if (!r) throw PolyError(std::string(what) + ": (t+1) does not divide the cleared form; wrong base polynomials?");
  return *r;
}

// (v^q - 1)/(v - v^{-1}) for even q
HalfLaurentN geometric(Invariant w, int q) {
  HalfLaurentN g(vars_for(w));
  if (q >= 0) {
    for (int k = 0; k < q / 2; ++k) g += mono(w, 2 * (2 * k + 1), 0);
    return g;
  }
  return -(mono(w, 2 * q, 0) * geometric(w, -q));
}

HalfLaurentN z_like(Invariant w) {
  if (w == Invariant::homflypt) return mono(w, 0, 2);
  return mono(w, 0, 1) - mono(w, 0, -1);
}

}  // namespace

HalfLaurentN TwistFormula::at(int q) const {
  if (den_exp > 0) return at_tracked(q).value();
  const Invariant w = which;
  if (kind == SiteKind::parallel) {
    if (q == q_infinity) throw PolyError("parallel twist formula at infinity");
    auto T = [&](int k) { return mono(w, 0, k); };
    const BigInt s = q % 2 == 0 ? 1 : -1;
    HalfLaurentN num;
    switch (w) {
      case Invariant::alexander:
        num = (base + T(1) * other) * T(q) + ((T(2) * base - T(1) * other) * T(-q)) * s;
        break;
      case Invariant::jones:
        num = (base + T(-1) * other) * T(3 * q) + ((T(2) * base - T(-1) * other) * T(q)) * s;
        break;
      case Invariant::hatp: {
        const HalfLaurentN vt = mono(w, -2, 1);
        num = mono(w, 2 * q, 0) * ((base + vt * other) * T(q) + ((T(2) * base - vt * other) * T(-q)) * s);
        break;
      }
      case Invariant::homflypt: throw PolyError("parallel twist formula needs t; use hatp");
    }
    return div_t_plus_1(num, "parallel twist");
  }
  if (q == q_infinity) return other;
  const int need = kind == SiteKind::apar_even ? 0 : 1;
  if (((q % 2) + 2) % 2 != need) throw PolyError("anti-parallel twist formula: wrong parity of q");
  const int e = q - need;  // twists added to the base diagram
  switch (w) {
    case Invariant::alexander: return base + z_like(w) * other * BigInt(e / 2);
    case Invariant::jones: {
      const HalfLaurentN u = mono(w, 0, 1);
      const HalfLaurentN tp1 = mono(w, 0, 2) + mono(w, 0, 0);
      return div_t_plus_1((tp1 * base + u * other) * mono(w, 0, 2 * e) - u * other, "anti-parallel twist");
    }
    case Invariant::hatp:
    case Invariant::homflypt: return geometric(w, e) * z_like(w) * other + mono(w, 2 * e, 0) * base;
  }
  return {};
}

TrackedN reduce_hatp(HalfLaurentN num, int k) {
  static const HalfLaurent1 z = HalfLaurent1::z_of_t();
  while (k > 0 && !num.is_zero()) {
    auto d = divide_exact(num, z, "t");
    if (!d) break;
    num = *d;
    --k;
  }
  if (num.is_zero()) k = 0;
  TrackedN r;
  r.num = num;
  r.den_exp = k;
  r.den_base = HalfLaurentN::from1({"v", "t"}, "t", z);
  return r;
}

TrackedN TwistFormula::at_tracked(int q) const {
  TwistFormula f = *this;
  f.den_exp = 0;
  HalfLaurentN num = f.at(q);
  if (which == Invariant::hatp) return reduce_hatp(num, den_exp);
  TrackedN r;
  r.num = num;
  return r;
}

HalfLaurent1 TwistFormula::at1(int q) const { return at(q).to1("t"); }

namespace {

HalfLaurentN lift(const HalfLaurent1& p, Invariant which) {
  if (which != Invariant::alexander && which != Invariant::jones)
    throw PolyError("one-variable base polynomials only for alexander and jones");
  return HalfLaurentN::from1({"t"}, "t", p);
}

void check_vars(const HalfLaurentN& p, Invariant which) {
  if (p.vars() != vars_for(which)) throw PolyError("twist formula: base polynomial has the wrong variables");
}

}  // namespace

TwistFormula parallel_closed_form(const HalfLaurentN& p0, const HalfLaurentN& p1, Invariant which) {
  if (which == Invariant::homflypt) throw PolyError("parallel twist formula needs t; use hatp");
  check_vars(p0, which);
  check_vars(p1, which);
  return {SiteKind::parallel, which, p0, p1};
}

TwistFormula parallel_closed_form(const HalfLaurent1& p0, const HalfLaurent1& p1, Invariant which) {
  return parallel_closed_form(lift(p0, which), lift(p1, which), which);
}

TwistFormula antiparallel_closed_form(const HalfLaurentN& pb, const HalfLaurentN& pinf, Invariant which,
                                      SiteKind kind) {
  if (kind == SiteKind::parallel) throw PolyError("antiparallel_closed_form: kind must be anti-parallel");
  check_vars(pb, which);
  check_vars(pinf, which);
  return {kind, which, pb, pinf};
}

TwistFormula antiparallel_closed_form(const HalfLaurent1& pb, const HalfLaurent1& pinf, Invariant which,
                                      SiteKind kind) {
  return antiparallel_closed_form(lift(pb, which), lift(pinf, which), which, kind);
}

HalfLaurentN invariant_of(const DiagramCode& d, Invariant which, const SkeinOptions& opt) {
  const HalfLaurentN p = homflypt(d, opt);
  switch (which) {
    case Invariant::alexander: return HalfLaurentN::from1({"t"}, "t", alexander(p));
    case Invariant::jones: return HalfLaurentN::from1({"t"}, "t", jones(p));
    case Invariant::hatp: return hat_p(p);
    case Invariant::homflypt: return p;
  }
  return p;
}

TrackedN tracked_invariant_of(const DiagramCode& d, Invariant which, const SkeinOptions& opt) {
  if (which == Invariant::hatp) return hat_p_tracked(homflypt(d, opt));
  TrackedN r;
  r.num = invariant_of(d, which, opt);
  return r;
}

namespace {

// numerators of a and b over a common power of (t^{1/2} - t^{-1/2})
int common_denominator(TrackedN& a, TrackedN& b) {
  const int k = std::max(a.den_exp, b.den_exp);
  const HalfLaurentN z = HalfLaurentN::from1({"v", "t"}, "t", HalfLaurent1::z_of_t());
  for (TrackedN* x : {&a, &b}) {
    if (x->num.vars().empty()) x->num = HalfLaurentN({"v", "t"});
    x->num = x->num * z.pow(k - x->den_exp);
    x->den_exp = k;
  }
  return k;
}

}  // namespace

TwistFormula site_closed_form(const WiringDiagram& w, int site, const std::vector<int>& rest, Invariant which,
                              const SkeinOptions& opt) {
  const SiteKind kind = w.sites().at(site).kind;
  std::vector<int> q = rest;
  auto inv = [&](int value) {
    q.at(site) = value;
    return tracked_invariant_of(realize(w, q), which, opt);
  };
  TrackedN a = inv(kind == SiteKind::apar_odd ? 1 : 0);
  TrackedN b = inv(kind == SiteKind::parallel ? 1 : q_infinity);
  const int k = which == Invariant::hatp ? common_denominator(a, b) : 0;
  TwistFormula f = kind == SiteKind::parallel ? parallel_closed_form(a.num, b.num, which)
                                              : antiparallel_closed_form(a.num, b.num, which, kind);
  f.den_exp = k;
  return f;
}

// ---------------------------------------------------------------------------
// envelopes

namespace {

struct EnvVars {
  std::vector<std::string> names;

  HalfLaurentN m(const BigInt& c, std::initializer_list<std::pair<std::string, int>> powers) const {
    HalfLaurentN::Exponents e(names.size(), 0);
    for (const auto& [name, k] : powers) {
      const auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw PolyError("internal: envelope variable " + name);
      e[it - names.begin()] += 2 * k;
    }
    return HalfLaurentN::monomial(names, c, e);
  }
  HalfLaurentN one() const { return m(1, {}); }
  HalfLaurentN zero() const { return HalfLaurentN(names); }
};

// base invariant rewritten with u = t^{1/2}, s = v^{1/2}
HalfLaurentN to_env(const HalfLaurentN& p, const EnvVars& ev) {
  HalfLaurentN r(ev.names);
  const int iv = p.var_index("v"), it = p.var_index("t");
  const bool has_s = ev.names[0] == "s";
  const int ju = has_s ? 1 : 0;
  for (const auto& [e, c] : p.terms()) {
    HalfLaurentN::Exponents f(ev.names.size(), 0);
    if (it >= 0) f[ju] = 2 * e[it];
    if (iv >= 0) {
      if (!has_s && e[iv] != 0) throw PolyError("internal: v in a t-only envelope");
      if (has_s) f[0] = 2 * e[iv];
    }
    r.add_term(f, c);
  }
  return r;
}

}  // namespace

Envelope envelope(const WiringDiagram& w, const std::vector<int>& parities, Invariant which,
                  const SkeinOptions& opt, int max_order) {
  if (which == Invariant::homflypt) throw PolyError("envelope: use jones, alexander or hatp");
  const int n = w.order();
  if (n > max_order) throw PolyError("envelope: order " + std::to_string(n) + " exceeds the cap");
  if (static_cast<int>(parities.size()) != n) throw PolyError("envelope: one parity per site");
  Envelope env;
  env.which = which;
  env.parities = parities;
  EnvVars ev;
  if (which == Invariant::hatp) ev.names = {"s", "u"};
  else ev.names = {"u"};
  env.lead = static_cast<int>(ev.names.size());
  for (int i = 0; i < n; ++i) {
    const SiteKind k = w.sites()[i].kind;
    const std::string id = std::to_string(i + 1);
    if (k == SiteKind::apar_even && parities[i] != 0) throw PolyError("envelope: even site given odd parity");
    if (k == SiteKind::apar_odd && parities[i] != 1) throw PolyError("envelope: odd site given even parity");
    if (is_anti(k)) env.apar_sites.push_back(i);
    if (which == Invariant::jones) {
      ev.names.push_back("w" + id);
    } else if (which == Invariant::alexander) {
      if (!is_anti(k)) ev.names.push_back("w" + id);
    } else if (is_anti(k)) {
      ev.names.push_back("a" + id);
    } else {
      ev.names.push_back("w" + id);
      ev.names.push_back("b" + id);
    }
  }

  // base diagrams: each site at one of its two base values
  const int combos = 1 << n;
  auto base_q = [&](int mask, int i) {
    const bool hi = (mask >> i) & 1;
    switch (w.sites()[i].kind) {
      case SiteKind::parallel: return hi ? 1 : 0;
      case SiteKind::apar_even: return hi ? q_infinity : 0;
      case SiteKind::apar_odd: return hi ? q_infinity : 1;
    }
    return 0;
  };
  std::vector<TrackedN> tracked(combos);
  std::vector<std::string> errors(combos);
#pragma omp parallel for schedule(dynamic)
  for (int mask = 0; mask < combos; ++mask) {
    try {
      std::vector<int> q(n);
      for (int i = 0; i < n; ++i) q[i] = base_q(mask, i);
      tracked[mask] = tracked_invariant_of(realize(w, q), which, opt);
    } catch (const std::exception& e) {
      errors[mask] = e.what();
    }
  }
  for (int mask = 0; mask < combos; ++mask)
    if (!errors[mask].empty()) throw SkeinError("envelope base diagram " + std::to_string(mask) + ": " + errors[mask]);
  for (const TrackedN& t : tracked) env.den_exp = std::max(env.den_exp, t.den_exp);
  const HalfLaurentN zt = ev.m(1, {{"u", 1}}) - ev.m(1, {{"u", -1}});
  std::vector<HalfLaurentN> base(combos);
  for (int mask = 0; mask < combos; ++mask)
    base[mask] = to_env(tracked[mask].num, ev) * zt.pow(env.den_exp - tracked[mask].den_exp);

  // per-site coefficient of the low (0) and high (1) base choice
  auto coeff = [&](int i, bool hi, int delta) -> HalfLaurentN {
    const SiteKind k = w.sites()[i].kind;
    const std::string id = std::to_string(i + 1);
    const std::string W = "w" + id, A = "a" + id, B = "b" + id;
    const BigInt sg = parities[i] == 0 ? 1 : -1;
    switch (which) {
      case Invariant::jones:
        if (k == SiteKind::parallel)
          return hi ? ev.m(1, {{"u", -1}, {W, 3}}) - ev.m(sg, {{"u", -1}, {W, 1}})
                    : ev.m(1, {{W, 3}}) + ev.m(sg, {{"u", 2}, {W, 1}});
        if (k == SiteKind::apar_even)
          return hi ? ev.m(1, {{"u", 1}, {W, 2}}) - ev.m(1, {{"u", 1}})
                    : ev.m(1, {{"u", 2}, {W, 2}}) + ev.m(1, {{W, 2}});
        return hi ? ev.m(1, {{"u", -1}, {W, 2}}) - ev.m(1, {{"u", 1}})
                  : ev.m(1, {{W, 2}}) + ev.m(1, {{"u", -2}, {W, 2}});
      case Invariant::alexander:
        if (k == SiteKind::parallel)
          return hi ? ev.m(1, {{"u", 1}, {W, 1}}) - ev.m(sg, {{"u", 1}, {W, -1}})
                    : ev.m(1, {{W, 1}}) + ev.m(sg, {{"u", 2}, {W, -1}});
        if (delta == 1) return hi ? zt : ev.zero();
        if (k == SiteKind::apar_even) return hi ? ev.zero() : ev.m(2, {});
        return hi ? -zt : ev.m(2, {});
      case Invariant::hatp:
        if (k == SiteKind::parallel)
          return hi ? ev.m(1, {{B, 2}, {"s", -2}, {"u", 1}, {W, 1}}) - ev.m(sg, {{B, 2}, {"s", -2}, {"u", 1}, {W, -1}})
                    : ev.m(1, {{B, 2}, {W, 1}}) + ev.m(sg, {{B, 2}, {"u", 2}, {W, -1}});
        if (k == SiteKind::apar_even)
          return hi ? (ev.m(1, {{"s", 2}, {A, 2}}) - ev.m(1, {{"s", 2}})) * zt
                    : ev.m(1, {{"s", 4}, {A, 2}}) - ev.m(1, {{A, 2}});
        return hi ? (ev.m(1, {{A, 2}}) - ev.m(1, {{"s", 2}})) * zt
                  : ev.m(1, {{"s", 2}, {A, 2}}) - ev.m(1, {{"s", -2}, {A, 2}});
      case Invariant::homflypt: break;
    }
    throw PolyError("internal: envelope invariant");
  };

  auto assemble = [&](const std::vector<int>& delta) {
    HalfLaurentN sum = ev.zero();
    for (int mask = 0; mask < combos; ++mask) {
      HalfLaurentN term = base[mask];
      for (int i = 0; i < n && !term.is_zero(); ++i) {
        int d = 0;
        for (std::size_t j = 0; j < env.apar_sites.size(); ++j)
          if (env.apar_sites[j] == i && j < delta.size()) d = delta[j];
        term = term * coeff(i, (mask >> i) & 1, d);
      }
      sum += term;
    }
    return sum;
  };
  if (which == Invariant::alexander) {
    const int m = static_cast<int>(env.apar_sites.size());
    for (int dm = 0; dm < (1 << m); ++dm) {
      std::vector<int> delta(m);
      for (int j = 0; j < m; ++j) delta[j] = (dm >> j) & 1;
      env.x[delta] = assemble(delta);
    }
  } else {
    env.poly = assemble({});
  }
  return env;
}

namespace {

// substitute u = t^{1/2}, s = v^{1/2}, slot variables by powers given by q
HalfLaurentN substitute_env(const HalfLaurentN& f, const std::vector<int>& q, bool with_v) {
  const std::vector<std::string> out_vars = with_v ? std::vector<std::string>{"v", "t"} : std::vector<std::string>{"t"};
  const int ot = with_v ? 1 : 0;
  HalfLaurentN r(out_vars);
  const auto& names = f.vars();
  for (const auto& [e, c] : f.terms()) {
    HalfLaurentN::Exponents g(out_vars.size(), 0);
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (e[k] == 0) continue;
      if (e[k] % 2 != 0) throw PolyError("internal: half power of an envelope variable");
      const long long j = e[k] / 2;
      const std::string& nm = names[k];
      long long mult = 1;
      int slot = nm[0] == 'u' ? ot : 0;
      if (nm != "u" && nm != "s") {
        const int site = std::stoi(nm.substr(1)) - 1;
        mult = q.at(site);
        if (mult == q_infinity) throw PolyError("envelope: evaluate needs finite q");
        slot = nm[0] == 'w' ? ot : 0;
      }
      g[slot] += static_cast<int>(j * mult);
    }
    r.add_term(g, c);
  }
  return r;
}

}  // namespace

HalfLaurentN Envelope::cleared(const std::vector<int>& q) const {
  if (q.size() != parities.size()) throw PolyError("envelope: one q per site");
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] == q_infinity || ((q[i] % 2) + 2) % 2 != parities[i])
      throw PolyError("envelope: q does not match the stored parities");
  if (which != Invariant::alexander) return substitute_env(poly, q, which == Invariant::hatp);
  HalfLaurentN sum(std::vector<std::string>{"t"});
  for (const auto& [delta, xd] : x) {
    BigInt f = 1;
    for (std::size_t j = 0; j < delta.size(); ++j)
      if (delta[j]) f *= q[apar_sites[j]];
    sum += substitute_env(xd, q, false) * f;
  }
  return sum;
}

HalfLaurentN Envelope::evaluate(const std::vector<int>& q) const { return evaluate_tracked(q).value(); }

TrackedN Envelope::evaluate_tracked(const std::vector<int>& q) const {
  HalfLaurentN r = cleared(q);
  const int n = static_cast<int>(parities.size());
  const int m = static_cast<int>(apar_sites.size());
  int tdiv = n;
  if (which == Invariant::alexander) {
    const BigInt two_m = BigInt(1) << m;
    HalfLaurentN h(r.vars());
    for (const auto& [e, c] : r.terms()) {
      if (c % two_m != 0) throw PolyError("envelope: 2^m does not divide the alexander sum");
      h.add_term(e, c / two_m);
    }
    r = h;
    tdiv = n - m;
  } else if (which == Invariant::hatp) {
    tdiv = n - m;
    const HalfLaurent1 v2m1 = HalfLaurent1::from_coeffs({-1, 0, 1});
    for (int j = 0; j < m; ++j) {
      auto d = divide_exact(r, v2m1, "v");
      if (!d) throw PolyError("envelope: (v^2-1) does not divide");
      r = *d;
    }
  }
  for (int j = 0; j < tdiv; ++j) r = div_t_plus_1(r, "envelope");
  if (which == Invariant::hatp) return reduce_hatp(r, den_exp);
  TrackedN out;
  out.num = r;
  return out;
}

// ---------------------------------------------------------------------------

BigInt length_bound(const HalfLaurentN& f) {
  BigInt c = 0;
  for (const auto& [tail, fj] : group_by_tail(f)) c += length(fj);
  return c;
}

BigInt length_bound(const Envelope& e) {
  if (e.which == Invariant::alexander) throw PolyError("length_bound: the alexander envelope grows with q");
  std::map<std::vector<int>, BigInt> groups;
  for (const auto& [ex, c] : e.poly.terms()) {
    std::vector<int> tail(ex.begin() + e.lead, ex.end());
    groups[tail] += abs(c);
  }
  BigInt s = 0;
  for (const auto& [tail, c] : groups) s += c;
  return s;
}

std::vector<std::size_t> nonzero_growth(const HalfLaurent1& f, const HalfLaurent1& g, int n_max) {
  if (f.is_zero()) throw PolyError("nonzero_growth: f = 0");
  // a monomial g only shifts and scales f
  if (g.size() <= 1) throw PolyError("nonzero_growth: g is zero or a monomial");
  std::vector<std::size_t> out;
  HalfLaurent1 p = f;
  for (int k = 0; k <= n_max; ++k) {
    out.push_back(nonzero_count(p));
    p *= g;
  }
  return out;
}

}  // namespace km
