// knotmahler: polynomial invariants of link diagrams, twist families and
// Mahler measures from the command line.
//
// Exit status: 0 success, 1 a reported check failed, 2 bad input,
// 3 a numerical method did not converge.
#include "km/construct.hpp"
#include "km/diagram.hpp"
#include "km/fixtures.hpp"
#include "km/mahler.hpp"
#include "km/polyring.hpp"
#include "km/quadrature.hpp"
#include "km/report.hpp"
#include "km/skein.hpp"
#include "km/spantree.hpp"
#include "km/twistfam.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace km;

namespace {

constexpr int exit_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_numeric = 3;

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string poly;
  std::string q;
  std::string measure = "both";
  std::string format = "text";
  std::string only;
  int cap = 16;
  int random = 0;
  double tol = 1e-9;
  unsigned seed = 1;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "fixture:<id>" reads from the corpus, anything else is a path.
DiagramCode load_diagram_input(const std::string& in) {
  if (in.rfind("fixture:", 0) == 0) {
    const Fixture f = load(in.substr(8));
    if (!f.diagram) throw InputError(in + " is not a diagram fixture");
    return *f.diagram;
  }
  return load_diagram_file(in);
}

WiringDiagram load_wiring_input(const std::string& in) {
  if (in.rfind("fixture:", 0) == 0) {
    const Fixture f = load(in.substr(8));
    if (!f.wiring) throw InputError(in + " is not a wiring fixture");
    return *f.wiring;
  }
  return load_wiring_file(in);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

SkeinOptions skein_options(const RunConfig& c) {
  SkeinOptions o;
  o.crossing_cap = c.cap;
  return o;
}

std::string big(const BigInt& b) { return b.str(); }

HalfLaurent1 normalized(const HalfLaurent1& p) { return p.is_zero() ? p : unit_normalize(p).poly; }

// ---------------------------------------------------------------------------

int cmd_invariants(const RunConfig& c, Report& r) {
  if (c.inputs.size() != 1) throw InputError("invariants takes one diagram file");
  const DiagramCode d = load_diagram_input(c.inputs[0]);
  const SkeinOptions opt = skein_options(c);
  r.field("input", c.inputs[0]);
  r.field("crossings", std::to_string(d.crossing_count()));
  r.field("components", std::to_string(d.component_count()));
  r.field("trivial_split_components", std::to_string(d.trivial_split_components()));
  r.field("writhe", std::to_string(writhe(d)));
  r.field("twist_number", std::to_string(twist_number(d)));
  r.field("alternating", yes_no(is_alternating(d)));
  r.field("lackenby_lower_bound", format_double(lackenby_lower_bound(d), 8));
  const HalfLaurentN p = homflypt(d, opt);
  r.field("homflypt", to_string(p));
  const TrackedN hp = hat_p_tracked(p);
  r.field("hat_p", hp.is_polynomial() ? to_string(hp.value())
                                      : "(" + to_string(hp.num) + ") / (t^{1/2} - t^{-1/2})^" + std::to_string(hp.den_exp));
  r.field("jones", to_string(jones(p)));
  const HalfLaurent1 delta = alexander(p);
  r.field("alexander", to_string(delta));
  r.field("alexander_normalized", to_string(normalized(delta)));
  return 0;
}

int cmd_mahler(const RunConfig& c, Report& r) {
  HalfLaurent1 p;
  if (!c.poly.empty()) {
    p = parse_poly1(c.poly);
  } else if (c.inputs.size() == 1) {
    p = alexander(load_diagram_input(c.inputs[0]), skein_options(c));
    r.field("input", c.inputs[0]);
  } else {
    throw InputError("mahler needs --poly or one diagram file");
  }
  if (c.measure != "mahler" && c.measure != "euclidean" && c.measure != "both")
    throw InputError("--measure must be mahler, euclidean or both");
  r.field("polynomial", to_string(p));
  const MeasureReport m = mahler_measure(p);
  if (c.measure != "euclidean") r.field("mahler", format_double(m.mahler));
  if (c.measure != "mahler") r.field("euclidean_mahler", m.euclidean_defined ? format_double(m.euclidean_mahler) : "undefined");
  if (!p.is_zero() && p.size() > 1) {
    const RootSet rs = roots(p);
    int outside = 0;
    for (const Complex& z : rs.roots) outside += std::abs(z) > 1.0 + 1e-9;
    r.field("degree", std::to_string(rs.degree));
    r.field("roots_outside_unit_circle", std::to_string(outside));
  }
  r.field("cyclotomic_product", yes_no(!p.is_zero() && is_cyclotomic_product(p)));
  r.field("length", big(length(p)));
  r.field("residual", format_double(m.residual, 3));
  return 0;
}

// q specification: sites separated by ';', each a comma list of integers,
// "inf", or ranges a..b (admissible values only).
std::vector<std::vector<int>> parse_q_spec(const std::string& spec, const WiringDiagram& w) {
  std::vector<std::vector<int>> out;
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) parts.push_back(part);
  if (static_cast<int>(parts.size()) != w.order())
    throw InputError("--q lists " + std::to_string(parts.size()) + " sites, the wiring has " + std::to_string(w.order()));
  for (int i = 0; i < w.order(); ++i) {
    const SiteKind kind = w.sites()[i].kind;
    auto admissible = [&](int q) {
      if (kind == SiteKind::apar_even) return q % 2 == 0;
      if (kind == SiteKind::apar_odd) return q % 2 != 0;
      return true;
    };
    std::vector<int> vals;
    std::stringstream ps(parts[i]);
    std::string item;
    while (std::getline(ps, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
      if (item == "inf") {
        vals.push_back(q_infinity);
      } else if (const auto dots = item.find(".."); dots != std::string::npos) {
        const int a = std::stoi(item.substr(0, dots)), b = std::stoi(item.substr(dots + 2));
        for (int q = a; q <= b; ++q)
          if (admissible(q)) vals.push_back(q);
      } else {
        vals.push_back(std::stoi(item));
      }
    }
    if (vals.empty()) throw InputError("--q gives no admissible values for site " + w.sites()[i].label);
    out.push_back(vals);
  }
  return out;
}

std::string q_string(const std::vector<int>& q) {
  std::string s;
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + (q[i] == q_infinity ? std::string("inf") : std::to_string(q[i]));
  return s;
}

// Seeded random q in [-50, 50]^n: length((t+1)^n V) against the envelope bound.
int random_sweep(const RunConfig& c, const WiringDiagram& w, Report& r) {
  const SkeinOptions opt = skein_options(c);
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<int> pick(-50, 50);
  std::map<std::vector<int>, std::pair<Envelope, BigInt>> envelopes;
  Table t{"random sweep", {"q", "length", "bound", "within"}, {}};
  for (int k = 0; k < c.random; ++k) {
    std::vector<int> q(w.order()), par(w.order());
    for (int i = 0; i < w.order(); ++i) {
      do q[i] = pick(rng);
      while ((w.sites()[i].kind == SiteKind::apar_even && q[i] % 2 != 0) ||
             (w.sites()[i].kind == SiteKind::apar_odd && q[i] % 2 == 0));
      par[i] = ((q[i] % 2) + 2) % 2;
    }
    auto it = envelopes.find(par);
    if (it == envelopes.end()) {
      Envelope e = envelope(w, par, Invariant::jones, opt);
      const BigInt b = length_bound(e);
      it = envelopes.emplace(par, std::make_pair(std::move(e), b)).first;
    }
    const HalfLaurent1 cleared = it->second.first.cleared(q).to1("t");
    const BigInt len = length(cleared);
    const bool ok = len <= it->second.second;
    r.failures += !ok;
    t.rows.push_back({q_string(q), big(len), big(it->second.second), yes_no(ok)});
  }
  r.field("seed", std::to_string(c.seed));
  r.tables.push_back(std::move(t));
  return r.failures ? exit_failed : 0;
}

int cmd_twist_sweep(const RunConfig& c, Report& r) {
  if (c.inputs.size() != 1) throw InputError("twist-sweep takes one wiring file");
  const WiringDiagram w = load_wiring_input(c.inputs[0]);
  const SkeinOptions opt = skein_options(c);
  std::string base;
  for (int i = 0; i < w.order(); ++i) base += (i ? ";" : "") + std::to_string(w.base_value(i));
  const auto values = parse_q_spec(c.q.empty() ? base : c.q, w);
  r.field("input", c.inputs[0]);
  r.field("order", std::to_string(w.order()));
  std::string kinds;
  for (const TwistSite& s : w.sites()) kinds += (kinds.empty() ? "" : ",") + s.label + ":" + to_string(s.kind);
  r.field("sites", kinds);

  std::map<std::vector<int>, std::pair<Envelope, Envelope>> envelopes;
  Table t{"sweep", {"q", "crossings", "twist_number", "alexander", "jones", "mahler", "euclidean_mahler", "envelope"}, {}};
  if (c.random > 0) return random_sweep(c, w, r);
  std::vector<int> q(w.order());
  std::function<void(int)> rec = [&](int i) {
    if (i < w.order()) {
      for (int v : values[i]) {
        q[i] = v;
        rec(i + 1);
      }
      return;
    }
    check_admissible(w, q);
    const DiagramCode d = realize(w, q);
    const HalfLaurentN p = homflypt(d, opt);
    const HalfLaurent1 delta = alexander(p), v = jones(p);
    const MeasureReport m = mahler_measure(delta);
    std::string env = "-";
    const bool finite = std::none_of(q.begin(), q.end(), [](int x) { return x == q_infinity; });
    if (finite && w.order() <= 4) {
      std::vector<int> par(w.order());
      for (int k = 0; k < w.order(); ++k) par[k] = ((q[k] % 2) + 2) % 2;
      auto it = envelopes.find(par);
      if (it == envelopes.end())
        it = envelopes.emplace(par, std::make_pair(envelope(w, par, Invariant::alexander, opt),
                                                   envelope(w, par, Invariant::jones, opt))).first;
      const bool ok = it->second.first.evaluate(q).to1("t") == delta && it->second.second.evaluate(q).to1("t") == v;
      env = ok ? "agrees" : "DIFFERS";
      r.failures += !ok;
    }
    t.rows.push_back({q_string(q), std::to_string(d.crossing_count()), std::to_string(twist_number(d)), to_string(delta),
                      to_string(v), format_double(m.mahler), m.euclidean_defined ? format_double(m.euclidean_mahler) : "-",
                      env});
  };
  rec(0);
  r.tables.push_back(std::move(t));
  return r.failures ? exit_failed : 0;
}

int cmd_spantree(const RunConfig& c, Report& r) {
  if (c.inputs.size() != 1) throw InputError("spantree takes one diagram file");
  const DiagramCode d = load_diagram_input(c.inputs[0]);
  if (!d.connected() || !is_alternating(d) || !is_special(d))
    throw InputError("spantree needs a connected special alternating diagram; try 'factor' for its Murasugi factors");
  const CheckerGraph g = checkerboard_graph(d);
  const std::size_t cap = c.cap > 16 ? static_cast<std::size_t>(c.cap) : 1'000'000;
  const HalfLaurent1 tp = tree_polynomial(g, 0, cap);
  BigInt trees = 0;
  for (const auto& [e, k] : tp.terms()) trees += k;
  const HalfLaurent1 delta = alexander(d, skein_options(c));
  const HalfLaurent1 want = alexander_at_minus_t(delta);
  const bool agrees = normalized(tp) == want;
  r.field("input", c.inputs[0]);
  r.field("vertices", std::to_string(g.vertex_count));
  r.field("edges", std::to_string(g.edges.size()));
  r.field("tree_polynomial", to_string(tp));
  r.field("tree_count", big(trees));
  r.field("kirchhoff_count", big(kirchhoff_count(g)));
  r.field("coherent_count", std::to_string(coherent_tree_count(g)));
  r.field("alexander", to_string(delta));
  r.field("alexander_at_minus_t", to_string(want));
  r.field("agrees", yes_no(agrees));
  r.failures += !agrees;
  return agrees ? 0 : exit_failed;
}

int cmd_factor(const RunConfig& c, Report& r) {
  if (c.inputs.size() != 1) throw InputError("factor takes one diagram file");
  const DiagramCode d = load_diagram_input(c.inputs[0]);
  const SkeinOptions opt = skein_options(c);
  r.field("input", c.inputs[0]);
  r.field("alternating", yes_no(is_alternating(d)));
  const HalfLaurent1 delta = alexander(d, opt);
  r.field("alexander", to_string(delta));
  Table t{"factors", {"factor", "crossings", "special", "alexander", "leading"}, {}};
  BigInt prod = 1;
  int k = 0;
  for (const DiagramCode& f : murasugi_factors(d)) {
    if (f.crossing_count() == 0) continue;
    const HalfLaurent1 a = alexander(f, opt);
    prod *= a.is_zero() ? BigInt(0) : abs(a.leading_coeff());
    t.rows.push_back({std::to_string(++k), std::to_string(f.crossing_count()), yes_no(is_special(f)), to_string(a),
                      a.is_zero() ? "0" : big(abs(a.leading_coeff()))});
  }
  r.tables.push_back(std::move(t));
  r.field("leading_product", big(prod));
  if (is_alternating(d) && !delta.is_zero()) {
    const bool ok = prod == abs(delta.leading_coeff());
    r.field("leading_product_matches", yes_no(ok));
    r.failures += !ok;
  }
  return r.failures ? exit_failed : 0;
}

// ---------------------------------------------------------------------------
// one-shot reproduction of the worked examples

double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b), fm = f(m);
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

void examples_lehmer(Report& r) {
  Table t{"lehmer", {"result", "claim", "detail"}, {}};
  const HalfLaurent1 l = load("lehmer").poly;
  const MeasureReport m = mahler_measure(l);
  r.claim(t, "M(L) = 1.17628 within 1e-4", std::fabs(m.mahler - 1.17628) < 1e-4, format_double(m.mahler, 8));
  int outside = 0;
  for (const Complex& z : roots(l).roots) outside += std::abs(z) > 1.0 + 1e-9;
  r.claim(t, "exactly one root outside the unit circle", outside == 1, std::to_string(outside));
  r.tables.push_back(std::move(t));
}

void examples_limit(Report& r, double tol) {
  Table t{"limit", {"result", "claim", "detail"}, {}};
  std::vector<double> measures;
  for (int k = 1; k <= 4; ++k) {
    const std::string ks = std::to_string(k);
    const HalfLaurentN f = load("limit:k=" + ks).bivariate;
    const double zeta = bisect([k](double x) { return 1 - x - x * x - std::pow(x, 2 * k + 2); }, 0.0, 1.0);
    const HalfLaurent1 fk = parse_poly1("1 - t - t^2 - t^" + std::to_string(2 * k + 2));
    int inside = 0;
    bool real = true;
    for (const Complex& z : roots(fk).roots)
      if (std::abs(z) < 1.0 - 1e-9) {
        ++inside;
        real = real && std::fabs(z.imag()) < 1e-9;
      }
    r.claim(t, "k=" + ks + ": f_k has exactly one zero inside the unit circle, and it is real", inside == 1 && real,
            "zeta=" + format_double(zeta, 12));
    HalfLaurent1 a, b;
    for (const auto& [e, c] : f.terms()) (e[1] == 0 ? a : b).add_term(e[0], c);
    const CircleResult lz = mahler_linear_z(a, b, tol);
    r.claim(t, "k=" + ks + ": linear-z measure equals 1/zeta_k within 1e-3", std::fabs(lz.value - 1 / zeta) < 1e-3,
            format_double(lz.value, 10) + " vs " + format_double(1 / zeta, 10));
    const TorusResult tq = mahler_torus_2var(f, 5e-4);
    r.claim(t, "k=" + ks + ": torus quadrature agrees within 2e-3", std::fabs(tq.value - lz.value) < 2e-3,
            format_double(tq.value, 8) + " at N=" + std::to_string(tq.points_per_dim));
    measures.push_back(lz.value);
  }
  bool distinct = true;
  for (std::size_t i = 0; i < measures.size(); ++i)
    for (std::size_t j = i + 1; j < measures.size(); ++j) distinct = distinct && std::fabs(measures[i] - measures[j]) > 1e-6;
  r.claim(t, "the four limit measures are pairwise distinct", distinct, "");
  r.tables.push_back(std::move(t));
}

void examples_nonalt(Report& r, const SkeinOptions& opt) {
  Table t{"nonalt", {"result", "claim", "detail"}, {}};
  auto formula = [](int n) {
    const long long h = (n + 5) / 2;
    return HalfLaurent1::from_coeffs({1, -h, n + 4, -h, 1});
  };
  double prev = 0;
  std::set<int> twist;
  for (int n = 1; n <= 7; n += 2) {
    const std::string ns = std::to_string(n);
    const DiagramCode d = *load("nonalt:n=" + ns).diagram;
    const HalfLaurent1 delta = alexander(d, opt);
    r.claim(t, "n=" + ns + ": Delta = t^4 - ((n+5)/2)t^3 + (n+4)t^2 - ((n+5)/2)t + 1", normalized(delta) == formula(n),
            to_string(delta));
    const double me = mahler_measure(delta).euclidean_mahler;
    r.claim(t, "n=" + ns + ": M_e >= (n+5)/8", me >= (n + 5) / 8.0, format_double(me, 8));
    r.claim(t, "n=" + ns + ": M_e increases with n", me > prev, "");
    r.claim(t, "n=" + ns + ": diagram is not alternating", !is_alternating(d), "");
    prev = me;
    twist.insert(twist_number(d));
  }
  r.claim(t, "twist numbers are all equal", twist.size() == 1, std::to_string(*twist.begin()));
  const double me101 = mahler_measure(formula(101)).euclidean_mahler;
  r.claim(t, "n=101: M_e of the formula exceeds 10", me101 > 10, format_double(me101, 8));
  r.tables.push_back(std::move(t));
}

void examples_iterated(Report& r, const SkeinOptions& opt) {
  Table t{"iterated", {"result", "claim", "detail"}, {}};
  const HalfLaurent1 g = parse_poly1("t - 1 + t^-1");
  const TangleCoeffs tc = tangle_coeffs_2strand(*load("iterated:T").tangle, opt);
  r.claim(t, "T = 0 S1 + (t-1+t^-1)^2 S2", tc.f.is_zero() && tc.g == g * g, to_string(tc.f) + " ; " + to_string(tc.g));
  int prev_tw = -1;
  for (int n = 1; n <= 3; ++n) {
    const std::string ns = std::to_string(n);
    const DiagramCode d = *load("iterated:n=" + ns).diagram;
    const HalfLaurent1 delta = alexander(d, opt);
    r.claim(t, "n=" + ns + ": Delta = (t-1+t^-1)^" + std::to_string(2 * n - 1),
            normalized(delta) == normalized(g.pow(2 * n - 1)), to_string(delta));
    const MeasureReport m = mahler_measure(delta);
    r.claim(t, "n=" + ns + ": M(Delta) = 1 within 1e-9", std::fabs(m.mahler - 1) < 1e-9, format_double(m.mahler, 12));
    const int tw = twist_number(d);
    r.claim(t, "n=" + ns + ": twist number increases", tw > prev_tw, std::to_string(tw));
    r.claim(t, "n=" + ns + ": diagram is alternating", is_alternating(d), std::to_string(d.crossing_count()) + " crossings");
    prev_tw = tw;
  }
  r.tables.push_back(std::move(t));
}

int cmd_examples(const RunConfig& c, Report& r) {
  const SkeinOptions opt = skein_options(c);
  const std::set<std::string> known{"lehmer", "limit", "nonalt", "iterated"};
  if (!c.only.empty() && !known.count(c.only)) throw InputError("--only must be lehmer, limit, nonalt or iterated");
  auto want = [&](const std::string& s) { return c.only.empty() || c.only == s; };
  if (want("lehmer")) examples_lehmer(r);
  if (want("limit")) examples_limit(r, c.tol);
  if (want("nonalt")) examples_nonalt(r, opt);
  if (want("iterated")) examples_iterated(r, opt);
  r.field("failures", std::to_string(r.failures));
  return r.failures ? exit_failed : 0;
}

int cmd_validate(const RunConfig& c, Report& r) {
  std::vector<std::string> ids = c.inputs.empty() ? fixture_ids() : c.inputs;
  Table t{"fixtures", {"result", "fixture", "key", "source", "detail"}, {}};
  for (const std::string& id : ids)
    for (const Check& k : replay(load(id), skein_options(c))) {
      t.rows.push_back({k.pass ? "PASS" : "FAIL", k.fixture, k.key, k.source, k.pass ? k.actual : k.actual + " vs " + k.expected});
      r.failures += !k.pass;
    }
  r.field("corpus", corpus_dir());
  r.field("checks", std::to_string(t.rows.size()));
  r.field("failures", std::to_string(r.failures));
  r.tables.push_back(std::move(t));
  return r.failures ? exit_failed : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial invariants, twist families and Mahler measures of link diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  std::string format = "text";
  app.add_option("--format", format, "text, tsv or json")->check(CLI::IsMember({"text", "tsv", "json"}));
  app.add_option("--cap", c.cap, "crossing cap for the skein engine (spantree: tree cap when larger)");
  app.add_option("--tol", c.tol, "relative tolerance of the circle integral");
  app.add_option("--seed", c.seed, "seed for randomized sweeps");

  auto* inv = app.add_subcommand("invariants", "HOMFLYPT, Jones and Alexander polynomials of a diagram");
  inv->add_option("diagram", c.inputs, "diagram file or fixture:<id>")->required();
  auto* mah = app.add_subcommand("mahler", "Mahler and euclidean Mahler measure");
  mah->add_option("--poly", c.poly, "Laurent polynomial in t");
  mah->add_option("--measure", c.measure, "mahler, euclidean or both");
  mah->add_option("diagram", c.inputs, "diagram whose Alexander polynomial is measured");
  auto* sweep = app.add_subcommand("twist-sweep", "invariants over a grid of twist parameters");
  sweep->add_option("wiring", c.inputs, "wiring file or fixture:<id>")->required();
  sweep->add_option("--q", c.q, "per site, separated by ';': values, a..b ranges or inf");
  sweep->add_option("--random", c.random, "check the envelope length bound at this many seeded random q instead");
  auto* span = app.add_subcommand("spantree", "spanning-tree expansion of the Alexander polynomial");
  span->add_option("diagram", c.inputs, "special alternating diagram")->required();
  auto* fac = app.add_subcommand("factor", "Murasugi factors and their leading coefficients");
  fac->add_option("diagram", c.inputs, "diagram file or fixture:<id>")->required();
  auto* ex = app.add_subcommand("examples", "reproduce the worked examples, one line per claim");
  ex->add_option("--only", c.only, "lehmer, limit, nonalt or iterated");
  auto* val = app.add_subcommand("validate", "replay the expected values of corpus fixtures");
  val->add_option("ids", c.inputs, "fixture ids (default: all)");

  CLI11_PARSE(app, argc, argv);
  Format fmt = parse_format(format);
  c.subcommand = app.get_subcommands().front()->get_name();
  Report r;
  r.command = c.subcommand;
  int status = 0;
  try {
    if (c.subcommand == "invariants") status = cmd_invariants(c, r);
    else if (c.subcommand == "mahler") status = cmd_mahler(c, r);
    else if (c.subcommand == "twist-sweep") status = cmd_twist_sweep(c, r);
    else if (c.subcommand == "spantree") status = cmd_spantree(c, r);
    else if (c.subcommand == "factor") status = cmd_factor(c, r);
    else if (c.subcommand == "examples") status = cmd_examples(c, r);
    else if (c.subcommand == "validate") status = cmd_validate(c, r);
  } catch (const RootFindError& e) {
    std::cerr << "knotmahler: " << e.what() << "\n";
    return exit_numeric;
  } catch (const QuadratureError& e) {
    std::cerr << "knotmahler: " << e.what() << " (estimate " << e.partial().value << ")\n";
    return exit_numeric;
  } catch (const std::exception& e) {
    std::cerr << "knotmahler: " << e.what() << "\n";
    return exit_input;
  }
  std::cout << render(r, fmt);
  return status;
}
