// Twist families: a template diagram with marked twist sites, the diagrams
// l(q_1..q_n) obtained by putting q_i half-twists at site i, and closed forms
// for their polynomials as functions of q.
//
// Site kinds:
//   parallel    two strands running the same way; any q; no infinity
//   apar-even   two strands running opposite ways; q even, or infinity
//   apar-odd    one crossing of opposite-way strands; q odd, or infinity
// Infinity is the turnback (oriented smoothing) at an anti-parallel site.
#pragma once

#include "km/diagram.hpp"
#include "km/polyring.hpp"
#include "km/skein.hpp"

#include <climits>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace km {

inline constexpr int q_infinity = INT_MAX;

enum class SiteKind { parallel, apar_even, apar_odd };
enum class Invariant { alexander, jones, hatp, homflypt };

std::string to_string(SiteKind k);
SiteKind parse_site_kind(const std::string& s);
std::string to_string(Invariant w);
Invariant parse_invariant(const std::string& s);

struct TwistSite {
  std::string label;
  SiteKind kind = SiteKind::parallel;
  bool at_crossing = true;
  int crossing_id = 0;     // crossing sites
  int arc_a = 0, arc_b = 0;  // arc-pair sites
};

class WiringDiagram {
 public:
  /// Checks each site against the template's strand orientations.
  WiringDiagram(DiagramCode tmpl, std::vector<TwistSite> sites);

  const DiagramCode& template_diagram() const { return tmpl_; }
  const std::vector<TwistSite>& sites() const { return sites_; }
  int order() const { return static_cast<int>(sites_.size()); }
  /// q at which site i reproduces the template (crossing sign, or 0 on arcs).
  int base_value(int i) const;
  std::vector<int> base_values() const;

 private:
  DiagramCode tmpl_;
  std::vector<TwistSite> sites_;
};

/// Template diagram text followed by `SITE <label> kind=<par|apar-even|apar-odd> at=<id>`
/// (a crossing id) or `at=<a>,<b>` (two arc labels).
WiringDiagram parse_wiring(const std::string& text);
WiringDiagram load_wiring_file(const std::string& path);
std::string print_wiring(const WiringDiagram& w);

/// Throws DiagramError on a parity violation or infinity at a parallel site.
void check_admissible(const WiringDiagram& w, const std::vector<int>& q);
DiagramCode realize(const WiringDiagram& w, const std::vector<int>& q);

// ---------------------------------------------------------------------------
// one-site closed forms

/// Base pair: (l_0, l_1) parallel, (l_0, l_inf) apar-even, (l_1, l_inf) apar-odd.
/// Variables: t for alexander and jones, (v,t) for hatp, (v,z) for homflypt.
/// hatP of a link has a (t^{1/2} - t^{-1/2}) denominator; for hatp the bases
/// are numerators over its den_exp-th power.
struct TwistFormula {
  SiteKind kind = SiteKind::parallel;
  Invariant which = Invariant::alexander;
  HalfLaurentN base;
  HalfLaurentN other;
  int den_exp = 0;

  /// Exact value at q; throws PolyError if a (t+1) division fails or a
  /// denominator remains.
  HalfLaurentN at(int q) const;
  TrackedN at_tracked(int q) const;
  HalfLaurent1 at1(int q) const;  // alexander and jones
};

/// homflypt is not available for parallel sites (the formula needs t).
TwistFormula parallel_closed_form(const HalfLaurentN& p0, const HalfLaurentN& p1, Invariant which);
TwistFormula parallel_closed_form(const HalfLaurent1& p0, const HalfLaurent1& p1, Invariant which);
/// kind is apar_even (base l_0) or apar_odd (base l_1).
TwistFormula antiparallel_closed_form(const HalfLaurentN& pb, const HalfLaurentN& pinf, Invariant which,
                                      SiteKind kind = SiteKind::apar_even);
TwistFormula antiparallel_closed_form(const HalfLaurent1& pb, const HalfLaurent1& pinf, Invariant which,
                                      SiteKind kind = SiteKind::apar_even);

/// Closed form for one site of a wiring diagram, other sites held at `rest`.
TwistFormula site_closed_form(const WiringDiagram& w, int site, const std::vector<int>& rest, Invariant which,
                              const SkeinOptions& opt = {});

/// The invariant of a single diagram in the variables used above; hatp throws
/// SkeinError on a link, use the tracked form there.
HalfLaurentN invariant_of(const DiagramCode& d, Invariant which, const SkeinOptions& opt = {});
/// Any invariant as a tracked value (denominator only for hatp).
TrackedN tracked_invariant_of(const DiagramCode& d, Invariant which, const SkeinOptions& opt = {});
/// num / (t^{1/2} - t^{-1/2})^k in (v,t), with the power reduced as far as possible.
TrackedN reduce_hatp(HalfLaurentN num, int k);

// ---------------------------------------------------------------------------
// envelopes
//
// Parallel sites carry slot variables w_i = t^{q_i/2} (and b_i = v^{q_i/2} for hatp),
// anti-parallel sites a_i = v^{q_i/2} (hatp) or w_i (jones).  With n sites of
// which m are anti-parallel:
//   jones      (t+1)^n V = W(u, w..)                        u = t^{1/2}
//   alexander  (t+1)^{n-m} Delta = sum_d prod q_i^{d_i} / 2^m X_d(u, w..)
//   hatp       (t+1)^{n-m} (v^2-1)^m hatP = Y(s, u, a.., w.., b..)   s = v^{1/2}
struct Envelope {
  Invariant which = Invariant::jones;
  std::vector<int> parities;         // per site, 0 even / 1 odd
  HalfLaurentN poly;                 // W or Y
  std::map<std::vector<int>, HalfLaurentN> x;  // alexander: anti-parallel selector -> X_d
  std::vector<int> apar_sites;       // anti-parallel sites in selector order
  int lead = 1;                      // number of leading variables (u, or s and u)
  int den_exp = 0;                   // hatp: Y is a numerator over (u - 1/u)^den_exp

  /// The invariant of l(q) for q of the stored parities (finite entries only).
  HalfLaurentN evaluate(const std::vector<int>& q) const;
  TrackedN evaluate_tracked(const std::vector<int>& q) const;
  /// The cleared polynomial, (t+1)^n V etc., before division.
  HalfLaurentN cleared(const std::vector<int>& q) const;
};

/// Evaluates all 2^n base combinations through the skein engine; n <= max_order.
Envelope envelope(const WiringDiagram& w, const std::vector<int>& parities, Invariant which,
                  const SkeinOptions& opt = {}, int max_order = 4);

// ---------------------------------------------------------------------------
// coefficient growth

/// Sum of the lengths of the coefficient polynomials of the distinct tail monomials.
BigInt length_bound(const HalfLaurentN& f);
/// Same bound for an envelope polynomial viewed over its leading variable(s).
BigInt length_bound(const Envelope& e);
/// nonzero_count(f g^N) for N = 0..n_max.  Throws PolyError if f = 0 or g is a monomial.
std::vector<std::size_t> nonzero_growth(const HalfLaurent1& f, const HalfLaurent1& g, int n_max);

}  // namespace km
