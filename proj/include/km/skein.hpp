// Homflypt polynomial by skein recursion, and its specializations.
//
//   v^-1 P(L+) - v P(L-) = z P(L0),   P(unknot) = 1
//   hat P(v,t) = P(v, t^{1/2} - t^{-1/2}),  V(t) = hat P(t,t),  Delta(t) = hat P(1,t)
#pragma once

#include "km/construct.hpp"
#include "km/diagram.hpp"
#include "km/polyring.hpp"

#include <cstddef>
#include <stdexcept>

namespace km {

class SkeinError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SkeinOptions {
  int crossing_cap = 16;
  bool memo = true;
};

struct SkeinStats {
  std::size_t calls = 0;
  std::size_t memo_hits = 0;
  std::size_t memo_size = 0;
};

/// P(v,z) as a Laurent polynomial in v and z (z may carry negative powers
/// for split links).
HalfLaurentN homflypt(const DiagramCode& d, const SkeinOptions& opt = {}, SkeinStats* stats = nullptr);

/// z -> t^{1/2} - t^{-1/2}; the denominator stays tracked for split links.
TrackedN hat_p_tracked(const HalfLaurentN& p);
HalfLaurentN hat_p(const HalfLaurentN& p);
HalfLaurent1 jones(const HalfLaurentN& p);
HalfLaurent1 alexander(const HalfLaurentN& p);

HalfLaurentN hat_p(const DiagramCode& d, const SkeinOptions& opt = {});
HalfLaurent1 jones(const DiagramCode& d, const SkeinOptions& opt = {});
HalfLaurent1 alexander(const DiagramCode& d, const SkeinOptions& opt = {});

/// v^-1 P(L+) - v P(L-) - z P(L0) at the given crossing; zero when the engine is consistent.
HalfLaurentN skein_residual(const DiagramCode& d, int crossing_index, const SkeinOptions& opt = {});

/// The (v,z) variable list used by homflypt.
const std::vector<std::string>& vz_vars();

// ---------------------------------------------------------------------------
// Two-string tangles in the Conway skein module.
//
// S1 is the vertical smoothing (NW-SW, NE-SE), S2 a single positive crossing;
// both strands run from the top (NW, NE) to the bottom.  A tangle T is written
// T = f S1 + g S2, read off from the Alexander polynomials of the denominator
// closures D(T*S) for S = S1 and S = S2*S2.

struct TangleCoeffs {
  HalfLaurent1 f;
  HalfLaurent1 g;
};

/// The basis tangles with crossing ids starting at `first_id`.
Tangle basis_s1();
Tangle basis_s2(int id = 1);

/// D(T * S), oriented so that T's strands run downward.
DiagramCode closure_with(const Tangle& t, const Tangle& s);

TangleCoeffs tangle_coeffs_2strand(const Tangle& t, const SkeinOptions& opt = {});
/// Checks that Delta(D(T*S)) = f Delta(D(S1*S)) + g Delta(D(S2*S)).
bool tangle_coeffs_reconstruct(const Tangle& t, const TangleCoeffs& c, const Tangle& s, const SkeinOptions& opt = {});

}  // namespace km
