// Building diagrams from tangles, and splicing tangles into diagrams.
//
// A tangle is a disc with four boundary points NW, SW, SE, NE (counterclockwise).
// Orientation is not part of a tangle; it is assigned when a closed diagram
// is produced, either from hints carried over from a host diagram or by a
// fixed traversal rule.
#pragma once

#include "km/diagram.hpp"

#include <array>
#include <utility>
#include <vector>

namespace km {

namespace detail {

// Unoriented 4-valent map with optional free (boundary) nodes.  Crossing c owns
// nodes 4c..4c+3 in counterclockwise order; nodes from 4n on are free.
struct Net {
  int n = 0;
  std::vector<int> partner;        // -1 for a dead node
  std::vector<unsigned char> over_odd;  // over-strand on local positions {1,3}
  std::vector<int> ids;
  std::vector<signed char> dir;    // per crossing node: -1 unknown, 0 in, 1 out
  std::vector<int> bnd;            // boundary nodes (free), in slot order
  int loops = 0;

  static Net from_diagram(const DiagramCode& d);
};

}  // namespace detail

class Tangle {
 public:
  enum Slot { NW = 0, SW = 1, SE = 2, NE = 3 };

  /// type +1: over-strand runs SW to NE; type -1: NW to SE.
  static Tangle crossing(int type, int id = 0);
  static Tangle zero();      // NW-NE and SW-SE
  static Tangle infinity();  // NW-SW and NE-SE
  /// Horizontal row of |k| crossings of type sign(k).
  static Tangle integer(int k);
  /// Vertical column of |k| crossings of type sign(k).
  static Tangle vertical(int k);

  friend Tangle operator+(const Tangle& a, const Tangle& b);  // a left of b
  friend Tangle operator*(const Tangle& a, const Tangle& b);  // a above b
  /// Quarter turn counterclockwise.
  Tangle rotated() const;
  /// Every crossing switched.
  Tangle mirrored() const;
  /// Switch the crossings with the listed indices.
  Tangle switched(const std::vector<int>& crossing_indices) const;
  /// Replace crossing `index` by `s`, its positions axis..axis+3 going to NW, SW, SE, NE of s.
  Tangle substituted(int index, const Tangle& s, int axis) const;
  /// Orientation hints: strands enter at NW and NE and leave at SW and SE.
  /// Hints survive sums, products and closures; an impossible request shows
  /// up as an orientation conflict when the diagram is closed.
  Tangle oriented_downward() const;
  /// Renumber crossing ids 1..n in index order starting from `first`.
  Tangle renumbered(int first = 1) const;

  int crossing_count() const { return net_.n; }
  const detail::Net& net() const { return net_; }

 private:
  detail::Net net_;
};

/// NW-NE and SW-SE joined.  `reverse[k]` flips the default orientation of the
/// k-th component (components ordered by smallest crossing node).
DiagramCode numerator(const Tangle& t, const std::vector<bool>& reverse = {});
/// NW-SW and NE-SE joined.
DiagramCode denominator(const Tangle& t, const std::vector<bool>& reverse = {});

/// One tangle insertion.  A crossing site replaces the crossing, its positions
/// axis..axis+3 going to NW, SW, SE, NE.  An arc site cuts two arcs bounding a
/// common face: going along arc a in face order gives NW then NE, arc b gives
/// SE then SW.
struct Splice {
  bool at_crossing = true;
  int crossing_index = 0;
  int axis = 0;
  int arc_a = 0, arc_b = 0;
  Tangle tangle;
};

/// The face-order darts (crossing ends) of arcs a and b in a face they share.
/// Throws DiagramError if there is no such face, or it meets an arc twice.
std::pair<int, int> arc_site_darts(const EndGraph& g, int arc_a, int arc_b);

/// All splices at once (sites must not share crossings or arcs).  Host
/// crossing ids are kept; tangle crossings get fresh ids above the host's, site
/// by site.  `new_ids`, if given, receives those ids per site.
DiagramCode splice(const DiagramCode& d, const std::vector<Splice>& sites,
                   std::vector<std::vector<int>>* new_ids = nullptr);

/// Replace a crossing of `d` by a tangle.  Positions axis..axis+3 of the crossing
/// are attached to NW, SW, SE, NE.  Arcs outside the tangle keep their
/// orientation; a strand with no oriented end gets the default orientation.
/// Throws DiagramError on an orientation conflict.  New crossings get ids
/// above the largest host id, in tangle index order.
DiagramCode insert_at_crossing(const DiagramCode& d, int crossing_index, int axis, const Tangle& t);

/// Splice a tangle across two arcs bounding a common face.  Going along arc a
/// in face order gives NW then NE; arc b gives SE then SW.
DiagramCode insert_at_arcs(const DiagramCode& d, int arc_a, int arc_b, const Tangle& t);

/// Switch the listed crossings (indices) of a diagram.
DiagramCode switch_crossings(const DiagramCode& d, const std::vector<int>& crossing_indices);

/// Connected sum at the given arcs (each arc cut once, orientations respected).
DiagramCode connected_sum(const DiagramCode& a, int arc_a, const DiagramCode& b, int arc_b);

/// Disjoint union (split diagram).
DiagramCode disjoint_union(const DiagramCode& a, const DiagramCode& b);

}  // namespace km
