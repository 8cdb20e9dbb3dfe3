// Oriented planar link diagrams.
//
// A crossing lists its four incident arc labels in counterclockwise order,
// starting at an end of the over-strand, so the over-strand always occupies
// positions 0 and 2.  `over` names the position (0 or 2) where the over-strand
// enters.  Together with the sign this fixes the direction of the
// under-strand: for a positive crossing the under-strand enters at over+1.
//
// Text form, one crossing per line:
//   X<id> sign=<+|-> ends=(a,b,c,d) over=<0|2>
//   O<label>            (crossing-free circle)
// Blank lines and lines starting with '#' are ignored.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace km {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Crossing {
  int id = 0;
  int sign = 1;                  // +1 or -1
  std::array<int, 4> ends{};     // arc labels, counterclockwise
  int over = 0;                  // 0 or 2: incoming end of the over-strand

  int over_in() const { return over; }
  int over_out() const { return (over + 2) % 4; }
  int under_in() const { return sign > 0 ? (over + 1) % 4 : (over + 3) % 4; }
  int under_out() const { return sign > 0 ? (over + 3) % 4 : (over + 1) % 4; }
  bool incoming(int pos) const { return pos == over_in() || pos == under_in(); }
  bool is_over(int pos) const { return pos % 2 == 0; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// End graph: the combinatorial core used by the algorithms.  End e = 4*c + p.
struct EndGraph {
  std::vector<int> partner;      // other end of the arc through e
  std::vector<int> arc;          // arc label at e
  std::vector<Crossing> crossings;
  int free_loops = 0;

  int size() const { return static_cast<int>(crossings.size()); }
  static int crossing_of(int e) { return e / 4; }
  static int pos_of(int e) { return e % 4; }
  bool outgoing(int e) const { return !crossings[e / 4].incoming(e % 4); }
  /// Position the orientation-respecting smoothing joins to `pos` at its crossing.
  int smoothing_mate(int e) const;
};

class DiagramCode {
 public:
  DiagramCode() = default;
  /// Validates: each arc used exactly twice, consistent orientation,
  /// planar faces (F = c + 2 on every connected piece).
  DiagramCode(std::vector<Crossing> crossings, std::vector<int> circles);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<int>& circles() const { return circles_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int index_of(int crossing_id) const;  // -1 if absent
  const EndGraph& graph() const { return graph_; }

  /// Number of link components (crossing-free circles included).
  int component_count() const;
  /// Connected pieces of the projection (circles count as pieces).
  int piece_count() const;
  bool connected() const { return piece_count() <= 1; }
  /// Crossing-free circles disjoint from the rest of the diagram.
  int trivial_split_components() const { return static_cast<int>(circles_.size()); }

  friend bool operator==(const DiagramCode& a, const DiagramCode& b) {
    return a.crossings_ == b.crossings_ && a.circles_ == b.circles_;
  }

 private:
  void validate();

  std::vector<Crossing> crossings_;
  std::vector<int> circles_;
  EndGraph graph_;
};

DiagramCode parse_diagram(std::string_view text);
std::string print_diagram(const DiagramCode& d);
DiagramCode load_diagram_file(const std::string& path);

/// Rebuilds a DiagramCode from an end graph, relabeling arcs 1..2c in a
/// deterministic order.  Crossing ids and orientation are kept.
DiagramCode from_end_graph(const EndGraph& g);

/// Same diagram with arc labels and crossing ids permuted; for invariance tests.
DiagramCode relabeled(const DiagramCode& d, const std::vector<int>& crossing_perm, const std::vector<int>& arc_perm);
/// Mirror image (every crossing switched).
DiagramCode mirror(const DiagramCode& d);
/// Reverse the orientation of every component.
DiagramCode reverse(const DiagramCode& d);

// ---------------------------------------------------------------------------
// Faces and twists

struct Corner {
  int crossing = 0;  // crossing index
  int pos = 0;       // corner between positions pos and pos+1
  int arc = 0;       // arc leaving the corner through pos+1
};

struct Face {
  std::vector<Corner> corners;
  int distinct_crossings() const;
};

/// Faces of every connected piece (each piece embedded on its own sphere).
std::vector<Face> faces(const DiagramCode& d);
/// face index of corner (crossing, pos): result[4*c + pos]
std::vector<int> corner_faces(const DiagramCode& d, const std::vector<Face>& fs);

/// Twists: maximal rows of bigons plus crossings adjacent to no bigon.
/// Each entry lists crossing indices.
std::vector<std::vector<int>> twists(const DiagramCode& d);
int twist_number(const DiagramCode& d);
int writhe(const DiagramCode& d);
bool is_alternating(const DiagramCode& d);

// ---------------------------------------------------------------------------
// Seifert circles and Murasugi products

struct SeifertData {
  std::vector<std::vector<int>> circles;  // arcs traversed by each circle, in order
  std::vector<int> circle_of_arc;         // indexed by arc label
  /// per crossing: the circle through its over-in end and the one through its under-in end
  std::vector<std::array<int, 2>> crossing_circles;
  /// per crossing: side (-1 left, +1 right) of the band relative to each of those circles
  std::vector<std::array<int, 2>> band_side;
  /// side[c][d]: on which side of circle c circle d lies (-1 left, +1 right, 0 for d == c
  /// or when d is unreachable)
  std::vector<std::vector<int>> side;
  std::vector<bool> separating;
  int free_circles = 0;
};

SeifertData seifert_circles(const DiagramCode& d);
bool is_special(const DiagramCode& d);

/// Smooth the listed crossings (indices) along the orientation and drop the
/// crossing-free circles that result.
DiagramCode smooth_crossings(const DiagramCode& d, const std::vector<int>& crossing_indices, bool drop_circles);

/// Special factors of a connected diagram.  Crossing ids are preserved, so
/// every crossing of `d` appears in exactly one factor.
std::vector<DiagramCode> murasugi_factors(const DiagramCode& d);

// ---------------------------------------------------------------------------
// Checkerboard graph

struct CheckerEdge {
  int from = 0;      // black region at the corner where both strands enter
  int to = 0;        // black region at the corner where both strands leave
  int crossing = 0;  // crossing index in the diagram
};

struct CheckerGraph {
  int vertex_count = 0;
  std::vector<CheckerEdge> edges;
  /// edges around each vertex in planar (face traversal) order
  std::vector<std::vector<int>> rotation;
  int root = 0;
};

/// Requires a connected special alternating diagram; the coloring is the one
/// whose white regions are bounded by Seifert circles.
CheckerGraph checkerboard_graph(const DiagramCode& d);

/// v3 (t(D) - 2) / 2 with v3 = 1.01494.
double lackenby_lower_bound(const DiagramCode& d);
double lackenby_lower_bound(int twist_number);

}  // namespace km
