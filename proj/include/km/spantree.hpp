// Spanning trees of the checkerboard graph of a special alternating diagram.
//
// With edges oriented as in CheckerGraph and a tree's edges oriented toward
// the root, iota(T) counts tree edges pointing the wrong way.  Up to units,
//   Delta(-t) = sum over spanning trees T of t^iota(T).
#pragma once

#include "km/diagram.hpp"
#include "km/polyring.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace km {

class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootedTree {
  int root = 0;
  std::vector<int> edges;        // edge indices, ascending
  std::vector<int> parent_edge;  // per vertex; -1 at the root
  std::vector<int> parent;       // per vertex; -1 at the root
};

/// Orients a spanning edge set toward `root`.  Throws TreeError if the set is
/// not a spanning tree.
RootedTree root_tree(const CheckerGraph& g, std::vector<int> edges, int root);

/// Calls `f` once per spanning tree.  Throws TreeError past `cap` trees or if
/// the graph is disconnected.
void for_each_spanning_tree(const CheckerGraph& g, int root, const std::function<void(const RootedTree&)>& f,
                            std::size_t cap = 1'000'000);
std::vector<RootedTree> spanning_trees(const CheckerGraph& g, int root = 0, std::size_t cap = 1'000'000);

/// Matrix-tree count (exact Bareiss elimination of a reduced Laplacian).
BigInt kirchhoff_count(const CheckerGraph& g);

int iota(const RootedTree& t, const CheckerGraph& g);
bool is_coherent(const RootedTree& t, const CheckerGraph& g);

/// sum_T t^iota(T)
HalfLaurent1 tree_polynomial(const CheckerGraph& g, int root = 0, std::size_t cap = 1'000'000);
HalfLaurent1 alexander_via_trees(const DiagramCode& d, int root = 0);
/// Delta(-t) of an Alexander polynomial, after clearing a t^{1/2} unit.
HalfLaurent1 alexander_at_minus_t(const HalfLaurent1& delta);

std::size_t coherent_tree_count(const CheckerGraph& g, int root = 0);

// ---------------------------------------------------------------------------
// The collapsed graph: edges joining the same two vertices with both
// orientations present form one anti-parallel class; all other edges are
// ordinary.

/// Per edge: its anti-parallel class, or -1 for an ordinary edge.
std::vector<int> antiparallel_classes(const CheckerGraph& g);

/// A coherent spanning tree containing an edge of every class met by `sigma`
/// (edge indices of anti-parallel edges).  Edges are exchanged one at a time,
/// each exchange adding one class of sigma to the tree.  Throws TreeError if
/// sigma's classes contain a cycle or an ordinary edge.
RootedTree extend_forest(const CheckerGraph& g, const std::vector<int>& sigma, int root = 0,
                         int* exchanges = nullptr);

}  // namespace km
