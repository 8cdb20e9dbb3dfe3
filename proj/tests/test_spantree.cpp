#include "doctest.h"
#include "km/construct.hpp"
#include "km/skein.hpp"
#include "km/spantree.hpp"
#include "km/twistfam.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

using namespace km;

namespace {

HalfLaurent1 P(const char* s) { return parse_poly1(s); }

CheckerGraph graph(int n, std::vector<std::pair<int, int>> es) {
  CheckerGraph g;
  g.vertex_count = n;
  for (auto [a, b] : es) g.edges.push_back({a, b, static_cast<int>(g.edges.size())});
  g.rotation.assign(n, {});
  return g;
}

// Trees oriented toward the root along the edges: Tutte's directed matrix-tree theorem.
long long arborescences(const CheckerGraph& g, int root) {
  const int n = g.vertex_count;
  std::vector<std::vector<long double>> L(n, std::vector<long double>(n, 0));
  for (const auto& e : g.edges) {
    if (e.from == e.to) continue;
    L[e.from][e.from] += 1;
    L[e.from][e.to] -= 1;
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (v != root) keep.push_back(v);
  const int m = static_cast<int>(keep.size());
  std::vector<std::vector<long double>> a(m, std::vector<long double>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = L[keep[i]][keep[j]];
  long double det = 1;
  for (int k = 0; k < m; ++k) {
    int piv = k;
    for (int i = k + 1; i < m; ++i)
      if (std::fabs(a[i][k]) > std::fabs(a[piv][k])) piv = i;
    if (std::fabs(a[piv][k]) < 1e-12) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (int i = k + 1; i < m; ++i) {
      const long double f = a[i][k] / a[k][k];
      for (int j = k; j < m; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return std::llround(det);
}

DiagramCode trefoil() { return numerator(Tangle::integer(3)); }

// random alternating diagrams from positive rational tangles and their sums
DiagramCode random_alternating(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> tw(1, 3), len(1, 3), parts(1, 3), coin(0, 1);
  for (;;) {
    Tangle sum = Tangle::zero();
    const int k = parts(rng);
    for (int p = 0; p < k; ++p) {
      Tangle r = Tangle::integer(tw(rng));
      const int steps = len(rng);
      for (int s = 0; s < steps; ++s) r = s % 2 == 0 ? r * Tangle::vertical(tw(rng)) : r + Tangle::integer(tw(rng));
      sum = p == 0 ? r : sum + Tangle::vertical(1) * r;
    }
    std::vector<bool> rev{static_cast<bool>(coin(rng)), static_cast<bool>(coin(rng)), static_cast<bool>(coin(rng))};
    DiagramCode d = coin(rng) ? numerator(sum, rev) : denominator(sum, rev);
    if (d.crossing_count() == 0 || d.crossing_count() > 12 || !d.connected() || !is_alternating(d)) continue;
    return d;
  }
}

std::vector<CheckerGraph> special_graphs(const DiagramCode& d) {
  std::vector<CheckerGraph> out;
  for (const DiagramCode& f : murasugi_factors(d))
    if (f.crossing_count() > 0 && f.connected()) out.push_back(checkerboard_graph(f));
  return out;
}

bool contains_class(const RootedTree& t, const std::vector<int>& cls, int c) {
  for (int e : t.edges)
    if (cls[e] == c) return true;
  return false;
}

}  // namespace

TEST_CASE("spanning tree enumeration against Kirchhoff") {
  const CheckerGraph tri = graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(spanning_trees(tri).size() == 3);
  CHECK(kirchhoff_count(tri) == 3);
  const CheckerGraph two = graph(2, {{0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}});
  CHECK(spanning_trees(two).size() == 6);
  CHECK(kirchhoff_count(two) == 6);
  const CheckerGraph tg = checkerboard_graph(trefoil());
  CHECK(spanning_trees(tg).size() == 3);
  CHECK(kirchhoff_count(tg) == 3);
  CHECK_THROWS_AS(spanning_trees(graph(3, {{0, 1}})), TreeError);
  CHECK_THROWS_AS(spanning_trees(tri, 0, 2), TreeError);
  // K4 has 16 trees
  const CheckerGraph k4 = graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(spanning_trees(k4).size() == 16);
  CHECK(kirchhoff_count(k4) == 16);
}

TEST_CASE("iota on small graphs") {
  const CheckerGraph tri = graph(3, {{0, 1}, {1, 2}, {2, 0}});
  std::multiset<int> io;
  for (const auto& t : spanning_trees(tri, 0)) io.insert(iota(t, tri));
  CHECK(io == std::multiset<int>{0, 1, 2});
  const CheckerGraph path = graph(3, {{1, 0}, {2, 1}});
  const RootedTree t = root_tree(path, {0, 1}, 0);
  CHECK(iota(t, path) == 0);
  CHECK(iota(root_tree(path, {0, 1}, 2), path) == 2);
  CHECK_THROWS_AS(root_tree(path, {0}, 0), TreeError);
}

TEST_CASE("tree polynomial basics") {
  CHECK(tree_polynomial(graph(1, {})) == P("1"));
  const CheckerGraph two = graph(2, {{0, 1}, {1, 0}, {0, 1}, {1, 0}});
  const HalfLaurent1 p = tree_polynomial(two);
  CHECK(p == P("2 + 2*t"));
  CHECK(alexander_via_trees(trefoil()) == P("1 + t + t^2"));
  CHECK(alexander_at_minus_t(alexander(trefoil())) == P("t^2 + t + 1"));
}

TEST_CASE("trees give the Alexander polynomial of special alternating diagrams") {
  std::mt19937_64 rng(3);
  int tested = 0;
  for (int rep = 0; rep < 60; ++rep) {
    const DiagramCode d = random_alternating(rng);
    for (const DiagramCode& f : murasugi_factors(d)) {
      if (f.crossing_count() == 0 || f.crossing_count() > 10 || !f.connected()) continue;
      const CheckerGraph g = checkerboard_graph(f);
      const HalfLaurent1 tp = tree_polynomial(g);
      const HalfLaurent1 delta = alexander(f);
      CHECK(unit_normalize(tp).poly == alexander_at_minus_t(delta));
      // palindromic, with degree |V| - 1
      CHECK(tp == tp.reciprocal().shifted(tp.max_exp() + tp.min_exp()));
      CHECK(tp.max_exp() / 2 == g.vertex_count - 1);
      CHECK(tp.min_exp() == 0);
      // every root gives the same polynomial
      for (int r = 0; r < g.vertex_count && r < 8; ++r) CHECK(tree_polynomial(g, r) == tp);
      // coherent trees: directed matrix-tree oracle, leading coefficient of Delta
      const std::size_t coh = coherent_tree_count(g);
      CHECK(static_cast<long long>(coh) == arborescences(g, 0));
      CHECK(coh >= 1);
      CHECK(BigInt(coh) == abs(delta.leading_coeff()));
      CHECK(BigInt(coh) == tp.coeff(0));
      BigInt total = 0;
      for (const auto& [e, c] : tp.terms()) total += c;
      CHECK(total == kirchhoff_count(g));
      ++tested;
    }
  }
  CHECK(tested >= 40);
}

TEST_CASE("leading coefficients multiply over Murasugi factors") {
  std::mt19937_64 rng(11);
  int multi = 0;
  for (int rep = 0; rep < 80; ++rep) {
    const DiagramCode d = random_alternating(rng);
    BigInt prod = 1;
    int factors = 0;
    for (const DiagramCode& f : murasugi_factors(d)) {
      if (f.crossing_count() == 0) continue;
      prod *= coherent_tree_count(checkerboard_graph(f));
      ++factors;
    }
    CHECK(prod == abs(alexander(d).leading_coeff()));
    multi += factors >= 2;
  }
  CHECK(multi >= 10);
}

TEST_CASE("extend_forest on hand-made graphs") {
  // 0 <-> 1 anti-parallel pair, 1 -> 2 -> 0 ordinary
  const CheckerGraph g = graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
  const auto cls = antiparallel_classes(g);
  CHECK(cls[0] == cls[1]);
  CHECK(cls[0] >= 0);
  CHECK(cls[2] == -1);
  const RootedTree t0 = extend_forest(g, {});
  CHECK(is_coherent(t0, g));
  int ex = -1;
  const RootedTree t1 = extend_forest(g, {0}, 0, &ex);
  CHECK(is_coherent(t1, g));
  CHECK(contains_class(t1, cls, cls[0]));
  CHECK(ex <= 1);
  CHECK_THROWS_AS(extend_forest(g, {2}), TreeError);
  // three anti-parallel pairs in a triangle: a cycle
  const CheckerGraph c = graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}});
  CHECK_THROWS_AS(extend_forest(c, {0, 2, 4}), TreeError);
  const RootedTree t2 = extend_forest(c, {0, 2});
  CHECK(is_coherent(t2, c));
}

TEST_CASE("extend_forest on random alternating checkerboard graphs") {
  std::mt19937_64 rng(17);
  int instances = 0, with_sigma = 0;
  while (instances < 300) {
    for (const CheckerGraph& g : special_graphs(random_alternating(rng))) {
      const auto cls = antiparallel_classes(g);
      std::vector<int> anti;
      for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (cls[e] >= 0) anti.push_back(static_cast<int>(e));
      std::shuffle(anti.begin(), anti.end(), rng);
      // a random forest of classes
      std::vector<int> p(g.vertex_count);
      std::iota(p.begin(), p.end(), 0);
      auto find = [&](int x) {
        while (p[x] != x) x = p[x];
        return x;
      };
      std::vector<int> sigma;
      for (int e : anti) {
        if (rng() % 2) continue;
        const int a = find(g.edges[e].from), b = find(g.edges[e].to);
        if (a == b) continue;
        p[a] = b;
        sigma.push_back(e);
      }
      const int root = static_cast<int>(rng() % g.vertex_count);
      int ex = 0;
      const RootedTree t = extend_forest(g, sigma, root, &ex);
      CHECK(static_cast<int>(t.edges.size()) == g.vertex_count - 1);
      CHECK(is_coherent(t, g));
      for (int e : sigma) CHECK(contains_class(t, cls, cls[e]));
      CHECK(ex <= static_cast<int>(sigma.size()));
      with_sigma += !sigma.empty();
      ++instances;
    }
  }
  CHECK(with_sigma > 50);
}

TEST_CASE("maximal selectors carry the degree of Delta") {
  // alternating pretzel, anti-parallel bigon sites in two columns
  const DiagramCode d = numerator(Tangle::vertical(3) + Tangle::vertical(3) + Tangle::vertical(3));
  std::vector<TwistSite> sites;
  std::set<int> used;
  for (const Face& f : faces(d)) {
    if (f.corners.size() != 2 || sites.size() == 2) continue;
    const TwistSite s{"s" + std::to_string(sites.size()), SiteKind::apar_even, false, 0, f.corners[0].arc,
                      f.corners[1].arc};
    if (used.count(s.arc_a) || used.count(s.arc_b)) continue;
    try {
      WiringDiagram(d, {s});
    } catch (const DiagramError&) {
      continue;
    }
    sites.push_back(s);
    used.insert(s.arc_a);
    used.insert(s.arc_b);
  }
  REQUIRE(sites.size() == 2);
  const WiringDiagram w(d, sites);
  const Envelope env = envelope(w, {0, 0}, Invariant::alexander);
  int checked = 0;
  for (int sgn : {1, -1})
    for (int qa : {2, 4})
      for (int qb : {2, 4}) {
        const std::vector<int> q{sgn * qa, sgn * qb};
        const DiagramCode r = realize(w, q);
        if (!is_alternating(r)) continue;
        const HalfLaurent1 delta = env.evaluate(q).to1("t");
        REQUIRE(!delta.is_zero());
        std::vector<std::vector<int>> nonzero;
        for (const auto& [sel, x] : env.x)
          if (!x.is_zero()) nonzero.push_back(sel);
        for (const auto& sel : nonzero) {
          bool maximal = true;
          for (const auto& o : nonzero)
            if (o != sel && o[0] >= sel[0] && o[1] >= sel[1]) maximal = false;
          if (!maximal) continue;
          const HalfLaurent1 xv = env.x.at(sel).to1("u");
          // x is in u = t^{1/2}: its span in u is twice the span in t
          CHECK((xv.max_exp() - xv.min_exp()) / 2 == delta.max_exp() - delta.min_exp());
          ++checked;
        }
      }
  CHECK(checked > 0);
}
