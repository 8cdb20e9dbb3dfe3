#include "km/spantree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace km {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

void check_root(const CheckerGraph& g, int root) {
  if (root < 0 || root >= g.vertex_count) throw TreeError("root out of range");
}

bool connected_with(const CheckerGraph& g, const std::vector<int>& chosen, std::size_t from) {
  Dsu d(g.vertex_count);
  int comps = g.vertex_count;
  for (int e : chosen) comps -= d.unite(g.edges[e].from, g.edges[e].to);
  for (std::size_t e = from; e < g.edges.size(); ++e) comps -= d.unite(g.edges[e].from, g.edges[e].to);
  return comps == 1;
}

}  // namespace

RootedTree root_tree(const CheckerGraph& g, std::vector<int> edges, int root) {
  check_root(g, root);
  const int n = g.vertex_count;
  if (static_cast<int>(edges.size()) != n - 1) throw TreeError("a spanning tree has |V|-1 edges");
  std::sort(edges.begin(), edges.end());
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e : edges) {
    const auto& x = g.edges.at(e);
    adj[x.from].push_back({x.to, e});
    adj[x.to].push_back({x.from, e});
  }
  RootedTree t;
  t.root = root;
  t.edges = edges;
  t.parent_edge.assign(n, -1);
  t.parent.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(root);
  seen[root] = true;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const auto& [w, e] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      ++reached;
      t.parent[w] = v;
      t.parent_edge[w] = e;
      q.push(w);
    }
  }
  if (reached != n) throw TreeError("edge set is not a spanning tree");
  return t;
}

void for_each_spanning_tree(const CheckerGraph& g, int root, const std::function<void(const RootedTree&)>& f,
                            std::size_t cap) {
  check_root(g, root);
  const int n = g.vertex_count;
  if (!connected_with(g, {}, 0)) throw TreeError("graph is disconnected");
  std::size_t count = 0;
  std::vector<int> chosen;
  // include or exclude each edge in turn; exclusion only while the rest can still connect
  std::function<void(std::size_t, Dsu)> rec = [&](std::size_t i, Dsu dsu) {
    if (static_cast<int>(chosen.size()) == n - 1) {
      if (++count > cap) throw TreeError("more than " + std::to_string(cap) + " spanning trees");
      f(root_tree(g, chosen, root));
      return;
    }
    if (i == g.edges.size()) return;
    const auto& e = g.edges[i];
    if (dsu.find(e.from) != dsu.find(e.to)) {
      Dsu with = dsu;
      with.unite(e.from, e.to);
      chosen.push_back(static_cast<int>(i));
      rec(i + 1, with);
      chosen.pop_back();
    }
    if (connected_with(g, chosen, i + 1)) rec(i + 1, dsu);
  };
  rec(0, Dsu(n));
}

std::vector<RootedTree> spanning_trees(const CheckerGraph& g, int root, std::size_t cap) {
  std::vector<RootedTree> out;
  for_each_spanning_tree(g, root, [&](const RootedTree& t) { out.push_back(t); }, cap);
  return out;
}

BigInt kirchhoff_count(const CheckerGraph& g) {
  const int n = g.vertex_count;
  if (n <= 1) return 1;
  // reduced Laplacian without vertex 0, Bareiss fraction-free elimination
  const int m = n - 1;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
  for (const auto& e : g.edges) {
    if (e.from == e.to) continue;
    for (auto [x, y] : {std::pair{e.from, e.to}, std::pair{e.to, e.from}}) {
      if (x > 0) {
        a[x - 1][x - 1] += 1;
        if (y > 0) a[x - 1][y - 1] -= 1;
      }
    }
  }
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    int piv = k;
    while (piv < m && a[piv][k] == 0) ++piv;
    if (piv == m) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

int iota(const RootedTree& t, const CheckerGraph& g) {
  int bad = 0;
  for (int v = 0; v < g.vertex_count; ++v)
    if (t.parent_edge[v] >= 0 && g.edges[t.parent_edge[v]].from != v) ++bad;
  return bad;
}

bool is_coherent(const RootedTree& t, const CheckerGraph& g) { return iota(t, g) == 0; }

HalfLaurent1 tree_polynomial(const CheckerGraph& g, int root, std::size_t cap) {
  std::map<int, BigInt> c;
  for_each_spanning_tree(g, root, [&](const RootedTree& t) { c[2 * iota(t, g)] += 1; }, cap);
  return HalfLaurent1(HalfLaurent1::Terms(c.begin(), c.end()));
}

HalfLaurent1 alexander_via_trees(const DiagramCode& d, int root) {
  return tree_polynomial(checkerboard_graph(d), root);
}

HalfLaurent1 alexander_at_minus_t(const HalfLaurent1& delta) {
  if (delta.is_zero()) return delta;
  if (!delta.uniform_parity()) throw PolyError("alexander_at_minus_t: mixed half and whole powers");
  HalfLaurent1 p = delta.integral_exponents() ? delta : delta.shifted(-1);
  return unit_normalize(p.negate_variable()).poly;
}

std::size_t coherent_tree_count(const CheckerGraph& g, int root) {
  std::size_t n = 0;
  for_each_spanning_tree(g, root, [&](const RootedTree& t) { n += is_coherent(t, g); });
  return n;
}

// ---------------------------------------------------------------------------
// forest extension

std::vector<int> antiparallel_classes(const CheckerGraph& g) {
  std::map<std::pair<int, int>, std::pair<bool, bool>> dirs;
  for (const auto& e : g.edges) {
    if (e.from == e.to) continue;
    auto& d = dirs[{std::min(e.from, e.to), std::max(e.from, e.to)}];
    (e.from < e.to ? d.first : d.second) = true;
  }
  std::map<std::pair<int, int>, int> id;
  std::vector<int> cls(g.edges.size(), -1);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.from == e.to) continue;
    const std::pair<int, int> key{std::min(e.from, e.to), std::max(e.from, e.to)};
    const auto& d = dirs[key];
    if (!(d.first && d.second)) continue;
    auto it = id.try_emplace(key, static_cast<int>(id.size())).first;
    cls[i] = it->second;
  }
  return cls;
}

namespace {

// One collapsed edge per vertex pair.
struct BarEdge {
  int a, b;
  bool anti;
  bool a_to_b;  // direction of an ordinary edge
};

}  // namespace

RootedTree extend_forest(const CheckerGraph& g, const std::vector<int>& sigma, int root, int* exchanges) {
  check_root(g, root);
  const int n = g.vertex_count;
  const std::vector<int> cls = antiparallel_classes(g);
  std::map<std::pair<int, int>, int> bar_of_pair;
  std::vector<BarEdge> bars;
  for (const auto& e : g.edges) {
    if (e.from == e.to) continue;
    const std::pair<int, int> key{std::min(e.from, e.to), std::max(e.from, e.to)};
    auto [it, fresh] = bar_of_pair.try_emplace(key, static_cast<int>(bars.size()));
    if (fresh) bars.push_back({key.first, key.second, false, e.from == key.first});
    BarEdge& b = bars[it->second];
    if ((e.from == key.first) != b.a_to_b) b.anti = true;
  }
  auto bar_of = [&](int e) {
    const auto& x = g.edges[e];
    return bar_of_pair.at({std::min(x.from, x.to), std::max(x.from, x.to)});
  };
  auto usable = [&](int bar, int from, int to) {
    const BarEdge& b = bars[bar];
    return b.anti || (b.a_to_b ? from == b.a && to == b.b : from == b.b && to == b.a);
  };

  std::set<int> sig;
  Dsu forest(n);
  for (int e : sigma) {
    if (e < 0 || e >= static_cast<int>(g.edges.size())) throw TreeError("extend_forest: bad edge index");
    if (cls[e] < 0) throw TreeError("extend_forest: edge " + std::to_string(e) + " is not anti-parallel");
    const int b = bar_of(e);
    if (!sig.insert(b).second) continue;
    if (!forest.unite(bars[b].a, bars[b].b)) throw TreeError("extend_forest: the anti-parallel edges contain a cycle");
  }

  // a coherent tree of the collapsed graph: everything flows to the root
  std::vector<std::vector<int>> inc(n);
  for (int b = 0; b < static_cast<int>(bars.size()); ++b) {
    inc[bars[b].a].push_back(b);
    inc[bars[b].b].push_back(b);
  }
  std::vector<int> parent(n, -1), pbar(n, -1);
  {
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int b : inc[x]) {
        const int y = bars[b].a == x ? bars[b].b : bars[b].a;
        if (seen[y] || !usable(b, y, x)) continue;
        seen[y] = true;
        parent[y] = x;
        pbar[y] = b;
        q.push(y);
      }
    }
    for (int v = 0; v < n; ++v)
      if (!seen[v]) throw TreeError("extend_forest: no coherent spanning tree exists");
  }
  auto height = [&](int v) {
    int h = 0;
    for (; v != root; v = parent[v]) ++h;
    return h;
  };
  auto in_tree = [&](int b) {
    return pbar[bars[b].a] == b || pbar[bars[b].b] == b;
  };

  int steps = 0;
  for (int e : sig) {
    if (in_tree(e)) continue;
    int v0 = bars[e].a, w = bars[e].b;
    if (height(w) > height(v0)) std::swap(v0, w);
    // x runs v0, w, ... up to the lowest common ancestor; y runs v0, ... up to it
    std::set<int> anc;
    for (int v = v0;; v = parent[v]) {
      anc.insert(v);
      if (v == root) break;
    }
    int lca = w;
    while (!anc.count(lca)) lca = parent[lca];
    std::vector<int> ypath, xpath;  // vertices whose parent edge lies on the path
    for (int v = v0; v != lca; v = parent[v]) ypath.push_back(v);
    for (int v = w; v != lca; v = parent[v]) xpath.push_back(v);
    bool y_in_sigma = true;
    for (int v : ypath) y_in_sigma = y_in_sigma && sig.count(pbar[v]);
    // re-hang a path: each vertex takes the previous one as parent, through the edge between them
    auto rehang = [&](const std::vector<int>& path, std::size_t upto, int first_parent, int first_bar) {
      int prev = first_parent, prevbar = first_bar;
      for (std::size_t k = 0; k <= upto; ++k) {
        const int cur = path[k];
        const int old = pbar[cur];
        parent[cur] = prev;
        pbar[cur] = prevbar;
        prev = cur;
        prevbar = old;
      }
    };
    if (y_in_sigma) {
      std::size_t j = 0;
      while (j < xpath.size() && sig.count(pbar[xpath[j]])) ++j;
      if (j == xpath.size()) throw TreeError("internal: cycle inside the forest");
      rehang(xpath, j, v0, e);
    } else {
      std::size_t j = 0;
      while (sig.count(pbar[ypath[j]])) ++j;
      rehang(ypath, j, w, e);
    }
    ++steps;
    for (int v = 0; v < n; ++v)
      if (v != root && !usable(pbar[v], v, parent[v])) throw TreeError("internal: exchange broke coherence");
  }
  if (exchanges) *exchanges = steps;

  // lift: the first edge of each collapsed edge pointing at the parent
  std::vector<int> edges;
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    int pick = -1;
    for (std::size_t i = 0; i < g.edges.size() && pick < 0; ++i)
      if (g.edges[i].from == v && g.edges[i].to == parent[v]) pick = static_cast<int>(i);
    if (pick < 0) throw TreeError("internal: no coherent lift");
    edges.push_back(pick);
  }
  return root_tree(g, edges, root);
}

}  // namespace km
