#include "km/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <regex>
#include <set>
#include <sstream>

namespace km {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

int next_dart(const EndGraph& g, int e) {
  const int f = g.partner[e];
  return 4 * (f / 4) + (f % 4 + 1) % 4;
}

}  // namespace

int EndGraph::smoothing_mate(int e) const {
  const Crossing& x = crossings[e / 4];
  const int p = e % 4;
  int q;
  if (p == x.over_in()) q = x.under_out();
  else if (p == x.under_out()) q = x.over_in();
  else if (p == x.under_in()) q = x.over_out();
  else q = x.under_in();
  return 4 * (e / 4) + q;
}

DiagramCode::DiagramCode(std::vector<Crossing> crossings, std::vector<int> circles)
    : crossings_(std::move(crossings)), circles_(std::move(circles)) {
  validate();
}

void DiagramCode::validate() {
  std::set<int> ids;
  std::map<int, std::vector<int>> ends_of;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const Crossing& x = crossings_[c];
    if (!ids.insert(x.id).second) throw DiagramError("duplicate crossing id X" + std::to_string(x.id));
    if (x.sign != 1 && x.sign != -1) throw DiagramError("crossing X" + std::to_string(x.id) + ": sign must be + or -");
    if (x.over != 0 && x.over != 2) throw DiagramError("crossing X" + std::to_string(x.id) + ": over must be 0 or 2");
    for (int p = 0; p < 4; ++p) ends_of[x.ends[p]].push_back(static_cast<int>(4 * c + p));
  }
  std::set<int> circle_labels;
  for (int o : circles_) {
    if (!circle_labels.insert(o).second || ends_of.count(o))
      throw DiagramError("circle label " + std::to_string(o) + " repeated");
  }
  graph_ = EndGraph{};
  graph_.crossings = crossings_;
  graph_.partner.assign(4 * crossings_.size(), -1);
  graph_.arc.assign(4 * crossings_.size(), 0);
  graph_.free_loops = static_cast<int>(circles_.size());
  for (const auto& [label, es] : ends_of) {
    if (es.size() == 1) throw DiagramError("arc " + std::to_string(label) + " is dangling");
    if (es.size() > 2) throw DiagramError("arc " + std::to_string(label) + " used more than twice");
    graph_.partner[es[0]] = es[1];
    graph_.partner[es[1]] = es[0];
    graph_.arc[es[0]] = graph_.arc[es[1]] = label;
    if (graph_.outgoing(es[0]) == graph_.outgoing(es[1]))
      throw DiagramError("orientation conflict on arc " + std::to_string(label));
  }
  // planarity: F = c + 2 on every connected piece
  const int n = static_cast<int>(crossings_.size());
  UnionFind uf(n);
  for (int e = 0; e < 4 * n; ++e) uf.unite(e / 4, graph_.partner[e] / 4);
  std::map<int, int> face_count, cross_count;
  for (int c = 0; c < n; ++c) ++cross_count[uf.find(c)];
  std::vector<bool> seen(4 * n, false);
  for (int e = 0; e < 4 * n; ++e) {
    if (seen[e]) continue;
    ++face_count[uf.find(e / 4)];
    for (int d = e; !seen[d]; d = next_dart(graph_, d)) seen[d] = true;
  }
  for (const auto& [root, c] : cross_count)
    if (face_count[root] != c + 2) throw DiagramError("diagram is not planar (Euler characteristic check failed)");
}

int DiagramCode::index_of(int crossing_id) const {
  for (std::size_t c = 0; c < crossings_.size(); ++c)
    if (crossings_[c].id == crossing_id) return static_cast<int>(c);
  return -1;
}

int DiagramCode::component_count() const {
  const int n = crossing_count();
  std::vector<bool> seen(4 * n, false);
  int count = 0;
  for (int e = 0; e < 4 * n; ++e) {
    if (seen[e]) continue;
    ++count;
    int d = e;
    while (!seen[d]) {
      seen[d] = true;
      const int through = 4 * (d / 4) + (d % 4 + 2) % 4;
      seen[through] = true;
      d = graph_.partner[through];
    }
  }
  return count + static_cast<int>(circles_.size());
}

int DiagramCode::piece_count() const {
  const int n = crossing_count();
  UnionFind uf(n);
  int pieces = n;
  for (int e = 0; e < 4 * n; ++e) pieces -= uf.unite(e / 4, graph_.partner[e] / 4);
  return pieces + static_cast<int>(circles_.size());
}

// ---------------------------------------------------------------------------
// text form

DiagramCode parse_diagram(std::string_view text) {
  static const std::regex xline(
      R"(^X(-?\d+)\s+sign=([+-])\s+ends=\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s+over=([02])\s*$)");
  static const std::regex oline(R"(^O(-?\d+)\s*$)");
  std::vector<Crossing> xs;
  std::vector<int> circles;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    std::smatch m;
    if (std::regex_match(line, m, xline)) {
      Crossing x;
      x.id = std::stoi(m[1]);
      x.sign = m[2] == "+" ? 1 : -1;
      for (int k = 0; k < 4; ++k) x.ends[k] = std::stoi(m[3 + k]);
      x.over = std::stoi(m[7]);
      xs.push_back(x);
    } else if (std::regex_match(line, m, oline)) {
      circles.push_back(std::stoi(m[1]));
    } else {
      throw DiagramError("line " + std::to_string(lineno) + ": cannot parse '" + line + "'");
    }
  }
  return DiagramCode(std::move(xs), std::move(circles));
}

std::string print_diagram(const DiagramCode& d) {
  std::ostringstream out;
  for (const Crossing& x : d.crossings()) {
    out << 'X' << x.id << " sign=" << (x.sign > 0 ? '+' : '-') << " ends=(" << x.ends[0] << ',' << x.ends[1] << ','
        << x.ends[2] << ',' << x.ends[3] << ") over=" << x.over << '\n';
  }
  for (int o : d.circles()) out << 'O' << o << '\n';
  return out.str();
}

DiagramCode load_diagram_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DiagramError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_diagram(ss.str());
}

DiagramCode from_end_graph(const EndGraph& g) {
  const int n = g.size();
  std::vector<Crossing> xs = g.crossings;
  std::vector<int> label(4 * n, 0);
  int next = 1;
  for (int e = 0; e < 4 * n; ++e) {
    if (label[e]) continue;
    label[e] = label[g.partner[e]] = next++;
  }
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) xs[c].ends[p] = label[4 * c + p];
  std::vector<int> circles;
  for (int i = 0; i < g.free_loops; ++i) circles.push_back(next++);
  return DiagramCode(std::move(xs), std::move(circles));
}

DiagramCode relabeled(const DiagramCode& d, const std::vector<int>& crossing_perm, const std::vector<int>& arc_perm) {
  std::set<int> labels;
  for (const Crossing& x : d.crossings()) labels.insert(x.ends.begin(), x.ends.end());
  labels.insert(d.circles().begin(), d.circles().end());
  std::vector<int> sorted(labels.begin(), labels.end());
  if (arc_perm.size() != sorted.size() || crossing_perm.size() != d.crossings().size())
    throw DiagramError("relabeled: permutation size mismatch");
  std::map<int, int> to;
  for (std::size_t i = 0; i < sorted.size(); ++i) to[sorted[i]] = sorted[arc_perm[i]];
  std::vector<Crossing> xs;
  for (std::size_t i = 0; i < crossing_perm.size(); ++i) {
    Crossing x = d.crossings()[crossing_perm[i]];
    for (int& a : x.ends) a = to[a];
    if (i % 2) {  // rotate by half a turn; the over-strand stays at {0,2}
      std::rotate(x.ends.begin(), x.ends.begin() + 2, x.ends.end());
      x.over = 2 - x.over;
    }
    x.id = static_cast<int>(1000 + i);
    xs.push_back(x);
  }
  std::vector<int> circles;
  for (int o : d.circles()) circles.push_back(to[o]);
  return DiagramCode(std::move(xs), std::move(circles));
}

DiagramCode mirror(const DiagramCode& d) {
  std::vector<Crossing> xs = d.crossings();
  for (Crossing& x : xs) {
    const int ui = x.under_in();
    std::rotate(x.ends.begin(), x.ends.begin() + 1, x.ends.end());
    x.over = (ui + 3) % 4;
    x.sign = -x.sign;
  }
  return DiagramCode(std::move(xs), d.circles());
}

DiagramCode reverse(const DiagramCode& d) {
  std::vector<Crossing> xs = d.crossings();
  for (Crossing& x : xs) x.over = 2 - x.over;
  return DiagramCode(std::move(xs), d.circles());
}

// ---------------------------------------------------------------------------
// faces and twists

int Face::distinct_crossings() const {
  std::set<int> s;
  for (const Corner& c : corners) s.insert(c.crossing);
  return static_cast<int>(s.size());
}

std::vector<Face> faces(const DiagramCode& d) {
  const EndGraph& g = d.graph();
  const int n = g.size();
  std::vector<Face> out;
  std::vector<bool> seen(4 * n, false);
  for (int e = 0; e < 4 * n; ++e) {
    if (seen[e]) continue;
    Face f;
    for (int dart = e; !seen[dart]; dart = next_dart(g, dart)) {
      seen[dart] = true;
      const int arrive = g.partner[dart];
      const int leave = next_dart(g, dart);
      f.corners.push_back(Corner{arrive / 4, arrive % 4, g.arc[leave]});
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> corner_faces(const DiagramCode& d, const std::vector<Face>& fs) {
  std::vector<int> owner(4 * d.crossing_count(), -1);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const Corner& c : fs[i].corners) owner[4 * c.crossing + c.pos] = static_cast<int>(i);
  return owner;
}

std::vector<std::vector<int>> twists(const DiagramCode& d) {
  const int n = d.crossing_count();
  UnionFind uf(n);
  for (const Face& f : faces(d)) {
    if (f.corners.size() == 2 && f.corners[0].crossing != f.corners[1].crossing)
      uf.unite(f.corners[0].crossing, f.corners[1].crossing);
  }
  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < n; ++c) groups[uf.find(c)].push_back(c);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : groups) out.push_back(std::move(v));
  return out;
}

int twist_number(const DiagramCode& d) { return static_cast<int>(twists(d).size()); }

int writhe(const DiagramCode& d) {
  int w = 0;
  for (const Crossing& x : d.crossings()) w += x.sign;
  return w;
}

bool is_alternating(const DiagramCode& d) {
  const EndGraph& g = d.graph();
  for (int e = 0; e < 4 * g.size(); ++e) {
    if (!g.outgoing(e)) continue;
    if ((e % 2 == 0) == (g.partner[e] % 2 == 0)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Seifert circles

SeifertData seifert_circles(const DiagramCode& d) {
  const EndGraph& g = d.graph();
  const int n = g.size();
  SeifertData s;
  s.free_circles = static_cast<int>(d.circles().size());
  int max_label = 0;
  for (int a : g.arc) max_label = std::max(max_label, a);
  s.circle_of_arc.assign(max_label + 1, -1);
  s.crossing_circles.assign(n, {-1, -1});
  s.band_side.assign(n, {0, 0});
  std::vector<int> circle_of_end(4 * n, -1);
  for (int e0 = 0; e0 < 4 * n; ++e0) {
    if (!g.outgoing(e0) || circle_of_end[e0] >= 0) continue;
    const int id = static_cast<int>(s.circles.size());
    s.circles.emplace_back();
    for (int e = e0; circle_of_end[e] < 0;) {
      circle_of_end[e] = id;
      s.circles[id].push_back(g.arc[e]);
      s.circle_of_arc[g.arc[e]] = id;
      const int in = g.partner[e];
      circle_of_end[in] = id;
      const int out = g.smoothing_mate(in);
      const Crossing& x = g.crossings[in / 4];
      const int side = (out % 4 == (in % 4 + 1) % 4) ? -1 : 1;
      const int slot = (in % 4 == x.over_in()) ? 0 : 1;
      s.crossing_circles[in / 4][slot] = id;
      s.band_side[in / 4][slot] = side;
      e = out;
    }
  }
  const int m = static_cast<int>(s.circles.size());
  // adjacency of the Seifert graph
  std::vector<std::vector<int>> adj(m);
  for (int c = 0; c < n; ++c) {
    const auto [a, b] = s.crossing_circles[c];
    adj[a].push_back(c);
    adj[b].push_back(c);
  }
  s.side.assign(m, std::vector<int>(m, 0));
  s.separating.assign(m, false);
  for (int c = 0; c < m; ++c) {
    bool left = false, right = false;
    std::queue<int> q;
    for (int x : adj[c]) {
      const int slot = s.crossing_circles[x][0] == c ? 0 : 1;
      const int side = s.band_side[x][slot];
      (side < 0 ? left : right) = true;
      const int other = s.crossing_circles[x][1 - slot];
      if (s.side[c][other] == 0) {
        s.side[c][other] = side;
        q.push(other);
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int x : adj[u]) {
        const int v = s.crossing_circles[x][0] == u ? s.crossing_circles[x][1] : s.crossing_circles[x][0];
        if (v == c || s.side[c][v] != 0) continue;
        s.side[c][v] = s.side[c][u];
        q.push(v);
      }
    }
    s.separating[c] = left && right;
  }
  return s;
}

bool is_special(const DiagramCode& d) {
  const auto s = seifert_circles(d);
  return std::none_of(s.separating.begin(), s.separating.end(), [](bool b) { return b; });
}

DiagramCode smooth_crossings(const DiagramCode& d, const std::vector<int>& crossing_indices, bool drop_circles) {
  const EndGraph& g = d.graph();
  const int n = g.size();
  std::vector<int> partner = g.partner;
  std::vector<bool> gone(n, false);
  int loops = 0;
  auto merge = [&](int a, int b) {
    const int pa = partner[a], pb = partner[b];
    if (pa == b) {
      ++loops;
    } else {
      partner[pa] = pb;
      partner[pb] = pa;
    }
  };
  for (int c : crossing_indices) {
    if (c < 0 || c >= n || gone[c]) throw DiagramError("smooth_crossings: bad crossing index");
    const Crossing& x = g.crossings[c];
    merge(4 * c + x.over_in(), 4 * c + x.under_out());
    merge(4 * c + x.under_in(), 4 * c + x.over_out());
    gone[c] = true;
  }
  std::vector<int> new_index(n, -1);
  EndGraph h;
  for (int c = 0; c < n; ++c)
    if (!gone[c]) {
      new_index[c] = h.size();
      h.crossings.push_back(g.crossings[c]);
    }
  h.partner.assign(4 * h.size(), -1);
  for (int c = 0; c < n; ++c) {
    if (gone[c]) continue;
    for (int p = 0; p < 4; ++p) {
      const int f = partner[4 * c + p];
      h.partner[4 * new_index[c] + p] = 4 * new_index[f / 4] + f % 4;
    }
  }
  h.free_loops = (drop_circles ? 0 : g.free_loops + loops);
  return from_end_graph(h);
}

std::vector<DiagramCode> murasugi_factors(const DiagramCode& d) {
  if (!d.connected()) throw DiagramError("murasugi_factors: diagram is not connected");
  if (d.crossing_count() == 0) return {d};
  const SeifertData s = seifert_circles(d);
  const auto it = std::find(s.separating.begin(), s.separating.end(), true);
  if (it == s.separating.end()) return {d};
  const int c = static_cast<int>(it - s.separating.begin());
  std::vector<int> left, right;
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto [a, b] = s.crossing_circles[x];
    int side;
    if (a == c) side = s.band_side[x][0];
    else if (b == c) side = s.band_side[x][1];
    else side = s.side[c][a];
    (side < 0 ? left : right).push_back(x);
  }
  std::vector<DiagramCode> out;
  for (const auto& piece : {smooth_crossings(d, right, true), smooth_crossings(d, left, true)}) {
    auto sub = murasugi_factors(piece);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// checkerboard graph

CheckerGraph checkerboard_graph(const DiagramCode& d) {
  if (!d.connected() || d.crossing_count() == 0 || !d.circles().empty())
    throw DiagramError("checkerboard_graph: need a connected diagram with crossings");
  if (!is_alternating(d)) throw DiagramError("checkerboard_graph: diagram is not alternating");
  const EndGraph& g = d.graph();
  const int n = g.size();
  const auto fs = faces(d);
  const auto owner = corner_faces(d, fs);
  std::vector<int> color(fs.size(), -1);
  color[0] = 0;
  std::queue<int> q;
  q.push(0);
  std::vector<std::vector<int>> corners_of(fs.size());
  for (int k = 0; k < 4 * n; ++k) corners_of[owner[k]].push_back(k);
  while (!q.empty()) {
    const int f = q.front();
    q.pop();
    for (int k : corners_of[f]) {
      for (int nb : {4 * (k / 4) + (k % 4 + 1) % 4, 4 * (k / 4) + (k % 4 + 3) % 4}) {
        const int h = owner[nb];
        if (color[h] < 0) {
          color[h] = 1 - color[f];
          q.push(h);
        } else if (color[h] == color[f]) {
          throw DiagramError("checkerboard_graph: faces are not two-colorable");
        }
      }
    }
  }
  auto seifert_corner = [&](int k) {
    const int c = k / 4, p = k % 4;
    return g.crossings[c].incoming(p) != g.crossings[c].incoming((p + 1) % 4);
  };
  int white = -1;
  for (int w : {0, 1}) {
    bool ok = true;
    for (int k = 0; k < 4 * n && ok; ++k) ok = color[owner[k]] != w || seifert_corner(k);
    if (ok) {
      white = w;
      break;
    }
  }
  if (white < 0) throw DiagramError("checkerboard_graph: diagram is not special");
  CheckerGraph cg;
  std::vector<int> vertex(fs.size(), -1);
  for (std::size_t f = 0; f < fs.size(); ++f)
    if (color[f] != white) vertex[f] = cg.vertex_count++;
  for (int c = 0; c < n; ++c) {
    CheckerEdge e;
    e.crossing = c;
    for (int p = 0; p < 4; ++p) {
      const bool in0 = g.crossings[c].incoming(p), in1 = g.crossings[c].incoming((p + 1) % 4);
      if (in0 && in1) e.from = vertex[owner[4 * c + p]];
      if (!in0 && !in1) e.to = vertex[owner[4 * c + p]];
    }
    cg.edges.push_back(e);
  }
  cg.rotation.assign(cg.vertex_count, {});
  for (std::size_t f = 0; f < fs.size(); ++f) {
    if (vertex[f] < 0) continue;
    for (const Corner& k : fs[f].corners) cg.rotation[vertex[f]].push_back(k.crossing);
  }
  cg.root = 0;
  return cg;
}

double lackenby_lower_bound(int t) { return 1.01494 * (t - 2) / 2.0; }
double lackenby_lower_bound(const DiagramCode& d) { return lackenby_lower_bound(twist_number(d)); }

}  // namespace km
