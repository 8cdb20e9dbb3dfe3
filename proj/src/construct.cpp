#include "km/construct.hpp"

#include <algorithm>
#include <set>

namespace km {

using detail::Net;

namespace {

struct Joined {
  Net net;
  std::vector<int> ma, mb;  // node maps for the two parts
};

Joined join_nets(const Net& a, const Net& b) {
  const int n = a.n + b.n;
  const int ea = static_cast<int>(a.partner.size()) - 4 * a.n;
  const int eb = static_cast<int>(b.partner.size()) - 4 * b.n;
  Joined j;
  j.ma.resize(a.partner.size());
  j.mb.resize(b.partner.size());
  for (std::size_t x = 0; x < a.partner.size(); ++x)
    j.ma[x] = static_cast<int>(x) < 4 * a.n ? static_cast<int>(x) : 4 * n + (static_cast<int>(x) - 4 * a.n);
  for (std::size_t y = 0; y < b.partner.size(); ++y)
    j.mb[y] = static_cast<int>(y) < 4 * b.n ? 4 * a.n + static_cast<int>(y) : 4 * n + ea + (static_cast<int>(y) - 4 * b.n);
  Net& r = j.net;
  r.n = n;
  r.partner.assign(4 * n + ea + eb, -1);
  for (std::size_t x = 0; x < a.partner.size(); ++x)
    if (a.partner[x] >= 0) r.partner[j.ma[x]] = j.ma[a.partner[x]];
  for (std::size_t y = 0; y < b.partner.size(); ++y)
    if (b.partner[y] >= 0) r.partner[j.mb[y]] = j.mb[b.partner[y]];
  r.over_odd = a.over_odd;
  r.over_odd.insert(r.over_odd.end(), b.over_odd.begin(), b.over_odd.end());
  r.ids = a.ids;
  r.ids.insert(r.ids.end(), b.ids.begin(), b.ids.end());
  r.dir = a.dir;
  r.dir.insert(r.dir.end(), b.dir.begin(), b.dir.end());
  r.loops = a.loops + b.loops;
  return j;
}

// Splice away two dangling nodes: whatever was attached to x is attached to
// whatever was attached to y.
void merge(Net& r, int x, int y) {
  const int px = r.partner[x], py = r.partner[y];
  if (px < 0 || py < 0) throw DiagramError("internal: merge on a dead node");
  if (px == y) {
    ++r.loops;
  } else {
    r.partner[px] = py;
    r.partner[py] = px;
  }
  r.partner[x] = r.partner[y] = -1;
}

Net compact(const Net& r, const std::vector<bool>& removed, const std::vector<int>& new_bnd) {
  std::vector<int> m(r.partner.size(), -1);
  Net out;
  for (int c = 0; c < r.n; ++c) {
    if (!removed.empty() && removed[c]) continue;
    for (int k = 0; k < 4; ++k) m[4 * c + k] = 4 * out.n + k;
    out.over_odd.push_back(r.over_odd[c]);
    out.ids.push_back(r.ids[c]);
    for (int k = 0; k < 4; ++k) out.dir.push_back(r.dir[4 * c + k]);
    ++out.n;
  }
  for (std::size_t k = 0; k < new_bnd.size(); ++k) m[new_bnd[k]] = 4 * out.n + static_cast<int>(k);
  out.partner.assign(4 * out.n + new_bnd.size(), -1);
  for (std::size_t x = 0; x < r.partner.size(); ++x) {
    if (m[x] < 0) continue;
    const int p = r.partner[x];
    if (p < 0 || m[p] < 0) throw DiagramError("internal: dangling node after splice");
    out.partner[m[x]] = m[p];
  }
  for (std::size_t k = 0; k < new_bnd.size(); ++k) out.bnd.push_back(4 * out.n + static_cast<int>(k));
  out.loops = r.loops;
  return out;
}

int through(int x) { return 4 * (x / 4) + (x % 4 + 2) % 4; }

DiagramCode to_diagram(Net r, const std::vector<bool>& reverse) {
  if (!r.bnd.empty()) throw DiagramError("internal: open net");
  const int n = r.n;
  std::set<int> seen_ids(r.ids.begin(), r.ids.end());
  if (static_cast<int>(seen_ids.size()) != n)
    for (int c = 0; c < n; ++c) r.ids[c] = c + 1;
  std::vector<signed char> dir(4 * n, -1);
  int comp = 0;
  for (int s = 0; s < 4 * n; ++s) {
    if (dir[s] >= 0) continue;
    std::vector<int> ins;
    int x = s;
    do {
      ins.push_back(x);
      x = r.partner[through(x)];
    } while (x != s);
    bool keep = false, flip = false;
    for (int y : ins) {
      if (r.dir[y] == 0 || r.dir[through(y)] == 1) keep = true;
      if (r.dir[y] == 1 || r.dir[through(y)] == 0) flip = true;
    }
    if (keep && flip) throw DiagramError("orientation conflict after splicing");
    if (!keep && !flip && comp < static_cast<int>(reverse.size())) flip = reverse[comp];
    for (int y : ins) {
      dir[y] = flip ? 1 : 0;
      dir[through(y)] = flip ? 0 : 1;
    }
    ++comp;
  }
  EndGraph g;
  g.crossings.resize(n);
  g.partner.assign(4 * n, -1);
  auto pos = [&](int node) { return 4 * (node / 4) + (node % 4 - r.over_odd[node / 4] + 4) % 4; };
  for (int c = 0; c < n; ++c) {
    const int rot = r.over_odd[c];
    Crossing& x = g.crossings[c];
    x.id = r.ids[c];
    x.over = dir[4 * c + rot] == 0 ? 0 : 2;
    const int under_in = dir[4 * c + (rot + 1) % 4] == 0 ? 1 : 3;
    x.sign = under_in == (x.over + 1) % 4 ? 1 : -1;
    for (int k = 0; k < 4; ++k) g.partner[pos(4 * c + k)] = pos(r.partner[4 * c + k]);
  }
  g.free_loops = r.loops;
  return from_end_graph(g);
}

Net close(const Tangle& t, Tangle::Slot a1, Tangle::Slot b1, Tangle::Slot a2, Tangle::Slot b2) {
  Net r = t.net();
  merge(r, r.bnd[a1], r.bnd[b1]);
  merge(r, r.bnd[a2], r.bnd[b2]);
  return compact(r, {}, {});
}

int max_id(const Net& r) {
  int m = 0;
  for (int id : r.ids) m = std::max(m, id);
  return m;
}

Net with_fresh_ids(Net t, int base) {
  for (int c = 0; c < t.n; ++c) t.ids[c] = base + 1 + c;
  return t;
}

}  // namespace

Net Net::from_diagram(const DiagramCode& d) {
  const EndGraph& g = d.graph();
  Net r;
  r.n = g.size();
  r.partner = g.partner;
  r.over_odd.assign(r.n, 0);
  for (const Crossing& x : g.crossings) r.ids.push_back(x.id);
  for (int e = 0; e < 4 * r.n; ++e) r.dir.push_back(g.outgoing(e) ? 1 : 0);
  r.loops = g.free_loops;
  return r;
}

// ---------------------------------------------------------------------------
// tangles

Tangle Tangle::crossing(int type, int id) {
  Tangle t;
  Net& r = t.net_;
  r.n = 1;
  r.partner = {4, 5, 6, 7, 0, 1, 2, 3};
  r.over_odd = {static_cast<unsigned char>(type > 0 ? 1 : 0)};
  r.ids = {id};
  r.dir.assign(4, -1);
  r.bnd = {4, 5, 6, 7};
  return t;
}

Tangle Tangle::zero() {
  Tangle t;
  t.net_.partner = {3, 2, 1, 0};
  t.net_.bnd = {0, 1, 2, 3};
  return t;
}

Tangle Tangle::infinity() {
  Tangle t;
  t.net_.partner = {1, 0, 3, 2};
  t.net_.bnd = {0, 1, 2, 3};
  return t;
}

Tangle Tangle::integer(int k) {
  if (k == 0) return zero();
  Tangle t = crossing(k > 0 ? 1 : -1);
  for (int i = 1; i < std::abs(k); ++i) t = t + crossing(k > 0 ? 1 : -1);
  return t.renumbered();
}

Tangle Tangle::vertical(int k) {
  if (k == 0) return infinity();
  Tangle t = crossing(k > 0 ? 1 : -1);
  for (int i = 1; i < std::abs(k); ++i) t = t * crossing(k > 0 ? 1 : -1);
  return t.renumbered();
}

Tangle operator+(const Tangle& a, const Tangle& b) {
  Joined j = join_nets(a.net_, b.net_);
  const auto A = [&](int s) { return j.ma[a.net_.bnd[s]]; };
  const auto B = [&](int s) { return j.mb[b.net_.bnd[s]]; };
  merge(j.net, A(Tangle::NE), B(Tangle::NW));
  merge(j.net, A(Tangle::SE), B(Tangle::SW));
  Tangle t;
  t.net_ = compact(j.net, {}, {A(Tangle::NW), A(Tangle::SW), B(Tangle::SE), B(Tangle::NE)});
  return t;
}

Tangle operator*(const Tangle& a, const Tangle& b) {
  Joined j = join_nets(a.net_, b.net_);
  const auto A = [&](int s) { return j.ma[a.net_.bnd[s]]; };
  const auto B = [&](int s) { return j.mb[b.net_.bnd[s]]; };
  merge(j.net, A(Tangle::SW), B(Tangle::NW));
  merge(j.net, A(Tangle::SE), B(Tangle::NE));
  Tangle t;
  t.net_ = compact(j.net, {}, {A(Tangle::NW), B(Tangle::SW), B(Tangle::SE), A(Tangle::NE)});
  return t;
}

Tangle Tangle::rotated() const {
  Tangle t = *this;
  const auto& b = net_.bnd;
  t.net_.bnd = {b[NE], b[NW], b[SW], b[SE]};
  return t;
}

Tangle Tangle::mirrored() const {
  Tangle t = *this;
  for (auto& o : t.net_.over_odd) o = !o;
  return t;
}

Tangle Tangle::switched(const std::vector<int>& crossing_indices) const {
  Tangle t = *this;
  for (int c : crossing_indices) t.net_.over_odd.at(c) = !t.net_.over_odd.at(c);
  return t;
}

Tangle Tangle::substituted(int index, const Tangle& s, int axis) const {
  if (index < 0 || index >= net_.n) throw DiagramError("substituted: bad crossing index");
  Joined j = join_nets(net_, s.net_);
  for (int k = 0; k < 4; ++k) merge(j.net, 4 * index + (axis + k) % 4, j.mb[s.net_.bnd[k]]);
  std::vector<bool> removed(j.net.n, false);
  removed[index] = true;
  std::vector<int> bnd;
  for (int b : net_.bnd) bnd.push_back(j.ma[b]);
  Tangle t;
  t.net_ = compact(j.net, removed, bnd);
  return t;
}

Tangle Tangle::oriented_downward() const {
  Tangle t = *this;
  Net& r = t.net_;
  for (int slot = 0; slot < 4; ++slot) {
    const int x = r.partner[r.bnd[slot]];
    if (x < 4 * r.n) r.dir[x] = (slot == NW || slot == NE) ? 0 : 1;
  }
  return t;
}

Tangle Tangle::renumbered(int first) const {
  Tangle t = *this;
  for (int c = 0; c < t.net_.n; ++c) t.net_.ids[c] = first + c;
  return t;
}

DiagramCode numerator(const Tangle& t, const std::vector<bool>& reverse) {
  return to_diagram(close(t, Tangle::NW, Tangle::NE, Tangle::SW, Tangle::SE), reverse);
}

DiagramCode denominator(const Tangle& t, const std::vector<bool>& reverse) {
  return to_diagram(close(t, Tangle::NW, Tangle::SW, Tangle::NE, Tangle::SE), reverse);
}

// ---------------------------------------------------------------------------
// splicing into diagrams

std::pair<int, int> arc_site_darts(const EndGraph& g, int arc_a, int arc_b) {
  if (arc_a == arc_b) throw DiagramError("arc site: arcs must differ");
  const int n = g.size();
  std::vector<bool> seen(4 * n, false);
  for (int e = 0; e < 4 * n; ++e) {
    if (seen[e]) continue;
    int ca = -1, cb = -1, na = 0, nb = 0;
    for (int x = e; !seen[x]; x = 4 * (g.partner[x] / 4) + (g.partner[x] % 4 + 1) % 4) {
      seen[x] = true;
      if (g.arc[x] == arc_a) ca = x, ++na;
      if (g.arc[x] == arc_b) cb = x, ++nb;
    }
    if (na && nb) {
      if (na > 1 || nb > 1) throw DiagramError("arc site: an arc meets the face twice");
      return {ca, cb};
    }
  }
  throw DiagramError("arc site: arcs " + std::to_string(arc_a) + " and " + std::to_string(arc_b) +
                     " do not share a face");
}

DiagramCode splice(const DiagramCode& d, const std::vector<Splice>& sites, std::vector<std::vector<int>>* new_ids) {
  const EndGraph& g = d.graph();
  Net host = Net::from_diagram(d);
  // hole nodes for every site, NW SW SE NE
  std::vector<std::array<int, 4>> holes;
  std::vector<bool> removed(host.n, false);
  std::set<int> used_arcs;
  for (const Splice& s : sites) {
    std::array<int, 4> h{};
    if (s.at_crossing) {
      if (s.crossing_index < 0 || s.crossing_index >= host.n || removed[s.crossing_index])
        throw DiagramError("splice: bad or repeated crossing site");
      removed[s.crossing_index] = true;
      for (int k = 0; k < 4; ++k) h[k] = 4 * s.crossing_index + (s.axis + k) % 4;
    } else {
      if (!used_arcs.insert(s.arc_a).second || !used_arcs.insert(s.arc_b).second)
        throw DiagramError("splice: arc sites share an arc");
      const auto [da, db] = arc_site_darts(g, s.arc_a, s.arc_b);
      const int base = static_cast<int>(host.partner.size());
      host.partner.resize(base + 4, -1);
      auto link = [&](int x, int y) {
        host.partner[x] = y;
        host.partner[y] = x;
      };
      link(da, base + 0);
      link(base + 3, g.partner[da]);
      link(db, base + 2);
      link(base + 1, g.partner[db]);
      for (int k = 0; k < 4; ++k) h[k] = base + k;
    }
    holes.push_back(h);
  }
  Net all = host;
  std::vector<std::array<int, 4>> slots;
  int next_id = max_id(host);
  if (new_ids) new_ids->assign(sites.size(), {});
  for (std::size_t i = 0; i < sites.size(); ++i) {
    Net t = with_fresh_ids(sites[i].tangle.net(), next_id);
    if (new_ids)
      for (int id : t.ids) (*new_ids)[i].push_back(id);
    next_id += t.n;
    Joined j = join_nets(all, t);
    for (auto& h : holes)
      for (int& x : h) x = j.ma[x];
    for (auto& sl : slots)
      for (int& x : sl) x = j.ma[x];
    std::array<int, 4> sl{};
    for (int k = 0; k < 4; ++k) sl[k] = j.mb[t.bnd[k]];
    slots.push_back(sl);
    removed.resize(j.net.n, false);
    all = std::move(j.net);
  }
  for (std::size_t i = 0; i < sites.size(); ++i)
    for (int k = 0; k < 4; ++k) merge(all, holes[i][k], slots[i][k]);
  return to_diagram(compact(all, removed, {}), {});
}

DiagramCode insert_at_crossing(const DiagramCode& d, int crossing_index, int axis, const Tangle& t) {
  Splice s;
  s.crossing_index = crossing_index;
  s.axis = axis;
  s.tangle = t;
  return splice(d, {s});
}

DiagramCode insert_at_arcs(const DiagramCode& d, int arc_a, int arc_b, const Tangle& t) {
  Splice s;
  s.at_crossing = false;
  s.arc_a = arc_a;
  s.arc_b = arc_b;
  s.tangle = t;
  return splice(d, {s});
}

DiagramCode switch_crossings(const DiagramCode& d, const std::vector<int>& crossing_indices) {
  Net r = Net::from_diagram(d);
  for (int c : crossing_indices) r.over_odd.at(c) = !r.over_odd.at(c);
  return to_diagram(r, {});
}

DiagramCode connected_sum(const DiagramCode& a, int arc_a, const DiagramCode& b, int arc_b) {
  const Net na = Net::from_diagram(a);
  Net nb = Net::from_diagram(b);
  const int off = max_id(na);
  for (int& id : nb.ids) id += off;
  Joined j = join_nets(na, nb);
  auto out_end = [](const DiagramCode& d, int arc) {
    const EndGraph& g = d.graph();
    for (int e = 0; e < 4 * g.size(); ++e)
      if (g.arc[e] == arc && g.outgoing(e)) return e;
    throw DiagramError("connected_sum: no arc " + std::to_string(arc));
  };
  const int ua = j.ma[out_end(a, arc_a)], wa = j.net.partner[ua];
  const int ub = j.mb[out_end(b, arc_b)], wb = j.net.partner[ub];
  j.net.partner[ua] = wb, j.net.partner[wb] = ua;
  j.net.partner[ub] = wa, j.net.partner[wa] = ub;
  return to_diagram(j.net, {});
}

DiagramCode disjoint_union(const DiagramCode& a, const DiagramCode& b) {
  const Net na = Net::from_diagram(a);
  Net nb = Net::from_diagram(b);
  const int off = max_id(na);
  for (int& id : nb.ids) id += off;
  return to_diagram(join_nets(na, nb).net, {});
}

}  // namespace km
