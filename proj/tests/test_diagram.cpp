#include "doctest.h"
#include "km/construct.hpp"
#include "km/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace km;

namespace {

DiagramCode trefoil() { return numerator(Tangle::integer(3)); }
DiagramCode hopf() { return numerator(Tangle::integer(2)); }
DiagramCode figure_eight() { return numerator(Tangle::integer(2) + Tangle::vertical(2)); }

}  // namespace

TEST_CASE("parse and print round trip") {
  const DiagramCode t = trefoil();
  const std::string text = print_diagram(t);
  CHECK(parse_diagram(text) == t);
  CHECK(print_diagram(parse_diagram("# unknot\nO7\n")) == "O7\n");
}

TEST_CASE("malformed diagrams are rejected") {
  // arc 4 appears once
  CHECK_THROWS_AS(parse_diagram("X1 sign=+ ends=(1,2,3,4) over=0\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("X1 sign=* ends=(1,2,1,2) over=0\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("X1 sign=+ ends=(1,2,1,2) over=1\n"), DiagramError);
  // a crossing whose over-strand loops back into its own end: in meets in
  CHECK_THROWS_AS(parse_diagram("X1 sign=+ ends=(1,1,2,2) over=0\n"), DiagramError);
  std::string t = print_diagram(trefoil());
  t += "O1\n";  // label clash
  CHECK_THROWS_AS(parse_diagram(t), DiagramError);
}

TEST_CASE("non-planar gluing is rejected") {
  // two crossings glued like a virtual Hopf link: Euler check fails
  const std::string bad =
      "X1 sign=+ ends=(1,2,3,4) over=0\n"
      "X2 sign=+ ends=(3,2,1,4) over=0\n";
  CHECK_THROWS_AS(parse_diagram(bad), DiagramError);
}

TEST_CASE("basic counts on small diagrams") {
  const DiagramCode t = trefoil();
  CHECK(t.crossing_count() == 3);
  CHECK(t.component_count() == 1);
  CHECK(is_alternating(t));
  CHECK(std::abs(writhe(t)) == 3);
  CHECK(twist_number(t) == 1);
  CHECK(faces(t).size() == 5);
  const DiagramCode h = hopf();
  CHECK(h.component_count() == 2);
  CHECK(twist_number(h) == 1);
  const DiagramCode f = figure_eight();
  CHECK(f.component_count() == 1);
  CHECK(is_alternating(f));
  CHECK(twist_number(f) == 2);
  CHECK(writhe(f) == 0);
}

TEST_CASE("one-crossing unknot has no bigon") {
  const DiagramCode u = numerator(Tangle::crossing(1));
  CHECK(u.crossing_count() == 1);
  CHECK(u.component_count() == 1);
  CHECK(twist_number(u) == 1);
  CHECK(faces(u).size() == 3);
}

TEST_CASE("twist number of a pretzel diagram") {
  // pretzel (2,3,7): three vertical twist columns side by side
  const DiagramCode p = numerator(Tangle::vertical(2) + Tangle::vertical(3) + Tangle::vertical(7));
  CHECK(p.crossing_count() == 12);
  CHECK(twist_number(p) == 3);
  CHECK(lackenby_lower_bound(p) == doctest::Approx(1.01494 / 2));
}

TEST_CASE("Seifert circles") {
  const auto s = seifert_circles(trefoil());
  CHECK(s.circles.size() == 2);
  CHECK(is_special(trefoil()));
  // every arc lies on exactly one circle
  std::size_t arcs = 0;
  for (const auto& c : s.circles) arcs += c.size();
  CHECK(arcs == 6);
}

TEST_CASE("Murasugi factors of a composite special diagram") {
  const DiagramCode t = trefoil();
  const DiagramCode comp = connected_sum(t, 1, t, 1);
  CHECK(comp.crossing_count() == 6);
  CHECK(murasugi_factors(comp).size() >= 1);
  std::size_t total = 0;
  for (const auto& f : murasugi_factors(comp)) {
    CHECK(is_special(f));
    total += f.crossing_count();
  }
  CHECK(total == 6);
  // figure eight is not special: its Seifert circles nest
  const auto fs = murasugi_factors(figure_eight());
  CHECK(fs.size() == 2);
  for (const auto& f : fs) CHECK(is_special(f));
  CHECK_THROWS_AS(murasugi_factors(disjoint_union(t, t)), DiagramError);
}

TEST_CASE("checkerboard graph") {
  const DiagramCode t = trefoil();
  const CheckerGraph g = checkerboard_graph(t);
  CHECK(g.edges.size() == 3);
  // positive trefoil: two black regions joined by three parallel edges, or three in a cycle
  CHECK((g.vertex_count == 2 || g.vertex_count == 3));
  // edges alternate in and out around every vertex
  for (int v = 0; v < g.vertex_count; ++v) {
    const auto& rot = g.rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const auto& a = g.edges[rot[i]];
      const auto& b = g.edges[rot[(i + 1) % rot.size()]];
      CHECK((a.from == v) != (b.from == v));
    }
  }
  CHECK_THROWS_AS(checkerboard_graph(figure_eight()), DiagramError);
}

TEST_CASE("tangle splicing keeps diagrams planar") {
  const DiagramCode t = trefoil();
  // a crossing in the bigon between two strands: (2,4) torus link
  const auto fs = faces(t);
  Face bigon;
  for (const auto& f : fs)
    if (f.corners.size() == 2) bigon = f;
  REQUIRE(bigon.corners.size() == 2);
  // the bigon strands of a braid closure are parallel, so both crossing types fit
  int alternating = 0;
  for (int k : {1, -1}) {
    const DiagramCode d = insert_at_arcs(t, bigon.corners[0].arc, bigon.corners[1].arc, Tangle::crossing(k));
    CHECK(d.crossing_count() == 4);
    CHECK(d.component_count() == 2);
    if (is_alternating(d)) {
      ++alternating;
      CHECK(twist_number(d) == 1);
    }
  }
  CHECK(alternating == 1);
  const DiagramCode r = insert_at_crossing(t, 0, 0, Tangle::integer(3));
  CHECK(r.crossing_count() == 5);
}

TEST_CASE("property: invariants unchanged by relabeling") {
  std::mt19937_64 rng(5);
  const std::vector<DiagramCode> ds{trefoil(), hopf(), figure_eight(),
                                    numerator(Tangle::vertical(2) + Tangle::vertical(3) + Tangle::vertical(-3))};
  for (const auto& d : ds) {
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<int> cp(d.crossing_count()), ap(2 * d.crossing_count() + d.circles().size());
      std::iota(cp.begin(), cp.end(), 0);
      std::iota(ap.begin(), ap.end(), 0);
      std::shuffle(cp.begin(), cp.end(), rng);
      std::shuffle(ap.begin(), ap.end(), rng);
      const DiagramCode e = relabeled(d, cp, ap);
      CHECK(twist_number(e) == twist_number(d));
      CHECK(writhe(e) == writhe(d));
      CHECK(e.component_count() == d.component_count());
      CHECK(is_alternating(e) == is_alternating(d));
      CHECK(seifert_circles(e).circles.size() == seifert_circles(d).circles.size());
      CHECK(faces(e).size() == faces(d).size());
    }
  }
}

TEST_CASE("mirror and reverse") {
  const DiagramCode t = trefoil();
  CHECK(writhe(mirror(t)) == -writhe(t));
  CHECK(writhe(reverse(t)) == writhe(t));
  CHECK(is_alternating(mirror(t)));
  CHECK(twist_number(mirror(t)) == 1);
}
