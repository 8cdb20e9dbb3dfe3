#include "doctest.h"
#include "km/construct.hpp"
#include "km/skein.hpp"

#include <numeric>
#include <random>

using namespace km;

namespace {

HalfLaurent1 P(const char* s) { return parse_poly1(s); }
HalfLaurentN VZ(const char* s) { return parse_polyN(s, vz_vars()); }

DiagramCode trefoil() { return numerator(Tangle::integer(3)); }
DiagramCode figure_eight() { return numerator(Tangle::integer(2) + Tangle::vertical(2)); }

DiagramCode positive(const DiagramCode& d) { return writhe(d) >= 0 ? d : mirror(d); }

}  // namespace

TEST_CASE("unknots and unlinks") {
  CHECK(homflypt(parse_diagram("O1\n")) == VZ("1"));
  CHECK(homflypt(numerator(Tangle::crossing(1))) == VZ("1"));
  CHECK(homflypt(numerator(Tangle::integer(-4) + Tangle::integer(4))).size() > 0);
  CHECK(homflypt(parse_diagram("O1\nO2\n")) == VZ("v^-1*z^-1 - v*z^-1"));
  CHECK(jones(parse_diagram("O1\nO2\n")) == P("-t^{1/2} - t^{-1/2}"));
  CHECK(alexander(parse_diagram("O1\nO2\n")).is_zero());
  CHECK_THROWS_AS(hat_p(parse_diagram("O1\nO2\n")), SkeinError);
}

TEST_CASE("trefoil calibration") {
  const DiagramCode t = positive(trefoil());
  CHECK(writhe(t) == 3);
  CHECK(homflypt(t) == VZ("-v^4 + 2*v^2 + v^2*z^2"));
  CHECK(jones(t) == P("-t^4 + t^3 + t"));
  CHECK(alexander(t) == P("t - 1 + t^-1"));
  CHECK(jones(mirror(t)) == P("-t^-4 + t^-3 + t^-1"));
}

TEST_CASE("Hopf link and figure eight") {
  const DiagramCode h = positive(numerator(Tangle::integer(2)));
  CHECK(alexander(h) == P("t^{1/2} - t^{-1/2}"));
  const DiagramCode f = figure_eight();
  CHECK(alexander(f) == P("-t + 3 - t^-1"));
  CHECK(jones(f) == P("t^2 - t + 1 - t^-1 + t^-2"));
}

TEST_CASE("crossing cap") {
  SkeinOptions opt;
  opt.crossing_cap = 2;
  CHECK_THROWS_AS(homflypt(trefoil(), opt), SkeinError);
}

TEST_CASE("skein residual vanishes at every crossing") {
  const std::vector<DiagramCode> ds{trefoil(), figure_eight(), numerator(Tangle::integer(2)),
                                    numerator(Tangle::vertical(2) + Tangle::vertical(3) + Tangle::vertical(-3))};
  for (const auto& d : ds)
    for (int c = 0; c < d.crossing_count(); ++c) CHECK(skein_residual(d, c).is_zero());
}

TEST_CASE("property: label, order and memo independence") {
  std::mt19937_64 rng(9);
  const std::vector<DiagramCode> ds{figure_eight(),
                                    numerator(Tangle::vertical(2) + Tangle::vertical(3) + Tangle::vertical(-3)),
                                    numerator(Tangle::vertical(2) + Tangle::vertical(-2) + Tangle::vertical(2))};
  SkeinOptions nomemo;
  nomemo.memo = false;
  for (const auto& d : ds) {
    const HalfLaurentN p = homflypt(d);
    CHECK(homflypt(d, nomemo) == p);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<int> cp(d.crossing_count()), ap(2 * d.crossing_count());
      std::iota(cp.begin(), cp.end(), 0);
      std::iota(ap.begin(), ap.end(), 0);
      std::shuffle(cp.begin(), cp.end(), rng);
      std::shuffle(ap.begin(), ap.end(), rng);
      CHECK(homflypt(relabeled(d, cp, ap), nomemo) == p);
    }
  }
}

TEST_CASE("connected sum multiplies") {
  const DiagramCode t = trefoil(), f = figure_eight();
  const DiagramCode s = connected_sum(t, 1, f, 2);
  CHECK(homflypt(s) == homflypt(t) * homflypt(f));
}

TEST_CASE("Alexander polynomial is reciprocal on knots") {
  for (const auto& d : {trefoil(), figure_eight(),
                        numerator(Tangle::vertical(3) + Tangle::vertical(3) + Tangle::vertical(-3))}) {
    const HalfLaurent1 a = alexander(d);
    CHECK(eq_up_to_units(a, a.reciprocal()));
  }
}

TEST_CASE("tangle coefficients of the basis") {
  auto c1 = tangle_coeffs_2strand(basis_s1());
  CHECK(c1.f == P("1"));
  CHECK(c1.g.is_zero());
  auto c2 = tangle_coeffs_2strand(basis_s2());
  CHECK(c2.f.is_zero());
  CHECK(c2.g == P("1"));
}
