#include "doctest.h"
#include "km/polyring.hpp"
#include "random_poly.hpp"

using namespace km;

namespace {
HalfLaurent1 P(const char* s) { return parse_poly1(s); }
const HalfLaurent1 kLehmer = P("t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1");
}  // namespace

TEST_CASE("ring arithmetic examples") {
  CHECK(P("t + 1") * P("t + 1") == P("t^2 + 2*t + 1"));
  const HalfLaurent1 f = P("3*t^2 - t^{-1/2} + 7");
  CHECK((f + (-f)).is_zero());
  CHECK(HalfLaurent1::z_of_t() * HalfLaurent1::z_of_t() == P("t - 2 + t^-1"));
  CHECK(P("t^{1/2} - t^{-1/2}") == HalfLaurent1::z_of_t());
}

TEST_CASE("length and nonzero count") {
  CHECK(length(HalfLaurent1{}) == 0);
  CHECK(length(P("t^2 + 2*t + 1")) == 4);
  CHECK(length(kLehmer) == 9);
  CHECK(nonzero_count(HalfLaurent1{}) == 0);
  CHECK(nonzero_count(P("1 + t").pow(5)) == 6);
  CHECK(nonzero_count(kLehmer) == 9);
}

TEST_CASE("substitute_monomials") {
  const std::vector<std::string> vars{"x", "y1", "y2"};
  CHECK(substitute_monomials(parse_polyN("x + y1*y2", vars), {2, 3}) == parse_poly1("x + x^5", "x"));
  CHECK(substitute_monomials(parse_polyN("x + y1 - x^2*y1*y2", vars), {2, 3}) == parse_poly1("x + x^2 - x^7", "x"));
  const HalfLaurentN f = parse_polyN("3*x^2*y1^-1 - y2 + x*y1*y2^2", vars);
  CHECK(substitute_monomials(f, {0, 0}) == parse_poly1("3*x^2 - 1 + x", "x"));
}

TEST_CASE("specialize") {
  const std::vector<std::string> vt{"v", "t"};
  // trefoil hat-P with v -> 1 gives t - 1 + t^-1
  const HalfLaurentN hatp = parse_polyN("-v^4 + 2*v^2 + v^2*t - 2*v^2 + v^2*t^-1", vt);
  const Tracked1 d = specialize1(hatp, {{"v", HalfLaurent1::constant(1)}}, "t");
  CHECK(d.value() == P("t - 1 + t^-1"));

  const std::vector<std::string> vz{"v", "z"};
  const HalfLaurentN one = HalfLaurentN::constant(vz, 1);
  CHECK(specialize1(one, {{"v", P("t")}, {"z", HalfLaurent1::z_of_t()}}, "t").value() == P("1"));

  const HalfLaurentN z2 = parse_polyN("z^2", vz);
  CHECK(specialize1(z2, {{"v", P("1")}, {"z", HalfLaurent1::z_of_t()}}, "t").value() == P("t - 2 + t^-1"));

  // 2-component unlink (v^-1 - v)/z: polynomial at v = t, zero at v = 1,
  // tracked denominator for v left free
  const HalfLaurentN unlink = parse_polyN("v^-1*z^-1 - v*z^-1", vz);
  CHECK(specialize1(unlink, {{"v", P("t")}, {"z", HalfLaurent1::z_of_t()}}, "t").value() ==
        P("-t^{1/2} - t^{-1/2}"));
  CHECK(specialize1(unlink, {{"v", P("1")}, {"z", HalfLaurent1::z_of_t()}}, "t").value().is_zero());
  const TrackedN hat = specialize(unlink, {{"z", HalfLaurentN::from1(vt, "t", HalfLaurent1::z_of_t())}}, vt);
  CHECK(hat.den_exp == 1);
  CHECK_THROWS_AS(hat.value(), PolyError);
}

TEST_CASE("unit_normalize") {
  auto u = unit_normalize(P("-t^3 + t^2"));
  CHECK(u.poly == P("t - 1"));
  CHECK(u.unit_sign == -1);
  CHECK(u.unit_doubled_shift == 4);
  u = unit_normalize(P("t - 1 + t^-1"));
  CHECK(u.poly == P("t^2 - t + 1"));
  CHECK(u.unit_sign == 1);
  CHECK(u.unit_doubled_shift == -2);
  u = unit_normalize(P("t^2 + 1"));
  CHECK(u.poly == P("t^2 + 1"));
  CHECK(u.unit_sign == 1);
  CHECK(u.unit_doubled_shift == 0);
  CHECK_THROWS_AS(unit_normalize(HalfLaurent1{}), PolyError);
}

TEST_CASE("division") {
  CHECK(divide_exact(P("t^2 + t^-1"), P("t + 1")) == P("t - 1 + t^-1"));
  const DivResult r = divide(P("t^2 + 1"), P("t + 1"));
  CHECK_FALSE(r.remainder.is_zero());
  CHECK(r.quotient * P("t + 1") + r.remainder == P("t^2 + 1"));
  CHECK_FALSE(divide_exact(P("t + 2"), P("2*t + 1")).has_value());
}

TEST_CASE("text format round trip") {
  for (const char* s : {"t^2 - 3*t + 5 - 3*t^-1 + t^-2", "t^{1/2} - t^{-1/2}", "0", "-7", "-t^{3/2} + 2*t"}) {
    CHECK(to_string(parse_poly1(s)) == s);
  }
  const HalfLaurentN p = parse_polyN("v^-1*z^-1 - v*z^-1 + 2*v^{1/2}");
  CHECK(to_string(parse_polyN(to_string(p), p.vars())) == to_string(p));
  CHECK_THROWS_AS(parse_poly1("t^"), PolyError);
  CHECK_THROWS_AS(parse_poly1("x + 1"), PolyError);
  CHECK_THROWS_AS(parse_poly1("t^{1/3}"), PolyError);
}

TEST_CASE("variable-list mismatch is an error") {
  const HalfLaurentN a = parse_polyN("x + y", {"x", "y"});
  const HalfLaurentN b = parse_polyN("x + y", {"y", "x"});
  CHECK_THROWS_AS(a + b, PolyError);
  CHECK_THROWS_AS(a * b, PolyError);
}

TEST_CASE("property: ring axioms and length inequalities") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = testing::random_poly1(rng, 6, 6, 5, true);
    const auto b = testing::random_poly1(rng, 6, 6, 5, true);
    const auto c = testing::random_poly1(rng, 6, 6, 5, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(length(a * b) <= length(a) * length(b));
    CHECK(length(a + b) <= length(a) + length(b));
    CHECK(parse_poly1(to_string(a)) == a);
  }
  const std::vector<std::string> vars{"u", "w"};
  for (int i = 0; i < 100; ++i) {
    const auto a = testing::random_polyN(rng, vars);
    const auto b = testing::random_polyN(rng, vars);
    const auto c = testing::random_polyN(rng, vars);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(parse_polyN(to_string(a), vars) == a);
  }
}

TEST_CASE("property: unit normalization and units equivalence") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> shift(-9, 9);
  for (int i = 0; i < 200; ++i) {
    auto p = testing::random_poly1(rng, 6, 6, 5, true);
    if (p.is_zero()) continue;
    const auto u = unit_normalize(p);
    HalfLaurent1 q = p.shifted(shift(rng));
    if (i % 2) q = -q;
    CHECK(unit_normalize(q).poly == u.poly);
    CHECK(unit_normalize(u.poly).poly == u.poly);  // idempotent
    HalfLaurent1 back = u.poly.shifted(u.unit_doubled_shift) * BigInt(u.unit_sign);
    CHECK(back == p);
    // equivalence relation
    CHECK(eq_up_to_units(p, p));
    CHECK(eq_up_to_units(p, q) == eq_up_to_units(q, p));
    HalfLaurent1 r = q.shifted(shift(rng));
    CHECK((eq_up_to_units(p, q) && eq_up_to_units(q, r)) <= eq_up_to_units(p, r));
  }
}

TEST_CASE("property: monomial substitution obeys the grouped length bound") {
  std::mt19937_64 rng(13);
  const std::vector<std::string> vars{"x", "y1", "y2", "y3"};
  std::uniform_int_distribution<int> qd(-50, 50);
  for (int i = 0; i < 50; ++i) {
    const auto f = testing::random_polyN(rng, vars, 10);
    BigInt bound = 0;
    for (const auto& [tail, g] : group_by_tail(f)) bound += length(g);
    for (int k = 0; k < 20; ++k) {
      const std::vector<long long> q{qd(rng), qd(rng), qd(rng)};
      CHECK(length(substitute_monomials(f, q)) <= bound);
    }
  }
}
