#include "doctest.h"
#include "km/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

using namespace km;

TEST_CASE("every expected value replays") {
  const auto all = load_all();
  CHECK(all.size() >= 30);
  std::size_t checks = 0;
  for (const Fixture& f : all) {
    CHECK_MESSAGE(!f.expected.empty(), f.id);
    for (const Check& c : replay(f)) {
      CHECK_MESSAGE(c.pass, c.fixture << " " << c.key << ": expected " << c.expected << ", got " << c.actual);
      ++checks;
    }
  }
  CHECK(checks >= 90);
}

TEST_CASE("expected values name known sources") {
  std::set<std::string> ids;
  for (const std::string& id : fixture_ids()) CHECK(ids.insert(id).second);
  for (const Fixture& f : load_all())
    for (const Expected& e : f.expected) {
      const bool known = e.source == "published" || e.source == "trivial" || e.source == "table" ||
                         (e.source.rfind("derived:", 0) == 0 && e.source.size() > 8);
      CHECK_MESSAGE(known, f.id << " " << e.key);
    }
}

TEST_CASE("load examples") {
  const Fixture lehmer = load("lehmer");
  CHECK(lehmer.kind == FixtureKind::poly);
  CHECK(lehmer.poly == parse_poly1("t^10+t^9-t^7-t^6-t^5-t^4-t^3+t+1"));
  const Fixture d1 = load("nonalt:n=1");
  REQUIRE(d1.diagram);
  CHECK(d1.diagram->component_count() == 1);
  const Fixture e51 = load("limit:k=1");
  const std::vector<std::string> xz{"x", "z"};
  const HalfLaurentN want = parse_polyN("x-1", xz) * (parse_polyN("1-x-x^2-x^4", xz) +
                                                     parse_polyN("x^6*z", xz) * parse_polyN("1-x^-1-x^-2-x^-4", xz));
  CHECK(e51.bivariate == want);
  CHECK_THROWS_AS(load("no-such-fixture"), FixtureError);
}

TEST_CASE("tangle expressions") {
  CHECK(parse_tangle("integer(3)").crossing_count() == 3);
  CHECK(parse_tangle("vertical(3) + (integer(2) * vertical(1))").crossing_count() == 6);
  CHECK(parse_tangle(" s2 * s2 ").crossing_count() == 2);
  CHECK(parse_tangle("zero + infinity").crossing_count() == 0);
  CHECK(alexander(numerator(parse_tangle("integer(2) + vertical(2)"))) == parse_poly1("-t+3-t^-1"));
  for (const char* bad : {"", "integer(", "integer(x)", "foo", "integer(2) +", "crossing(2)", "(s1"})
    CHECK_THROWS_AS(parse_tangle(bad), FixtureError);
}

TEST_CASE("corpus override and validation failures") {
  const auto dir = std::filesystem::temp_directory_path() / "km_corpus_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "index.tsv") << "bad\tdiagram\tbad.dgm\tbroken\nworse\tpuzzle\tx\tunknown kind\n";
  std::ofstream(dir / "expected.tsv") << "bad\tcrossings\t1\twho-knows\n";
  std::ofstream(dir / "bad.dgm") << "X1 sign=+ ends=(1,1,2,3) over=0\n";
  CHECK_THROWS_AS(fixture_ids(dir.string()), FixtureError);
  std::ofstream(dir / "index.tsv") << "bad\tdiagram\tbad.dgm\tbroken\n";
  CHECK_THROWS_AS(load("bad", dir.string()), FixtureError);
  std::ofstream(dir / "bad.dgm") << "O1\n";
  CHECK_THROWS_AS(load("bad", dir.string()), FixtureError);  // unknown source
  std::ofstream(dir / "expected.tsv") << "bad\tcrossings\t0\ttrivial\n";
  setenv("KNOTMAHLER_CORPUS", dir.c_str(), 1);
  CHECK(corpus_dir() == dir.string());
  const Fixture f = load("bad");
  CHECK(replay(f).at(0).pass);
  unsetenv("KNOTMAHLER_CORPUS");
  CHECK(corpus_dir() == KM_CORPUS_DIR);
  std::filesystem::remove_all(dir);
}
