// Curated corpus: diagrams, wiring diagrams, tangles and polynomials, each
// with a table of expected values that can be replayed against live
// computation.
//
// The corpus directory holds index.tsv (id, kind, file, note) and
// expected.tsv (id, key, value, source, tolerance).  Sources are
// "published", "trivial", "table" (standard knot tables) or
// "derived:<oracle>".
#pragma once

#include "km/construct.hpp"
#include "km/diagram.hpp"
#include "km/polyring.hpp"
#include "km/skein.hpp"
#include "km/twistfam.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace km {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FixtureKind { diagram, wiring, tangle, poly, bivariate };
std::string to_string(FixtureKind k);

struct Expected {
  std::string key;
  std::string value;
  std::string source;
  double tol = 0.0;  // numeric keys only
};

struct Fixture {
  std::string id;
  FixtureKind kind = FixtureKind::diagram;
  std::string file;
  std::string note;
  std::optional<DiagramCode> diagram;
  std::optional<WiringDiagram> wiring;
  std::optional<Tangle> tangle;
  HalfLaurent1 poly;       // in t
  HalfLaurentN bivariate;  // in (x, z)
  std::vector<Expected> expected;

  const Expected* find(const std::string& key) const;
};

/// $KNOTMAHLER_CORPUS if set, else the corpus shipped with the sources.
std::string corpus_dir();
std::vector<std::string> fixture_ids(const std::string& dir = corpus_dir());
/// Throws FixtureError for an unknown id or a payload that fails validation.
Fixture load(const std::string& id, const std::string& dir = corpus_dir());
std::vector<Fixture> load_all(const std::string& dir = corpus_dir());

/// Tangle expressions: integer(k), vertical(k), crossing(+1|-1), zero,
/// infinity, s1, s2, parentheses, `+` (side by side) and `*` (stacked, binds
/// tighter).
Tangle parse_tangle(std::string_view expr);

struct Check {
  std::string fixture;
  std::string key;
  std::string expected;
  std::string actual;
  std::string source;
  bool pass = false;
};

/// Recomputes every expected value of `f`.  Keys by kind:
///   diagram    alexander jones homflypt components crossings alternating special
///              twist_number writhe tree_polynomial murasugi_factors
///   wiring     order kinds, and alexander@q jones@q for q like "3" or "2,inf"
///   tangle     tangle_coeffs ("f ; g")
///   poly       mahler euclidean_mahler roots_outside cyclotomic
///   bivariate  linear_z_mahler torus_mahler
/// Alexander polynomials are compared after unit normalization.
std::vector<Check> replay(const Fixture& f, const SkeinOptions& opt = {});

}  // namespace km
