#include "km/fixtures.hpp"

#include "km/mahler.hpp"
#include "km/quadrature.hpp"
#include "km/spantree.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace km {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, '\t')) out.push_back(cur);
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw FixtureError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

// Lines of a data file with comments and blanks removed.
std::string payload_text(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    out += line + "\n";
  }
  return out;
}

struct IndexEntry {
  FixtureKind kind;
  std::string file;
  std::string note;
};

FixtureKind parse_kind(const std::string& s) {
  static const std::map<std::string, FixtureKind> names{{"diagram", FixtureKind::diagram},
                                                        {"wiring", FixtureKind::wiring},
                                                        {"tangle", FixtureKind::tangle},
                                                        {"poly", FixtureKind::poly},
                                                        {"bivariate", FixtureKind::bivariate}};
  const auto it = names.find(s);
  if (it == names.end()) throw FixtureError("unknown fixture kind '" + s + "'");
  return it->second;
}

std::vector<std::pair<std::string, IndexEntry>> read_index(const std::string& dir) {
  const std::filesystem::path p = std::filesystem::path(dir) / "index.tsv";
  std::istringstream in(read_file(p));
  std::vector<std::pair<std::string, IndexEntry>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty() || line[0] == '#') continue;
    const auto f = split_tabs(line);
    if (f.size() < 3) throw FixtureError(p.string() + ":" + std::to_string(lineno) + ": expected id, kind, file");
    out.push_back({f[0], {parse_kind(f[1]), f[2], f.size() > 3 ? f[3] : ""}});
  }
  return out;
}

std::vector<Expected> read_expected(const std::string& dir, const std::string& id) {
  const std::filesystem::path p = std::filesystem::path(dir) / "expected.tsv";
  std::istringstream in(read_file(p));
  std::vector<Expected> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty() || line[0] == '#') continue;
    const auto f = split_tabs(line);
    if (f.size() < 4) throw FixtureError(p.string() + ":" + std::to_string(lineno) + ": expected id, key, value, source");
    if (f[0] != id) continue;
    const std::string& src = f[3];
    if (src != "published" && src != "trivial" && src != "table" && src.rfind("derived:", 0) != 0)
      throw FixtureError(p.string() + ":" + std::to_string(lineno) + ": unknown source '" + src + "'");
    Expected e{f[1], f[2], src, 0.0};
    if (f.size() > 4 && !trim(f[4]).empty()) e.tol = std::stod(f[4]);
    out.push_back(std::move(e));
  }
  return out;
}

// --- tangle expressions ---

class TangleParser {
 public:
  explicit TangleParser(std::string_view s) : s_(s) {}

  Tangle parse() {
    Tangle t = sum();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  Tangle sum() {
    Tangle t = product();
    while (eat('+')) t = t + product();
    return t;
  }
  Tangle product() {
    Tangle t = atom();
    while (eat('*')) t = t * atom();
    return t;
  }
  Tangle atom() {
    if (eat('(')) {
      Tangle t = sum();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    const std::string w = word();
    if (w == "zero") return Tangle::zero();
    if (w == "infinity") return Tangle::infinity();
    if (w == "s1") return basis_s1();
    if (w == "s2") return basis_s2();
    if (w == "integer" || w == "vertical" || w == "crossing") {
      if (!eat('(')) fail("expected '('");
      const int k = number();
      if (!eat(')')) fail("expected ')'");
      if (w == "integer") return Tangle::integer(k);
      if (w == "vertical") return Tangle::vertical(k);
      if (k != 1 && k != -1) fail("crossing type must be +1 or -1");
      return Tangle::crossing(k);
    }
    fail("unknown tangle '" + w + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  std::string word() {
    skip();
    const std::size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (b == i_) fail("expected a name");
    return std::string(s_.substr(b, i_ - b));
  }
  int number() {
    skip();
    const std::size_t b = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_ || !std::isdigit(static_cast<unsigned char>(s_[i_ - 1]))) fail("expected an integer");
    return std::stoi(std::string(s_.substr(b, i_ - b)));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw FixtureError("tangle expression at " + std::to_string(i_) + ": " + why);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

// --- replay helpers ---

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool same_up_to_units(const HalfLaurent1& a, const HalfLaurent1& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return unit_normalize(a).poly == unit_normalize(b).poly;
}

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(10);
  out << x;
  return out.str();
}

std::vector<int> parse_q(const std::string& s) {
  std::vector<int> q;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    q.push_back(tok == "inf" ? q_infinity : std::stoi(tok));
  }
  return q;
}

Check numeric(const Fixture& f, const Expected& e, double actual) {
  const double want = std::stod(e.value);
  return {f.id, e.key, e.value, fmt(actual), e.source, std::fabs(actual - want) <= e.tol};
}

Check exact(const Fixture& f, const Expected& e, const std::string& actual) {
  return {f.id, e.key, e.value, actual, e.source, trim(e.value) == actual};
}

Check poly_check(const Fixture& f, const Expected& e, const HalfLaurent1& actual, bool units) {
  const HalfLaurent1 want = parse_poly1(e.value);
  const bool ok = units ? same_up_to_units(want, actual) : want == actual;
  return {f.id, e.key, e.value, to_string(actual), e.source, ok};
}

Check diagram_check(const Fixture& f, const Expected& e, const DiagramCode& d, const SkeinOptions& opt) {
  const std::string& k = e.key;
  if (k == "alexander") return poly_check(f, e, alexander(d, opt), true);
  if (k == "jones") return poly_check(f, e, jones(d, opt), false);
  if (k == "homflypt") {
    const HalfLaurentN p = homflypt(d, opt);
    return {f.id, k, e.value, to_string(p), e.source, parse_polyN(e.value, vz_vars()) == p};
  }
  if (k == "components") return exact(f, e, std::to_string(d.component_count()));
  if (k == "crossings") return exact(f, e, std::to_string(d.crossing_count()));
  if (k == "alternating") return exact(f, e, yes_no(is_alternating(d)));
  if (k == "special") return exact(f, e, yes_no(is_special(d)));
  if (k == "twist_number") return exact(f, e, std::to_string(twist_number(d)));
  if (k == "writhe") return exact(f, e, std::to_string(writhe(d)));
  if (k == "murasugi_factors") {
    int n = 0;
    for (const DiagramCode& m : murasugi_factors(d)) n += m.crossing_count() > 0;
    return exact(f, e, std::to_string(n));
  }
  if (k == "tree_polynomial") return poly_check(f, e, alexander_via_trees(d), true);
  throw FixtureError(f.id + ": unknown key '" + k + "' for a diagram");
}

}  // namespace

std::string to_string(FixtureKind k) {
  switch (k) {
    case FixtureKind::diagram: return "diagram";
    case FixtureKind::wiring: return "wiring";
    case FixtureKind::tangle: return "tangle";
    case FixtureKind::poly: return "poly";
    case FixtureKind::bivariate: return "bivariate";
  }
  return "?";
}

const Expected* Fixture::find(const std::string& key) const {
  for (const Expected& e : expected)
    if (e.key == key) return &e;
  return nullptr;
}

std::string corpus_dir() {
  if (const char* env = std::getenv("KNOTMAHLER_CORPUS"); env && *env) return env;
  return KM_CORPUS_DIR;
}

std::vector<std::string> fixture_ids(const std::string& dir) {
  std::vector<std::string> ids;
  for (const auto& [id, entry] : read_index(dir)) ids.push_back(id);
  return ids;
}

Fixture load(const std::string& id, const std::string& dir) {
  for (const auto& [fid, entry] : read_index(dir)) {
    if (fid != id) continue;
    Fixture f;
    f.id = id;
    f.kind = entry.kind;
    f.file = entry.file;
    f.note = entry.note;
    const std::string text = read_file(std::filesystem::path(dir) / entry.file);
    try {
      switch (entry.kind) {
        case FixtureKind::diagram: f.diagram = parse_diagram(text); break;
        case FixtureKind::wiring: f.wiring = parse_wiring(text); break;
        case FixtureKind::tangle: f.tangle = parse_tangle(payload_text(text)); break;
        case FixtureKind::poly: f.poly = parse_poly1(payload_text(text)); break;
        case FixtureKind::bivariate: f.bivariate = parse_polyN(payload_text(text), {"x", "z"}); break;
      }
    } catch (const FixtureError&) {
      throw;
    } catch (const std::exception& ex) {
      throw FixtureError(id + ": " + entry.file + ": " + ex.what());
    }
    f.expected = read_expected(dir, id);
    return f;
  }
  throw FixtureError("unknown fixture '" + id + "'");
}

std::vector<Fixture> load_all(const std::string& dir) {
  std::vector<Fixture> out;
  for (const std::string& id : fixture_ids(dir)) out.push_back(load(id, dir));
  return out;
}

Tangle parse_tangle(std::string_view expr) { return TangleParser(expr).parse(); }

std::vector<Check> replay(const Fixture& f, const SkeinOptions& opt) {
  std::vector<Check> out;
  for (const Expected& e : f.expected) {
    try {
      switch (f.kind) {
        case FixtureKind::diagram: out.push_back(diagram_check(f, e, *f.diagram, opt)); break;
        case FixtureKind::wiring: {
          const WiringDiagram& w = *f.wiring;
          if (e.key == "order") {
            out.push_back(exact(f, e, std::to_string(w.order())));
            break;
          }
          if (e.key == "kinds") {
            std::string kinds;
            for (const TwistSite& s : w.sites()) kinds += (kinds.empty() ? "" : ",") + to_string(s.kind);
            out.push_back(exact(f, e, kinds));
            break;
          }
          const auto at = e.key.find('@');
          if (at == std::string::npos) throw FixtureError(f.id + ": unknown key '" + e.key + "' for a wiring");
          Expected inner = e;
          inner.key = e.key.substr(0, at);
          Check c = diagram_check(f, inner, realize(w, parse_q(e.key.substr(at + 1))), opt);
          c.key = e.key;
          out.push_back(c);
          break;
        }
        case FixtureKind::tangle: {
          if (e.key != "tangle_coeffs") throw FixtureError(f.id + ": unknown key '" + e.key + "' for a tangle");
          const auto semi = e.value.find(';');
          if (semi == std::string::npos) throw FixtureError(f.id + ": tangle_coeffs value needs 'f ; g'");
          const TangleCoeffs c = tangle_coeffs_2strand(*f.tangle, opt);
          const bool ok = parse_poly1(e.value.substr(0, semi)) == c.f && parse_poly1(e.value.substr(semi + 1)) == c.g;
          out.push_back({f.id, e.key, e.value, to_string(c.f) + " ; " + to_string(c.g), e.source, ok});
          break;
        }
        case FixtureKind::poly: {
          if (e.key == "mahler") {
            out.push_back(numeric(f, e, mahler_measure(f.poly).mahler));
          } else if (e.key == "euclidean_mahler") {
            out.push_back(numeric(f, e, mahler_measure(f.poly).euclidean_mahler));
          } else if (e.key == "roots_outside") {
            int n = 0;
            for (const Complex& r : roots(f.poly).roots) n += std::abs(r) > 1.0 + 1e-9;
            out.push_back(exact(f, e, std::to_string(n)));
          } else if (e.key == "cyclotomic") {
            out.push_back(exact(f, e, yes_no(is_cyclotomic_product(f.poly))));
          } else {
            throw FixtureError(f.id + ": unknown key '" + e.key + "' for a polynomial");
          }
          break;
        }
        case FixtureKind::bivariate: {
          if (e.key == "linear_z_mahler") {
            HalfLaurent1 a, b;
            for (const auto& [ex, c] : f.bivariate.terms()) {
              if (ex[1] == 0) a.add_term(ex[0], c);
              else if (ex[1] == 2) b.add_term(ex[0], c);
              else throw FixtureError(f.id + ": linear_z_mahler needs a polynomial linear in z");
            }
            out.push_back(numeric(f, e, mahler_linear_z(a, b).value));
          } else if (e.key == "torus_mahler") {
            out.push_back(numeric(f, e, mahler_torus_2var(f.bivariate, 5e-4).value));
          } else {
            throw FixtureError(f.id + ": unknown key '" + e.key + "' for a bivariate polynomial");
          }
          break;
        }
      }
    } catch (const FixtureError&) {
      throw;
    } catch (const std::exception& ex) {
      out.push_back({f.id, e.key, e.value, std::string("error: ") + ex.what(), e.source, false});
    }
  }
  return out;
}

}  // namespace km
