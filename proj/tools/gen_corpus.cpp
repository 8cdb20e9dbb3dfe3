// Regenerates the diagram, wiring and tangle files of the corpus from their
// tangle constructions.  expected.tsv and the polynomial files are curated
// by hand and left alone.
#include "km/construct.hpp"
#include "km/fixtures.hpp"
#include "km/skein.hpp"
#include "km/twistfam.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace km;
using T = Tangle;

namespace {

struct Entry {
  std::string id, kind, file, note;
};

std::filesystem::path out_dir;
std::vector<Entry> entries;

void write(const std::string& file, const std::string& text) {
  std::ofstream(out_dir / file) << text;
}

void diagram(const std::string& id, const std::string& file, const std::string& note, const std::string& how,
             const DiagramCode& d) {
  write(file, "# " + note + "\n# " + how + "\n" + print_diagram(d));
  entries.push_back({id, "diagram", file, note});
}

void wiring(const std::string& id, const std::string& file, const std::string& note, const std::string& how,
            const WiringDiagram& w) {
  write(file, "# " + note + "\n# " + how + "\n" + print_wiring(w));
  entries.push_back({id, "wiring", file, note});
}

void plain(const std::string& id, const std::string& kind, const std::string& file, const std::string& note) {
  entries.push_back({id, kind, file, note});
}

DiagramCode alternating_sum(const DiagramCode& a, const DiagramCode& b) {
  for (const Crossing& xa : a.crossings())
    for (const Crossing& xb : b.crossings())
      for (int ea : xa.ends)
        for (int eb : xb.ends) {
          const DiagramCode s = connected_sum(a, ea, b, eb);
          if (is_alternating(s)) return s;
        }
  throw std::runtime_error("no alternating connected sum");
}

int nest_axis(const DiagramCode& d, int c) {
  const Crossing& x = d.crossings()[c];
  for (int p = 0; p < 4; ++p)
    if (x.incoming(p) && x.incoming((p + 1) % 4)) return (p + 1) % 4;
  throw std::runtime_error("crossing without consecutive incoming ends");
}

}  // namespace

int main(int argc, char** argv) {
  out_dir = argc > 1 ? argv[1] : KM_CORPUS_DIR;
  std::filesystem::create_directories(out_dir);

  // standard diagrams
  diagram("unknot", "unknot.dgm", "crossing-free unknot", "O1", parse_diagram("O1\n"));
  diagram("unknot-kink", "unknot-kink.dgm", "one-crossing unknot", "numerator(integer(1))", numerator(T::integer(1)));
  diagram("unlink2", "unlink2.dgm", "two-component unlink", "O1 O2", parse_diagram("O1\nO2\n"));
  diagram("unlink2-r2", "unlink2-r2.dgm", "two-component unlink with a Reidemeister II pair",
          "numerator(integer(1) + integer(-1))", numerator(T::integer(1) + T::integer(-1)));
  diagram("hopf", "hopf.dgm", "negative Hopf link", "numerator(integer(2))", numerator(T::integer(2)));
  const DiagramCode tref = numerator(T::integer(3));
  diagram("trefoil", "trefoil.dgm", "left-handed trefoil", "numerator(integer(3))", tref);
  diagram("trefoil-right", "trefoil-right.dgm", "right-handed trefoil", "mirror of numerator(integer(3))",
          mirror(tref));
  diagram("figure-eight", "figure-eight.dgm", "figure-eight knot", "numerator(integer(2) + vertical(2))",
          numerator(T::integer(2) + T::vertical(2)));
  diagram("torus-2-4", "torus-2-4.dgm", "(2,4) torus link, parallel strands", "numerator(integer(4))",
          numerator(T::integer(4)));
  diagram("granny", "granny.dgm", "granny knot, alternating connected sum of two left-handed trefoils",
          "trefoil # trefoil", alternating_sum(tref, tref));
  diagram("square", "square.dgm", "square knot, alternating connected sum of a trefoil and its mirror",
          "trefoil # mirror(trefoil)", alternating_sum(tref, mirror(tref)));
  diagram("pretzel-3-3-3", "pretzel-3-3-3.dgm", "pretzel knot P(-3,-3,-3)",
          "numerator(vertical(3) + vertical(3) + vertical(3))",
          numerator(T::vertical(3) + T::vertical(3) + T::vertical(3)));
  diagram("pretzel-2-3-3", "pretzel-2-3-3.dgm", "pretzel knot with bands of 2, 3 and 3 half-twists",
          "numerator(vertical(2) + vertical(3) + vertical(3))",
          numerator(T::vertical(2) + T::vertical(3) + T::vertical(3)));

  // non-alternating family with n half-twists in the upper twist region
  for (int n = 1; n <= 7; n += 2) {
    const std::string k = std::to_string(n);
    diagram("nonalt:n=" + k, "nonalt-n" + k + ".dgm",
            "non-alternating diagram D_n, n = " + k + " half-twists in the upper region",
            "numerator(vertical(-2) + vertical(3) + (integer(2) * vertical(-" + k + ")))",
            numerator(T::vertical(-2) + T::vertical(3) + (T::integer(2) * T::vertical(-n))));
  }

  // iterated tangle family: D_1 the trefoil, D_{n+1} replaces a crossing of the newest T by T
  const std::string texpr = "vertical(3) + (integer(2) * vertical(1))";
  const T tang = parse_tangle(texpr);
  write("iterated-T.tangle", "# tangle T with skein coefficients (0, (t-1+t^-1)^2)\n" + texpr + "\n");
  plain("iterated:T", "tangle", "iterated-T.tangle", "tangle T of the iterated family");
  write("iterated-S2.tangle", "# basis tangle S2, one positive crossing\ns2\n");
  plain("iterated:S2", "tangle", "iterated-S2.tangle", "basis tangle S2");
  DiagramCode d = closure_with(basis_s2(), basis_s2(2) * basis_s2(3));
  diagram("iterated:n=1", "iterated-n1.dgm", "iterated family D_1, a trefoil", "D(S2 * S2 * S2)", d);
  d = closure_with(tang, basis_s2(1) * basis_s2(2));
  diagram("iterated:n=2", "iterated-n2.dgm", "iterated family D_2, the knot 8_10", "D(T * S2 * S2)", d);
  {
    int idx = -1, maxid = 0;
    for (const Crossing& x : d.crossings()) maxid = std::max(maxid, x.id);
    for (int c = 0; c < d.crossing_count(); ++c)
      if (d.crossings()[c].id > maxid - 6 && d.crossings()[c].sign > 0) {
        idx = c;
        break;
      }
    d = insert_at_crossing(d, idx, nest_axis(d, idx), tang.oriented_downward());
  }
  diagram("iterated:n=3", "iterated-n3.dgm", "iterated family D_3", "D_2 with a positive crossing of T replaced by T", d);

  // wiring diagrams
  wiring("wire:trefoil-par", "trefoil-par.wir", "two parallel strands closed up; q = 3 gives the trefoil",
         "numerator(integer(1)), parallel site at its crossing",
         WiringDiagram(numerator(T::integer(1)), {{"a", SiteKind::parallel, true, 1, 0, 0}}));
  wiring("wire:hopf-apar", "hopf-apar.wir", "anti-parallel twists between two unlinked circles; q = 2 gives a Hopf link",
         "numerator(integer(1) + integer(-1)), arc site between arcs 1 and 2",
         WiringDiagram(numerator(T::integer(1) + T::integer(-1)), {{"a", SiteKind::apar_even, false, 0, 1, 2}}));
  wiring("wire:pretzel-odd", "pretzel-odd.wir", "three-band pretzel P(q1,q2,q3), q odd",
         "numerator(vertical(1) + vertical(1) + vertical(1)), one site per band",
         WiringDiagram(numerator(T::vertical(1) + T::vertical(1) + T::vertical(1)),
                       {{"a", SiteKind::apar_odd, true, 1, 0, 0},
                        {"b", SiteKind::apar_odd, true, 2, 0, 0},
                        {"c", SiteKind::apar_odd, true, 3, 0, 0}}));
  wiring("wire:pretzel-2-odd-odd", "pretzel-2-odd-odd.wir", "pretzel knots with bands of 2, q1 and q2 half-twists",
         "numerator(vertical(2) + vertical(1) + vertical(1)), parallel sites on the odd bands",
         WiringDiagram(numerator(T::vertical(2) + T::vertical(1) + T::vertical(1)),
                       {{"k", SiteKind::parallel, true, 3, 0, 0}, {"l", SiteKind::parallel, true, 4, 0, 0}}));
  const DiagramCode d1 = numerator(T::vertical(-2) + T::vertical(3) + (T::integer(2) * T::vertical(-1)));
  wiring("wire:nonalt", "nonalt.wir", "non-alternating family D_n, n half-twists in the upper region",
         "D_1 with an anti-parallel site at its upper crossing",
         WiringDiagram(d1, {{"n", SiteKind::apar_odd, true, 8, 0, 0}}));
  wiring("wire:figure-eight", "figure-eight.wir", "figure-eight knot with a site in each twist region",
         "numerator(integer(2) + vertical(2)), sites at crossings 1 and 3",
         WiringDiagram(numerator(T::integer(2) + T::vertical(2)),
                       {{"h", SiteKind::parallel, true, 1, 0, 0}, {"v", SiteKind::apar_odd, true, 3, 0, 0}}));

  // hand-curated payloads
  plain("lehmer", "poly", "lehmer.poly", "Lehmer's polynomial");
  for (int k = 1; k <= 4; ++k)
    plain("limit:k=" + std::to_string(k), "bivariate", "limit-k" + std::to_string(k) + ".poly",
          "two-variable polynomial of the limit link with 2 and 2k+1 half-twists, k = " + std::to_string(k));

  std::ofstream idx(out_dir / "index.tsv");
  idx << "# id\tkind\tfile\tnote\n";
  for (const Entry& e : entries) idx << e.id << '\t' << e.kind << '\t' << e.file << '\t' << e.note << '\n';
  std::cout << entries.size() << " fixtures written to " << out_dir.string() << "\n";
}
