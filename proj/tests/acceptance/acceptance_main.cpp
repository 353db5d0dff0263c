// One PASS/FAIL line per acceptance criterion. Exact arithmetic throughout;
// nothing is compared with a tolerance.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "cochain/commands.hpp"
#include "cochain/cone.hpp"
#include "cochain/random.hpp"
#include "cochain/roof.hpp"
#include "oracles.hpp"
#include "process.hpp"

namespace {

using namespace cochain;
using Clock = std::chrono::steady_clock;

const Field F2 = Field::prime(2);
const Field F5 = Field::prime(5);

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

CochainComplex random_small(gen::Rng& rng, const Field& field = F5) {
  return gen::random_complex_in(field, -3, 3, 4, rng);
}

// 1. Cone well-formedness.
Outcome cone_well_formed() {
  gen::Rng rng(1001);
  for (int t = 0; t < 500; ++t) {
    const CochainComplex a = random_small(rng), b = random_small(rng);
    const ChainMap f = gen::random_chain_map(a, b, rng);
    const MappingCone mc = mapping_cone(f);
    if (!validate_complex(mc.complex).ok) return fail("cone failed validation at trial " + std::to_string(t));
    for (int i = -5; i <= 4; ++i) {
      if (mc.complex.dim(i) != a.dim(i + 1) + b.dim(i)) return fail("dims wrong at trial " + std::to_string(t));
    }
  }
  return {true, "500 cones"};
}

// 2. Homotopy invariance of cohomology.
Outcome homotopy_invariance() {
  gen::Rng rng(1002);
  for (int t = 0; t < 300; ++t) {
    const CochainComplex a = random_small(rng), b = random_small(rng);
    const ChainMap f = gen::random_chain_map(a, b, rng);
    const ChainMap g = perturb_by_homotopy(f, gen::random_homotopy(a, b, rng));
    for (int i = -3; i <= 3; ++i) {
      if (!(induced_cohomology_map(f, i) == induced_cohomology_map(g, i))) {
        return fail("induced maps differ at trial " + std::to_string(t) + ", degree " + std::to_string(i));
      }
    }
  }
  return {true, "300 pairs"};
}

// 3. Qis iff acyclic cone.
Outcome qis_iff_acyclic_cone() {
  gen::Rng rng(1003);
  int qis = 0, other = 0;
  for (int t = 0; t < 200; ++t) {
    ChainMap f = gen::random_quasi_iso(F5, -3, 3, 4, rng);
    if (t % 2 == 1) {
      const CochainComplex a = random_small(rng), b = random_small(rng);
      f = gen::random_chain_map(a, b, rng);
    }
    const bool q = is_quasi_iso(f);
    if (t % 2 == 0 && !q) return fail("constructed quasi-isomorphism rejected at trial " + std::to_string(t));
    if (q != is_acyclic(mapping_cone(f).complex)) return fail("disagreement at trial " + std::to_string(t));
    (q ? qis : other)++;
  }
  return {true, std::to_string(qis) + " qis, " + std::to_string(other) + " not"};
}

// 4. The flip theorem end to end.
Outcome flip_theorem() {
  gen::Rng rng(1004);
  for (int t = 0; t < 200; ++t) {
    const std::string at = " at trial " + std::to_string(t);
    const ChainMap beta = gen::random_quasi_iso(F5, -3, 3, 4, rng);
    const CochainComplex l = random_small(rng);
    const ChainMap alpha = gen::random_chain_map(l, beta.target(), rng);
    const CochainComplex& m = beta.source();
    const CochainComplex& kbar = beta.target();
    const FlipResult r = flip_cospan(Cospan(alpha, beta));
    const CochainComplex& k = r.k_complex;

    if (!validate_complex(k).ok) return fail("K is not a complex" + at);
    if (!is_quasi_iso(r.gamma2)) return fail("gamma2 not a quasi-isomorphism" + at);
    const ChainMap left = compose_chain_maps(beta, r.gamma1), right = compose_chain_maps(alpha, r.gamma2);
    if (!check_homotopy(left, right, r.witness)) return fail("witness rejected" + at);

    // alpha gamma2 - beta gamma1 = (alpha, beta, 0), and h = (0, 0, -id).
    const ChainMap diff = right - left;
    for (int i = -4; i <= 4; ++i) {
      const std::size_t nl = l.dim(i), nm = m.dim(i), nk = kbar.dim(i - 1);
      const Matrix row = hstack(hstack(alpha.component(i), beta.component(i)), Matrix(F5, kbar.dim(i), nk));
      if (!(diff.component(i) == row)) return fail("intermediate identity fails" + at);
      const Matrix h = hstack(Matrix(F5, nk, nl + nm), -Matrix::identity(F5, nk));
      if (!(r.witness.component(i) == h)) return fail("witness is not (0, 0, -id)" + at);
    }
    for (int i = -4; i <= 4; ++i) {
      if (cohomology(l, i).dim != cohomology(k, i).dim) return fail("dim H(L) != dim H(K)" + at);
    }
    const std::optional<Homotopy> found = find_homotopy(left, right);
    if (!found || !check_homotopy(left, right, *found)) return fail("find_homotopy found no witness" + at);
  }
  return {true, "200 cospans"};
}

// 5. LES exactness.
Outcome les_exact() {
  gen::Rng rng(1005);
  for (int t = 0; t < 200; ++t) {
    const CochainComplex a = random_small(rng), b = random_small(rng);
    const Triangle tri = cone_triangle(gen::random_chain_map(a, b, rng));
    if (!check_les_exact(tri)) return fail("cone triangle not exact at trial " + std::to_string(t));
    if (!check_les_exact(rotate_triangle(tri))) return fail("rotation not exact at trial " + std::to_string(t));
  }
  return {true, "200 triangles and rotations"};
}

// 6. find_homotopy against exhaustive search over F2.
Outcome homotopy_completeness() {
  gen::Rng rng(1006);
  int found = 0, none = 0, t = 0;
  std::size_t max_unknowns = 0;
  while (t < 100) {
    const CochainComplex a = gen::random_complex_in(F2, -2, 2, 3, rng);
    const CochainComplex b = gen::random_complex_in(F2, -2, 2, 3, rng);
    const std::size_t n = oracle::homotopy_unknowns(a, b);
    if (n > 12) continue;
    max_unknowns = std::max(max_unknowns, n);
    ++t;
    const ChainMap f = gen::random_chain_map(a, b, rng);
    const ChainMap g = t % 3 == 0 ? perturb_by_homotopy(f, gen::random_homotopy(a, b, rng))
                                  : gen::random_chain_map(a, b, rng);
    const bool brute = oracle::homotopy_exists_by_enumeration(f, g);
    const std::optional<Homotopy> k = find_homotopy(f, g);
    if (k.has_value() != brute) return fail("disagreement at instance " + std::to_string(t));
    if (k && !check_homotopy(f, g, *k)) return fail("unsound witness at instance " + std::to_string(t));
    (brute ? found : none)++;
  }
  return {true, std::to_string(found) + " homotopic, " + std::to_string(none) + " not, up to " +
                    std::to_string(max_unknowns) + " unknowns"};
}

// 7. Roof functoriality.
Outcome roof_functoriality() {
  gen::Rng rng(1007);
  for (int t = 0; t < 50; ++t) {
    const CochainComplex a = random_small(rng), b = random_small(rng), c = random_small(rng);
    const ChainMap f = gen::random_chain_map(a, b, rng);
    const ChainMap g = gen::random_chain_map(b, c, rng);
    const Roof composite = compose_roofs(lift_map_to_roof(f), lift_map_to_roof(g));
    if (!verify_roof_equivalence(composite, lift_map_to_roof(compose_chain_maps(g, f)),
                                 lift_composition_witness(f, g))) {
      return fail("witness rejected at pair " + std::to_string(t));
    }
  }
  return {true, "50 pairs"};
}

// 8. CLI round trip and exit codes, through the executable.
Outcome cli_round_trip() {
  gen::Rng rng(1008);
  const std::string tool = COCHAIN_CLI_PATH;
  int runs = 0;
  for (int t = 0; t < 10; ++t) {
    const std::string at = " at session " + std::to_string(t);
    Session s(F5);
    const ChainMap beta = gen::random_quasi_iso(F5, -2, 2, 3, rng);
    const CochainComplex l = gen::random_complex_in(F5, -2, 2, 3, rng);
    const CochainComplex c = gen::random_complex_in(F5, -2, 2, 3, rng);
    s.add_object("L", l);
    s.add_object("M", beta.source());
    s.add_object("Kbar", beta.target());
    s.add_object("C", c);
    s.add_map("alpha", "L", "Kbar", gen::random_chain_map(l, beta.target(), rng));
    s.add_map("beta", "M", "Kbar", beta);
    s.add_map("g", "Kbar", "C", gen::random_chain_map(beta.target(), c, rng));
    s.add_map("zeroL", "L", "L", ChainMap::zero(l, l));
    const std::string text = emit_session(s);

    auto constructed = [&](const std::vector<std::string>& args, const std::string& input) -> std::optional<Session> {
      const process::Result r = process::run_tool(tool, input, args);
      ++runs;
      if (r.exit_code != 0) return std::nullopt;
      Session back = parse_session(r.out);
      if (emit_session(back) != r.out) return std::nullopt;
      return back;
    };

    const auto shifted = constructed({"shift", "L", "1"}, text);
    if (!shifted || !(shifted->object("L_shift1") == shift(l, 1))) return fail("shift round trip" + at);

    const auto cone = constructed({"cone", "alpha"}, text);
    const MappingCone mc = mapping_cone(s.map("alpha").map);
    if (!cone || !(cone->object("cone_alpha") == mc.complex) || !(cone->map("cone_alpha_incl").map == mc.inclusion) ||
        !(cone->map("cone_alpha_proj").map == mc.projection)) {
      return fail("cone round trip" + at);
    }

    const auto flip = constructed({"flip", "alpha", "beta"}, text);
    const FlipResult fr = flip_cospan(Cospan(s.map("alpha").map, beta));
    if (!flip || !(flip->object("K") == fr.k_complex) || !(flip->map("gamma2").map == fr.gamma2) ||
        !(flip->map("gamma1").map == fr.gamma1) || !(flip->homotopy("h").homotopy == fr.witness)) {
      return fail("flip round trip" + at);
    }
    const process::Result qis = process::run_tool(tool, emit_session(*flip), {"qis", "gamma2"});
    ++runs;
    if (qis.exit_code != 0) return fail("gamma2 not a quasi-isomorphism through the CLI" + at);

    const auto lifted = constructed({"lift", "alpha"}, text);
    if (!lifted || !(lifted->roof("lift_alpha").roof.numer() == s.map("alpha").map)) return fail("lift round trip" + at);
    const auto lifted2 = constructed({"lift", "g"}, emit_session(*lifted));
    if (!lifted2) return fail("second lift" + at);
    const auto composed = constructed({"compose", "lift_alpha", "lift_g"}, emit_session(*lifted2));
    const Roof expected = compose_roofs(lift_map_to_roof(s.map("alpha").map), lift_map_to_roof(s.map("g").map));
    if (!composed) return fail("compose round trip" + at);
    const Roof& got = composed->roof("compose_lift_alpha_lift_g").roof;
    if (!(got.denom() == expected.denom()) || !(got.numer() == expected.numer())) return fail("compose value" + at);

    // Exit classes: 1 for a false verdict, 2 for input errors.
    const process::Result no = process::run_tool(tool, text, {"qis", "zeroL"});
    const bool l_acyclic = is_acyclic(l);
    if (no.exit_code != (l_acyclic ? 0 : 1)) return fail("qis verdict exit code" + at);
    if (process::run_tool(tool, text, {"qis", "nosuchmap"}).exit_code != 2) return fail("unknown name exit code" + at);
    if (process::run_tool(tool, text.substr(0, text.size() / 2), {"validate"}).exit_code != 2) {
      return fail("syntax error exit code" + at);
    }
    runs += 3;
  }
  return {true, std::to_string(runs) + " tool runs over 10 sessions"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0 = no runtime target
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "cone well-formedness", 5, cone_well_formed},
      {2, "homotopy invariance of cohomology", 0, homotopy_invariance},
      {3, "qis iff acyclic cone", 0, qis_iff_acyclic_cone},
      {4, "flip theorem end to end", 30, flip_theorem},
      {5, "LES exactness", 0, les_exact},
      {6, "find_homotopy completeness over F2", 60, homotopy_completeness},
      {7, "roof functoriality", 0, roof_functoriality},
      {8, "CLI round trip and exit codes", 0, cli_round_trip},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (out.ok && c.budget_s > 0 && secs > c.budget_s) {
      out = fail(out.detail + "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget");
    }
    if (!out.ok) ++failures;
    std::printf("criterion %d: %s  %-36s %7.2f s  (%s)\n", c.id, out.ok ? "PASS" : "FAIL", c.name, secs,
                out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
