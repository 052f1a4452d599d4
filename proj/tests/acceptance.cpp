// End-to-end acceptance checks for the orbifold engine. Each criterion prints
// one PASS/FAIL line; the exit code is the number of failures. Tolerances:
// exact cyclotomic equality unless stated, 1e-8 for the numeric character
// oracle, 1e-4 for the q-series scan at y = 0.02.
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "groups_util.hpp"
#include "superorb/cli.hpp"
#include "superorb/orbifold.hpp"
#include "superorb/qseries.hpp"

using namespace superorb;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::printf("%s  %d. %s%s\n", ok ? "PASS" : "FAIL", n, name.c_str(), note.c_str());
  if (!ok) ++failures;
}

Cyclo sqrt2() { return Cyclo::zeta(8) + Cyclo::zeta(8, 7); }

std::vector<std::vector<Cyclo>> expected_fermion_s() {
  Cyclo h(Rational(1, 2));
  Cyclo hs = Rational(1, 2) * sqrt2();
  return {{h, h, hs}, {h, h, -hs}, {hs, -hs, Cyclo()}};
}

bool check_named(const OrbifoldResult& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.pass;
  return false;
}

// row orthogonality and the degree-square sum, both exact
bool table_orthogonal(const ProjCharTable& t, std::size_t order) {
  Cyclo dsq;
  for (long long d : t.degrees) dsq = dsq + Cyclo(Rational(d) * Rational(d));
  if (!(dsq == Cyclo(Rational(static_cast<long long>(order))))) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i; j < t.size(); ++j) {
      Cyclo dot;
      for (std::size_t p = 0; p < t.elements().size(); ++p)
        dot = dot + t.chars[i][p] * t.chars[j][p].conj();
      Cyclo want = i == j ? Cyclo(Rational(static_cast<long long>(order))) : Cyclo();
      if (!(dot == want)) return false;
    }
  return true;
}

Cocycle klein_nontrivial() {
  std::vector<std::vector<Cyclo>> vals(4, std::vector<Cyclo>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) vals[a][b] = Cyclo(((a % 2) * (b / 2)) % 2 ? -1 : 1);
  return Cocycle({0, 1, 2, 3}, 2, std::move(vals));
}

}  // namespace

int main() {
  TwistedDatum fermion = make_fixture("fermion");
  TwistedDatum lattice = make_fixture("lattice_a1");
  TwistedDatum trivial = make_fixture("fermion_trivial_g");
  OrbifoldResult rf = compute(fermion);
  OrbifoldResult rl = compute(lattice);
  OrbifoldResult rt = compute(trivial);

  criterion(1, "free-fermion end-to-end modular data", [&] {
    std::ostringstream out, err;
    if (run({"fixture", "fermion", "-o", "acceptance_fermion.json"}, out, err) != 0) return false;
    if (run({"compute", "acceptance_fermion.json", "--no-timestamp"}, out, err) != 0) return false;
    if (rf.irreducibles.size() != 3) return false;
    std::multiset<Rational> weights;
    for (const auto& ir : rf.irreducibles) weights.insert(ir.weight);
    if (weights != std::multiset<Rational>{Rational(0), Rational(1, 2), Rational(1, 16)})
      return false;
    std::multiset<Cyclo> qdims;
    for (const auto& ir : rf.irreducibles) qdims.insert(ir.qdim);
    if (qdims != std::multiset<Cyclo>{Cyclo(1), Cyclo(1), sqrt2()}) return false;
    auto expected = expected_fermion_s();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!(rf.S[i][j] == expected[i][j])) return false;
    SBlockFit fit = fermion_orbifold_smatrix();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (std::abs(rf.S[i][j].embed() - fit.entries[i][j]) >= 1e-8) return false;
    return true;
  });

  criterion(2, "global dimension identities on both fixtures", [&] {
    if (!(rf.glob.glob_v == Cyclo(1))) return false;
    if (!(rf.glob.glob_vg == Cyclo(4))) return false;
    for (const OrbifoldResult* r : {&rf, &rl}) {
      const TwistedDatum& d = r == &rf ? fermion : lattice;
      long long n = d.group().order();
      if (!(r->glob.glob_vg == Cyclo(Rational(n * n)) * r->glob.glob_v)) return false;
      for (const auto& [twist, sum] : r->glob.twisted_sums)
        if (!(sum == r->glob.glob_v)) return false;
    }
    // sigma-twisted sector of the fermion: two plain modules of qdim 1/sqrt(2)
    Cyclo half_sq = qdim_twisted(fermion, 1) * qdim_twisted(fermion, 1);
    return Cyclo(2) * half_sq == rf.glob.glob_v;
  });

  criterion(3, "S and T invariants exact on every computed pair", [&] {
    for (const OrbifoldResult* r : {&rf, &rl, &rt})
      for (const char* name : {"s_symmetric", "s_unitary", "s_squared_permutation", "st_cubed",
                               "vacuum_column"})
        if (!check_named(*r, name)) return false;
    return true;
  });

  criterion(4, "fermion Verlinde ring is the Ising ring", [&] {
    VerlindeResult v = verlinde(rf.S, rf.vacuum_label);
    if (!v.integral) return false;
    // labels 0 = vacuum, 1 = fermion parity, 2 = spin
    auto n = [&](int a, int b, int c) { return v.n[a][b][c]; };
    bool ising = n(2, 2, 0) == Rational(1) && n(2, 2, 1) == Rational(1) &&
                 n(2, 2, 2) == Rational(0) && n(2, 1, 2) == Rational(1) &&
                 n(2, 1, 0) == Rational(0) && n(1, 1, 0) == Rational(1) &&
                 n(1, 1, 1) == Rational(0) && n(1, 1, 2) == Rational(0);
    return ising && check_named(rf, "verlinde_integrality") &&
           check_named(rf, "vacuum_fusion_match");
  });

  criterion(5, "lattice sigma-twisted orbit splits as J3 with the brute-force count", [&] {
    int j3 = -1;
    for (std::size_t o = 0; o < rl.orbits.size(); ++o)
      if (rl.orbits[o].j_class == JClass::J3) {
        if (j3 >= 0) return false;
        j3 = static_cast<int>(o);
      }
    if (j3 < 0) return false;
    bool index_two = false;
    for (const auto& b : rl.bar)
      if (b.orbit == j3 && b.index == 2) index_two = true;
    if (!index_two) return false;
    return static_cast<int>(rl.irreducibles.size()) == lattice_even_orbifold_count();
  });

  criterion(6, "projective character tables close exactly", [&] {
    FiniteGroup v4 = groups_util::klein4();
    ProjCharTable twisted = proj_char_table(v4, klein_nontrivial());
    if (twisted.size() != 1 || twisted.degrees[0] != 2) return false;
    if (!table_orthogonal(twisted, 4)) return false;
    std::vector<FiniteGroup> suite;
    for (int n = 1; n <= 6; ++n) suite.push_back(cyclic_group(n));
    suite.push_back(v4);
    suite.push_back(groups_util::symmetric(3));
    suite.push_back(groups_util::dihedral(4));
    suite.push_back(groups_util::quaternion8());
    suite.push_back(groups_util::alternating(4));
    suite.push_back(groups_util::dihedral(6));
    suite.push_back(groups_util::symmetric(4));
    for (const auto& g : suite) {
      std::vector<int> all(g.order());
      std::iota(all.begin(), all.end(), 0);
      if (!table_orthogonal(char_table(g, all), g.order())) return false;
    }
    return true;
  });

  criterion(7, "trivial symmetry group reproduces the input data", [&] {
    for (const auto& c : rt.checks)
      if (!c.pass) return false;
    auto block = trivial.sblock(0, 0);
    std::size_t n = trivial.modules().size();
    if (rt.S.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(rt.S[i][j] == block.entries[i][j])) return false;
    for (std::size_t i = 0; i < n; ++i) {
      Cyclo want = Cyclo::root_of_unity(trivial.modules()[i].weight -
                                        trivial.central_charge() / 24);
      if (!(rt.T[i] == want)) return false;
    }
    return true;
  });

  criterion(8, "abelian specialization equals the general S-matrix", [&] {
    for (const TwistedDatum* d : {&fermion, &lattice}) {
      auto general = s_matrix(*d);
      auto abelian = s_matrix_abelian(*d);
      if (general.size() != abelian.size()) return false;
      for (std::size_t i = 0; i < general.size(); ++i)
        for (std::size_t j = 0; j < general.size(); ++j)
          if (!(general[i][j] == abelian[i][j])) return false;
    }
    return true;
  });

  criterion(9, "q-series scan converges to the exact quantum dimension", [&] {
    std::ostringstream out, err;
    if (run({"qdim-scan", "fermion", "ramond"}, out, err) != 0) return false;
    std::istringstream lines(out.str());
    std::string line, last;
    while (std::getline(lines, line))
      if (!line.empty()) last = line;
    if (last.rfind("0.020000,", 0) != 0) return false;
    double ratio = std::stod(last.substr(9));
    return std::abs(ratio - 0.70711) < 1e-4;
  });

  return failures;
}
