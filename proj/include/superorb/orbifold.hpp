#pragma once

#include <string>
#include <vector>

#include "superorb/datum.hpp"
#include "superorb/projrep.hpp"

namespace superorb {

// Behaviour of the canonical involution on an orbit representative M:
//   J1  not sigma-stable, M and M of sigma pair up to one super module
//   J2  sigma-stable with sigma-hat central in C^a[G_M], M splits in two
//   J3  sigma-stable, sigma-hat not central; the even part has an index-2
//       stabilizer cut out by a(sigma,h) = a(h,sigma)
enum class JClass { J1, J2, J3 };

struct OrbitInfo {
  int rep = 0;                 // least module index of the orbit
  int g = 0;                   // pair index sigma * twist(rep)
  std::vector<int> stabilizer; // plain stabilizer of rep, sorted
  ProjCharTable chars;         // irreducibles of the twisted stabilizer algebra
  JClass j_class = JClass::J2;
  int a = 1;                   // 1 if rep is sigma-stable, else 2
};

// Irreducible fixed-point module label (orbit representative, character).
struct IrredLabel {
  int orbit = 0;        // index into the classify() list
  std::size_t chr = 0;  // character index in that orbit's table
  Rational weight;
  Cyclo qdim;
};

// One orbit representative of the quotient symmetry action on super labels.
struct BarRep {
  int orbit = 0;
  std::string part;  // module id, with _0/_1 for the halves of a stable label
  std::vector<int> stabilizer_preimage;  // subgroup of G over the bar stabilizer
  int index = 1;  // index of the part stabilizer inside the full bar stabilizer
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct GlobalDims {
  Cyclo glob_v;
  Cyclo glob_vg;
  // per twist element: sum of squared quantum dimensions over that sector
  std::vector<std::pair<int, Cyclo>> twisted_sums;  // plain input modules
  std::vector<std::pair<int, Cyclo>> fixed_sums;    // fixed-point irreducibles
};

struct VerlindeResult {
  std::vector<std::vector<std::vector<Rational>>> n;
  bool integral = false;
  std::string witness;  // first failure when not integral
};

struct OrbifoldResult {
  std::vector<OrbitInfo> orbits;
  std::vector<IrredLabel> irreducibles;
  std::vector<BarRep> bar;
  GlobalDims glob;
  std::vector<std::vector<Cyclo>> S;
  std::vector<Cyclo> T;  // diagonal
  std::vector<std::vector<std::vector<long long>>> fusion;  // vacuum sector
  std::vector<CheckResult> checks;
  long long zero_extension_terms = 0;
  std::size_t vacuum_label = 0;  // index into irreducibles
};

// G-orbits of the module labels with their stabilizer character data, sorted
// by orbit representative.
std::vector<OrbitInfo> classify(const TwistedDatum& d);

// Complete list of irreducible fixed-point modules in deterministic order:
// orbits by representative, characters by table index.
std::vector<IrredLabel> irreducibles(const TwistedDatum& d);

// Orbit representatives of the quotient action on super labels; a J2 orbit
// contributes both halves, a J3 orbit one half with an index-2 stabilizer.
std::vector<BarRep> bar_structure(const TwistedDatum& d);

// Quantum dimension of a super module (pair of labels) and of one plain
// label, as ratios of vacuum block entries.
Cyclo qdim_twisted_super(const TwistedDatum& d, int module);
Cyclo qdim_twisted(const TwistedDatum& d, int module);

// Quantum dimension of the fixed-point irreducible (rep, chr):
// [G : G_M] * dim(chr) * qdim of the plain representative.
Cyclo qdim_fixed(const TwistedDatum& d, int rep, std::size_t chr);

// Global dimensions of the input theory and its fixed points, with the
// per-sector sums that certify them.
GlobalDims global_dims(const TwistedDatum& d);

// Full S-matrix of the fixed-point theory over the irreducibles() order.
// Throws std::runtime_error listing every missing commuting-pair block
// before any entry is computed.
std::vector<std::vector<Cyclo>> s_matrix(const TwistedDatum& d);

// Specialization for abelian G: conjugation drops out and the coset sum
// collapses onto a block row sum. Used to cross-check s_matrix. Throws
// std::invalid_argument on a nonabelian group.
std::vector<std::vector<Cyclo>> s_matrix_abelian(const TwistedDatum& d);

// Diagonal T-matrix, exact roots of unity e^{2 pi i (weight - c/24)}.
std::vector<Cyclo> t_matrix(const TwistedDatum& d);

// Fusion multiplicities of the vacuum sector labels as characters of G:
// table[lam][mu][gam] = <lam * mu, gam>.
std::vector<std::vector<std::vector<long long>>> fusion_vacuum(const TwistedDatum& d);

// Verlinde numbers N_{ab}^c = sum_x S_ax S_bx conj(S_cx) / S_vac,x with an
// exact nonnegative-integrality verdict.
VerlindeResult verlinde(const std::vector<std::vector<Cyclo>>& S, std::size_t vacuum);

// The whole pipeline: classification, dimensions, S, T, vacuum fusion and
// every consistency check on the result.
OrbifoldResult compute(const TwistedDatum& d);

// Deterministic report of a computed orbifold.
nlohmann::ordered_json report_json(const OrbifoldResult& r, const TwistedDatum& d);
std::string report_table(const OrbifoldResult& r, const TwistedDatum& d);

}  // namespace superorb
