#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "superorb/cyclo.hpp"
#include "superorb/group.hpp"
#include "superorb/projrep.hpp"
#include "superorb/rational.hpp"

namespace superorb {

// One irreducible twisted module up to isomorphism.
struct ModuleLabel {
  std::string id;
  int twist = 0;  // the module is twist-twisted
  Rational weight{0};
  bool sigma_stable = false;
};

// Orbit {m, m of sigma} of the canonical involution on plain labels, named by
// its least member. stable means the orbit is a single sigma-stable label.
struct SuperLabel {
  int rep = 0;
  bool stable = true;

  friend bool operator==(const SuperLabel& a, const SuperLabel& b) {
    return a.rep == b.rep && a.stable == b.stable;
  }
};

// Stored S-matrix block for one commuting pair (g,h): rows run over the
// sigma h-stable super labels of twist class g, columns over those of
// (h, g^{-1}), both in ascending rep order.
struct SBlock {
  int g = 0;
  int h = 0;
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<std::vector<Cyclo>> entries;
};

// The twisted modular datum of (V, G): group with canonical involution,
// module labels, the right G-action on them, projective stabilizer cocycles,
// per-character lowest weights and the known S-matrix blocks. Immutable and
// fully validated after construction.
class TwistedDatum {
 public:
  static TwistedDatum load(const std::string& path);
  static TwistedDatum from_json(const nlohmann::ordered_json& doc);
  nlohmann::ordered_json to_json() const;
  void save(const std::string& path) const;

  const FiniteGroup& group() const { return group_; }
  int sigma() const { return sigma_; }
  const Rational& central_charge() const { return central_charge_; }
  const std::vector<ModuleLabel>& modules() const { return modules_; }
  int module_index(const std::string& id) const;  // throws on unknown id
  int vacuum() const { return vacuum_; }

  int act(int m, int k) const { return action_[m][k]; }
  int super_partner(int m) const { return action_[m][sigma_]; }
  int super_rep(int m) const { return std::min(m, super_partner(m)); }
  std::vector<int> stabilizer(int m) const;        // sorted
  std::vector<int> super_stabilizer(int m) const;  // stabilizer + sigma coset

  // G-orbits on plain labels, each sorted, ordered by least member
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  int orbit_rep(int m) const { return orbit_rep_[m]; }

  const Cocycle& cocycle_of(int rep) const;          // orbit representative
  const ProjCharTable& char_table_of(int rep) const; // irreducibles of C^a[G_M]
  const Rational& char_weight(int rep, std::size_t chr) const;

  // sigma g-twisted super labels M with M of sigma h isomorphic to M,
  // ascending rep order
  std::vector<SuperLabel> super_set(int g, int h) const;

  struct BlockView {
    std::vector<int> rows;  // super reps
    std::vector<int> cols;
    std::vector<std::vector<Cyclo>> entries;
  };
  // the block for (g,h), stored directly or transported from a stored
  // conjugate pair along the least conjugator; throws if unreachable
  BlockView sblock(int g, int h) const;
  bool sblock_reachable(int g, int h) const;
  const std::map<std::pair<int, int>, SBlock>& stored_blocks() const {
    return sblocks_;
  }

  // modular count identities on the shipped data; empty means all pass
  std::vector<std::string> count_report() const;

 private:
  TwistedDatum() : group_(cyclic_group(1)) {}
  void validate_and_finish();

  FiniteGroup group_;
  int sigma_ = 0;
  Rational central_charge_{0};
  std::vector<ModuleLabel> modules_;
  std::vector<std::vector<int>> action_;
  std::map<int, Cocycle> cocycles_;
  std::map<int, ProjCharTable> tables_;
  std::map<std::pair<int, std::size_t>, Rational> char_weights_;
  std::map<std::pair<int, int>, SBlock> sblocks_;

  int vacuum_ = 0;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_rep_;
};

}  // namespace superorb
