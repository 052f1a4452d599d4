#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superorb/datum.hpp"

namespace superorb {

inline constexpr int kMaxGaloisOrder = 64;

// One intermediate fixed subalgebra, represented symbolically by its
// subgroup H: the fixed points of H sit between the whole theory and the
// fixed points of G, with indices |H| and [G:H].
struct GaloisEntry {
  std::vector<int> subgroup;  // sorted elements of H
  bool contains_sigma = false;  // iff the subalgebra lies in the even part
  long long index_v_over_vh = 1;
  long long index_vh_over_vg = 1;
  bool normal = false;  // iff the subalgebra is a Galois extension
  std::string galois_group;  // description of G/H, empty when not normal
};

// All intermediate subalgebras, one per subgroup, ordered by
// (subgroup size, elements). Throws std::invalid_argument above
// kMaxGaloisOrder.
std::vector<GaloisEntry> galois_lattice(const FiniteGroup& g, int sigma);
std::vector<GaloisEntry> galois_lattice(const TwistedDatum& d);

// ([V : V^H], [V^H : V^G]) = (|H|, [G:H]); throws std::invalid_argument if h
// is not a sorted subgroup of g.
std::pair<long long, long long> indices(const FiniteGroup& g, const std::vector<int>& h);
std::pair<long long, long long> indices(const TwistedDatum& d, const std::vector<int>& h);

// Covering relations of the subgroup lattice as (smaller, larger) index
// pairs into the galois_lattice order.
std::vector<std::pair<int, int>> hasse_edges(const std::vector<GaloisEntry>& entries);

nlohmann::ordered_json galois_report_json(const TwistedDatum& d);
std::string galois_report_table(const TwistedDatum& d);

}  // namespace superorb
