#include "superorb/galois.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superorb {

namespace {

// quotient of g by a normal subgroup, cosets indexed by least representative
FiniteGroup quotient(const FiniteGroup& g, const std::vector<int>& h) {
  int n = g.order();
  std::vector<int> coset(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset[static_cast<std::size_t>(a)] != -1) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int t : h) coset[static_cast<std::size_t>(g.mul(t, a))] = idx;
  }
  int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          coset[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(i)],
                                               reps[static_cast<std::size_t>(j)]))];
  return FiniteGroup::from_table_unchecked(std::move(table));
}

// invariant factor peeling: a cyclic subgroup of maximal order is a direct
// summand of a finite abelian group
std::vector<long long> abelian_factors(const FiniteGroup& g) {
  if (g.order() == 1) return {};
  long long e = g.exponent();
  int x = 0;
  while (g.element_order(x) != e) ++x;
  std::vector<long long> out{e};
  for (long long f : abelian_factors(quotient(g, g.generated({x})))) out.push_back(f);
  return out;
}

std::string group_description(const FiniteGroup& g) {
  if (g.order() == 1) return "1";
  if (!g.is_abelian())
    return "nonabelian of order " + std::to_string(g.order());
  std::string out;
  for (long long f : abelian_factors(g)) {
    if (!out.empty()) out += " x ";
    out += "Z" + std::to_string(f);
  }
  return out;
}

}  // namespace

std::vector<GaloisEntry> galois_lattice(const FiniteGroup& g, int sigma) {
  if (g.order() > kMaxGaloisOrder)
    throw std::invalid_argument("subgroup lattice bound exceeded: order " +
                                std::to_string(g.order()));
  std::vector<GaloisEntry> out;
  for (const std::vector<int>& h : g.subgroups()) {
    GaloisEntry e;
    e.contains_sigma = std::binary_search(h.begin(), h.end(), sigma);
    e.index_v_over_vh = static_cast<long long>(h.size());
    e.index_vh_over_vg = g.order() / static_cast<long long>(h.size());
    e.normal = g.is_normal(h);
    if (e.normal) e.galois_group = group_description(quotient(g, h));
    e.subgroup = h;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<GaloisEntry> galois_lattice(const TwistedDatum& d) {
  return galois_lattice(d.group(), d.sigma());
}

std::pair<long long, long long> indices(const FiniteGroup& g, const std::vector<int>& h) {
  if (!g.is_subgroup(h)) throw std::invalid_argument("not a subgroup of the symmetry group");
  return {static_cast<long long>(h.size()), g.order() / static_cast<long long>(h.size())};
}

std::pair<long long, long long> indices(const TwistedDatum& d, const std::vector<int>& h) {
  return indices(d.group(), h);
}

std::vector<std::pair<int, int>> hasse_edges(const std::vector<GaloisEntry>& entries) {
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() &&
           std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (!subset(entries[i].subgroup, entries[j].subgroup)) continue;
      bool covered = false;
      for (std::size_t k = 0; k < entries.size() && !covered; ++k)
        covered = k != i && k != j && subset(entries[i].subgroup, entries[k].subgroup) &&
                  subset(entries[k].subgroup, entries[j].subgroup);
      if (!covered) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return edges;
}

nlohmann::ordered_json galois_report_json(const TwistedDatum& d) {
  auto entries = galois_lattice(d);
  nlohmann::ordered_json j;
  j["group_order"] = d.group().order();
  j["sigma"] = d.sigma();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const GaloisEntry& e : entries)
    list.push_back({{"subgroup", e.subgroup},
                    {"contains_sigma", e.contains_sigma},
                    {"index_v_over_vh", e.index_v_over_vh},
                    {"index_vh_over_vg", e.index_vh_over_vg},
                    {"normal", e.normal},
                    {"galois_group", e.galois_group}});
  j["entries"] = list;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : hasse_edges(entries)) edges.push_back({a, b});
  j["hasse"] = edges;
  return j;
}

std::string galois_report_table(const TwistedDatum& d) {
  auto entries = galois_lattice(d);
  std::ostringstream os;
  os << "intermediate subalgebras (" << entries.size() << " subgroups):\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const GaloisEntry& e = entries[i];
    os << "  H" << i << " = {";
    for (std::size_t k = 0; k < e.subgroup.size(); ++k)
      os << (k ? "," : "") << e.subgroup[k];
    os << "}  [V:V^H] = " << e.index_v_over_vh << "  [V^H:V^G] = " << e.index_vh_over_vg
       << "  sigma " << (e.contains_sigma ? "in" : "out") << "  "
       << (e.normal ? "galois, G/H = " + e.galois_group : "not galois") << "\n";
  }
  os << "inclusions:";
  for (const auto& [a, b] : hasse_edges(entries)) os << " H" << a << "<H" << b;
  os << "\n";
  return os.str();
}

}  // namespace superorb
