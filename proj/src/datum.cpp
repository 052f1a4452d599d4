#include "superorb/datum.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superorb {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("datum: " + what);
}

int as_int(const ordered_json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    fail(std::string(field) + " missing or not an integer");
  return j[field].get<int>();
}

Rational as_rational(const ordered_json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    fail(std::string(field) + " missing or not a string");
  return parse_rational(j[field].get<std::string>());
}

}  // namespace

int TwistedDatum::module_index(const std::string& id) const {
  for (std::size_t i = 0; i < modules_.size(); ++i)
    if (modules_[i].id == id) return static_cast<int>(i);
  fail("unknown module id '" + id + "'");
}

std::vector<int> TwistedDatum::stabilizer(int m) const {
  std::vector<int> out;
  for (int k = 0; k < group_.order(); ++k)
    if (action_[m][k] == m) out.push_back(k);
  return out;
}

std::vector<int> TwistedDatum::super_stabilizer(int m) const {
  std::set<int> out;
  int partner = super_partner(m);
  for (int k = 0; k < group_.order(); ++k)
    if (action_[m][k] == m || action_[m][k] == partner) out.insert(k);
  return {out.begin(), out.end()};
}

const Cocycle& TwistedDatum::cocycle_of(int rep) const {
  auto it = cocycles_.find(rep);
  if (it == cocycles_.end()) fail("no cocycle for orbit representative " + std::to_string(rep));
  return it->second;
}

const ProjCharTable& TwistedDatum::char_table_of(int rep) const {
  auto it = tables_.find(rep);
  if (it == tables_.end()) fail("no character table for orbit representative " + std::to_string(rep));
  return it->second;
}

const Rational& TwistedDatum::char_weight(int rep, std::size_t chr) const {
  auto it = char_weights_.find({rep, chr});
  if (it == char_weights_.end())
    fail("no weight for (" + std::to_string(rep) + ", " + std::to_string(chr) + ")");
  return it->second;
}

std::vector<SuperLabel> TwistedDatum::super_set(int g, int h) const {
  int twist = group_.mul(sigma_, g);
  int sh = group_.mul(sigma_, h);
  std::vector<SuperLabel> out;
  for (std::size_t m = 0; m < modules_.size(); ++m) {
    int mi = static_cast<int>(m);
    if (modules_[m].twist != twist) continue;
    if (super_rep(mi) != mi) continue;
    int moved = action_[m][sh];
    if (moved == mi || moved == super_partner(mi))
      out.push_back({mi, super_partner(mi) == mi});
  }
  return out;
}

bool TwistedDatum::sblock_reachable(int g, int h) const {
  for (int k = 0; k < group_.order(); ++k)
    if (sblocks_.count({group_.conj(g, k), group_.conj(h, k)})) return true;
  return false;
}

TwistedDatum::BlockView TwistedDatum::sblock(int g, int h) const {
  if (group_.mul(g, h) != group_.mul(h, g)) fail("sblock pair does not commute");
  for (int k = 0; k < group_.order(); ++k) {
    auto it = sblocks_.find({group_.conj(g, k), group_.conj(h, k)});
    if (it == sblocks_.end()) continue;
    const SBlock& src = it->second;
    BlockView view;
    for (const auto& s : super_set(g, h)) view.rows.push_back(s.rep);
    for (const auto& s : super_set(h, group_.inv(g))) view.cols.push_back(s.rep);
    auto src_pos = [&](const std::vector<int>& where, int m) {
      int moved = super_rep(action_[m][k]);
      auto p = std::find(where.begin(), where.end(), moved);
      if (p == where.end()) fail("transport target missing from stored block");
      return static_cast<std::size_t>(p - where.begin());
    };
    view.entries.resize(view.rows.size());
    for (std::size_t r = 0; r < view.rows.size(); ++r) {
      std::size_t sr = src_pos(src.rows, view.rows[r]);
      for (std::size_t c = 0; c < view.cols.size(); ++c)
        view.entries[r].push_back(src.entries[sr][src_pos(src.cols, view.cols[c])]);
    }
    return view;
  }
  fail("no stored block conjugate to (" + std::to_string(g) + ", " + std::to_string(h) + ")");
}

std::vector<std::string> TwistedDatum::count_report() const {
  std::vector<std::string> failures;
  int n = group_.order();
  auto count = [&](int g, int h) { return super_set(g, h).size(); };
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      if (group_.mul(g, h) != group_.mul(h, g)) continue;
      std::size_t base = count(g, h);
      if (count(h, group_.inv(g)) != base)
        failures.push_back("sector count changes under S at (" + std::to_string(g) + ", " +
                           std::to_string(h) + ")");
      if (count(g, group_.mul(g, h)) != base)
        failures.push_back("sector count changes under T at (" + std::to_string(g) + ", " +
                           std::to_string(h) + ")");
    }
  for (int x = 0; x < n; ++x) {
    std::size_t twisted = count(group_.mul(sigma_, x), sigma_);
    std::size_t stable = 0;
    for (std::size_t m = 0; m < modules_.size(); ++m)
      if (modules_[m].twist == 0 && action_[m][x] == static_cast<int>(m)) ++stable;
    if (twisted != stable)
      failures.push_back("twisted module count for element " + std::to_string(x) + " is " +
                         std::to_string(twisted) + ", expected " + std::to_string(stable) +
                         " from stable untwisted modules");
  }
  return failures;
}

void TwistedDatum::validate_and_finish() {
  int n = group_.order();
  if (sigma_ < 0 || sigma_ >= n) fail("sigma out of range");
  if (group_.mul(sigma_, sigma_) != 0) fail("sigma is not an involution or the identity");
  if (!group_.is_central(sigma_)) fail("sigma is not central");

  if (modules_.empty()) fail("no modules");
  std::set<std::string> ids;
  vacuum_ = -1;
  for (std::size_t m = 0; m < modules_.size(); ++m) {
    const auto& mod = modules_[m];
    if (mod.id.empty()) fail("empty module id");
    if (!ids.insert(mod.id).second) fail("duplicate module id '" + mod.id + "'");
    if (mod.twist < 0 || mod.twist >= n) fail("module twist out of range");
    if (mod.twist == 0 && mod.weight == 0) {
      if (vacuum_ >= 0) fail("two vacuum labels");
      vacuum_ = static_cast<int>(m);
    } else if (mod.weight <= 0) {
      fail("module '" + mod.id + "' has non-positive weight");
    }
  }
  if (vacuum_ < 0) fail("no vacuum label");

  if (action_.size() != modules_.size()) fail("action table has wrong number of rows");
  RightAction action(group_, action_);  // validates shape and compatibility
  for (std::size_t m = 0; m < modules_.size(); ++m) {
    for (int k = 0; k < n; ++k) {
      const auto& image = modules_[action_[m][k]];
      if (image.twist != group_.conj(modules_[m].twist, k))
        fail("action is not twist equivariant at module '" + modules_[m].id + "'");
      if (image.weight != modules_[m].weight)
        fail("action changes the weight of module '" + modules_[m].id + "'");
    }
    int mi = static_cast<int>(m);
    if (modules_[m].sigma_stable != (super_partner(mi) == mi))
      fail("sigma_stable flag wrong on module '" + modules_[m].id + "'");
    int st = group_.mul(sigma_, modules_[m].twist);
    if (action_[m][st] != mi)
      fail("stabilizer of module '" + modules_[m].id + "' misses sigma * twist");
  }
  for (int k = 0; k < n; ++k)
    if (action_[vacuum_][k] != vacuum_) fail("action moves the vacuum");

  orbits_ = action.orbits();
  orbit_rep_.assign(modules_.size(), -1);
  for (const auto& orbit : orbits_)
    for (int m : orbit) orbit_rep_[m] = orbit.front();

  for (const auto& orbit : orbits_) {
    int rep = orbit.front();
    auto it = cocycles_.find(rep);
    if (it == cocycles_.end())
      fail("missing cocycle for orbit representative '" + modules_[rep].id + "'");
    const Cocycle& c = it->second;
    c.validate(group_);
    if (c.elements() != stabilizer(rep))
      fail("cocycle subgroup is not the stabilizer of '" + modules_[rep].id + "'");
    if (c.contains(sigma_) && c.at(sigma_, sigma_) != Cyclo(1))
      fail("cocycle of '" + modules_[rep].id + "' is not normalized at (sigma, sigma)");
  }
  for (const auto& [rep, c] : cocycles_)
    if (orbit_rep_[rep] != rep) fail("cocycle attached to a non-representative label");
  if (!cocycles_.at(vacuum_).is_trivial()) fail("vacuum cocycle is not trivial");

  for (const auto& [rep, c] : cocycles_) tables_.emplace(rep, proj_char_table(group_, c));

  for (const auto& [key, w] : char_weights_) {
    auto it = tables_.find(key.first);
    if (it == tables_.end()) fail("character weight attached to a non-representative label");
    if (key.second >= it->second.size()) fail("character weight index out of range");
    bool is_vacuum_trivial =
        key.first == vacuum_ && key.second == trivial_char_index(tables_.at(vacuum_));
    if (is_vacuum_trivial ? !(w == 0) : !(w > 0))
      fail("character weight at (" + std::to_string(key.first) + ", " +
           std::to_string(key.second) + ") out of range");
  }
  for (const auto& [rep, table] : tables_)
    for (std::size_t chr = 0; chr < table.size(); ++chr)
      if (!char_weights_.count({rep, chr}))
        fail("missing character weight for ('" + modules_[rep].id + "', " + std::to_string(chr) +
             ")");

  for (const auto& [pair, block] : sblocks_) {
    auto [g, h] = pair;
    if (group_.mul(g, h) != group_.mul(h, g)) fail("stored block pair does not commute");
    std::vector<int> rows, cols;
    for (const auto& s : super_set(g, h)) rows.push_back(s.rep);
    for (const auto& s : super_set(h, group_.inv(g))) cols.push_back(s.rep);
    if (block.rows != rows || block.cols != cols)
      fail("stored block at (" + std::to_string(g) + ", " + std::to_string(h) +
           ") has wrong row or column labels");
    if (block.entries.size() != rows.size()) fail("stored block has wrong number of rows");
    for (const auto& row : block.entries)
      if (row.size() != cols.size()) fail("stored block has ragged entries");
  }
  // redundant blocks must agree along every conjugation
  for (const auto& [pair, block] : sblocks_) {
    auto [g, h] = pair;
    for (int k = 0; k < n; ++k) {
      auto other = sblocks_.find({group_.conj(g, k), group_.conj(h, k)});
      if (other == sblocks_.end()) continue;
      const SBlock& dst = other->second;
      auto pos = [&](const std::vector<int>& where, int m) {
        int moved = super_rep(action_[m][k]);
        auto p = std::find(where.begin(), where.end(), moved);
        if (p == where.end()) fail("conjugate blocks have mismatched labels");
        return static_cast<std::size_t>(p - where.begin());
      };
      for (std::size_t r = 0; r < block.rows.size(); ++r)
        for (std::size_t c = 0; c < block.cols.size(); ++c)
          if (block.entries[r][c] !=
              dst.entries[pos(dst.rows, block.rows[r])][pos(dst.cols, block.cols[c])])
            fail("conjugate stored blocks disagree between (" + std::to_string(g) + ", " +
                 std::to_string(h) + ") and (" + std::to_string(dst.g) + ", " +
                 std::to_string(dst.h) + ")");
    }
  }
}

TwistedDatum TwistedDatum::from_json(const ordered_json& doc) {
  TwistedDatum d;
  if (!doc.is_object()) fail("document is not an object");
  if (!doc.contains("group") || !doc["group"].is_object()) fail("group missing");
  const auto& jg = doc["group"];
  int n = as_int(jg, "order");
  if (!jg.contains("mul") || !jg["mul"].is_array()) fail("group.mul missing");
  auto mul = jg["mul"].get<std::vector<std::vector<int>>>();
  if (static_cast<int>(mul.size()) != n) fail("group.order disagrees with the table");
  d.group_ = FiniteGroup::from_table(std::move(mul));
  d.sigma_ = as_int(jg, "sigma");
  d.central_charge_ = as_rational(doc, "central_charge");

  if (!doc.contains("modules") || !doc["modules"].is_array()) fail("modules missing");
  for (const auto& jm : doc["modules"]) {
    ModuleLabel mod;
    if (!jm.contains("id") || !jm["id"].is_string()) fail("module id missing");
    mod.id = jm["id"].get<std::string>();
    mod.twist = as_int(jm, "twist");
    mod.weight = as_rational(jm, "weight");
    if (!jm.contains("sigma_stable") || !jm["sigma_stable"].is_boolean())
      fail("module sigma_stable missing");
    mod.sigma_stable = jm["sigma_stable"].get<bool>();
    d.modules_.push_back(std::move(mod));
  }

  if (!doc.contains("action") || !doc["action"].is_array()) fail("action missing");
  d.action_ = doc["action"].get<std::vector<std::vector<int>>>();

  if (!doc.contains("cocycles") || !doc["cocycles"].is_array()) fail("cocycles missing");
  for (const auto& jc : doc["cocycles"]) {
    int rep = as_int(jc, "rep");
    long long order = as_int(jc, "n");
    if (order <= 0) fail("cocycle order must be positive");
    if (!jc.contains("subgroup") || !jc["subgroup"].is_array()) fail("cocycle subgroup missing");
    auto sub = jc["subgroup"].get<std::vector<int>>();
    if (!jc.contains("exponents") || !jc["exponents"].is_array())
      fail("cocycle exponents missing");
    auto exps = jc["exponents"].get<std::vector<std::vector<long long>>>();
    if (exps.size() != sub.size()) fail("cocycle exponent matrix has wrong shape");
    std::vector<std::vector<Cyclo>> values(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) {
      if (exps[i].size() != sub.size()) fail("cocycle exponent matrix has wrong shape");
      for (long long e : exps[i]) values[i].push_back(Cyclo::zeta(order, e));
    }
    if (!d.cocycles_.emplace(rep, Cocycle(std::move(sub), order, std::move(values))).second)
      fail("duplicate cocycle for representative " + std::to_string(rep));
  }

  if (!doc.contains("weights_by_char") || !doc["weights_by_char"].is_array())
    fail("weights_by_char missing");
  for (const auto& jw : doc["weights_by_char"]) {
    int rep = as_int(jw, "rep");
    int chr = as_int(jw, "char");
    if (chr < 0) fail("character index negative");
    if (!d.char_weights_.emplace(std::make_pair(rep, static_cast<std::size_t>(chr)),
                                 as_rational(jw, "weight"))
             .second)
      fail("duplicate character weight");
  }

  if (!doc.contains("sblocks") || !doc["sblocks"].is_array()) fail("sblocks missing");
  for (const auto& jb : doc["sblocks"]) {
    SBlock block;
    block.g = as_int(jb, "g");
    block.h = as_int(jb, "h");
    if (!jb.contains("rows") || !jb["rows"].is_array() || !jb.contains("cols") ||
        !jb["cols"].is_array() || !jb.contains("entries") || !jb["entries"].is_array())
      fail("sblock fields missing");
    for (const auto& r : jb["rows"]) block.rows.push_back(d.module_index(r.get<std::string>()));
    for (const auto& c : jb["cols"]) block.cols.push_back(d.module_index(c.get<std::string>()));
    for (const auto& jrow : jb["entries"]) {
      std::vector<Cyclo> row;
      for (const auto& je : jrow) row.push_back(Cyclo::parse(je.get<std::string>()));
      block.entries.push_back(std::move(row));
    }
    if (!d.sblocks_.emplace(std::make_pair(block.g, block.h), std::move(block)).second)
      fail("duplicate sblock");
  }

  d.validate_and_finish();
  return d;
}

nlohmann::ordered_json TwistedDatum::to_json() const {
  ordered_json doc;
  doc["group"] = {{"order", group_.order()}, {"mul", ordered_json::array()}, {"sigma", sigma_}};
  for (int a = 0; a < group_.order(); ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < group_.order(); ++b) row.push_back(group_.mul(a, b));
    doc["group"]["mul"].push_back(std::move(row));
  }
  doc["central_charge"] = rational_str(central_charge_);
  doc["modules"] = ordered_json::array();
  for (const auto& mod : modules_)
    doc["modules"].push_back({{"id", mod.id},
                              {"twist", mod.twist},
                              {"weight", rational_str(mod.weight)},
                              {"sigma_stable", mod.sigma_stable}});
  doc["action"] = action_;
  doc["cocycles"] = ordered_json::array();
  for (const auto& [rep, c] : cocycles_) {
    ordered_json exps = ordered_json::array();
    for (int a : c.elements()) {
      ordered_json row = ordered_json::array();
      for (int b : c.elements()) {
        long long e = 0;
        while (e < c.order() && c.at(a, b) != Cyclo::zeta(c.order(), e)) ++e;
        if (e == c.order()) fail("cocycle value is not a power of its declared root");
        row.push_back(e);
      }
      exps.push_back(std::move(row));
    }
    doc["cocycles"].push_back(
        {{"rep", rep}, {"subgroup", c.elements()}, {"n", c.order()}, {"exponents", exps}});
  }
  doc["weights_by_char"] = ordered_json::array();
  for (const auto& [key, w] : char_weights_)
    doc["weights_by_char"].push_back(
        {{"rep", key.first}, {"char", key.second}, {"weight", rational_str(w)}});
  doc["sblocks"] = ordered_json::array();
  for (const auto& [pair, block] : sblocks_) {
    ordered_json rows = ordered_json::array(), cols = ordered_json::array(),
                 entries = ordered_json::array();
    for (int r : block.rows) rows.push_back(modules_[r].id);
    for (int c : block.cols) cols.push_back(modules_[c].id);
    for (const auto& row : block.entries) {
      ordered_json jrow = ordered_json::array();
      for (const auto& e : row) jrow.push_back(e.str());
      entries.push_back(std::move(jrow));
    }
    doc["sblocks"].push_back(
        {{"g", pair.first}, {"h", pair.second}, {"rows", rows}, {"cols", cols}, {"entries", entries}});
  }
  return doc;
}

TwistedDatum TwistedDatum::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail("parse error in '" + path + "': " + e.what());
  }
  return from_json(doc);
}

void TwistedDatum::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) fail("cannot open '" + path + "' for writing");
  out << to_json().dump(2) << "\n";
}

}  // namespace superorb
