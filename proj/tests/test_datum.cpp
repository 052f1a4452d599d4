#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "groups_util.hpp"
#include "superorb/datum.hpp"

using namespace superorb;
using nlohmann::ordered_json;

namespace {

std::string sqrt2_str() { return (Cyclo::zeta(8, 1) + Cyclo::zeta(8, 7)).str(); }
std::string inv_sqrt2_str() {
  return (Rational(1, 2) * (Cyclo::zeta(8, 1) + Cyclo::zeta(8, 7))).str();
}

// free fermion with its canonical order-two symmetry
ordered_json fermion_doc() {
  ordered_json doc;
  doc["group"] = {{"order", 2}, {"mul", {{0, 1}, {1, 0}}}, {"sigma", 1}};
  doc["central_charge"] = "1/2";
  doc["modules"] = {
      {{"id", "V"}, {"twist", 0}, {"weight", "0"}, {"sigma_stable", true}},
      {{"id", "M"}, {"twist", 1}, {"weight", "1/16"}, {"sigma_stable", false}},
      {{"id", "Ms"}, {"twist", 1}, {"weight", "1/16"}, {"sigma_stable", false}}};
  doc["action"] = {{0, 0}, {1, 2}, {2, 1}};
  doc["cocycles"] = {
      {{"rep", 0}, {"subgroup", {0, 1}}, {"n", 1}, {"exponents", {{0, 0}, {0, 0}}}},
      {{"rep", 1}, {"subgroup", ordered_json::array({0})}, {"n", 1}, {"exponents", {{0}}}}};
  doc["weights_by_char"] = {{{"rep", 0}, {"char", 0}, {"weight", "0"}},
                            {{"rep", 0}, {"char", 1}, {"weight", "1/2"}},
                            {{"rep", 1}, {"char", 0}, {"weight", "1/16"}}};
  doc["sblocks"] = {
      {{"g", 1},
       {"h", 1},
       {"rows", ordered_json::array({"V"})},
       {"cols", ordered_json::array({"V"})},
       {"entries", {{"1"}}}},
      {{"g", 1},
       {"h", 0},
       {"rows", ordered_json::array({"V"})},
       {"cols", ordered_json::array({"M"})},
       {"entries", {{inv_sqrt2_str()}}}},
      {{"g", 0},
       {"h", 1},
       {"rows", ordered_json::array({"M"})},
       {"cols", ordered_json::array({"V"})},
       {"entries", {{sqrt2_str()}}}}};
  return doc;
}

// three ordinary modules under the trivial group
ordered_json voa_doc() {
  ordered_json doc;
  doc["group"] = {{"order", 1}, {"mul", {{0}}}, {"sigma", 0}};
  doc["central_charge"] = "1/2";
  doc["modules"] = {
      {{"id", "1"}, {"twist", 0}, {"weight", "0"}, {"sigma_stable", true}},
      {{"id", "eps"}, {"twist", 0}, {"weight", "1/2"}, {"sigma_stable", true}},
      {{"id", "tau"}, {"twist", 0}, {"weight", "1/16"}, {"sigma_stable", true}}};
  doc["action"] = {{0}, {1}, {2}};
  doc["cocycles"] = {
      {{"rep", 0}, {"subgroup", ordered_json::array({0})}, {"n", 1}, {"exponents", {{0}}}},
      {{"rep", 1}, {"subgroup", ordered_json::array({0})}, {"n", 1}, {"exponents", {{0}}}},
      {{"rep", 2}, {"subgroup", ordered_json::array({0})}, {"n", 1}, {"exponents", {{0}}}}};
  doc["weights_by_char"] = {{{"rep", 0}, {"char", 0}, {"weight", "0"}},
                            {{"rep", 1}, {"char", 0}, {"weight", "1/2"}},
                            {{"rep", 2}, {"char", 0}, {"weight", "1/16"}}};
  doc["sblocks"] = {{{"g", 0},
                     {"h", 0},
                     {"rows", ordered_json::array({"1", "eps", "tau"})},
                     {"cols", ordered_json::array({"1", "eps", "tau"})},
                     {"entries",
                      {{"1/2", "1/2", inv_sqrt2_str()},
                       {"1/2", "1/2", "-" + inv_sqrt2_str()},
                       {inv_sqrt2_str(), "-" + inv_sqrt2_str(), "0"}}}}};
  return doc;
}

// fabricated transport fixture: the symmetric group on three letters acting
// with trivial canonical involution
ordered_json s3_doc(const std::string& conjugate_entry) {
  FiniteGroup s3 = groups_util::symmetric(3);
  ordered_json doc;
  ordered_json mul = ordered_json::array();
  for (int a = 0; a < 6; ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < 6; ++b) row.push_back(s3.mul(a, b));
    mul.push_back(std::move(row));
  }
  doc["group"] = {{"order", 6}, {"mul", mul}, {"sigma", 0}};
  doc["central_charge"] = "1";
  // transpositions 1, 2, 5 and three-cycles 3, 4 in lexicographic permutation order
  std::vector<int> twists = {0, 1, 2, 5, 3, 4};
  std::vector<std::string> ids = {"V", "A", "B", "C", "D", "E"};
  std::vector<std::string> weights = {"0", "1/2", "1/2", "1/2", "1/3", "1/3"};
  doc["modules"] = ordered_json::array();
  for (int m = 0; m < 6; ++m)
    doc["modules"].push_back({{"id", ids[m]},
                              {"twist", twists[m]},
                              {"weight", weights[m]},
                              {"sigma_stable", true}});
  auto module_of_twist = [&](int t) {
    for (int m = 0; m < 6; ++m)
      if (twists[m] == t) return m;
    return -1;
  };
  ordered_json action = ordered_json::array();
  for (int m = 0; m < 6; ++m) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < 6; ++k) row.push_back(module_of_twist(s3.conj(twists[m], k)));
    action.push_back(std::move(row));
  }
  doc["action"] = action;
  auto trivial_cocycle = [&](int rep, const std::vector<int>& sub) {
    ordered_json exps = ordered_json::array();
    for (std::size_t i = 0; i < sub.size(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < sub.size(); ++j) row.push_back(0);
      exps.push_back(std::move(row));
    }
    return ordered_json{{"rep", rep}, {"subgroup", sub}, {"n", 1}, {"exponents", exps}};
  };
  doc["cocycles"] = {trivial_cocycle(0, {0, 1, 2, 3, 4, 5}), trivial_cocycle(1, {0, 1}),
                     trivial_cocycle(4, {0, 3, 4})};
  doc["weights_by_char"] = {
      {{"rep", 0}, {"char", 0}, {"weight", "0"}},  {{"rep", 0}, {"char", 1}, {"weight", "3"}},
      {{"rep", 0}, {"char", 2}, {"weight", "1"}},  {{"rep", 1}, {"char", 0}, {"weight", "1/2"}},
      {{"rep", 1}, {"char", 1}, {"weight", "3/2"}}, {{"rep", 4}, {"char", 0}, {"weight", "1/3"}},
      {{"rep", 4}, {"char", 1}, {"weight", "1/3"}}, {{"rep", 4}, {"char", 2}, {"weight", "2/3"}}};
  doc["sblocks"] = {{{"g", 1},
                     {"h", 1},
                     {"rows", ordered_json::array({"A"})},
                     {"cols", ordered_json::array({"A"})},
                     {"entries", {{"1/3"}}}}};
  if (!conjugate_entry.empty())
    doc["sblocks"].push_back({{"g", 2},
                              {"h", 2},
                              {"rows", ordered_json::array({"B"})},
                              {"cols", ordered_json::array({"B"})},
                              {"entries", {{conjugate_entry}}}});
  return doc;
}

}  // namespace

TEST_CASE("fermion datum loads with the expected structure") {
  TwistedDatum d = TwistedDatum::from_json(fermion_doc());
  CHECK(d.group().order() == 2);
  CHECK(d.sigma() == 1);
  CHECK(d.vacuum() == 0);
  CHECK(d.central_charge() == Rational(1, 2));
  CHECK(d.modules().size() == 3);
  CHECK(d.module_index("Ms") == 2);
  CHECK(d.stabilizer(0) == std::vector<int>{0, 1});
  CHECK(d.stabilizer(1) == std::vector<int>{0});
  CHECK(d.super_stabilizer(1) == std::vector<int>{0, 1});
  CHECK(d.super_partner(1) == 2);
  CHECK(d.super_rep(2) == 1);
  CHECK(d.orbits() == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK(d.orbit_rep(2) == 1);
  CHECK(d.char_table_of(0).size() == 2);
  CHECK(d.char_table_of(1).size() == 1);
  CHECK(d.char_weight(0, 1) == Rational(1, 2));
}

TEST_CASE("fermion super sector sets") {
  TwistedDatum d = TwistedDatum::from_json(fermion_doc());
  CHECK(d.super_set(1, 1) == std::vector<SuperLabel>{{0, true}});
  CHECK(d.super_set(1, 0) == std::vector<SuperLabel>{{0, true}});
  CHECK(d.super_set(0, 1) == std::vector<SuperLabel>{{1, false}});
  CHECK(d.super_set(0, 0) == std::vector<SuperLabel>{{1, false}});
  CHECK(d.count_report().empty());
}

TEST_CASE("fermion stored blocks round trip bit exactly") {
  ordered_json doc = fermion_doc();
  TwistedDatum d = TwistedDatum::from_json(doc);
  CHECK(d.sblock(1, 1).entries[0][0] == Cyclo(1));
  Cyclo sqrt2 = Cyclo::zeta(8, 1) + Cyclo::zeta(8, 7);
  CHECK(d.sblock(0, 1).entries[0][0] == sqrt2);
  CHECK(d.sblock(1, 0).entries[0][0] == Rational(1, 2) * sqrt2);
  CHECK(d.sblock(0, 1).rows == std::vector<int>{1});
  CHECK(d.sblock(0, 1).cols == std::vector<int>{0});
  CHECK(!d.sblock_reachable(0, 0));
  CHECK_THROWS_AS((void)d.sblock(0, 0), std::invalid_argument);

  ordered_json again = TwistedDatum::from_json(d.to_json()).to_json();
  CHECK(d.to_json().dump(2) == again.dump(2));
}

TEST_CASE("datum file save and load are inverse") {
  TwistedDatum d = TwistedDatum::from_json(fermion_doc());
  std::string path = "fermion_roundtrip.json";
  d.save(path);
  TwistedDatum e = TwistedDatum::load(path);
  CHECK(d.to_json() == e.to_json());
}

TEST_CASE("trivial group datum reduces to plain modular data") {
  TwistedDatum d = TwistedDatum::from_json(voa_doc());
  CHECK(d.group().order() == 1);
  CHECK(d.super_set(0, 0).size() == 3);
  CHECK(d.count_report().empty());
  auto block = d.sblock(0, 0);
  CHECK(block.rows == std::vector<int>{0, 1, 2});
  CHECK(block.entries[2][2] == Cyclo(0));
  CHECK(block.entries[0][0] == Cyclo(Rational(1, 2)));
}

TEST_CASE("conjugate blocks are reachable through transport") {
  TwistedDatum d = TwistedDatum::from_json(s3_doc(""));
  CHECK(d.count_report().empty());
  CHECK(d.sblock_reachable(2, 2));
  CHECK(d.sblock_reachable(5, 5));
  auto block = d.sblock(2, 2);
  CHECK(block.rows == std::vector<int>{2});
  CHECK(block.cols == std::vector<int>{2});
  CHECK(block.entries[0][0] == Cyclo(Rational(1, 3)));
  CHECK(d.sblock(5, 5).entries[0][0] == Cyclo(Rational(1, 3)));
  CHECK(!d.sblock_reachable(1, 0));
  CHECK_THROWS_AS((void)d.sblock(1, 0), std::invalid_argument);
}

TEST_CASE("redundant conjugate blocks are cross checked") {
  CHECK_NOTHROW((void)TwistedDatum::from_json(s3_doc("1/3")));
  CHECK_THROWS_AS((void)TwistedDatum::from_json(s3_doc("1/4")), std::invalid_argument);
}

TEST_CASE("malformed data is rejected") {
  auto reject = [](const ordered_json& doc) {
    CHECK_THROWS_AS((void)TwistedDatum::from_json(doc), std::invalid_argument);
  };

  ordered_json zero_weight = fermion_doc();  // twisted label of weight zero
  zero_weight["modules"][1]["weight"] = "0";
  reject(zero_weight);

  ordered_json dup_vacuum = fermion_doc();
  dup_vacuum["modules"].push_back(
      {{"id", "X"}, {"twist", 0}, {"weight", "0"}, {"sigma_stable", true}});
  reject(dup_vacuum);

  ordered_json bad_twist = fermion_doc();  // action no longer twist equivariant
  bad_twist["modules"][2]["twist"] = 0;
  bad_twist["modules"][2]["weight"] = "1/4";
  reject(bad_twist);

  ordered_json bad_flag = fermion_doc();
  bad_flag["modules"][1]["sigma_stable"] = true;
  reject(bad_flag);

  ordered_json bad_sigma = fermion_doc();
  bad_sigma["group"]["sigma"] = 5;
  reject(bad_sigma);

  ordered_json no_cocycle = fermion_doc();
  no_cocycle["cocycles"].erase(1);
  reject(no_cocycle);

  ordered_json bad_norm = fermion_doc();  // a(sigma, sigma) = -1
  bad_norm["cocycles"][0] = {{"rep", 0},
                             {"subgroup", ordered_json::array({0, 1})},
                             {"n", 2},
                             {"exponents", {{0, 0}, {0, 1}}}};
  reject(bad_norm);

  ordered_json missing_weight = fermion_doc();
  missing_weight["weights_by_char"].erase(1);
  reject(missing_weight);

  ordered_json extra_weight = fermion_doc();  // index beyond the character count
  extra_weight["weights_by_char"].push_back({{"rep", 1}, {"char", 1}, {"weight", "1"}});
  reject(extra_weight);

  ordered_json bad_rows = fermion_doc();
  bad_rows["sblocks"][1]["rows"] = ordered_json::array({"M"});
  reject(bad_rows);

  ordered_json dup_block = fermion_doc();
  dup_block["sblocks"].push_back(dup_block["sblocks"][0]);
  reject(dup_block);

  ordered_json moved_vacuum = fermion_doc();
  moved_vacuum["action"][0] = {0, 1};
  reject(moved_vacuum);
}

TEST_CASE("count report flags an unmatched stable module") {
  ordered_json doc = fermion_doc();
  doc["modules"].push_back(
      {{"id", "X"}, {"twist", 0}, {"weight", "2"}, {"sigma_stable", true}});
  doc["action"].push_back({3, 3});
  doc["cocycles"].push_back(
      {{"rep", 3}, {"subgroup", ordered_json::array({0, 1})}, {"n", 1}, {"exponents", {{0, 0}, {0, 0}}}});
  doc["weights_by_char"].push_back({{"rep", 3}, {"char", 0}, {"weight", "2"}});
  doc["weights_by_char"].push_back({{"rep", 3}, {"char", 1}, {"weight", "2"}});
  // the old blocks now have incomplete rows, so drop them
  doc["sblocks"] = ordered_json::array();
  TwistedDatum d = TwistedDatum::from_json(doc);
  auto report = d.count_report();
  CHECK(!report.empty());
}
