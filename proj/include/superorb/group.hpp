#pragma once

#include <string>
#include <vector>

namespace superorb {

// Finite group given by its multiplication table. Element 0 is the identity.
// mul(a, b) is "a then b" composed left to right only in the sense of the
// table itself; all derived notions (conjugation, cosets, actions) fix their
// conventions explicitly below.
class FiniteGroup {
 public:
  // Validates shape, identity, Latin square property, inverses and full
  // associativity. Throws std::invalid_argument with a reason on failure.
  static FiniteGroup from_table(std::vector<std::vector<int>> mul);
  // For internally constructed tables that are correct by construction.
  static FiniteGroup from_table_unchecked(std::vector<std::vector<int>> mul);

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  // k^{-1} a k
  int conj(int a, int k) const { return mul(mul(inv(k), a), k); }

  int element_order(int a) const { return order_[a]; }
  long long exponent() const;
  bool is_abelian() const;
  bool is_central(int a) const;

  // conjugacy classes; class 0 is {0}, classes ordered by least element
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int a) const { return class_of_[a]; }
  std::vector<int> centralizer(int a) const;
  std::vector<int> center() const;

  // closure of gens under multiplication, sorted
  std::vector<int> generated(const std::vector<int>& gens) const;
  // all subgroups as sorted element lists, ordered by (size, elements)
  std::vector<std::vector<int>> subgroups() const;
  bool is_subgroup(const std::vector<int>& h) const;
  bool is_normal(const std::vector<int>& h) const;

  // Quotient by a central involution z. proj[g] is the index of the image of
  // g; elements of the quotient are indexed by their least coset
  // representative, in increasing order (so the identity stays 0).
  FiniteGroup quotient_by_involution(int z, std::vector<int>* proj) const;

 private:
  FiniteGroup() = default;
  void finish();

  int n_ = 0;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<int> order_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

FiniteGroup cyclic_group(int n);
// (a, b) with a in A, b in B is element a*|B| + b
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Right action of a group on points {0, ..., m-1}: apply(x, k) is x acted on
// by k, so apply(apply(x, a), b) = apply(x, mul(a, b)).
class RightAction {
 public:
  // table[x][k] = x acted on by group element k; validated
  RightAction(const FiniteGroup& g, std::vector<std::vector<int>> table);

  int points() const { return static_cast<int>(table_.size()); }
  int apply(int x, int k) const { return table_[x][k]; }
  const FiniteGroup& group() const { return *g_; }

  // orbits sorted internally and by least element
  std::vector<std::vector<int>> orbits() const;
  std::vector<int> stabilizer(int x) const;

 private:
  const FiniteGroup* g_;
  std::vector<std::vector<int>> table_;
};

}  // namespace superorb
