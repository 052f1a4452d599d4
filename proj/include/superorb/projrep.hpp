#pragma once

#include <map>
#include <vector>

#include "superorb/cyclo.hpp"
#include "superorb/group.hpp"

namespace superorb {

inline constexpr int kMaxCharTableOrder = 64;

// Unitary 2-cocycle on a subgroup H of a fixed parent group, the twisting of
// the algebra C^a[H] with product h-hat * k-hat = a(h,k) (hk)-hat.
class Cocycle {
 public:
  // elements: sorted parent indices forming a subgroup; values[i][j] is
  // a(elements[i], elements[j]) and must be an order-dividing-n root of unity
  Cocycle(std::vector<int> elements, long long order,
          std::vector<std::vector<Cyclo>> values);
  static Cocycle trivial_on(std::vector<int> elements);

  const std::vector<int>& elements() const { return elements_; }
  long long order() const { return order_; }
  bool contains(int g) const { return pos_.count(g) != 0; }
  int pos(int g) const;  // throws if g is not in H
  // a(a, b) by parent element indices
  const Cyclo& at(int a, int b) const;
  bool is_trivial() const;

  // Checks closure of the element set, cocycle identity, normalization
  // a(1,h) = a(h,1) = 1 and unitarity. Throws std::invalid_argument.
  void validate(const FiniteGroup& parent) const;

  // restriction to a subgroup of H (sorted parent indices)
  Cocycle restricted_to(std::vector<int> sub) const;

 private:
  std::vector<int> elements_;
  long long order_;
  std::vector<std::vector<Cyclo>> values_;
  std::map<int, int> pos_;
};

// Irreducible characters of a twisted group algebra C^a[H], H a subgroup of
// the parent group. chars[i][p] is the value at elements()[p]-hat; characters
// vanish at non-regular elements. Tables produced by char_table and
// proj_char_table are sorted by (degree ascending, value tuple descending in
// the exact total order), which puts the trivial character first when the
// cocycle is trivial; transported tables keep their source order so that
// character indices track the bijection lambda -> lambda-conjugate.
struct ProjCharTable {
  Cocycle cocycle;
  std::vector<std::vector<Cyclo>> chars;
  std::vector<long long> degrees;

  const std::vector<int>& elements() const { return cocycle.elements(); }
  std::size_t size() const { return chars.size(); }
  // value at g-hat for a parent element g of H; throws if g is outside H
  const Cyclo& value(std::size_t char_i, int g) const;
};

// Ordinary character table of the subgroup with the given sorted parent
// elements. Exact, via class-algebra eigenvectors over GF(p) lifted to
// cyclotomics. Throws std::invalid_argument above kMaxCharTableOrder.
ProjCharTable char_table(const FiniteGroup& parent, std::vector<int> elements);

// Irreducible characters of C^a[H]: ordinary table of the central extension
// Z_n x_a H, keeping the characters where the defining central element acts
// by zeta_n.
ProjCharTable proj_char_table(const FiniteGroup& parent, const Cocycle& c);

// true iff a(sigma, k) = a(k, sigma) for all k in H, i.e. sigma-hat is
// central in C^a[H] (sigma itself must be central in H and lie in H)
bool is_sigma_central(const FiniteGroup& parent, const Cocycle& c, int sigma);

struct SigmaSplit {
  std::vector<std::size_t> even;  // sigma-hat acts by +1
  std::vector<std::size_t> odd;   // sigma-hat acts by -1
};

// Requires sigma-hat central with a(sigma,sigma) = 1, so that it acts by a
// sign on each irreducible. Throws std::invalid_argument otherwise.
SigmaSplit sigma_split(const ProjCharTable& t, int sigma);

// Table for k^{-1} H k carrying a(a,b) and lambda(a-hat) over to
// a'(k^{-1}ak, k^{-1}bk) and lambda'(k^{-1}ak-hat). Character order is
// preserved, not re-sorted.
Cocycle transport(const FiniteGroup& parent, const Cocycle& c, int k);
ProjCharTable transport(const FiniteGroup& parent, const ProjCharTable& t, int k);

// Characters of C^a[H] induced from the index-2 subalgebra C^a[A],
// H = A u Ak. t lives on A, h_cocycle on H and must restrict to t's cocycle.
// Returned characters are functions on H in h_cocycle element order.
std::vector<std::vector<Cyclo>> induce_index2(const FiniteGroup& parent,
                                              const ProjCharTable& t,
                                              const Cocycle& h_cocycle, int k);

// Multiplicities <lambda * mu, gamma> over an ordinary table (trivial
// cocycle): gamma index -> nonnegative integer. Throws std::invalid_argument
// if an inner product fails to be a nonnegative integer.
std::map<std::size_t, long long> tensor_decompose(const ProjCharTable& t,
                                                  std::size_t lam, std::size_t mu);

// index of the all-ones character; throws if absent (non-trivial cocycle)
std::size_t trivial_char_index(const ProjCharTable& t);

}  // namespace superorb
