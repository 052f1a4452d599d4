#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "superorb/group.hpp"

// Small concrete groups used as test subjects.
namespace groups_util {

// all permutations of {0..n-1} in lexicographic order; identity is index 0
inline std::vector<std::vector<int>> perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline superorb::FiniteGroup symmetric(int n) {
  auto ps = perms(n);
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < static_cast<int>(ps.size()); ++i) idx[ps[i]] = i;
  int m = static_cast<int>(ps.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = ps[a][ps[b][i]];
      t[a][b] = idx[c];
    }
  return superorb::FiniteGroup::from_table(std::move(t));
}

inline bool is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

inline superorb::FiniteGroup alternating(int n) {
  auto ps = perms(n);
  std::vector<std::vector<int>> evens;
  for (auto& p : ps)
    if (is_even(p)) evens.push_back(p);
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < static_cast<int>(evens.size()); ++i) idx[evens[i]] = i;
  int m = static_cast<int>(evens.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = evens[a][evens[b][i]];
      t[a][b] = idx[c];
    }
  return superorb::FiniteGroup::from_table(std::move(t));
}

// r^i s^j with i < n, j < 2, index i + n*j; s r s = r^{-1}
inline superorb::FiniteGroup dihedral(int n) {
  int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = ((i1 + (j1 ? n - i2 : i2)) % n + n) % n;
          int j = (j1 + j2) % 2;
          t[i1 + n * j1][i2 + n * j2] = i + n * j;
        }
  return superorb::FiniteGroup::from_table(std::move(t));
}

// {1, -1, i, -i, j, -j, k, -k} in that order
inline superorb::FiniteGroup quaternion8() {
  // quaternion units as (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k
  auto mul_axis = [](int a, int b, int& axis) -> int {
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    axis = ax[a][b];
    return sg[a][b];
  };
  auto index = [](int sign, int axis) { return 2 * axis + (sign < 0 ? 1 : 0); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int axa = a / 2, sga = a % 2 ? -1 : 1;
      int axb = b / 2, sgb = b % 2 ? -1 : 1;
      int axis;
      int s = mul_axis(axa, axb, axis) * sga * sgb;
      t[a][b] = index(s, axis);
    }
  return superorb::FiniteGroup::from_table(std::move(t));
}

inline superorb::FiniteGroup klein4() {
  return superorb::direct_product(superorb::cyclic_group(2), superorb::cyclic_group(2));
}

}  // namespace groups_util
