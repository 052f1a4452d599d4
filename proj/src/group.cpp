#include "superorb/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace superorb {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mul) {
  int n = static_cast<int>(mul.size());
  if (n == 0) throw std::invalid_argument("group: empty table");
  for (auto& row : mul) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group: table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group: entry out of range");
  }
  for (int g = 0; g < n; ++g)
    if (mul[0][g] != g || mul[g][0] != g)
      throw std::invalid_argument("group: element 0 is not an identity");
  for (int g = 0; g < n; ++g) {
    std::vector<bool> row(n, false), col(n, false);
    for (int h = 0; h < n; ++h) {
      if (row[mul[g][h]] || col[mul[h][g]])
        throw std::invalid_argument("group: table is not a Latin square");
      row[mul[g][h]] = col[mul[h][g]] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw std::invalid_argument("group: multiplication is not associative");
  return from_table_unchecked(std::move(mul));
}

FiniteGroup FiniteGroup::from_table_unchecked(std::vector<std::vector<int>> mul) {
  FiniteGroup g;
  g.n_ = static_cast<int>(mul.size());
  g.mul_ = std::move(mul);
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul_[a][b] == 0) inv_[a] = b;
  for (int a = 0; a < n_; ++a)
    if (inv_[a] < 0 || mul_[inv_[a]][a] != 0)
      throw std::invalid_argument("group: missing inverse");

  order_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul_[x][a];
      ++k;
    }
    order_[a] = k;
  }

  class_of_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    if (class_of_[a] >= 0) continue;
    int id = static_cast<int>(classes_.size());
    std::set<int> cls;
    for (int k = 0; k < n_; ++k) cls.insert(conj(a, k));
    std::vector<int> v(cls.begin(), cls.end());
    for (int x : v) class_of_[x] = id;
    classes_.push_back(std::move(v));
  }
}

long long FiniteGroup::exponent() const {
  long long e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long long>(order_[a]));
  return e;
}

bool FiniteGroup::is_abelian() const {
  return static_cast<int>(classes_.size()) == n_;
}

bool FiniteGroup::is_central(int a) const {
  for (int k = 0; k < n_; ++k)
    if (mul_[a][k] != mul_[k][a]) return false;
  return true;
}

std::vector<int> FiniteGroup::centralizer(int a) const {
  std::vector<int> c;
  for (int k = 0; k < n_; ++k)
    if (mul_[a][k] == mul_[k][a]) c.push_back(k);
  return c;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> c;
  for (int a = 0; a < n_; ++a)
    if (is_central(a)) c.push_back(a);
  return c;
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& gens) const {
  std::set<int> s{0};
  for (int g : gens) s.insert(g);
  for (;;) {
    std::set<int> next = s;
    for (int a : s)
      for (int b : s) next.insert(mul_[a][b]);
    if (next.size() == s.size()) break;
    s = std::move(next);
  }
  return {s.begin(), s.end()};
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{{0}};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<int> h = queue[i];
    std::set<int> in(h.begin(), h.end());
    for (int g = 1; g < n_; ++g) {
      if (in.count(g)) continue;
      std::vector<int> gens = h;
      gens.push_back(g);
      std::vector<int> bigger = generated(gens);
      if (seen.insert(bigger).second) queue.push_back(std::move(bigger));
    }
  }
  std::sort(queue.begin(), queue.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return queue;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& h) const {
  std::set<int> in(h.begin(), h.end());
  if (!in.count(0)) return false;
  for (int a : h)
    for (int b : h)
      if (!in.count(mul_[a][b])) return false;
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& h) const {
  std::set<int> in(h.begin(), h.end());
  for (int a : h)
    for (int k = 0; k < n_; ++k)
      if (!in.count(conj(a, k))) return false;
  return true;
}

FiniteGroup FiniteGroup::quotient_by_involution(int z, std::vector<int>* proj) const {
  if (z <= 0 || z >= n_ || mul_[z][z] != 0 || !is_central(z))
    throw std::invalid_argument("quotient: not a central involution");
  std::vector<int> rep(n_);
  for (int g = 0; g < n_; ++g) rep[g] = std::min(g, mul_[g][z]);
  std::vector<int> reps;
  for (int g = 0; g < n_; ++g)
    if (rep[g] == g) reps.push_back(g);
  std::vector<int> index(n_, -1);
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) index[reps[i]] = i;
  std::vector<std::vector<int>> table(reps.size(), std::vector<int>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      table[i][j] = index[rep[mul_[reps[i]][reps[j]]]];
  if (proj) {
    proj->assign(n_, -1);
    for (int g = 0; g < n_; ++g) (*proj)[g] = index[rep[g]];
  }
  return from_table_unchecked(std::move(table));
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table_unchecked(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na * nb; ++i)
    for (int j = 0; j < na * nb; ++j)
      t[i][j] = a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
  return FiniteGroup::from_table_unchecked(std::move(t));
}

RightAction::RightAction(const FiniteGroup& g, std::vector<std::vector<int>> table)
    : g_(&g), table_(std::move(table)) {
  int m = static_cast<int>(table_.size());
  int n = g.order();
  for (auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("action: row size mismatch");
    for (int v : row)
      if (v < 0 || v >= m) throw std::invalid_argument("action: point out of range");
  }
  for (int x = 0; x < m; ++x)
    if (table_[x][0] != x)
      throw std::invalid_argument("action: identity does not fix points");
  for (int x = 0; x < m; ++x)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (table_[table_[x][a]][b] != table_[x][g.mul(a, b)])
          throw std::invalid_argument("action: not compatible with multiplication");
}

std::vector<std::vector<int>> RightAction::orbits() const {
  int m = points();
  std::vector<bool> seen(m, false);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < m; ++x) {
    if (seen[x]) continue;
    std::set<int> orb;
    for (int k = 0; k < g_->order(); ++k) orb.insert(table_[x][k]);
    std::vector<int> v(orb.begin(), orb.end());
    for (int y : v) seen[y] = true;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<int> RightAction::stabilizer(int x) const {
  std::vector<int> s;
  for (int k = 0; k < g_->order(); ++k)
    if (table_[x][k] == x) s.push_back(k);
  return s;
}

}  // namespace superorb
