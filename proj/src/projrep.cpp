#include "superorb/projrep.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace superorb {

namespace {

long long pow_mod(long long b, long long e, long long p) {
  long long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long long inv_mod(long long a, long long p) { return pow_mod(a, p - 2, p); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// smallest prime p = 1 mod ex with p > floor
long long find_prime(long long ex, long long floor_excl) {
  for (long long p = ex + 1;; p += ex)
    if (p > floor_excl && is_prime(p)) return p;
}

long long root_of_order(long long ex, long long p) {
  std::vector<long long> qs;
  long long m = ex;
  for (long long q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      qs.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) qs.push_back(m);
  for (long long w = 2; w < p; ++w) {
    long long z = pow_mod(w, (p - 1) / ex, p);
    bool ok = true;
    for (long long q : qs)
      if (pow_mod(z, ex / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return z;
  }
  if (ex == 1) return 1;
  throw std::logic_error("no element of the requested order mod p");
}

using Mat = std::vector<std::vector<long long>>;
using Vec = std::vector<long long>;

// reduced row echelon form; drops zero rows, returns pivot columns
std::vector<int> rref(Mat& m, long long p) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivots;
  int rr = 0;
  for (int c = 0; c < cols && rr < rows; ++c) {
    int pr = -1;
    for (int i = rr; i < rows; ++i)
      if (m[i][c] % p != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rr], m[pr]);
    long long iv = inv_mod(m[rr][c], p);
    for (int j = 0; j < cols; ++j) m[rr][j] = m[rr][j] * iv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == rr || m[i][c] == 0) continue;
      long long f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rr][j]) % p + p) % p;
    }
    pivots.push_back(c);
    ++rr;
  }
  m.resize(pivots.size());
  return pivots;
}

Mat null_space(Mat m, long long p) {
  int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  auto pivots = rref(m, p);
  std::vector<bool> is_piv(cols, false);
  for (int c : pivots) is_piv[c] = true;
  Mat basis;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    Vec v(cols, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][c]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Subspace {
  Mat basis;  // RREF rows
  std::vector<int> pivots;
};

Subspace make_subspace(Mat rows, long long p) {
  Subspace s;
  s.pivots = rref(rows, p);
  s.basis = std::move(rows);
  return s;
}

Vec coords_in(const Subspace& s, Vec v, long long p) {
  Vec out(s.basis.size(), 0);
  for (std::size_t t = 0; t < s.basis.size(); ++t) {
    long long c = v[s.pivots[t]] % p;
    if (!c) continue;
    out[t] = c;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = ((v[j] - c * s.basis[t][j]) % p + p) % p;
  }
  for (long long x : v)
    if (x % p != 0) throw std::logic_error("vector escaped its eigenspace");
  return out;
}

struct ExactTable {
  std::vector<std::vector<Cyclo>> chars;  // per element of the group
  std::vector<long long> degrees;
};

// ordinary character table by class-algebra eigenvector splitting over GF(p)
ExactTable dixon(const FiniteGroup& grp) {
  int n = grp.order();
  if (n == 1) return {{{Cyclo(1)}}, {1}};

  const auto& cls = grp.classes();
  int r = static_cast<int>(cls.size());
  long long ex = grp.exponent();
  long long p = find_prime(ex, 2 * n);
  long long z = root_of_order(ex, p);

  // class-algebra structure constants: (A_i)_{j,k} = a_{ijk}, so A_i w = w_i w
  std::vector<Mat> mats(r, Mat(r, Vec(r, 0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::vector<long long> cnt(r, 0);
      for (int x : cls[i])
        for (int y : cls[j]) ++cnt[grp.class_of(grp.mul(x, y))];
      for (int k = 0; k < r; ++k) {
        assert(cnt[k] % static_cast<long long>(cls[k].size()) == 0);
        mats[i][j][k] = cnt[k] / static_cast<long long>(cls[k].size()) % p;
      }
    }

  Mat identity(r, Vec(r, 0));
  for (int i = 0; i < r; ++i) identity[i][i] = 1;
  std::vector<Subspace> spaces{make_subspace(identity, p)};

  for (int i = 1; i < r; ++i) {
    bool split_done = true;
    for (auto& s : spaces)
      if (s.basis.size() > 1) split_done = false;
    if (split_done) break;

    std::vector<Subspace> next;
    for (auto& s : spaces) {
      std::size_t m = s.basis.size();
      if (m == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // restriction of A_i to the subspace
      Mat restr(m, Vec(m, 0));
      for (std::size_t t = 0; t < m; ++t) {
        Vec img(r, 0);
        for (int kk = 0; kk < r; ++kk) {
          long long acc = 0;
          for (int j = 0; j < r; ++j) acc = (acc + mats[i][kk][j] * s.basis[t][j]) % p;
          img[kk] = acc;
        }
        Vec co = coords_in(s, std::move(img), p);
        for (std::size_t tt = 0; tt < m; ++tt) restr[tt][t] = co[tt];
      }
      std::size_t found = 0;
      for (long long lam = 0; lam < p && found < m; ++lam) {
        Mat shifted = restr;
        for (std::size_t t = 0; t < m; ++t) shifted[t][t] = (shifted[t][t] - lam % p + p) % p;
        Mat ns = null_space(std::move(shifted), p);
        if (ns.empty()) continue;
        Mat lifted;
        for (auto& c : ns) {
          Vec w(r, 0);
          for (std::size_t t = 0; t < m; ++t)
            for (int j = 0; j < r; ++j) w[j] = (w[j] + c[t] * s.basis[t][j]) % p;
          lifted.push_back(std::move(w));
        }
        found += ns.size();
        next.push_back(make_subspace(std::move(lifted), p));
      }
      if (found != m) throw std::logic_error("class algebra failed to split");
    }
    spaces = std::move(next);
  }
  for (auto& s : spaces)
    if (s.basis.size() != 1) throw std::logic_error("character space not fully split");

  // normalize eigenvectors to omega-vectors (identity-class coordinate 1)
  // and recover degrees and exact values
  ExactTable out;
  std::vector<long long> inv_clssz(r);
  for (int k = 0; k < r; ++k) inv_clssz[k] = inv_mod(static_cast<long long>(cls[k].size()) % p, p);
  std::vector<int> inv_class(r);
  for (int k = 0; k < r; ++k) inv_class[k] = grp.class_of(grp.inv(cls[k][0]));

  for (auto& s : spaces) {
    Vec w = s.basis[0];
    if (w[0] % p == 0) throw std::logic_error("eigenvector with zero identity coordinate");
    long long scale = inv_mod(w[0], p);
    for (auto& x : w) x = x * scale % p;

    long long srec = 0;
    for (int k = 0; k < r; ++k)
      srec = (srec + w[k] * w[inv_class[k]] % p * inv_clssz[k]) % p;
    long long dd = static_cast<long long>(n) % p * inv_mod(srec, p) % p;
    long long deg = 0;
    for (long long d = 1; d * d <= n; ++d)
      if (d * d % p == dd) {
        deg = d;
        break;
      }
    if (deg == 0) throw std::logic_error("no degree matches the orthogonality residue");

    std::vector<long long> tk(r);
    for (int k = 0; k < r; ++k) tk[k] = deg % p * w[k] % p * inv_clssz[k] % p;

    std::vector<Cyclo> vals(n);
    for (int k = 0; k < r; ++k) {
      int g = cls[k][0];
      long long o = grp.element_order(g);
      long long zo_inv = inv_mod(pow_mod(z, ex / o, p), p);
      long long oinv = inv_mod(o % p, p);
      std::map<long long, Rational> coeffs;
      std::vector<long long> tpow(o);
      int x = 0;
      for (long long sdx = 0; sdx < o; ++sdx) {
        tpow[sdx] = tk[grp.class_of(x)];
        x = grp.mul(x, g);
      }
      for (long long j = 0; j < o; ++j) {
        long long mu = 0;
        for (long long sdx = 0; sdx < o; ++sdx)
          mu = (mu + tpow[sdx] * pow_mod(zo_inv, j * sdx % o, p)) % p;
        mu = mu * oinv % p;
        if (mu > deg) throw std::logic_error("eigenvalue multiplicity out of range");
        if (mu) coeffs[j] = Rational(mu);
      }
      Cyclo v = Cyclo::from_basis(o, coeffs);
      for (int e : cls[k]) vals[e] = v;
    }
    out.chars.push_back(std::move(vals));
    out.degrees.push_back(deg);
  }
  return out;
}

void sort_table(ExactTable& t) {
  std::vector<std::size_t> idx(t.chars.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    for (std::size_t k = 0; k < t.chars[a].size(); ++k)
      if (t.chars[a][k] != t.chars[b][k]) return t.chars[b][k] < t.chars[a][k];
    return false;
  });
  ExactTable sorted;
  for (std::size_t i : idx) sorted.chars.push_back(std::move(t.chars[i]));
  for (std::size_t i : idx) sorted.degrees.push_back(t.degrees[i]);
  t = std::move(sorted);
}

void validate_table(const ProjCharTable& t) {
  long long n = static_cast<long long>(t.elements().size());
  long long sum = 0;
  for (long long d : t.degrees) sum += d * d;
  if (sum != n) throw std::logic_error("character degrees do not sum to the group order");
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i; j < t.size(); ++j) {
      Cyclo ip;
      for (std::size_t k = 0; k < t.chars[i].size(); ++k)
        ip += t.chars[i][k] * t.chars[j][k].conj();
      Cyclo expect = i == j ? Cyclo(n) : Cyclo();
      if (ip != expect) throw std::logic_error("character rows are not orthonormal");
    }
}

// local group on a sorted subgroup element list, with the position map
FiniteGroup local_group(const FiniteGroup& parent, const std::vector<int>& elements,
                        std::map<int, int>& pos) {
  pos.clear();
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) pos[elements[i]] = i;
  if (elements.empty() || elements[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  std::vector<std::vector<int>> table(elements.size(), std::vector<int>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto it = pos.find(parent.mul(elements[a], elements[b]));
      if (it == pos.end()) throw std::invalid_argument("element set is not closed");
      table[a][b] = it->second;
    }
  return FiniteGroup::from_table_unchecked(std::move(table));
}

}  // namespace

Cocycle::Cocycle(std::vector<int> elements, long long order,
                 std::vector<std::vector<Cyclo>> values)
    : elements_(std::move(elements)), order_(order), values_(std::move(values)) {
  if (order_ < 1) throw std::invalid_argument("cocycle order must be positive");
  if (!std::is_sorted(elements_.begin(), elements_.end()) ||
      std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw std::invalid_argument("cocycle element list must be sorted and duplicate free");
  if (values_.size() != elements_.size())
    throw std::invalid_argument("cocycle value table shape mismatch");
  for (auto& row : values_)
    if (row.size() != elements_.size())
      throw std::invalid_argument("cocycle value table shape mismatch");
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i) pos_[elements_[i]] = i;
}

Cocycle Cocycle::trivial_on(std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  std::size_t n = elements.size();
  return Cocycle(std::move(elements), 1,
                 std::vector<std::vector<Cyclo>>(n, std::vector<Cyclo>(n, Cyclo(1))));
}

int Cocycle::pos(int g) const {
  auto it = pos_.find(g);
  if (it == pos_.end()) throw std::invalid_argument("element outside the cocycle subgroup");
  return it->second;
}

const Cyclo& Cocycle::at(int a, int b) const { return values_[pos(a)][pos(b)]; }

bool Cocycle::is_trivial() const {
  for (auto& row : values_)
    for (auto& v : row)
      if (v != Cyclo(1)) return false;
  return true;
}

void Cocycle::validate(const FiniteGroup& parent) const {
  std::map<int, int> pos;
  local_group(parent, elements_, pos);  // throws unless a subgroup
  const Cyclo one(1);
  for (int a : elements_) {
    if (at(0, a) != one || at(a, 0) != one)
      throw std::invalid_argument("cocycle is not normalized at the identity");
  }
  for (int a : elements_)
    for (int b : elements_) {
      Cyclo v = at(a, b);
      Cyclo pw(1);
      for (long long k = 0; k < order_; ++k) pw *= v;
      if (pw != one) throw std::invalid_argument("cocycle value is not a root of unity of the stated order");
      for (int c : elements_) {
        if (at(a, b) * at(parent.mul(a, b), c) != at(b, c) * at(a, parent.mul(b, c)))
          throw std::invalid_argument("cocycle identity fails");
      }
    }
}

Cocycle Cocycle::restricted_to(std::vector<int> sub) const {
  std::sort(sub.begin(), sub.end());
  std::vector<std::vector<Cyclo>> vals(sub.size(), std::vector<Cyclo>(sub.size()));
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < sub.size(); ++j) vals[i][j] = at(sub[i], sub[j]);
  return Cocycle(std::move(sub), order_, std::move(vals));
}

const Cyclo& ProjCharTable::value(std::size_t char_i, int g) const {
  return chars[char_i][cocycle.pos(g)];
}

ProjCharTable char_table(const FiniteGroup& parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  if (static_cast<int>(elements.size()) > kMaxCharTableOrder)
    throw std::invalid_argument("group order exceeds the character table bound");
  std::map<int, int> pos;
  FiniteGroup local = local_group(parent, elements, pos);
  ExactTable et = dixon(local);
  sort_table(et);
  ProjCharTable t{Cocycle::trivial_on(elements), std::move(et.chars), std::move(et.degrees)};
  validate_table(t);
  return t;
}

ProjCharTable proj_char_table(const FiniteGroup& parent, const Cocycle& c) {
  c.validate(parent);
  if (c.is_trivial()) {
    ProjCharTable t = char_table(parent, c.elements());
    return ProjCharTable{c, std::move(t.chars), std::move(t.degrees)};
  }
  long long n = c.order();
  const auto& elems = c.elements();
  int h = static_cast<int>(elems.size());
  if (n * h > kMaxCharTableOrder * 8)
    throw std::invalid_argument("covering group exceeds the character table bound");

  // exponents: a(a,b) = zeta_n^e(a,b)
  std::vector<Cyclo> zpow(n);
  for (long long k = 0; k < n; ++k) zpow[k] = Cyclo::zeta(n, k);
  std::vector<std::vector<long long>> expo(h, std::vector<long long>(h, -1));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      for (long long k = 0; k < n; ++k)
        if (c.at(elems[i], elems[j]) == zpow[k]) {
          expo[i][j] = k;
          break;
        }
      if (expo[i][j] < 0)
        throw std::invalid_argument("cocycle value is not a power of the defining root");
    }

  std::map<int, int> pos;
  FiniteGroup local = local_group(parent, elems, pos);

  // covering group Z_n x_a H; (t, x) is element t*h + x
  int nn = static_cast<int>(n);
  int big = nn * h;
  std::vector<std::vector<int>> table(big, std::vector<int>(big));
  for (int t1 = 0; t1 < nn; ++t1)
    for (int x1 = 0; x1 < h; ++x1)
      for (int t2 = 0; t2 < nn; ++t2)
        for (int x2 = 0; x2 < h; ++x2)
          table[t1 * h + x1][t2 * h + x2] =
              static_cast<int>((t1 + t2 + expo[x1][x2]) % nn) * h + local.mul(x1, x2);
  FiniteGroup cover = FiniteGroup::from_table_unchecked(std::move(table));

  ExactTable et = dixon(cover);
  Cyclo zn = Cyclo::zeta(n);
  ExactTable kept;
  for (std::size_t i = 0; i < et.chars.size(); ++i) {
    if (et.chars[i][h] != zn * et.chars[i][0]) continue;  // z = (1, identity)
    std::vector<Cyclo> vals(et.chars[i].begin(), et.chars[i].begin() + h);
    kept.chars.push_back(std::move(vals));
    kept.degrees.push_back(et.degrees[i]);
  }
  sort_table(kept);
  ProjCharTable t{c, std::move(kept.chars), std::move(kept.degrees)};
  validate_table(t);
  return t;
}

bool is_sigma_central(const FiniteGroup& parent, const Cocycle& c, int sigma) {
  if (!c.contains(sigma)) throw std::invalid_argument("sigma outside the subgroup");
  for (int k : c.elements())
    if (parent.mul(sigma, k) != parent.mul(k, sigma))
      throw std::invalid_argument("sigma is not central in the subgroup");
  for (int k : c.elements())
    if (c.at(sigma, k) != c.at(k, sigma)) return false;
  return true;
}

SigmaSplit sigma_split(const ProjCharTable& t, int sigma) {
  SigmaSplit s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Cyclo& v = t.value(i, sigma);
    if (v == Cyclo(t.degrees[i]))
      s.even.push_back(i);
    else if (v == -Cyclo(t.degrees[i]))
      s.odd.push_back(i);
    else
      throw std::invalid_argument("sigma-hat does not act by a sign on some irreducible");
  }
  return s;
}

Cocycle transport(const FiniteGroup& parent, const Cocycle& c, int k) {
  std::vector<int> moved;
  for (int a : c.elements()) moved.push_back(parent.conj(a, k));
  std::sort(moved.begin(), moved.end());
  std::map<int, int> newpos;
  for (int i = 0; i < static_cast<int>(moved.size()); ++i) newpos[moved[i]] = i;
  std::vector<std::vector<Cyclo>> vals(moved.size(), std::vector<Cyclo>(moved.size()));
  for (int a : c.elements())
    for (int b : c.elements())
      vals[newpos[parent.conj(a, k)]][newpos[parent.conj(b, k)]] = c.at(a, b);
  return Cocycle(std::move(moved), c.order(), std::move(vals));
}

ProjCharTable transport(const FiniteGroup& parent, const ProjCharTable& t, int k) {
  Cocycle moved = transport(parent, t.cocycle, k);
  std::vector<std::vector<Cyclo>> chars(t.size(), std::vector<Cyclo>(moved.elements().size()));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int a : t.elements()) chars[i][moved.pos(parent.conj(a, k))] = t.value(i, a);
  return ProjCharTable{std::move(moved), std::move(chars), t.degrees};
}

std::vector<std::vector<Cyclo>> induce_index2(const FiniteGroup& parent,
                                              const ProjCharTable& t,
                                              const Cocycle& h_cocycle, int k) {
  const auto& sub = t.elements();
  const auto& full = h_cocycle.elements();
  if (full.size() != 2 * sub.size())
    throw std::invalid_argument("induction requires an index-2 subgroup");
  for (int a : sub)
    if (!h_cocycle.contains(a))
      throw std::invalid_argument("subgroup is not contained in the full group");
  if (!h_cocycle.contains(k) || t.cocycle.contains(k))
    throw std::invalid_argument("coset representative must lie outside the subgroup");
  for (int a : sub)
    for (int b : sub)
      if (h_cocycle.at(a, b) != t.cocycle.at(a, b))
        throw std::invalid_argument("cocycle does not restrict to the table cocycle");

  std::vector<std::vector<Cyclo>> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<Cyclo> vals(full.size());
    for (std::size_t pidx = 0; pidx < full.size(); ++pidx) {
      int g = full[pidx];
      Cyclo acc;
      for (int x : {0, k}) {
        int moved = parent.conj(g, x);
        if (!t.cocycle.contains(moved)) continue;
        acc += h_cocycle.at(g, x) / h_cocycle.at(x, moved) * t.value(i, moved);
      }
      vals[pidx] = acc;
    }
    out.push_back(std::move(vals));
  }
  return out;
}

std::map<std::size_t, long long> tensor_decompose(const ProjCharTable& t,
                                                  std::size_t lam, std::size_t mu) {
  if (!t.cocycle.is_trivial())
    throw std::invalid_argument("tensor decomposition needs an ordinary table");
  long long n = static_cast<long long>(t.elements().size());
  std::map<std::size_t, long long> mult;
  long long dimsum = 0;
  for (std::size_t g = 0; g < t.size(); ++g) {
    Cyclo ip;
    for (std::size_t e = 0; e < t.elements().size(); ++e)
      ip += t.chars[lam][e] * t.chars[mu][e] * t.chars[g][e].conj();
    ip = ip / Cyclo(n);
    auto r = ip.rational_value();
    if (!r || denominator(*r) != 1 || *r < 0)
      throw std::invalid_argument("character inner product is not a nonnegative integer");
    long long m = numerator(*r).convert_to<long long>();
    if (m > 0) mult[g] = m;
    dimsum += m * t.degrees[g];
  }
  if (dimsum != t.degrees[lam] * t.degrees[mu])
    throw std::logic_error("tensor decomposition dimensions do not add up");
  return mult;
}

std::size_t trivial_char_index(const ProjCharTable& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool all_one = true;
    for (auto& v : t.chars[i])
      if (v != Cyclo(1)) {
        all_one = false;
        break;
      }
    if (all_one) return i;
  }
  throw std::invalid_argument("table has no trivial character");
}

}  // namespace superorb
