#include "superorb/orbifold.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace superorb {

namespace {

using Mat = std::vector<std::vector<Cyclo>>;

bool contains_sorted(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// ascending least representatives of the right cosets sub\G
std::vector<int> right_transversal(const FiniteGroup& G, const std::vector<int>& sub) {
  std::vector<char> seen(static_cast<std::size_t>(G.order()), 0);
  std::vector<int> ks;
  for (int k = 0; k < G.order(); ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    ks.push_back(k);
    for (int t : sub) seen[static_cast<std::size_t>(G.mul(t, k))] = 1;
  }
  return ks;
}

bool is_abelian(const FiniteGroup& G) {
  for (int a = 0; a < G.order(); ++a)
    for (int b = a + 1; b < G.order(); ++b)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

Cyclo block_entry(const TwistedDatum::BlockView& view, int row_rep, int col_rep) {
  auto r = std::find(view.rows.begin(), view.rows.end(), row_rep);
  auto c = std::find(view.cols.begin(), view.cols.end(), col_rep);
  if (r == view.rows.end() || c == view.cols.end())
    throw std::runtime_error("sector block has no entry for the requested labels");
  return view.entries[static_cast<std::size_t>(r - view.rows.begin())]
                     [static_cast<std::size_t>(c - view.cols.begin())];
}

Cyclo fetch(const TwistedDatum& d, int g, int h, int row_rep, int col_rep) {
  return block_entry(d.sblock(g, h), row_rep, col_rep);
}

std::vector<IrredLabel> labels_for(const TwistedDatum& d,
                                   const std::vector<OrbitInfo>& orbits) {
  std::vector<IrredLabel> out;
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (std::size_t c = 0; c < orbits[o].chars.size(); ++c)
      out.push_back(IrredLabel{static_cast<int>(o), c,
                               d.char_weight(orbits[o].rep, c),
                               qdim_fixed(d, orbits[o].rep, c)});
  return out;
}

std::vector<std::size_t> label_offsets(const std::vector<OrbitInfo>& orbits) {
  std::vector<std::size_t> off(orbits.size() + 1, 0);
  for (std::size_t o = 0; o < orbits.size(); ++o)
    off[o + 1] = off[o] + orbits[o].chars.size();
  return off;
}

// One kept coset term of the S-matrix sum for an orbit pair: the characters
// are evaluated at la and mb, the block pair is (g,h) and the column label is
// the super representative of the transported module.
struct Term {
  int la = 0;
  int mb = 0;
  int g = 0;
  int h = 0;
  int col = 0;
};

// Kept coset representatives with both character arguments inside the plain
// stabilizers; terms annihilated by extending a character by zero are counted
// into *zero_ext and dropped.
std::vector<Term> pair_terms(const TwistedDatum& d, const OrbitInfo& oi,
                             const OrbitInfo& oj, long long* zero_ext) {
  const FiniteGroup& G = d.group();
  int sigma = d.sigma();
  std::vector<int> tilde_i = d.super_stabilizer(oi.rep);
  std::vector<int> tilde_j = d.super_stabilizer(oj.rep);
  std::vector<Term> terms;
  for (int k : right_transversal(G, tilde_j)) {
    int gj_k = G.conj(oj.g, k);
    if (!contains_sorted(tilde_i, gj_k)) continue;
    int gi_k = G.mul(G.mul(k, oi.g), G.inv(k));
    if (!contains_sorted(tilde_j, gi_k)) continue;
    int la = G.mul(sigma, gj_k);
    int mb = G.mul(sigma, G.mul(G.mul(k, G.inv(oi.g)), G.inv(k)));
    if (!contains_sorted(oi.stabilizer, la) ||
        !contains_sorted(oj.stabilizer, mb)) {
      ++*zero_ext;
      continue;
    }
    terms.push_back(Term{la, mb, oi.g, gj_k, d.super_rep(d.act(oj.rep, k))});
  }
  return terms;
}

bool any_char_nonzero(const ProjCharTable& t, int g) {
  for (std::size_t c = 0; c < t.size(); ++c)
    if (!t.value(c, g).is_zero()) return true;
  return false;
}

Mat s_general(const TwistedDatum& d, const std::vector<OrbitInfo>& orbits,
              long long* zero_ext) {
  std::size_t no = orbits.size();
  std::vector<std::size_t> off = label_offsets(orbits);
  std::vector<std::vector<std::vector<Term>>> terms(
      no, std::vector<std::vector<Term>>(no));
  for (std::size_t i = 0; i < no; ++i)
    for (std::size_t j = 0; j < no; ++j)
      terms[i][j] = pair_terms(d, orbits[i], orbits[j], zero_ext);

  // every block a nonzero term can touch must be present before any entry
  // gets computed
  std::set<std::pair<int, int>> missing;
  for (std::size_t i = 0; i < no; ++i)
    for (std::size_t j = 0; j < no; ++j)
      for (const Term& t : terms[i][j])
        if (any_char_nonzero(orbits[i].chars, t.la) &&
            any_char_nonzero(orbits[j].chars, t.mb) &&
            !d.sblock_reachable(t.g, t.h))
          missing.insert({t.g, t.h});
  if (!missing.empty()) {
    std::ostringstream os;
    os << "missing S-matrix blocks for commuting pairs:";
    for (const auto& [g, h] : missing) os << " (" << g << "," << h << ")";
    throw std::runtime_error(os.str());
  }

  std::map<std::pair<int, int>, TwistedDatum::BlockView> cache;
  auto view_of = [&](int g, int h) -> const TwistedDatum::BlockView& {
    auto it = cache.find({g, h});
    if (it == cache.end()) it = cache.emplace(std::make_pair(g, h), d.sblock(g, h)).first;
    return it->second;
  };

  std::size_t n = off[no];
  Mat S(n, std::vector<Cyclo>(n));
  for (std::size_t i = 0; i < no; ++i) {
    const OrbitInfo& oi = orbits[i];
    int row_rep = d.super_rep(oi.rep);
    for (std::size_t j = 0; j < no; ++j) {
      const OrbitInfo& oj = orbits[j];
      Rational pref(oj.a, static_cast<long long>(oi.a) *
                              static_cast<long long>(oi.stabilizer.size()));
      for (std::size_t lam = 0; lam < oi.chars.size(); ++lam) {
        for (std::size_t mu = 0; mu < oj.chars.size(); ++mu) {
          Cyclo sum;
          for (const Term& t : terms[i][j]) {
            Cyclo cl = oi.chars.value(lam, t.la).conj();
            if (cl.is_zero()) continue;
            Cyclo cm = oj.chars.value(mu, t.mb);
            if (cm.is_zero()) continue;
            sum = sum + block_entry(view_of(t.g, t.h), row_rep, t.col) * cl * cm;
          }
          S[off[i] + lam][off[j] + mu] = pref * sum;
        }
      }
    }
  }
  return S;
}

// Abelian specialization: conjugation is trivial, so the keep conditions and
// both character arguments are independent of the coset representative and
// the sum collapses onto a row sum of the single block (g_i, g_j).
Mat s_abelian_impl(const TwistedDatum& d, const std::vector<OrbitInfo>& orbits) {
  const FiniteGroup& G = d.group();
  if (!is_abelian(G))
    throw std::invalid_argument("abelian S-matrix specialization needs an abelian group");
  int sigma = d.sigma();
  std::size_t no = orbits.size();
  std::vector<std::size_t> off = label_offsets(orbits);
  std::size_t n = off[no];
  Mat S(n, std::vector<Cyclo>(n));
  for (std::size_t i = 0; i < no; ++i) {
    const OrbitInfo& oi = orbits[i];
    int row_rep = d.super_rep(oi.rep);
    std::vector<int> tilde_i = d.super_stabilizer(oi.rep);
    for (std::size_t j = 0; j < no; ++j) {
      const OrbitInfo& oj = orbits[j];
      std::vector<int> tilde_j = d.super_stabilizer(oj.rep);
      if (!contains_sorted(tilde_i, oj.g) || !contains_sorted(tilde_j, oi.g)) continue;
      int la = G.mul(sigma, oj.g);
      int mb = G.mul(sigma, G.inv(oi.g));
      if (!contains_sorted(oi.stabilizer, la) ||
          !contains_sorted(oj.stabilizer, mb))
        continue;
      if (!any_char_nonzero(oi.chars, la) || !any_char_nonzero(oj.chars, mb)) continue;
      TwistedDatum::BlockView view = d.sblock(oi.g, oj.g);
      Cyclo bsum;
      for (int k : right_transversal(G, tilde_j))
        bsum = bsum + block_entry(view, row_rep, d.super_rep(d.act(oj.rep, k)));
      Rational pref(oj.a, static_cast<long long>(oi.a) *
                              static_cast<long long>(oi.stabilizer.size()));
      for (std::size_t lam = 0; lam < oi.chars.size(); ++lam)
        for (std::size_t mu = 0; mu < oj.chars.size(); ++mu)
          S[off[i] + lam][off[j] + mu] =
              pref * oi.chars.value(lam, la).conj() * oj.chars.value(mu, mb) * bsum;
    }
  }
  return S;
}

std::vector<Cyclo> t_for(const TwistedDatum& d, const std::vector<IrredLabel>& labels) {
  Rational c24 = d.central_charge() / 24;
  std::vector<Cyclo> out;
  out.reserve(labels.size());
  for (const IrredLabel& l : labels) out.push_back(Cyclo::root_of_unity(l.weight - c24));
  return out;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  std::size_t n = A.size();
  Mat C(n, std::vector<Cyclo>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (A[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        C[i][j] = C[i][j] + A[i][k] * B[k][j];
    }
  return C;
}

std::string cell(const Cyclo& v) { return v.str(); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::vector<OrbitInfo> classify(const TwistedDatum& d) {
  const FiniteGroup& G = d.group();
  std::vector<OrbitInfo> out;
  for (const auto& orbit : d.orbits()) {
    int rep = d.orbit_rep(orbit.front());
    bool stable = d.modules()[static_cast<std::size_t>(rep)].sigma_stable;
    JClass jc = JClass::J1;
    if (stable)
      jc = is_sigma_central(G, d.cocycle_of(rep), d.sigma()) ? JClass::J2 : JClass::J3;
    out.push_back(OrbitInfo{rep,
                            G.mul(d.sigma(), d.modules()[static_cast<std::size_t>(rep)].twist),
                            d.stabilizer(rep), d.char_table_of(rep), jc,
                            stable ? 1 : 2});
  }
  std::sort(out.begin(), out.end(),
            [](const OrbitInfo& a, const OrbitInfo& b) { return a.rep < b.rep; });
  return out;
}

std::vector<IrredLabel> irreducibles(const TwistedDatum& d) {
  return labels_for(d, classify(d));
}

std::vector<BarRep> bar_structure(const TwistedDatum& d) {
  std::vector<BarRep> out;
  std::vector<OrbitInfo> orbits = classify(d);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const OrbitInfo& info = orbits[o];
    const std::string& id = d.modules()[static_cast<std::size_t>(info.rep)].id;
    int orbit = static_cast<int>(o);
    switch (info.j_class) {
      case JClass::J1:
        out.push_back(BarRep{orbit, id, d.super_stabilizer(info.rep), 1});
        break;
      case JClass::J2:
        out.push_back(BarRep{orbit, id + "_0", info.stabilizer, 1});
        out.push_back(BarRep{orbit, id + "_1", info.stabilizer, 1});
        break;
      case JClass::J3: {
        const Cocycle& a = d.cocycle_of(info.rep);
        std::vector<int> even;
        for (int h : a.elements())
          if (a.at(d.sigma(), h) == a.at(h, d.sigma())) even.push_back(h);
        out.push_back(BarRep{orbit, id + "_0", std::move(even), 2});
        break;
      }
    }
  }
  return out;
}

Cyclo qdim_twisted_super(const TwistedDatum& d, int module) {
  const FiniteGroup& G = d.group();
  int s = d.super_rep(module);
  int g = G.mul(d.sigma(), d.modules()[static_cast<std::size_t>(module)].twist);
  int vs = d.super_rep(d.vacuum());
  return fetch(d, g, d.sigma(), s, vs) / fetch(d, d.sigma(), d.sigma(), vs, vs);
}

Cyclo qdim_twisted(const TwistedDatum& d, int module) {
  Cyclo q = qdim_twisted_super(d, module);
  if (!d.modules()[static_cast<std::size_t>(module)].sigma_stable)
    q = Rational(1, 2) * q;
  return q;
}

Cyclo qdim_fixed(const TwistedDatum& d, int rep, std::size_t chr) {
  const ProjCharTable& t = d.char_table_of(rep);
  long long index = d.group().order() / static_cast<long long>(d.stabilizer(rep).size());
  return Rational(index) * Rational(t.degrees[chr]) * qdim_twisted(d, rep);
}

GlobalDims global_dims(const TwistedDatum& d) {
  GlobalDims out;
  int vs = d.super_rep(d.vacuum());
  Cyclo inv = Cyclo(Rational(1)) / fetch(d, d.sigma(), d.sigma(), vs, vs);
  out.glob_v = inv * inv;
  std::map<int, Cyclo> tw;
  for (std::size_t m = 0; m < d.modules().size(); ++m) {
    Cyclo q = qdim_twisted(d, static_cast<int>(m));
    Cyclo& slot = tw[d.modules()[m].twist];
    slot = slot + q * q;
  }
  out.twisted_sums.assign(tw.begin(), tw.end());
  std::map<int, Cyclo> fx;
  Cyclo total;
  for (const OrbitInfo& info : classify(d)) {
    int t = d.modules()[static_cast<std::size_t>(info.rep)].twist;
    for (std::size_t c = 0; c < info.chars.size(); ++c) {
      Cyclo q = qdim_fixed(d, info.rep, c);
      Cyclo& slot = fx[t];
      slot = slot + q * q;
      total = total + q * q;
    }
  }
  out.fixed_sums.assign(fx.begin(), fx.end());
  out.glob_vg = total;
  return out;
}

std::vector<std::vector<Cyclo>> s_matrix(const TwistedDatum& d) {
  long long zero_ext = 0;
  return s_general(d, classify(d), &zero_ext);
}

std::vector<std::vector<Cyclo>> s_matrix_abelian(const TwistedDatum& d) {
  return s_abelian_impl(d, classify(d));
}

std::vector<Cyclo> t_matrix(const TwistedDatum& d) {
  return t_for(d, irreducibles(d));
}

std::vector<std::vector<std::vector<long long>>> fusion_vacuum(const TwistedDatum& d) {
  const ProjCharTable& t = d.char_table_of(d.orbit_rep(d.vacuum()));
  std::size_t n = t.size();
  std::vector<std::vector<std::vector<long long>>> table(
      n, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0)));
  for (std::size_t lam = 0; lam < n; ++lam)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (const auto& [gam, m] : tensor_decompose(t, lam, mu)) table[lam][mu][gam] = m;
  return table;
}

VerlindeResult verlinde(const std::vector<std::vector<Cyclo>>& S, std::size_t vacuum) {
  std::size_t n = S.size();
  VerlindeResult out;
  out.integral = true;
  out.n.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  for (std::size_t x = 0; x < n; ++x) {
    if (S[vacuum][x].is_zero()) {
      out.integral = false;
      out.witness = "vacuum row vanishes at column " + std::to_string(x);
      return out;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Cyclo acc;
        for (std::size_t x = 0; x < n; ++x)
          acc = acc + S[a][x] * S[b][x] * S[c][x].conj() / S[vacuum][x];
        auto r = acc.rational_value();
        bool ok = r.has_value() && denominator(*r) == 1 && *r >= 0;
        if (!ok && out.integral) {
          out.integral = false;
          out.witness = "N[" + std::to_string(a) + "][" + std::to_string(b) + "][" +
                        std::to_string(c) + "] = " + acc.str();
        }
        if (r.has_value()) out.n[a][b][c] = *r;
      }
  return out;
}

OrbifoldResult compute(const TwistedDatum& d) {
  const FiniteGroup& G = d.group();
  OrbifoldResult r;
  r.orbits = classify(d);
  r.irreducibles = labels_for(d, r.orbits);
  r.bar = bar_structure(d);
  r.glob = global_dims(d);
  r.S = s_general(d, r.orbits, &r.zero_extension_terms);
  r.T = t_for(d, r.irreducibles);
  r.fusion = fusion_vacuum(d);

  std::vector<std::size_t> off = label_offsets(r.orbits);
  std::size_t n = r.irreducibles.size();
  std::size_t vo = 0;
  int vrep = d.orbit_rep(d.vacuum());
  while (r.orbits[vo].rep != vrep) ++vo;
  const ProjCharTable& vt = r.orbits[vo].chars;
  r.vacuum_label = off[vo] + trivial_char_index(vt);

  auto label_name = [&](std::size_t a) {
    const IrredLabel& l = r.irreducibles[a];
    return d.modules()[static_cast<std::size_t>(r.orbits[static_cast<std::size_t>(l.orbit)].rep)].id +
           ":" + std::to_string(l.chr);
  };
  auto add = [&](const std::string& name, bool pass, const std::string& witness) {
    r.checks.push_back(CheckResult{name, pass, witness});
  };

  {
    std::vector<std::string> counts = d.count_report();
    add("count_invariance", counts.empty(), join(counts, "; "));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t a = 0; a < n && ok; ++a) {
      const Cyclo& q = r.irreducibles[a].qdim;
      if (!(q.conj() == q) || q.embed().real() <= 1e-9) {
        ok = false;
        w = label_name(a) + " qdim " + q.str() + " is not positive real";
      }
    }
    if (ok && !(r.irreducibles[r.vacuum_label].qdim == Cyclo(Rational(1)))) {
      ok = false;
      w = "vacuum qdim " + r.irreducibles[r.vacuum_label].qdim.str();
    }
    add("qdim_positive", ok, w);
  }

  {
    long long o = G.order();
    Cyclo expect = Rational(o * o) * r.glob.glob_v;
    add("glob_identity", r.glob.glob_vg == expect,
        "sum of squared qdims " + r.glob.glob_vg.str() + " vs |G|^2 Glob(V) = " +
            expect.str());
  }

  {
    bool ok = true;
    std::string w;
    for (const auto& [g, sum] : r.glob.twisted_sums)
      if (!(sum == r.glob.glob_v)) {
        ok = false;
        w = "twist " + std::to_string(g) + " sum " + sum.str() + " vs Glob(V) = " +
            r.glob.glob_v.str();
        break;
      }
    add("sector_sums_twisted", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    Cyclo expect = Rational(G.order()) * r.glob.glob_v;
    for (const auto& [g, sum] : r.glob.fixed_sums)
      if (!(sum == expect)) {
        ok = false;
        w = "twist " + std::to_string(g) + " sum " + sum.str() +
            " vs Glob(V^G)/|G| = " + expect.str();
        break;
      }
    add("sector_sums_fixed", ok, w);
  }

  {
    long long j1 = 0, j2 = 0, j3 = 0;
    for (const OrbitInfo& info : r.orbits) {
      if (info.j_class == JClass::J1) ++j1;
      if (info.j_class == JClass::J2) ++j2;
      if (info.j_class == JClass::J3) ++j3;
    }
    long long want = j1 + 2 * j2 + j3;
    add("bar_count", static_cast<long long>(r.bar.size()) == want,
        std::to_string(r.bar.size()) + " bar representatives vs " + std::to_string(want));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (!(r.S[i][j] == r.S[j][i])) {
          ok = false;
          w = "S[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
              r.S[i][j].str() + " vs transpose " + r.S[j][i].str();
        }
    add("s_symmetric", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        Cyclo acc;
        for (std::size_t x = 0; x < n; ++x) acc = acc + r.S[a][x] * r.S[b][x].conj();
        Cyclo want = a == b ? Cyclo(Rational(1)) : Cyclo();
        if (!(acc == want)) {
          ok = false;
          w = "(S S*)[" + std::to_string(a) + "][" + std::to_string(b) + "] = " + acc.str();
        }
      }
    add("s_unitary", ok, w);
  }

  Mat S2 = mat_mul(r.S, r.S);
  {
    bool ok = true;
    std::string w;
    std::vector<char> hit(n, 0);
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::size_t ones = 0, image = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (S2[i][j].is_zero()) continue;
        if (!(S2[i][j] == Cyclo(Rational(1)))) {
          ok = false;
          w = "S^2[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + S2[i][j].str();
          break;
        }
        ++ones;
        image = j;
      }
      if (!ok) break;
      if (ones != 1 || hit[image]) {
        ok = false;
        w = "row " + std::to_string(i) + " of S^2 is not a permutation row";
        break;
      }
      hit[image] = 1;
    }
    if (ok && !(S2[r.vacuum_label][r.vacuum_label] == Cyclo(Rational(1)))) {
      ok = false;
      w = "S^2 moves the vacuum";
    }
    add("s_squared_permutation", ok, w);
  }

  {
    Mat U(n, std::vector<Cyclo>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) U[i][j] = r.S[i][j] * r.T[j];
    Mat U3 = mat_mul(mat_mul(U, U), U);
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (!(U3[i][j] == S2[i][j])) {
          ok = false;
          w = "(ST)^3[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
              U3[i][j].str() + " vs S^2 entry " + S2[i][j].str();
        }
    add("st_cubed", ok, w);
  }

  {
    // closed form of the vacuum columns; a mismatch here is the symptom of an
    // inconsistent lift normalization in the input blocks, so the witness
    // carries both candidate values
    bool ok = true;
    std::string w;
    int vsuper = d.super_rep(d.vacuum());
    for (std::size_t i = 0; i < r.orbits.size() && ok; ++i) {
      const OrbitInfo& oi = r.orbits[i];
      Cyclo transfer = fetch(d, oi.g, d.sigma(), d.super_rep(oi.rep), vsuper);
      int arg = G.mul(d.sigma(), G.inv(oi.g));
      for (std::size_t lam = 0; lam < oi.chars.size() && ok; ++lam) {
        Cyclo base = Rational(oi.chars.degrees[lam],
                              static_cast<long long>(oi.a) *
                                  static_cast<long long>(oi.stabilizer.size())) *
                     transfer;
        for (std::size_t gam = 0; gam < vt.size() && ok; ++gam) {
          Cyclo closed = base * vt.value(gam, arg);
          const Cyclo& got = r.S[off[i] + lam][off[vo] + gam];
          if (!(got == closed)) {
            ok = false;
            w = "S[" + label_name(off[i] + lam) + "][" + label_name(off[vo] + gam) +
                "] engine " + got.str() + " vs closed form " + closed.str();
          }
        }
      }
    }
    add("vacuum_column", ok, w);
  }

  VerlindeResult v = verlinde(r.S, r.vacuum_label);
  add("verlinde_integrality", v.integral, v.witness);

  {
    bool ok = v.integral;
    std::string w = ok ? "" : "skipped, verlinde numbers not integral";
    std::size_t nv = vt.size();
    for (std::size_t lam = 0; lam < nv && ok; ++lam)
      for (std::size_t mu = 0; mu < nv && ok; ++mu)
        for (std::size_t c = 0; c < n && ok; ++c) {
          Rational want(0);
          if (c >= off[vo] && c < off[vo] + nv)
            want = Rational(r.fusion[lam][mu][c - off[vo]]);
          if (v.n[off[vo] + lam][off[vo] + mu][c] != want) {
            ok = false;
            w = "verlinde and character fusion disagree at (" + std::to_string(lam) +
                "," + std::to_string(mu) + ") -> " + label_name(c);
          }
        }
    add("vacuum_fusion_match", ok, w);
  }

  {
    if (is_abelian(G)) {
      Mat A = s_abelian_impl(d, r.orbits);
      bool ok = true;
      std::string w;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j)
          if (!(A[i][j] == r.S[i][j])) {
            ok = false;
            w = "abelian specialization differs at [" + std::to_string(i) + "][" +
                std::to_string(j) + "]: " + A[i][j].str() + " vs " + r.S[i][j].str();
          }
      add("abelian_cross_check", ok, w);
    } else {
      add("abelian_cross_check", true, "group is nonabelian, specialization skipped");
    }
  }

  add("zero_extension_terms", true,
      std::to_string(r.zero_extension_terms) + " coset terms annihilated by zero extension");

  return r;
}

nlohmann::ordered_json report_json(const OrbifoldResult& r, const TwistedDatum& d) {
  nlohmann::ordered_json j;
  auto name_of = [&](const IrredLabel& l) {
    return d.modules()[static_cast<std::size_t>(
                           r.orbits[static_cast<std::size_t>(l.orbit)].rep)].id +
           ":" + std::to_string(l.chr);
  };
  nlohmann::ordered_json irr = nlohmann::ordered_json::array();
  for (const IrredLabel& l : r.irreducibles)
    irr.push_back({{"label", name_of(l)},
                   {"orbit", l.orbit},
                   {"char", static_cast<int>(l.chr)},
                   {"weight", rational_str(l.weight)},
                   {"qdim", l.qdim.str()}});
  j["irreducibles"] = irr;

  nlohmann::ordered_json qd = nlohmann::ordered_json::array();
  for (const IrredLabel& l : r.irreducibles) qd.push_back(l.qdim.str());
  j["qdims"] = qd;

  nlohmann::ordered_json glob;
  glob["v"] = r.glob.glob_v.str();
  glob["vg"] = r.glob.glob_vg.str();
  nlohmann::ordered_json ts = nlohmann::ordered_json::array();
  for (const auto& [g, sum] : r.glob.twisted_sums)
    ts.push_back({{"twist", g}, {"sum", sum.str()}});
  glob["twisted_sums"] = ts;
  nlohmann::ordered_json fs = nlohmann::ordered_json::array();
  for (const auto& [g, sum] : r.glob.fixed_sums)
    fs.push_back({{"twist", g}, {"sum", sum.str()}});
  glob["fixed_sums"] = fs;
  j["glob"] = glob;

  nlohmann::ordered_json srows = nlohmann::ordered_json::array();
  for (const auto& row : r.S) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const Cyclo& v : row) cells.push_back(v.str());
    srows.push_back(std::move(cells));
  }
  j["S"] = srows;

  nlohmann::ordered_json tdiag = nlohmann::ordered_json::array();
  for (const Cyclo& v : r.T) tdiag.push_back(v.str());
  j["T"] = tdiag;

  nlohmann::ordered_json fusion;
  nlohmann::ordered_json flabels = nlohmann::ordered_json::array();
  std::size_t vo = 0;
  while (r.orbits[vo].rep != d.orbit_rep(d.vacuum())) ++vo;
  const std::string vid = d.modules()[static_cast<std::size_t>(r.orbits[vo].rep)].id;
  for (std::size_t c = 0; c < r.fusion.size(); ++c)
    flabels.push_back(vid + ":" + std::to_string(c));
  fusion["labels"] = flabels;
  fusion["table"] = r.fusion;
  j["fusion"] = fusion;

  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  j["checks"] = checks;
  return j;
}

std::string report_table(const OrbifoldResult& r, const TwistedDatum& d) {
  std::ostringstream os;
  auto name_of = [&](const IrredLabel& l) {
    return d.modules()[static_cast<std::size_t>(
                           r.orbits[static_cast<std::size_t>(l.orbit)].rep)].id +
           ":" + std::to_string(l.chr);
  };
  std::size_t wname = 5, wweight = 6;
  for (const IrredLabel& l : r.irreducibles) {
    wname = std::max(wname, name_of(l).size());
    wweight = std::max(wweight, rational_str(l.weight).size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  os << pad("label", wname) << "  " << pad("weight", wweight) << "  qdim\n";
  for (const IrredLabel& l : r.irreducibles)
    os << pad(name_of(l), wname) << "  " << pad(rational_str(l.weight), wweight) << "  "
       << l.qdim.str() << "\n";
  os << "glob(V) = " << r.glob.glob_v.str() << ", glob(V^G) = " << r.glob.glob_vg.str()
     << "\n";

  std::size_t wcell = 1;
  for (const auto& row : r.S)
    for (const Cyclo& v : row) wcell = std::max(wcell, cell(v).size());
  os << "S:\n";
  for (const auto& row : r.S) {
    os << " ";
    for (const Cyclo& v : row) os << " " << pad(cell(v), wcell);
    os << "\n";
  }
  os << "T:\n ";
  for (const Cyclo& v : r.T) os << " " << v.str();
  os << "\n";

  os << "fusion (vacuum sector):\n";
  std::size_t vo = 0;
  while (r.orbits[vo].rep != d.orbit_rep(d.vacuum())) ++vo;
  const std::string vid = d.modules()[static_cast<std::size_t>(r.orbits[vo].rep)].id;
  auto vname = [&](std::size_t c) { return vid + ":" + std::to_string(c); };
  for (std::size_t lam = 0; lam < r.fusion.size(); ++lam)
    for (std::size_t mu = 0; mu < r.fusion.size(); ++mu) {
      std::vector<std::string> parts;
      for (std::size_t gam = 0; gam < r.fusion.size(); ++gam) {
        long long m = r.fusion[lam][mu][gam];
        if (m == 0) continue;
        parts.push_back((m == 1 ? "" : std::to_string(m) + " ") + vname(gam));
      }
      os << "  " << vname(lam) << " x " << vname(mu) << " = "
         << (parts.empty() ? "0" : join(parts, " + ")) << "\n";
    }

  os << "checks:\n";
  std::size_t wcheck = 1;
  for (const CheckResult& c : r.checks) wcheck = std::max(wcheck, c.name.size());
  for (const CheckResult& c : r.checks) {
    os << "  " << pad(c.name, wcheck) << "  " << (c.pass ? "pass" : "FAIL");
    if (!c.witness.empty()) os << "  " << c.witness;
    os << "\n";
  }
  return os.str();
}

}  // namespace superorb
