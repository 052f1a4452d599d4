#include "superorb/qseries.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace superorb {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);

void require_upper(Complex tau) {
  if (!(tau.imag() > 0))
    throw std::invalid_argument("qseries: tau not in the upper half-plane");
}

// q^e with q = exp(2 pi i tau)
Complex qpow(Complex tau, double e) {
  return std::exp(kI * (2.0 * kPi * e) * tau);
}

// prod_{n>=0} (1 + sign * p * r^n), |r| < 1; stops once the remaining
// log-factors are bounded below 1e-17
Complex product_one_plus(Complex p, Complex r, double sign) {
  double ar = std::abs(r);
  Complex prod(1.0);
  Complex term = p;
  for (long n = 0;; ++n) {
    prod *= 1.0 + sign * term;
    if (std::abs(term) * ar / (1.0 - ar) < 1e-17) break;
    if (n > 400000) throw std::runtime_error("qseries: product did not converge");
    term *= r;
  }
  return prod;
}

int model_order(const std::string& model) {
  if (model == "fermion") return 2;
  if (model == "lattice_a1") return 4;
  throw std::invalid_argument("qseries: unknown model " + model);
}

// one Majorana factor: t = twisting sign on the fermion, s = insertion sign
Complex majorana_factor(int t, int s, Complex tau) {
  if (t > 0) return s > 0 ? weber_f(tau) : weber_f1(tau);
  if (s > 0) return std::sqrt(2.0) * weber_f2(tau);
  return Complex(0);  // integer-moded supertrace cancels level by level
}

struct Lsq {
  std::vector<std::vector<Complex>> rows;  // [sample][row] transformed values
  std::vector<std::vector<Complex>> cols;  // [sample][col] image sector values
};

// least squares for S with rows(k) = S * cols(k), via normal equations
SBlockFit solve_lsq(const Lsq& sys) {
  std::size_t k = sys.cols.size(), nc = sys.cols[0].size(),
              nr = sys.rows[0].size();
  std::vector<std::vector<Complex>> g(nc, std::vector<Complex>(nc, 0.0));
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        g[i][j] += std::conj(sys.cols[s][i]) * sys.cols[s][j];

  // invert g by Gauss-Jordan with partial pivoting
  std::vector<std::vector<Complex>> inv(nc, std::vector<Complex>(nc, 0.0));
  for (std::size_t i = 0; i < nc; ++i) inv[i][i] = 1.0;
  auto work = g;
  for (std::size_t col = 0; col < nc; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < nc; ++r)
      if (std::abs(work[r][col]) > std::abs(work[piv][col])) piv = r;
    std::swap(work[col], work[piv]);
    std::swap(inv[col], inv[piv]);
    if (std::abs(work[col][col]) < 1e-300)
      throw std::runtime_error("qseries: singular sample system");
    Complex d = work[col][col];
    for (std::size_t j = 0; j < nc; ++j) {
      work[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < nc; ++r) {
      if (r == col) continue;
      Complex m = work[r][col];
      for (std::size_t j = 0; j < nc; ++j) {
        work[r][j] -= m * work[col][j];
        inv[r][j] -= m * inv[col][j];
      }
    }
  }
  double ng = 0, ni = 0;
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      ng += std::norm(g[i][j]);
      ni += std::norm(inv[i][j]);
    }
  double condition = std::sqrt(ng) * std::sqrt(ni);
  if (condition > 1e10)
    throw std::runtime_error("qseries: ill-conditioned sample system, condition " +
                             std::to_string(condition));

  SBlockFit fit;
  fit.condition = condition;
  fit.entries.assign(nr, std::vector<Complex>(nc, 0.0));
  for (std::size_t r = 0; r < nr; ++r) {
    std::vector<Complex> rhs(nc, 0.0);
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t i = 0; i < nc; ++i)
        rhs[i] += std::conj(sys.cols[s][i]) * sys.rows[s][r];
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        fit.entries[r][i] += inv[i][j] * rhs[j];
  }
  fit.residual = 0;
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t r = 0; r < nr; ++r) {
      Complex acc(0);
      for (std::size_t j = 0; j < nc; ++j)
        acc += fit.entries[r][j] * sys.cols[s][j];
      fit.residual = std::max(fit.residual, std::abs(acc - sys.rows[s][r]));
    }
  return fit;
}

const std::array<double, 5> kSampleYs = {0.7, 0.85, 1.0, 1.15, 1.3};

SBlockFit fit_transform(const std::function<std::vector<Complex>(Complex)>& row_chars,
                        const std::function<std::vector<Complex>(Complex)>& col_chars) {
  Lsq sys;
  for (double y : kSampleYs) {
    Complex tau(0, y);
    sys.rows.push_back(row_chars(-1.0 / tau));
    sys.cols.push_back(col_chars(tau));
  }
  return solve_lsq(sys);
}

// factor (1 + x^m) folded into a truncated integer series
void fold_factor(std::vector<long long>& c, int m) {
  for (int k = static_cast<int>(c.size()) - 1; k >= m; --k) c[k] += c[k - m];
}

Cyclo recognize_entry(Complex z) {
  auto rr = Cyclo::recognize(z, 8, 1e-9, 64);
  if (rr.status != Cyclo::Recog::ok)
    throw std::runtime_error("fixture: S-entry not recognized: (" +
                             std::to_string(z.real()) + ", " +
                             std::to_string(z.imag()) + ")");
  return rr.value;
}

using nlohmann::ordered_json;

ordered_json module_entry(const std::string& id, int twist, const std::string& w,
                          bool stable) {
  return {{"id", id}, {"twist", twist}, {"weight", w}, {"sigma_stable", stable}};
}

ordered_json cocycle_entry(int rep, const std::vector<int>& subgroup, long long n,
                           const std::vector<std::vector<long long>>& exps) {
  return {{"rep", rep}, {"subgroup", subgroup}, {"n", n}, {"exponents", exps}};
}

ordered_json weight_entry(int rep, int chr, const std::string& w) {
  return {{"rep", rep}, {"char", chr}, {"weight", w}};
}

struct BlockPlan {
  int g, h;
  std::vector<std::string> rows, cols;
};

ordered_json recognized_block(const std::string& model, const BlockPlan& plan) {
  SBlockFit fit = numeric_sblock(model, plan.g, plan.h);
  ordered_json entries = ordered_json::array();
  for (auto& row : fit.entries) {
    ordered_json r = ordered_json::array();
    for (Complex z : row) r.push_back(recognize_entry(z).str());
    entries.push_back(r);
  }
  return {{"g", plan.g}, {"h", plan.h}, {"rows", plan.rows},
          {"cols", plan.cols}, {"entries", entries}};
}

ordered_json fermion_doc() {
  ordered_json doc;
  doc["group"] = {{"order", 2},
                  {"mul", ordered_json::array({{0, 1}, {1, 0}})},
                  {"sigma", 1}};
  doc["central_charge"] = "1/2";
  doc["modules"] = ordered_json::array({module_entry("V", 0, "0", true),
                                        module_entry("M", 1, "1/16", false),
                                        module_entry("Ms", 1, "1/16", false)});
  doc["action"] = ordered_json::array({{0, 0}, {1, 2}, {2, 1}});
  doc["cocycles"] = ordered_json::array(
      {cocycle_entry(0, {0, 1}, 1, {{0, 0}, {0, 0}}),
       cocycle_entry(1, {0}, 1, {{0}})});
  doc["weights_by_char"] = ordered_json::array({weight_entry(0, 0, "0"),
                                                weight_entry(0, 1, "1/2"),
                                                weight_entry(1, 0, "1/16")});
  doc["sblocks"] = ordered_json::array();
  for (const BlockPlan& plan :
       {BlockPlan{1, 1, {"V"}, {"V"}}, BlockPlan{1, 0, {"V"}, {"M"}},
        BlockPlan{0, 1, {"M"}, {"V"}}})
    doc["sblocks"].push_back(recognized_block("fermion", plan));
  return doc;
}

ordered_json lattice_doc() {
  ordered_json doc;
  ordered_json mul = ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < 4; ++j) row.push_back(i ^ j);
    mul.push_back(row);
  }
  doc["group"] = {{"order", 4}, {"mul", mul}, {"sigma", 1}};
  doc["central_charge"] = "1";
  doc["modules"] = ordered_json::array({module_entry("V", 0, "0", true),
                                        module_entry("M", 1, "1/8", true),
                                        module_entry("N", 2, "1/16", false),
                                        module_entry("Ns", 2, "1/16", false),
                                        module_entry("P", 3, "1/16", false),
                                        module_entry("Ps", 3, "1/16", false)});
  doc["action"] = ordered_json::array({{0, 0, 0, 0},
                                       {1, 1, 1, 1},
                                       {2, 3, 3, 2},
                                       {3, 2, 2, 3},
                                       {4, 5, 4, 5},
                                       {5, 4, 5, 4}});
  // the sigma-twisted module carries the nondegenerate class: (i, j) ->
  // (i & 1) * (j >> 1) is bilinear with alternating form -1 on (sigma, theta)
  std::vector<std::vector<long long>> proj(4, std::vector<long long>(4, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) proj[i][j] = (i & 1) * (j >> 1);
  std::vector<std::vector<long long>> z4(4, std::vector<long long>(4, 0));
  std::vector<std::vector<long long>> z2(2, std::vector<long long>(2, 0));
  doc["cocycles"] = ordered_json::array(
      {cocycle_entry(0, {0, 1, 2, 3}, 1, z4), cocycle_entry(1, {0, 1, 2, 3}, 2, proj),
       cocycle_entry(2, {0, 3}, 1, z2), cocycle_entry(4, {0, 2}, 1, z2)});
  doc["weights_by_char"] = ordered_json::array(
      {weight_entry(0, 0, "0"), weight_entry(0, 1, "1"), weight_entry(0, 2, "1/2"),
       weight_entry(0, 3, "1/2"), weight_entry(1, 0, "1/8"),
       weight_entry(2, 0, "1/16"), weight_entry(2, 1, "9/16"),
       weight_entry(4, 0, "1/16"), weight_entry(4, 1, "9/16")});
  doc["sblocks"] = ordered_json::array();
  for (const BlockPlan& plan :
       {BlockPlan{1, 1, {"V"}, {"V"}}, BlockPlan{1, 0, {"V"}, {"M"}},
        BlockPlan{0, 1, {"M"}, {"V"}}, BlockPlan{1, 3, {"V"}, {"N"}},
        BlockPlan{1, 2, {"V"}, {"P"}}, BlockPlan{3, 1, {"N"}, {"V"}},
        BlockPlan{2, 1, {"P"}, {"V"}}, BlockPlan{3, 2, {"N"}, {"P"}},
        BlockPlan{2, 3, {"P"}, {"N"}}})
    doc["sblocks"].push_back(recognized_block("lattice_a1", plan));
  return doc;
}

ordered_json trivial_doc() {
  ordered_json doc;
  doc["group"] = {{"order", 1},
                  {"mul", ordered_json::array({{0}})},
                  {"sigma", 0}};
  doc["central_charge"] = "1/2";
  doc["modules"] = ordered_json::array({module_entry("1", 0, "0", true),
                                        module_entry("eps", 0, "1/2", true),
                                        module_entry("tau", 0, "1/16", true)});
  doc["action"] = ordered_json::array({{0}, {1}, {2}});
  doc["cocycles"] = ordered_json::array({cocycle_entry(0, {0}, 1, {{0}}),
                                         cocycle_entry(1, {0}, 1, {{0}}),
                                         cocycle_entry(2, {0}, 1, {{0}})});
  doc["weights_by_char"] = ordered_json::array({weight_entry(0, 0, "0"),
                                                weight_entry(1, 0, "1/2"),
                                                weight_entry(2, 0, "1/16")});
  SBlockFit fit = fermion_orbifold_smatrix();
  ordered_json entries = ordered_json::array();
  for (auto& row : fit.entries) {
    ordered_json r = ordered_json::array();
    for (Complex z : row) r.push_back(recognize_entry(z).str());
    entries.push_back(r);
  }
  ordered_json ids = ordered_json::array({"1", "eps", "tau"});
  doc["sblocks"] = ordered_json::array(
      {{{"g", 0}, {"h", 0}, {"rows", ids}, {"cols", ids}, {"entries", entries}}});
  return doc;
}

}  // namespace

Complex dedekind_eta(Complex tau) {
  require_upper(tau);
  Complex q = qpow(tau, 1.0);
  return qpow(tau, 1.0 / 24) * product_one_plus(q, q, -1.0);
}

Complex jacobi_theta2(Complex tau) {
  require_upper(tau);
  // 2 q^{1/8} sum_{n>=0} u^{n(n+1)}, u = q^{1/2}
  Complex u = qpow(tau, 0.5);
  double au = std::abs(u);
  Complex sum(0);
  Complex term(1.0);
  for (long n = 0;; ++n) {
    sum += term;
    term *= std::pow(u, 2 * n + 2);
    if (std::abs(term) < 1e-18 * (1.0 - au)) break;
    if (n > 100000) throw std::runtime_error("qseries: theta did not converge");
  }
  return 2.0 * qpow(tau, 0.125) * sum;
}

namespace {
Complex theta34(Complex tau, double sign) {
  require_upper(tau);
  Complex u = qpow(tau, 0.5);
  double au = std::abs(u);
  Complex sum(1.0);
  Complex term(1.0);
  double sgn = 1.0;
  for (long n = 1;; ++n) {
    term *= std::pow(u, 2 * n - 1);
    sgn *= sign;
    sum += 2.0 * sgn * term;
    if (std::abs(term) < 1e-18 * (1.0 - au)) break;
    if (n > 100000) throw std::runtime_error("qseries: theta did not converge");
  }
  return sum;
}
}  // namespace

Complex jacobi_theta3(Complex tau) { return theta34(tau, 1.0); }
Complex jacobi_theta4(Complex tau) { return theta34(tau, -1.0); }

Complex weber_f(Complex tau) {
  require_upper(tau);
  Complex u = qpow(tau, 0.5);
  return qpow(tau, -1.0 / 48) * product_one_plus(u, u * u, 1.0);
}

Complex weber_f1(Complex tau) {
  require_upper(tau);
  Complex u = qpow(tau, 0.5);
  return qpow(tau, -1.0 / 48) * product_one_plus(u, u * u, -1.0);
}

Complex weber_f2(Complex tau) {
  require_upper(tau);
  Complex q = qpow(tau, 1.0);
  return std::sqrt(2.0) * qpow(tau, 1.0 / 24) * product_one_plus(q, q, 1.0);
}

Complex eval_char(const std::string& model, int g, int h, Complex tau) {
  require_upper(tau);
  int n = model_order(model);
  if (g < 0 || g >= n || h < 0 || h >= n)
    throw std::invalid_argument("qseries: sector index out of range");
  if (model == "fermion") {
    // sigma flips the fermion; twist sign of sigma*g, insertion sign of sigma*h
    int t = (g == 1) ? 1 : -1, s = (h == 1) ? 1 : -1;
    return majorana_factor(t, s, tau);
  }
  // two Majorana factors; sigma flips both, theta flips only the second
  auto sign1 = [](int e) { return (e == 1 || e == 3) ? -1 : 1; };
  auto sign2 = [](int e) { return (e == 1 || e == 2) ? -1 : 1; };
  int tw = 1 ^ g, in = 1 ^ h;  // sigma*g, sigma*h under the XOR group law
  Complex z = majorana_factor(sign1(tw), sign1(in), tau) *
              majorana_factor(sign2(tw), sign2(in), tau);
  // a doubly integer-moded sector carries a single Clifford pair: its ground
  // space is one irreducible, half the split tensor product
  if (sign1(tw) < 0 && sign2(tw) < 0) z *= 0.5;
  return z;
}

SBlockFit numeric_sblock(const std::string& model, int g, int h) {
  Complex probe(0, 1);
  // both model groups are elementary abelian, so g^{-1} = g
  if (std::abs(eval_char(model, g, h, probe)) < 1e-6 ||
      std::abs(eval_char(model, h, g, probe)) < 1e-6)
    throw std::invalid_argument("qseries: empty sector");
  auto row = [&](Complex tau) {
    return std::vector<Complex>{eval_char(model, g, h, tau)};
  };
  auto col = [&](Complex tau) {
    return std::vector<Complex>{eval_char(model, h, g, tau)};
  };
  return fit_transform(row, col);
}

std::array<Complex, 3> fermion_orbifold_chars(Complex tau) {
  Complex f = weber_f(tau), f1 = weber_f1(tau), f2 = weber_f2(tau);
  return {(f + f1) / 2.0, (f - f1) / 2.0, f2 / std::sqrt(2.0)};
}

SBlockFit fermion_orbifold_smatrix() {
  auto chars = [](Complex tau) {
    auto a = fermion_orbifold_chars(tau);
    return std::vector<Complex>(a.begin(), a.end());
  };
  return fit_transform(chars, chars);
}

std::array<Complex, 4> lattice_even_chars(Complex tau) {
  require_upper(tau);
  std::array<Complex, 4> out;
  Complex eta = dedekind_eta(tau);
  for (int j = 0; j < 4; ++j) {
    Complex sum(0);
    for (int dir : {0, 1}) {
      for (long n = dir;; ++n) {
        long m = dir ? -n : n;
        Complex term = qpow(tau, (4.0 * m + j) * (4.0 * m + j) / 8.0);
        sum += term;
        if (std::abs(term) < 1e-18 && n > 2) break;
        if (n > 100000)
          throw std::runtime_error("qseries: theta did not converge");
      }
    }
    out[j] = sum / eta;
  }
  return out;
}

Complex lattice_even_twining(Complex tau) {
  // the involution negates the current: only the vacuum tower survives with
  // alternating signs, eta(tau)/eta(2 tau)
  return dedekind_eta(tau) / dedekind_eta(2.0 * tau);
}

int lattice_even_orbifold_count() {
  // modules U_j, j mod 4; the involution sends U_j to U_{-j}
  int stable = 0, pairs = 0;
  std::vector<bool> seen(4, false);
  for (int j = 0; j < 4; ++j) {
    if (seen[j]) continue;
    int k = (4 - j) % 4;
    seen[j] = seen[k] = true;
    if (k == j)
      ++stable;
    else
      ++pairs;
  }
  // stable modules split in two, swapped pairs descend whole; the twisted
  // module count equals the stable count and each also splits in two
  return 2 * stable + pairs + 2 * stable;
}

std::vector<std::string> qdim_labels(const std::string& model) {
  if (model_order(model) == 2) return {"vacuum", "ramond", "ramond-super"};
  return {"vacuum", "sigma", "theta", "sigma-theta"};
}

std::vector<double> numeric_qdim(const std::string& model, const std::string& label,
                                 const std::vector<double>& y_grid) {
  auto labels = qdim_labels(model);
  bool known = false;
  for (auto& l : labels) known = known || l == label;
  if (!known)
    throw std::invalid_argument("qseries: unknown qdim label " + label);
  auto ratio = [&](Complex tau) -> double {
    Complex vac = eval_char(model, 1, 1, tau);
    if (label == "vacuum") return std::abs(vac / vac);
    if (label == "ramond") return std::abs(0.5 * eval_char(model, 0, 1, tau) / vac);
    if (label == "ramond-super")
      return std::abs(eval_char(model, 0, 1, tau) / vac);
    if (label == "sigma") return std::abs(eval_char(model, 0, 1, tau) / vac);
    if (label == "theta") return std::abs(0.5 * eval_char(model, 3, 1, tau) / vac);
    return std::abs(0.5 * eval_char(model, 2, 1, tau) / vac);
  };
  std::vector<double> out;
  for (double y : y_grid) {
    if (!(y > 0)) throw std::invalid_argument("qseries: y grid must be positive");
    out.push_back(ratio(Complex(0, y)));
  }
  return out;
}

CharacterSeries model_character(const std::string& model, const std::string& id,
                                int order) {
  if (order <= 0) throw std::invalid_argument("qseries: order must be positive");
  int n = model_order(model);
  CharacterSeries cs;
  cs.coefficients.assign(order, 0);
  cs.coefficients[0] = 1;
  bool odd = false, even = false;
  int odd_mult = 1, even_mult = 1;
  long long norm = 1;
  if (n == 2 && id == "V") {
    cs.leading_exponent = Rational(-1, 48);
    odd = true;
    cs.closed_form = "f";
  } else if (n == 2 && id == "M") {
    cs.leading_exponent = Rational(1, 24);
    even = true;
    norm = 2;
    cs.closed_form = "sqrt2*f2";
  } else if (n == 4 && id == "V") {
    cs.leading_exponent = Rational(-1, 24);
    odd = true;
    odd_mult = 2;
    cs.closed_form = "f^2";
  } else if (n == 4 && id == "M") {
    cs.leading_exponent = Rational(1, 12);
    even = true;
    even_mult = 2;
    norm = 2;
    cs.closed_form = "f2^2";
  } else if (n == 4 && (id == "N" || id == "P")) {
    cs.leading_exponent = Rational(1, 48);
    odd = even = true;
    norm = 2;
    cs.closed_form = "sqrt2*f*f2";
  } else {
    throw std::invalid_argument("qseries: unknown module " + id);
  }
  // half-step exponents: odd steps from half-integer modes, even from integer
  if (odd)
    for (int rep = 0; rep < odd_mult; ++rep)
      for (int m = 1; m < order; m += 2) fold_factor(cs.coefficients, m);
  if (even)
    for (int rep = 0; rep < even_mult; ++rep)
      for (int m = 2; m < order; m += 2) fold_factor(cs.coefficients, m);
  for (auto& c : cs.coefficients) c *= norm;
  return cs;
}

TwistedDatum make_fixture(const std::string& model) {
  if (model == "fermion") return TwistedDatum::from_json(fermion_doc());
  if (model == "lattice_a1") return TwistedDatum::from_json(lattice_doc());
  if (model == "fermion_trivial_g") return TwistedDatum::from_json(trivial_doc());
  throw std::invalid_argument("qseries: unknown fixture model " + model);
}

}  // namespace superorb
