#include "superorb/cyclo.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace superorb {

namespace {

// dense polynomials over Q, little endian, no trailing zeros
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

// a = q*b + r, deg r < deg b
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  assert(!b.empty() && b.back() != 0);
  long long db = static_cast<long long>(b.size()) - 1;
  long long da = static_cast<long long>(a.size()) - 1;
  if (da < db) {
    q.clear();
    r = std::move(a);
    poly_trim(r);
    return;
  }
  q.assign(static_cast<std::size_t>(da - db + 1), Rational(0));
  for (long long i = da; i >= db; --i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    Rational c = a[static_cast<std::size_t>(i)] / b[static_cast<std::size_t>(db)];
    q[static_cast<std::size_t>(i - db)] = c;
    for (long long j = 0; j <= db; ++j)
      a[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  r = std::move(a);
  poly_trim(r);
}

// monic g = gcd(a, b) with g = u*a + v*b
void poly_ext_gcd(Poly a, Poly b, Poly& g, Poly& u, Poly& v) {
  Poly u0{Rational(1)}, v0, u1, v1{Rational(1)};
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    Poly u2 = poly_sub(u0, poly_mul(q, u1));
    Poly v2 = poly_sub(v0, poly_mul(q, v1));
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  for (auto& c : u0) c /= lead;
  for (auto& c : v0) c /= lead;
  g = std::move(a);
  u = std::move(u0);
  v = std::move(v0);
}

long long euler_phi(long long n) {
  long long result = n;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const Poly& cyclotomic(long long n) {
  static std::map<long long, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly p(static_cast<std::size_t>(n + 1), Rational(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long long d = 1; d < n; ++d) {
    if (n % d) continue;
    Poly q, r;
    poly_divmod(p, cyclotomic(d), q, r);
    assert(r.empty());
    p = std::move(q);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

// Solves A*x = rhs exactly (A given by columns); returns false if inconsistent.
bool solve_columns(const std::vector<Poly>& cols, Poly rhs, std::size_t rows,
                   std::vector<Rational>& out) {
  std::size_t nc = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(nc + 1, Rational(0)));
  for (std::size_t j = 0; j < nc; ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i];
  for (std::size_t i = 0; i < rhs.size(); ++i) m[i][nc] = rhs[i];

  std::vector<long long> pivot_col(rows, -1);
  std::size_t rank = 0;
  for (std::size_t j = 0; j < nc && rank < rows; ++j) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][j] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    Rational d = m[rank][j];
    for (std::size_t k = j; k <= nc; ++k) m[rank][k] /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][j] == 0) continue;
      Rational f = m[i][j];
      for (std::size_t k = j; k <= nc; ++k) m[i][k] -= f * m[rank][k];
    }
    pivot_col[rank] = static_cast<long long>(j);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (m[i][nc] != 0) return false;
  out.assign(nc, Rational(0));
  for (std::size_t i = 0; i < rank; ++i)
    out[static_cast<std::size_t>(pivot_col[i])] = m[i][nc];
  return true;
}

bool rational_reconstruct(double x, long long den_bound, Rational& out) {
  if (!std::isfinite(x)) return false;
  Int h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  double v = x;
  bool have = false;
  Rational best;
  for (int it = 0; it < 64; ++it) {
    double fa = std::floor(v);
    if (fa > 9e17 || fa < -9e17) break;
    long long a = static_cast<long long>(fa);
    Int h = a * h1 + h2;
    Int k = a * k1 + k2;
    if (k > den_bound) break;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    best = Rational(h, k);
    have = true;
    double frac = v - fa;
    if (frac < 1e-14) break;
    v = 1.0 / frac;
  }
  if (!have) return false;
  out = best;
  return true;
}

const long double kTau = 2.0L * std::acos(-1.0L);

}  // namespace

Cyclo::Cyclo(const Rational& r) {
  if (r != 0) c_[0] = r;
}

Cyclo::Cyclo(long long v) : Cyclo(Rational(v)) {}

Cyclo Cyclo::zeta(long long n, long long k) {
  if (n < 1) throw std::invalid_argument("zeta: order must be positive");
  Cyclo x;
  x.n_ = n;
  x.c_[mod_ll(k, n)] = 1;
  x.canonicalize();
  return x;
}

Cyclo Cyclo::from_basis(long long n, const std::map<long long, Rational>& coeffs) {
  if (n < 1) throw std::invalid_argument("from_basis: order must be positive");
  Cyclo x;
  x.n_ = n;
  for (auto& [e, c] : coeffs)
    if (c != 0) x.c_[mod_ll(e, n)] += c;
  x.canonicalize();
  return x;
}

Cyclo Cyclo::root_of_unity(const Rational& r) {
  Int num = numerator(r), den = denominator(r);
  Int fl = num / den;
  if (num < 0 && fl * den != num) fl -= 1;
  Rational f = r - Rational(fl);
  // f in [0,1) with f = p/q in lowest terms
  num = numerator(f);
  den = denominator(f);
  return zeta(den.convert_to<long long>(), num.convert_to<long long>());
}

void Cyclo::canonicalize() {
  // reduce mod Phi_n
  if (n_ < 1) throw std::invalid_argument("cyclotomic level must be positive");
  long long maxe = 0;
  for (auto& [e, c] : c_) maxe = std::max(maxe, e);
  Poly dense(static_cast<std::size_t>(maxe + 1), Rational(0));
  for (auto& [e, c] : c_) dense[static_cast<std::size_t>(mod_ll(e, n_))] += c;
  poly_trim(dense);
  if (n_ > 1) {
    Poly q, r;
    poly_divmod(dense, cyclotomic(n_), q, r);
    dense = std::move(r);
  }

  // minimize the level
  for (;;) {
    if (dense.empty()) {
      n_ = 1;
      break;
    }
    if (n_ == 1) break;
    if (n_ % 4 == 2) {
      // zeta_{2M} = -zeta_M^{(M+1)/2} for odd M
      long long m = n_ / 2;
      std::map<long long, Rational> img;
      for (std::size_t e = 0; e < dense.size(); ++e) {
        if (dense[e] == 0) continue;
        long long e2 = mod_ll(static_cast<long long>(e) * ((m + 1) / 2), m);
        img[e2] += (e % 2 ? -dense[e] : dense[e]);
      }
      Poly next(static_cast<std::size_t>(m), Rational(0));
      long long maxe2 = 0;
      for (auto& [e, c] : img) maxe2 = std::max(maxe2, e);
      next.assign(static_cast<std::size_t>(maxe2 + 1), Rational(0));
      for (auto& [e, c] : img) next[static_cast<std::size_t>(e)] += c;
      poly_trim(next);
      if (m > 1) {
        Poly q, r;
        poly_divmod(next, cyclotomic(m), q, r);
        next = std::move(r);
      }
      n_ = m;
      dense = std::move(next);
      continue;
    }
    // try to descend to Q(zeta_{n/p})
    bool descended = false;
    long long m = n_;
    std::vector<long long> primes;
    for (long long p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(m);
    for (long long p : primes) {
      long long sub = n_ / p;
      if (sub < 1) continue;
      long long stride = n_ / sub;
      std::size_t dim = static_cast<std::size_t>(euler_phi(n_));
      std::vector<Poly> cols;
      for (long long k = 0; k < euler_phi(sub); ++k) {
        Poly b(static_cast<std::size_t>(k * stride + 1), Rational(0));
        b[static_cast<std::size_t>(k * stride)] = 1;
        Poly q, r;
        poly_divmod(b, cyclotomic(n_), q, r);
        cols.push_back(std::move(r));
      }
      std::vector<Rational> sol;
      if (!solve_columns(cols, dense, dim, sol)) continue;
      Poly next(sol.size(), Rational(0));
      for (std::size_t k = 0; k < sol.size(); ++k) next[k] = sol[k];
      poly_trim(next);
      n_ = sub;
      dense = std::move(next);
      descended = true;
      break;
    }
    if (!descended) break;
  }

  c_.clear();
  for (std::size_t e = 0; e < dense.size(); ++e)
    if (dense[e] != 0) c_[static_cast<long long>(e)] = dense[e];
}

std::optional<Rational> Cyclo::rational_value() const {
  if (n_ != 1) return std::nullopt;
  if (c_.empty()) return Rational(0);
  return c_.at(0);
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& [e, c] : r.c_) c = -c;
  return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  long long l = std::lcm(n_, o.n_);
  Cyclo r;
  r.n_ = l;
  for (auto& [e, c] : c_) r.c_[e * (l / n_)] += c;
  for (auto& [e, c] : o.c_) r.c_[e * (l / o.n_)] += c;
  r.canonicalize();
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (is_zero() || o.is_zero()) return Cyclo();
  long long l = std::lcm(n_, o.n_);
  Cyclo r;
  r.n_ = l;
  for (auto& [e1, c1] : c_)
    for (auto& [e2, c2] : o.c_) r.c_[e1 * (l / n_) + e2 * (l / o.n_)] += c1 * c2;
  r.canonicalize();
  return r;
}

Cyclo Cyclo::operator/(const Cyclo& o) const {
  if (o.is_zero()) throw std::domain_error("cyclotomic division by zero");
  if (o.n_ == 1) {
    Cyclo r = *this;
    Rational d = o.c_.at(0);
    for (auto& [e, c] : r.c_) c /= d;
    return r;
  }
  Poly a(static_cast<std::size_t>(euler_phi(o.n_)), Rational(0));
  long long maxe = 0;
  for (auto& [e, c] : o.c_) maxe = std::max(maxe, e);
  a.assign(static_cast<std::size_t>(maxe + 1), Rational(0));
  for (auto& [e, c] : o.c_) a[static_cast<std::size_t>(e)] = c;
  Poly g, u, v;
  poly_ext_gcd(a, cyclotomic(o.n_), g, u, v);
  assert(g.size() == 1);  // Phi_n is irreducible over Q
  Cyclo inv;
  inv.n_ = o.n_;
  for (std::size_t e = 0; e < u.size(); ++e)
    if (u[e] != 0) inv.c_[static_cast<long long>(e)] = u[e] / g[0];
  inv.canonicalize();
  return *this * inv;
}

bool Cyclo::operator<(const Cyclo& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return std::lexicographical_compare(
      c_.begin(), c_.end(), o.c_.begin(), o.c_.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

Cyclo Cyclo::galois(long long j) const {
  j = mod_ll(j, n_);
  if (std::gcd(j, n_) != 1)
    throw std::invalid_argument("galois: exponent not coprime to the level");
  Cyclo r;
  r.n_ = n_;
  for (auto& [e, c] : c_) r.c_[mod_ll(e * j, n_)] += c;
  r.canonicalize();
  return r;
}

Cyclo Cyclo::conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

std::complex<double> Cyclo::embed() const {
  long double re = 0, im = 0, cre = 0, cim = 0;
  for (auto& [e, c] : c_) {
    long double coeff = c.convert_to<long double>();
    long double ang = kTau * static_cast<long double>(e) / static_cast<long double>(n_);
    long double tr = coeff * std::cos(ang) - cre;
    long double sr = re + tr;
    cre = (sr - re) - tr;
    re = sr;
    long double ti = coeff * std::sin(ang) - cim;
    long double si = im + ti;
    cim = (si - im) - ti;
    im = si;
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclo::str() const {
  std::string s;
  if (c_.empty()) {
    s = "0";
  } else {
    bool first = true;
    for (auto& [e, c] : c_) {
      Rational a = c;
      if (first) {
        if (a < 0) {
          s += "-";
          a = -a;
        }
      } else {
        s += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      if (e == 0) {
        s += rational_str(a);
      } else {
        if (a != 1) s += rational_str(a) + "*";
        s += e == 1 ? "z" : "z^" + std::to_string(e);
      }
      first = false;
    }
  }
  s += " (N=" + std::to_string(n_) + ")";
  return s;
}

Cyclo Cyclo::parse(const std::string& input) {
  std::string s = input;
  long long n = 1;
  auto pos = s.rfind("(N=");
  if (pos != std::string::npos) {
    auto close = s.find(')', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("cyclotomic: unterminated level suffix");
    std::string lev = s.substr(pos + 3, close - pos - 3);
    try {
      n = std::stoll(lev);
    } catch (const std::exception&) {
      throw std::invalid_argument("cyclotomic: bad level '" + lev + "'");
    }
    if (n < 1) throw std::invalid_argument("cyclotomic: bad level '" + lev + "'");
    s = s.substr(0, pos);
  }
  std::string b;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) b += ch;
  if (b.empty()) throw std::invalid_argument("cyclotomic: empty expression");

  Cyclo x;
  x.n_ = n;
  std::size_t i = 0;
  while (i < b.size()) {
    int sign = 1;
    if (b[i] == '+' || b[i] == '-') {
      sign = b[i] == '-' ? -1 : 1;
      ++i;
      if (i == b.size())
        throw std::invalid_argument("cyclotomic: dangling sign in '" + input + "'");
    } else if (i > 0) {
      throw std::invalid_argument("cyclotomic: expected '+' or '-' in '" + input + "'");
    }
    bool have_coeff = false, have_z = false;
    Rational coeff(1);
    if (i < b.size() && std::isdigit(static_cast<unsigned char>(b[i]))) {
      std::size_t k = i;
      while (k < b.size() && std::isdigit(static_cast<unsigned char>(b[k]))) ++k;
      std::string num = b.substr(i, k - i);
      std::string den;
      if (k < b.size() && b[k] == '/') {
        std::size_t k2 = ++k;
        while (k2 < b.size() && std::isdigit(static_cast<unsigned char>(b[k2]))) ++k2;
        if (k2 == k) throw std::invalid_argument("cyclotomic: bad fraction in '" + input + "'");
        den = b.substr(k, k2 - k);
        k = k2;
      }
      coeff = den.empty() ? Rational(Int(num)) : Rational(Int(num), Int(den));
      have_coeff = true;
      i = k;
      if (i < b.size() && b[i] == '*') ++i;
    }
    long long e = 0;
    if (i < b.size() && b[i] == 'z') {
      have_z = true;
      ++i;
      e = 1;
      if (i < b.size() && b[i] == '^') {
        std::size_t k = ++i;
        while (k < b.size() && std::isdigit(static_cast<unsigned char>(b[k]))) ++k;
        if (k == i) throw std::invalid_argument("cyclotomic: bad exponent in '" + input + "'");
        e = std::stoll(b.substr(i, k - i));
        i = k;
      }
    }
    if (!have_coeff && !have_z)
      throw std::invalid_argument("cyclotomic: bad term in '" + input + "'");
    x.c_[mod_ll(e, n)] += sign < 0 ? Rational(-coeff) : coeff;
  }
  x.canonicalize();
  return x;
}

Cyclo::RecogResult Cyclo::recognize(std::complex<double> z, long long n, double tol,
                                    long long den_bound) {
  if (n < 1) throw std::invalid_argument("recognize: order must be positive");
  std::vector<Cyclo> found;
  auto consider = [&](const Cyclo& cand) {
    std::complex<double> w = cand.embed();
    if (std::abs(w - z) > tol) return;
    for (auto& f : found)
      if (f == cand) return;
    found.push_back(cand);
  };
  auto unit = [&](long long k) -> std::complex<double> {
    double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(ang), std::sin(ang)};
  };

  Rational r;
  if (std::abs(z.imag()) <= tol && rational_reconstruct(z.real(), den_bound, r))
    consider(Cyclo(r));

  for (long long k = 1; k < n; ++k) {
    std::complex<double> w = unit(k);
    std::complex<double> q = z * std::conj(w);
    if (std::abs(q.imag()) > 16 * tol + 1e-12) continue;
    if (rational_reconstruct(q.real(), den_bound, r))
      consider(Cyclo(r) * zeta(n, k));
  }

  for (long long a = 0; a < n; ++a) {
    std::complex<double> wa = unit(a);
    for (long long b = a + 1; b < n; ++b) {
      std::complex<double> wb = unit(b);
      double det = wa.real() * wb.imag() - wa.imag() * wb.real();
      if (std::abs(det) < 1e-9) continue;
      double ra = (z.real() * wb.imag() - z.imag() * wb.real()) / det;
      double rb = (wa.real() * z.imag() - wa.imag() * z.real()) / det;
      Rational qa, qb;
      if (!rational_reconstruct(ra, den_bound, qa) || !rational_reconstruct(rb, den_bound, qb))
        continue;
      double ca = to_double(qa), cb = to_double(qb);
      std::complex<double> approx(ca * wa.real() + cb * wb.real(),
                                  ca * wa.imag() + cb * wb.imag());
      if (std::abs(approx - z) > 4 * tol) continue;
      consider(Cyclo(qa) * zeta(n, a) + Cyclo(qb) * zeta(n, b));
    }
  }

  RecogResult res;
  if (found.empty()) {
    res.status = Recog::no_candidate;
  } else if (found.size() > 1) {
    res.status = Recog::ambiguous;
  } else {
    res.status = Recog::ok;
    res.value = found.front();
  }
  return res;
}

}  // namespace superorb
