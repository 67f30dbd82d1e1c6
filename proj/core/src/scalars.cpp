#include "qtw/scalars.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qtw {

namespace {

using Poly = std::vector<mpq_class>;  // coefficient of x^k at index k

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

// Division with remainder; q and r are outputs. b must be nonzero.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  poly_trim(r);
  Poly bb = b;
  poly_trim(bb);
  if (bb.empty()) throw Error("polynomial division by zero");
  q.assign(r.size(), 0);
  const mpq_class lead = bb.back();
  while (poly_deg(r) >= poly_deg(bb)) {
    const int shift = poly_deg(r) - poly_deg(bb);
    mpq_class f = r.back() / lead;
    q[shift] = f;
    for (int i = 0; i <= poly_deg(bb); ++i) r[shift + i] -= f * bb[i];
    poly_trim(r);
    if (r.empty()) break;
  }
  poly_trim(q);
}

// Extended gcd: returns g (monic) with u*a + v*b = g.
void poly_ext_gcd(Poly a, Poly b, Poly& g, Poly& u, Poly& v) {
  Poly u0 = {mpq_class(1)}, v0 = {};
  Poly u1 = {}, v1 = {mpq_class(1)};
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    // (u0,v0) - q*(u1,v1)
    auto mulsub = [&](const Poly& x0, const Poly& x1) {
      Poly res = x0;
      if (!q.empty() && !x1.empty()) {
        res.resize(std::max(res.size(), q.size() + x1.size() - 1), 0);
        for (size_t i = 0; i < q.size(); ++i)
          for (size_t j = 0; j < x1.size(); ++j) res[i + j] -= q[i] * x1[j];
      }
      poly_trim(res);
      return res;
    };
    Poly nu = mulsub(u0, u1), nv = mulsub(v0, v1);
    a = b;
    b = r;
    u0 = u1;
    v0 = v1;
    u1 = nu;
    v1 = nv;
  }
  g = a;
  u = u0;
  v = v0;
  if (!g.empty() && g.back() != 1) {
    mpq_class lead = g.back();
    for (auto& c : g) c /= lead;
    for (auto& c : u) c /= lead;
    for (auto& c : v) c /= lead;
  }
}

std::map<unsigned, std::vector<long>>& phi_cache() {
  static std::map<unsigned, std::vector<long>> cache;
  return cache;
}
std::mutex phi_mutex;

std::vector<long> compute_cyclotomic(unsigned n);

const std::vector<long>& cyclotomic_locked(unsigned n) {
  auto it = phi_cache().find(n);
  if (it == phi_cache().end())
    it = phi_cache().emplace(n, compute_cyclotomic(n)).first;
  return it->second;
}

// Phi_n by dividing x^n - 1 by the product of Phi_d over proper divisors d.
std::vector<long> compute_cyclotomic(unsigned n) {
  if (n == 0) throw Error("cyclotomic index must be positive");
  if (n == 1) return {-1, 1};  // x - 1
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& phid = cyclotomic_locked(d);
    Poly divisor(phid.begin(), phid.end());
    Poly q, r;
    poly_divmod(p, divisor, q, r);
    if (!r.empty()) throw Error("cyclotomic computation: non-exact division");
    p = q;
  }
  std::vector<long> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].get_den() != 1)
      throw Error("cyclotomic computation: non-integer coefficient");
    out[i] = static_cast<long>(p[i].get_num().get_si());
  }
  return out;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(unsigned l) {
  std::lock_guard<std::mutex> lock(phi_mutex);
  return cyclotomic_locked(l);
}

unsigned cyclotomic_degree(unsigned l) {
  return static_cast<unsigned>(cyclotomic_poly(l).size()) - 1;
}

Cyc Cyc::zero(unsigned l) {
  if (l == 0) throw Error("Cyc: modulus must be positive");
  return Cyc(l);
}

Cyc Cyc::one(unsigned l) { return from_long(l, 1); }

Cyc Cyc::from_long(unsigned l, long v) {
  Cyc r = zero(l);
  r.c_[0] = v;
  return r;
}

Cyc Cyc::from_mpq(unsigned l, const mpq_class& v) {
  Cyc r = zero(l);
  r.c_[0] = v;
  r.c_[0].canonicalize();  // tolerate non-canonical two-argument mpq_class
  return r;
}

Cyc Cyc::q_pow(unsigned l, long long a) {
  Cyc r = zero(l);
  r.c_[static_cast<size_t>(mod_positive(a, l))] = 1;
  return r;
}

Cyc Cyc::q_pow_scaled(unsigned l, long long a, const mpq_class& v) {
  Cyc r = zero(l);
  r.c_[static_cast<size_t>(mod_positive(a, l))] = v;
  return r;
}

void Cyc::reduce_mod_phi(std::vector<mpq_class>& v) const {
  const auto& phi = cyclotomic_poly(l_);
  const size_t d = phi.size() - 1;  // deg(Phi_l), monic
  for (size_t i = v.size(); i-- > d;) {
    if (v[i] == 0) continue;
    mpq_class f = v[i];
    // subtract f * x^(i-d) * Phi_l
    for (size_t j = 0; j <= d; ++j) v[i - d + j] -= f * phi[j];
  }
  v.resize(d);
}

bool Cyc::is_zero() const {
  if (l_ == 0) throw Error("Cyc: uninitialized");
  bool raw_zero = true;
  for (const auto& x : c_)
    if (x != 0) {
      raw_zero = false;
      break;
    }
  if (raw_zero) return true;
  std::vector<mpq_class> v = c_;
  reduce_mod_phi(v);
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool Cyc::operator==(const Cyc& o) const {
  if (l_ != o.l_) return false;
  Cyc d = *this;
  d -= o;
  return d.is_zero();
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (l_ != o.l_) throw Error("Cyc: mixed moduli");
  for (unsigned i = 0; i < l_; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  if (l_ != o.l_) throw Error("Cyc: mixed moduli");
  for (unsigned i = 0; i < l_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc r = *this;
  r += o;
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  Cyc r = *this;
  r -= o;
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  if (l_ != o.l_) throw Error("Cyc: mixed moduli");
  Cyc r = zero(l_);
  mpq_class t;
  for (unsigned i = 0; i < l_; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < l_; ++j) {
      if (o.c_[j] == 0) continue;
      unsigned k = i + j;
      if (k >= l_) k -= l_;
      t = c_[i] * o.c_[j];
      r.c_[k] += t;
    }
  }
  return r;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  *this = *this * o;
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  r.negate();
  return r;
}

Cyc& Cyc::mul_q_pow(long long a) {
  const unsigned r = static_cast<unsigned>(mod_positive(a, l_));
  if (r == 0) return *this;
  // rotate right by r: new[(i + r) % l] = old[i]
  std::rotate(c_.begin(), c_.begin() + (l_ - r), c_.end());
  return *this;
}

Cyc& Cyc::mul_mpq(const mpq_class& v) {
  for (auto& x : c_) x *= v;
  return *this;
}

Cyc& Cyc::negate() {
  for (auto& x : c_) x = -x;
  return *this;
}

Cyc Cyc::inv() const {
  std::vector<mpq_class> v = c_;
  reduce_mod_phi(v);
  Poly a(v.begin(), v.end());
  poly_trim(a);
  if (a.empty()) throw Error("Cyc: inverse of zero");
  const auto& phil = cyclotomic_poly(l_);
  Poly phi(phil.begin(), phil.end());
  Poly g, u, w;
  poly_ext_gcd(a, phi, g, u, w);
  if (poly_deg(g) != 0) throw Error("Cyc: non-invertible element");
  // u / g[0] is the inverse mod Phi_l
  Cyc r = zero(l_);
  for (size_t i = 0; i < u.size() && i < r.c_.size(); ++i) r.c_[i] = u[i] / g[0];
  return r;
}

std::vector<mpq_class> Cyc::reduced() const {
  std::vector<mpq_class> v = c_;
  reduce_mod_phi(v);
  return v;
}

void Cyc::normalize() {
  std::vector<mpq_class> v = c_;
  reduce_mod_phi(v);
  v.resize(l_);
  c_ = std::move(v);
}

std::string Cyc::str() const {
  auto v = reduced();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    mpq_class a = v[i];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0) {
      os << mpq_str(a);
    } else {
      if (a != 1) os << mpq_str(a) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

long long half_exponent(unsigned l, long long a) {
  if (l % 2 == 0) throw Error("half_exponent: modulus must be odd");
  return mod_positive(a * static_cast<long long>((l + 1) / 2), l);
}

Cyc q_int(unsigned l, long n, long base) {
  // [n] = q^(n-1) + q^(n-3) + ... + q^(-(n-1)) at q = z^base; [-n] = -[n].
  Cyc r = Cyc::zero(l);
  if (n == 0) return r;
  long m = n < 0 ? -n : n;
  for (long j = 0; j < m; ++j) {
    Cyc t = Cyc::q_pow(l, static_cast<long long>(base) * (m - 1 - 2 * j));
    if (n < 0) t.negate();
    r += t;
  }
  return r;
}

Cyc q_factorial(unsigned l, unsigned n, long base) {
  if (n >= l)
    throw Error("q_factorial: [n]! vanishes for n >= l (n = " +
                std::to_string(n) + ", l = " + std::to_string(l) + ")");
  Cyc r = Cyc::one(l);
  for (unsigned k = 2; k <= n; ++k) r *= q_int(l, static_cast<long>(k), base);
  return r;
}

Cyc q_binom(unsigned l, unsigned n, unsigned k, long base) {
  if (k > n) return Cyc::zero(l);
  // [n over k] = [n]! / ([k]! [n-k]!); computed as a product of ratios to
  // stay within factorials of arguments < l whenever n < l.
  Cyc num = Cyc::one(l);
  for (unsigned j = 0; j < k; ++j) num *= q_int(l, static_cast<long>(n - j), base);
  Cyc den = q_factorial(l, k, base);
  return num * den.inv();
}

std::string mpq_str(const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();  // two-argument mpq_class construction skips this
  return c.get_str();
}

}  // namespace qtw
