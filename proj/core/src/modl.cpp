#include "qtw/modl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qtw {

IntMat IntMat::identity(size_t n) {
  IntMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::mul(const IntMat& o) const {
  if (cols != o.rows) throw Error("IntMat: dimension mismatch");
  IntMat r(rows, o.cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (size_t j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

SNFResult smith_normal_form(const IntMat& m) {
  const size_t R = m.rows, C = m.cols;
  IntMat a = m;
  IntMat u = IntMat::identity(R);
  IntMat v = IntMat::identity(C);

  auto swap_rows = [&](size_t i, size_t j) {
    for (size_t k = 0; k < C; ++k) std::swap(a.at(i, k), a.at(j, k));
    for (size_t k = 0; k < R; ++k) std::swap(u.at(i, k), u.at(j, k));
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (size_t k = 0; k < R; ++k) std::swap(a.at(k, i), a.at(k, j));
    for (size_t k = 0; k < C; ++k) std::swap(v.at(k, i), v.at(k, j));
  };
  auto addmul_row = [&](size_t i, size_t j, const mpz_class& f) {
    // row_i += f * row_j
    for (size_t k = 0; k < C; ++k) a.at(i, k) += f * a.at(j, k);
    for (size_t k = 0; k < R; ++k) u.at(i, k) += f * u.at(j, k);
  };
  auto addmul_col = [&](size_t i, size_t j, const mpz_class& f) {
    // col_i += f * col_j
    for (size_t k = 0; k < R; ++k) a.at(k, i) += f * a.at(k, j);
    for (size_t k = 0; k < C; ++k) v.at(k, i) += f * v.at(k, j);
  };
  auto negate_row = [&](size_t i) {
    for (size_t k = 0; k < C; ++k) a.at(i, k) = -a.at(i, k);
    for (size_t k = 0; k < R; ++k) u.at(i, k) = -u.at(i, k);
  };

  const size_t tmax = std::min(R, C);
  for (size_t t = 0; t < tmax; ++t) {
    for (;;) {
      // Select the submatrix entry of smallest nonzero magnitude as pivot.
      size_t pi = t, pj = t;
      bool found = false;
      mpz_class best;
      for (size_t i = t; i < R; ++i)
        for (size_t j = t; j < C; ++j) {
          if (a.at(i, j) == 0) continue;
          mpz_class ab = abs(a.at(i, j));
          if (!found || ab < best) {
            best = ab;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        t = tmax;  // rest of matrix is zero
        break;
      }
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);

      bool dirty = false;
      for (size_t i = t + 1; i < R; ++i) {
        if (a.at(i, t) == 0) continue;
        mpz_class q = a.at(i, t) / a.at(t, t);  // truncated
        if (q != 0) addmul_row(i, t, -q);
        if (a.at(i, t) != 0) dirty = true;  // remainder: smaller pivot exists
      }
      if (dirty) continue;
      for (size_t j = t + 1; j < C; ++j) {
        if (a.at(t, j) == 0) continue;
        mpz_class q = a.at(t, j) / a.at(t, t);
        if (q != 0) addmul_col(j, t, -q);
        if (a.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Enforce pivot | submatrix so the diagonal forms a divisibility chain.
      bool fixed = true;
      for (size_t i = t + 1; i < R && fixed; ++i)
        for (size_t j = t + 1; j < C && fixed; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            addmul_col(t, j, 1);
            fixed = false;
          }
      if (!fixed) continue;
      break;
    }
    if (t >= tmax) break;
    if (a.at(t, t) < 0) negate_row(t);
  }
  return SNFResult{std::move(u), std::move(a), std::move(v)};
}

mpz_class int_det(const IntMat& m) {
  if (m.rows != m.cols) throw Error("int_det: square matrices only");
  const size_t n = m.rows;
  if (n == 0) return 1;
  IntMat a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;  // exact (Bareiss)
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

long long llgcd(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// x with x*a == g (mod m), g = gcd(a, m).
long long ll_xgcd_inv(long long a, long long m) {
  long long old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  (void)old_r;
  return old_s;  // old_s * a == gcd (mod m), up to the Bezout identity
}

long long ll_mod(long long a, long long m) { return mod_positive(a, m); }

}  // namespace

ModSolveResult solve_mod_l(const IntMat& a, const std::vector<long long>& b,
                           long long l) {
  if (l < 2) throw Error("solve_mod_l: modulus must be >= 2");
  if (b.size() != a.rows) throw Error("solve_mod_l: rhs size mismatch");
  SNFResult snf = smith_normal_form(a);
  const size_t R = a.rows, C = a.cols;

  // c = u * b
  std::vector<long long> c(R, 0);
  for (size_t i = 0; i < R; ++i) {
    mpz_class s = 0;
    for (size_t k = 0; k < R; ++k) s += snf.u.at(i, k) * static_cast<long>(b[k]);
    mpz_class red = s % static_cast<long>(l);
    c[i] = ll_mod(red.get_si(), l);
  }

  ModSolveResult res;
  std::vector<long long> y(C, 0);
  std::vector<std::pair<size_t, long long>> ygens;  // (index, order)

  for (size_t i = 0; i < std::max(R, C); ++i) {
    long long di = 0;
    if (i < R && i < C) {
      mpz_class red = snf.d.at(i, i) % static_cast<long>(l);
      di = ll_mod(red.get_si(), l);
    }
    long long ci = i < R ? c[i] : 0;
    if (i >= C) {
      // equation with no variable: 0 == ci
      if (ci % l != 0) return res;  // inconsistent
      continue;
    }
    long long g = llgcd(di, l);  // gcd(0, l) = l
    if (i >= R) g = l;           // variable with no equation: free
    if (g == l && di == 0) {
      // free variable (equation is 0 * y_i == ci)
      if (i < R && ci % l != 0) return res;
      ygens.emplace_back(i, l);
      continue;
    }
    if (ci % g != 0) return res;  // inconsistent
    const long long m = l / g;
    long long inv = ll_xgcd_inv(di / g, m);
    y[i] = ll_mod((ci / g) % m * (inv % m), m);
    if (g > 1) ygens.emplace_back(i, g);
  }

  // Map back through v: x = v * y.
  auto map_v = [&](const std::vector<long long>& yy) {
    std::vector<long long> x(C, 0);
    for (size_t i = 0; i < C; ++i) {
      mpz_class s = 0;
      for (size_t k = 0; k < C; ++k) s += snf.v.at(i, k) * static_cast<long>(yy[k]);
      mpz_class red = s % static_cast<long>(l);
      x[i] = ll_mod(red.get_si(), l);
    }
    return x;
  };

  res.consistent = true;
  res.particular = map_v(y);
  res.count = 1;
  for (const auto& [idx, order] : ygens) {
    std::vector<long long> e(C, 0);
    e[idx] = (order == l) ? 1 : l / order;
    res.kernel.emplace_back(map_v(e), order);
    res.count *= static_cast<long>(order);
  }
  return res;
}

void for_each_solution(
    const ModSolveResult& r, long long l,
    const std::function<void(const std::vector<long long>&)>& fn) {
  if (!r.consistent) return;
  const size_t n = r.particular.size();
  std::vector<long long> counters(r.kernel.size(), 0);
  std::vector<long long> x = r.particular;
  for (;;) {
    fn(x);
    size_t k = 0;
    for (; k < counters.size(); ++k) {
      ++counters[k];
      if (counters[k] < r.kernel[k].second) break;
      counters[k] = 0;
    }
    if (k == counters.size()) return;
    // recompute x (solution counts are tiny; clarity over speed)
    x = r.particular;
    for (size_t i = 0; i < counters.size(); ++i)
      for (size_t j = 0; j < n; ++j)
        x[j] = ll_mod(x[j] + counters[i] * r.kernel[i].first[j], l);
  }
}

std::vector<std::vector<long long>> howell_basis(
    std::vector<std::vector<long long>> rows, size_t n, long long l) {
  for (auto& r : rows) {
    if (r.size() != n) throw Error("howell_basis: row size mismatch");
    for (auto& x : r) x = ll_mod(x, l);
  }
  std::vector<std::vector<long long>> basis;  // triangular, pivot cols strict
  std::vector<std::vector<long long>> work = std::move(rows);

  auto insert_row = [&](std::vector<long long> r, auto&& self) -> void {
    for (size_t j = 0; j < n; ++j) {
      if (r[j] == 0) continue;
      // find basis row with pivot at j
      size_t bi = basis.size();
      for (size_t i = 0; i < basis.size(); ++i) {
        size_t pj = 0;
        while (pj < n && basis[i][pj] == 0) ++pj;
        if (pj == j) {
          bi = i;
          break;
        }
      }
      if (bi == basis.size()) {
        // new pivot: normalize so pivot is gcd(val, l), queue annihilator
        long long val = r[j];
        long long g = llgcd(val, l);  // g < l since val != 0 mod l
        long long unit = ll_mod(ll_xgcd_inv(val / g, l / g), l / g);
        std::vector<long long> nr(n);
        for (size_t k = 0; k < n; ++k) nr[k] = ll_mod(r[k] * unit, l);
        // pivot now equals g
        basis.push_back(nr);
        if (l / g > 1 && g > 1) {
          std::vector<long long> ann(n);
          for (size_t k = 0; k < n; ++k) ann[k] = ll_mod(nr[k] * (l / g), l);
          self(std::move(ann), self);
        }
        return;
      }
      long long p = basis[bi][j];  // canonical: p | l
      long long e = r[j];
      if (e % p == 0) {
        long long f = e / p;
        for (size_t k = 0; k < n; ++k)
          r[k] = ll_mod(r[k] - f * basis[bi][k], l);
      } else {
        // combine: gcd drops; replace basis row, re-insert both remainders
        long long g = llgcd(p, e);
        long long s = ll_xgcd_inv(p, e);  // s*p + t*e == g over Z
        long long t = (g - s * p) / e;
        std::vector<long long> comb(n), other(n);
        for (size_t k = 0; k < n; ++k) {
          comb[k] = ll_mod(s * basis[bi][k] + t * r[k], l);
          other[k] = ll_mod((e / g) * basis[bi][k] - (p / g) * r[k], l);
        }
        basis.erase(basis.begin() + bi);
        self(std::move(comb), self);
        self(std::move(other), self);
        return;
      }
    }
  };
  for (auto& r : work) insert_row(std::move(r), insert_row);

  // Reduce entries above each pivot and sort by pivot column.
  std::sort(basis.begin(), basis.end(), [&](const auto& x, const auto& y) {
    size_t px = 0, py = 0;
    while (px < n && x[px] == 0) ++px;
    while (py < n && y[py] == 0) ++py;
    return px < py;
  });
  for (size_t i = 0; i < basis.size(); ++i) {
    size_t j = 0;
    while (j < n && basis[i][j] == 0) ++j;
    if (j == n) continue;
    long long p = basis[i][j];
    for (size_t k = 0; k < i; ++k) {
      long long e = basis[k][j];
      long long f = e / p;
      if (f != 0)
        for (size_t m = 0; m < n; ++m)
          basis[k][m] = ll_mod(basis[k][m] - f * basis[i][m], l);
    }
  }
  return basis;
}

bool in_span_mod_l(const std::vector<std::vector<long long>>& basis,
                   std::vector<long long> v, long long l) {
  const size_t n = v.size();
  for (auto& x : v) x = ll_mod(x, l);
  for (const auto& row : basis) {
    size_t j = 0;
    while (j < n && row[j] == 0) ++j;
    if (j == n) continue;
    if (v[j] == 0) continue;
    long long p = row[j];
    if (v[j] % p != 0) return false;
    long long f = v[j] / p;
    for (size_t k = 0; k < n; ++k) v[k] = ll_mod(v[k] - f * row[k], l);
  }
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

std::vector<std::vector<long long>> subgroup_elements(
    const std::vector<std::vector<long long>>& gens, size_t n, long long l) {
  std::set<std::vector<long long>> seen;
  std::vector<long long> zero(n, 0);
  seen.insert(zero);
  std::vector<std::vector<long long>> queue = {zero};
  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      if (g.size() != n) throw Error("subgroup_elements: size mismatch");
      std::vector<long long> nx(n);
      for (size_t i = 0; i < n; ++i) nx[i] = ll_mod(cur[i] + g[i], l);
      if (seen.insert(nx).second) queue.push_back(nx);
    }
  }
  return std::vector<std::vector<long long>>(seen.begin(), seen.end());
}

}  // namespace qtw
