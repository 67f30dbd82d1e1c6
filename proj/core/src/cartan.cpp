#include "qtw/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qtw {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("lattice invariant failed: " + what);
}

std::string root_name(unsigned i) { return "a" + std::to_string(i + 1); }

}  // namespace

// ---------------------------------------------------------------------------
// RootSystem

long long RootSystem::form(const std::vector<int>& a,
                           const std::vector<int>& b) const {
  long long s = 0;
  for (unsigned i = 0; i < rank; ++i)
    for (unsigned j = 0; j < rank; ++j)
      s += static_cast<long long>(a[i]) * mpz_get_si(cartan.at(i, j).get_mpz_t()) * b[j];
  return s;
}

size_t RootSystem::root_index(const std::vector<int>& r) const {
  for (size_t i = 0; i < pos_roots.size(); ++i)
    if (pos_roots[i] == r) return i;
  throw Error("not a positive root");
}

std::vector<int> RootSystem::simple(unsigned i) const {
  std::vector<int> v(rank, 0);
  v[i] = 1;
  return v;
}

std::vector<int> RootSystem::rho_vector() const {
  std::vector<int> v(rank, 0);
  for (const auto& r : pos_roots)
    for (unsigned i = 0; i < rank; ++i) v[i] += r[i];
  return v;
}

RootSystem build_root_system(char type, unsigned rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  if (type == 'A') {
    if (rank < 1 || rank > 4)
      throw Error("type A is supported for rank 1..4 only");
  } else if (type == 'D') {
    if (rank != 4)
      throw Error("type D is supported for rank 4 only");
  } else {
    throw Error(std::string("unsupported type '") + type +
                "'; supported: A (rank 1..4) and D (rank 4)");
  }

  rs.cartan = IntMat(rank, rank);
  for (unsigned i = 0; i < rank; ++i) rs.cartan.at(i, i) = 2;
  auto join = [&](unsigned i, unsigned j) {
    rs.cartan.at(i, j) = -1;
    rs.cartan.at(j, i) = -1;
  };
  if (type == 'A') {
    for (unsigned i = 0; i + 1 < rank; ++i) join(i, i + 1);
  } else {  // D4: node 1 is the center
    join(0, 1);
    join(1, 2);
    join(1, 3);
  }

  // Greedy reduced word for the longest element: track the pairings
  // p_i = (lambda, alpha_i) of a strictly dominant weight and repeatedly
  // reflect at the smallest index with a positive pairing.
  std::vector<long long> p(rank, 1);
  for (size_t guard = 0; guard < 1000; ++guard) {
    unsigned j = rank;
    for (unsigned i = 0; i < rank; ++i)
      if (p[i] > 0) {
        j = i;
        break;
      }
    if (j == rank) break;
    rs.reduced_word.push_back(j);
    const long long pj = p[j];
    for (unsigned i = 0; i < rank; ++i)
      p[i] -= pj * mpz_get_si(rs.cartan.at(j, i).get_mpz_t());
  }

  // positive roots in convex order: mu_t = s_{i_1} ... s_{i_{t-1}}(alpha_{i_t})
  auto reflect = [&](std::vector<int> v, unsigned j) {
    long long c = 0;
    for (unsigned i = 0; i < rank; ++i)
      c += static_cast<long long>(v[i]) * mpz_get_si(rs.cartan.at(i, j).get_mpz_t());
    v[j] -= static_cast<int>(c);
    return v;
  };
  for (size_t t = 0; t < rs.reduced_word.size(); ++t) {
    std::vector<int> v(rank, 0);
    v[rs.reduced_word[t]] = 1;
    for (size_t s = t; s-- > 0;) v = reflect(v, rs.reduced_word[s]);
    rs.pos_roots.push_back(v);
  }

  // validate against an independent reflection closure of the simple roots
  std::set<std::vector<int>> closure;
  for (unsigned i = 0; i < rank; ++i) closure.insert(rs.simple(i));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<int>> cur(closure.begin(), closure.end());
    for (const auto& r : cur)
      for (unsigned j = 0; j < rank; ++j) {
        auto im = reflect(r, j);
        bool pos = false, neg = false;
        for (int x : im) {
          if (x > 0) pos = true;
          if (x < 0) neg = true;
        }
        if (pos && !neg && closure.insert(im).second) grew = true;
      }
  }
  const size_t expected =
      type == 'A' ? static_cast<size_t>(rank) * (rank + 1) / 2 : 12;
  std::set<std::vector<int>> from_word(rs.pos_roots.begin(),
                                       rs.pos_roots.end());
  if (rs.pos_roots.size() != expected || from_word != closure)
    throw Error("root enumeration failed an internal consistency check");
  return rs;
}

// ---------------------------------------------------------------------------
// BDTriple

std::optional<unsigned> BDTriple::image_of(unsigned a) const {
  for (size_t i = 0; i < gamma1.size(); ++i)
    if (gamma1[i] == a) return gamma2[i];
  return std::nullopt;
}

std::optional<unsigned> BDTriple::preimage_of(unsigned b) const {
  for (size_t i = 0; i < gamma2.size(); ++i)
    if (gamma2[i] == b) return gamma1[i];
  return std::nullopt;
}

std::string BDTriple::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < gamma1.size(); ++i) {
    if (i) os << ", ";
    os << root_name(gamma1[i]) << "->" << root_name(gamma2[i]);
  }
  os << "}";
  return os.str();
}

namespace {

bool is_nilpotent(const BDTriple& t, unsigned rank) {
  for (unsigned a : t.gamma1) {
    unsigned x = a, steps = 0;
    while (auto im = t.image_of(x)) {
      x = *im;
      if (++steps > rank) return false;  // must have revisited: a cycle
    }
  }
  return true;
}

}  // namespace

std::vector<BDTriple> enumerate_bd_triples(const RootSystem& rs) {
  const unsigned r = rs.rank;
  std::vector<BDTriple> out;
  for (unsigned mask1 = 0; mask1 < (1u << r); ++mask1) {
    std::vector<unsigned> g1;
    for (unsigned i = 0; i < r; ++i)
      if (mask1 & (1u << i)) g1.push_back(i);
    for (unsigned mask2 = 0; mask2 < (1u << r); ++mask2) {
      std::vector<unsigned> g2;
      for (unsigned i = 0; i < r; ++i)
        if (mask2 & (1u << i)) g2.push_back(i);
      if (g2.size() != g1.size()) continue;
      std::vector<unsigned> perm = g2;  // sorted: lexicographically first
      do {
        bool preserves = true;
        for (size_t i = 0; i < g1.size() && preserves; ++i)
          for (size_t j = 0; j < g1.size() && preserves; ++j)
            if (rs.cartan.at(g1[i], g1[j]) != rs.cartan.at(perm[i], perm[j]))
              preserves = false;
        if (!preserves) continue;
        BDTriple t{g1, perm};
        if (is_nilpotent(t, r)) out.push_back(t);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

unsigned nilpotence_degree(const BDTriple& t) {
  unsigned deg = 0;
  for (unsigned a : t.gamma1) {
    unsigned x = a, steps = 0;
    while (auto im = t.image_of(x)) {
      x = *im;
      ++steps;
    }
    deg = std::max(deg, steps);
  }
  return deg;
}

// ---------------------------------------------------------------------------
// admissibility

namespace {

std::vector<std::vector<int>> triple_diffs(const RootSystem& rs,
                                           const BDTriple& t) {
  std::vector<std::vector<int>> diffs;
  for (size_t i = 0; i < t.gamma1.size(); ++i) {
    std::vector<int> d(rs.rank, 0);
    d[t.gamma1[i]] += 1;
    d[t.gamma2[i]] -= 1;
    diffs.push_back(d);
  }
  return diffs;
}

bool unit_mod(const mpz_class& det, long long l) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), det.get_mpz_t(), mpz_class(static_cast<long>(l)).get_mpz_t());
  return g == 1;
}

}  // namespace

AdmissibilityReport check_l_admissible(const RootSystem& rs, const BDTriple& t,
                                       long long l) {
  AdmissibilityReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.diagnostics = msg;
    return rep;
  };
  if (l < 3 || l % 2 == 0)
    return fail("l must be an odd integer >= 3 (got " + std::to_string(l) + ")");

  const mpz_class cartan_det = int_det(rs.cartan);
  if (!unit_mod(cartan_det, l))
    return fail("l = " + std::to_string(l) +
                " shares a factor with the Cartan determinant " +
                cartan_det.get_str());

  const auto diffs = triple_diffs(rs, t);
  const size_t m = diffs.size();
  if (m > 0) {
    IntMat gram(m, m);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        gram.at(i, j) = static_cast<long>(rs.form(diffs[i], diffs[j]));
    const mpz_class d = int_det(gram);
    if (!unit_mod(d, l))
      return fail("Gram determinant of {alpha - T(alpha)} is " + d.get_str() +
                  ", not a unit mod " + std::to_string(l));

    const std::vector<unsigned>* gammas[2] = {&t.gamma1, &t.gamma2};
    for (int side = 0; side < 2; ++side) {
      const auto& g = *gammas[side];
      IntMat sub(m, m);
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) sub.at(i, j) = rs.cartan.at(g[i], g[j]);
      const mpz_class ds = int_det(sub);
      if (!unit_mod(ds, l))
        return fail("Gram determinant of Gamma_" + std::to_string(side + 1) +
                    " is " + ds.get_str() + ", not a unit mod " +
                    std::to_string(l));
      IntMat pairing(m, m);
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
          pairing.at(i, j) =
              static_cast<long>(rs.form(rs.simple(g[i]), diffs[j]));
      const mpz_class dp = int_det(pairing);
      if (!unit_mod(dp, l))
        return fail("pairing determinant of Gamma_" + std::to_string(side + 1) +
                    " x {alpha - T(alpha)} is " + dp.get_str() +
                    ", not a unit mod " + std::to_string(l));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// mod-l matrix helpers

MatL matl_identity(size_t n) {
  MatL m(n, VecL(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

MatL matl_zero(size_t rows, size_t cols) { return MatL(rows, VecL(cols, 0)); }

MatL matl_mul(const MatL& a, const MatL& b, long long l) {
  const size_t n = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  MatL out(n, VecL(c, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < c; ++j)
        out[i][j] = mod_positive(out[i][j] + a[i][t] * b[t][j], l);
    }
  return out;
}

MatL matl_add(const MatL& a, const MatL& b, long long l) {
  MatL out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      out[i][j] = mod_positive(a[i][j] + b[i][j], l);
  return out;
}

MatL matl_transpose(const MatL& m) {
  const size_t r = m.size(), c = r ? m[0].size() : 0;
  MatL out(c, VecL(r, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) out[j][i] = m[i][j];
  return out;
}

MatL matl_inverse(const MatL& m, long long l) {
  const size_t n = m.size();
  IntMat a(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a.at(i, j) = static_cast<long>(m[i][j]);
  MatL inv(n, VecL(n, 0));
  for (size_t j = 0; j < n; ++j) {
    std::vector<long long> e(n, 0);
    e[j] = 1;
    auto res = solve_mod_l(a, e, l);
    if (!res.consistent || res.count != 1)
      throw Error("matrix is not invertible mod l");
    for (size_t i = 0; i < n; ++i) inv[i][j] = mod_positive(res.particular[i], l);
  }
  return inv;
}

VecL matl_apply(const MatL& m, const VecL& v, long long l) {
  VecL out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    long long s = 0;
    for (size_t j = 0; j < v.size(); ++j) s += m[i][j] * v[j];
    out[i] = mod_positive(s, l);
  }
  return out;
}

bool matl_eq(const MatL& a, const MatL& b) { return a == b; }

VecL vec_mod_l(const std::vector<int>& v, long long l) {
  VecL out(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) out[i] = mod_positive(v[i], l);
  return out;
}

VecL vec_add(const VecL& a, const VecL& b, long long l) {
  VecL out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] = mod_positive(a[i] + b[i], l);
  return out;
}

VecL vec_sub(const VecL& a, const VecL& b, long long l) {
  VecL out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] = mod_positive(a[i] - b[i], l);
  return out;
}

bool vec_is_zero(const VecL& v) {
  for (long long x : v)
    if (x != 0) return false;
  return true;
}

long long bilinear(const MatL& m, const VecL& v, const VecL& w, long long l) {
  long long s = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    long long row = 0;
    for (size_t j = 0; j < w.size(); ++j)
      row = mod_positive(row + m[i][j] * w[j], l);
    s = mod_positive(s + v[i] * row, l);
  }
  return s;
}

mpz_class subgroup_order(const std::vector<VecL>& howell, long long l) {
  mpz_class order = 1;
  for (const auto& row : howell) {
    long long pivot = 0;
    for (long long x : row)
      if (x != 0) {
        pivot = x;
        break;
      }
    if (pivot == 0) continue;
    long long g = std::gcd(pivot, l);
    order *= static_cast<long>(l / g);
  }
  return order;
}

// ---------------------------------------------------------------------------
// lattice data

namespace {

// Howell basis of the joint kernel {x : rows . x = 0 mod l}.
MatL kernel_basis(const std::vector<VecL>& rows, size_t n, long long l) {
  if (rows.empty()) return matl_identity(n);
  IntMat a(rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < n; ++j) a.at(i, j) = static_cast<long>(rows[i][j]);
  auto res = solve_mod_l(a, std::vector<long long>(rows.size(), 0), l);
  require(res.consistent, "homogeneous system must be consistent");
  std::vector<VecL> gens;
  for (const auto& [gen, order] : res.kernel) gens.push_back(gen);
  return howell_basis(gens, n, l);
}

mpz_class l_pow(long long l, size_t e) {
  mpz_class p = 1;
  for (size_t i = 0; i < e; ++i) p *= static_cast<long>(l);
  return p;
}

// columns of `cols` are concatenated basis vectors; expresses v uniquely
std::vector<long long> express_in(const std::vector<VecL>& cols, const VecL& v,
                                  long long l, const std::string& what) {
  const size_t n = v.size();
  IntMat m(n, cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < n; ++i) m.at(i, j) = static_cast<long>(cols[j][i]);
  auto res = solve_mod_l(m, v, l);
  require(res.consistent && res.count == 1, "unique expression in " + what);
  for (auto& c : res.particular) c = mod_positive(c, l);
  return res.particular;
}

}  // namespace

LatticeData compute_lattices(const RootSystem& rs, const BDTriple& t,
                             long long l) {
  auto rep = check_l_admissible(rs, t, l);
  if (!rep.ok) throw Error("inadmissible l: " + rep.diagnostics);

  LatticeData ld;
  ld.l = l;
  ld.rs = rs;
  ld.triple = t;
  const size_t r = rs.rank;

  ld.omega = matl_zero(r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      ld.omega[i][j] =
          mod_positive(mpz_get_si(rs.cartan.at(i, j).get_mpz_t()), l);
  ld.omega_inv = matl_inverse(ld.omega, l);

  // L^perp = span{alpha - T(alpha)}, L = its orthogonal complement
  const auto diffs_int = triple_diffs(rs, t);
  std::vector<VecL> diffs, omega_rows;
  for (const auto& d : diffs_int) {
    diffs.push_back(vec_mod_l(d, l));
    VecL row(r, 0);
    for (size_t j = 0; j < r; ++j) {
      std::vector<int> ej(r, 0);
      ej[j] = 1;
      row[j] = mod_positive(rs.form(d, ej), l);
    }
    omega_rows.push_back(row);
  }
  ld.Lperp = howell_basis(diffs, r, l);
  ld.L = kernel_basis(omega_rows, r, l);

  // G_i = span Gamma_i, G_i^perp = kernel of pairing against Gamma_i
  auto span_of = [&](const std::vector<unsigned>& gamma) {
    std::vector<VecL> rows;
    for (unsigned g : gamma) rows.push_back(vec_mod_l(rs.simple(g), l));
    return howell_basis(rows, r, l);
  };
  auto perp_of = [&](const std::vector<unsigned>& gamma) {
    std::vector<VecL> rows;
    for (unsigned g : gamma) {
      VecL row(r, 0);
      for (size_t j = 0; j < r; ++j) {
        std::vector<int> ej(r, 0);
        ej[j] = 1;
        row[j] = mod_positive(rs.form(rs.simple(g), ej), l);
      }
      rows.push_back(row);
    }
    return kernel_basis(rows, r, l);
  };
  ld.G1 = span_of(t.gamma1);
  ld.G2 = span_of(t.gamma2);
  ld.G1perp = perp_of(t.gamma1);
  ld.G2perp = perp_of(t.gamma2);

  const size_t m = t.size(), k = r - m;
  require(subgroup_order(ld.Lperp, l) == l_pow(l, m), "|L^perp| = l^|Gamma1|");
  require(subgroup_order(ld.L, l) == l_pow(l, k), "|L| = l^(rank-|Gamma1|)");
  require(subgroup_order(ld.G1, l) == l_pow(l, m), "|G1| = l^|Gamma1|");
  require(subgroup_order(ld.G2, l) == l_pow(l, m), "|G2| = l^|Gamma2|");
  require(subgroup_order(ld.G1perp, l) == l_pow(l, k), "|G1perp|");
  require(subgroup_order(ld.G2perp, l) == l_pow(l, k), "|G2perp|");
  {
    std::vector<VecL> both = ld.L;
    both.insert(both.end(), ld.Lperp.begin(), ld.Lperp.end());
    require(subgroup_order(howell_basis(both, r, l), l) == l_pow(l, r),
            "L + L^perp spans everything");
    std::vector<VecL> g1l = ld.G1;
    g1l.insert(g1l.end(), ld.L.begin(), ld.L.end());
    require(subgroup_order(howell_basis(g1l, r, l), l) == l_pow(l, r),
            "G1 + L spans everything");
  }

  // splitting G = L + L^perp: coordinates and projections
  {
    std::vector<VecL> cols;
    for (const auto& v : ld.L) cols.push_back(v);
    for (const auto& v : ld.Lperp) cols.push_back(v);
    const size_t kL = ld.L.size(), kP = ld.Lperp.size();
    ld.coord_L = matl_zero(kL, r);
    ld.coord_Lperp = matl_zero(kP, r);
    for (size_t j = 0; j < r; ++j) {
      VecL ej(r, 0);
      ej[j] = 1;
      auto c = express_in(cols, ej, l, "L + L^perp");
      for (size_t i = 0; i < kL; ++i) ld.coord_L[i][j] = c[i];
      for (size_t i = 0; i < kP; ++i) ld.coord_Lperp[i][j] = c[kL + i];
    }
    auto proj_from = [&](const MatL& basis, const MatL& coord) {
      return basis.empty() ? matl_zero(r, r)
                           : matl_mul(matl_transpose(basis), coord, l);
    };
    ld.proj_L = proj_from(ld.L, ld.coord_L);
    ld.proj_Lperp = proj_from(ld.Lperp, ld.coord_Lperp);
    require(matl_eq(matl_add(ld.proj_L, ld.proj_Lperp, l), matl_identity(r)),
            "projections sum to the identity");
    require(matl_eq(matl_mul(ld.proj_L, ld.proj_L, l), ld.proj_L),
            "proj_L is idempotent");
    require(matl_eq(matl_mul(ld.proj_Lperp, ld.proj_Lperp, l), ld.proj_Lperp),
            "proj_Lperp is idempotent");
    const MatL cross = matl_mul(
        matl_transpose(ld.proj_L), matl_mul(ld.omega, ld.proj_Lperp, l), l);
    require(matl_eq(cross, matl_zero(r, r)), "L is orthogonal to L^perp");
  }

  // T_ext: write e_j = g + m with g in G1, m in L; map g through T
  {
    std::vector<VecL> cols;
    std::vector<unsigned> g1_sources;
    for (unsigned a : t.gamma1) {
      cols.push_back(vec_mod_l(rs.simple(a), l));
      g1_sources.push_back(a);
    }
    for (const auto& v : ld.L) cols.push_back(v);
    ld.t_ext = matl_zero(r, r);
    for (size_t j = 0; j < r; ++j) {
      VecL ej(r, 0);
      ej[j] = 1;
      auto c = express_in(cols, ej, l, "G1 + L");
      VecL img(r, 0);
      for (size_t a = 0; a < g1_sources.size(); ++a) {
        const unsigned target = *t.image_of(g1_sources[a]);
        VecL ta = vec_mod_l(rs.simple(target), l);
        for (size_t i = 0; i < r; ++i)
          img[i] = mod_positive(img[i] + c[a] * ta[i], l);
      }
      for (size_t i2 = 0; i2 < ld.L.size(); ++i2)
        for (size_t i = 0; i < r; ++i)
          img[i] = mod_positive(img[i] + c[g1_sources.size() + i2] * ld.L[i2][i], l);
      for (size_t i = 0; i < r; ++i) ld.t_ext[i][j] = img[i];
    }
    ld.t_ext_inv = matl_inverse(ld.t_ext, l);
    const MatL twisted = matl_mul(matl_transpose(ld.t_ext),
                                  matl_mul(ld.omega, ld.t_ext, l), l);
    require(matl_eq(twisted, ld.omega), "T_ext preserves the form");
    for (const auto& v : ld.L)
      require(matl_apply(ld.t_ext, v, l) == v, "T_ext fixes L pointwise");
    for (size_t i = 0; i < t.size(); ++i)
      require(matl_apply(ld.t_ext, vec_mod_l(rs.simple(t.gamma1[i]), l), l) ==
                  vec_mod_l(rs.simple(t.gamma2[i]), l),
              "T_ext maps Gamma1 as the triple does");
  }

  ld.rho = vec_mod_l(rs.rho_vector(), l);
  for (size_t i = 0; i < r; ++i) {
    VecL ei(r, 0);
    ei[i] = 1;
    require(bilinear(ld.omega, ld.rho, ei, l) == mod_positive(2, l),
            "(rho, alpha_i) = 2 mod l");
  }
  require(in_span_mod_l(ld.L, ld.rho, l), "rho lies in L");

  return ld;
}

// ---------------------------------------------------------------------------
// bicharacter exponent solutions

namespace {

size_t pair_index(size_t i, size_t j, size_t r) {
  // index of (i, j), i < j, in lexicographic order
  return i * r - i * (i + 1) / 2 + (j - i - 1);
}

MatL antisym_from_pairs(const std::vector<long long>& x, size_t r,
                        long long l) {
  MatL s = matl_zero(r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j) {
      const long long v = mod_positive(x[pair_index(i, j, r)], l);
      s[i][j] = v;
      s[j][i] = mod_positive(-v, l);
    }
  return s;
}

bool satisfies_eqs(const MatL& s, const LatticeData& ld) {
  const auto& rs = ld.rs;
  const size_t r = rs.rank;
  for (size_t a = 0; a < ld.triple.size(); ++a) {
    std::vector<int> d(r, 0), sum(r, 0);
    d[ld.triple.gamma1[a]] += 1;
    d[ld.triple.gamma2[a]] -= 1;
    sum[ld.triple.gamma1[a]] += 1;
    sum[ld.triple.gamma2[a]] += 1;
    const VecL dv = vec_mod_l(d, ld.l), sv = vec_mod_l(sum, ld.l);
    for (size_t j = 0; j < r; ++j) {
      VecL ej(r, 0);
      ej[j] = 1;
      const long long lhs = mod_positive(2 * bilinear(s, dv, ej, ld.l), ld.l);
      const long long rhs = bilinear(ld.omega, sv, ej, ld.l);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<BicharSolution> solve_eqs(const LatticeData& ld) {
  const size_t r = ld.rs.rank;
  const long long l = ld.l;
  const size_t n_unknowns = r * (r - 1) / 2;
  const size_t m = ld.triple.size();

  IntMat a(m * r, n_unknowns);
  std::vector<long long> b(m * r, 0);
  for (size_t t = 0; t < m; ++t) {
    std::vector<int> d(r, 0), sum(r, 0);
    d[ld.triple.gamma1[t]] += 1;
    d[ld.triple.gamma2[t]] -= 1;
    sum[ld.triple.gamma1[t]] += 1;
    sum[ld.triple.gamma2[t]] += 1;
    for (size_t col = 0; col < r; ++col) {
      const size_t row = t * r + col;
      // 2 * sum_{i<j} s_ij (d_i [j==col] - d_j [i==col])
      for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j) {
          long long coeff = 0;
          if (j == col) coeff += d[i];
          if (i == col) coeff -= d[j];
          a.at(row, pair_index(i, j, r)) =
              static_cast<long>(mod_positive(2 * coeff, l));
        }
      std::vector<int> ecol(r, 0);
      ecol[col] = 1;
      b[row] = mod_positive(ld.rs.form(sum, ecol), l);
    }
  }

  std::vector<BicharSolution> out;
  const size_t k = r - m;
  const size_t n_free = k * (k - 1) / 2;
  mpz_class expected = l_pow(l, n_free);

  MatL s_norm;
  if (m == 0) {
    s_norm = matl_zero(r, r);
  } else {
    auto res = solve_mod_l(a, b, l);
    if (!res.consistent)
      throw Error(
          "bicharacter equations are inconsistent; the admissibility check "
          "should have rejected this l");
    require(res.count == expected,
            "solution count matches l^(k(k-1)/2)");
    MatL s0 = antisym_from_pairs(res.particular, r, l);
    // normalize: subtract the pullback of the restriction to L x L
    const size_t kL = ld.L.size();
    MatL rho_res = matl_zero(kL, kL);
    for (size_t i = 0; i < kL; ++i)
      for (size_t j = 0; j < kL; ++j)
        rho_res[i][j] = bilinear(s0, ld.L[i], ld.L[j], l);
    const MatL pull = matl_mul(matl_transpose(ld.coord_L),
                               matl_mul(rho_res, ld.coord_L, l), l);
    s_norm = matl_zero(r, r);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j)
        s_norm[i][j] = mod_positive(s0[i][j] - pull[i][j], l);
  }
  require(satisfies_eqs(s_norm, ld), "normalized particular solution solves");
  for (const auto& u : ld.L)
    for (const auto& v : ld.L)
      require(bilinear(s_norm, u, v, l) == 0,
              "normalized particular solution vanishes on L x L");

  // free part: pullbacks of the antisymmetric forms on L
  std::vector<MatL> free_basis;
  const size_t kL = ld.L.size();
  for (size_t aIdx = 0; aIdx < kL; ++aIdx)
    for (size_t bIdx = aIdx + 1; bIdx < kL; ++bIdx) {
      MatL f = matl_zero(kL, kL);
      f[aIdx][bIdx] = 1;
      f[bIdx][aIdx] = mod_positive(-1, l);
      free_basis.push_back(matl_mul(matl_transpose(ld.coord_L),
                                    matl_mul(f, ld.coord_L, l), l));
    }
  require(free_basis.size() == n_free, "free-space dimension");

  std::vector<long long> coeffs(n_free, 0);
  std::set<MatL> seen;
  for (;;) {
    MatL s = s_norm;
    for (size_t i = 0; i < n_free; ++i)
      if (coeffs[i] != 0)
        for (size_t p = 0; p < r; ++p)
          for (size_t q = 0; q < r; ++q)
            s[p][q] = mod_positive(s[p][q] + coeffs[i] * free_basis[i][p][q], l);
    require(satisfies_eqs(s, ld), "every enumerated solution solves");
    for (size_t p = 0; p < r; ++p) {
      require(s[p][p] == 0, "antisymmetric: zero diagonal");
      for (size_t q = p + 1; q < r; ++q)
        require(mod_positive(s[p][q] + s[q][p], l) == 0, "antisymmetric");
    }
    require(seen.insert(s).second, "solutions are distinct");
    out.push_back(BicharSolution{s});
    // odometer over coefficient tuples, lexicographic
    bool rolled_over = true;
    for (size_t pos = n_free; pos-- > 0;) {
      if (++coeffs[pos] < l) {
        rolled_over = false;
        break;
      }
      coeffs[pos] = 0;
    }
    if (rolled_over) break;
  }
  require(mpz_class(static_cast<long>(out.size())) == expected,
          "enumerated solution count");
  return out;
}

MatL bichar_assoc_map(const MatL& b, const LatticeData& ld) {
  return matl_mul(ld.omega_inv, matl_transpose(b), ld.l);
}

MatL bichar_assoc_map_21(const MatL& b, const LatticeData& ld) {
  return matl_mul(ld.omega_inv, b, ld.l);
}

}  // namespace qtw
