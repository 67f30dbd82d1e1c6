#pragma once

// Simply laced root-system combinatorics and the mod-l lattice data attached
// to a Belavin-Drinfeld triple:
//  * root systems of types A1..A4 and D4, with a canonical convex ordering of
//    the positive roots coming from a greedy reduced word for the longest
//    Weyl element,
//  * enumeration of Belavin-Drinfeld triples (nilpotent form-preserving
//    bijections between sets of simple roots),
//  * admissibility checks for the order l of the root of unity,
//  * the subgroups L, L^perp, G_i, G_i^perp of (Z/l)^rank, the extension
//    T_ext of the triple's map to the whole group, projections for the
//    orthogonal splitting G = L + L^perp, and rho,
//  * the antisymmetric bicharacter exponents s solving
//      2 s(alpha - T alpha, nu) = omega(alpha + T alpha, nu)  (mod l),
//  * the associated endomorphisms mu -> B(mu) of a bicharacter exponent b,
//    defined by b(mu, nu) = omega(B(mu), nu).

#include <optional>
#include <string>
#include <vector>

#include "qtw/modl.hpp"

namespace qtw {

// ---------------------------------------------------------------------------
// root systems

struct RootSystem {
  char type = 'A';
  unsigned rank = 0;
  IntMat cartan;  // symmetric Gram matrix of the simple roots

  // Positive roots in simple-root coordinates, listed in the convex order
  // mu_t = s_{i_1} ... s_{i_{t-1}} (alpha_{i_t}) induced by reduced_word.
  std::vector<std::vector<int>> pos_roots;
  std::vector<unsigned> reduced_word;  // reduced word for the longest element

  size_t num_pos() const { return pos_roots.size(); }

  // the symmetric bilinear form in simple-root coordinates
  long long form(const std::vector<int>& a, const std::vector<int>& b) const;

  // index of a positive root in the convex order (throws if absent)
  size_t root_index(const std::vector<int>& r) const;

  std::vector<int> simple(unsigned i) const;  // i-th simple root, 0-based
  std::vector<int> rho_vector() const;        // sum of all positive roots
};

// Supported: ('A', 1..4) and ('D', 4).  Anything else throws.
RootSystem build_root_system(char type, unsigned rank);

// ---------------------------------------------------------------------------
// Belavin-Drinfeld triples

struct BDTriple {
  // gamma1 is sorted; gamma2[i] is the image of gamma1[i].  Indices are
  // 0-based positions of simple roots.
  std::vector<unsigned> gamma1;
  std::vector<unsigned> gamma2;

  bool empty() const { return gamma1.empty(); }
  size_t size() const { return gamma1.size(); }
  std::optional<unsigned> image_of(unsigned a) const;
  std::optional<unsigned> preimage_of(unsigned b) const;
  std::string str() const;  // e.g. "{a1->a3}" or "{}" for the empty triple
};

// All triples on rs, including the empty one, in a deterministic order.
std::vector<BDTriple> enumerate_bd_triples(const RootSystem& rs);

// Largest n >= 0 such that T^n is defined (nonzero) on some simple root,
// i.e. the number of R-factors in the twist built from the triple.
unsigned nilpotence_degree(const BDTriple& t);

// ---------------------------------------------------------------------------
// admissibility of l

struct AdmissibilityReport {
  bool ok = true;
  std::string diagnostics;  // names the failing condition when !ok
};

// l is admissible for (rs, t) when l is odd and >= 3, gcd(l, det Cartan) = 1,
// and the Gram/pairing matrices of {alpha - T alpha}, of each Gamma_i, and of
// Gamma_i x {alpha - T alpha} all have unit determinant mod l.
AdmissibilityReport check_l_admissible(const RootSystem& rs, const BDTriple& t,
                                       long long l);

// ---------------------------------------------------------------------------
// mod-l matrices (entries normalized to [0, l)), acting on column vectors

using VecL = std::vector<long long>;
using MatL = std::vector<VecL>;  // row-major

MatL matl_identity(size_t n);
MatL matl_zero(size_t rows, size_t cols);
MatL matl_mul(const MatL& a, const MatL& b, long long l);
MatL matl_add(const MatL& a, const MatL& b, long long l);
MatL matl_transpose(const MatL& m);
MatL matl_inverse(const MatL& m, long long l);  // throws when not invertible
VecL matl_apply(const MatL& m, const VecL& v, long long l);
bool matl_eq(const MatL& a, const MatL& b);
VecL vec_mod_l(const std::vector<int>& v, long long l);
VecL vec_add(const VecL& a, const VecL& b, long long l);
VecL vec_sub(const VecL& a, const VecL& b, long long l);
bool vec_is_zero(const VecL& v);

// v^T m w  (mod l)
long long bilinear(const MatL& m, const VecL& v, const VecL& w, long long l);

// order of the subgroup of (Z/l)^n spanned by a Howell basis
mpz_class subgroup_order(const std::vector<VecL>& howell, long long l);

// ---------------------------------------------------------------------------
// lattice data of a triple at an admissible l

struct LatticeData {
  long long l = 0;
  RootSystem rs;
  BDTriple triple;

  MatL omega;      // Cartan form mod l
  MatL omega_inv;  // inverse of omega mod l

  // Howell bases of subgroups of (Z/l)^rank
  MatL L;       // {mu : omega(alpha - T alpha, mu) = 0 for all alpha in Gamma1}
  MatL Lperp;   // span{alpha - T alpha}
  MatL G1, G2;  // spans of Gamma1 / Gamma2
  MatL G1perp, G2perp;  // kernels of the pairing against Gamma1 / Gamma2

  // coordinates: column j of coord_L is the L-basis coordinate vector of the
  // L-component of e_j under G = L + L^perp (likewise coord_Lperp)
  MatL coord_L, coord_Lperp;
  MatL proj_L, proj_Lperp;  // the projections themselves (rank x rank)

  MatL t_ext;  // acts as T on G1 and as the identity on L
  MatL t_ext_inv;

  VecL rho;  // sum of positive roots mod l

  long long pair(const VecL& a, const VecL& b) const {
    return bilinear(omega, a, b, l);
  }
  VecL bar(const VecL& v) const { return matl_apply(proj_L, v, l); }
  VecL perp_part(const VecL& v) const { return matl_apply(proj_Lperp, v, l); }
  VecL apply_t(const VecL& v) const { return matl_apply(t_ext, v, l); }
  VecL apply_t_inv(const VecL& v) const { return matl_apply(t_ext_inv, v, l); }
};

// Throws Error (with the admissibility diagnostics) when l is not admissible;
// verifies every structural invariant of the result before returning.
LatticeData compute_lattices(const RootSystem& rs, const BDTriple& t,
                             long long l);

// ---------------------------------------------------------------------------
// bicharacter exponent solutions

struct BicharSolution {
  MatL s;  // antisymmetric rank x rank matrix mod l
};

// All antisymmetric s with 2 s(alpha - T alpha, nu) = omega(alpha + T alpha, nu)
// mod l for alpha in Gamma1 and nu ranging over the standard basis.  The
// first entry is the unique solution vanishing on L x L; the rest differ from
// it by the pullbacks of antisymmetric forms on L.  There are exactly
// l^(k(k-1)/2) of them, k = rank - |Gamma1|.
std::vector<BicharSolution> solve_eqs(const LatticeData& ld);

// matrix of mu -> B(mu) defined by b(mu, nu) = omega(B(mu), nu): omega^{-1} b^T
MatL bichar_assoc_map(const MatL& b, const LatticeData& ld);
// the same for the flipped exponent b_21(mu, nu) = b(nu, mu): omega^{-1} b
MatL bichar_assoc_map_21(const MatL& b, const LatticeData& ld);

}  // namespace qtw
