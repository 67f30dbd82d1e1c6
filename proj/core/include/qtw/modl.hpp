#pragma once

// Exact integer linear algebra used for lattice bookkeeping:
//  * Smith normal form over Z,
//  * solving linear systems modulo l (l odd, not necessarily prime),
//  * canonical (Howell) bases and element enumeration for subgroups of
//    (Z/l)^n.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "qtw/common.hpp"

namespace qtw {

struct IntMat {
  size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;  // row-major

  IntMat() = default;
  IntMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  mpz_class& at(size_t r, size_t c) { return a[r * cols + c]; }
  const mpz_class& at(size_t r, size_t c) const { return a[r * cols + c]; }

  static IntMat identity(size_t n);
  IntMat mul(const IntMat& o) const;
  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

/// u * input * v == d, with u, v unimodular and d diagonal with a
/// divisibility chain d[0] | d[1] | ... (nonnegative diagonal).
struct SNFResult {
  IntMat u, d, v;
};

SNFResult smith_normal_form(const IntMat& m);

/// Determinant (Bareiss fraction-free elimination); square matrices only.
mpz_class int_det(const IntMat& m);

/// Solution of a * x == b (mod l) over x in (Z/l)^cols.
struct ModSolveResult {
  bool consistent = false;
  std::vector<long long> particular;  // size cols when consistent
  /// Generators of the homogeneous solution group together with their orders;
  /// every solution is particular + sum c_i * gen_i with 0 <= c_i < order_i.
  std::vector<std::pair<std::vector<long long>, long long>> kernel;
  mpz_class count = 0;  // number of distinct solutions mod l
};

ModSolveResult solve_mod_l(const IntMat& a, const std::vector<long long>& b,
                           long long l);

/// Invokes fn for every solution of a consistent system (count must be
/// finite/small; the caller is responsible for sizing).
void for_each_solution(const ModSolveResult& r, long long l,
                       const std::function<void(const std::vector<long long>&)>& fn);

/// Canonical row basis (Howell form) of the subgroup of (Z/l)^n generated by
/// the given row vectors.  For prime l this is the reduced row echelon form.
std::vector<std::vector<long long>> howell_basis(
    std::vector<std::vector<long long>> rows, size_t n, long long l);

/// Is v in the row span (mod l) of a Howell basis?
bool in_span_mod_l(const std::vector<std::vector<long long>>& basis,
                   std::vector<long long> v, long long l);

/// All elements of the subgroup generated by `gens` in (Z/l)^n, as sorted
/// coordinate vectors (closure enumeration; intended for small subgroups).
std::vector<std::vector<long long>> subgroup_elements(
    const std::vector<std::vector<long long>>& gens, size_t n, long long l);

}  // namespace qtw
