#include <doctest.h>

#include <cstdlib>
#include <set>

#include "qtw/modl.hpp"

using namespace qtw;

namespace {

IntMat make(size_t r, size_t c, std::initializer_list<long> vals) {
  IntMat m(r, c);
  size_t i = 0;
  for (long v : vals) m.a[i++] = v;
  return m;
}

void check_snf_invariants(const IntMat& a) {
  SNFResult s = smith_normal_form(a);
  CHECK(s.u.mul(a).mul(s.v) == s.d);
  CHECK(abs(int_det(s.u)) == 1);
  CHECK(abs(int_det(s.v)) == 1);
  // diagonal, nonnegative, divisibility chain
  for (size_t i = 0; i < s.d.rows; ++i)
    for (size_t j = 0; j < s.d.cols; ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
  mpz_class prev = 0;
  for (size_t i = 0; i < std::min(s.d.rows, s.d.cols); ++i) {
    const mpz_class& di = s.d.at(i, i);
    CHECK(di >= 0);
    if (prev != 0 && di != 0) CHECK(di % prev == 0);
    if (prev == 0) CHECK((i == 0 || di == 0));
    prev = di;
  }
}

}  // namespace

TEST_CASE("smith normal form on known matrices") {
  IntMat a = make(2, 2, {2, 4, 6, 8});
  SNFResult s = smith_normal_form(a);
  CHECK(s.d.at(0, 0) == 2);
  CHECK(s.d.at(1, 1) == 4);
  check_snf_invariants(a);

  IntMat cartanA2 = make(2, 2, {2, -1, -1, 2});
  s = smith_normal_form(cartanA2);
  CHECK(s.d.at(0, 0) == 1);
  CHECK(s.d.at(1, 1) == 3);
  check_snf_invariants(cartanA2);

  IntMat zero = make(2, 3, {0, 0, 0, 0, 0, 0});
  s = smith_normal_form(zero);
  CHECK(s.d.at(0, 0) == 0);
  check_snf_invariants(zero);
}

TEST_CASE("smith normal form invariants on pseudo-random matrices") {
  std::srand(12345);
  for (int trial = 0; trial < 40; ++trial) {
    size_t r = 1 + std::rand() % 4, c = 1 + std::rand() % 4;
    IntMat a(r, c);
    for (auto& x : a.a) x = (std::rand() % 21) - 10;
    check_snf_invariants(a);
  }
}

TEST_CASE("determinants") {
  CHECK(int_det(IntMat::identity(3)) == 1);
  CHECK(int_det(make(2, 2, {2, -1, -1, 2})) == 3);
  CHECK(int_det(make(2, 2, {1, 2, 2, 4})) == 0);
  CHECK(int_det(make(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
}

TEST_CASE("modular solving: unique, free, inconsistent") {
  // x + y = 1, x - y = 1 (mod 3): x = 1, y = 0
  IntMat a = make(2, 2, {1, 1, 1, -1});
  auto r = solve_mod_l(a, {1, 1}, 3);
  REQUIRE(r.consistent);
  CHECK(r.count == 1);
  CHECK(r.particular == std::vector<long long>{1, 0});

  // 0 * x = 1 (mod 3) is inconsistent
  auto bad = solve_mod_l(make(1, 1, {3}), {1}, 3);
  CHECK(!bad.consistent);
  CHECK(bad.count == 0);

  // x + y = 0 (mod 3): a full line of solutions
  auto line = solve_mod_l(make(1, 2, {1, 1}), {0}, 3);
  REQUIRE(line.consistent);
  CHECK(line.count == 3);
  int seen = 0;
  for_each_solution(line, 3, [&](const std::vector<long long>& x) {
    ++seen;
    CHECK((x[0] + x[1]) % 3 == 0);
  });
  CHECK(seen == 3);
}

TEST_CASE("modular solving with composite modulus") {
  // 3x = 6 (mod 9): x in {2, 5, 8}
  auto r = solve_mod_l(make(1, 1, {3}), {6}, 9);
  REQUIRE(r.consistent);
  CHECK(r.count == 3);
  std::vector<long long> sols;
  for_each_solution(r, 9, [&](const std::vector<long long>& x) {
    sols.push_back(x[0]);
    CHECK((3 * x[0]) % 9 == 6);
  });
  CHECK(sols.size() == 3);

  // 2x = 2 (mod 9): unique since gcd(2,9) = 1
  r = solve_mod_l(make(1, 1, {2}), {2}, 9);
  REQUIRE(r.consistent);
  CHECK(r.count == 1);
  CHECK(r.particular[0] == 1);

  // 3x = 1 (mod 9) is inconsistent
  CHECK(!solve_mod_l(make(1, 1, {3}), {1}, 9).consistent);
}

TEST_CASE("solution enumeration covers the whole solution set") {
  // rank-1 system in 3 unknowns mod 5: 5^2 solutions
  auto r = solve_mod_l(make(1, 3, {1, 2, 3}), {4}, 5);
  REQUIRE(r.consistent);
  CHECK(r.count == 25);
  std::set<std::vector<long long>> all;
  for_each_solution(r, 5, [&](const std::vector<long long>& x) {
    CHECK((x[0] + 2 * x[1] + 3 * x[2]) % 5 == 4);
    all.insert(x);
  });
  CHECK(all.size() == 25);
}

TEST_CASE("howell bases and span membership") {
  // prime modulus: behaves like reduced row echelon form
  auto b = howell_basis({{1, 2}, {2, 4}}, 2, 5);
  REQUIRE(b.size() == 1);
  CHECK(in_span_mod_l(b, {3, 6}, 5));
  CHECK(!in_span_mod_l(b, {1, 0}, 5));

  // composite modulus: 3*(1,1) generates a proper subgroup mod 9
  auto c = howell_basis({{3, 3}}, 2, 9);
  CHECK(in_span_mod_l(c, {6, 6}, 9));
  CHECK(!in_span_mod_l(c, {3, 6}, 9));
  CHECK(!in_span_mod_l(c, {1, 1}, 9));

  // mixed pivots mod 9, subgroup of order 27: (1,0) order 9, (0,3) order 3
  auto d = howell_basis({{1, 0}, {0, 3}}, 2, 9);
  CHECK(in_span_mod_l(d, {5, 6}, 9));
  CHECK(!in_span_mod_l(d, {0, 1}, 9));
}

TEST_CASE("subgroup element enumeration") {
  CHECK(subgroup_elements({{1, 0}}, 2, 3).size() == 3);
  CHECK(subgroup_elements({{1, 1}}, 2, 3).size() == 3);
  CHECK(subgroup_elements({{1, 0}, {0, 1}}, 2, 3).size() == 9);
  CHECK(subgroup_elements({{3, 3}}, 2, 9).size() == 3);
  CHECK(subgroup_elements({}, 2, 3).size() == 1);
  // howell basis spans the same subgroup it was derived from
  auto gens = std::vector<std::vector<long long>>{{2, 1, 0}, {0, 3, 3}};
  auto elems = subgroup_elements(gens, 3, 9);
  auto basis = howell_basis(gens, 3, 9);
  for (const auto& e : elems) CHECK(in_span_mod_l(basis, e, 9));
  size_t order = 1;
  for (const auto& row : basis) {
    size_t j = 0;
    while (j < row.size() && row[j] == 0) ++j;
    REQUIRE(j < row.size());
    order *= static_cast<size_t>(9 / row[j]);
  }
  CHECK(order == elems.size());
}
