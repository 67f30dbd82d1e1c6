#include <doctest.h>

#include "qtw/scalars.hpp"

using namespace qtw;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_poly(5) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_poly(9) == std::vector<long>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_degree(15) == 8);
}

TEST_CASE("root-of-unity arithmetic") {
  for (unsigned l : {3u, 5u, 9u}) {
    CAPTURE(l);
    // q^a q^b = q^(a+b), q^l = 1
    CHECK(Cyc::q_pow(l, 2) * Cyc::q_pow(l, l - 1) == Cyc::q_pow(l, 1));
    CHECK(Cyc::q_pow(l, l) == Cyc::one(l));
    CHECK(Cyc::q_pow(l, -1) * Cyc::q_pow(l, 1) == Cyc::one(l));
    // sum of all l-th roots of unity vanishes (exercises lazy reduction)
    Cyc s = Cyc::zero(l);
    for (unsigned k = 0; k < l; ++k) s += Cyc::q_pow(l, k);
    CHECK(s.is_zero());
    // rotation form of q-multiplication agrees with the generic product
    Cyc x = Cyc::from_long(l, 7);
    x += Cyc::q_pow(l, 1);
    Cyc a = x;
    a.mul_q_pow(3);
    CHECK(a == x * Cyc::q_pow(l, 3));
  }
}

TEST_CASE("half exponents square to the full power") {
  for (unsigned l : {3u, 5u, 9u}) {
    for (long long a = -6; a <= 6; ++a) {
      Cyc h = Cyc::q_pow(l, half_exponent(l, a));
      CHECK(h * h == Cyc::q_pow(l, a));
    }
  }
  CHECK(half_exponent(5, 1) == 3);
  CHECK_THROWS_AS(half_exponent(4, 1), Error);
}

TEST_CASE("q-integers and factorials") {
  for (unsigned l : {3u, 5u}) {
    CAPTURE(l);
    CHECK(q_int(l, 1) == Cyc::one(l));
    CHECK(q_int(l, 2) == Cyc::q_pow(l, 1) + Cyc::q_pow(l, -1));
    CHECK(q_int(l, static_cast<long>(l)).is_zero());
    CHECK(q_int(l, -2) == -q_int(l, 2));
    for (unsigned n = 1; n < l; ++n) CHECK(!q_int(l, n).is_zero());
    CHECK(q_factorial(l, 0) == Cyc::one(l));
    CHECK(q_factorial(l, 1) == Cyc::one(l));
    CHECK_THROWS_AS(q_factorial(l, l), Error);
  }
  CHECK(q_factorial(5, 3) == q_int(5, 2) * q_int(5, 3));
}

TEST_CASE("gaussian binomials") {
  CHECK(q_binom(5, 2, 1) == q_int(5, 2));
  CHECK(q_binom(5, 3, 3) == Cyc::one(5));
  CHECK(q_binom(5, 3, 0) == Cyc::one(5));
  CHECK(q_binom(5, 2, 3).is_zero());
  CHECK(q_binom(5, 4, 2) ==
        q_int(5, 4) * q_int(5, 3) * q_int(5, 2).inv());
  // Pascal at base 2: [n k]_v = v^k [n-1 k]_v + v^-(n-k) [n-1 k-1]_v
  for (unsigned n = 1; n < 5; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      Cyc lhs = q_binom(5, n, k, 2);
      Cyc rhs = Cyc::q_pow(5, 2 * k) * q_binom(5, n - 1, k, 2) +
                Cyc::q_pow(5, -2 * static_cast<long long>(n - k)) *
                    q_binom(5, n - 1, k - 1, 2);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("field inversion") {
  for (unsigned l : {3u, 5u, 9u}) {
    CAPTURE(l);
    Cyc qm = Cyc::q_pow(l, 1) - Cyc::q_pow(l, -1);  // q - q^-1
    CHECK(!qm.is_zero());
    CHECK(qm * qm.inv() == Cyc::one(l));
    Cyc x = Cyc::from_mpq(l, mpq_class(2, 3)) + Cyc::q_pow(l, 1);
    CHECK(x * x.inv() == Cyc::one(l));
    CHECK_THROWS_AS(Cyc::zero(l).inv(), Error);
    // an unreduced representative of zero is still not invertible
    Cyc ghost = Cyc::zero(l);
    for (unsigned k = 0; k < l; ++k) ghost += Cyc::q_pow(l, k);
    CHECK_THROWS_AS(ghost.inv(), Error);
  }
}

TEST_CASE("canonical forms and serialization basics") {
  Cyc x = Cyc::q_pow(3, 2);  // z^2 = -1 - z mod Phi_3
  auto r = x.reduced();
  REQUIRE(r.size() == 2);
  CHECK(r[0] == -1);
  CHECK(r[1] == -1);
  CHECK(x.str() == "-1 - z");
  x.normalize();
  CHECK(x == Cyc::q_pow(3, 2));
  CHECK(mpq_str(mpq_class(-4, 6)) == "-2/3");
  CHECK(Cyc::from_mpq(5, mpq_class(2, 3)) *
            Cyc::from_mpq(5, mpq_class(3, 2)) ==
        Cyc::one(5));
}
