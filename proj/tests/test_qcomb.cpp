#include <doctest.h>

#include <thread>

#include "oracle.hpp"
#include "qgollnitz/errors.hpp"
#include "qgollnitz/qcomb.hpp"

using namespace qgollnitz;

namespace {

LaurentPoly P(std::string_view text) { return parse_laurent(text); }

}  // namespace

TEST_CASE("triangular numbers") {
  CHECK(triangular(3) == 6);
  CHECK(triangular(-1) == 0);
  CHECK(triangular(0) == 0);
  CHECK(triangular(-2) == 1);
  for (int n = -30; n <= 30; ++n) CHECK(triangular(n) == triangular(-1 - n));
  static_assert(triangular(4) == 10);
}

TEST_CASE("q-Pochhammer") {
  CHECK(poch_qpow(1, 3) == P("1 - q - q^2 + q^4 + q^5 - q^6"));
  for (int k = -3; k <= 3; ++k) CHECK(poch_qpow(k, 0) == LaurentPoly(1));
  CHECK(poch_qpow(-1, 3).is_zero());
  CHECK(poch_qpow(-4, 2) == oracle::to_lib(oracle::pochhammer(-4, 2)));
  CHECK_THROWS_AS((void)poch_qpow(1, -1), NegativeLength);
}

TEST_CASE("qbinom examples") {
  CHECK(qbinom(4, 2) == P("1 + q + 2*q^2 + q^3 + q^4"));
  for (int n = -5; n <= 7; ++n) CHECK(qbinom(n, 0) == LaurentPoly(1));
  CHECK(qbinom(2, 3).is_zero());
  CHECK(qbinom(-1, 1) == P("-q^-1"));
  CHECK(qbinom(3, -1).is_zero());
}

TEST_CASE("qbinom against box-partition counts") {
  for (int top = 0; top <= 12; ++top) {
    for (int bottom = 0; bottom <= top; ++bottom) {
      CHECK(qbinom(top, bottom) == oracle::to_lib(oracle::qbinom_boxes(top, bottom)));
    }
  }
}

TEST_CASE("qbinom against the quotient definition on all integer tops") {
  for (int top = -8; top <= 12; ++top) {
    for (int bottom = -2; bottom <= 9; ++bottom) {
      CAPTURE(top);
      CAPTURE(bottom);
      CHECK(qbinom(top, bottom) == oracle::to_lib(oracle::qbinom_quotient(top, bottom)));
    }
  }
}

TEST_CASE("qbinom structure for nonnegative arguments") {
  for (int top = 0; top <= 12; ++top) {
    for (int bottom = 0; bottom <= top; ++bottom) {
      const LaurentPoly& b = qbinom(top, bottom);
      for (const auto& t : b.terms()) CHECK(t.coeff > 0);
      CHECK(b.min_exponent() == 0);
      CHECK(b.max_exponent() == bottom * (top - bottom));
      CHECK(b.sum_of_coefficients() == qbinom_q1(top, bottom));
      CHECK(b == qbinom(top, top - bottom));
    }
  }
}

TEST_CASE("qbinom_base") {
  CHECK(qbinom_base(2, 1, 2) == P("1 + q^2"));
  CHECK(qbinom_base(6, 0, 2) == LaurentPoly(1));
  CHECK(qbinom_base(4, 2, 1) == qbinom(4, 2));
  CHECK(qbinom_base(-2, 1, 3) == P("-q^-6 - q^-3"));
}

TEST_CASE("qbinom_q1") {
  CHECK(qbinom_q1(4, 2) == 6);
  CHECK(qbinom_q1(3, 0) == 1);
  CHECK(qbinom_q1(2, 3) == 0);
  CHECK(qbinom_q1(-1, 3) == -1);  // (-1)(-2)(-3)/3!
  CHECK(qbinom_q1(60, 30) == Integer("118264581564861424"));
  for (int top = -6; top <= 10; ++top) {
    for (int bottom = 0; bottom <= 6; ++bottom) CHECK(qbinom(top, bottom).sum_of_coefficients() == qbinom_q1(top, bottom));
  }
}

TEST_CASE("qmultinom") {
  CHECK(qmultinom(3, {1, 1}) == P("1 + 2*q + 2*q^2 + q^3"));
  for (int L = -2; L <= 4; ++L) CHECK(qmultinom(L, std::initializer_list<int>{}) == LaurentPoly(1));
  CHECK(qmultinom(2, {1, -1}).is_zero());
  for (int L = 0; L <= 8; ++L) {
    for (int a = 0; a <= L; ++a) {
      for (int b = 0; a + b <= L; ++b) CHECK(qmultinom(L, {a, b}) == qmultinom(L, {b, a}));
    }
  }
  CHECK(qmultinom(-3, {1, 2}) == oracle::to_lib(oracle::qmultinom(-3, {1, 2})));
}

TEST_CASE("support predicate agrees with nonzero-ness") {
  CHECK(qbinom_is_nonzero(5, 2));
  CHECK_FALSE(qbinom_is_nonzero(2, 5));
  CHECK(qbinom_is_nonzero(-3, 2));
  static_assert(!qbinom_is_nonzero(0, -1));
  for (int top = -8; top <= 12; ++top) {
    for (int bottom = 0; bottom <= 12; ++bottom) CHECK(qbinom_is_nonzero(top, bottom) == !qbinom(top, bottom).is_zero());
  }
}

TEST_CASE("q-Pascal recurrence") {
  CHECK(check_qpascal(4, 2));
  CHECK(check_qpascal(0, 0));
  CHECK(check_qpascal(-2, 1));
  for (int top = -6; top <= 10; ++top) {
    for (int bottom = -6; bottom <= 10; ++bottom) {
      CAPTURE(top);
      CAPTURE(bottom);
      CHECK(check_qpascal(top, bottom));
    }
  }
  const auto sides = qpascal_sides(4, 2);
  CHECK(sides.lhs == qbinom(4, 2));
}

TEST_CASE("multinomial recurrences") {
  CHECK(check_multinom_recurrence(5, 1, 2, 1));
  CHECK(check_multinom_recurrence(0, 0, 0, 0));
  CHECK(check_multinom_recurrence(6, 2, 2, 2));
  for (int L = 0; L <= 8; ++L)
    for (int s = 0; s <= 8; ++s)
      for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j) {
          if (!check_multinom_recurrence(L, s, i, j)) FAIL("multinomial recurrence fails at ", L, s, i, j);
        }
}

TEST_CASE("multinomial recurrence sides use oracle values") {
  const auto sides = multinom_recurrence_sides(6, 1, 3, 2);
  CHECK(sides[0].lhs == oracle::to_lib(oracle::qmultinom(6, {1, 3, 2})));
  CHECK(sides[2].lhs == oracle::to_lib(oracle::qmultinom(6, {3, 2})));
}

TEST_CASE("qbinom memo is safe under concurrent first use") {
  std::vector<std::thread> pool;
  std::vector<int> ok(8, 0);
  for (int w = 0; w < 8; ++w) {
    pool.emplace_back([w, &ok] {
      bool good = true;
      for (int top = 40; top >= 13; --top) {
        for (int bottom = 0; bottom <= top; bottom += 3) {
          good = good && qbinom(top, bottom).sum_of_coefficients() == qbinom_q1(top, bottom);
        }
      }
      ok[static_cast<std::size_t>(w)] = good ? 1 : 0;
    });
  }
  for (auto& t : pool) t.join();
  for (int v : ok) CHECK(v == 1);
  CHECK(qbinom_cache_size() > 0);
}
