#pragma once

// The double-bounded key identity g_{i,j,k}(L, M) = p_{i,j,k}(L, M) and the
// recurrences, boundary values, specializations and limits built on it.

#include <vector>

#include "qgollnitz/qcore.hpp"

namespace qgollnitz {

/// Color-class totals (i, j, k) and part-size bounds (L, M); any integers.
struct KeyParams {
  int i = 0;
  int j = 0;
  int k = 0;
  int L = 0;
  int M = 0;

  friend bool operator==(const KeyParams&, const KeyParams&) = default;
};

/// Color frequencies with i = a+ab+ac, j = b+ab+bc, k = c+ac+bc.
/// `ab` is a variable of its own, not a product.
struct Sextuple {
  int a = 0;
  int b = 0;
  int c = 0;
  int ab = 0;
  int ac = 0;
  int bc = 0;

  [[nodiscard]] int t() const noexcept { return a + b + c + ab + ac + bc; }

  friend bool operator==(const Sextuple&, const Sextuple&) = default;
};

/// All nonnegative sextuples meeting the (i, j, k) constraints, lexicographic
/// in (ab, ac, bc). Empty when any total is negative.
[[nodiscard]] std::vector<Sextuple> enumerate_sextuples(int i, int j, int k);

/// Summand of the first (delta = 0) sum of g for one sextuple.
[[nodiscard]] LaurentPoly g_first_summand(const Sextuple& s, int L, int M);
/// Summand of the second (delta = 1) sum of g for one sextuple.
[[nodiscard]] LaurentPoly g_second_summand(const Sextuple& s, int L, int M);

struct KeySums {
  LaurentPoly first;   // smallest parts: s(BC) >= 1
  LaurentPoly second;  // smallest parts: s(BC) = s(A) = 0

  [[nodiscard]] LaurentPoly total() const { return first + second; }
};

[[nodiscard]] KeySums lhs_g_parts(const KeyParams& p);

/// Left side g_{i,j,k}(L, M): both sextuple sums.
[[nodiscard]] LaurentPoly lhs_g(const KeyParams& p);

/// Right side p_{i,j,k}(L, M) =
///   sum_s q^{s(M+2) - T_s + T_{i-s} + T_{j-s} + T_{k-s}} [L-s; s, i-s, j-s] [M-i-j; k-s].
[[nodiscard]] LaurentPoly rhs_p(const KeyParams& p);

[[nodiscard]] bool check_key(const KeyParams& p);

/// delta_{i,0} delta_{j,0} q^{T_k} [M-i-j; k], the value of g at L = i+j-1.
[[nodiscard]] LaurentPoly boundary_value(int i, int j, int k, int M);

/// g(L, M) against the right side of its second-order recurrence in L.
[[nodiscard]] Sides<LaurentPoly> recurrence_g_sides(const KeyParams& p);
[[nodiscard]] Sides<LaurentPoly> recurrence_p_sides(const KeyParams& p);
[[nodiscard]] Sides<LaurentPoly> recurrence_andrews_sides(const KeyParams& p);

/// Second-order recurrence in L, checked on g.
[[nodiscard]] bool check_recurrence_g(const KeyParams& p);
/// The same recurrence, checked on p.
[[nodiscard]] bool check_recurrence_p(const KeyParams& p);
/// Andrews' fourth-order relation generalized to two bounds, checked on g.
[[nodiscard]] bool check_recurrence_andrews(const KeyParams& p);

/// q^{T_i+T_j+T_k} [L-k; i] [L-i; j] [L-j; k]; equals p_{i,j,k}(L, L).
[[nodiscard]] LaurentPoly closed_form_diag(int i, int j, int k, int L);

/// Left side of the i = 0 specialization, summed over bc >= 0.
[[nodiscard]] LaurentPoly schur_lhs(int j, int k, int L, int M);
/// q^{T_j+T_k} [L; j] [M-j; k].
[[nodiscard]] LaurentPoly schur_rhs(int j, int k, int L, int M);
/// Both sides of the i = 0 case agree with each other and with g and p.
[[nodiscard]] bool check_schur_case(int j, int k, int L, int M);

/// L, M -> infinity limit of g, modulo q^order.
[[nodiscard]] TruncSeries key_limit_lhs(int i, int j, int k, int order);
/// q^{T_i+T_j+T_k} / ((q)_i (q)_j (q)_k), modulo q^order.
[[nodiscard]] TruncSeries key_limit_rhs(int i, int j, int k, int order);

/// 1 / (q; q)_n modulo q^order.
[[nodiscard]] TruncSeries inverse_qfactorial(int n, int order);

/// Every sextuple with a nonzero summand of g at L = M has L - t >= 0.
[[nodiscard]] bool check_support(int i, int j, int k, int L);

}  // namespace qgollnitz
