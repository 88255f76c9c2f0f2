#pragma once

// Consequences of the key identity, each as an exact two-sided computation:
// bounded and unbounded Jacobi triple product, a false theta identity, the
// polynomial and infinite forms of Jacobi's cube formula, the a-refinement
// and its q = 1 (Carlitz) case, and the four-parameter key identity.

#include <utility>
#include <vector>

#include "qgollnitz/qcore.hpp"

namespace qgollnitz {

/// sum_{l=0}^{L} (-1)^{L+l} q^{2(T_L - T_l)} sum_{|n|<=l} A^n q^{n^2}.
[[nodiscard]] BivarLaurent bounded_jtp_lhs(int L);
/// Binomial-cycle sum with base-q^2 binomials and weight (-1)^k A^{i-j}.
[[nodiscard]] BivarLaurent bounded_jtp_rhs(int L);

/// sum_n A^n q^{n^2} against prod_m (1 + A q^{2m-1})(1 + A^{-1} q^{2m-1})(1 - q^{2m}),
/// q-exponents truncated below `order`.
[[nodiscard]] Sides<BivarLaurent> jtp_series(int order);

/// sum_l (-1)^l q^{T_l} against the double sum over i, k.
[[nodiscard]] Sides<TruncSeries> false_theta_sides(int order);

/// sum_{l=0}^{L} (-1)^l (2l+1) q^{T_l} against the signed binomial-cycle sum.
[[nodiscard]] Sides<LaurentPoly> jacobi_cube_poly_sides(int L);

/// sum_l (-1)^l (2l+1) q^{T_l} against (q; q)_inf^3.
[[nodiscard]] Sides<TruncSeries> jacobi_cube_series(int order);

/// Refinement by an auxiliary variable a; `aux` of the BivarLaurent is a.
[[nodiscard]] Sides<BivarLaurent> carl_poly_sides(int L);

/// The q = 1 case as Laurent polynomials in a (rendered with variable "a").
[[nodiscard]] Sides<LaurentPoly> carlitz_sides(int L);

struct FourParams {
  int i = 0;
  int j = 0;
  int k = 0;
  int l = 0;
};

/// Summation variables of the four-parameter identity.
struct Decuple {
  int a = 0, b = 0, c = 0, d = 0;
  int ab = 0, ac = 0, ad = 0, bc = 0, bd = 0, cd = 0;
  int Q = 0;

  [[nodiscard]] int t() const noexcept { return a + b + c + d + ab + ac + ad + bc + bd + cd; }
  friend bool operator==(const Decuple&, const Decuple&) = default;
};

/// Solutions of i = a+ab+ac+ad+Q, j = b+ab+bc+bd+Q, k = c+ac+bc+cd+Q,
/// l = d+ad+bd+cd+Q, lexicographic in (ab, ac, ad, bc, bd, cd, Q).
[[nodiscard]] std::vector<Decuple> enumerate_decuples(const FourParams& p);

[[nodiscard]] Sides<TruncSeries> four_param_sides(const FourParams& p, int order);

}  // namespace qgollnitz
