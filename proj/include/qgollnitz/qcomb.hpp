#pragma once

// q-combinatorial primitives over all integer arguments: triangular numbers,
// q-Pochhammer symbols, Gaussian binomials and multinomials, together with
// the recurrences they satisfy.

#include <array>
#include <cstdint>
#include <span>

#include "qgollnitz/qcore.hpp"

namespace qgollnitz {

/// n(n+1)/2 for every integer n, so T(-1) == T(0) == 0 and T(-2) == 1.
[[nodiscard]] constexpr std::int64_t triangular(std::int64_t n) noexcept { return n * (n + 1) / 2; }

/// (q^k; q)_n = prod_{j=0}^{n-1} (1 - q^{k+j}). Throws NegativeLength when n < 0.
[[nodiscard]] LaurentPoly poch_qpow(int k, int n);

/// Gaussian binomial [top; bottom] for all integer pairs.
///
/// With n = bottom and m = top - bottom this is (q^{m+1})_n / (q)_n when
/// n >= 0 and 0 otherwise. Nonnegative tops come from a memoized q-Pascal
/// table; negative tops use the reflection
///   [-a; k] = (-1)^k [k+a-1; k] q^{-a k - T(k-1)}.
/// The returned reference stays valid for the lifetime of the process.
[[nodiscard]] const LaurentPoly& qbinom(int top, int bottom);

/// qbinom with q replaced by q^base_power.
[[nodiscard]] LaurentPoly qbinom_base(int top, int bottom, int base_power);

/// The ordinary (generalized) binomial coefficient, i.e. qbinom at q = 1.
[[nodiscard]] Integer qbinom_q1(int top, int bottom);

/// [total; p0, p1, ...] = [total; p0][total - p0; p1]...; zero if any part is negative.
[[nodiscard]] LaurentPoly qmultinom(int total, std::span<const int> parts);
[[nodiscard]] LaurentPoly qmultinom(int total, std::initializer_list<int> parts);

/// Support predicate: bottom >= 0 and (top < 0 or top >= bottom).
[[nodiscard]] constexpr bool qbinom_is_nonzero(int top, int bottom) noexcept {
  return bottom >= 0 && (top < 0 || top >= bottom);
}

/// [n+m; n] against [n+m-1; n] + q^m [n-1+m; n-1] at n = bottom, m = top - bottom.
[[nodiscard]] Sides<LaurentPoly> qpascal_sides(int top, int bottom);
[[nodiscard]] bool check_qpascal(int top, int bottom);

/// The three-index multinomial recurrence at (L, s, i, j), its shifted form
/// with multinomial [L-s; s, i-s, j-s], and the symmetric two-index
/// recurrence at (L, i, j).
[[nodiscard]] bool check_multinom_recurrence(int L, int s, int i, int j);
/// The three relations above, in that order.
[[nodiscard]] std::array<Sides<LaurentPoly>, 3> multinom_recurrence_sides(int L, int s, int i, int j);

/// Number of memoized nonnegative-top binomials (diagnostics).
[[nodiscard]] std::size_t qbinom_cache_size();

}  // namespace qgollnitz
