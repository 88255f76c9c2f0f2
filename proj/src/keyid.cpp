#include "qgollnitz/keyid.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "qgollnitz/qcomb.hpp"

namespace qgollnitz {

std::vector<Sextuple> enumerate_sextuples(int i, int j, int k) {
  std::vector<Sextuple> out;
  if (i < 0 || j < 0 || k < 0) return out;
  for (int ab = 0; ab <= std::min(i, j); ++ab) {
    for (int ac = 0; ac <= std::min(i - ab, k); ++ac) {
      for (int bc = 0; bc <= std::min(j - ab, k - ac); ++bc) {
        out.push_back({i - ab - ac, j - ab - bc, k - ac - bc, ab, ac, bc});
      }
    }
  }
  return out;
}

namespace {

using Binomial = std::array<int, 2>;  // {top, bottom}

// q^shift times the product of the given binomials; zero as soon as one
// factor lies outside its support.
LaurentPoly binomial_product(std::int64_t shift, std::initializer_list<Binomial> factors) {
  for (const auto& [top, bottom] : factors) {
    if (!qbinom_is_nonzero(top, bottom)) return {};
  }
  LaurentPoly out = LaurentPoly::monomial(1, static_cast<int>(shift));
  for (const auto& [top, bottom] : factors) out *= qbinom(top, bottom);
  return out;
}

LaurentPoly q_pow(std::int64_t e) { return LaurentPoly::monomial(1, static_cast<int>(e)); }

}  // namespace

LaurentPoly g_first_summand(const Sextuple& s, int L, int M) {
  const int t = s.t();
  const auto e = triangular(t) + triangular(s.ab) + triangular(s.ac) + triangular(s.bc);
  return binomial_product(e, {{L - t + s.a, s.a},
                              {L - t + s.b, s.b},
                              {M - t + s.c, s.c},
                              {L - t, s.ab},
                              {M - t, s.ac},
                              {M - t, s.bc}});
}

LaurentPoly g_second_summand(const Sextuple& s, int L, int M) {
  const int t = s.t();
  const auto e = triangular(t) + triangular(s.ab) + triangular(s.ac) + triangular(s.bc - 1);
  return binomial_product(e, {{L - t + s.a - 1, s.a - 1},
                              {L - t + s.b, s.b},
                              {M - t + s.c, s.c},
                              {L - t, s.ab},
                              {M - t, s.ac},
                              {M - t, s.bc - 1}});
}

KeySums lhs_g_parts(const KeyParams& p) {
  KeySums sums;
  for (const auto& s : enumerate_sextuples(p.i, p.j, p.k)) {
    sums.first += g_first_summand(s, p.L, p.M);
    sums.second += g_second_summand(s, p.L, p.M);
  }
  return sums;
}

LaurentPoly lhs_g(const KeyParams& p) { return lhs_g_parts(p).total(); }

LaurentPoly rhs_p(const KeyParams& p) {
  LaurentPoly out;
  if (p.i < 0 || p.j < 0 || p.k < 0) return out;
  const int top = std::min({p.i, p.j, p.k});
  for (int s = 0; s <= top; ++s) {
    LaurentPoly term = qmultinom(p.L - s, {s, p.i - s, p.j - s});
    if (term.is_zero()) continue;
    const LaurentPoly& tail = qbinom(p.M - p.i - p.j, p.k - s);
    if (tail.is_zero()) continue;
    const std::int64_t e = static_cast<std::int64_t>(s) * (p.M + 2) - triangular(s) +
                           triangular(p.i - s) + triangular(p.j - s) + triangular(p.k - s);
    out += (term * tail).shifted(static_cast<int>(e));
  }
  return out;
}

bool check_key(const KeyParams& p) { return lhs_g(p) == rhs_p(p); }

LaurentPoly boundary_value(int i, int j, int k, int M) {
  if (i != 0 || j != 0) return {};
  return qbinom(M, k).shifted(static_cast<int>(triangular(k)));
}

namespace {

using KeyFn = std::function<LaurentPoly(const KeyParams&)>;

Sides<LaurentPoly> second_order_recurrence(const KeyFn& f, const KeyParams& p) {
  const auto [i, j, k, L, M] = p;
  LaurentPoly rhs = f({i, j, k, L - 1, M});
  rhs += f({i - 1, j, k, L - 1, M - 1}).shifted(L);
  rhs += f({i, j - 1, k, L - 1, M - 1}).shifted(L);
  rhs += f({i - 1, j - 1, k, L - 2, M - 1}).shifted(L);
  rhs -= f({i - 1, j - 1, k, L - 2, M - 2}).shifted(2 * L - 1);
  return {f(p), std::move(rhs)};
}

}  // namespace

Sides<LaurentPoly> recurrence_g_sides(const KeyParams& p) { return second_order_recurrence(lhs_g, p); }

Sides<LaurentPoly> recurrence_p_sides(const KeyParams& p) { return second_order_recurrence(rhs_p, p); }

bool check_recurrence_g(const KeyParams& p) { return recurrence_g_sides(p).equal(); }

bool check_recurrence_p(const KeyParams& p) { return recurrence_p_sides(p).equal(); }

bool check_recurrence_andrews(const KeyParams& p) { return recurrence_andrews_sides(p).equal(); }

Sides<LaurentPoly> recurrence_andrews_sides(const KeyParams& p) {
  const auto [i, j, k, L, M] = p;
  auto g = [](int i_, int j_, int k_, int L_, int M_) { return lhs_g({i_, j_, k_, L_, M_}); };

  LaurentPoly rhs = g(i, j, k, L - 1, M - 1);
  rhs += g(i - 1, j, k, L - 1, M - 1).shifted(L);
  rhs += g(i, j - 1, k, L - 1, M - 1).shifted(L);
  rhs += g(i, j, k - 1, L - 1, M - 1).shifted(M);

  LaurentPoly order_two = g(i - 1, j - 1, k, L - 2, M - 2).shifted(L);
  order_two += g(i - 1, j, k - 1, L - 2, M - 2).shifted(M);
  order_two += g(i, j - 1, k - 1, L - 2, M - 2).shifted(M);
  rhs += (LaurentPoly(1) - q_pow(L - 1)) * order_two;

  rhs += g(i - 1, j - 1, k - 1, L - 3, M - 3).shifted(2 * L + M - 3);
  rhs += g(i - 2, j - 1, k - 1, L - 3, M - 3).shifted(L + M - 1);
  rhs += g(i - 1, j - 2, k - 1, L - 3, M - 3).shifted(L + M - 1);
  rhs += g(i - 1, j - 1, k - 2, L - 3, M - 3).shifted(2 * M - 1);
  rhs += g(i - 2, j - 2, k - 2, L - 4, M - 4).shifted(L + 2 * M - 3);
  return {g(i, j, k, L, M), std::move(rhs)};
}

LaurentPoly closed_form_diag(int i, int j, int k, int L) {
  return binomial_product(triangular(i) + triangular(j) + triangular(k),
                          {{L - k, i}, {L - i, j}, {L - j, k}});
}

LaurentPoly schur_lhs(int j, int k, int L, int M) {
  LaurentPoly out;
  for (int bc = 0; bc <= std::min(j, k); ++bc) {
    const int b = j - bc;
    const int c = k - bc;
    out += binomial_product(triangular(b + c + bc) + triangular(bc),
                            {{L - k, j - bc}, {M - j, k - bc}, {M - b - c - bc, bc}});
  }
  return out;
}

LaurentPoly schur_rhs(int j, int k, int L, int M) {
  return binomial_product(triangular(j) + triangular(k), {{L, j}, {M - j, k}});
}

bool check_schur_case(int j, int k, int L, int M) {
  const LaurentPoly left = schur_lhs(j, k, L, M);
  const LaurentPoly right = schur_rhs(j, k, L, M);
  if (left != right) return false;
  const KeyParams p{0, j, k, L, M};
  return lhs_g(p) == left && rhs_p(p) == right;
}

TruncSeries inverse_qfactorial(int n, int order) {
  return series_from_poly(poch_qpow(1, n), order).reciprocal();
}

TruncSeries key_limit_lhs(int i, int j, int k, int order) {
  TruncSeries sum(order);
  for (const auto& s : enumerate_sextuples(i, j, k)) {
    const std::int64_t e =
        triangular(s.t()) + triangular(s.ab) + triangular(s.ac) + triangular(s.bc - 1);
    if (e >= order) continue;
    LaurentPoly numerator = LaurentPoly(1) - q_pow(s.a) + q_pow(s.a + s.bc);
    TruncSeries term = series_from_poly(numerator.shifted(static_cast<int>(e)), order);
    for (int n : {s.a, s.b, s.c, s.ab, s.ac, s.bc}) {
      if (n > 0) term = term * inverse_qfactorial(n, order);
    }
    sum += term;
  }
  return sum;
}

TruncSeries key_limit_rhs(int i, int j, int k, int order) {
  if (i < 0 || j < 0 || k < 0) return TruncSeries(order);
  const std::int64_t e = triangular(i) + triangular(j) + triangular(k);
  if (e >= order) return TruncSeries(order);
  TruncSeries out = TruncSeries::monomial(1, static_cast<int>(e), order);
  for (int n : {i, j, k}) out = out * inverse_qfactorial(n, order);
  return out;
}

bool check_support(int i, int j, int k, int L) {
  for (const auto& s : enumerate_sextuples(i, j, k)) {
    const bool nonzero =
        !g_first_summand(s, L, L).is_zero() || !g_second_summand(s, L, L).is_zero();
    if (nonzero && L - s.t() < 0) return false;
  }
  return true;
}

}  // namespace qgollnitz
