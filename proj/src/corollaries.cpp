#include "qgollnitz/corollaries.hpp"

#include <algorithm>
#include <stdexcept>

#include "qgollnitz/keyid.hpp"
#include "qgollnitz/qcomb.hpp"

namespace qgollnitz {

namespace {

LaurentPoly q_pow(std::int64_t e) { return LaurentPoly::monomial(1, static_cast<int>(e)); }

Integer sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

void require_nonnegative(int L, const char* what) {
  if (L < 0) throw std::invalid_argument(std::string(what) + ": L must be >= 0");
}

void require_order(int order, const char* what) {
  if (order < 1) throw std::invalid_argument(std::string(what) + ": order must be >= 1");
}

// Calls f(i, j, k) for i, j, k >= 0 with max(i+j, i+k, j+k) <= L.
template <typename F>
void for_each_cycle_triple(int L, F&& f) {
  for (int i = 0; i <= L; ++i) {
    for (int j = 0; i + j <= L; ++j) {
      for (int k = 0; k + std::max(i, j) <= L; ++k) f(i, j, k);
    }
  }
}

// [L-k; i][L-i; j][L-j; k], optionally in base q^base.
LaurentPoly binomial_cycle(int L, int i, int j, int k, int base = 1) {
  LaurentPoly out = qbinom_base(L - k, i, base);
  if (out.is_zero()) return out;
  out *= qbinom_base(L - i, j, base);
  if (out.is_zero()) return out;
  return out * qbinom_base(L - j, k, base);
}

}  // namespace

BivarLaurent bounded_jtp_lhs(int L) {
  require_nonnegative(L, "bounded_jtp_lhs");
  BivarLaurent out;
  for (int l = 0; l <= L; ++l) {
    const Integer s = sign(L + l);
    const std::int64_t outer = 2 * (triangular(L) - triangular(l));
    for (int n = -l; n <= l; ++n) {
      out += BivarLaurent::monomial(LaurentPoly::monomial(s, static_cast<int>(outer + n * n)), n);
    }
  }
  return out;
}

BivarLaurent bounded_jtp_rhs(int L) {
  require_nonnegative(L, "bounded_jtp_rhs");
  BivarLaurent out;
  for_each_cycle_triple(L, [&](int i, int j, int k) {
    const std::int64_t e = 2 * triangular(i) + 2 * triangular(j) + 2 * triangular(k) - i - j;
    LaurentPoly coeff = binomial_cycle(L, i, j, k, 2).shifted(static_cast<int>(e));
    if (k % 2 != 0) coeff = -coeff;
    out += BivarLaurent::monomial(std::move(coeff), i - j);
  });
  return out;
}

Sides<BivarLaurent> jtp_series(int order) {
  require_order(order, "jtp_series");
  Sides<BivarLaurent> sides;
  for (int n = 0; n * n < order; ++n) {
    sides.lhs += BivarLaurent::monomial(q_pow(n * n), n);
    if (n > 0) sides.lhs += BivarLaurent::monomial(q_pow(n * n), -n);
  }

  BivarLaurent product(LaurentPoly(1));
  for (int m = 1; m <= order && 2 * m - 1 < order; ++m) {
    const BivarLaurent up = BivarLaurent(LaurentPoly(1)) + BivarLaurent::monomial(q_pow(2 * m - 1), 1);
    const BivarLaurent down = BivarLaurent(LaurentPoly(1)) + BivarLaurent::monomial(q_pow(2 * m - 1), -1);
    const BivarLaurent even(LaurentPoly(1) - q_pow(2 * m));
    product = (product * up).truncated_q(order);
    product = (product * down).truncated_q(order);
    product = (product * even).truncated_q(order);
  }
  sides.rhs = std::move(product);
  return sides;
}

Sides<TruncSeries> false_theta_sides(int order) {
  require_order(order, "false_theta_sides");
  TruncSeries lhs(order);
  for (int l = 0; triangular(l) < order; ++l) {
    lhs += TruncSeries::monomial(sign(l), static_cast<int>(triangular(l)), order);
  }

  // T_i + T_k - ik = ((i-k)^2 + i + k) / 2 >= (i+k)/2, so i + k < 2*order.
  const int max_sum = 2 * order - 1;
  std::vector<TruncSeries> inv;
  inv.reserve(static_cast<std::size_t>(max_sum) + 1);
  for (int n = 0; n <= max_sum; ++n) inv.push_back(inverse_qfactorial(n, order));

  TruncSeries rhs(order);
  for (int i = 0; i <= max_sum; ++i) {
    for (int k = 0; i + k <= max_sum; ++k) {
      const std::int64_t e = triangular(i) + triangular(k) - static_cast<std::int64_t>(i) * k;
      if (e >= order) continue;
      LaurentPoly numerator = qbinom(k + i, k).truncated_below(order - static_cast<int>(e));
      if ((i + k) % 2 != 0) numerator = -numerator;
      TruncSeries term = series_from_poly(numerator.shifted(static_cast<int>(e)), order);
      rhs += term * inv[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(k)];
    }
  }
  return {std::move(lhs), std::move(rhs)};
}

Sides<LaurentPoly> jacobi_cube_poly_sides(int L) {
  require_nonnegative(L, "jacobi_cube_poly_sides");
  Sides<LaurentPoly> sides;
  for (int l = 0; l <= L; ++l) {
    add_monomial(sides.lhs, sign(l) * (2 * l + 1), static_cast<int>(triangular(l)));
  }
  for_each_cycle_triple(L, [&](int i, int j, int k) {
    LaurentPoly term = binomial_cycle(L, i, j, k).shifted(
        static_cast<int>(triangular(i) + triangular(j) + triangular(k)));
    if ((i + j + k) % 2 != 0) term = -term;
    sides.rhs += term;
  });
  return sides;
}

Sides<TruncSeries> jacobi_cube_series(int order) {
  require_order(order, "jacobi_cube_series");
  TruncSeries lhs(order);
  for (int l = 0; triangular(l) < order; ++l) {
    lhs += TruncSeries::monomial(sign(l) * (2 * l + 1), static_cast<int>(triangular(l)), order);
  }
  TruncSeries euler = TruncSeries::one(order);
  for (int m = 1; m <= order; ++m) {
    euler = euler * series_from_poly(LaurentPoly(1) - q_pow(m), order);
  }
  return {std::move(lhs), euler * euler * euler};
}

Sides<BivarLaurent> carl_poly_sides(int L) {
  require_nonnegative(L, "carl_poly_sides");
  Sides<BivarLaurent> sides;
  for (int l = 0; l <= L; ++l) {
    // a^{-l} (1 + a^{2l+1}) / (1 + a) = sum_{m=0}^{2l} (-1)^m a^{m-l}
    const int e = static_cast<int>(triangular(l));
    for (int m = 0; m <= 2 * l; ++m) {
      sides.lhs += BivarLaurent::monomial(LaurentPoly::monomial(sign(m), e), m - l);
    }
  }
  for_each_cycle_triple(L, [&](int i, int j, int k) {
    LaurentPoly term = binomial_cycle(L, i, j, k).shifted(
        static_cast<int>(triangular(i) + triangular(j) + triangular(k)));
    if (k % 2 != 0) term = -term;
    sides.rhs += BivarLaurent::monomial(std::move(term), i - j);
  });
  return sides;
}

Sides<LaurentPoly> carlitz_sides(int L) {
  require_nonnegative(L, "carlitz_sides");
  Sides<LaurentPoly> sides;
  for (int m = 0; m <= L; ++m) add_monomial(sides.lhs, 1, L - 2 * m);
  for_each_cycle_triple(L, [&](int i, int j, int k) {
    const Integer c = qbinom_q1(L - k, i) * qbinom_q1(L - i, j) * qbinom_q1(L - j, k);
    add_monomial(sides.rhs, sign(k) * c, i - j);
  });
  return sides;
}

std::vector<Decuple> enumerate_decuples(const FourParams& p) {
  std::vector<Decuple> out;
  const auto [i, j, k, l] = p;
  if (i < 0 || j < 0 || k < 0 || l < 0) return out;
  for (int ab = 0; ab <= std::min(i, j); ++ab)
    for (int ac = 0; ac <= std::min(i - ab, k); ++ac)
      for (int ad = 0; ad <= std::min(i - ab - ac, l); ++ad)
        for (int bc = 0; bc <= std::min(j - ab, k - ac); ++bc)
          for (int bd = 0; bd <= std::min(j - ab - bc, l - ad); ++bd)
            for (int cd = 0; cd <= std::min(k - ac - bc, l - ad - bd); ++cd) {
              const int ra = i - ab - ac - ad;
              const int rb = j - ab - bc - bd;
              const int rc = k - ac - bc - cd;
              const int rd = l - ad - bd - cd;
              for (int Q = 0; Q <= std::min({ra, rb, rc, rd}); ++Q) {
                out.push_back({ra - Q, rb - Q, rc - Q, rd - Q, ab, ac, ad, bc, bd, cd, Q});
              }
            }
  return out;
}

Sides<TruncSeries> four_param_sides(const FourParams& p, int order) {
  require_order(order, "four_param_sides");
  TruncSeries lhs(order);
  for (const auto& x : enumerate_decuples(p)) {
    const std::int64_t t = x.t();
    const std::int64_t e = triangular(t) + triangular(x.ab) + triangular(x.ac) + triangular(x.ad) +
                           triangular(x.bc) + triangular(x.bd) + triangular(x.cd) - x.bc - x.bd -
                           x.cd + 4 * triangular(x.Q - 1) + x.Q * (3 + 2 * t);
    if (e >= order) continue;
    const int mid = x.a + x.bc + x.bd + x.Q;
    const LaurentPoly braces = (LaurentPoly(1) - q_pow(x.a)) +
                               q_pow(mid) * (LaurentPoly(1) - q_pow(x.b)) +
                               q_pow(mid + x.b + x.cd);
    TruncSeries term = series_from_poly(braces.shifted(static_cast<int>(e)), order);
    for (int n : {x.a, x.b, x.c, x.d, x.ab, x.ac, x.ad, x.bc, x.bd, x.cd, x.Q}) {
      if (n > 0) term = term * inverse_qfactorial(n, order);
    }
    lhs += term;
  }

  TruncSeries rhs(order);
  if (p.i >= 0 && p.j >= 0 && p.k >= 0 && p.l >= 0) {
    const std::int64_t e = triangular(p.i) + triangular(p.j) + triangular(p.k) + triangular(p.l);
    if (e < order) {
      rhs = TruncSeries::monomial(1, static_cast<int>(e), order);
      for (int n : {p.i, p.j, p.k, p.l}) rhs = rhs * inverse_qfactorial(n, order);
    }
  }
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace qgollnitz
