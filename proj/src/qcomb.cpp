#include "qgollnitz/qcomb.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "qgollnitz/errors.hpp"

namespace qgollnitz {

LaurentPoly poch_qpow(int k, int n) {
  if (n < 0) throw NegativeLength("poch_qpow: negative length " + std::to_string(n));
  LaurentPoly out(1);
  for (int j = 0; j < n; ++j) {
    const int e = k + j;
    if (e == 0) return {};
    out *= LaurentPoly::from_terms({{0, 1}, {e, -1}});
  }
  return out;
}

namespace {

// Process-wide memo for qbinom. Entries are never erased or mutated after
// insertion, and unordered_map references survive rehashing, so callers may
// hold on to returned references without the lock.
class BinomialTable {
 public:
  const LaurentPoly* find(int top, int bottom) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key(top, bottom));
    return it == table_.end() ? nullptr : &it->second;
  }

  const LaurentPoly& insert(int top, int bottom, LaurentPoly value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key(top, bottom), std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  static std::uint64_t key(int top, int bottom) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(top)) << 32) |
           static_cast<std::uint32_t>(bottom);
  }

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, LaurentPoly> table_;
};

BinomialTable& table() {
  static BinomialTable instance;
  return instance;
}

const LaurentPoly& zero_poly() {
  static const LaurentPoly zero;
  return zero;
}

const LaurentPoly& one_poly() {
  static const LaurentPoly one(1);
  return one;
}

LaurentPoly compute_binomial(int top, int bottom) {
  if (top >= 0) {
    // top > bottom > 0 here: q-Pascal with n = bottom, m = top - bottom.
    return qbinom(top - 1, bottom) + qbinom(top - 1, bottom - 1).shifted(top - bottom);
  }
  const int alpha = -top;
  const int k = bottom;
  const auto shift = -static_cast<std::int64_t>(alpha) * k - triangular(k - 1);
  LaurentPoly out = qbinom(k + alpha - 1, k).shifted(static_cast<int>(shift));
  return (k % 2 == 0) ? out : -out;
}

}  // namespace

const LaurentPoly& qbinom(int top, int bottom) {
  if (!qbinom_is_nonzero(top, bottom)) return zero_poly();
  if (bottom == 0 || bottom == top) return one_poly();
  if (const LaurentPoly* hit = table().find(top, bottom)) return *hit;
  return table().insert(top, bottom, compute_binomial(top, bottom));
}

LaurentPoly qbinom_base(int top, int bottom, int base_power) {
  return qbinom(top, bottom).substitute_power(base_power);
}

Integer qbinom_q1(int top, int bottom) {
  if (!qbinom_is_nonzero(top, bottom)) return 0;
  // top(top-1)...(top-bottom+1) / bottom!, exact at every step.
  Integer out = 1;
  for (int r = 0; r < bottom; ++r) {
    out *= top - r;
    out /= r + 1;
  }
  return out;
}

LaurentPoly qmultinom(int total, std::span<const int> parts) {
  LaurentPoly out(1);
  int remaining = total;
  for (int part : parts) {
    if (part < 0) return {};
    const LaurentPoly& b = qbinom(remaining, part);
    if (b.is_zero()) return {};
    out *= b;
    remaining -= part;
  }
  return out;
}

LaurentPoly qmultinom(int total, std::initializer_list<int> parts) {
  return qmultinom(total, std::span<const int>(parts.begin(), parts.size()));
}

Sides<LaurentPoly> qpascal_sides(int top, int bottom) {
  const int n = bottom;
  const int m = top - bottom;
  return {qbinom(n + m, n), qbinom(n + m - 1, n) + qbinom(n - 1 + m, n - 1).shifted(m)};
}

bool check_qpascal(int top, int bottom) { return qpascal_sides(top, bottom).equal(); }

namespace {

LaurentPoly q_pow(int e) { return LaurentPoly::monomial(1, e); }

LaurentPoly one_minus_q_pow(int e) { return LaurentPoly(1) - q_pow(e); }

}  // namespace

std::array<Sides<LaurentPoly>, 3> multinom_recurrence_sides(int L, int s, int i, int j) {
  // Three-index recurrence at (L, s, i, j).
  const LaurentPoly a1_rhs =
      qmultinom(L - 1, {s, i, j}) + qmultinom(L - 1, {s, i - 1, j}).shifted(L - i) +
      qmultinom(L - 1, {s, i, j - 1}).shifted(L - j) +
      qmultinom(L - 1, {s - 1, i, j}).shifted(L - s - i - j) +
      one_minus_q_pow(L - 1) * qmultinom(L - 2, {s, i - 1, j - 1}).shifted(L - i - j);

  // Shifted form: L -> L-s, i -> i-s, j -> j-s.
  const LaurentPoly shifted_rhs =
      qmultinom(L - 1 - s, {s, i - s, j - s}) +
      qmultinom(L - 1 - s, {s, i - 1 - s, j - s}).shifted(L - i) +
      qmultinom(L - 1 - s, {s, i - s, j - 1 - s}).shifted(L - j) +
      qmultinom(L - 1 - s, {s - 1, i - s, j - s}).shifted(L - i - j) +
      qmultinom(L - 2 - s, {s, i - 1 - s, j - 1 - s}).shifted(L + s - i - j) -
      qmultinom(L - 2 - s, {s, i - 1 - s, j - 1 - s}).shifted(2 * L - 1 - i - j);

  // Symmetric two-index recurrence at (L, i, j).
  const LaurentPoly a3_rhs =
      qmultinom(L - 1, {i, j}) + qmultinom(L - 1, {i - 1, j}).shifted(L - i) +
      qmultinom(L - 1, {i, j - 1}).shifted(L - j) +
      one_minus_q_pow(L - 1) * qmultinom(L - 2, {i - 1, j - 1}).shifted(L - i - j);
  return {{{qmultinom(L, {s, i, j}), a1_rhs},
           {qmultinom(L - s, {s, i - s, j - s}), shifted_rhs},
           {qmultinom(L, {i, j}), a3_rhs}}};
}

bool check_multinom_recurrence(int L, int s, int i, int j) {
  const auto sides = multinom_recurrence_sides(L, s, i, j);
  return std::all_of(sides.begin(), sides.end(), [](const auto& x) { return x.equal(); });
}

std::size_t qbinom_cache_size() { return table().size(); }

}  // namespace qgollnitz
