// Acceptance suite: every criterion is an exact check and prints one line.
// Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "qgollnitz/corollaries.hpp"
#include "qgollnitz/keyid.hpp"
#include "qgollnitz/partcomb.hpp"
#include "qgollnitz/qcomb.hpp"
#include "qgollnitz/sweep.hpp"

using namespace qgollnitz;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void fail(const std::string& what) {
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) fail(what);
  }
  [[nodiscard]] Outcome outcome(const std::string& summary) const {
    std::ostringstream out;
    out << summary << ", " << checks_ << " checks, " << failures_ << " failures";
    if (!first_.empty()) out << " (first: " << first_ << ")";
    return {failures_ == 0, out.str()};
  }

 private:
  long long checks_ = 0;
  long long failures_ = 0;
  std::string first_;
};

std::string at(std::initializer_list<int> values) {
  std::string out = "(";
  for (int v : values) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + ")";
}

SweepReport sweep(Identity id, std::map<std::string, Range, std::less<>> ranges, int jobs = 1,
                  std::optional<int> order = std::nullopt) {
  SweepSpec spec;
  spec.identity = id;
  spec.ranges = std::move(ranges);
  spec.jobs = jobs;
  spec.order = order;
  spec.timing = false;
  return run_sweep(spec);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome key_identity() {
  const auto start = std::chrono::steady_clock::now();
  const SweepReport stated = sweep(Identity::Key, {{"i", {-2, 4}}, {"j", {-2, 4}}, {"k", {-2, 4}},
                                                   {"L", {-3, 10}}, {"M", {-3, 10}}});
  // The stated box holds 7^3 * 14^2 tuples; a wider box reaches the advertised volume.
  const SweepReport wide = sweep(Identity::Key, {{"i", {-2, 6}}, {"j", {-2, 6}}, {"k", {-2, 6}},
                                                 {"L", {-3, 18}}, {"M", {-3, 18}}});
  const double elapsed = seconds_since(start);
  std::ostringstream out;
  out << stated.total << " tuples on [-2,4]^3 x [-3,10]^2 and " << wide.total
      << " on [-2,6]^3 x [-3,18]^2, " << stated.failures.size() + wide.failures.size() << " failures, "
      << static_cast<int>(elapsed) << " s single-threaded";
  const bool ok = stated.passed() && wide.passed() && stated.total == 67228 && wide.total >= 340000 &&
                  elapsed < 120.0;
  return {ok, out.str()};
}

Outcome boundary_identity() {
  Tally t;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k)
        for (int M = 0; M <= 10; ++M) {
          t.expect(lhs_g({i, j, k, i + j - 1, M}) == boundary_value(i, j, k, M), at({i, j, k, M}));
          t.expect(rhs_p({i, j, k, i + j - 1, M}) == boundary_value(i, j, k, M), at({i, j, k, M}));
        }
  return t.outcome("g and p at L = i+j-1 against the boundary value");
}

Outcome recurrences() {
  Tally t;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k)
        for (int L = 0; L <= 8; ++L)
          for (int M = 0; M <= 8; ++M) {
            const KeyParams p{i, j, k, L, M};
            t.expect(check_recurrence_g(p), "g " + at({i, j, k, L, M}));
            t.expect(check_recurrence_p(p), "p " + at({i, j, k, L, M}));
            t.expect(check_recurrence_andrews(p), "fourth-order " + at({i, j, k, L, M}));
          }
  for (int top = -6; top <= 10; ++top)
    for (int bottom = -6; bottom <= 10; ++bottom) t.expect(check_qpascal(top, bottom), "q-Pascal " + at({top, bottom}));
  for (int L = 0; L <= 8; ++L)
    for (int s = 0; s <= 8; ++s)
      for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j) {
          const auto sides = multinom_recurrence_sides(L, s, i, j);
          for (const auto& side : sides) t.expect(side.equal(), "multinomial " + at({L, s, i, j}));
        }
  return t.outcome("second-order (g, p), fourth-order, q-Pascal, three multinomial");
}

Outcome diagonal() {
  Tally t;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k)
        for (int L = 0; L <= 10; ++L) {
          const LaurentPoly d = closed_form_diag(i, j, k, L);
          const LaurentPoly product = (qbinom(L - k, i) * qbinom(L - i, j) * qbinom(L - j, k))
                                          .shifted(static_cast<int>(triangular(i) + triangular(j) + triangular(k)));
          t.expect(d == product, "product " + at({i, j, k, L}));
          t.expect(rhs_p({i, j, k, L, L}) == d, "p " + at({i, j, k, L}));
          t.expect(closed_form_diag(j, k, i, L) == d, "cyclic " + at({i, j, k, L}));
          t.expect(rhs_p({j, k, i, L, L}) == rhs_p({i, j, k, L, L}), "cyclic p " + at({i, j, k, L}));
        }
  return t.outcome("p(L, L) against the product, with cyclic symmetry");
}

Outcome partition_theorem() {
  Tally t;
  int grids = 0;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k)
        for (int L = std::max({i + j, j + k, k + i}); L <= 7; ++L) {
          const Theorem1Report r = theorem1_report(L, i, j, k);
          t.expect(r.counts_match, "counts " + at({L, i, j, k}));
          t.expect(r.g_bridge, "bridge to g " + at({L, i, j, k}));
          t.expect(r.p_bridge, "bridge to product " + at({L, i, j, k}));
          ++grids;
        }
  return t.outcome(std::to_string(grids) + " (L, i, j, k) cases, all weights");
}

Outcome gollnitz() {
  Tally t;
  for (int n = 0; n <= 60; ++n) t.expect(gollnitz_B(n) == gollnitz_C(n), "B = C at " + std::to_string(n));

  std::map<int, std::set<std::vector<int>>> images;
  long long sources = 0;
  for_each_type1_by_transformed_weight(60, [&](const ColoredPartition& p) {
    const auto img = remark3_transform(p);
    const int w = std::accumulate(img.begin(), img.end(), 0);
    long long original = 0;
    for (const auto& part : p.parts) original += 6LL * part.value - remark3_offset(part.color);
    t.expect(original == w, "weight " + to_string(p));
    t.expect(is_gollnitz_C_partition(img), "image outside C " + to_string(p));
    t.expect(images[w].insert(img).second, "collision " + to_string(p));
    ++sources;
  });
  for (int n = 0; n <= 60; ++n) {
    t.expect(Integer(images[n].size()) == gollnitz_C(n), "image count at " + std::to_string(n));
  }
  return t.outcome("B(n) = C(n) for n <= 60; " + std::to_string(sources) + " Type-1 partitions mapped onto C");
}

Outcome staircase() {
  Tally t;
  long long seen = 0;
  for_each_type1(8, [&](const ColoredPartition& p) {
    ++seen;
    const StaircaseImage img = staircase_forward(p);
    t.expect(is_valid_image(img), "image " + to_string(p));
    t.expect(staircase_inverse(img) == p, "round trip " + to_string(p));
  });
  return t.outcome(std::to_string(seen) + " Type-1 partitions with parts <= 8");
}

Outcome limits() {
  Tally t;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k)
        t.expect(key_limit_lhs(i, j, k, 25) == key_limit_rhs(i, j, k, 25), "key limit " + at({i, j, k}));
  t.expect(jtp_series(10).equal(), "triple product mod q^10");
  t.expect(jacobi_cube_series(50).equal(), "cube mod q^50");
  t.expect(false_theta_sides(30).equal(), "false theta mod q^30");
  return t.outcome("key limit mod q^25, triple product mod q^10, cube mod q^50, false theta mod q^30");
}

Outcome polynomial_identities() {
  Tally t;
  for (int L = 0; L <= 8; ++L) t.expect(bounded_jtp_lhs(L) == bounded_jtp_rhs(L), "bounded triple product L=" + std::to_string(L));
  for (int L = 0; L <= 20; ++L) t.expect(jacobi_cube_poly_sides(L).equal(), "cube L=" + std::to_string(L));
  for (int L = 0; L <= 10; ++L) t.expect(carl_poly_sides(L).equal(), "a-refinement L=" + std::to_string(L));
  for (int L = 0; L <= 12; ++L) {
    const auto sides = carlitz_sides(L);
    t.expect(sides.equal(), "q=1 case L=" + std::to_string(L));
    t.expect(sides.lhs.sum_of_coefficients() == L + 1 && sides.rhs.sum_of_coefficients() == L + 1,
             "a=1 collapse L=" + std::to_string(L));
  }
  return t.outcome("bounded triple product, cube, a-refinement, q=1 case with a=1 collapse");
}

Outcome four_parameter() {
  Tally t;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k) {
        for (int l = 0; l <= 2; ++l) t.expect(four_param_sides({i, j, k, l}, 20).equal(), at({i, j, k, l}));
        const auto reduced = four_param_sides({i, j, k, 0}, 20);
        t.expect(reduced.lhs == key_limit_lhs(i, j, k, 20), "l=0 lhs " + at({i, j, k}));
        t.expect(reduced.rhs == key_limit_rhs(i, j, k, 20), "l=0 rhs " + at({i, j, k}));
      }
  return t.outcome("81 parameter sets mod q^20, l = 0 slice against the three-parameter limit");
}

Outcome support() {
  Tally t;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k)
        for (int L = std::max({i + j, j + k, k + i}); L <= 10; ++L) t.expect(check_support(i, j, k, L), at({i, j, k, L}));
  for (int top = -8; top <= 12; ++top)
    for (int bottom = 0; bottom <= 12; ++bottom)
      t.expect(qbinom_is_nonzero(top, bottom) == !qbinom(top, bottom).is_zero(), "predicate " + at({top, bottom}));
  return t.outcome("nonzero summands have L - t >= 0; support predicate on [-8,12] x [0,12]");
}

Outcome determinism() {
  Tally t;
  std::map<Identity, std::map<std::string, Range, std::less<>>> wider = {
      {Identity::Key, {{"i", {-2, 4}}, {"L", {-3, 8}}}},
  };
  for (Identity id : all_identities()) {
    const auto ranges = wider.count(id) ? wider[id] : std::map<std::string, Range, std::less<>>{};
    const std::string one = render_report(sweep(id, ranges, 1), ReportFormat::Json);
    const std::string eight = render_report(sweep(id, ranges, 8), ReportFormat::Json);
    t.expect(one == eight, std::string(identity_name(id)));
  }
  return t.outcome("JSON reports for all " + std::to_string(all_identities().size()) +
                   " identities, 1 vs 8 workers, byte-compared");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"key identity on the signed grid", key_identity},
      {"boundary identity", boundary_identity},
      {"recurrences", recurrences},
      {"diagonal closed form", diagonal},
      {"partition theorem", partition_theorem},
      {"Goellnitz theorem and residue transform", gollnitz},
      {"staircase bijection", staircase},
      {"limits", limits},
      {"polynomial identities", polynomial_identities},
      {"four-parameter identity", four_parameter},
      {"support property", support},
      {"harness determinism", determinism},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %s  %-40s %6.1f s  %s\n", n + 1, o.pass ? "PASS" : "FAIL", criteria[n].first.c_str(),
                seconds_since(start), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
