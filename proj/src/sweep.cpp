#include "qgollnitz/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qgollnitz/corollaries.hpp"
#include "qgollnitz/errors.hpp"
#include "qgollnitz/keyid.hpp"
#include "qgollnitz/partcomb.hpp"
#include "qgollnitz/qcomb.hpp"

namespace qgollnitz {

namespace {

struct ParamDefault {
  std::string name;
  Range range;
};

struct IdentityInfo {
  Identity id;
  std::string_view name;
  std::vector<ParamDefault> params;
  int order = 0;  // 0: not series-based
};

const std::vector<IdentityInfo>& registry() {
  static const std::vector<IdentityInfo> table = {
      {Identity::Key, "key", {{"i", {0, 3}}, {"j", {0, 3}}, {"k", {0, 3}}, {"L", {0, 8}}, {"M", {0, 8}}}},
      {Identity::Boundary, "boundary", {{"i", {0, 4}}, {"j", {0, 4}}, {"k", {0, 4}}, {"M", {0, 10}}}},
      {Identity::RecurrenceG, "recurrence-g",
       {{"i", {0, 3}}, {"j", {0, 3}}, {"k", {0, 3}}, {"L", {0, 8}}, {"M", {0, 8}}}},
      {Identity::RecurrenceP, "recurrence-p",
       {{"i", {0, 3}}, {"j", {0, 3}}, {"k", {0, 3}}, {"L", {0, 8}}, {"M", {0, 8}}}},
      {Identity::RecurrenceAndrews, "recurrence-andrews",
       {{"i", {0, 3}}, {"j", {0, 3}}, {"k", {0, 3}}, {"L", {0, 8}}, {"M", {0, 8}}}},
      {Identity::Schur, "schur", {{"j", {0, 3}}, {"k", {0, 3}}, {"L", {0, 8}}, {"M", {0, 8}}}},
      {Identity::KeyLimit, "key-limit", {{"i", {0, 3}}, {"j", {0, 3}}, {"k", {0, 3}}}, 25},
      {Identity::Theorem1, "theorem1", {{"i", {0, 3}}, {"j", {0, 3}}, {"k", {0, 3}}, {"L", {0, 7}}}},
      {Identity::Gollnitz, "gollnitz", {{"n", {0, 60}}}},
      {Identity::Remark3, "remark3", {{"n", {0, 60}}}},
      {Identity::JtpBounded, "jtp-bounded", {{"L", {0, 8}}}},
      {Identity::JtpSeries, "jtp-series", {}, 10},
      {Identity::FalseTheta, "false-theta", {}, 30},
      {Identity::JacobiCubePoly, "jacobi-cube-poly", {{"L", {0, 20}}}},
      {Identity::JacobiCubeSeries, "jacobi-cube-series", {}, 50},
      {Identity::Carl, "carl", {{"L", {0, 10}}}},
      {Identity::Carlitz, "carlitz", {{"L", {0, 12}}}},
      {Identity::FourParam, "four-param", {{"i", {0, 2}}, {"j", {0, 2}}, {"k", {0, 2}}, {"l", {0, 2}}}, 20},
      {Identity::QPascal, "qpascal", {{"top", {-6, 10}}, {"bottom", {-6, 10}}}},
      {Identity::MultinomRec, "multinom-rec", {{"L", {0, 8}}, {"s", {0, 8}}, {"i", {0, 8}}, {"j", {0, 8}}}},
      {Identity::Support, "support", {{"i", {0, 4}}, {"j", {0, 4}}, {"k", {0, 4}}, {"L", {0, 10}}}},
  };
  return table;
}

const IdentityInfo& info(Identity id) {
  for (const auto& entry : registry()) {
    if (entry.id == id) return entry;
  }
  throw std::logic_error("unregistered identity");
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw UsageError("malformed range '" + std::string(whole) + "'");
  }
  return value;
}

template <class T>
TupleOutcome compare(const T& lhs, const T& rhs) {
  if (lhs == rhs) return {};
  return {false, to_string(lhs), to_string(rhs)};
}

template <class T>
TupleOutcome compare(const Sides<T>& sides) {
  return compare(sides.lhs, sides.rhs);
}

TupleOutcome compare_integers(const Integer& lhs, const Integer& rhs) {
  if (lhs == rhs) return {};
  return {false, lhs.str(), rhs.str()};
}

bool below_diagonal(int L, int i, int j, int k) { return L < std::max({i + j, j + k, k + i}); }

KeyParams key_params(const Tuple& t) { return {t[0], t[1], t[2], t[3], t[4]}; }

TupleOutcome check_tuple(Identity id, const Tuple& t, int order) {
  switch (id) {
    case Identity::Key: {
      const KeyParams p = key_params(t);
      return compare(lhs_g(p), rhs_p(p));
    }
    case Identity::Boundary: {
      const auto [i, j, k, M] = std::array{t[0], t[1], t[2], t[3]};
      return compare(lhs_g({i, j, k, i + j - 1, M}), boundary_value(i, j, k, M));
    }
    case Identity::RecurrenceG:
      return compare(recurrence_g_sides(key_params(t)));
    case Identity::RecurrenceP:
      return compare(recurrence_p_sides(key_params(t)));
    case Identity::RecurrenceAndrews:
      return compare(recurrence_andrews_sides(key_params(t)));
    case Identity::Schur: {
      TupleOutcome out = compare(schur_lhs(t[0], t[1], t[2], t[3]), schur_rhs(t[0], t[1], t[2], t[3]));
      if (out.ok && !check_schur_case(t[0], t[1], t[2], t[3])) {
        const KeyParams p{0, t[0], t[1], t[2], t[3]};
        out = {false, to_string(lhs_g(p)), to_string(rhs_p(p))};
      }
      return out;
    }
    case Identity::KeyLimit:
      return compare(key_limit_lhs(t[0], t[1], t[2], order), key_limit_rhs(t[0], t[1], t[2], order));
    case Identity::Theorem1: {
      const auto [i, j, k, L] = std::array{t[0], t[1], t[2], t[3]};
      if (below_diagonal(L, i, j, k)) return {};
      const Theorem1Report report = theorem1_report(L, i, j, k);
      if (report.ok()) return {};
      return {false, to_string(report.g_poly), to_string(report.p_poly)};
    }
    case Identity::Gollnitz:
      return compare_integers(gollnitz_B(t[0]), gollnitz_C(t[0]));
    case Identity::Remark3: {
      const Remark3Check check = remark3_check(t[0]);
      if (check.ok()) return {};
      std::string lhs = check.images.str();
      if (!check.all_in_C) lhs += " (image outside C)";
      if (!check.injective) lhs += " (not injective)";
      return {false, lhs, check.c_count.str()};
    }
    case Identity::JtpBounded:
      return compare(bounded_jtp_lhs(t[0]), bounded_jtp_rhs(t[0]));
    case Identity::JtpSeries:
      return compare(jtp_series(order));
    case Identity::FalseTheta:
      return compare(false_theta_sides(order));
    case Identity::JacobiCubePoly:
      return compare(jacobi_cube_poly_sides(t[0]));
    case Identity::JacobiCubeSeries:
      return compare(jacobi_cube_series(order));
    case Identity::Carl: {
      const auto sides = carl_poly_sides(t[0]);
      if (sides.equal()) return {};
      return {false, to_string(sides.lhs, "a"), to_string(sides.rhs, "a")};
    }
    case Identity::Carlitz: {
      const auto sides = carlitz_sides(t[0]);
      const Integer expected = t[0] + 1;
      if (sides.equal() && sides.lhs.sum_of_coefficients() == expected) return {};
      return {false, to_string(sides.lhs, "a"), to_string(sides.rhs, "a")};
    }
    case Identity::FourParam: {
      const FourParams p{t[0], t[1], t[2], t[3]};
      TupleOutcome out = compare(four_param_sides(p, order));
      if (out.ok && p.l == 0) {
        out = compare(four_param_sides(p, order).lhs, key_limit_lhs(p.i, p.j, p.k, order));
      }
      return out;
    }
    case Identity::QPascal:
      return compare(qpascal_sides(t[0], t[1]));
    case Identity::MultinomRec: {
      for (const auto& sides : multinom_recurrence_sides(t[0], t[1], t[2], t[3])) {
        if (!sides.equal()) return compare(sides);
      }
      return {};
    }
    case Identity::Support: {
      const auto [i, j, k, L] = std::array{t[0], t[1], t[2], t[3]};
      if (below_diagonal(L, i, j, k) || check_support(i, j, k, L)) return {};
      return {false, "summand with L - t < 0", "none"};
    }
  }
  throw std::logic_error("unhandled identity");
}

std::vector<Range> resolve_ranges(const SweepSpec& spec) {
  const IdentityInfo& entry = info(spec.identity);
  for (const auto& [name, range] : spec.ranges) {
    const bool known = std::any_of(entry.params.begin(), entry.params.end(),
                                   [&](const ParamDefault& p) { return p.name == name; });
    if (!known) {
      throw UsageError("identity '" + std::string(entry.name) + "' has no parameter '" + name + "'");
    }
    if (range.size() < 1) {
      throw UsageError("empty range for '" + name + "': " + std::to_string(range.lo) + ".." +
                       std::to_string(range.hi));
    }
  }
  std::vector<Range> out;
  for (const auto& p : entry.params) {
    auto it = spec.ranges.find(p.name);
    out.push_back(it == spec.ranges.end() ? p.range : it->second);
  }
  return out;
}

Tuple tuple_at(const std::vector<Range>& ranges, long long index) {
  Tuple t(ranges.size());
  for (std::size_t d = ranges.size(); d-- > 0;) {
    const long long width = ranges[d].size();
    t[d] = ranges[d].lo + static_cast<int>(index % width);
    index /= width;
  }
  return t;
}

}  // namespace

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text, text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots), text), parse_int(text.substr(dots + 2), text)};
}

std::string_view identity_name(Identity id) noexcept {
  for (const auto& entry : registry()) {
    if (entry.id == id) return entry.name;
  }
  return "unknown";
}

std::optional<Identity> identity_from_name(std::string_view name) noexcept {
  for (const auto& entry : registry()) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

const std::vector<Identity>& all_identities() noexcept {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> out;
    for (const auto& entry : registry()) out.push_back(entry.id);
    return out;
  }();
  return ids;
}

const std::vector<std::string>& identity_parameters(Identity id) {
  static const std::map<Identity, std::vector<std::string>> names = [] {
    std::map<Identity, std::vector<std::string>> out;
    for (const auto& entry : registry()) {
      auto& list = out[entry.id];
      for (const auto& p : entry.params) list.push_back(p.name);
    }
    return out;
  }();
  return names.at(id);
}

bool identity_uses_order(Identity id) noexcept { return default_order(id) > 0; }

Range default_range(Identity id, std::string_view parameter) {
  for (const auto& p : info(id).params) {
    if (p.name == parameter) return p.range;
  }
  throw UsageError("identity '" + std::string(identity_name(id)) + "' has no parameter '" +
                   std::string(parameter) + "'");
}

int default_order(Identity id) noexcept {
  for (const auto& entry : registry()) {
    if (entry.id == id) return entry.order;
  }
  return 0;
}

TupleCheck builtin_check(Identity id) {
  return [id](const Tuple& t, int order) { return check_tuple(id, t, order); };
}

SweepReport run_sweep(const SweepSpec& spec) { return run_sweep(spec, builtin_check(spec.identity)); }

SweepReport run_sweep(const SweepSpec& spec, const TupleCheck& check) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Range> ranges = resolve_ranges(spec);
  int order = 0;
  if (identity_uses_order(spec.identity)) {
    order = spec.order.value_or(default_order(spec.identity));
    if (order < 1) throw UsageError("order must be at least 1, got " + std::to_string(order));
  }
  if (spec.jobs < 1) throw UsageError("jobs must be at least 1, got " + std::to_string(spec.jobs));

  long long total = 1;
  for (const auto& r : ranges) total *= r.size();

  std::vector<TupleOutcome> outcomes(static_cast<std::size_t>(total));
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (long long idx = next++; idx < total; idx = next++) {
      try {
        outcomes[static_cast<std::size_t>(idx)] = check(tuple_at(ranges, idx), order);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = total;
      }
    }
  };
  const int workers = static_cast<int>(std::min<long long>(spec.jobs, total));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.identity = std::string(identity_name(spec.identity));
  report.total = total;
  report.version = std::string(engine_version());
  const auto& names = identity_parameters(spec.identity);
  for (long long idx = 0; idx < total; ++idx) {
    auto& outcome = outcomes[static_cast<std::size_t>(idx)];
    if (outcome.ok) continue;
    Failure f;
    const Tuple t = tuple_at(ranges, idx);
    for (std::size_t d = 0; d < t.size(); ++d) f.params.emplace_back(names[d], t[d]);
    f.lhs = std::move(outcome.lhs);
    f.rhs = std::move(outcome.rhs);
    report.failures.push_back(std::move(f));
  }
  if (spec.timing) {
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  }
  return report;
}

std::string render_report(const SweepReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    doc["identity"] = report.identity;
    doc["total"] = report.total;
    doc["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : report.failures) {
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [name, value] : f.params) params[name] = value;
      doc["failures"].push_back({{"params", params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    doc["elapsed_ms"] = report.elapsed_ms;
    doc["version"] = report.version;
    return doc.dump() + "\n";
  }

  std::ostringstream out;
  out << "identity    " << report.identity << "\n"
      << "version     " << report.version << "\n"
      << "tuples      " << report.total << "\n"
      << "failures    " << report.failures.size() << "\n"
      << "elapsed_ms  " << report.elapsed_ms << "\n"
      << "status      " << (report.passed() ? "PASS" : "FAIL") << "\n";
  if (report.failures.empty()) return out.str();

  out << "\n";
  const auto& header = report.failures.front().params;
  for (const auto& [name, value] : header) out << std::setw(7) << name;
  out << "  " << std::left << std::setw(40) << "lhs" << "  rhs\n" << std::right;
  for (const auto& f : report.failures) {
    for (const auto& [name, value] : f.params) out << std::setw(7) << value;
    out << "  " << std::left << std::setw(40) << f.lhs << "  " << f.rhs << "\n" << std::right;
  }
  return out.str();
}

std::string_view engine_version() noexcept { return QGOLLNITZ_VERSION; }

std::string write_golden(const std::vector<std::vector<int>>& tuples) {
  std::ostringstream out;
  out << "# i j k L M : g_{i,j,k}(L, M)\n";
  for (const auto& t : tuples) {
    if (t.size() != 5) throw std::invalid_argument("golden tuples have five entries");
    out << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << ' ' << t[4] << " : "
        << to_string(lhs_g(key_params(t))) << "\n";
  }
  return out.str();
}

std::vector<std::vector<int>> default_golden_tuples() {
  std::vector<std::vector<int>> out;
  constexpr std::array<std::array<int, 2>, 5> bounds = {{{-2, 1}, {0, 0}, {2, 3}, {4, 4}, {5, 3}}};
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) {
      for (int k = 0; k <= 2; ++k) {
        for (const auto& [L, M] : bounds) out.push_back({i, j, k, L, M});
      }
    }
  }
  return out;
}

std::vector<GoldenMismatch> check_golden(std::string_view contents) {
  std::vector<GoldenMismatch> out;
  std::istringstream in{std::string(contents)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("golden line " + std::to_string(number) + ": missing ':'");
    }
    std::istringstream head(line.substr(0, colon));
    Tuple t(5);
    for (int& v : t) {
      if (!(head >> v)) throw ParseError("golden line " + std::to_string(number) + ": expected five integers");
    }
    std::string extra;
    if (head >> extra) throw ParseError("golden line " + std::to_string(number) + ": trailing '" + extra + "'");

    std::string expected = line.substr(colon + 1);
    expected.erase(0, expected.find_first_not_of(" \t"));
    expected.erase(expected.find_last_not_of(" \t\r") + 1);
    const LaurentPoly stored = parse_laurent(expected, "q");
    const KeyParams p = key_params(t);
    const LaurentPoly lhs = lhs_g(p);
    const LaurentPoly rhs = rhs_p(p);
    if (lhs != stored || rhs != stored || to_string(stored) != expected) {
      out.push_back({number, expected, to_string(lhs), to_string(rhs)});
    }
  }
  return out;
}

}  // namespace qgollnitz
