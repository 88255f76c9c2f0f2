#pragma once

// Batch verification: evaluate one identity over the Cartesian product of
// integer parameter ranges and report every failing tuple.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgollnitz {

enum class Identity {
  Key,
  Boundary,
  RecurrenceG,
  RecurrenceP,
  RecurrenceAndrews,
  Schur,
  KeyLimit,
  Theorem1,
  Gollnitz,
  Remark3,
  JtpBounded,
  JtpSeries,
  FalseTheta,
  JacobiCubePoly,
  JacobiCubeSeries,
  Carl,
  Carlitz,
  FourParam,
  QPascal,
  MultinomRec,
  Support,
};

struct Range {
  int lo = 0;
  int hi = 0;

  [[nodiscard]] int size() const noexcept { return hi - lo + 1; }
  friend bool operator==(const Range&, const Range&) = default;
};

/// "a..b" or a single integer "a"; negative bounds allowed. Throws UsageError.
[[nodiscard]] Range parse_range(std::string_view text);

[[nodiscard]] std::string_view identity_name(Identity id) noexcept;
[[nodiscard]] std::optional<Identity> identity_from_name(std::string_view name) noexcept;
[[nodiscard]] const std::vector<Identity>& all_identities() noexcept;

/// Parameter names iterated by the identity, in tuple order.
[[nodiscard]] const std::vector<std::string>& identity_parameters(Identity id);
[[nodiscard]] bool identity_uses_order(Identity id) noexcept;
[[nodiscard]] Range default_range(Identity id, std::string_view parameter);
[[nodiscard]] int default_order(Identity id) noexcept;

struct SweepSpec {
  Identity identity = Identity::Key;
  std::map<std::string, Range, std::less<>> ranges;  // missing entries take defaults
  std::optional<int> order;
  int jobs = 1;
  bool timing = true;  // when false, elapsed_ms is reported as 0
};

/// One evaluated tuple: parameter values in identity_parameters order.
using Tuple = std::vector<int>;

struct TupleOutcome {
  bool ok = true;
  std::string lhs;  // rendered only for failures
  std::string rhs;
};

struct Failure {
  std::vector<std::pair<std::string, int>> params;
  std::string lhs;
  std::string rhs;
};

struct SweepReport {
  std::string identity;
  long long total = 0;
  std::vector<Failure> failures;
  long long elapsed_ms = 0;
  std::string version;

  [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

using TupleCheck = std::function<TupleOutcome(const Tuple&, int order)>;

/// The built-in evaluator for an identity.
[[nodiscard]] TupleCheck builtin_check(Identity id);

/// Throws UsageError on empty ranges, unknown parameters or order < 1.
[[nodiscard]] SweepReport run_sweep(const SweepSpec& spec);
/// Same, with a caller-supplied evaluator (used to exercise the harness itself).
[[nodiscard]] SweepReport run_sweep(const SweepSpec& spec, const TupleCheck& check);

enum class ReportFormat { Text, Json };

[[nodiscard]] std::string render_report(const SweepReport& report, ReportFormat format);

[[nodiscard]] std::string_view engine_version() noexcept;

/// Golden corpus of canonical key-identity values: one line per tuple,
/// `i j k L M : <polynomial>`.
[[nodiscard]] std::string write_golden(const std::vector<std::vector<int>>& tuples);
[[nodiscard]] std::vector<std::vector<int>> default_golden_tuples();

struct GoldenMismatch {
  int line = 0;
  std::string expected;
  std::string lhs;
  std::string rhs;
};

/// Re-derives both sides for every line and compares with the stored value.
/// Throws ParseError on malformed lines.
[[nodiscard]] std::vector<GoldenMismatch> check_golden(std::string_view contents);

}  // namespace qgollnitz
