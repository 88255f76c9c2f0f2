#pragma once

// Six-color Type-1 partitions, the staircase bijection, bounded counting on
// both sides of the partition theorem, and Goellnitz's mod-6 theorem.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qgollnitz/qcore.hpp"

namespace qgollnitz {

/// Colors in their order AB < AC < A < BC < B < C; the enumerator value is the rank.
enum class Color : std::uint8_t { AB = 0, AC = 1, A = 2, BC = 3, B = 4, C = 5 };

inline constexpr std::array<Color, 6> kAllColors = {Color::AB, Color::AC, Color::A,
                                                     Color::BC, Color::B,  Color::C};

[[nodiscard]] constexpr int rank(Color c) noexcept { return static_cast<int>(c); }
[[nodiscard]] constexpr bool is_primary(Color c) noexcept {
  return c == Color::A || c == Color::B || c == Color::C;
}
[[nodiscard]] std::string_view color_name(Color c) noexcept;

struct Part {
  int value = 0;
  Color color = Color::A;

  friend bool operator==(const Part&, const Part&) = default;
};

/// Parts listed by value, largest first.
struct ColoredPartition {
  std::vector<Part> parts;

  [[nodiscard]] std::int64_t weight() const;
  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;
};

/// Frequencies (a, b, c, ab, ac, bc) of a six-color partition.
struct Frequencies {
  int a = 0;
  int b = 0;
  int c = 0;
  int ab = 0;
  int ac = 0;
  int bc = 0;

  [[nodiscard]] int total() const noexcept { return a + b + c + ab + ac + bc; }
  [[nodiscard]] int& of(Color color) noexcept;
  [[nodiscard]] int of(Color color) const noexcept;

  friend bool operator==(const Frequencies&, const Frequencies&) = default;
};

[[nodiscard]] Frequencies frequencies(const ColoredPartition& p);

/// Type-1 rule: values strictly decreasing and positive, value 1 only in a
/// primary color, and a gap of exactly 1 only when both parts share a primary
/// color or the larger part has the higher-ranked color.
[[nodiscard]] bool is_type1(const ColoredPartition& p);

/// Result of subtracting 1, 2, ..., t from the parts in increasing order.
struct StaircaseImage {
  /// Monochromatic images indexed by rank, each listed largest first.
  std::array<std::vector<int>, 6> by_color;
  Frequencies freq;
  int t = 0;

  [[nodiscard]] const std::vector<int>& of(Color c) const { return by_color[static_cast<std::size_t>(rank(c))]; }
  [[nodiscard]] std::vector<int>& of(Color c) { return by_color[static_cast<std::size_t>(rank(c))]; }
  [[nodiscard]] std::int64_t weight() const;
  /// Largest image part (−1 when empty).
  [[nodiscard]] int largest() const;

  friend bool operator==(const StaircaseImage&, const StaircaseImage&) = default;
};

/// Structural validity: counts agree with `freq` and `t`; A, B, C parts are
/// >= 0; AB, AC, BC parts are distinct and >= 1, except that BC may contain 0
/// when A does.
[[nodiscard]] bool is_valid_image(const StaircaseImage& img);

/// Throws NotType1.
[[nodiscard]] StaircaseImage staircase_forward(const ColoredPartition& p);
/// Throws InvalidImage.
[[nodiscard]] ColoredPartition staircase_inverse(const StaircaseImage& img);

/// Visits every Type-1 partition whose parts are at most max_part.
void for_each_type1(int max_part, const std::function<void(const ColoredPartition&)>& visit);

/// Number of Type-1 partitions of n with largest part <= L and the given frequencies.
[[nodiscard]] Integer count_G(int L, int n, const Frequencies& freq);

/// Weight histogram (index n) of Type-1 partitions with largest part <= L and
/// exactly the given frequencies.
[[nodiscard]] std::vector<Integer> type1_histogram(int L, const Frequencies& freq);

/// Number of partitions of n into distinct parts per color A, B, C with i, j, k
/// parts bounded by L-k, L-i, L-j respectively.
[[nodiscard]] Integer count_P(int L, int n, int i, int j, int k);
[[nodiscard]] std::vector<Integer> tricolor_histogram(int L, int i, int j, int k);

struct Theorem1Report {
  LaurentPoly g_poly;  // sum_n (sum over frequencies of G_L(n; .)) q^n
  LaurentPoly p_poly;  // sum_n P_L(n; i, j, k) q^n
  bool counts_match = false;
  bool g_bridge = false;  // sum_n G q^n equals g_{i,j,k}(L, L)
  bool p_bridge = false;  // sum_n P q^n equals the closed diagonal product
  [[nodiscard]] bool ok() const noexcept { return counts_match && g_bridge && p_bridge; }
};

/// Requires L >= max(i+j, j+k, k+i); throws PreconditionViolated otherwise.
[[nodiscard]] Theorem1Report theorem1_report(int L, int i, int j, int k);
[[nodiscard]] bool check_theorem1(int L, int i, int j, int k);

/// Partitions of n into distinct parts congruent to 2, 4 or 5 mod 6.
[[nodiscard]] Integer gollnitz_B(int n);
/// Partitions of n with no part 1 or 3 and m_l - m_{l+1} >= 6, strictly when
/// m_l mod 6 is 0, 1 or 3.
[[nodiscard]] Integer gollnitz_C(int n);
/// Membership test for the C side (parts listed largest first).
[[nodiscard]] bool is_gollnitz_C_partition(const std::vector<int>& parts);

/// A_n -> 6n-4, B_n -> 6n-2, C_n -> 6n-1, AB_n -> 6n-6, AC_n -> 6n-5, BC_n -> 6n-3.
/// Throws NotType1.
[[nodiscard]] std::vector<int> remark3_transform(const ColoredPartition& p);
[[nodiscard]] constexpr int remark3_offset(Color c) noexcept {
  constexpr std::array<int, 6> offsets = {6, 5, 4, 3, 2, 1};  // by rank
  return offsets[static_cast<std::size_t>(rank(c))];
}

struct Remark3Check {
  Integer images;   // Type-1 partitions whose transform has the given weight
  Integer c_count;  // gollnitz_C(weight)
  bool all_in_C = true;
  bool injective = true;
  [[nodiscard]] bool ok() const { return all_in_C && injective && images == c_count; }
};

/// Transforms every Type-1 partition landing on `weight` and compares with the C side.
[[nodiscard]] Remark3Check remark3_check(int weight);

/// Visits every Type-1 partition whose transformed weight is at most max_weight.
void for_each_type1_by_transformed_weight(
    int max_weight, const std::function<void(const ColoredPartition&)>& visit);

[[nodiscard]] std::string to_string(const ColoredPartition& p);

}  // namespace qgollnitz
