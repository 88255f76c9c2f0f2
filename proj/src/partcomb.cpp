#include "qgollnitz/partcomb.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qgollnitz/errors.hpp"
#include "qgollnitz/keyid.hpp"
#include "qgollnitz/qcomb.hpp"

namespace qgollnitz {

std::string_view color_name(Color c) noexcept {
  switch (c) {
    case Color::AB: return "AB";
    case Color::AC: return "AC";
    case Color::A: return "A";
    case Color::BC: return "BC";
    case Color::B: return "B";
    case Color::C: return "C";
  }
  return "?";
}

std::int64_t ColoredPartition::weight() const {
  std::int64_t w = 0;
  for (const auto& p : parts) w += p.value;
  return w;
}

int& Frequencies::of(Color color) noexcept {
  switch (color) {
    case Color::AB: return ab;
    case Color::AC: return ac;
    case Color::A: return a;
    case Color::BC: return bc;
    case Color::B: return b;
    case Color::C: break;
  }
  return c;
}

int Frequencies::of(Color color) const noexcept { return const_cast<Frequencies&>(*this).of(color); }

Frequencies frequencies(const ColoredPartition& p) {
  Frequencies f;
  for (const auto& part : p.parts) ++f.of(part.color);
  return f;
}

namespace {

// May `smaller` sit directly below `larger` in a Type-1 partition?
bool adjacent_ok(const Part& larger, const Part& smaller) {
  const int gap = larger.value - smaller.value;
  if (gap >= 2) return true;
  if (gap != 1) return false;
  if (larger.color == smaller.color && is_primary(larger.color)) return true;
  return rank(larger.color) > rank(smaller.color);
}

bool part_ok(const Part& p) { return p.value >= 2 || (p.value == 1 && is_primary(p.color)); }

}  // namespace

bool is_type1(const ColoredPartition& p) {
  for (std::size_t n = 0; n < p.parts.size(); ++n) {
    if (!part_ok(p.parts[n])) return false;
    if (n > 0 && !adjacent_ok(p.parts[n - 1], p.parts[n])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Staircase bijection

std::int64_t StaircaseImage::weight() const {
  std::int64_t w = 0;
  for (const auto& list : by_color) w = std::accumulate(list.begin(), list.end(), w);
  return w;
}

int StaircaseImage::largest() const {
  int m = -1;
  for (const auto& list : by_color) {
    if (!list.empty()) m = std::max(m, list.front());
  }
  return m;
}

bool is_valid_image(const StaircaseImage& img) {
  if (img.t != img.freq.total()) return false;
  for (Color c : kAllColors) {
    const auto& list = img.of(c);
    if (static_cast<int>(list.size()) != img.freq.of(c)) return false;
    const bool distinct = !is_primary(c);
    for (std::size_t n = 1; n < list.size(); ++n) {
      if (distinct ? list[n - 1] <= list[n] : list[n - 1] < list[n]) return false;
    }
    if (list.empty()) continue;
    const int smallest = list.back();
    if (smallest < 0) return false;
    if (c == Color::AB || c == Color::AC) {
      if (smallest < 1) return false;
    } else if (c == Color::BC && smallest == 0) {
      const auto& a = img.of(Color::A);
      if (a.empty() || a.back() != 0) return false;
    }
  }
  return true;
}

StaircaseImage staircase_forward(const ColoredPartition& p) {
  if (!is_type1(p)) throw NotType1("staircase_forward: " + to_string(p) + " is not Type-1");
  StaircaseImage img;
  img.t = static_cast<int>(p.parts.size());
  int r = 0;
  for (auto it = p.parts.rbegin(); it != p.parts.rend(); ++it) {
    ++r;
    img.of(it->color).push_back(it->value - r);
    ++img.freq.of(it->color);
  }
  for (auto& list : img.by_color) std::reverse(list.begin(), list.end());
  return img;
}

ColoredPartition staircase_inverse(const StaircaseImage& img) {
  if (!is_valid_image(img)) throw InvalidImage("staircase_inverse: image violates its invariants");
  std::vector<Part> ascending;
  ascending.reserve(static_cast<std::size_t>(img.t));
  for (Color c : kAllColors) {
    for (int v : img.of(c)) ascending.push_back({v, c});
  }
  std::sort(ascending.begin(), ascending.end(), [](const Part& x, const Part& y) {
    return x.value != y.value ? x.value < y.value : rank(x.color) < rank(y.color);
  });
  for (std::size_t n = 0; n < ascending.size(); ++n) ascending[n].value += static_cast<int>(n) + 1;
  ColoredPartition out{{ascending.rbegin(), ascending.rend()}};
  if (!is_type1(out)) throw InvalidImage("staircase_inverse: image does not lift to a Type-1 partition");
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Depth-first search over parts from `value` downward. Each value is skipped
// or taken in one color compatible with the previously taken (larger) part.
class Type1Search {
 public:
  using Accept = std::function<bool(const Part&)>;  // may this part be added now?

  explicit Type1Search(std::function<void(const ColoredPartition&)> visit) : visit_(std::move(visit)) {}

  void run(int max_part, const Accept& accept, const std::function<void(const Part&, int)>& note) {
    accept_ = &accept;
    note_ = &note;
    current_.parts.clear();
    descend(max_part);
  }

 private:
  void descend(int value) {
    if (value < 1) {
      visit_(current_);
      return;
    }
    descend(value - 1);
    for (Color c : kAllColors) {
      const Part part{value, c};
      if (!part_ok(part)) continue;
      if (!current_.parts.empty() && !adjacent_ok(current_.parts.back(), part)) continue;
      if (!(*accept_)(part)) continue;
      (*note_)(part, +1);
      current_.parts.push_back(part);
      descend(value - 1);
      current_.parts.pop_back();
      (*note_)(part, -1);
    }
  }

  std::function<void(const ColoredPartition&)> visit_;
  const Accept* accept_ = nullptr;
  const std::function<void(const Part&, int)>* note_ = nullptr;
  ColoredPartition current_;
};

std::vector<Integer> to_integers(const std::vector<std::int64_t>& counts) {
  return {counts.begin(), counts.end()};
}

}  // namespace

void for_each_type1(int max_part, const std::function<void(const ColoredPartition&)>& visit) {
  Type1Search search(visit);
  search.run(max_part, [](const Part&) { return true; }, [](const Part&, int) {});
}

void for_each_type1_by_transformed_weight(
    int max_weight, const std::function<void(const ColoredPartition&)>& visit) {
  int budget = max_weight;
  const int max_part = std::max(0, (max_weight + 6) / 6);
  Type1Search search(visit);
  search.run(
      max_part, [&](const Part& p) { return 6 * p.value - remark3_offset(p.color) <= budget; },
      [&](const Part& p, int sign) { budget -= sign * (6 * p.value - remark3_offset(p.color)); });
}

std::vector<Integer> type1_histogram(int L, const Frequencies& freq) {
  const int t = freq.total();
  if (L < 0 || freq.a < 0 || freq.b < 0 || freq.c < 0 || freq.ab < 0 || freq.ac < 0 ||
      freq.bc < 0) {
    return {};
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(std::max<std::int64_t>(triangular(L), 0)) + 1);
  Frequencies remaining = freq;
  int parts_left = t;
  auto visit = [&](const ColoredPartition& p) {
    if (parts_left == 0) ++counts[static_cast<std::size_t>(p.weight())];
  };
  Type1Search search(visit);
  search.run(
      L,
      [&](const Part& p) { return remaining.of(p.color) > 0 && parts_left <= p.value; },
      [&](const Part& p, int sign) {
        remaining.of(p.color) -= sign;
        parts_left -= sign;
      });
  return to_integers(counts);
}

Integer count_G(int L, int n, const Frequencies& freq) {
  const auto hist = type1_histogram(L, freq);
  if (n < 0 || static_cast<std::size_t>(n) >= hist.size()) return 0;
  return hist[static_cast<std::size_t>(n)];
}

namespace {

// Weight histogram of `count` distinct parts chosen from 1..bound.
std::vector<std::int64_t> distinct_parts_histogram(int count, int bound) {
  if (count < 0) return {};
  std::vector<std::int64_t> hist;
  std::int64_t weight = 0;
  std::function<void(int, int)> pick = [&](int next, int left) {
    if (left == 0) {
      if (hist.size() <= static_cast<std::size_t>(weight)) hist.resize(static_cast<std::size_t>(weight) + 1);
      ++hist[static_cast<std::size_t>(weight)];
      return;
    }
    for (int v = next; v + left - 1 <= bound; ++v) {
      weight += v;
      pick(v + 1, left - 1);
      weight -= v;
    }
  };
  pick(1, count);
  return hist;
}

std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& x,
                                   const std::vector<std::int64_t>& y) {
  if (x.empty() || y.empty()) return {};
  std::vector<std::int64_t> out(x.size() + y.size() - 1);
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) out[a + b] += x[a] * y[b];
  }
  return out;
}

}  // namespace

std::vector<Integer> tricolor_histogram(int L, int i, int j, int k) {
  const auto hist = convolve(convolve(distinct_parts_histogram(i, L - k), distinct_parts_histogram(j, L - i)),
                             distinct_parts_histogram(k, L - j));
  return to_integers(hist);
}

Integer count_P(int L, int n, int i, int j, int k) {
  const auto hist = tricolor_histogram(L, i, j, k);
  if (n < 0 || static_cast<std::size_t>(n) >= hist.size()) return 0;
  return hist[static_cast<std::size_t>(n)];
}

namespace {

LaurentPoly histogram_poly(const std::vector<Integer>& hist) {
  std::vector<Term> terms;
  for (std::size_t n = 0; n < hist.size(); ++n) {
    if (hist[n] != 0) terms.push_back({static_cast<int>(n), hist[n]});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

Theorem1Report theorem1_report(int L, int i, int j, int k) {
  if (L < std::max({i + j, j + k, k + i})) {
    throw PreconditionViolated("theorem1: requires L >= max(i+j, j+k, k+i)");
  }
  if (i < 0 || j < 0 || k < 0) throw PreconditionViolated("theorem1: requires i, j, k >= 0");

  std::vector<Integer> g_hist;
  for (const auto& s : enumerate_sextuples(i, j, k)) {
    const auto h = type1_histogram(L, {s.a, s.b, s.c, s.ab, s.ac, s.bc});
    if (g_hist.size() < h.size()) g_hist.resize(h.size());
    for (std::size_t n = 0; n < h.size(); ++n) g_hist[n] += h[n];
  }
  const auto p_hist = tricolor_histogram(L, i, j, k);

  Theorem1Report report;
  const std::size_t span = std::max(g_hist.size(), p_hist.size());
  report.counts_match = true;
  for (std::size_t n = 0; n < span; ++n) {
    const Integer g = n < g_hist.size() ? g_hist[n] : Integer(0);
    const Integer p = n < p_hist.size() ? p_hist[n] : Integer(0);
    if (g != p) report.counts_match = false;
  }
  report.g_poly = histogram_poly(g_hist);
  report.p_poly = histogram_poly(p_hist);
  report.g_bridge = report.g_poly == lhs_g({i, j, k, L, L});
  report.p_bridge = report.p_poly == closed_form_diag(i, j, k, L);
  return report;
}

bool check_theorem1(int L, int i, int j, int k) { return theorem1_report(L, i, j, k).ok(); }

// ---------------------------------------------------------------------------
// Goellnitz

Integer gollnitz_B(int n) {
  if (n < 0) return 0;
  std::vector<int> allowed;
  for (int v = 1; v <= n; ++v) {
    const int r = v % 6;
    if (r == 2 || r == 4 || r == 5) allowed.push_back(v);
  }
  std::int64_t count = 0;
  std::function<void(std::size_t, int)> pick = [&](std::size_t from, int left) {
    if (left == 0) {
      ++count;
      return;
    }
    for (std::size_t idx = from; idx < allowed.size() && allowed[idx] <= left; ++idx) {
      pick(idx + 1, left - allowed[idx]);
    }
  };
  pick(0, n);
  return count;
}

namespace {

int min_gap_below(int part) {
  const int r = part % 6;
  return (r == 0 || r == 1 || r == 3) ? 7 : 6;
}

}  // namespace

bool is_gollnitz_C_partition(const std::vector<int>& parts) {
  for (std::size_t n = 0; n < parts.size(); ++n) {
    const int m = parts[n];
    if (m < 1 || m == 1 || m == 3) return false;
    if (n > 0 && parts[n - 1] - m < min_gap_below(parts[n - 1])) return false;
  }
  return true;
}

Integer gollnitz_C(int n) {
  if (n < 0) return 0;
  std::int64_t count = 0;
  std::function<void(int, int)> pick = [&](int max_part, int left) {
    if (left == 0) {
      ++count;
      return;
    }
    for (int m = std::min(max_part, left); m >= 1; --m) {
      if (m == 1 || m == 3) continue;
      pick(m - min_gap_below(m), left - m);
    }
  };
  pick(n, n);
  return count;
}

std::vector<int> remark3_transform(const ColoredPartition& p) {
  if (!is_type1(p)) throw NotType1("remark3_transform: " + to_string(p) + " is not Type-1");
  std::vector<int> out;
  out.reserve(p.parts.size());
  for (const auto& part : p.parts) out.push_back(6 * part.value - remark3_offset(part.color));
  return out;
}

Remark3Check remark3_check(int weight) {
  Remark3Check out;
  std::set<std::vector<int>> seen;
  for_each_type1_by_transformed_weight(weight, [&](const ColoredPartition& p) {
    std::vector<int> image = remark3_transform(p);
    if (std::accumulate(image.begin(), image.end(), 0) != weight) return;
    ++out.images;
    if (!is_gollnitz_C_partition(image)) out.all_in_C = false;
    if (!seen.insert(std::move(image)).second) out.injective = false;
  });
  out.c_count = gollnitz_C(weight);
  return out;
}

std::string to_string(const ColoredPartition& p) {
  std::string out = "[";
  for (std::size_t n = 0; n < p.parts.size(); ++n) {
    if (n > 0) out += ", ";
    out += std::to_string(p.parts[n].value);
    out += '_';
    out += color_name(p.parts[n].color);
  }
  return out + "]";
}

}  // namespace qgollnitz
