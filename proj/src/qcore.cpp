#include "qgollnitz/qcore.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qgollnitz/errors.hpp"

namespace qgollnitz {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.push_back({0, std::move(constant)});
}

LaurentPoly LaurentPoly::monomial(Integer coeff, int exponent) {
  if (coeff == 0) return {};
  return LaurentPoly(std::vector<Term>{{exponent, std::move(coeff)}});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return LaurentPoly(std::move(out));
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of the zero polynomial");
  return terms_.front().exponent;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of the zero polynomial");
  return terms_.back().exponent;
}

Integer LaurentPoly::sum_of_coefficients() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

LaurentPoly LaurentPoly::shifted(int n) const {
  LaurentPoly out = *this;
  if (n != 0) {
    for (auto& t : out.terms_) t.exponent += n;
  }
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int power) const {
  if (power < 1) throw std::invalid_argument("substitute_power: power must be positive");
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.exponent *= power;
  return out;
}

LaurentPoly LaurentPoly::truncated_below(int bound) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), bound,
                             [](const Term& t, int e) { return t.exponent < e; });
  return LaurentPoly(std::vector<Term>(terms_.begin(), it));
}

namespace {

// Merges two sorted term lists; sign = +1 or -1 applied to rhs.
std::vector<Term> merge_terms(const std::vector<Term>& lhs, const std::vector<Term>& rhs,
                              bool negate_rhs) {
  std::vector<Term> out;
  out.reserve(lhs.size() + rhs.size());
  auto a = lhs.begin();
  auto b = rhs.begin();
  while (a != lhs.end() || b != rhs.end()) {
    if (b == rhs.end() || (a != lhs.end() && a->exponent < b->exponent)) {
      out.push_back(*a++);
    } else if (a == lhs.end() || b->exponent < a->exponent) {
      out.push_back(negate_rhs ? Term{b->exponent, -b->coeff} : *b);
      ++b;
    } else {
      Integer c = negate_rhs ? a->coeff - b->coeff : a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exponent, std::move(c)});
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) return *this = rhs;
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (rhs.terms_.size() == 1 && rhs.terms_[0].coeff == 1) return lhs.shifted(rhs.terms_[0].exponent);
  if (lhs.terms_.size() == 1 && lhs.terms_[0].coeff == 1) return rhs.shifted(lhs.terms_[0].exponent);

  // Dense accumulation over the exponent window, then compress.
  const int lo = lhs.min_exponent() + rhs.min_exponent();
  const int hi = lhs.max_exponent() + rhs.max_exponent();
  std::vector<Integer> acc(static_cast<std::size_t>(hi - lo) + 1);
  Integer prod;
  for (const auto& x : lhs.terms_) {
    for (const auto& y : rhs.terms_) {
      boost::multiprecision::multiply(prod, x.coeff, y.coeff);
      acc[static_cast<std::size_t>(x.exponent + y.exponent - lo)] += prod;
    }
  }
  std::vector<Term> out;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0) out.push_back({lo + static_cast<int>(i), std::move(acc[i])});
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly operator-(LaurentPoly p) {
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void add_monomial(LaurentPoly& p, const Integer& coeff, int exponent) {
  if (coeff != 0) p += LaurentPoly::monomial(coeff, exponent);
}

std::string to_string(const LaurentPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    const Integer mag = negative ? Integer(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.exponent == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) {
      out += mag.str();
      out += '*';
    }
    out += var;
    if (t.exponent != 1) {
      out += '^';
      out += std::to_string(t.exponent);
    }
  }
  return out;
}

namespace {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, std::string_view var) : var_(var) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }
  }

  LaurentPoly parse() {
    if (src_.empty()) fail("empty input");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    terms.push_back(term(negative));
    while (pos_ < src_.size()) {
      const char op = src_[pos_++];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      terms.push_back(term(op == '-'));
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse_laurent: " + what + " at offset " + std::to_string(pos_) + " in '" +
                     src_ + "'");
  }

  [[nodiscard]] char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  bool at_var() const { return src_.compare(pos_, var_.size(), var_) == 0; }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return src_.substr(start, pos_ - start);
  }

  Term term(bool negative) {
    Integer coeff = 1;
    int exponent = 0;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(digits());
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
        if (!at_var()) fail("expected variable after '*'");
      } else {
        return {0, negative ? Integer(-coeff) : coeff};
      }
    }
    if (!at_var()) fail(have_coeff ? "expected variable" : "expected coefficient or variable");
    pos_ += var_.size();
    exponent = 1;
    if (peek() == '^') {
      ++pos_;
      bool neg_exp = false;
      if (peek() == '-') {
        neg_exp = true;
        ++pos_;
      }
      const std::string e = digits();
      long long v = 0;
      try {
        v = std::stoll(e);
      } catch (const std::out_of_range&) {
        fail("exponent out of range");
      }
      if (v > std::numeric_limits<int>::max()) fail("exponent out of range");
      exponent = static_cast<int>(neg_exp ? -v : v);
    }
    return {exponent, negative ? Integer(-coeff) : coeff};
  }

  std::string src_;
  std::string var_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::string_view var) {
  return LaurentParser(text, var).parse();
}

// ---------------------------------------------------------------------------
// TruncSeries

namespace {

void require_order(int order) {
  if (order < 1) throw std::invalid_argument("TruncSeries: order must be >= 1");
}

}  // namespace

TruncSeries::TruncSeries(int order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order));
}

TruncSeries::TruncSeries(int order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order));
}

TruncSeries TruncSeries::one(int order) { return monomial(1, 0, order); }

TruncSeries TruncSeries::monomial(Integer coeff, int exponent, int order) {
  if (exponent < 0) throw NegativeExponent("TruncSeries::monomial: negative exponent");
  TruncSeries s(order);
  if (exponent < order) s.coeffs_[static_cast<std::size_t>(exponent)] = std::move(coeff);
  return s;
}

TruncSeries TruncSeries::truncated(int order) const {
  return TruncSeries(std::min(order, this->order()), coeffs_);
}

TruncSeries TruncSeries::reciprocal() const {
  const Integer& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) {
    throw NonUnitConstantTerm("series reciprocal: constant term " + c0.str() + " is not a unit");
  }
  const std::size_t n = coeffs_.size();
  std::vector<Integer> inv(n);
  inv[0] = c0;  // 1/c0 == c0 for units
  for (std::size_t m = 1; m < n; ++m) {
    Integer acc = 0;
    for (std::size_t e = 1; e <= m; ++e) {
      if (coeffs_[e] != 0) acc += coeffs_[e] * inv[m - e];
    }
    inv[m] = c0 == 1 ? Integer(-acc) : acc;
  }
  return TruncSeries(order(), std::move(inv));
}

LaurentPoly TruncSeries::to_poly() const {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] != 0) terms.push_back({static_cast<int>(e), coeffs_[e]});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t e = 0; e < coeffs_.size(); ++e) coeffs_[e] += rhs.coeffs_[e];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t e = 0; e < coeffs_.size(); ++e) coeffs_[e] -= rhs.coeffs_[e];
  return *this;
}

TruncSeries operator+(const TruncSeries& lhs, const TruncSeries& rhs) {
  TruncSeries out = lhs;
  return out += rhs;
}

TruncSeries operator-(const TruncSeries& lhs, const TruncSeries& rhs) {
  TruncSeries out = lhs;
  return out -= rhs;
}

TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  std::vector<Integer> out(static_cast<std::size_t>(order));
  Integer prod;
  for (int a = 0; a < order; ++a) {
    const Integer& x = lhs.coeffs_[static_cast<std::size_t>(a)];
    if (x == 0) continue;
    for (int b = 0; a + b < order; ++b) {
      const Integer& y = rhs.coeffs_[static_cast<std::size_t>(b)];
      if (y == 0) continue;
      boost::multiprecision::multiply(prod, x, y);
      out[static_cast<std::size_t>(a + b)] += prod;
    }
  }
  return TruncSeries(order, std::move(out));
}

bool operator==(const TruncSeries& lhs, const TruncSeries& rhs) {
  const std::size_t n = std::min(lhs.coeffs_.size(), rhs.coeffs_.size());
  return std::equal(lhs.coeffs_.begin(), lhs.coeffs_.begin() + static_cast<std::ptrdiff_t>(n),
                    rhs.coeffs_.begin());
}

TruncSeries series_from_poly(const LaurentPoly& p, int order) {
  require_order(order);
  std::vector<Integer> coeffs(static_cast<std::size_t>(order));
  for (const auto& t : p.terms()) {
    if (t.exponent < 0) {
      throw NegativeExponent("series_from_poly: term q^" + std::to_string(t.exponent));
    }
    if (t.exponent < order) coeffs[static_cast<std::size_t>(t.exponent)] = t.coeff;
  }
  return TruncSeries(order, std::move(coeffs));
}

std::string to_string(const TruncSeries& s) {
  const std::string body = to_string(s.to_poly());
  const std::string tail = "O(q^" + std::to_string(s.order()) + ")";
  return body == "0" ? tail : body + " + " + tail;
}

// ---------------------------------------------------------------------------
// BivarLaurent

BivarLaurent::BivarLaurent(LaurentPoly constant) {
  if (!constant.is_zero()) entries_.push_back({0, std::move(constant)});
}

BivarLaurent BivarLaurent::monomial(LaurentPoly coeff, int exponent) {
  BivarLaurent out;
  if (!coeff.is_zero()) out.entries_.push_back({exponent, std::move(coeff)});
  return out;
}

LaurentPoly BivarLaurent::coeff(int exponent) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), exponent,
                             [](const Entry& e, int x) { return e.exponent < x; });
  if (it != entries_.end() && it->exponent == exponent) return it->coeff;
  return {};
}

LaurentPoly BivarLaurent::substitute_one() const {
  LaurentPoly sum;
  for (const auto& e : entries_) sum += e.coeff;
  return sum;
}

BivarLaurent BivarLaurent::truncated_q(int bound) const {
  BivarLaurent out;
  for (const auto& e : entries_) {
    LaurentPoly c = e.coeff.truncated_below(bound);
    if (!c.is_zero()) out.entries_.push_back({e.exponent, std::move(c)});
  }
  return out;
}

void BivarLaurent::add_entry(int exponent, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), exponent,
                             [](const Entry& e, int x) { return e.exponent < x; });
  if (it != entries_.end() && it->exponent == exponent) {
    it->coeff += coeff;
    if (it->coeff.is_zero()) entries_.erase(it);
  } else {
    entries_.insert(it, Entry{exponent, coeff});
  }
}

BivarLaurent& BivarLaurent::operator+=(const BivarLaurent& rhs) {
  for (const auto& e : rhs.entries_) add_entry(e.exponent, e.coeff);
  return *this;
}

BivarLaurent& BivarLaurent::operator-=(const BivarLaurent& rhs) {
  for (const auto& e : rhs.entries_) add_entry(e.exponent, -e.coeff);
  return *this;
}

BivarLaurent operator*(const BivarLaurent& lhs, const BivarLaurent& rhs) {
  BivarLaurent out;
  for (const auto& x : lhs.entries_) {
    for (const auto& y : rhs.entries_) out.add_entry(x.exponent + y.exponent, x.coeff * y.coeff);
  }
  return out;
}

std::string to_string(const BivarLaurent& p, std::string_view aux, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& e : p.entries()) {
    if (!first) out << " + ";
    first = false;
    out << '(' << to_string(e.coeff, var) << ')';
    if (e.exponent == 0) continue;
    out << '*' << aux;
    if (e.exponent != 1) out << '^' << e.exponent;
  }
  return out.str();
}

}  // namespace qgollnitz
