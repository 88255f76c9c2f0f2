#pragma once

// Exact value layer: sparse Laurent polynomials in q over arbitrary-precision
// integers, power series truncated modulo q^N, and Laurent polynomials in an
// auxiliary variable whose coefficients are Laurent polynomials in q.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgollnitz {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// The two sides of an identity, evaluated independently.
template <typename T>
struct Sides {
  T lhs;
  T rhs;

  [[nodiscard]] bool equal() const { return lhs == rhs; }
};

/// One monomial c*q^e of a LaurentPoly.
struct Term {
  int exponent = 0;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse Laurent polynomial in q with integer coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal exactly when their term vectors are equal.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Integer constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}  // NOLINT

  static LaurentPoly monomial(Integer coeff, int exponent);

  /// Builds a polynomial from unordered terms; repeated exponents are summed.
  static LaurentPoly from_terms(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of q^e (zero when absent).
  [[nodiscard]] Integer coeff(int exponent) const;

  // Both require a nonzero polynomial.
  [[nodiscard]] int min_exponent() const;
  [[nodiscard]] int max_exponent() const;

  /// Value at q = 1.
  [[nodiscard]] Integer sum_of_coefficients() const;

  /// Multiplication by q^n.
  [[nodiscard]] LaurentPoly shifted(int n) const;

  /// Substitutes q -> q^power (exponent map e -> power*e); power >= 1.
  [[nodiscard]] LaurentPoly substitute_power(int power) const;

  /// Drops every term with exponent >= bound.
  [[nodiscard]] LaurentPoly truncated_below(int bound) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator-(LaurentPoly p);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  explicit LaurentPoly(std::vector<Term> sorted_nonzero) : terms_(std::move(sorted_nonzero)) {}

  std::vector<Term> terms_;
};

/// Adds c*q^e into p in place.
void add_monomial(LaurentPoly& p, const Integer& coeff, int exponent);

/// Canonical rendering, ascending exponents: `1 - q + 2*q^3`, `-q^-1`, `0`.
[[nodiscard]] std::string to_string(const LaurentPoly& p, std::string_view var = "q");

/// Parses the canonical rendering (whitespace-insensitive). Throws ParseError.
[[nodiscard]] LaurentPoly parse_laurent(std::string_view text, std::string_view var = "q");

/// Power series in q known modulo q^order.
class TruncSeries {
 public:
  /// The zero series modulo q^order; order >= 1.
  explicit TruncSeries(int order);
  /// Coefficients for q^0, q^1, ...; missing entries are zero, extra ones dropped.
  TruncSeries(int order, std::vector<Integer> coeffs);

  static TruncSeries one(int order);
  static TruncSeries monomial(Integer coeff, int exponent, int order);

  [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()); }
  [[nodiscard]] const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] const Integer& operator[](int e) const { return coeffs_.at(static_cast<std::size_t>(e)); }

  [[nodiscard]] TruncSeries truncated(int order) const;

  /// Exact inverse modulo q^order. Throws NonUnitConstantTerm.
  [[nodiscard]] TruncSeries reciprocal() const;

  /// The series as a polynomial (exponents 0..order-1).
  [[nodiscard]] LaurentPoly to_poly() const;

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);

  // Results carry the smaller of the two orders.
  friend TruncSeries operator+(const TruncSeries& lhs, const TruncSeries& rhs);
  friend TruncSeries operator-(const TruncSeries& lhs, const TruncSeries& rhs);
  friend TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs);

  /// Coefficientwise agreement up to the common order.
  friend bool operator==(const TruncSeries& lhs, const TruncSeries& rhs);

 private:
  std::vector<Integer> coeffs_;
};

/// Copies the coefficients of q^0..q^(order-1). Throws NegativeExponent.
[[nodiscard]] TruncSeries series_from_poly(const LaurentPoly& p, int order);

/// `1 - q + O(q^3)`.
[[nodiscard]] std::string to_string(const TruncSeries& s);

/// Laurent polynomial in an auxiliary variable with LaurentPoly-in-q coefficients.
class BivarLaurent {
 public:
  struct Entry {
    int exponent = 0;
    LaurentPoly coeff;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  BivarLaurent() = default;
  BivarLaurent(LaurentPoly constant);  // NOLINT(google-explicit-constructor)

  /// coeff * X^exponent.
  static BivarLaurent monomial(LaurentPoly coeff, int exponent);

  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
  [[nodiscard]] bool is_zero() const noexcept { return entries_.empty(); }
  [[nodiscard]] LaurentPoly coeff(int exponent) const;

  /// Sets the auxiliary variable to 1.
  [[nodiscard]] LaurentPoly substitute_one() const;

  /// Drops q-exponents >= bound from every coefficient.
  [[nodiscard]] BivarLaurent truncated_q(int bound) const;

  BivarLaurent& operator+=(const BivarLaurent& rhs);
  BivarLaurent& operator-=(const BivarLaurent& rhs);

  friend BivarLaurent operator+(BivarLaurent lhs, const BivarLaurent& rhs) { return lhs += rhs; }
  friend BivarLaurent operator-(BivarLaurent lhs, const BivarLaurent& rhs) { return lhs -= rhs; }
  friend BivarLaurent operator*(const BivarLaurent& lhs, const BivarLaurent& rhs);

  friend bool operator==(const BivarLaurent&, const BivarLaurent&) = default;

 private:
  void add_entry(int exponent, const LaurentPoly& coeff);

  std::vector<Entry> entries_;  // ascending exponent, nonzero coefficients
};

/// `(q)*A^-1 + (1 + q^2) + (q)*A`.
[[nodiscard]] std::string to_string(const BivarLaurent& p, std::string_view aux = "A",
                                    std::string_view var = "q");

}  // namespace qgollnitz
