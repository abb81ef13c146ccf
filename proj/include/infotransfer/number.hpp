#pragma once

// Exact-or-approximate non-negative numbers, probabilities and information
// contents in bits.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace infotransfer {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// A real number held either as an exact rational or as a binary64 float.
/// Arithmetic stays exact while both operands are exact and degrades to
/// binary64 as soon as one of them is a float.
class Number {
public:
    Number() : value_(Rational(0)) {}
    Number(Rational r) : value_(std::move(r)) {}
    Number(double d);
    Number(long long n) : value_(Rational(n)) {}
    Number(int n) : value_(Rational(n)) {}

    static Number ratio(long long num, long long den);

    bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
    /// Throws NonRationalInputError if the value is a float.
    const Rational& exact() const;
    double to_double() const;

    bool is_zero() const;
    bool is_one() const;
    int sign() const;

    /// "num/den" for exact values, shortest round-trip decimal for floats.
    std::string to_string() const;

    friend Number operator+(const Number& a, const Number& b);
    friend Number operator-(const Number& a, const Number& b);
    friend Number operator*(const Number& a, const Number& b);
    /// Throws DivisionByZeroError when b is zero.
    friend Number operator/(const Number& a, const Number& b);

    /// Numeric comparison, mixing forms through binary64 when needed.
    friend int compare(const Number& a, const Number& b);
    friend bool operator<(const Number& a, const Number& b) { return compare(a, b) < 0; }
    friend bool operator>(const Number& a, const Number& b) { return compare(a, b) > 0; }

    /// Structural equality: same representation and same value.
    friend bool operator==(const Number& a, const Number& b) { return a.value_ == b.value_; }

private:
    std::variant<Rational, double> value_;
};

/// A probability: a Number constrained to [0, 1].
class Probability {
public:
    Probability() = default;
    /// Throws DomainError outside [0, 1] or for NaN.
    explicit Probability(Number n);
    Probability(long long num, long long den) : Probability(Number::ratio(num, den)) {}

    static Probability exact(Rational r) { return Probability(Number(std::move(r))); }
    static Probability approx(double d) { return Probability(Number(d)); }

    const Number& number() const noexcept { return value_; }
    bool is_exact() const noexcept { return value_.is_exact(); }
    const Rational& exact() const { return value_.exact(); }
    double to_double() const { return value_.to_double(); }
    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_.is_one(); }
    std::string to_string() const { return value_.to_string(); }

    friend bool operator==(const Probability&, const Probability&) = default;

private:
    Number value_;
};

/// An information content in bits. Signed (TIC, differences) or non-negative
/// (surprisals); may be infinite, never NaN.
class Bits {
public:
    constexpr Bits() = default;
    /// Throws DomainError for NaN.
    explicit Bits(double v);

    static constexpr double infinity = std::numeric_limits<double>::infinity();

    constexpr double value() const noexcept { return value_; }
    bool is_finite() const noexcept;

    /// Both throw UndefinedLogError when the result would be NaN (inf - inf).
    friend Bits operator+(Bits a, Bits b);
    friend Bits operator-(Bits a, Bits b);
    friend Bits operator-(Bits a) { return Bits(-a.value_); }

    friend constexpr auto operator<=>(Bits, Bits) = default;

private:
    double value_ = 0.0;
};

/// Tolerance for float-form distributions summing to 1.
inline constexpr double kNormalizationTolerance = 1e-9;

/// A labelled finite distribution. Exact-form distributions must sum to 1
/// exactly; as soon as one entry is a float the sum is checked within
/// kNormalizationTolerance. Nothing is renormalized.
class Distribution {
public:
    /// Throws InvariantError on empty input, length mismatch, duplicate
    /// labels or a sum away from 1.
    Distribution(std::vector<std::string> labels, std::vector<Probability> probabilities);

    static Distribution uniform(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Probability>& probabilities() const noexcept { return probabilities_; }
    const Probability& operator[](std::size_t i) const { return probabilities_.at(i); }

    bool is_exact() const;
    std::optional<std::size_t> find(std::string_view label) const;
    /// Throws UnknownLabelError.
    std::size_t index_of(std::string_view label) const;

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Probability> probabilities_;
};

/// Parse "num/den", "n" or a plain decimal into a Number. Rational strings
/// give exact values; decimals give floats.
Number parse_number(std::string_view text);

/// Sum of numbers, exact when every term is exact.
Number sum(const std::vector<Number>& terms);

/// Checks that labels are non-empty and pairwise distinct; `what` names the
/// list in the error message.
void require_unique_labels(const std::vector<std::string>& labels, std::string_view what);

} // namespace infotransfer
