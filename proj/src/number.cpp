#include "infotransfer/number.hpp"

#include "infotransfer/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

namespace infotransfer {

namespace {

double as_double(const std::variant<Rational, double>& v) {
    if (const auto* r = std::get_if<Rational>(&v)) {
        return r->convert_to<double>();
    }
    return std::get<double>(v);
}

template <class ExactOp, class FloatOp>
Number combine(const Number& a, const Number& b, ExactOp exact_op, FloatOp float_op) {
    if (a.is_exact() && b.is_exact()) {
        return Number(exact_op(a.exact(), b.exact()));
    }
    return Number(float_op(a.to_double(), b.to_double()));
}

bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Number::Number(double d) : value_(d) {
    if (std::isnan(d)) {
        throw DomainError("NaN is not a number here");
    }
}

Number Number::ratio(long long num, long long den) {
    if (den == 0) {
        throw DivisionByZeroError("zero denominator in " + std::to_string(num) + "/0");
    }
    return Number(Rational(num, den));
}

const Rational& Number::exact() const {
    if (const auto* r = std::get_if<Rational>(&value_)) {
        return *r;
    }
    throw NonRationalInputError("value " + to_string() + " is not an exact rational");
}

double Number::to_double() const { return as_double(value_); }

bool Number::is_zero() const { return sign() == 0; }

bool Number::is_one() const {
    if (const auto* r = std::get_if<Rational>(&value_)) {
        return *r == 1;
    }
    return std::get<double>(value_) == 1.0;
}

int Number::sign() const {
    if (const auto* r = std::get_if<Rational>(&value_)) {
        return r->sign();
    }
    const double d = std::get<double>(value_);
    return (d > 0.0) - (d < 0.0);
}

std::string Number::to_string() const {
    if (const auto* r = std::get_if<Rational>(&value_)) {
        return numerator(*r).str() + "/" + denominator(*r).str();
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
    return std::string(buf, res.ptr);
}

Number operator+(const Number& a, const Number& b) {
    return combine(a, b, std::plus<Rational>{}, std::plus<double>{});
}

Number operator-(const Number& a, const Number& b) {
    return combine(a, b, std::minus<Rational>{}, std::minus<double>{});
}

Number operator*(const Number& a, const Number& b) {
    return combine(a, b, std::multiplies<Rational>{}, std::multiplies<double>{});
}

Number operator/(const Number& a, const Number& b) {
    if (b.is_zero()) {
        throw DivisionByZeroError("division of " + a.to_string() + " by zero");
    }
    return combine(a, b, std::divides<Rational>{}, std::divides<double>{});
}

int compare(const Number& a, const Number& b) {
    if (a.is_exact() && b.is_exact()) {
        if (a.exact() < b.exact()) return -1;
        return a.exact() == b.exact() ? 0 : 1;
    }
    const double x = a.to_double();
    const double y = b.to_double();
    return (x > y) - (x < y);
}

Probability::Probability(Number n) : value_(std::move(n)) {
    if (value_.sign() < 0 || compare(value_, Number(1)) > 0) {
        throw DomainError("probability " + value_.to_string() + " outside [0, 1]");
    }
}

Bits::Bits(double v) : value_(v) {
    if (std::isnan(v)) {
        throw DomainError("information content is NaN");
    }
}

bool Bits::is_finite() const noexcept { return std::isfinite(value_); }

Bits operator+(Bits a, Bits b) {
    const double r = a.value_ + b.value_;
    if (std::isnan(r)) {
        throw UndefinedLogError("sum of opposite infinite information contents");
    }
    return Bits(r);
}

Bits operator-(Bits a, Bits b) {
    const double r = a.value_ - b.value_;
    if (std::isnan(r)) {
        throw UndefinedLogError("difference of equal infinite information contents");
    }
    return Bits(r);
}

Number sum(const std::vector<Number>& terms) {
    Number total(0);
    for (const auto& t : terms) {
        total = total + t;
    }
    return total;
}

void require_unique_labels(const std::vector<std::string>& labels, std::string_view what) {
    std::set<std::string_view> seen;
    for (const auto& l : labels) {
        if (l.empty()) {
            throw InvariantError(std::string(what) + ": empty label");
        }
        if (!seen.insert(l).second) {
            throw InvariantError(std::string(what) + ": duplicate label '" + l + "'");
        }
    }
}

Distribution::Distribution(std::vector<std::string> labels, std::vector<Probability> probabilities)
    : labels_(std::move(labels)), probabilities_(std::move(probabilities)) {
    if (labels_.empty()) {
        throw InvariantError("distribution must have at least one event");
    }
    if (labels_.size() != probabilities_.size()) {
        throw InvariantError("distribution has " + std::to_string(labels_.size()) + " labels but " +
                             std::to_string(probabilities_.size()) + " probabilities");
    }
    require_unique_labels(labels_, "distribution");

    std::vector<Number> terms;
    terms.reserve(probabilities_.size());
    for (const auto& p : probabilities_) terms.push_back(p.number());
    const Number total = sum(terms);
    const bool ok = total.is_exact() ? total.exact() == 1
                                     : std::abs(total.to_double() - 1.0) <= kNormalizationTolerance;
    if (!ok) {
        throw InvariantError("distribution sums to " + total.to_string() + ", not 1");
    }
}

Distribution Distribution::uniform(std::vector<std::string> labels) {
    const auto n = static_cast<long long>(labels.size());
    if (n == 0) {
        throw InvariantError("distribution must have at least one event");
    }
    std::vector<Probability> ps(labels.size(), Probability(1, n));
    return Distribution(std::move(labels), std::move(ps));
}

bool Distribution::is_exact() const {
    return std::all_of(probabilities_.begin(), probabilities_.end(),
                       [](const Probability& p) { return p.is_exact(); });
}

std::optional<std::size_t> Distribution::find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Distribution::index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw UnknownLabelError("unknown label '" + std::string(label) + "'");
}

Number parse_number(std::string_view text) {
    const std::string_view s = trim(text);
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto num = trim(s.substr(0, slash));
        const auto den = trim(s.substr(slash + 1));
        if (!is_digits(num) || !is_digits(den)) {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        const BigInt d{std::string(den)};
        if (d == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
        return Number(Rational(BigInt(std::string(num)), d));
    }
    if (is_digits(s)) {
        return Number(Rational(BigInt(std::string(s))));
    }
    double d = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), d);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(d)) {
        throw ParseError("malformed number '" + std::string(text) + "'");
    }
    return Number(d);
}

} // namespace infotransfer
