#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sumcont/common.hpp"

namespace sumcont {

/**
 * A positive comparison factor, either an exact rational p/q or a plain
 * double. Inequalities of the form  count >= value * product  are decided
 * in integer arithmetic for rationals and with a direct long double
 * comparison (tolerance zero) otherwise, so branch decisions reproduce
 * bit-for-bit.
 */
class Threshold {
public:
    static Threshold rational(std::int64_t num, std::int64_t den) {
        if (num <= 0 || den <= 0) throw PreconditionError("Threshold: rational must be positive");
        Threshold t;
        t.num_ = num;
        t.den_ = den;
        return t;
    }
    static Threshold real(double v) {
        if (!(v > 0)) throw PreconditionError("Threshold: value must be positive");
        Threshold t;
        t.value_ = v;
        return t;
    }

    bool is_rational() const { return num_.has_value(); }

    double value() const {
        if (num_) return static_cast<double>(*num_) / static_cast<double>(*den_);
        return value_;
    }

    /// count >= value * f1 * f2
    bool at_least(std::int64_t count, std::int64_t f1, std::int64_t f2) const {
        if (num_) return BigInt(count) * *den_ >= BigInt(*num_) * f1 * f2;
        return static_cast<long double>(count) >=
               static_cast<long double>(value_) * static_cast<long double>(f1) *
                   static_cast<long double>(f2);
    }

    /// count <= value * f1 * f2
    bool at_most(std::int64_t count, std::int64_t f1, std::int64_t f2) const {
        if (num_) return BigInt(count) * *den_ <= BigInt(*num_) * f1 * f2;
        return static_cast<long double>(count) <=
               static_cast<long double>(value_) * static_cast<long double>(f1) *
                   static_cast<long double>(f2);
    }

    /// Parses "p/q" into an exact rational, anything else as a double.
    static Threshold parse(const std::string& text);

    std::string repr() const {
        if (num_) return std::to_string(*num_) + "/" + std::to_string(*den_);
        return std::to_string(value_);
    }

    std::optional<std::int64_t> numerator() const { return num_; }
    std::optional<std::int64_t> denominator() const { return den_; }

private:
    std::optional<std::int64_t> num_;
    std::optional<std::int64_t> den_;
    double value_ = 0.0;
};

inline Threshold Threshold::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t p = std::stoll(text.substr(0, slash));
        std::int64_t q = std::stoll(text.substr(slash + 1));
        return rational(p, q);
    }
    return real(std::stod(text));
}

} // namespace sumcont
