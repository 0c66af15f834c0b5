#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace swg {

using Integer = mpz_class;
using Rational = mpq_class;

// Scalar carrying either an exact rational or a floating-point value.
// Exact results stay exact until a caller explicitly asks for a double.
class ExactScalar {
public:
    ExactScalar() : value_(Rational(0)) {}
    ExactScalar(Rational q) : value_(std::move(q)) {}
    ExactScalar(double d) : value_(d) {}

    bool exact() const { return std::holds_alternative<Rational>(value_); }

    const Rational& rational() const {
        if (!exact()) throw std::logic_error("ExactScalar: not in exact mode");
        return std::get<Rational>(value_);
    }

    double to_double() const {
        return exact() ? std::get<Rational>(value_).get_d() : std::get<double>(value_);
    }

private:
    std::variant<Rational, double> value_;
};

// gmpxx has no long long constructor; sizes here always fit a long.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }

Integer factorial(unsigned long n);

// Falling factorial x * (x-1) * ... * (x-m+1).
Integer falling_factorial(long long x, unsigned long m);

// Parses "3", "-3/4" or a decimal like "0.25" into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace swg
