#pragma once

#include "credence/errors.hpp"
#include "credence/rational.hpp"

#include <compare>
#include <string_view>

namespace credence {

/// An exact rational in [0, 1]. The universal numeric currency of the library:
/// construction validates the range, so a Probability is always well formed.
class Probability {
public:
    Probability() : value_(0) {}

    explicit Probability(Rational value) : value_(std::move(value)) {
        if (value_ < 0 || value_ > 1)
            throw StructuralError("probability " + fraction_string(value_) + " outside [0, 1]");
    }

    Probability(int num, int den) : Probability(Rational(num, den)) {}

    static Probability from_string(std::string_view text) {
        return Probability(parse_rational(text));
    }

    const Rational& value() const { return value_; }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    friend bool operator==(const Probability&, const Probability&) = default;
    friend auto operator<=>(const Probability& a, const Probability& b) {
        return a.value_ < b.value_   ? std::strong_ordering::less
               : a.value_ > b.value_ ? std::strong_ordering::greater
                                     : std::strong_ordering::equal;
    }

private:
    Rational value_;
};

inline Probability complement(const Probability& p) {
    return Probability(1 - p.value());
}

} // namespace credence
