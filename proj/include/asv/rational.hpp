#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace asv {

// Arbitrary precision rational, always canonical after arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", "-p/q" or an integer string. Throws DomainError otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
Rational abs_of(const Rational& r);

// A rational extended with +inf and -inf, used for suprema.
class ExtRational {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtRational() : kind_(Kind::NegInf) {}
    ExtRational(const Rational& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT

    static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }
    static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    // Only meaningful when finite().
    const Rational& value() const { return value_; }

    friend int compare(const ExtRational& a, const ExtRational& b);
    friend bool operator<(const ExtRational& a, const ExtRational& b) { return compare(a, b) < 0; }
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return compare(a, b) > 0; }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return compare(a, b) >= 0; }
    friend bool operator==(const ExtRational& a, const ExtRational& b) { return compare(a, b) == 0; }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return compare(a, b) != 0; }

    std::string str() const;

private:
    explicit ExtRational(Kind k) : kind_(k) {}
    Kind kind_;
    Rational value_;
};

}  // namespace asv
