#include "asv/rational.hpp"

#include <cctype>

#include "asv/errors.hpp"

namespace asv {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
        throw DomainError("not a rational: '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Integer p(n, 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer floor_of(const Rational& r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

Integer ceil_of(const Rational& r) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

int compare(const ExtRational& a, const ExtRational& b) {
    auto rank = [](ExtRational::Kind k) {
        return k == ExtRational::Kind::NegInf ? 0 : (k == ExtRational::Kind::Finite ? 1 : 2);
    };
    if (a.kind_ != b.kind_) return rank(a.kind_) < rank(b.kind_) ? -1 : 1;
    if (!a.finite()) return 0;
    return cmp(a.value_, b.value_) < 0 ? -1 : (a.value_ == b.value_ ? 0 : 1);
}

std::string ExtRational::str() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "+inf";
        default: return to_string(value_);
    }
}

}  // namespace asv
