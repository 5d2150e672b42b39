#pragma once

// Exact arithmetic used by every counting and bound-checking path.
//
// Counts and fractions are Boost.Multiprecision integers/rationals. Bound
// envelopes of the form Poly(n) * c^n with c = sqrt(r) are quadratic surds,
// a + b*sqrt(d), so that comparisons against measured fractions never
// touch floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace phasebench {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a counting path would leave the range of std::uint64_t.
class CountOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// base^exp in 64 bits; throws CountOverflow instead of wrapping.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

BigInt big_pow(std::uint64_t base, std::uint64_t exp);
Rational rational_pow(const Rational& base, std::uint64_t exp);

/// Reduced "p/q" (denominator always printed, "0/1" for zero).
std::string fraction_string(const Rational& r);

/// Unreduced "num/den", used where the count pair itself is the datum.
std::string fraction_string(std::uint64_t num, std::uint64_t den);

/// Accepts "7", "-3/4", "0.25", "1e-3"; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Shortest round-trip decimal of a double, then parsed exactly.
Rational rational_from_double(double value);

double to_double(const Rational& r);

/// floor(sqrt(v)) for non-negative v.
BigInt isqrt(const BigInt& v);

/// Non-negative rational that is the square of a rational; writes the root.
bool rational_sqrt(const Rational& r, Rational& root);

/// a + b*sqrt(d) with rational a, b and squarefree integer radicand d > 1
/// (or d == 1 with b == 0 for plain rationals). The canonical form makes
/// structural equality coincide with numeric equality for a fixed radicand.
class Surd {
public:
    Surd() = default;
    Surd(const Rational& a); // NOLINT: implicit from rational on purpose
    Surd(long long a) : Surd(Rational(a)) {} // NOLINT

    /// sqrt(r) for r >= 0, with square factors pulled out.
    static Surd sqrt_of(const Rational& r);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_coefficient() const { return b_; }
    const BigInt& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    /// -1, 0 or +1, computed exactly.
    int sign() const;

    Surd operator-() const;
    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o);
    Surd& operator*=(const Surd& o);
    Surd& operator/=(const Surd& o);

    friend Surd operator+(Surd l, const Surd& r) { return l += r; }
    friend Surd operator-(Surd l, const Surd& r) { return l -= r; }
    friend Surd operator*(Surd l, const Surd& r) { return l *= r; }
    friend Surd operator/(Surd l, const Surd& r) { return l /= r; }

    Surd reciprocal() const;

    friend bool operator==(const Surd& l, const Surd& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && l.d_ == r.d_;
    }
    friend std::strong_ordering operator<=>(const Surd& l, const Surd& r) {
        const int s = (l - r).sign();
        return s < 0 ? std::strong_ordering::less
             : s > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    double to_double() const;

    /// "p/q" when rational, otherwise e.g. "1/1-1/4*sqrt(2)".
    std::string to_string() const;

private:
    Surd(Rational a, Rational b, BigInt d);
    void normalize();
    void unify_radicand(const Surd& o);

    Rational a_{0};
    Rational b_{0};
    BigInt d_{1};
};

Surd min(const Surd& x, const Surd& y);
Surd max(const Surd& x, const Surd& y);

} // namespace phasebench
