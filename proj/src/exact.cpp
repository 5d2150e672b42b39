#include "phasebench/exact.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <system_error>

namespace phasebench {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw CountOverflow("count exceeds 64-bit range");
    return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw CountOverflow("count exceeds 64-bit range");
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i)
        result = checked_mul(result, base);
    return result;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

Rational rational_pow(const Rational& base, std::uint64_t exp) {
    Rational result{1};
    Rational b = base;
    while (exp != 0) {
        if (exp & 1u)
            result *= b;
        exp >>= 1u;
        if (exp != 0)
            b *= b;
    }
    return result;
}

std::string fraction_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

std::string fraction_string(std::uint64_t num, std::uint64_t den) {
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty())
        throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    BigInt v = 0;
    for (char ch : digits) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
        v = v * 10 + (ch - '0');
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = trim(text);
    std::string_view s = whole;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational value;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(trim(s.substr(0, slash)), whole);
        const BigInt den = parse_integer(trim(s.substr(slash + 1)), whole);
        if (den == 0)
            throw std::invalid_argument("zero denominator: '" + std::string(whole) + "'");
        value = Rational(num, den);
    } else {
        long long exponent = 0;
        if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_text = s.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            const BigInt mag = parse_integer(exp_text, whole);
            if (mag > 4096)
                throw std::invalid_argument("exponent out of range: '" + std::string(whole) + "'");
            exponent = mag.convert_to<long long>() * (exp_negative ? -1 : 1);
            s = s.substr(0, e);
        }
        std::string digits;
        if (const auto dot = s.find('.'); dot != std::string_view::npos) {
            digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
            exponent -= static_cast<long long>(s.size() - dot - 1);
        } else {
            digits = std::string(s);
        }
        const BigInt mantissa = parse_integer(digits, whole);
        const BigInt scale = big_pow(10, static_cast<std::uint64_t>(std::llabs(exponent)));
        value = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
    }
    return negative ? Rational(-value) : value;
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value))
        throw std::invalid_argument("non-finite number");
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (res.ec != std::errc{})
        throw std::invalid_argument("cannot format number");
    return parse_rational(std::string_view(buf.data(), static_cast<std::size_t>(res.ptr - buf.data())));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt isqrt(const BigInt& v) {
    if (v < 0)
        throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

bool rational_sqrt(const Rational& r, Rational& root) {
    if (r < 0)
        return false;
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const BigInt sn = isqrt(num);
    const BigInt sd = isqrt(den);
    if (sn * sn != num || sd * sd != den)
        return false;
    root = Rational(sn, sd);
    return true;
}

// --- Surd -------------------------------------------------------------------

Surd::Surd(const Rational& a) : a_(a) {}

Surd::Surd(Rational a, Rational b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    normalize();
}

void Surd::normalize() {
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0)
        d_ = 1;
}

Surd Surd::sqrt_of(const Rational& r) {
    if (r < 0)
        throw std::domain_error("square root of negative rational");
    if (r == 0)
        return Surd{};
    const BigInt p = boost::multiprecision::numerator(r);
    const BigInt q = boost::multiprecision::denominator(r);
    // sqrt(p/q) = sqrt(p*q)/q; split p*q = square^2 * squarefree.
    BigInt m = p * q;
    BigInt square = 1;
    BigInt free = 1;
    constexpr unsigned kTrialLimit = 1'000'000;
    for (unsigned i = 2; i <= kTrialLimit && BigInt(i) * i <= m; ++i) {
        unsigned e = 0;
        while (m % i == 0) {
            m /= i;
            ++e;
        }
        for (unsigned k = 0; k < e / 2; ++k)
            square *= i;
        if (e % 2 == 1)
            free *= i;
    }
    // Whatever is left is prime, or too large to factor; keep a perfect
    // square remainder out of the radicand either way.
    const BigInt rs = isqrt(m);
    if (rs * rs == m)
        square *= rs;
    else
        free *= m;
    return Surd(Rational(0), Rational(square, q), free);
}

int Surd::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    const Rational aa = a_ * a_;
    const Rational bbd = b_ * b_ * Rational(d_);
    if (aa > bbd)
        return sa;
    if (aa < bbd)
        return sb;
    return 0;
}

Surd Surd::operator-() const { return Surd(-a_, -b_, d_); }

void Surd::unify_radicand(const Surd& o) {
    if (o.b_ == 0)
        return;
    if (b_ == 0) {
        d_ = o.d_;
        return;
    }
    if (d_ != o.d_)
        throw std::domain_error("surd arithmetic across different radicands");
}

Surd& Surd::operator+=(const Surd& o) {
    unify_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += -o; }

Surd& Surd::operator*=(const Surd& o) {
    unify_radicand(o);
    const Rational d(d_);
    const Rational a = a_ * o.a_ + b_ * o.b_ * d;
    const Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    normalize();
    return *this;
}

Surd Surd::reciprocal() const {
    const Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    if (norm == 0)
        throw std::domain_error("division by zero surd");
    return Surd(a_ / norm, -b_ / norm, d_);
}

Surd& Surd::operator/=(const Surd& o) { return *this *= o.reciprocal(); }

double Surd::to_double() const {
    if (b_ == 0)
        return phasebench::to_double(a_);
    const long double a = a_.convert_to<long double>();
    const long double b = b_.convert_to<long double>();
    const long double d = d_.convert_to<long double>();
    return static_cast<double>(a + b * std::sqrt(d));
}

std::string Surd::to_string() const {
    if (b_ == 0)
        return fraction_string(a_);
    const std::string root = "*sqrt(" + d_.str() + ")";
    if (a_ == 0)
        return fraction_string(b_) + root;
    const Rational mag = b_ < 0 ? Rational(-b_) : b_;
    return fraction_string(a_) + (b_ < 0 ? "-" : "+") + fraction_string(mag) + root;
}

Surd min(const Surd& x, const Surd& y) { return y < x ? y : x; }
Surd max(const Surd& x, const Surd& y) { return x < y ? y : x; }

} // namespace phasebench
