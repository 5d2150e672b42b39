#include "phasebench/density.hpp"

#include "phasebench/parameter.hpp"

#include <algorithm>
#include <limits>

namespace phasebench {

namespace {

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

BigInt ceil_of(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (q * den < num)
        ++q;
    return q;
}

BigInt floor_of(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (q * den > num)
        --q;
    return q;
}

std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || v > BigInt(std::numeric_limits<std::uint32_t>::max()))
        throw ConfigError("density exponent out of range");
    return v.convert_to<std::uint64_t>();
}

// sum_{j=from}^{to} k^j
BigInt geometric(std::size_t k, std::uint64_t from, std::uint64_t to) {
    if (from > to)
        return 0;
    return (big_pow(k, to + 1) - big_pow(k, from)) / (k - 1);
}

} // namespace

bool DensityReport::consistent() const {
    if (enumeratedCount && *enumeratedCount != closedFormCount)
        return false;
    if (enumeratedExcludingUndefined && *enumeratedExcludingUndefined != closedFormExcludingUndefined)
        return false;
    if (zeroStartForm && *zeroStartForm != closedFormCount)
        return false;
    if (fixedWidthForm && *fixedWidthForm != closedFormCount)
        return false;
    return true;
}

DensityReport density_counts(std::size_t alphabetSize, const Rational& e1, const Rational& e2, const PIso* iso) {
    require_even_alphabet(alphabetSize);
    if (e1 < 0 || !(e1 < e2))
        throw ConfigError("density needs 0 <= e1 < e2");
    DensityReport r;
    r.alphabetSize = alphabetSize;
    r.e1 = e1;
    r.e2 = e2;
    r.delta = e2 - e1;
    const Rational low = e1 * e1;
    const Rational high = e2 * e2;
    r.endpointsAligned = is_integer(low) && is_integer(high);
    r.nLow = to_u64(ceil_of(low));
    r.nHigh = to_u64(floor_of(high));

    r.closedFormCount = geometric(alphabetSize, r.nLow, r.nHigh);
    r.closedFormExcludingUndefined = geometric(alphabetSize, std::max<std::uint64_t>(r.nLow, 1), r.nHigh);

    const std::size_t k = alphabetSize;
    if (e1 == 0 && is_integer(high))
        r.zeroStartForm = (big_pow(k, r.nHigh + 1) - 1) / (k - 1);
    const Rational widthExponent = 2 * r.delta * e1 + r.delta * r.delta + 1;
    if (is_integer(low) && is_integer(widthExponent))
        r.fixedWidthForm = big_pow(k, r.nLow) * (big_pow(k, to_u64(floor_of(widthExponent))) - 1) / (k - 1);

    // Enumeration, only while it stays small.
    if (r.nLow <= r.nHigh && r.closedFormCount > BigInt(kDensityEnumerationCap))
        return r;
    if (iso != nullptr && iso->kind() == IsoKind::Table && r.nHigh > iso->budget())
        return r;
    BigInt counted = 0;
    BigInt undefined = 0;
    for (std::uint64_t n = r.nLow; n <= r.nHigh; ++n) {
        if (iso != nullptr) {
            for (const Word& x : ball(*iso, n).members) {
                (void)x;
                ++counted;
            }
        } else {
            for (const Word& w : WordRange(k, n)) {
                (void)w;
                ++counted;
            }
        }
        if (n == 0)
            undefined = counted;
    }
    r.enumeratedCount = counted;
    r.enumeratedExcludingUndefined = counted - undefined;
    return r;
}

} // namespace phasebench
