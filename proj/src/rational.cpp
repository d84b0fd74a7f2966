#include "paging/rational.hpp"

#include "paging/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace paging {

Rational harmonic(int k) {
    if (k <= 0) throw InvalidInputError("harmonic(k) requires k >= 1, got " + std::to_string(k));
    Rational h = 0;
    for (int i = 1; i <= k; ++i) h += Rational(1, i);
    return h;
}

BigInt floor_div(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r); // > 0 by canonical form
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

std::string to_fraction_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidInputError("empty rational literal");
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw InvalidInputError("zero denominator in '" + text + "'");
            return Rational(num, den);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            std::size_t places = text.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+")
                throw InvalidInputError("bad rational literal '" + text + "'");
            BigInt num(digits);
            BigInt den = 1;
            for (std::size_t i = 0; i < places; ++i) den *= 10;
            return Rational(num, den);
        }
        return Rational(BigInt(text));
    } catch (const std::exception&) {
        throw InvalidInputError("bad rational literal '" + text + "'");
    }
}

double to_double(const Rational& r) {
    using Float = boost::multiprecision::cpp_bin_float_50;
    return static_cast<double>(static_cast<Float>(numerator(r)) / static_cast<Float>(denominator(r)));
}

} // namespace paging
