#include "spdisj/numeric.hpp"

#include "spdisj/errors.hpp"

namespace spdisj {

BigInt factorial(int m) {
    BigInt out = 1;
    for (int i = 2; i <= m; ++i) out *= i;
    return out;
}

std::string to_fraction_string(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

Rational parse_fraction(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw InvalidInputError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const InvalidInputError*>(&e)) throw;
        throw InvalidInputError("not a fraction: '" + text + "'");
    }
}

}  // namespace spdisj
