#include "curvedop/rational.hpp"

#include <stdexcept>

namespace curvedop {

Rational make_rational(long num, long den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) {
    return r.get_str();
}

Rational factorial_rational(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return Rational(f);
}

Rational inverse_factorial(int n) {
    Rational f = factorial_rational(n);
    return Rational(1) / f;
}

}  // namespace curvedop
