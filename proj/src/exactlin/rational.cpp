#include "exsym/rational.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace exsym {

Rat ratio(long n, long d) {
    if (d == 0) throw std::invalid_argument("ratio: zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    // mpq_class(str) accepts whitespace and base prefixes; be stricter.
    std::size_t slash = s.find('/');
    auto digits_ok = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den))
        throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    Rat r(n);
    r /= Rat(d);
    return r;
}

std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

double rat_to_double(const Rat& x) {
    mpfr_t t;
    mpfr_init2(t, 53);
    mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    if (!std::isfinite(d)) throw std::range_error("rat_to_double: value exceeds double range");
    return d;
}

}  // namespace exsym
