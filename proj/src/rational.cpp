#include "melange/rational.hpp"

#include "melange/errors.hpp"

namespace melange {

Rational make_rational(long num, long den) {
    if (den == 0) throw SemanticError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational", 0);
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](mpz_class& out) {
        std::size_t start = i;
        out = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
        if (i == start) throw ParseError("expected digits in rational", i);
    };
    mpz_class num;
    digits(num);
    mpz_class den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        digits(den);
        if (den == 0) throw ParseError("zero denominator", i);
    }
    if (i != text.size()) throw ParseError("trailing characters in rational", i);
    if (neg) num = -num;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_text(const Rational& r) {
    return r.get_str();
}

Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0 && e < 0) throw SemanticError("negative power of zero");
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
    // base canonical => base^k canonical
    return out;
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(b);
}

bool is_positive_integer(const Rational& r) {
    return r.get_den() == 1 && r.get_num() > 0;
}

std::size_t hash_value(const Rational& r) {
    auto hash_mpz = [](const mpz_class& z) {
        std::size_t h = 1469598103934665603ull;
        const mpz_srcptr p = z.get_mpz_t();
        int sz = p->_mp_size;
        h = (h ^ static_cast<std::size_t>(sz)) * 1099511628211ull;
        for (int i = 0; i < (sz < 0 ? -sz : sz); ++i) {
            h = (h ^ static_cast<std::size_t>(mpz_getlimbn(p, i))) *
                1099511628211ull;
        }
        return h;
    };
    return hash_mpz(r.get_num()) * 31 + hash_mpz(r.get_den());
}

} // namespace melange
