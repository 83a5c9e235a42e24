#pragma once

#include <limits>
#include <map>

#include "melange/word.hpp"

namespace melange {

/// Noncommutative polynomial: a finite word -> rational map with no zero
/// entries stored. Lookup of an absent word yields 0.
class NcPoly {
public:
    /// deg() of the zero polynomial (stands in for -infinity, so that
    /// deg is additive under concatenation).
    static constexpr int kDegZero = std::numeric_limits<int>::min();

    explicit NcPoly(SignaturePtr sig) : sig_(std::move(sig)) {}

    static NcPoly zero(SignaturePtr sig) { return NcPoly(std::move(sig)); }
    static NcPoly unit(const SignaturePtr& sig);          // empty word, coeff 1
    static NcPoly monomial(Word w, Rational c = Rational(1));
    static NcPoly from_letter(const Letter& a);

    const SignaturePtr& signature() const { return sig_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Word& w) const;
    int deg() const;

    /// Adds c*w, erasing the entry if the sum cancels.
    void add_term(const Word& w, const Rational& c);

    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    NcPoly& operator*=(const Rational& c);

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(const Rational& c, NcPoly p) { return p *= c; }

    bool operator==(const NcPoly& o) const;

    /// True iff every word in the support has length exactly 1.
    bool is_homogeneous_letters() const;

private:
    SignaturePtr sig_;
    std::map<Word, Rational> terms_;
};

/// Concatenation product, bilinear in both arguments.
NcPoly conc(const NcPoly& p, const NcPoly& q);

/// a * p with a single letter prepended to every word.
NcPoly prepend(const Letter& a, const NcPoly& p);

} // namespace melange
