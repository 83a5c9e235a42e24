#pragma once

#include <map>
#include <utility>

#include "melange/poly.hpp"

namespace melange {

/// Element of the tensor square: a finite (word, word) -> rational map
/// with no zero entries stored.
class Tensor2 {
public:
    using Key = std::pair<Word, Word>;

    explicit Tensor2(SignaturePtr sig) : sig_(std::move(sig)) {}

    static Tensor2 zero(SignaturePtr sig) { return Tensor2(std::move(sig)); }
    /// 1 (x) 1.
    static Tensor2 unit(const SignaturePtr& sig);

    const SignaturePtr& signature() const { return sig_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Word& u, const Word& v) const;
    void add_term(const Word& u, const Word& v, const Rational& c);

    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    Tensor2& operator*=(const Rational& c);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }

    bool operator==(const Tensor2& o) const;

private:
    SignaturePtr sig_;
    std::map<Key, Rational> terms_;
};

/// Componentwise concatenation product on the tensor square.
Tensor2 tensor_mul_conc(const Tensor2& a, const Tensor2& b);

} // namespace melange
