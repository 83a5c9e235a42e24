#include "melange/tensor.hpp"

#include "melange/errors.hpp"

namespace melange {

Tensor2 Tensor2::unit(const SignaturePtr& sig) {
    Tensor2 t(sig);
    t.terms_.emplace(Key{Word(sig), Word(sig)}, Rational(1));
    return t;
}

Rational Tensor2::coeff(const Word& u, const Word& v) const {
    auto it = terms_.find(Key{u, v});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Tensor2::add_term(const Word& u, const Word& v, const Rational& c) {
    if (c == 0) return;
    require_same_signature(sig_, u.signature(), "tensor term");
    require_same_signature(sig_, v.signature(), "tensor term");
    auto [it, inserted] = terms_.emplace(Key{u, v}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    require_same_signature(sig_, o.sig_, "tensor add");
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    require_same_signature(sig_, o.sig_, "tensor subtract");
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(k, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Tensor2& Tensor2::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

bool Tensor2::operator==(const Tensor2& o) const { return terms_ == o.terms_; }

Tensor2 tensor_mul_conc(const Tensor2& a, const Tensor2& b) {
    require_same_signature(a.signature(), b.signature(), "tensor conc product");
    Tensor2 out(a.signature());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add_term(concat(ka.first, kb.first), concat(ka.second, kb.second),
                         ca * cb);
    return out;
}

} // namespace melange
