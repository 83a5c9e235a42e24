#include "melange/poly.hpp"

#include "melange/errors.hpp"

namespace melange {

NcPoly NcPoly::unit(const SignaturePtr& sig) {
    NcPoly p(sig);
    p.terms_.emplace(Word(sig), Rational(1));
    return p;
}

NcPoly NcPoly::monomial(Word w, Rational c) {
    NcPoly p(w.signature());
    if (c != 0) p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

NcPoly NcPoly::from_letter(const Letter& a) {
    return monomial(Word(a.signature(), {a}));
}

Rational NcPoly::coeff(const Word& w) const {
    require_same_signature(sig_, w.signature(), "coeff");
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

int NcPoly::deg() const {
    if (terms_.empty()) return kDegZero;
    // graded map order: the longest word is the last key
    return static_cast<int>(terms_.rbegin()->first.size());
}

void NcPoly::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    require_same_signature(sig_, w.signature(), "add_term");
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    require_same_signature(sig_, o.sig_, "add");
    for (const auto& [w, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    require_same_signature(sig_, o.sig_, "subtract");
    for (const auto& [w, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(w, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

bool NcPoly::operator==(const NcPoly& o) const { return terms_ == o.terms_; }

bool NcPoly::is_homogeneous_letters() const {
    for (const auto& [w, c] : terms_)
        if (w.size() != 1) return false;
    return true;
}

NcPoly conc(const NcPoly& p, const NcPoly& q) {
    require_same_signature(p.signature(), q.signature(), "conc");
    NcPoly out(p.signature());
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms())
            out.add_term(concat(u, v), cu * cv);
    return out;
}

NcPoly prepend(const Letter& a, const NcPoly& p) {
    NcPoly out(p.signature());
    for (const auto& [w, c] : p.terms()) out.add_term(w.prepended(a), c);
    return out;
}

} // namespace melange
