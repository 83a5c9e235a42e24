#include "melange/coalgebra.hpp"

#include <map>

#include "melange/errors.hpp"
#include "melange/text.hpp"

namespace melange {

Tensor2 delta_conc(const Word& w) {
    Tensor2 out(w.signature());
    for (std::size_t i = 0; i <= w.size(); ++i)
        out.add_term(w.prefix(i), w.suffix(i), Rational(1));
    return out;
}

Tensor2 delta_conc(const NcPoly& p) {
    Tensor2 out(p.signature());
    for (const auto& [w, c] : p.terms()) {
        Tensor2 t = delta_conc(w);
        t *= c;
        out += t;
    }
    return out;
}

Tensor2 delta_conc_plus(const Word& w) {
    Tensor2 out(w.signature());
    for (std::size_t i = 1; i < w.size(); ++i)
        out.add_term(w.prefix(i), w.suffix(i), Rational(1));
    return out;
}

std::size_t delta_conc_plus_iterate_terms(const Word& w, int n) {
    // k-fold tensors as word tuples; the proper coproduct is applied to
    // the first slot each round (coassociativity makes the slot choice
    // immaterial)
    std::map<std::vector<Word>, Rational> state;
    state.emplace(std::vector<Word>{w}, Rational(1));
    for (int round = 0; round < n; ++round) {
        std::map<std::vector<Word>, Rational> next;
        for (const auto& [slots, c] : state) {
            const Word& head = slots.front();
            for (std::size_t i = 1; i < head.size(); ++i) {
                std::vector<Word> cut;
                cut.reserve(slots.size() + 1);
                cut.push_back(head.prefix(i));
                cut.push_back(head.suffix(i));
                cut.insert(cut.end(), slots.begin() + 1, slots.end());
                auto [it, inserted] = next.emplace(std::move(cut), c);
                if (!inserted) {
                    it->second += c;
                    if (it->second == 0) next.erase(it);
                }
            }
        }
        state = std::move(next);
        if (state.empty()) break;
    }
    return state.size();
}

Tensor2 delta_phi(const Word& w, const PhiLaw& law,
                  std::span<const Letter> window) {
    require_same_signature(w.signature(), law.signature(), "delta_phi");
    const SignaturePtr& sig = law.signature();
    if (!w.empty() && law.dualizable_hint() == std::optional<bool>(false))
        throw SemanticError("law '" + law.name() +
                            "' is not dualizable: letter '" + to_text(w[0]) +
                            "' has structure constants outside any finite "
                            "window; coproduct refused");
    Tensor2 acc = Tensor2::unit(sig);
    Word empty(sig);
    for (const auto& z : w.letters()) {
        Word zw(sig, {z});
        Tensor2 letter_delta(sig);
        letter_delta.add_term(zw, empty, Rational(1));
        letter_delta.add_term(empty, zw, Rational(1));
        for (const auto& sc : structure_constants(law, z, window))
            letter_delta.add_term(Word(sig, {sc.x}), Word(sig, {sc.y}),
                                  sc.gamma);
        acc = tensor_mul_conc(acc, letter_delta);
    }
    return acc;
}

Rational pairing(const Tensor2& t, const Word& u, const Word& v) {
    return t.coeff(u, v);
}

bool duality_check(const Word& u, const Word& v, const Word& w,
                   const PhiLaw& law, std::span<const Letter> window,
                   ShuffleCache* cache) {
    Rational lhs = phi_shuffle(u, v, law, cache).coeff(w);
    Rational rhs = pairing(delta_phi(w, law, window), u, v);
    return lhs == rhs;
}

Tensor2 tensor_mul_phi(const Tensor2& a, const Tensor2& b, const PhiLaw& law,
                       ShuffleCache* cache) {
    require_same_signature(a.signature(), b.signature(), "tensor phi product");
    Tensor2 out(a.signature());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            NcPoly left = phi_shuffle(ka.first, kb.first, law, cache);
            NcPoly right = phi_shuffle(ka.second, kb.second, law, cache);
            Rational c = ca * cb;
            for (const auto& [lu, lc] : left.terms())
                for (const auto& [rv, rc] : right.terms())
                    out.add_term(lu, rv, c * lc * rc);
        }
    return out;
}

bool bialgebra_check(const Word& w1, const Word& w2, const PhiLaw& law,
                     ShuffleCache* cache) {
    Tensor2 lhs = delta_conc(phi_shuffle(w1, w2, law, cache));
    Tensor2 rhs = tensor_mul_phi(delta_conc(w1), delta_conc(w2), law, cache);
    return lhs == rhs;
}

Rational counit(const NcPoly& p) {
    return p.coeff(Word(p.signature()));
}

} // namespace melange
