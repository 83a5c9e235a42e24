#include "melange/signature.hpp"

#include "melange/errors.hpp"

namespace melange {

SlotSpec weight_slot() { return SlotSpec{SlotKind::Weight, {}, {}}; }
SlotSpec colour_slot() { return SlotSpec{SlotKind::Colour, {}, {}}; }
SlotSpec centre_slot() { return SlotSpec{SlotKind::Centre, {}, {}}; }

SlotSpec enum_slot(std::vector<std::string> symbols,
                   std::map<std::pair<int, int>, int> table) {
    return SlotSpec{SlotKind::Enum, std::move(symbols), std::move(table)};
}

Signature::Signature(std::vector<SlotSpec> slots) : slots_(std::move(slots)) {
    if (slots_.empty())
        throw SemanticError("signature needs at least one slot");
    for (const auto& s : slots_) {
        if (s.kind != SlotKind::Enum) {
            if (!s.symbols.empty() || !s.table.empty())
                throw SemanticError("symbols/table only allowed on an Enum slot");
            continue;
        }
        if (s.symbols.empty())
            throw SemanticError("Enum slot needs at least one symbol");
        for (std::size_t i = 0; i < s.symbols.size(); ++i)
            for (std::size_t j = i + 1; j < s.symbols.size(); ++j)
                if (s.symbols[i] == s.symbols[j])
                    throw SemanticError("duplicate Enum symbol '" + s.symbols[i] +
                                        "'");
        int n = static_cast<int>(s.symbols.size());
        for (const auto& [key, val] : s.table) {
            if (key.first < 0 || key.first >= n || key.second < 0 ||
                key.second >= n || val < 0 || val >= n)
                throw SemanticError("Enum table entry out of range");
        }
    }
}

std::optional<int> Signature::enum_id(std::size_t slot,
                                      std::string_view symbol) const {
    const auto& s = slots_[slot];
    for (std::size_t i = 0; i < s.symbols.size(); ++i)
        if (s.symbols[i] == symbol) return static_cast<int>(i);
    return std::nullopt;
}

void Signature::validate(std::size_t slot, const Rational& v) const {
    const auto& s = slots_[slot];
    switch (s.kind) {
        case SlotKind::Weight:
            if (!is_positive_integer(v))
                throw SemanticError("weight index must be an integer >= 1, got " +
                                    v.get_str());
            break;
        case SlotKind::Colour:
            if (v == 0) throw SemanticError("colour index must be nonzero");
            break;
        case SlotKind::Centre:
            if (is_positive_integer(v))
                throw SemanticError("centre index must not be a positive integer, got " +
                                    v.get_str());
            break;
        case SlotKind::Enum: {
            if (v.get_den() != 1 || v < 0 ||
                v >= static_cast<long>(s.symbols.size()))
                throw SemanticError("enum value out of range");
            break;
        }
    }
}

SignaturePtr make_signature(std::vector<SlotSpec> slots) {
    return std::make_shared<const Signature>(std::move(slots));
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_signature(const SignaturePtr& a, const SignaturePtr& b,
                            const char* context) {
    if (!same_signature(a, b))
        throw SemanticError(std::string("signature mismatch in ") + context);
}

Letter::Letter(SignaturePtr sig, std::vector<Rational> values) {
    if (!sig) throw SemanticError("letter needs a signature");
    if (values.size() != sig->arity())
        throw SemanticError("letter has wrong number of components");
    for (auto& v : values) v.canonicalize();
    for (std::size_t i = 0; i < values.size(); ++i) sig->validate(i, values[i]);
    std::size_t h = 1469598103934665603ull;
    for (const auto& v : values) h = (h ^ hash_value(v)) * 1099511628211ull;
    data_ = std::make_shared<const Data>(Data{std::move(sig), std::move(values), h});
}

bool Letter::operator==(const Letter& o) const {
    if (data_ == o.data_) return true;
    if (data_->hash != o.data_->hash) return false;
    return compare(*this, o) == 0;
}

int compare(const Letter& a, const Letter& b) {
    if (a.data_ == b.data_) return 0;
    const auto& av = a.data_->values;
    const auto& bv = b.data_->values;
    std::size_t n = av.size() < bv.size() ? av.size() : bv.size();
    for (std::size_t i = 0; i < n; ++i) {
        int c = mpq_cmp(av[i].get_mpq_t(), bv[i].get_mpq_t());
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (av.size() != bv.size()) return av.size() < bv.size() ? -1 : 1;
    return 0;
}

Letter weight_letter(const SignaturePtr& sig, long k) {
    return Letter(sig, {Rational(k)});
}

} // namespace melange
