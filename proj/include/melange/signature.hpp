#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "melange/rational.hpp"

namespace melange {

/// Index domain of one component of a letter.
///   Weight — integers >= 1            (y_i)
///   Colour — nonzero rationals        (x_xi)
///   Centre — rationals not in N_{>0}  (z_t)
///   Enum   — a finite ordered symbol list, optionally with a partial
///            semigroup table symbol x symbol -> symbol
enum class SlotKind { Weight, Colour, Centre, Enum };

struct SlotSpec {
    SlotKind kind = SlotKind::Weight;
    std::vector<std::string> symbols;            // Enum only; declared order
    std::map<std::pair<int, int>, int> table;    // Enum only; partial product

    bool operator==(const SlotSpec& o) const = default;
};

SlotSpec weight_slot();
SlotSpec colour_slot();
SlotSpec centre_slot();
SlotSpec enum_slot(std::vector<std::string> symbols,
                   std::map<std::pair<int, int>, int> table = {});

/// An ordered tuple of slots. Letters of a word all refer to one
/// signature; values are validated against the slot domains.
class Signature {
public:
    explicit Signature(std::vector<SlotSpec> slots);

    std::size_t arity() const { return slots_.size(); }
    const SlotSpec& slot(std::size_t i) const { return slots_[i]; }
    const std::vector<SlotSpec>& slots() const { return slots_; }

    bool operator==(const Signature& o) const { return slots_ == o.slots_; }

    /// Position of a symbol in an Enum slot, or nullopt.
    std::optional<int> enum_id(std::size_t slot, std::string_view symbol) const;

    /// Throws SemanticError if v lies outside the slot's domain. Enum
    /// values are symbol positions (integers in [0, #symbols)).
    void validate(std::size_t slot, const Rational& v) const;

private:
    std::vector<SlotSpec> slots_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<SlotSpec> slots);

/// Pointer identity first, structural equality as fallback.
bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

/// Throws SemanticError unless same_signature(a, b).
void require_same_signature(const SignaturePtr& a, const SignaturePtr& b,
                            const char* context);

/// One indexed symbol. Immutable; copies share the payload.
class Letter {
public:
    Letter(SignaturePtr sig, std::vector<Rational> values);

    const SignaturePtr& signature() const { return data_->sig; }
    std::size_t arity() const { return data_->values.size(); }
    const Rational& value(std::size_t slot) const { return data_->values[slot]; }
    std::size_t hash() const { return data_->hash; }

    bool operator==(const Letter& o) const;
    bool operator<(const Letter& o) const { return compare(*this, o) < 0; }

    /// Slot-wise lexicographic order; numeric on numeric slots, declared
    /// order (stored as positions) on Enum slots.
    friend int compare(const Letter& a, const Letter& b);

private:
    struct Data {
        SignaturePtr sig;
        std::vector<Rational> values;
        std::size_t hash;
    };
    std::shared_ptr<const Data> data_;
};

/// Convenience constructors for the common single/multi slot shapes.
Letter weight_letter(const SignaturePtr& sig, long k);

} // namespace melange
