#pragma once

#include <map>
#include <span>
#include <vector>

#include "melange/shuffle.hpp"

namespace melange {

/// True iff w is strictly smaller (lexicographically) than every proper
/// nonempty suffix. Throws SemanticError on the empty word.
bool is_lyndon(const Word& w);

/// All Lyndon words over the window up to max_length, in lexicographic
/// order (Duval's generation). The window is sorted and deduplicated
/// internally. Throws SemanticError on an empty window or max_length < 1.
std::vector<Word> lyndon_words(std::span<const Letter> window, int max_length);

/// Finitely supported map Lyndon word -> exponent >= 1, graded by
/// ||alpha|| = sum alpha(l) * |l|.
class MultiIndex {
public:
    MultiIndex() = default;

    /// Throws SemanticError if the key is not Lyndon.
    void set(const Word& lyndon_key, unsigned exponent);

    const std::map<Word, unsigned, WordLexLess>& entries() const {
        return entries_;
    }
    bool empty() const { return entries_.empty(); }
    long norm() const;

    bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }

    /// Grading first, then lexicographic on the
    /// (decreasing-Lyndon-key, exponent) sequence. A fixed total order
    /// for maps and deterministic output.
    friend int compare(const MultiIndex& a, const MultiIndex& b);
    bool operator<(const MultiIndex& o) const { return compare(*this, o) < 0; }

private:
    std::map<Word, unsigned, WordLexLess> entries_;
};

std::string to_text(const MultiIndex& alpha);

/// The multi-index power: the iterated phi-shuffle product of
/// l^{* alpha(l)} over supp(alpha) taken in strictly decreasing key
/// order. Meaningful when the law is associative (caller's obligation;
/// decompose_in_basis checks it).
NcPoly multi_power(const MultiIndex& alpha, const PhiLaw& law,
                   ShuffleCache* cache = nullptr);

/// All alpha over the given Lyndon words with ||alpha|| <= max_norm,
/// in the MultiIndex order.
std::vector<MultiIndex> enumerate_multi_indices(std::span<const Word> lyndon,
                                                long max_norm);

struct BasisDecomposition {
    std::map<MultiIndex, Rational> coefficients;
};

/// Writes P as sum c_alpha * multi_power(alpha) with alpha ranging over
/// multi-indices of Lyndon words of the window, ||alpha|| <= deg(P).
/// Requires the law to be associative and commutative on the window
/// (checked; SemanticError otherwise). Throws SemanticError when P is
/// not representable over the window, InternalError if the multi-power
/// family is linearly dependent (which would falsify the basis theorem).
BasisDecomposition decompose_in_basis(const NcPoly& p, const PhiLaw& law,
                                      std::span<const Letter> window,
                                      ShuffleCache* cache = nullptr);

NcPoly reconstruct(const BasisDecomposition& d, const PhiLaw& law,
                   const SignaturePtr& sig, ShuffleCache* cache = nullptr);

} // namespace melange
