#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "melange/phi_law.hpp"

namespace melange {

/// Optional cross-call memo for phi-shuffle products, keyed on
/// (law identity, u, v). Safe for concurrent readers and writers;
/// inserts are idempotent (the product of two words is unique), so the
/// cache can never change results.
class ShuffleCache {
public:
    std::optional<NcPoly> find(const PhiLaw& law, const Word& u,
                               const Word& v) const;
    void insert(const PhiLaw& law, const Word& u, const Word& v,
                const NcPoly& p);
    std::size_t size() const;

private:
    using Key = std::tuple<std::uint64_t, Word, Word>;
    mutable std::shared_mutex mutex_;
    std::map<Key, NcPoly> entries_;
};

/// The phi-shuffle product of two words: the unique bilinear product
/// with the empty word as unit satisfying
///   au * bv = a(u * bv) + b(au * v) + phi(a,b)(u * v).
/// Implemented as an iterative suffix-pair table, so long words do not
/// recurse deeply.
NcPoly phi_shuffle(const Word& u, const Word& v, const PhiLaw& law,
                   ShuffleCache* cache = nullptr);

/// Bilinear extension to polynomials.
NcPoly phi_shuffle_poly(const NcPoly& p, const NcPoly& q, const PhiLaw& law,
                        ShuffleCache* cache = nullptr);

/// Coefficients of 1/((x-a)^s (x-b)^r) over the poles a and b:
///   a_coeffs[k-1] = C(s+r-k-1, r-1) (-1)^(s-k) / (a-b)^(s+r-k),  k = 1..s
///   b_coeffs[k-1] = C(s+r-k-1, s-1) (-1)^(r-k) / (b-a)^(s+r-k),  k = 1..r
struct PartialFractionResult {
    std::vector<Rational> a_coeffs;
    std::vector<Rational> b_coeffs;
};

/// Throws SemanticError when a == b (the equal-pole case has no
/// two-pole split) or s < 1 or r < 1.
PartialFractionResult partial_fraction(int s, int r, const Rational& a,
                                       const Rational& b);

} // namespace melange
