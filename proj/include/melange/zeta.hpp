#pragma once

#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "melange/shuffle.hpp"

namespace melange {

/// Index of a truncated polyzeta sum: composition s, colours xi, centres
/// t, all of one length r >= 0. Identified with words over the matching
/// signature ([Weight], [Weight,Colour], [Weight,Centre] or
/// [Weight,Centre,Colour]); missing components default to xi = 1, t = 0.
struct ZetaIndex {
    std::vector<long> s;
    std::vector<Rational> xi;
    std::vector<Rational> t;

    std::size_t length() const { return s.size(); }

    /// Throws SemanticError on length mismatch, s_i < 1, xi_i = 0 or
    /// t_i a positive integer.
    void validate() const;

    static ZetaIndex from_word(const Word& w);

    bool operator==(const ZetaIndex& o) const {
        return s == o.s && xi == o.xi && t == o.t;
    }
    std::size_t hash() const;
};

struct ZetaIndexHash {
    std::size_t operator()(const ZetaIndex& idx) const { return idx.hash(); }
};

/// M^N = sum over N >= n_1 > ... > n_r > 0 of
/// prod xi_i^{n_i} / (n_i - t_i)^{s_i}; M^N of the empty index is 1.
Rational truncated_m(long n, const ZetaIndex& idx);

/// M^n for every n in 0..n_max (one pass; entry [n] is M^n).
std::vector<Rational> truncated_m_all(long n_max, const ZetaIndex& idx);

/// Linear extension: sum coeff(P, w) * M^N(index of w).
Rational truncated_m_poly(long n, const NcPoly& p);

/// Character-twisted sum: xi_i replaced by xi_i^{exponents[i]}.
Rational truncated_m_char(long n, const ZetaIndex& idx,
                          std::span<const long> exponents);

struct ZetaCheckReport {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

/// Checks M^N(left) * M^N(right) == M^N(left *_phi right) exactly.
/// The law must be one of stuffle, duffle, huffle, luffle.
ZetaCheckReport verify_product_identity(long n, const Word& left,
                                        const Word& right, const PhiLaw& law,
                                        ShuffleCache* cache = nullptr);

/// Same identity with every colour twisted by the power character
/// xi -> xi^exponent on both factors and on the product.
ZetaCheckReport verify_product_identity_char(long n, const Word& left,
                                             const Word& right,
                                             const PhiLaw& law, long exponent,
                                             ShuffleCache* cache = nullptr);

/// Index-keyed cache of M^n columns (n = 0..n_max), shared across
/// verifications; concurrent-safe, results are independent of hits.
/// Columns are cached for indices up to max_cached_length; longer ones
/// are chained from their cached suffix in O(n_max) per extra letter,
/// which keeps memory bounded on large verification grids.
class MCache {
public:
    explicit MCache(long n_max, std::size_t max_cached_length = 3)
        : n_max_(n_max), max_len_(max_cached_length) {}

    long n_max() const { return n_max_; }

    /// M^n for all n in 0..n_max of the index of w; the reference stays
    /// valid for the cache's lifetime. Requires an index length within
    /// max_cached_length.
    const std::vector<Rational>& values(const Word& w);

    /// acc[n] += coeff * M^n(index of w) for all n; works for any length.
    void accumulate(const Word& w, const Rational& coeff,
                    std::vector<Rational>& acc);

private:
    const std::vector<Rational>* column(const ZetaIndex& idx,
                                        std::vector<Rational>& scratch);
    std::vector<Rational> build(const ZetaIndex& idx);

    long n_max_;
    std::size_t max_len_;
    std::mutex mutex_;
    std::unordered_map<ZetaIndex, std::vector<Rational>, ZetaIndexHash> cells_;
};

/// verify_product_identity over all n in 0..cache.n_max() at once,
/// reusing cached M columns and the shuffle cache. Returns the first
/// failing report, or an equal-report for n = n_max.
ZetaCheckReport verify_product_identity_all(MCache& mcache, const Word& left,
                                            const Word& right,
                                            const PhiLaw& law,
                                            ShuffleCache* cache = nullptr);

} // namespace melange
