#include "melange/zeta.hpp"

#include "melange/errors.hpp"
#include "melange/text.hpp"

namespace melange {

void ZetaIndex::validate() const {
    if (xi.size() != s.size() || t.size() != s.size())
        throw SemanticError("zeta index components have mismatched lengths");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1) throw SemanticError("zeta exponent s_i must be >= 1");
        if (xi[i] == 0) throw SemanticError("zeta colour xi_i must be nonzero");
        if (is_positive_integer(t[i]))
            throw SemanticError("zeta centre t_i must not be a positive integer");
    }
}

ZetaIndex ZetaIndex::from_word(const Word& w) {
    const Signature& sig = *w.signature();
    int weight_at = -1, colour_at = -1, centre_at = -1;
    bool shape_ok = sig.slot(0).kind == SlotKind::Weight;
    weight_at = 0;
    if (sig.arity() == 1) {
        // composition only
    } else if (sig.arity() == 2 && sig.slot(1).kind == SlotKind::Colour) {
        colour_at = 1;
    } else if (sig.arity() == 2 && sig.slot(1).kind == SlotKind::Centre) {
        centre_at = 1;
    } else if (sig.arity() == 3 && sig.slot(1).kind == SlotKind::Centre &&
               sig.slot(2).kind == SlotKind::Colour) {
        centre_at = 1;
        colour_at = 2;
    } else {
        shape_ok = false;
    }
    if (!shape_ok)
        throw SemanticError(
            "word is not over a zeta signature ([weight], [weight,colour], "
            "[weight,centre] or [weight,centre,colour])");
    ZetaIndex idx;
    for (const auto& a : w.letters()) {
        idx.s.push_back(a.value(static_cast<std::size_t>(weight_at))
                            .get_num()
                            .get_si());
        idx.xi.push_back(colour_at < 0
                             ? Rational(1)
                             : a.value(static_cast<std::size_t>(colour_at)));
        idx.t.push_back(centre_at < 0
                            ? Rational(0)
                            : a.value(static_cast<std::size_t>(centre_at)));
    }
    idx.validate();
    return idx;
}

namespace {

/// One pass of the strictly-decreasing simplex recursion; returns the
/// column (M^0, ..., M^{n_max}), optionally with colours twisted by
/// power characters.
std::vector<Rational> m_column(long n_max, const ZetaIndex& idx,
                               std::span<const long> exponents) {
    idx.validate();
    if (n_max < 0) throw SemanticError("truncation bound must be >= 0");
    if (!exponents.empty() && exponents.size() != idx.length())
        throw SemanticError("character tuple length mismatch");
    const std::size_t r = idx.length();
    std::vector<Rational> g(static_cast<std::size_t>(n_max) + 1, Rational(1));
    for (std::size_t kk = 0; kk < r; ++kk) {
        std::size_t k = r - 1 - kk;  // innermost position first
        Rational xi = idx.xi[k];
        if (!exponents.empty()) xi = rational_pow(xi, exponents[k]);
        std::vector<Rational> next(static_cast<std::size_t>(n_max) + 1);
        next[0] = Rational(0);
        Rational xi_pow(1);
        for (long m = 1; m <= n_max; ++m) {
            xi_pow *= xi;
            Rational term = xi_pow /
                            rational_pow(Rational(m) - idx.t[k], idx.s[k]);
            next[m] = next[m - 1] + term * g[m - 1];
        }
        g = std::move(next);
    }
    return g;
}

} // namespace

Rational truncated_m(long n, const ZetaIndex& idx) {
    return m_column(n, idx, {}).back();
}

std::vector<Rational> truncated_m_all(long n_max, const ZetaIndex& idx) {
    return m_column(n_max, idx, {});
}

Rational truncated_m_poly(long n, const NcPoly& p) {
    Rational out(0);
    for (const auto& [w, c] : p.terms())
        out += c * truncated_m(n, ZetaIndex::from_word(w));
    return out;
}

Rational truncated_m_char(long n, const ZetaIndex& idx,
                          std::span<const long> exponents) {
    if (exponents.size() != idx.length())
        throw SemanticError("character tuple length mismatch");
    for (long e : exponents)
        if (e < 1) throw SemanticError("character exponents must be >= 1");
    return m_column(n, idx, exponents).back();
}

namespace {

void require_zeta_law(const PhiLaw& law) {
    switch (law.kind()) {
        case PhiLaw::Kind::Stuffle:
        case PhiLaw::Kind::Duffle:
        case PhiLaw::Kind::Huffle:
        case PhiLaw::Kind::Luffle:
            return;
        default:
            throw SemanticError(
                "product identity holds for stuffle, duffle, huffle and "
                "luffle only");
    }
}

} // namespace

ZetaCheckReport verify_product_identity(long n, const Word& left,
                                        const Word& right, const PhiLaw& law,
                                        ShuffleCache* cache) {
    require_zeta_law(law);
    ZetaCheckReport report;
    report.lhs = truncated_m(n, ZetaIndex::from_word(left)) *
                 truncated_m(n, ZetaIndex::from_word(right));
    NcPoly prod = phi_shuffle(left, right, law, cache);
    report.rhs = truncated_m_poly(n, prod);
    report.equal = report.lhs == report.rhs;
    return report;
}

ZetaCheckReport verify_product_identity_char(long n, const Word& left,
                                             const Word& right,
                                             const PhiLaw& law, long exponent,
                                             ShuffleCache* cache) {
    require_zeta_law(law);
    if (exponent < 1) throw SemanticError("character exponents must be >= 1");
    auto twisted = [&](const Word& w) {
        ZetaIndex idx = ZetaIndex::from_word(w);
        std::vector<long> exps(idx.length(), exponent);
        return truncated_m_char(n, idx, exps);
    };
    ZetaCheckReport report;
    report.lhs = twisted(left) * twisted(right);
    NcPoly prod = phi_shuffle(left, right, law, cache);
    report.rhs = Rational(0);
    for (const auto& [w, c] : prod.terms()) report.rhs += c * twisted(w);
    report.equal = report.lhs == report.rhs;
    return report;
}

std::size_t ZetaIndex::hash() const {
    std::size_t h = 14695981039346656037ull;
    for (long v : s) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    for (const auto& v : xi) h = (h ^ hash_value(v)) * 1099511628211ull;
    for (const auto& v : t) h = (h ^ hash_value(v)) * 1099511628211ull;
    return h;
}

namespace {

ZetaIndex drop_first(const ZetaIndex& idx) {
    ZetaIndex tail;
    tail.s.assign(idx.s.begin() + 1, idx.s.end());
    tail.xi.assign(idx.xi.begin() + 1, idx.xi.end());
    tail.t.assign(idx.t.begin() + 1, idx.t.end());
    return tail;
}

/// col[n] for the index (head . tail) from the tail's column.
std::vector<Rational> extend_column(long s, const Rational& xi,
                                    const Rational& t,
                                    const std::vector<Rational>& tail_col) {
    std::vector<Rational> col(tail_col.size());
    col[0] = Rational(0);
    Rational xi_pow(1);
    for (std::size_t n = 1; n < col.size(); ++n) {
        xi_pow *= xi;
        col[n] = col[n - 1] + xi_pow /
                                  rational_pow(Rational(static_cast<long>(n)) - t,
                                               s) *
                                  tail_col[n - 1];
    }
    return col;
}

} // namespace

std::vector<Rational> MCache::build(const ZetaIndex& idx) {
    if (idx.length() == 0)
        return std::vector<Rational>(static_cast<std::size_t>(n_max_) + 1,
                                     Rational(1));
    std::vector<Rational> scratch;
    const std::vector<Rational>* tail_col = column(drop_first(idx), scratch);
    return extend_column(idx.s.front(), idx.xi.front(), idx.t.front(),
                         *tail_col);
}

const std::vector<Rational>* MCache::column(const ZetaIndex& idx,
                                            std::vector<Rational>& scratch) {
    if (idx.length() <= max_len_) {
        {
            std::lock_guard lock(mutex_);
            auto it = cells_.find(idx);
            // unordered_map values are node-based: the reference
            // survives rehashing and later inserts
            if (it != cells_.end()) return &it->second;
        }
        std::vector<Rational> col = build(idx);
        std::lock_guard lock(mutex_);
        return &cells_.emplace(idx, std::move(col)).first->second;
    }
    scratch = build(idx);
    return &scratch;
}

const std::vector<Rational>& MCache::values(const Word& w) {
    ZetaIndex idx = ZetaIndex::from_word(w);
    if (idx.length() > max_len_)
        throw SemanticError("MCache::values needs an index within the cached "
                            "length; use accumulate");
    std::vector<Rational> unused;
    return *column(idx, unused);
}

void MCache::accumulate(const Word& w, const Rational& coeff,
                        std::vector<Rational>& acc) {
    std::vector<Rational> scratch;
    const std::vector<Rational>* col = column(ZetaIndex::from_word(w), scratch);
    for (std::size_t n = 0; n < acc.size(); ++n) acc[n] += coeff * (*col)[n];
}

ZetaCheckReport verify_product_identity_all(MCache& mcache, const Word& left,
                                            const Word& right,
                                            const PhiLaw& law,
                                            ShuffleCache* cache) {
    require_zeta_law(law);
    const long n_max = mcache.n_max();
    std::vector<Rational> lscratch, rscratch;
    std::vector<Rational> lhs(static_cast<std::size_t>(n_max) + 1, Rational(1));
    {
        std::vector<Rational> tmp(lhs.size(), Rational(0));
        mcache.accumulate(left, Rational(1), tmp);
        std::vector<Rational> tmp2(lhs.size(), Rational(0));
        mcache.accumulate(right, Rational(1), tmp2);
        for (std::size_t n = 0; n < lhs.size(); ++n) lhs[n] = tmp[n] * tmp2[n];
    }
    NcPoly prod = phi_shuffle(left, right, law, cache);
    std::vector<Rational> rhs(lhs.size(), Rational(0));
    for (const auto& [w, c] : prod.terms()) mcache.accumulate(w, c, rhs);
    ZetaCheckReport report;
    for (long n = 0; n <= n_max; ++n) {
        if (!(lhs[n] == rhs[n])) {
            report.lhs = lhs[n];
            report.rhs = rhs[n];
            report.equal = false;
            return report;
        }
    }
    report.lhs = lhs.back();
    report.rhs = rhs.back();
    report.equal = true;
    return report;
}

} // namespace melange
