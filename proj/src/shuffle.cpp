#include "melange/shuffle.hpp"

#include "melange/errors.hpp"

namespace melange {

std::optional<NcPoly> ShuffleCache::find(const PhiLaw& law, const Word& u,
                                         const Word& v) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find({law.uid(), u, v});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ShuffleCache::insert(const PhiLaw& law, const Word& u, const Word& v,
                          const NcPoly& p) {
    std::unique_lock lock(mutex_);
    entries_.emplace(Key{law.uid(), u, v}, p);
}

std::size_t ShuffleCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

NcPoly phi_shuffle(const Word& u, const Word& v, const PhiLaw& law,
                   ShuffleCache* cache) {
    require_same_signature(u.signature(), law.signature(), "phi_shuffle");
    require_same_signature(v.signature(), law.signature(), "phi_shuffle");
    if (cache) {
        if (auto hit = cache->find(law, u, v)) return *hit;
    }
    const std::size_t n = u.size();
    const std::size_t m = v.size();

    // table of suffix-pair products; cell(i,j) = u[i:] * v[j:]
    std::vector<std::vector<NcPoly>> cell(
        n + 1, std::vector<NcPoly>(m + 1, NcPoly(u.signature())));
    std::vector<Word> su, sv;
    su.reserve(n + 1);
    sv.reserve(m + 1);
    for (std::size_t i = 0; i <= n; ++i) su.push_back(u.suffix(i));
    for (std::size_t j = 0; j <= m; ++j) sv.push_back(v.suffix(j));

    for (std::size_t ii = 0; ii <= n; ++ii) {
        std::size_t i = n - ii;
        for (std::size_t jj = 0; jj <= m; ++jj) {
            std::size_t j = m - jj;
            if (i == n) {
                cell[i][j] = NcPoly::monomial(sv[j]);
                continue;
            }
            if (j == m) {
                cell[i][j] = NcPoly::monomial(su[i]);
                continue;
            }
            if (cache) {
                if (auto hit = cache->find(law, su[i], sv[j])) {
                    cell[i][j] = std::move(*hit);
                    continue;
                }
            }
            NcPoly p = prepend(u[i], cell[i + 1][j]);
            p += prepend(v[j], cell[i][j + 1]);
            const NcPoly& factor = law.phi(u[i], v[j]);
            if (!factor.is_zero()) p += conc(factor, cell[i + 1][j + 1]);
            if (cache) cache->insert(law, su[i], sv[j], p);
            cell[i][j] = std::move(p);
        }
    }
    return std::move(cell[0][0]);
}

NcPoly phi_shuffle_poly(const NcPoly& p, const NcPoly& q, const PhiLaw& law,
                        ShuffleCache* cache) {
    require_same_signature(p.signature(), law.signature(), "phi_shuffle_poly");
    require_same_signature(q.signature(), law.signature(), "phi_shuffle_poly");
    NcPoly out(law.signature());
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) {
            NcPoly prod = phi_shuffle(u, v, law, cache);
            prod *= cu * cv;
            out += prod;
        }
    return out;
}

PartialFractionResult partial_fraction(int s, int r, const Rational& a,
                                       const Rational& b) {
    if (s < 1 || r < 1)
        throw SemanticError("partial_fraction needs s, r >= 1");
    if (a == b)
        throw SemanticError("partial_fraction needs distinct poles");
    PartialFractionResult out;
    out.a_coeffs.reserve(s);
    out.b_coeffs.reserve(r);
    const Rational ab = a - b;
    const Rational ba = b - a;
    for (int k = 1; k <= s; ++k) {
        Rational c = binomial(s + r - k - 1, r - 1) /
                     rational_pow(ab, s + r - k);
        if ((s - k) % 2 != 0) c = -c;
        out.a_coeffs.push_back(std::move(c));
    }
    for (int k = 1; k <= r; ++k) {
        Rational c = binomial(s + r - k - 1, s - 1) /
                     rational_pow(ba, s + r - k);
        if ((r - k) % 2 != 0) c = -c;
        out.b_coeffs.push_back(std::move(c));
    }
    return out;
}

} // namespace melange
