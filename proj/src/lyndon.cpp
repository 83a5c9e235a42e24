#include "melange/lyndon.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "melange/errors.hpp"
#include "melange/text.hpp"

namespace melange {

bool is_lyndon(const Word& w) {
    if (w.empty()) throw SemanticError("is_lyndon on the empty word");
    for (std::size_t i = 1; i < w.size(); ++i)
        if (lex_compare(w, w.suffix(i)) >= 0) return false;
    return true;
}

std::vector<Word> lyndon_words(std::span<const Letter> window,
                               int max_length) {
    if (window.empty()) throw SemanticError("lyndon_words needs letters");
    if (max_length < 1) throw SemanticError("lyndon_words needs max_length >= 1");
    std::vector<Letter> alphabet(window.begin(), window.end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end(),
                               [](const Letter& a, const Letter& b) {
                                   return a == b;
                               }),
                   alphabet.end());
    const SignaturePtr& sig = alphabet.front().signature();
    const int k = static_cast<int>(alphabet.size());

    // Duval's generation: emits every Lyndon word of length <= max_length
    // in lexicographic order
    std::vector<Word> out;
    std::vector<int> t{-1};
    while (!t.empty()) {
        ++t.back();
        std::vector<Letter> letters;
        letters.reserve(t.size());
        for (int ix : t) letters.push_back(alphabet[ix]);
        out.emplace_back(sig, std::move(letters));
        std::size_t m = t.size();
        while (t.size() < static_cast<std::size_t>(max_length))
            t.push_back(t[t.size() - m]);
        while (!t.empty() && t.back() == k - 1) t.pop_back();
    }
    return out;
}

void MultiIndex::set(const Word& lyndon_key, unsigned exponent) {
    if (!is_lyndon(lyndon_key))
        throw SemanticError("multi-index key '" + to_text(lyndon_key) +
                            "' is not a Lyndon word");
    if (exponent == 0) return;  // padding with zero exponents is a no-op
    entries_[lyndon_key] = exponent;
}

long MultiIndex::norm() const {
    long n = 0;
    for (const auto& [w, e] : entries_)
        n += static_cast<long>(w.size()) * static_cast<long>(e);
    return n;
}

int compare(const MultiIndex& a, const MultiIndex& b) {
    long na = a.norm(), nb = b.norm();
    if (na != nb) return na < nb ? -1 : 1;
    // decreasing-key sequences, compared lexicographically
    auto ia = a.entries_.rbegin();
    auto ib = b.entries_.rbegin();
    for (; ia != a.entries_.rend() && ib != b.entries_.rend(); ++ia, ++ib) {
        if (int c = lex_compare(ia->first, ib->first); c != 0) return c;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.entries_.rend()) return 1;
    if (ib != b.entries_.rend()) return -1;
    return 0;
}

std::string to_text(const MultiIndex& alpha) {
    if (alpha.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto it = alpha.entries().rbegin(); it != alpha.entries().rend();
         ++it) {
        if (!first) os << '*';
        first = false;
        os << '(' << to_text(it->first) << ")^" << it->second;
    }
    return os.str();
}

NcPoly multi_power(const MultiIndex& alpha, const PhiLaw& law,
                   ShuffleCache* cache) {
    NcPoly acc = NcPoly::unit(law.signature());
    for (auto it = alpha.entries().rbegin(); it != alpha.entries().rend();
         ++it) {
        require_same_signature(law.signature(), it->first.signature(),
                               "multi_power");
        NcPoly factor = NcPoly::monomial(it->first);
        for (unsigned e = 0; e < it->second; ++e)
            acc = phi_shuffle_poly(acc, factor, law, cache);
    }
    return acc;
}

std::vector<MultiIndex> enumerate_multi_indices(std::span<const Word> lyndon,
                                                long max_norm) {
    std::vector<MultiIndex> out;
    // iterative enumeration over exponent choices per Lyndon word
    struct Frame {
        std::size_t index;
        long budget;
        MultiIndex partial;
    };
    std::vector<Frame> stack;
    stack.push_back({0, max_norm, MultiIndex{}});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.index == lyndon.size()) {
            out.push_back(std::move(f.partial));
            continue;
        }
        long len = static_cast<long>(lyndon[f.index].size());
        for (long e = 0; e * len <= f.budget; ++e) {
            Frame next{f.index + 1, f.budget - e * len, f.partial};
            if (e > 0) next.partial.set(lyndon[f.index], static_cast<unsigned>(e));
            stack.push_back(std::move(next));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BasisDecomposition decompose_in_basis(const NcPoly& p, const PhiLaw& law,
                                      std::span<const Letter> window,
                                      ShuffleCache* cache) {
    require_same_signature(p.signature(), law.signature(), "decompose_in_basis");
    BasisDecomposition result;
    if (p.is_zero()) return result;

    auto comm = is_commutative_on(law, window);
    if (!comm.commutative)
        throw SemanticError("law '" + law.name() +
                            "' is not commutative on the window");
    auto assoc = is_associative_on(law, window);
    if (assoc.verdict != AssocVerdict::Yes)
        throw SemanticError("law '" + law.name() +
                            "' is not associative on the window");

    const long max_norm = p.deg();
    std::vector<Word> lyndon;
    if (max_norm >= 1) lyndon = lyndon_words(window, static_cast<int>(max_norm));
    std::vector<MultiIndex> indices = enumerate_multi_indices(lyndon, max_norm);

    // columns: multi-powers in index order; rows: every word seen
    std::vector<NcPoly> powers;
    powers.reserve(indices.size());
    std::map<Word, std::size_t> row_of;
    for (const auto& [w, c] : p.terms()) row_of.emplace(w, 0);
    for (const auto& alpha : indices) {
        powers.push_back(multi_power(alpha, law, cache));
        for (const auto& [w, c] : powers.back().terms()) row_of.emplace(w, 0);
    }
    std::size_t rows = 0;
    for (auto& [w, idx] : row_of) idx = rows++;
    const std::size_t cols = indices.size();

    std::vector<std::vector<Rational>> m(rows,
                                         std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [w, c] : powers[j].terms())
            m[row_of[w]][j] = c;
    for (const auto& [w, c] : p.terms()) m[row_of[w]][cols] = c;

    // exact Gauss-Jordan over Q
    std::vector<std::size_t> pivot_col_of_row(rows, cols + 1);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols && rank < rows; ++j) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][j] == 0) ++piv;
        if (piv == rows) {
            throw InternalError(
                "multi-power family is linearly dependent; the basis theorem "
                "rules this out");
        }
        std::swap(m[piv], m[rank]);
        Rational inv = Rational(1) / m[rank][j];
        for (std::size_t t = j; t <= cols; ++t) m[rank][t] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][j] == 0) continue;
            Rational f = m[r][j];
            for (std::size_t t = j; t <= cols; ++t) m[r][t] -= f * m[rank][t];
        }
        pivot_col_of_row[rank] = j;
        ++rank;
    }
    if (rank < cols)
        throw InternalError(
            "multi-power family is linearly dependent; the basis theorem "
            "rules this out");
    for (std::size_t r = rank; r < rows; ++r)
        if (m[r][cols] != 0)
            throw SemanticError(
                "polynomial is not representable over this window (enlarge "
                "the window)");

    for (std::size_t r = 0; r < rank; ++r) {
        const Rational& c = m[r][cols];
        if (c != 0) result.coefficients.emplace(indices[pivot_col_of_row[r]], c);
    }
    return result;
}

NcPoly reconstruct(const BasisDecomposition& d, const PhiLaw& law,
                   const SignaturePtr& sig, ShuffleCache* cache) {
    NcPoly out(sig);
    for (const auto& [alpha, c] : d.coefficients) {
        NcPoly term = multi_power(alpha, law, cache);
        term *= c;
        out += term;
    }
    return out;
}

} // namespace melange
