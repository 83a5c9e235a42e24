#include "melange/word.hpp"

#include "melange/errors.hpp"

namespace melange {

Word::Word(SignaturePtr sig, std::vector<Letter> letters)
    : sig_(std::move(sig)), letters_(std::move(letters)) {
    if (!sig_) throw SemanticError("word needs a signature");
    for (const auto& a : letters_)
        require_same_signature(sig_, a.signature(), "word construction");
}

Word Word::prepended(const Letter& a) const {
    require_same_signature(sig_, a.signature(), "prepend");
    std::vector<Letter> ls;
    ls.reserve(letters_.size() + 1);
    ls.push_back(a);
    ls.insert(ls.end(), letters_.begin(), letters_.end());
    Word w(sig_);
    w.letters_ = std::move(ls);
    return w;
}

Word Word::appended(const Letter& a) const {
    require_same_signature(sig_, a.signature(), "append");
    Word w(*this);
    w.letters_.push_back(a);
    return w;
}

Word Word::prefix(std::size_t len) const {
    Word w(sig_);
    w.letters_.assign(letters_.begin(), letters_.begin() + len);
    return w;
}

Word Word::suffix(std::size_t from) const {
    Word w(sig_);
    w.letters_.assign(letters_.begin() + from, letters_.end());
    return w;
}

Word concat(const Word& u, const Word& v) {
    require_same_signature(u.sig_, v.sig_, "concatenation");
    Word w(u.sig_);
    w.letters_.reserve(u.size() + v.size());
    w.letters_ = u.letters_;
    w.letters_.insert(w.letters_.end(), v.letters_.begin(), v.letters_.end());
    return w;
}

bool Word::operator==(const Word& o) const {
    if (letters_.size() != o.letters_.size()) return false;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (!(letters_[i] == o.letters_[i])) return false;
    return true;
}

int lex_compare(const Word& a, const Word& b) {
    std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) {
        int c = compare(a.letters_[i], b.letters_[i]);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

int graded_compare(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return lex_compare(a, b);
}

std::size_t Word::hash() const {
    std::size_t h = 14695981039346656037ull;
    for (const auto& a : letters_) h = (h ^ a.hash()) * 1099511628211ull;
    return h;
}

} // namespace melange
