#pragma once

#include <vector>

#include "melange/signature.hpp"

namespace melange {

/// A finite (possibly empty) sequence of letters over one signature.
/// The empty word is the unit of the concatenation monoid.
class Word {
public:
    explicit Word(SignaturePtr sig) : sig_(std::move(sig)) {}
    Word(SignaturePtr sig, std::vector<Letter> letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }
    const SignaturePtr& signature() const { return sig_; }

    Word prepended(const Letter& a) const;
    Word appended(const Letter& a) const;
    Word prefix(std::size_t len) const;
    Word suffix(std::size_t from) const;
    friend Word concat(const Word& u, const Word& v);

    bool operator==(const Word& o) const;
    /// Graded order: length first, then letter-wise. Used for term maps.
    bool operator<(const Word& o) const { return graded_compare(*this, o) < 0; }

    /// Plain lexicographic order; a proper prefix precedes its extensions.
    /// This is the order Lyndon words are defined against.
    friend int lex_compare(const Word& a, const Word& b);
    friend int graded_compare(const Word& a, const Word& b);

    std::size_t hash() const;

private:
    SignaturePtr sig_;
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

struct WordLexLess {
    bool operator()(const Word& a, const Word& b) const {
        return lex_compare(a, b) < 0;
    }
};

} // namespace melange
