#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "melange/poly.hpp"
#include "melange/tensor.hpp"

namespace melange {

// Word grammar (UTF-8):
//   letter   = '(' component (',' component)* ')' | component   (single slot)
//   component: Weight 'y'K (K >= 1), Colour 'x[p/q]', Centre 'z[p/q]',
//              Enum bare symbol
//   word     = letter ('.' letter)* ; the empty string and "1" denote the
//              empty word
//   poly     = term (' + ' term)* ; term = [rational ' '] word | rational
//
// Printing is canonical: terms ordered by length descending then
// lexicographic ascending; letters per slot as above.

Letter parse_letter(std::string_view text, const SignaturePtr& sig);
Word parse_word(std::string_view text, const SignaturePtr& sig);
NcPoly parse_poly(std::string_view text, const SignaturePtr& sig);

/// Splits a comma-separated letter list, respecting () and [] nesting.
std::vector<Letter> parse_letter_list(std::string_view text,
                                      const SignaturePtr& sig);

enum class PolyStyle {
    Plain,          // unit coefficients omitted: "y1.y2 + 2 y2"
    ExplicitCoeff,  // every coefficient printed: "1 y1.y2 + 2 y2"
};

std::string to_text(const Letter& a);
std::string to_text(const Word& w);  // empty word prints as "1"

/// Undotted rendering ("aab") for words over a single Enum slot whose
/// symbols are all one character; falls back to to_text otherwise. The
/// parser accepts this form for such signatures.
std::string to_text_compact(const Word& w);
std::string to_text(const NcPoly& p, PolyStyle style = PolyStyle::Plain);
std::string to_text(const Tensor2& t);

/// Terms in canonical order (length desc, lex asc), one (coeff, word) each.
std::vector<std::pair<Rational, Word>> canonical_terms(const NcPoly& p);
std::vector<std::pair<Rational, std::pair<Word, Word>>> canonical_terms(
    const Tensor2& t);

/// Parses a signature description: comma-separated slots out of
/// "weight", "colour", "centre", "enum(a<b<c)".
SignaturePtr parse_signature(std::string_view text);

/// Infers a signature from letter tokens found in the given texts:
/// y<k>/x[..]/z[..] fix slot kinds; otherwise bare symbols form one Enum
/// slot ordered lexicographically.
SignaturePtr infer_signature(const std::vector<std::string>& texts);

} // namespace melange
