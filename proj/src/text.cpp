#include "melange/text.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "melange/errors.hpp"

namespace melange {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

/// Splits on a delimiter at zero () / [] nesting depth.
std::vector<std::string> split_top_level(std::string_view text, char delim) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == delim && depth == 0) {
            parts.emplace_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.emplace_back(std::move(cur));
    return parts;
}

bool is_weight_token(std::string_view t) {
    if (t.size() < 2 || t[0] != 'y') return false;
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

bool is_bracket_token(std::string_view t, char head) {
    return t.size() >= 3 && t[0] == head && t[1] == '[' && t.back() == ']';
}

bool is_symbol_token(std::string_view t) {
    if (t.empty() || !std::isalpha(static_cast<unsigned char>(t[0])))
        return false;
    for (char c : t)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return !is_weight_token(t);
}

Rational parse_component(std::string_view token, const SlotSpec& spec,
                         const Signature& sig, std::size_t slot,
                         std::size_t pos) {
    switch (spec.kind) {
        case SlotKind::Weight: {
            if (!is_weight_token(token))
                throw ParseError("expected weight component 'yK', got '" +
                                     std::string(token) + "'",
                                 pos);
            return parse_rational(token.substr(1));
        }
        case SlotKind::Colour: {
            if (!is_bracket_token(token, 'x'))
                throw ParseError("expected colour component 'x[p/q]', got '" +
                                     std::string(token) + "'",
                                 pos);
            return parse_rational(token.substr(2, token.size() - 3));
        }
        case SlotKind::Centre: {
            if (!is_bracket_token(token, 'z'))
                throw ParseError("expected centre component 'z[p/q]', got '" +
                                     std::string(token) + "'",
                                 pos);
            return parse_rational(token.substr(2, token.size() - 3));
        }
        case SlotKind::Enum: {
            auto id = sig.enum_id(slot, token);
            if (!id)
                throw ParseError("unknown symbol '" + std::string(token) + "'",
                                 pos);
            return Rational(*id);
        }
    }
    throw InternalError("unreachable slot kind");
}

Letter parse_letter_at(std::string_view text, const SignaturePtr& sig,
                       std::size_t pos) {
    std::vector<std::string> components;
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')')
            throw ParseError("unterminated letter tuple", pos + text.size());
        components =
            split_top_level(text.substr(1, text.size() - 2), ',');
    } else {
        components.emplace_back(text);
    }
    if (components.size() != sig->arity())
        throw ParseError("letter has " + std::to_string(components.size()) +
                             " component(s), signature expects " +
                             std::to_string(sig->arity()),
                         pos);
    std::vector<Rational> values;
    values.reserve(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].empty()) throw ParseError("empty letter component", pos);
        values.push_back(
            parse_component(components[i], sig->slot(i), *sig, i, pos));
    }
    try {
        return Letter(sig, std::move(values));
    } catch (const SemanticError& e) {
        // index-domain violations surface as parse errors with a position
        throw ParseError(e.what(), pos);
    }
}

} // namespace

Letter parse_letter(std::string_view text, const SignaturePtr& sig) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty letter", 0);
    return parse_letter_at(s, sig, 0);
}

namespace {

/// Single Enum slot with only one-character symbols.
bool compact_enum_signature(const Signature& sig) {
    if (sig.arity() != 1 || sig.slot(0).kind != SlotKind::Enum) return false;
    for (const auto& s : sig.slot(0).symbols)
        if (s.size() != 1) return false;
    return true;
}

} // namespace

Word parse_word(std::string_view text, const SignaturePtr& sig) {
    std::string s = strip_spaces(text);
    if (s.empty() || s == "1") return Word(sig);
    std::vector<Letter> letters;
    std::size_t pos = 0;
    for (const auto& tok : split_top_level(s, '.')) {
        if (tok.empty()) throw ParseError("empty letter in word", pos);
        // undotted run of one-character symbols, e.g. "aab"
        if (tok.size() > 1 && compact_enum_signature(*sig) &&
            !sig->enum_id(0, tok)) {
            bool all_symbols = true;
            for (char c : tok)
                if (!sig->enum_id(0, std::string_view(&c, 1))) {
                    all_symbols = false;
                    break;
                }
            if (all_symbols) {
                for (char c : tok)
                    letters.push_back(
                        parse_letter_at(std::string_view(&c, 1), sig, pos));
                pos += tok.size() + 1;
                continue;
            }
        }
        letters.push_back(parse_letter_at(tok, sig, pos));
        pos += tok.size() + 1;
    }
    return Word(sig, std::move(letters));
}

NcPoly parse_poly(std::string_view text, const SignaturePtr& sig) {
    NcPoly out(sig);
    std::string_view body = trim(text);
    if (body.empty()) return out;  // zero polynomial
    std::size_t pos = 0;
    for (const auto& raw : split_top_level(body, '+')) {
        std::string_view term = trim(raw);
        if (term.empty()) throw ParseError("empty term", pos);
        Rational coeff(1);
        std::string_view word_text = term;
        auto space = term.find(' ');
        std::string_view head = space == std::string_view::npos
                                    ? term
                                    : trim(term.substr(0, space));
        bool head_is_rational = !head.empty() &&
            (std::isdigit(static_cast<unsigned char>(head[0])) ||
             ((head[0] == '-' || head[0] == '+') && head.size() > 1));
        if (head_is_rational) {
            coeff = parse_rational(head);
            word_text = space == std::string_view::npos
                            ? std::string_view{}
                            : trim(term.substr(space + 1));
        }
        out.add_term(parse_word(word_text, sig), coeff);
        pos += raw.size() + 1;
    }
    return out;
}

std::vector<Letter> parse_letter_list(std::string_view text,
                                      const SignaturePtr& sig) {
    std::string s = strip_spaces(text);
    if (s.empty()) return {};
    std::vector<Letter> out;
    for (const auto& tok : split_top_level(s, ','))
        out.push_back(parse_letter_at(tok, sig, 0));
    return out;
}

std::string to_text(const Letter& a) {
    const auto& sig = *a.signature();
    std::ostringstream os;
    if (sig.arity() > 1) os << '(';
    for (std::size_t i = 0; i < sig.arity(); ++i) {
        if (i > 0) os << ',';
        const Rational& v = a.value(i);
        switch (sig.slot(i).kind) {
            case SlotKind::Weight: os << 'y' << v.get_num().get_str(); break;
            case SlotKind::Colour: os << "x[" << v.get_str() << ']'; break;
            case SlotKind::Centre: os << "z[" << v.get_str() << ']'; break;
            case SlotKind::Enum:
                os << sig.slot(i).symbols[v.get_num().get_si()];
                break;
        }
    }
    if (sig.arity() > 1) os << ')';
    return os.str();
}

std::string to_text(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) os << '.';
        os << to_text(w[i]);
    }
    return os.str();
}

std::string to_text_compact(const Word& w) {
    if (w.empty()) return "1";
    if (!compact_enum_signature(*w.signature())) return to_text(w);
    std::string out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out += w.signature()->slot(0).symbols[w[i].value(0).get_num().get_si()];
    return out;
}

std::vector<std::pair<Rational, Word>> canonical_terms(const NcPoly& p) {
    std::vector<std::pair<Rational, Word>> terms;
    terms.reserve(p.term_count());
    for (const auto& [w, c] : p.terms()) terms.emplace_back(c, w);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.second.size() != b.second.size())
            return a.second.size() > b.second.size();
        return lex_compare(a.second, b.second) < 0;
    });
    return terms;
}

std::vector<std::pair<Rational, std::pair<Word, Word>>> canonical_terms(
    const Tensor2& t) {
    std::vector<std::pair<Rational, std::pair<Word, Word>>> terms;
    terms.reserve(t.terms().size());
    for (const auto& [k, c] : t.terms()) terms.emplace_back(c, k);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        std::size_t la = a.second.first.size() + a.second.second.size();
        std::size_t lb = b.second.first.size() + b.second.second.size();
        if (la != lb) return la > lb;
        if (a.second.first.size() != b.second.first.size())
            return a.second.first.size() > b.second.first.size();
        if (int c = lex_compare(a.second.first, b.second.first); c != 0)
            return c < 0;
        return lex_compare(a.second.second, b.second.second) < 0;
    });
    return terms;
}

std::string to_text(const NcPoly& p, PolyStyle style) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, w] : canonical_terms(p)) {
        if (!first) os << " + ";
        first = false;
        if (style == PolyStyle::ExplicitCoeff) {
            os << c.get_str() << ' ' << to_text(w);
        } else if (w.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << to_text(w);
        } else {
            os << c.get_str() << ' ' << to_text(w);
        }
    }
    return os.str();
}

std::string to_text(const Tensor2& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, uv] : canonical_terms(t)) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c.get_str() << ' ';
        os << to_text(uv.first) << " (x) " << to_text(uv.second);
    }
    return os.str();
}

SignaturePtr parse_signature(std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty signature", 0);
    std::vector<SlotSpec> slots;
    for (const auto& tok : split_top_level(s, ',')) {
        if (tok == "weight") {
            slots.push_back(weight_slot());
        } else if (tok == "colour" || tok == "color") {
            slots.push_back(colour_slot());
        } else if (tok == "centre" || tok == "center") {
            slots.push_back(centre_slot());
        } else if (tok.starts_with("enum(") && tok.ends_with(")")) {
            std::vector<std::string> symbols;
            for (const auto& sym :
                 split_top_level(tok.substr(5, tok.size() - 6), '<')) {
                if (!is_symbol_token(sym))
                    throw ParseError("bad enum symbol '" + sym + "'", 0);
                symbols.push_back(sym);
            }
            slots.push_back(enum_slot(std::move(symbols)));
        } else {
            throw ParseError("unknown slot '" + tok + "'", 0);
        }
    }
    return make_signature(std::move(slots));
}

SignaturePtr infer_signature(const std::vector<std::string>& texts) {
    std::vector<std::vector<std::string>> letters;
    std::vector<std::string> chunks;
    for (const auto& t : texts) {
        // letter-list arguments separate entries with top-level commas,
        // which the word grammar itself never produces
        for (const auto& chunk : split_top_level(strip_spaces(t), ','))
            chunks.push_back(chunk);
    }
    for (const auto& s : chunks) {
        if (s.empty()) continue;
        for (const auto& term : split_top_level(s, '+')) {
            if (term.empty() || term == "0" || term == "1") continue;
            for (const auto& tok : split_top_level(term, '.')) {
                if (tok.empty()) continue;
                // skip a leading coefficient glued by strip (terms were
                // "c w"; after strip the coefficient fuses with the word,
                // so inference callers pass plain words, not polys)
                if (tok.front() == '(') {
                    if (tok.back() != ')')
                        throw ParseError("unterminated letter tuple", 0);
                    letters.push_back(
                        split_top_level(tok.substr(1, tok.size() - 2), ','));
                } else {
                    letters.push_back({tok});
                }
            }
        }
    }
    if (letters.empty())
        throw SemanticError("cannot infer a signature from empty input");
    std::size_t arity = letters.front().size();
    std::vector<SlotSpec> slots;
    for (std::size_t i = 0; i < arity; ++i) slots.push_back(weight_slot());
    std::vector<std::set<std::string>> symbols(arity);
    std::vector<SlotKind> kinds(arity, SlotKind::Weight);
    std::vector<bool> seen(arity, false);
    for (const auto& comps : letters) {
        if (comps.size() != arity)
            throw SemanticError("inconsistent letter arity in input");
        for (std::size_t i = 0; i < arity; ++i) {
            SlotKind k;
            if (is_weight_token(comps[i])) k = SlotKind::Weight;
            else if (is_bracket_token(comps[i], 'x')) k = SlotKind::Colour;
            else if (is_bracket_token(comps[i], 'z')) k = SlotKind::Centre;
            else if (is_symbol_token(comps[i])) k = SlotKind::Enum;
            else throw ParseError("unrecognized component '" + comps[i] + "'", 0);
            if (seen[i] && kinds[i] != k)
                throw SemanticError("inconsistent component kinds in input");
            kinds[i] = k;
            seen[i] = true;
            if (k == SlotKind::Enum) symbols[i].insert(comps[i]);
        }
    }
    for (std::size_t i = 0; i < arity; ++i) {
        switch (kinds[i]) {
            case SlotKind::Weight: slots[i] = weight_slot(); break;
            case SlotKind::Colour: slots[i] = colour_slot(); break;
            case SlotKind::Centre: slots[i] = centre_slot(); break;
            case SlotKind::Enum:
                slots[i] = enum_slot(std::vector<std::string>(
                    symbols[i].begin(), symbols[i].end()));
                break;
        }
    }
    return make_signature(std::move(slots));
}

} // namespace melange
