#include "melange/law_selector.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "melange/errors.hpp"
#include "melange/text.hpp"

namespace melange {

namespace {

std::vector<std::string> read_table_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SemanticError("cannot open table file '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

} // namespace

std::vector<std::tuple<Letter, Letter, NcPoly>> parse_phi_table(
    const std::string& path, const SignaturePtr& sig) {
    std::vector<std::tuple<Letter, Letter, NcPoly>> entries;
    for (const auto& line : read_table_lines(path)) {
        auto arrow = line.find("->");
        if (arrow == std::string::npos)
            throw SemanticError("table line without '->': " + line);
        auto lhs = split_ws(line.substr(0, arrow));
        if (lhs.size() != 2)
            throw SemanticError("table line needs two letters before '->': " +
                                line);
        Letter a = parse_letter(lhs[0], sig);
        Letter b = parse_letter(lhs[1], sig);
        std::string rhs = line.substr(arrow + 2);
        NcPoly value = parse_poly(rhs, sig);
        entries.emplace_back(std::move(a), std::move(b), std::move(value));
    }
    return entries;
}

SignaturePtr parse_semigroup_table(const std::string& path) {
    auto lines = read_table_lines(path);
    if (lines.empty()) throw SemanticError("empty semigroup table file");
    auto head = split_ws(lines.front());
    if (head.empty() || head.front() != "symbols:")
        throw SemanticError(
            "semigroup table must start with a 'symbols:' line");
    std::vector<std::string> symbols(head.begin() + 1, head.end());
    auto slot = enum_slot(symbols);
    auto id_of = [&](const std::string& s) {
        for (std::size_t i = 0; i < symbols.size(); ++i)
            if (symbols[i] == s) return static_cast<int>(i);
        throw SemanticError("unknown symbol '" + s + "' in semigroup table");
    };
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto toks = split_ws(lines[i]);
        if (toks.size() != 4 || toks[2] != "->")
            throw SemanticError("bad semigroup table line: " + lines[i]);
        slot.table[{id_of(toks[0]), id_of(toks[1])}] = id_of(toks[3]);
    }
    return make_signature({std::move(slot)});
}

PhiLawPtr law_from_selector(const std::string& selector,
                            SignaturePtr sig_override,
                            const std::vector<std::string>& inference_texts) {
    std::string name = selector;
    std::map<std::string, Rational> params;
    std::string file;
    if (auto colon = selector.find(':'); colon != std::string::npos) {
        name = selector.substr(0, colon);
        std::string rest = selector.substr(colon + 1);
        std::istringstream in(rest);
        std::string kv;
        while (std::getline(in, kv, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw SemanticError("law parameter without '=': " + kv);
            std::string key = kv.substr(0, eq);
            std::string value = kv.substr(eq + 1);
            if (key == "file" || key == "table")
                file = value;
            else
                params[key] = parse_rational(value);
        }
    }

    if (name == "semigroup") {
        SignaturePtr sig = sig_override;
        if (!sig) {
            if (file.empty())
                throw SemanticError(
                    "law 'semigroup' needs table=FILE or an Enum signature "
                    "with a table");
            sig = parse_semigroup_table(file);
        }
        return make_law(name, params, sig);
    }
    if (name == "custom") {
        if (file.empty()) throw SemanticError("law 'custom' needs file=FILE");
        SignaturePtr sig = sig_override;
        if (!sig) {
            std::vector<std::string> texts = inference_texts;
            for (const auto& line : read_table_lines(file)) {
                auto arrow = line.find("->");
                std::string head =
                    arrow == std::string::npos ? line : line.substr(0, arrow);
                for (const auto& tok : split_ws(head)) texts.push_back(tok);
                if (arrow != std::string::npos) {
                    for (const auto& tok : split_ws(line.substr(arrow + 2)))
                        if (!tok.empty() && tok != "0" && tok != "+" &&
                            !std::isdigit(static_cast<unsigned char>(tok[0])) &&
                            tok[0] != '-')
                            texts.push_back(tok);
                }
            }
            sig = infer_signature(texts);
        }
        return make_custom_law(sig, parse_phi_table(file, sig));
    }

    SignaturePtr sig = sig_override;
    if (!sig) sig = default_signature(name);
    if (!sig) sig = infer_signature(inference_texts);
    return make_law(name, params, sig);
}

} // namespace melange
