// melange — products, Lyndon decomposition, law checks, coproducts and
// truncated polyzeta verification from the command line.
//
// Exit codes: 0 ok, 1 check failed, 2 parse error, 3 semantic error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "melange/coalgebra.hpp"
#include "melange/errors.hpp"
#include "melange/law_selector.hpp"
#include "melange/lyndon.hpp"
#include "melange/text.hpp"
#include "melange/zeta.hpp"

namespace {

using namespace melange;

struct Options {
    std::string law = "shuffle";
    std::string signature;
    std::string window;
    bool machine = false;
};

SignaturePtr signature_override(const Options& opt) {
    if (opt.signature.empty()) return nullptr;
    return parse_signature(opt.signature);
}

PhiLawPtr build_law(const Options& opt,
                    const std::vector<std::string>& inference_texts) {
    std::vector<std::string> texts = inference_texts;
    if (!opt.window.empty()) texts.push_back(opt.window);
    return law_from_selector(opt.law, signature_override(opt), texts);
}

std::vector<Letter> parse_window(const Options& opt, const SignaturePtr& sig) {
    if (opt.window.empty())
        throw SemanticError("this command needs --window letters");
    return parse_letter_list(opt.window, sig);
}

void print_poly_result(const NcPoly& p, bool machine) {
    if (machine) {
        for (const auto& [c, w] : canonical_terms(p))
            std::cout << c.get_str() << '\t' << to_text(w) << '\n';
        return;
    }
    std::cout << to_text(p, PolyStyle::ExplicitCoeff) << '\n';
}

void print_tensor_result(const Tensor2& t, bool machine) {
    if (machine) {
        for (const auto& [c, uv] : canonical_terms(t))
            std::cout << c.get_str() << '\t' << to_text(uv.first) << '\t'
                      << to_text(uv.second) << '\n';
        return;
    }
    std::cout << to_text(t) << '\n';
}

int cmd_product(const Options& opt, const std::string& u_text,
                const std::string& v_text) {
    PhiLawPtr law = build_law(opt, {u_text, v_text});
    Word u = parse_word(u_text, law->signature());
    Word v = parse_word(v_text, law->signature());
    print_poly_result(phi_shuffle(u, v, *law), opt.machine);
    return 0;
}

int cmd_lyndon(const Options& opt, const std::string& alphabet, int max_length) {
    std::vector<Letter> letters;
    if (!alphabet.empty()) {
        // "a<b<c" — bare symbols in declared order, or letter literals
        // whose natural order must agree with the declared one
        std::vector<std::string> entries;
        std::string cur;
        int depth = 0;
        for (char c : alphabet) {
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') --depth;
            if (c == '<' && depth == 0) {
                entries.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        entries.push_back(cur);
        SignaturePtr sig = signature_override(opt);
        if (!sig) sig = infer_signature(entries);
        for (const auto& e : entries) letters.push_back(parse_letter(e, sig));
        for (std::size_t i = 1; i < letters.size(); ++i)
            if (!(letters[i - 1] < letters[i]))
                throw SemanticError(
                    "alphabet entries must be strictly increasing in the "
                    "letter order");
    } else {
        PhiLawPtr law = build_law(opt, {});
        letters = parse_window(opt, law->signature());
    }
    auto words = lyndon_words(letters, max_length);
    bool first = true;
    for (const auto& w : words) {
        if (opt.machine) {
            std::cout << to_text_compact(w) << '\n';
        } else {
            if (!first) std::cout << ' ';
            std::cout << to_text_compact(w);
            first = false;
        }
    }
    if (!opt.machine) std::cout << '\n';
    return 0;
}

int cmd_decompose(const Options& opt, const std::string& poly_text) {
    PhiLawPtr law = build_law(opt, {poly_text});
    NcPoly p = parse_poly(poly_text, law->signature());
    auto window = parse_window(opt, law->signature());
    ShuffleCache cache;
    auto decomposition = decompose_in_basis(p, *law, window, &cache);
    if (decomposition.coefficients.empty()) {
        std::cout << "0\n";
        return 0;
    }
    bool first = true;
    for (const auto& [alpha, c] : decomposition.coefficients) {
        if (opt.machine) {
            std::cout << c.get_str() << '\t' << to_text(alpha) << '\n';
        } else {
            if (!first) std::cout << " + ";
            std::cout << c.get_str() << ' ' << to_text(alpha);
            first = false;
        }
    }
    if (!opt.machine) std::cout << '\n';
    return 0;
}

int cmd_lawcheck(const Options& opt, std::size_t threshold_arg) {
    PhiLawPtr law = build_law(opt, {});
    auto window = parse_window(opt, law->signature());
    std::size_t threshold =
        threshold_arg > 0 ? threshold_arg
                          : (window.size() > 1 ? window.size() - 1 : 1);

    auto comm = is_commutative_on(*law, window);
    std::cout << "commutative: " << (comm.commutative ? "yes" : "no");
    if (comm.witness)
        std::cout << " witness (" << to_text(comm.witness->first) << ", "
                  << to_text(comm.witness->second) << ")";
    std::cout << '\n';

    auto assoc = is_associative_on(*law, window);
    std::cout << "associative: ";
    switch (assoc.verdict) {
        case AssocVerdict::Yes:
            std::cout << "yes (tested " << assoc.working_set.size()
                      << " letters, closure "
                      << (assoc.closure_stable ? "stable" : "capped") << ")";
            break;
        case AssocVerdict::No: {
            auto [x, y, z] = *assoc.witness;
            std::cout << "no witness (" << to_text(x) << ", " << to_text(y)
                      << ", " << to_text(z) << ")";
            break;
        }
        case AssocVerdict::Inconclusive:
            std::cout << "inconclusive (closure escapes the letter bound)";
            break;
    }
    std::cout << '\n';

    std::cout << "dualizable: analytic=";
    if (law->dualizable_hint())
        std::cout << (*law->dualizable_hint() ? "yes" : "no");
    else
        std::cout << "unknown";
    for (const auto& z : window) {
        auto report = dualizable_on(*law, z, window, threshold);
        std::cout << "\n  z=" << to_text(z) << " pairs=" << report.nonzero_pairs
                  << " verdict="
                  << (report.finite_in_window ? "finite-in-window"
                                              : "exceeds-threshold");
        if (!report.finite_in_window) {
            std::cout << " witnesses:";
            std::size_t shown = 0;
            for (const auto& sc : report.witnesses) {
                if (shown++ == 6) {
                    std::cout << " ...";
                    break;
                }
                std::cout << " (" << to_text(sc.x) << "," << to_text(sc.y)
                          << ")->" << sc.gamma.get_str();
            }
        }
    }
    std::cout << '\n';
    return 0;
}

int cmd_coproduct(const Options& opt, const std::string& kind,
                  const std::string& word_text) {
    PhiLawPtr law = build_law(opt, {word_text});
    Word w = parse_word(word_text, law->signature());
    if (kind == "conc") {
        print_tensor_result(delta_conc(w), opt.machine);
        return 0;
    }
    if (kind == "phi") {
        auto window = parse_window(opt, law->signature());
        print_tensor_result(delta_phi(w, *law, window), opt.machine);
        return 0;
    }
    throw SemanticError("coproduct kind must be 'conc' or 'phi'");
}

int cmd_zetacheck(const Options& opt, long n, const std::string& left_text,
                  const std::string& right_text) {
    PhiLawPtr law = build_law(opt, {left_text, right_text});
    Word left = parse_word(left_text, law->signature());
    Word right = parse_word(right_text, law->signature());
    auto report = verify_product_identity(n, left, right, *law);
    if (report.equal) {
        std::cout << "OK lhs=rhs=" << report.lhs.get_str() << '\n';
        return 0;
    }
    std::cout << "FAIL lhs=" << report.lhs.get_str()
              << " rhs=" << report.rhs.get_str() << '\n';
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"phi-shuffle products on noncommutative polynomials"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--law", opt.law, "law selector, e.g. stuffle or qshuffle:q=1/2");
    app.add_option("--signature", opt.signature,
                   "signature override, e.g. weight,centre,colour");
    app.add_option("--window", opt.window, "comma-separated letter window");
    app.add_flag("--machine", opt.machine, "machine-readable output");

    std::string u_text, v_text, poly_text, word_text, alphabet;
    std::string kind = "conc";
    int max_length = 1;
    long n = 0;
    std::size_t threshold = 0;

    auto* product = app.add_subcommand("product", "phi-shuffle of two words");
    product->add_option("u", u_text, "left word")->required();
    product->add_option("v", v_text, "right word")->required();

    auto* lyndon = app.add_subcommand("lyndon", "Lyndon words up to a length");
    lyndon->add_option("--alphabet", alphabet, "ordered alphabet, e.g. a<b");
    lyndon->add_option("--max", max_length, "maximum word length")->required();

    auto* decompose =
        app.add_subcommand("decompose", "decompose in the multi-power basis");
    decompose->add_option("poly", poly_text, "polynomial")->required();

    auto* lawcheck = app.add_subcommand(
        "lawcheck", "commutativity/associativity/dualizability on a window");
    lawcheck->add_option("--threshold", threshold,
                         "dualizability pair threshold (default: window size - 1)");

    auto* coproduct = app.add_subcommand("coproduct", "coproduct of a word");
    coproduct->add_option("--kind", kind, "conc or phi");
    coproduct->add_option("word", word_text, "word")->required();

    auto* zetacheck = app.add_subcommand(
        "zetacheck", "truncated polyzeta product identity");
    zetacheck->add_option("-N,--upper", n, "truncation bound")->required();
    std::string left_text, right_text;
    zetacheck->add_option("--left", left_text, "left index word")->required();
    zetacheck->add_option("--right", right_text, "right index word")->required();

    // --law/--window/... may come after the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (product->parsed()) return cmd_product(opt, u_text, v_text);
        if (lyndon->parsed()) return cmd_lyndon(opt, alphabet, max_length);
        if (decompose->parsed()) return cmd_decompose(opt, poly_text);
        if (lawcheck->parsed()) return cmd_lawcheck(opt, threshold);
        if (coproduct->parsed()) return cmd_coproduct(opt, kind, word_text);
        if (zetacheck->parsed())
            return cmd_zetacheck(opt, n, left_text, right_text);
    } catch (const melange::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const melange::SemanticError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const melange::Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
