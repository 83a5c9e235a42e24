#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "melange/coalgebra.hpp"
#include "melange/errors.hpp"
#include "melange/law_selector.hpp"
#include "melange/lyndon.hpp"
#include "melange/text.hpp"
#include "melange/zeta.hpp"

namespace py = pybind11;
using namespace melange;

namespace {

PhiLawPtr build_law(const std::string& selector, const std::string& signature,
                    const std::vector<std::string>& texts) {
    SignaturePtr sig;
    if (!signature.empty()) sig = parse_signature(signature);
    return law_from_selector(selector, sig, texts);
}

std::vector<std::pair<std::string, std::string>> poly_terms(const NcPoly& p) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [c, w] : canonical_terms(p))
        out.emplace_back(c.get_str(), to_text(w));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "phi-shuffle products on noncommutative polynomials";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SemanticError>(m, "SemanticError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalError",
                                          PyExc_RuntimeError);

    m.def(
        "product",
        [](const std::string& law, const std::string& u, const std::string& v,
           const std::string& signature) {
            auto l = build_law(law, signature, {u, v});
            NcPoly p = phi_shuffle(parse_word(u, l->signature()),
                                   parse_word(v, l->signature()), *l);
            return to_text(p, PolyStyle::ExplicitCoeff);
        },
        py::arg("law"), py::arg("u"), py::arg("v"), py::arg("signature") = "",
        "phi-shuffle product of two words, canonically printed");

    m.def(
        "product_terms",
        [](const std::string& law, const std::string& u, const std::string& v,
           const std::string& signature) {
            auto l = build_law(law, signature, {u, v});
            return poly_terms(phi_shuffle(parse_word(u, l->signature()),
                                          parse_word(v, l->signature()), *l));
        },
        py::arg("law"), py::arg("u"), py::arg("v"), py::arg("signature") = "",
        "phi-shuffle product as (coefficient, word) pairs in canonical order");

    m.def(
        "lyndon_words",
        [](const std::string& window, int max_length,
           const std::string& signature) {
            SignaturePtr sig;
            if (!signature.empty())
                sig = parse_signature(signature);
            else
                sig = infer_signature({window});
            auto letters = parse_letter_list(window, sig);
            std::vector<std::string> out;
            for (const auto& w : lyndon_words(letters, max_length))
                out.push_back(to_text(w));
            return out;
        },
        py::arg("window"), py::arg("max_length"), py::arg("signature") = "",
        "Lyndon words over a comma-separated letter window, lexicographic");

    m.def(
        "is_lyndon",
        [](const std::string& word, const std::string& signature) {
            SignaturePtr sig;
            if (!signature.empty())
                sig = parse_signature(signature);
            else
                sig = infer_signature({word});
            return is_lyndon(parse_word(word, sig));
        },
        py::arg("word"), py::arg("signature") = "");

    m.def(
        "decompose",
        [](const std::string& law, const std::string& poly,
           const std::string& window, const std::string& signature) {
            auto l = build_law(law, signature, {poly, window});
            NcPoly p = parse_poly(poly, l->signature());
            auto letters = parse_letter_list(window, l->signature());
            ShuffleCache cache;
            auto d = decompose_in_basis(p, *l, letters, &cache);
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& [alpha, c] : d.coefficients)
                out.emplace_back(c.get_str(), to_text(alpha));
            return out;
        },
        py::arg("law"), py::arg("poly"), py::arg("window"),
        py::arg("signature") = "",
        "coefficients of the multi-power basis decomposition");

    m.def(
        "lawcheck",
        [](const std::string& law, const std::string& window,
           const std::string& signature) {
            auto l = build_law(law, signature, {window});
            auto letters = parse_letter_list(window, l->signature());
            auto comm = is_commutative_on(*l, letters);
            auto assoc = is_associative_on(*l, letters);
            py::dict out;
            out["commutative"] = comm.commutative;
            out["associative"] = assoc.verdict == AssocVerdict::Yes
                                     ? "yes"
                                     : (assoc.verdict == AssocVerdict::No
                                            ? "no"
                                            : "inconclusive");
            out["law_class"] = to_text(l->law_class());
            if (l->dualizable_hint())
                out["dualizable"] = *l->dualizable_hint();
            else
                out["dualizable"] = py::none();
            return out;
        },
        py::arg("law"), py::arg("window"), py::arg("signature") = "");

    m.def(
        "coproduct_conc",
        [](const std::string& word, const std::string& signature) {
            SignaturePtr sig;
            if (!signature.empty())
                sig = parse_signature(signature);
            else
                sig = infer_signature({word});
            Tensor2 t = delta_conc(parse_word(word, sig));
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (const auto& [c, uv] : canonical_terms(t))
                out.emplace_back(c.get_str(), to_text(uv.first),
                                 to_text(uv.second));
            return out;
        },
        py::arg("word"), py::arg("signature") = "");

    m.def(
        "coproduct_phi",
        [](const std::string& law, const std::string& word,
           const std::string& window, const std::string& signature) {
            auto l = build_law(law, signature, {word, window});
            auto letters = parse_letter_list(window, l->signature());
            Tensor2 t = delta_phi(parse_word(word, l->signature()), *l, letters);
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (const auto& [c, uv] : canonical_terms(t))
                out.emplace_back(c.get_str(), to_text(uv.first),
                                 to_text(uv.second));
            return out;
        },
        py::arg("law"), py::arg("word"), py::arg("window"),
        py::arg("signature") = "");

    m.def(
        "zetacheck",
        [](const std::string& law, long n, const std::string& left,
           const std::string& right) {
            auto l = build_law(law, "", {left, right});
            auto report =
                verify_product_identity(n, parse_word(left, l->signature()),
                                        parse_word(right, l->signature()), *l);
            return py::make_tuple(report.lhs.get_str(), report.rhs.get_str(),
                                  report.equal);
        },
        py::arg("law"), py::arg("n"), py::arg("left"), py::arg("right"),
        "returns (lhs, rhs, equal) for the truncated product identity");

    m.def(
        "truncated_m",
        [](long n, const std::vector<long>& s,
           const std::vector<std::string>& xi,
           const std::vector<std::string>& t) {
            ZetaIndex idx;
            idx.s = s;
            for (const auto& x : xi) idx.xi.push_back(parse_rational(x));
            for (const auto& c : t) idx.t.push_back(parse_rational(c));
            if (idx.xi.empty()) idx.xi.assign(s.size(), Rational(1));
            if (idx.t.empty()) idx.t.assign(s.size(), Rational(0));
            return truncated_m(n, idx).get_str();
        },
        py::arg("n"), py::arg("s"), py::arg("xi") = std::vector<std::string>{},
        py::arg("t") = std::vector<std::string>{},
        "exact truncated polyzeta sum M^N as a rational string");

    m.def(
        "partial_fraction",
        [](int s, int r, const std::string& a, const std::string& b) {
            auto pf = partial_fraction(s, r, parse_rational(a),
                                       parse_rational(b));
            std::vector<std::string> av, bv;
            for (const auto& c : pf.a_coeffs) av.push_back(c.get_str());
            for (const auto& c : pf.b_coeffs) bv.push_back(c.get_str());
            return py::make_tuple(av, bv);
        },
        py::arg("s"), py::arg("r"), py::arg("a"), py::arg("b"));
}
