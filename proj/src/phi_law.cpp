#include "melange/phi_law.hpp"

#include <algorithm>
#include <set>

#include "melange/errors.hpp"
#include "melange/shuffle.hpp"
#include "melange/text.hpp"

namespace melange {

std::uint64_t PhiLaw::next_uid() {
    static std::atomic<std::uint64_t> counter{0};
    return ++counter;
}

std::string to_text(LawClass c) {
    switch (c) {
        case LawClass::I: return "I";
        case LawClass::II: return "II";
        case LawClass::III: return "III";
        case LawClass::IV: return "IV";
        case LawClass::V: return "V";
    }
    return "?";
}

namespace {

void require_slots(const SignaturePtr& sig, std::vector<SlotKind> kinds,
                   const std::string& law) {
    bool ok = sig->arity() == kinds.size();
    for (std::size_t i = 0; ok && i < kinds.size(); ++i)
        ok = sig->slot(i).kind == kinds[i];
    if (!ok)
        throw SemanticError("law '" + law +
                            "' is incompatible with this signature");
}

Rational get_param(const std::map<std::string, Rational>& params,
                   const std::string& key, const std::string& law) {
    auto it = params.find(key);
    if (it == params.end())
        throw SemanticError("law '" + law + "' needs parameter '" + key + "'");
    return it->second;
}

} // namespace

const NcPoly& PhiLaw::phi(const Letter& a, const Letter& b) const {
    require_same_signature(sig_, a.signature(), "phi");
    require_same_signature(sig_, b.signature(), "phi");
    std::pair<Letter, Letter> key{a, b};
    {
        std::lock_guard lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    NcPoly value = evaluate(a, b);
    std::lock_guard lock(memo_mutex_);
    return memo_.emplace(std::move(key), std::move(value)).first->second;
}

NcPoly PhiLaw::evaluate(const Letter& a, const Letter& b) const {
    switch (kind_) {
        case Kind::Shuffle:
            return NcPoly::zero(sig_);
        case Kind::Stuffle:
            return NcPoly::from_letter(
                Letter(sig_, {a.value(0) + b.value(0)}));
        case Kind::MinStuffle: {
            NcPoly p = NcPoly::from_letter(
                Letter(sig_, {a.value(0) + b.value(0)}));
            return p *= Rational(-1);
        }
        case Kind::Muffle:
            return NcPoly::from_letter(
                Letter(sig_, {a.value(0) * b.value(0)}));
        case Kind::QShuffle: {
            NcPoly p = NcPoly::from_letter(
                Letter(sig_, {a.value(0) + b.value(0)}));
            return p *= params_.at("q");
        }
        case Kind::QShuffle2: {
            long i = a.value(0).get_num().get_si();
            long j = b.value(0).get_num().get_si();
            NcPoly p = NcPoly::from_letter(
                Letter(sig_, {a.value(0) + b.value(0)}));
            return p *= rational_pow(params_.at("q"), i * j);
        }
        case Kind::Ldiag: {
            // componentwise semigroup product, deformed by qs^(1*1)
            std::vector<Rational> values;
            values.reserve(sig_->arity());
            for (std::size_t i = 0; i < sig_->arity(); ++i) {
                switch (sig_->slot(i).kind) {
                    case SlotKind::Weight:
                        values.push_back(a.value(i) + b.value(i));
                        break;
                    case SlotKind::Colour:
                        values.push_back(a.value(i) * b.value(i));
                        break;
                    case SlotKind::Enum: {
                        auto it = sig_->slot(i).table.find(
                            {static_cast<int>(a.value(i).get_num().get_si()),
                             static_cast<int>(b.value(i).get_num().get_si())});
                        if (it == sig_->slot(i).table.end())
                            return NcPoly::zero(sig_);
                        values.push_back(Rational(it->second));
                        break;
                    }
                    case SlotKind::Centre:
                        throw InternalError("ldiag over a centre slot");
                }
            }
            NcPoly p = NcPoly::from_letter(Letter(sig_, std::move(values)));
            return p *= params_.at("qs");
        }
        case Kind::QInfiltration: {
            if (!(a == b)) return NcPoly::zero(sig_);
            NcPoly p = NcPoly::from_letter(a);
            return p *= params_.at("q");
        }
        case Kind::Semigroup: {
            auto it = sig_->slot(0).table.find(
                {static_cast<int>(a.value(0).get_num().get_si()),
                 static_cast<int>(b.value(0).get_num().get_si())});
            if (it == sig_->slot(0).table.end()) return NcPoly::zero(sig_);
            return NcPoly::from_letter(Letter(sig_, {Rational(it->second)}));
        }
        case Kind::Duffle:
            return NcPoly::from_letter(Letter(
                sig_, {a.value(0) + b.value(0), a.value(1) * b.value(1)}));
        case Kind::Huffle:
        case Kind::Luffle: {
            const bool with_colour = kind_ == Kind::Luffle;
            const Rational& t = a.value(1);
            const Rational& tp = b.value(1);
            Rational colour;
            if (with_colour) colour = a.value(2) * b.value(2);
            auto out_letter = [&](const Rational& weight, const Rational& centre) {
                std::vector<Rational> v{weight, centre};
                if (with_colour) v.push_back(colour);
                return Letter(sig_, std::move(v));
            };
            if (t == tp) {
                return NcPoly::from_letter(
                    out_letter(a.value(0) + b.value(0), t));
            }
            long i = a.value(0).get_num().get_si();
            long j = b.value(0).get_num().get_si();
            auto pf = partial_fraction(static_cast<int>(i), static_cast<int>(j),
                                       t, tp);
            NcPoly out(sig_);
            for (long k = 1; k <= i; ++k)
                out.add_term(
                    Word(sig_, {out_letter(Rational(k), t)}), pf.a_coeffs[k - 1]);
            for (long k = 1; k <= j; ++k)
                out.add_term(
                    Word(sig_, {out_letter(Rational(k), tp)}), pf.b_coeffs[k - 1]);
            return out;
        }
        case Kind::Custom: {
            auto it = table_.find({a, b});
            if (it == table_.end()) return NcPoly::zero(sig_);
            return it->second;
        }
    }
    throw InternalError("unreachable law kind");
}

NcPoly PhiLaw::phi_extend(const NcPoly& p, const NcPoly& q) const {
    require_same_signature(sig_, p.signature(), "phi_extend");
    require_same_signature(sig_, q.signature(), "phi_extend");
    if (!p.is_homogeneous_letters() || !q.is_homogeneous_letters())
        throw SemanticError("phi_extend needs degree-1 homogeneous inputs");
    NcPoly out(sig_);
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) {
            NcPoly term = phi(u[0], v[0]);
            term *= cu * cv;
            out += term;
        }
    return out;
}

PhiLawPtr make_law(const std::string& name,
                   const std::map<std::string, Rational>& params,
                   SignaturePtr sig) {
    if (!sig) throw SemanticError("make_law needs a signature");
    auto law = std::shared_ptr<PhiLaw>(new PhiLaw());
    law->name_ = name;
    law->sig_ = sig;
    law->params_ = params;
    auto has_colour_slot = [&] {
        for (const auto& s : sig->slots())
            if (s.kind == SlotKind::Colour) return true;
        return false;
    };
    if (name == "shuffle") {
        law->kind_ = PhiLaw::Kind::Shuffle;
        law->class_ = LawClass::I;
        law->dualizable_ = true;
    } else if (name == "stuffle") {
        require_slots(sig, {SlotKind::Weight}, name);
        law->kind_ = PhiLaw::Kind::Stuffle;
        law->class_ = LawClass::I;
        law->dualizable_ = true;
    } else if (name == "minstuffle") {
        require_slots(sig, {SlotKind::Weight}, name);
        law->kind_ = PhiLaw::Kind::MinStuffle;
        law->class_ = LawClass::III;
        law->dualizable_ = true;
    } else if (name == "muffle") {
        require_slots(sig, {SlotKind::Colour}, name);
        law->kind_ = PhiLaw::Kind::Muffle;
        law->class_ = LawClass::I;
        law->dualizable_ = false;
    } else if (name == "qshuffle") {
        require_slots(sig, {SlotKind::Weight}, name);
        law->params_["q"] = get_param(params, "q", name);
        law->kind_ = PhiLaw::Kind::QShuffle;
        law->class_ = LawClass::III;
        law->dualizable_ = true;
    } else if (name == "qshuffle2") {
        require_slots(sig, {SlotKind::Weight}, name);
        law->params_["q"] = get_param(params, "q", name);
        law->kind_ = PhiLaw::Kind::QShuffle2;
        law->class_ = LawClass::II;
        law->dualizable_ = true;
    } else if (name == "ldiag") {
        for (const auto& s : sig->slots())
            if (s.kind == SlotKind::Centre)
                throw SemanticError(
                    "law 'ldiag' has no semigroup product on centre slots");
        if (params.count("qs"))
            law->params_["qs"] = params.at("qs");
        else
            law->params_["qs"] = get_param(params, "q", name);
        law->kind_ = PhiLaw::Kind::Ldiag;
        law->class_ = LawClass::II;
        law->dualizable_ = !has_colour_slot();
    } else if (name == "qinfiltration") {
        law->params_["q"] = get_param(params, "q", name);
        law->kind_ = PhiLaw::Kind::QInfiltration;
        law->class_ = LawClass::III;
        law->dualizable_ = true;
    } else if (name == "semigroup") {
        require_slots(sig, {SlotKind::Enum}, name);
        law->kind_ = PhiLaw::Kind::Semigroup;
        law->class_ = LawClass::I;
        law->dualizable_ = true;
    } else if (name == "duffle") {
        require_slots(sig, {SlotKind::Weight, SlotKind::Colour}, name);
        law->kind_ = PhiLaw::Kind::Duffle;
        law->class_ = LawClass::I;
        law->dualizable_ = false;
    } else if (name == "huffle") {
        require_slots(sig, {SlotKind::Weight, SlotKind::Centre}, name);
        law->kind_ = PhiLaw::Kind::Huffle;
        law->class_ = LawClass::IV;
        law->dualizable_ = false;
    } else if (name == "luffle") {
        require_slots(sig,
                      {SlotKind::Weight, SlotKind::Centre, SlotKind::Colour},
                      name);
        law->kind_ = PhiLaw::Kind::Luffle;
        law->class_ = LawClass::IV;
        law->dualizable_ = false;
    } else {
        throw SemanticError("unknown law '" + name + "'");
    }
    return law;
}

PhiLawPtr make_custom_law(
    SignaturePtr sig,
    const std::vector<std::tuple<Letter, Letter, NcPoly>>& entries,
    std::string name) {
    if (!sig) throw SemanticError("make_custom_law needs a signature");
    auto law = std::shared_ptr<PhiLaw>(new PhiLaw());
    law->name_ = std::move(name);
    law->kind_ = PhiLaw::Kind::Custom;
    law->class_ = LawClass::V;
    law->sig_ = sig;
    law->dualizable_ = std::nullopt;
    for (const auto& [a, b, p] : entries) {
        require_same_signature(sig, a.signature(), "custom table");
        require_same_signature(sig, b.signature(), "custom table");
        require_same_signature(sig, p.signature(), "custom table");
        if (!p.is_homogeneous_letters())
            throw SemanticError(
                "custom table value for (" + to_text(a) + ", " + to_text(b) +
                ") is not homogeneous of degree <= 1");
        if (!p.is_zero()) law->table_.insert_or_assign({a, b}, p);
    }
    return law;
}

SignaturePtr default_signature(const std::string& law_name) {
    if (law_name == "stuffle" || law_name == "minstuffle" ||
        law_name == "qshuffle" || law_name == "qshuffle2" ||
        law_name == "ldiag")
        return make_signature({weight_slot()});
    if (law_name == "muffle") return make_signature({colour_slot()});
    if (law_name == "duffle")
        return make_signature({weight_slot(), colour_slot()});
    if (law_name == "huffle")
        return make_signature({weight_slot(), centre_slot()});
    if (law_name == "luffle")
        return make_signature({weight_slot(), centre_slot(), colour_slot()});
    return nullptr;
}

CommutativityReport is_commutative_on(const PhiLaw& law,
                                      std::span<const Letter> window) {
    for (std::size_t i = 0; i < window.size(); ++i)
        for (std::size_t j = i + 1; j < window.size(); ++j)
            if (!(law.phi(window[i], window[j]) == law.phi(window[j], window[i])))
                return {false, std::make_pair(window[i], window[j])};
    return {true, std::nullopt};
}

namespace {

std::set<Letter> phi_image_letters(const PhiLaw& law,
                                   const std::set<Letter>& letters) {
    std::set<Letter> out;
    for (const auto& a : letters)
        for (const auto& b : letters)
            for (const auto& [w, c] : law.phi(a, b).terms())
                out.insert(w[0]);
    return out;
}

} // namespace

AssociativityReport is_associative_on(const PhiLaw& law,
                                      std::span<const Letter> window,
                                      const AssocOptions& opts) {
    AssociativityReport report;
    std::set<Letter> working(window.begin(), window.end());
    bool overflow = working.size() > opts.max_letters;
    for (int round = 0; !overflow && round < opts.closure_rounds; ++round) {
        std::set<Letter> image = phi_image_letters(law, working);
        std::size_t before = working.size();
        std::set<Letter> merged = working;
        merged.insert(image.begin(), image.end());
        if (merged.size() == before) {
            report.closure_stable = true;
            break;
        }
        if (merged.size() > opts.max_letters) {
            overflow = true;
            break;
        }
        working = std::move(merged);
        report.rounds_used = round + 1;
    }
    report.working_set.assign(working.begin(), working.end());
    const auto& letters = report.working_set;

    // for commutative phi the associator is antisymmetric in its outer
    // arguments, so triples with x <= z cover everything
    bool all_commute = true;
    for (std::size_t i = 0; all_commute && i < letters.size(); ++i)
        for (std::size_t j = i + 1; j < letters.size(); ++j)
            if (!(law.phi(letters[i], letters[j]) ==
                  law.phi(letters[j], letters[i]))) {
                all_commute = false;
                break;
            }

    for (std::size_t xi = 0; xi < letters.size(); ++xi)
        for (const auto& y : letters)
            for (std::size_t zi = all_commute ? xi : 0; zi < letters.size();
                 ++zi) {
                const Letter& x = letters[xi];
                const Letter& z = letters[zi];
                NcPoly left = law.phi_extend(law.phi(x, y), NcPoly::from_letter(z));
                NcPoly right = law.phi_extend(NcPoly::from_letter(x), law.phi(y, z));
                if (!(left == right)) {
                    report.verdict = AssocVerdict::No;
                    report.witness = std::make_tuple(x, y, z);
                    return report;
                }
            }
    report.verdict = overflow ? AssocVerdict::Inconclusive : AssocVerdict::Yes;
    return report;
}

std::vector<StructureConstant> structure_constants(
    const PhiLaw& law, const Letter& z, std::span<const Letter> window) {
    std::vector<StructureConstant> out;
    Word zw(z.signature(), {z});
    for (const auto& x : window)
        for (const auto& y : window) {
            Rational gamma = law.phi(x, y).coeff(zw);
            if (gamma != 0) out.push_back({x, y, z, std::move(gamma)});
        }
    return out;
}

DualizabilityReport dualizable_on(const PhiLaw& law, const Letter& z,
                                  std::span<const Letter> window,
                                  std::size_t threshold) {
    DualizabilityReport report;
    report.witnesses = structure_constants(law, z, window);
    report.nonzero_pairs = report.witnesses.size();
    report.finite_in_window = report.nonzero_pairs <= threshold;
    report.analytic = law.dualizable_hint();
    return report;
}

} // namespace melange
