#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "melange/poly.hpp"

namespace melange {

/// Typology of the factor phi:
///   I   — semigroup product between letters (possibly with zero)
///   II  — semigroup product deformed by a bicharacter
///   III — semigroup product deformed by a colour factor
///   IV  — commutative law of an associative algebra on the letter span
///   V   — law of an associative algebra on the letter span
enum class LawClass { I, II, III, IV, V };

std::string to_text(LawClass c);

/// The factor phi of a phi-shuffle product: a map letter x letter ->
/// homogeneous polynomial of degree <= 1 (zero allowed), plus metadata.
/// Immutable and shareable; evaluation is memoized internally.
class PhiLaw {
public:
    enum class Kind {
        Shuffle,
        Stuffle,
        MinStuffle,
        Muffle,
        QShuffle,
        QShuffle2,
        Ldiag,
        QInfiltration,
        Semigroup,
        Duffle,
        Huffle,
        Luffle,
        Custom,
    };

    const std::string& name() const { return name_; }
    Kind kind() const { return kind_; }
    /// Process-unique identity, the memo key component for caches.
    std::uint64_t uid() const { return uid_; }
    LawClass law_class() const { return class_; }
    const SignaturePtr& signature() const { return sig_; }
    const std::map<std::string, Rational>& params() const { return params_; }

    /// Law-level analytic dualizability flag; nullopt for custom tables
    /// (window evidence only).
    std::optional<bool> dualizable_hint() const { return dualizable_; }

    /// phi(a, b). Homogeneous of degree <= 1; may be zero.
    const NcPoly& phi(const Letter& a, const Letter& b) const;

    /// Bilinear extension to degree-1 polynomials:
    /// sum_{x,y} <P|x><Q|y> phi(x,y). Throws SemanticError if an input
    /// has a word of length != 1 in its support.
    NcPoly phi_extend(const NcPoly& p, const NcPoly& q) const;

    friend std::shared_ptr<const PhiLaw> make_law(
        const std::string& name, const std::map<std::string, Rational>& params,
        SignaturePtr sig);
    friend std::shared_ptr<const PhiLaw> make_custom_law(
        SignaturePtr sig,
        const std::vector<std::tuple<Letter, Letter, NcPoly>>& entries,
        std::string name);

private:
    PhiLaw() = default;
    NcPoly evaluate(const Letter& a, const Letter& b) const;

    std::uint64_t uid_ = next_uid();
    static std::uint64_t next_uid();

    std::string name_;
    Kind kind_ = Kind::Shuffle;
    LawClass class_ = LawClass::I;
    SignaturePtr sig_;
    std::map<std::string, Rational> params_;
    std::optional<bool> dualizable_;
    std::map<std::pair<Letter, Letter>, NcPoly> table_;  // Custom only

    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<Letter, Letter>, NcPoly> memo_;
};

using PhiLawPtr = std::shared_ptr<const PhiLaw>;

/// Built-in law constructors. Names: shuffle, stuffle, minstuffle,
/// muffle, qshuffle (q), qshuffle2 (q), ldiag (qs), qinfiltration (q),
/// semigroup, duffle, huffle, luffle. Throws SemanticError when the
/// signature does not fit the law or a parameter is missing.
PhiLawPtr make_law(const std::string& name,
                   const std::map<std::string, Rational>& params,
                   SignaturePtr sig);

/// Law from an explicit partial table; pairs absent from the table map
/// to the zero polynomial. Every table value must be homogeneous of
/// degree <= 1.
PhiLawPtr make_custom_law(
    SignaturePtr sig,
    const std::vector<std::tuple<Letter, Letter, NcPoly>>& entries,
    std::string name = "custom");

/// The signature a built-in law naturally lives on (nullptr when the law
/// works over any signature, e.g. shuffle).
SignaturePtr default_signature(const std::string& law_name);

// ---------------------------------------------------------------------
// Decision procedures on finite letter windows.

struct CommutativityReport {
    bool commutative = false;
    std::optional<std::pair<Letter, Letter>> witness;
};

/// Checks phi(x,y) == phi(y,x) for all pairs from the window.
CommutativityReport is_commutative_on(const PhiLaw& law,
                                      std::span<const Letter> window);

enum class AssocVerdict { Yes, No, Inconclusive };

struct AssociativityReport {
    AssocVerdict verdict = AssocVerdict::Inconclusive;
    std::optional<std::tuple<Letter, Letter, Letter>> witness;
    std::vector<Letter> working_set;  // letters actually tested
    bool closure_stable = false;      // no new letters appeared in the last round
    int rounds_used = 0;
};

struct AssocOptions {
    int closure_rounds = 3;      // rounds of enlarging the window by phi images
    std::size_t max_letters = 64;   // bail out (Inconclusive) beyond this
};

/// Checks phi(phi(x,y),z) == phi(x,phi(y,z)) for all triples over the
/// window enlarged by letters appearing in phi outputs (closure_rounds
/// rounds, stopping early once stable). Verdict No always carries a
/// witness and is sound; Yes certifies associativity on the closed set
/// when closure_stable, and on the capped working set otherwise;
/// Inconclusive means the working set outgrew max_letters.
AssociativityReport is_associative_on(const PhiLaw& law,
                                      std::span<const Letter> window,
                                      const AssocOptions& opts = {});

struct StructureConstant {
    Letter x;
    Letter y;
    Letter z;
    Rational gamma;  // <phi(x,y)|z>, nonzero when stored
};

/// All (x,y) in window^2 with <phi(x,y)|z> != 0.
std::vector<StructureConstant> structure_constants(
    const PhiLaw& law, const Letter& z, std::span<const Letter> window);

struct DualizabilityReport {
    std::size_t nonzero_pairs = 0;
    bool finite_in_window = false;  // nonzero_pairs <= threshold
    std::vector<StructureConstant> witnesses;
    std::optional<bool> analytic;   // the law-level flag, when known
};

/// Window evidence for the finite-preimage condition on z. This counts
/// pairs inside the window only; the verdict labels say exactly that.
DualizabilityReport dualizable_on(const PhiLaw& law, const Letter& z,
                                  std::span<const Letter> window,
                                  std::size_t threshold);

} // namespace melange
