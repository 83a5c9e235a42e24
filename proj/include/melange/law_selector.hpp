#pragma once

#include <string>
#include <vector>

#include "melange/phi_law.hpp"

namespace melange {

/// Builds a law from a selector string `name[:key=value,...]`, e.g.
/// "stuffle", "qshuffle:q=1/2", "custom:file=phi.tbl",
/// "semigroup:table=sg.tbl".
///
/// The signature is taken from `sig_override` when non-null; otherwise
/// from the law's natural slot shape; otherwise (shuffle, qinfiltration,
/// custom) it is inferred from the custom table file and/or
/// `inference_texts` (word texts the caller is about to parse).
PhiLawPtr law_from_selector(const std::string& selector,
                            SignaturePtr sig_override,
                            const std::vector<std::string>& inference_texts);

/// Parses a custom phi table file. Line format:
///   <letter> <letter> -> <rational> <letter> [+ <rational> <letter>]...
///   <letter> <letter> -> 0
/// '#' starts a comment; blank lines are skipped.
std::vector<std::tuple<Letter, Letter, NcPoly>> parse_phi_table(
    const std::string& path, const SignaturePtr& sig);

/// Parses a semigroup table file:
///   symbols: a b c        (declared order; first line)
///   a a -> b              (one product per line; partial tables allowed)
/// and returns the Enum signature carrying the table.
SignaturePtr parse_semigroup_table(const std::string& path);

} // namespace melange
