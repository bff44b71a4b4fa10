#pragma once

#include <string>
#include <vector>

#include "ybme/harness.hpp"
#include "ybme/solve.hpp"

namespace ybme {

/// Solution set renderings.  JSON carries the full structure (field, the
/// input matrix as a 2x2 integer array, cardinality, provenance, components,
/// points); plain is a human-readable summary; CSV lists one point per row.
std::string solution_set_json(const SolutionSet& S);
std::string solution_set_plain(const SolutionSet& S);
std::string solution_set_csv(const SolutionSet& S);

/// Reads a solution set back from its JSON rendering so the residuals can
/// be re-verified independently of the producer.  Throws
/// std::invalid_argument on malformed input, out-of-range entries, or a
/// declared cardinality that disagrees with the point list.
SolutionSet parse_solution_set_json(const std::string& text);

/// Campaign renderings.  Wall-clock timings are deliberately left out of
/// all three so the bytes depend only on (q, seed).
std::string verdict_json(const VerdictReport& rep);
std::string verdicts_json(const std::vector<VerdictReport>& reports);

/// Fixed-width plain-text table, one block per campaign, each record tagged
/// with the claim it checks; ends with pass counts and a final VERDICT line.
std::string traceability_table(const std::vector<VerdictReport>& reports);

/// One row per record: q, class, params, predicted, observed, match.
/// An empty predicted column means the record makes no count prediction.
std::string verdicts_csv(const std::vector<VerdictReport>& reports);

}  // namespace ybme
