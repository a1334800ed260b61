#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdc/embedding.hpp"
#include "cdc/graph.hpp"
#include "cdc/matching.hpp"

namespace cdc {

struct MinSingularResult {
    int count = 0;
    Embedding witness;
};

/// True minimum number of singular edges over all embeddings, by exhausting
/// the normalized enumeration. Guarded; throws TooLarge.
MinSingularResult min_singular_exhaustive(const CubicGraph& g, int guard = 14);

/// All perfect matchings by backtracking (guarded on n).
std::vector<Matching> enumerate_perfect_matchings(const CubicGraph& g, int guard = 16);

struct EdmondsViolation {
    enum class Kind { Negative, DegreeSum, OddCut };
    Kind kind;
    int edge = -1;                 // Negative
    int vertex = -1;               // DegreeSum
    std::vector<int> odd_set;      // OddCut
    std::string message;
};

/// Check a fractional point against the perfect matching polytope:
/// nonnegativity, degree equalities, and every odd-set cut inequality by
/// exhaustive subset enumeration (guarded on n).
std::optional<EdmondsViolation> check_edmonds_point(const CubicGraph& g,
                                                    const FractionalPmPoint& f, int guard = 16);

struct PetersenNonextensionReport {
    long long embeddings_enumerated = 0;
    int min_singular = 0;              // over all extensions keeping both circuits facial
    std::vector<int> circuit_lengths;  // lengths of circuits present in the graph
    std::vector<int> alternating_circuit_lengths;  // circuits avoiding the 2-factor's angles
    int uncovered_slots = 0;           // edge slots a hypothetical completion must cover
    bool cdc_extension_possible = false;
};

/// The two 5-circuits of the spoke 2-factor form a partial CDC that extends
/// to an embedding but never to a CDC: every extension keeping both circuits
/// facial has a singular edge. Enumerates all such extensions directly from
/// the circuits' angle constraints; full_filter additionally cross-checks by
/// filtering the whole normalized enumeration.
PetersenNonextensionReport check_petersen_nonextension(bool full_filter = false);

}  // namespace cdc
