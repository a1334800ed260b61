#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cdc {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- input / construction errors ---
struct MalformedInput : Error { using Error::Error; };
struct NotCubic : Error { using Error::Error; };
struct LoopEdge : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };
struct DegenerateExpansion : Error { using Error::Error; };
struct GenerationFailure : Error { using Error::Error; };

// --- precondition failures ---
struct NotBridgeless : Error { using Error::Error; };
struct NotThreeEdgeConnected : Error { using Error::Error; };
struct CyclicConnectivityTooLow : Error { using Error::Error; };
struct RequiredEdgesCyclic : Error { using Error::Error; };
struct NoPerfectMatching : Error { using Error::Error; };
struct CutAvoidanceFailed : Error { using Error::Error; };
struct NotAWalk : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// --- internal soundness assertions; must never fire on valid inputs ---
struct BoundViolated : Error { using Error::Error; };
struct InconsistentLambda : Error { using Error::Error; };
struct InternalDegreeError : Error { using Error::Error; };

/// Verification of an embedding against a graph failed (CLI exit 1).
struct VerificationFailure : Error { using Error::Error; };

/// Tree packing failed; carries a partition of the vertex set certifying
/// that k edge-disjoint spanning trees cannot exist.
struct PackingInfeasible : Error {
    PackingInfeasible(std::string msg, std::vector<int> part_of, int parts, int cross_edges)
        : Error(std::move(msg)), part_of(std::move(part_of)), parts(parts), cross_edges(cross_edges) {}
    std::vector<int> part_of;  // vertex -> part index
    int parts = 0;
    int cross_edges = 0;
};

}  // namespace cdc
