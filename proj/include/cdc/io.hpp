#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdc/embedding.hpp"
#include "cdc/graph.hpp"
#include "cdc/pipelines.hpp"
#include "cdc/walk.hpp"

namespace cdc {

/// Embedding interchange format: one "rotation v: e.end e.end e.end" line per
/// vertex, then one "signature e: +1|-1" line per edge. LF line endings.
std::string embedding_to_text(const CubicGraph& g, const Embedding& emb);

/// Parse and validate against g. Syntax errors raise MalformedInput; an
/// embedding that does not fit the graph raises VerificationFailure.
Embedding embedding_from_text(const CubicGraph& g, std::string_view text);

/// Walk files: one walk per line, "v0 e0 v1 e1 ... v0".
std::string walks_to_text(const std::vector<ClosedWalk>& walks);
std::vector<ClosedWalk> walks_from_text(std::string_view text);

/// Matchings and postman sets: a single line of edge ids.
std::string edge_set_to_text(const std::vector<int>& edges);
std::vector<int> edge_set_from_text(std::string_view text);

/// Full pipeline report: header lines, the embedding, then witness sections.
std::string pipeline_report(const CubicGraph& g, const PipelineResult& result);

struct VerifyReport {
    int faces = 0;
    std::vector<int> singular;
    int euler_characteristic = 0;
    bool orientable = false;
    std::string text;  // printable summary
};

/// Re-trace an embedding against its graph and check the double-cover
/// conservation laws; VerificationFailure on any mismatch.
VerifyReport verify_embedding(const CubicGraph& g, const Embedding& emb);

}  // namespace cdc
