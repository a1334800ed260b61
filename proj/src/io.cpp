#include "cdc/io.hpp"

#include <algorithm>
#include <sstream>

#include "cdc/partial_cdc.hpp"

namespace cdc {

std::string embedding_to_text(const CubicGraph& g, const Embedding& emb) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "rotation " << v << ':';
        for (int d : emb.rotation[v])
            out << ' ' << Multigraph::dart_edge(d) << '.' << Multigraph::dart_end(d);
        out << '\n';
    }
    for (int e = 0; e < g.edge_count(); ++e)
        out << "signature " << e << ": " << (emb.signature[e] > 0 ? "+1" : "-1") << '\n';
    return out.str();
}

Embedding embedding_from_text(const CubicGraph& g, std::string_view text) {
    Embedding emb;
    emb.rotation.assign(g.vertex_count(), {-1, -1, -1});
    emb.signature.assign(g.edge_count(), 0);
    std::vector<char> have_rot(g.vertex_count(), 0), have_sig(g.edge_count(), 0);

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        auto bad = [&](const std::string& why) {
            return MalformedInput("line " + std::to_string(lineno) + ": " + why);
        };
        if (kind == "rotation") {
            long long v;
            char colon;
            if (!(ls >> v >> std::ws) || !(ls.get(colon) && colon == ':'))
                throw bad("expected \"rotation <v>:\"");
            if (v < 0 || v >= g.vertex_count())
                throw VerificationFailure("rotation line names vertex " + std::to_string(v) +
                                          ", graph has " + std::to_string(g.vertex_count()));
            std::array<int, 3> darts{};
            for (int i = 0; i < 3; ++i) {
                long long e;
                char dot;
                long long end;
                if (!(ls >> e) || !(ls.get(dot) && dot == '.') || !(ls >> end) ||
                    (end != 0 && end != 1))
                    throw bad("expected three darts \"edge.end\"");
                if (e < 0 || e >= g.edge_count())
                    throw VerificationFailure("dart names edge " + std::to_string(e) +
                                              ", graph has " + std::to_string(g.edge_count()));
                darts[i] = Multigraph::dart(static_cast<int>(e), static_cast<int>(end));
            }
            std::string rest;
            if (ls >> rest) throw bad("trailing data");
            if (have_rot[v]) throw VerificationFailure("duplicate rotation for vertex " +
                                                       std::to_string(v));
            have_rot[v] = 1;
            emb.rotation[v] = darts;
        } else if (kind == "signature") {
            long long e;
            char colon;
            std::string value;
            if (!(ls >> e >> std::ws) || !(ls.get(colon) && colon == ':') || !(ls >> value))
                throw bad("expected \"signature <e>: +1|-1\"");
            if (value != "+1" && value != "-1") throw bad("signature must be +1 or -1");
            if (e < 0 || e >= g.edge_count())
                throw VerificationFailure("signature names edge " + std::to_string(e) +
                                          ", graph has " + std::to_string(g.edge_count()));
            if (have_sig[e]) throw VerificationFailure("duplicate signature for edge " +
                                                       std::to_string(e));
            have_sig[e] = 1;
            emb.signature[e] = value == "+1" ? 1 : -1;
        } else {
            throw bad("unknown directive \"" + kind + "\"");
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!have_rot[v]) throw VerificationFailure("missing rotation for vertex " + std::to_string(v));
    for (int e = 0; e < g.edge_count(); ++e)
        if (!have_sig[e]) throw VerificationFailure("missing signature for edge " + std::to_string(e));
    emb.validate(g);
    return emb;
}

std::string walks_to_text(const std::vector<ClosedWalk>& walks) {
    std::ostringstream out;
    for (const ClosedWalk& w : walks) {
        for (auto [v, e] : w.steps) out << v << ' ' << e << ' ';
        out << w.steps.front().first << '\n';
    }
    return out.str();
}

std::vector<ClosedWalk> walks_from_text(std::string_view text) {
    std::vector<ClosedWalk> walks;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<long long> ids;
        long long x;
        while (ls >> x) ids.push_back(x);
        std::string rest;
        if (!ls.eof() && ls.fail())
            throw MalformedInput("walk line " + std::to_string(lineno) + ": not a number");
        if (ids.size() < 5 || ids.size() % 2 == 0 || ids.front() != ids.back())
            throw MalformedInput("walk line " + std::to_string(lineno) +
                                 ": expected \"v0 e0 v1 e1 ... v0\"");
        ClosedWalk w;
        for (std::size_t i = 0; i + 1 < ids.size(); i += 2)
            w.steps.emplace_back(static_cast<int>(ids[i]), static_cast<int>(ids[i + 1]));
        walks.push_back(std::move(w));
    }
    return walks;
}

std::string edge_set_to_text(const std::vector<int>& edges) {
    std::ostringstream out;
    for (std::size_t i = 0; i < edges.size(); ++i) out << (i ? " " : "") << edges[i];
    out << '\n';
    return out.str();
}

std::vector<int> edge_set_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<int> out;
    long long x;
    while (in >> x) out.push_back(static_cast<int>(x));
    if (!in.eof()) throw MalformedInput("edge set: not a number");
    std::sort(out.begin(), out.end());
    return out;
}

std::string pipeline_report(const CubicGraph& g, const PipelineResult& result) {
    std::ostringstream out;
    out << "strategy: " << strategy_name(result.strategy) << '\n';
    out << "n: " << result.n << '\n';
    out << "m: " << g.edge_count() << '\n';
    out << "bound: " << result.bound_num << '/' << result.bound_den << " (floor "
        << result.bound_num / result.bound_den << ")\n";
    out << "singular-count: " << result.report.singular.size() << '\n';
    out << "singular-edges:";
    for (int e : result.report.singular) out << ' ' << e;
    out << '\n';
    out << "faces: " << result.report.face_count << '\n';
    out << "euler-characteristic: " << result.report.euler_characteristic << '\n';
    out << "orientable: " << (result.report.orientable ? "yes" : "no") << '\n';
    out << "genus: " << result.report.genus_like << '\n';
    BenderRichmondComparison br = compare_bender_richmond(result);
    out << "surface: " << br.surface << '\n';
    out << "bender-richmond-bound: " << br.br_bound << '\n';
    out << "smaller-bound: " << br.smaller << '\n';
    if (result.connectivity_trusted) out << "connectivity: trusted (guard exceeded)\n";
    out << "covered-edges:";
    for (int e : result.covered_edges) out << ' ' << e;
    out << '\n';
    out << "[embedding]\n" << embedding_to_text(g, result.embedding);
    out << "[witness]\n";
    if (result.witness.k > 0) out << "k: " << result.witness.k << '\n';
    if (result.witness.m1) out << "matching-m1: " << edge_set_to_text(result.witness.m1->edges);
    if (result.witness.m2) out << "matching-m2: " << edge_set_to_text(result.witness.m2->edges);
    if (result.witness.postman)
        out << "postman: " << edge_set_to_text(result.witness.postman->edges);
    if (result.witness.tree_g)
        out << "tree-g: " << edge_set_to_text(result.witness.tree_g->edges);
    if (!result.witness.tree_h_lifted.empty())
        out << "tree-h-lifted: " << edge_set_to_text(result.witness.tree_h_lifted);
    out << "c1-walks: " << result.witness.c1_walks << '\n';
    out << "[walks]\n" << walks_to_text(result.witness.walks);
    return out.str();
}

VerifyReport verify_embedding(const CubicGraph& g, const Embedding& emb) {
    emb.validate(g);
    std::vector<FacialWalk> faces;
    try {
        faces = trace_facial_walks(g, emb);
    } catch (const Error& e) {
        throw VerificationFailure(e.what());
    }
    std::vector<int> slots(g.edge_count(), 0);
    int total = 0;
    for (const FacialWalk& f : faces) {
        total += f.length();
        for (auto [v, e] : f.steps) ++slots[e];
    }
    if (total != 2 * g.edge_count())
        throw VerificationFailure("face lengths sum to " + std::to_string(total) + ", expected " +
                                  std::to_string(2 * g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e)
        if (slots[e] != 2)
            throw VerificationFailure("edge " + std::to_string(e) + " is covered " +
                                      std::to_string(slots[e]) + " times");
    angle_coverage(g, faces);  // every angle in exactly one face passage

    VerifyReport report;
    FdcReport stats = surface_stats(g, emb, std::move(faces));
    report.faces = stats.face_count;
    report.singular = stats.singular;
    report.euler_characteristic = stats.euler_characteristic;
    report.orientable = stats.orientable;
    std::ostringstream out;
    out << "faces: " << stats.face_count << '\n';
    out << "singular-count: " << stats.singular.size() << '\n';
    out << "singular-edges:";
    for (int e : stats.singular) out << ' ' << e;
    out << '\n';
    out << "euler-characteristic: " << stats.euler_characteristic << '\n';
    out << "orientable: " << (stats.orientable ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < stats.faces.size(); ++i) {
        out << "face " << i << ':';
        for (auto [v, e] : stats.faces[i].steps) out << ' ' << v << ' ' << e;
        out << ' ' << stats.faces[i].steps.front().first << '\n';
    }
    report.text = out.str();
    return report;
}

}  // namespace cdc
