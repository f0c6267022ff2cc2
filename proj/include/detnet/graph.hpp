#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "detnet/errors.hpp"
#include "detnet/taxonomy.hpp"

namespace detnet {

/// Conditioning gate carried by an edge: AND ("+") requires the parent to
/// fire, NOT ("-") requires it not to.
enum class GateSign { And, Not };

inline char gate_sign_char(GateSign s) { return s == GateSign::And ? '+' : '-'; }

inline GateSign gate_sign_from_char(char c) {
    if (c == '+') return GateSign::And;
    if (c == '-') return GateSign::Not;
    throw ParseError(std::string("gate sign must be '+' or '-', got '") + c + "'");
}

/// A tunable binary detection placed at a taxonomy location.
struct Detector {
    std::string id;
    TaxonomyPath location;
    // Admissible threshold interval, trimmed away from {0,1} so the firing
    // probability of the sqrt model stays bounded away from zero.
    double lambda_min = 0.01;
    double lambda_max = 0.99;
    double prevalence = 0.5;  // base rate of true positives at this location
    double pos_weight = 0.2;  // influence score of AND parents
    double neg_weight = 0.2;  // influence score of NOT parents

    void validate() const {
        if (id.empty()) throw ValidationError("detector: id must be non-empty");
        if (!(0.0 < lambda_min && lambda_min < lambda_max && lambda_max < 1.0))
            throw ValidationError("detector " + id + ": requires 0 < lambda_min < lambda_max < 1");
        if (prevalence < 0.0 || prevalence > 1.0)
            throw ValidationError("detector " + id + ": prevalence must be in [0,1]");
        if (pos_weight < 0.0 || neg_weight < 0.0)
            throw ValidationError("detector " + id + ": influence weights must be >= 0");
    }
};

struct Edge {
    std::string from;
    std::string to;
    GateSign sign = GateSign::And;
    double gamma = 1.0;  // interconnection strength, sampled U[0,2] in replications
};

/// Directed acyclic graph of detectors with signed conditioning edges.
///
/// Build it up front (add_detector/add_edge re-verify acyclicity), then treat
/// it as shared read-only state: evaluation and solvers never mutate it.
class DetectionGraph {
public:
    void add_detector(Detector d) {
        d.validate();
        if (index_.count(d.id)) throw ValidationError("graph: duplicate detector id " + d.id);
        index_[d.id] = detectors_.size();
        detectors_.push_back(std::move(d));
        in_.emplace_back();
        out_.emplace_back();
    }

    /// Inserts a signed edge; rejects self-loops, unknown endpoints and any
    /// insertion that would create a directed cycle.
    void add_edge(const Edge& e) {
        if (e.from == e.to) throw ValidationError("graph: self-loop on " + e.from);
        if (e.gamma < 0.0) throw ValidationError("graph: gamma must be >= 0");
        std::size_t u = index_of(e.from);
        std::size_t v = index_of(e.to);
        if (reachable(v, u))
            throw CycleError("graph: edge " + e.from + "->" + e.to + " would create a cycle");
        edges_.push_back(e);
        in_[v].push_back(edges_.size() - 1);
        out_[u].push_back(edges_.size() - 1);
    }

    bool has(const std::string& id) const { return index_.count(id) != 0; }

    const Detector& detector(const std::string& id) const { return detectors_[index_of(id)]; }

    const std::vector<Detector>& detectors() const { return detectors_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t size() const { return detectors_.size(); }

    std::size_t index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw UnknownNodeError("graph: unknown detector " + id);
        return it->second;
    }

    const Detector& detector_at(std::size_t i) const { return detectors_[i]; }

    /// In-edges of node i as (source index, sign, gamma), sorted by source id.
    std::vector<std::tuple<std::size_t, GateSign, double>> in_edges_of(std::size_t i) const {
        std::vector<std::tuple<std::size_t, GateSign, double>> r;
        for (std::size_t ei : in_[i]) {
            const Edge& e = edges_[ei];
            r.emplace_back(index_of(e.from), e.sign, e.gamma);
        }
        std::sort(r.begin(), r.end(), [this](const auto& a, const auto& b) {
            return detectors_[std::get<0>(a)].id < detectors_[std::get<0>(b)].id;
        });
        return r;
    }

    /// Topological order with deterministic lexicographic tie-breaking, so
    /// identical graphs always enumerate identically.
    std::vector<std::string> topological_order() const {
        std::vector<std::size_t> indeg(detectors_.size(), 0);
        for (const Edge& e : edges_) indeg[index_of(e.to)]++;
        std::set<std::pair<std::string, std::size_t>> ready;
        for (std::size_t i = 0; i < detectors_.size(); ++i)
            if (indeg[i] == 0) ready.insert({detectors_[i].id, i});
        std::vector<std::string> order;
        order.reserve(detectors_.size());
        while (!ready.empty()) {
            auto [id, i] = *ready.begin();
            ready.erase(ready.begin());
            order.push_back(id);
            for (std::size_t ei : out_[i]) {
                std::size_t v = index_of(edges_[ei].to);
                if (--indeg[v] == 0) ready.insert({detectors_[v].id, v});
            }
        }
        return order;  // acyclicity is an invariant, so this covers all nodes
    }

    /// Parents, children, and co-parents (nodes sharing a child) of `id`.
    std::set<std::string> moral_neighbors(const std::string& id) const {
        std::size_t i = index_of(id);
        std::set<std::string> r;
        for (std::size_t ei : in_[i]) r.insert(edges_[ei].from);
        for (std::size_t ei : out_[i]) {
            const std::string& child = edges_[ei].to;
            r.insert(child);
            for (std::size_t ej : in_[index_of(child)]) r.insert(edges_[ej].from);
        }
        r.erase(id);
        return r;
    }

    /// Partition of `id`'s in-edge sources by gate sign.
    std::pair<std::set<std::string>, std::set<std::string>> parents_by_sign(
        const std::string& id) const {
        std::size_t i = index_of(id);
        std::set<std::string> and_parents, not_parents;
        for (std::size_t ei : in_[i]) {
            const Edge& e = edges_[ei];
            (e.sign == GateSign::And ? and_parents : not_parents).insert(e.from);
        }
        return {std::move(and_parents), std::move(not_parents)};
    }

    std::size_t count_edges(GateSign sign) const {
        std::size_t n = 0;
        for (const Edge& e : edges_)
            if (e.sign == sign) ++n;
        return n;
    }

    /// Mean gamma over the direct edges joining `i` and `j` in either
    /// direction; 0 when no direct edge exists (co-parent pairs).
    double mean_gamma(std::size_t i, std::size_t j) const {
        double sum = 0.0;
        int n = 0;
        for (const Edge& e : edges_) {
            std::size_t u = index_of(e.from), v = index_of(e.to);
            if ((u == i && v == j) || (u == j && v == i)) {
                sum += e.gamma;
                ++n;
            }
        }
        return n ? sum / n : 0.0;
    }

    /// Returns a copy with one edge's gamma replaced (used by samplers).
    DetectionGraph with_gamma(std::size_t edge_index, double gamma) const {
        DetectionGraph g(*this);
        g.edges_[edge_index].gamma = gamma;
        return g;
    }

private:
    std::vector<Detector> detectors_;
    std::map<std::string, std::size_t> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> in_;   // node -> edge indices
    std::vector<std::vector<std::size_t>> out_;  // node -> edge indices

    bool reachable(std::size_t from, std::size_t to) const {
        if (from == to) return true;
        std::vector<std::size_t> stack{from};
        std::vector<bool> seen(detectors_.size(), false);
        seen[from] = true;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t ei : out_[u]) {
                std::size_t v = index_of(edges_[ei].to);
                if (v == to) return true;
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        return false;
    }
};

/// The bundled reference instance: one detector per default-taxonomy node,
/// conditioning edges following the tree (10 edges, 8 AND / 2 NOT), file
/// gammas at 1.0. This is the instance all pinned experiments run against.
inline DetectionGraph default_graph() {
    TaxonomyTree tax = default_taxonomy();
    DetectionGraph g;
    tax.for_each([&](const TaxonomyPath& path, const std::string& label) {
        Detector d;
        d.id = label;
        d.location = path;
        g.add_detector(std::move(d));
    });
    auto and_edge = [&](const std::string& a, const std::string& b) {
        g.add_edge(Edge{a, b, GateSign::And, 1.0});
    };
    auto not_edge = [&](const std::string& a, const std::string& b) {
        g.add_edge(Edge{a, b, GateSign::Not, 1.0});
    };
    and_edge("ROOT", "A");
    and_edge("ROOT", "B");
    and_edge("A", "C");
    and_edge("A", "D");
    not_edge("B", "E");
    and_edge("C", "F");
    not_edge("C", "G");
    and_edge("D", "H");
    and_edge("F", "I");
    and_edge("H", "J");
    return g;
}

}  // namespace detnet
