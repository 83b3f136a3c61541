#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modelkit/model.hpp"

namespace modelkit {

// Wrapper for primitive task outputs: a string or an integer.
struct ResultValue {
    enum class Kind { Int, String };

    Kind kind;
    long long int_value = 0;
    std::string string_value;

    static ResultValue of_int(long long v) { return {Kind::Int, v, {}}; }
    static ResultValue of_string(std::string v) { return {Kind::String, 0, std::move(v)}; }

    bool operator==(const ResultValue&) const = default;
};

struct EdgeView {
    ObjectId id;
    std::optional<ObjectId> src;
    std::optional<ObjectId> trg;
};

// Flat read-only view of a conforming graph1 model.
struct GraphView {
    std::vector<ObjectId> nodes;
    std::vector<EdgeView> edges;

    static GraphView from_model(const Model& m);
};

ResultValue count_nodes(const GraphView& g);

// Edges whose source and target are both set and coincide.
ResultValue count_looping_edges(const GraphView& g);

// Nodes appearing in no edge's src slot and no edge's trg slot.
ResultValue count_isolated_nodes(const GraphView& g);

// Matches of the three-node circle pattern: pairwise distinct nodes n1,n2,n3
// and edge objects e1:n1->n2, e2:n2->n3, e3:n3->n1. Each circle matches three
// times (rotations); parallel edges yield additional matches.
ResultValue count_circles(const GraphView& g);

// Edges with src or trg unset; an edge with both unset counts once.
ResultValue count_dangling_edges(const GraphView& g);

} // namespace modelkit
