#include "modelkit/queries.hpp"

#include <unordered_set>

namespace modelkit {

GraphView GraphView::from_model(const Model& m) {
    GraphView g;
    for (const auto& o : m.objects) {
        if (o.class_name == "Node") {
            g.nodes.push_back(o.id);
        } else if (o.class_name == "Edge") {
            EdgeView e;
            e.id = o.id;
            if (auto it = o.refs.find("src"); it != o.refs.end() && !it->second.empty())
                e.src = it->second.front();
            if (auto it = o.refs.find("trg"); it != o.refs.end() && !it->second.empty())
                e.trg = it->second.front();
            g.edges.push_back(std::move(e));
        }
    }
    return g;
}

ResultValue count_nodes(const GraphView& g) {
    return ResultValue::of_int(static_cast<long long>(g.nodes.size()));
}

ResultValue count_looping_edges(const GraphView& g) {
    long long n = 0;
    for (const auto& e : g.edges)
        if (e.src && e.trg && *e.src == *e.trg) ++n;
    return ResultValue::of_int(n);
}

ResultValue count_isolated_nodes(const GraphView& g) {
    std::unordered_set<std::string> touched;
    for (const auto& e : g.edges) {
        if (e.src) touched.insert(*e.src);
        if (e.trg) touched.insert(*e.trg);
    }
    long long n = 0;
    for (const auto& node : g.nodes)
        if (!touched.count(node)) ++n;
    return ResultValue::of_int(n);
}

ResultValue count_circles(const GraphView& g) {
    long long n = 0;
    for (const auto& e1 : g.edges) {
        if (!e1.src || !e1.trg) continue;
        for (const auto& e2 : g.edges) {
            if (!e2.src || !e2.trg || *e2.src != *e1.trg) continue;
            for (const auto& e3 : g.edges) {
                if (!e3.src || !e3.trg) continue;
                if (*e3.src != *e2.trg || *e3.trg != *e1.src) continue;
                const auto& n1 = *e1.src;
                const auto& n2 = *e2.src;
                const auto& n3 = *e3.src;
                if (n1 != n2 && n2 != n3 && n1 != n3) ++n;
            }
        }
    }
    return ResultValue::of_int(n);
}

ResultValue count_dangling_edges(const GraphView& g) {
    long long n = 0;
    for (const auto& e : g.edges)
        if (!e.src || !e.trg) ++n;
    return ResultValue::of_int(n);
}

} // namespace modelkit
