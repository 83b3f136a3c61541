#include "modelkit/transforms.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "modelkit/builtins.hpp"

namespace modelkit {

namespace {

void require_no_dangling(const GraphView& g) {
    for (const auto& e : g.edges)
        if (!e.src || !e.trg)
            throw DanglingEdgeError("edge '" + e.id + "' has an unset src or trg");
}

std::vector<ObjectId> ref_list(const MObject& o, const std::string& ref) {
    auto it = o.refs.find(ref);
    return it != o.refs.end() ? it->second : std::vector<ObjectId>{};
}

const MObject* find_node_named_n1(const Model& m) {
    for (const auto& o : m.objects) {
        if (o.class_name != "Node") continue;
        auto it = o.attrs.find("name");
        if (it != o.attrs.end() && it->second == "n1") return &o;
    }
    return nullptr;
}

} // namespace

Model task_hello_constant() {
    return hello_instance();
}

Model task_helloext_constant() {
    return helloext_instance();
}

ResultValue task_greeting_text(const Model& m) {
    const MObject* greeting = nullptr;
    for (const auto& root : m.roots)
        if (const MObject* o = m.find(root); o != nullptr && o->class_name == "Greeting")
            greeting = o;
    if (greeting == nullptr)
        throw MissingFeatureError("model has no Greeting root");

    auto follow = [&](const char* ref) -> const MObject* {
        auto targets = ref_list(*greeting, ref);
        if (targets.empty())
            throw MissingFeatureError(std::string("Greeting has no '") + ref + "'");
        return m.find(targets.front());
    };
    const MObject* message = follow("greetingMessage");
    const MObject* person = follow("person");

    auto text_it = message->attrs.find("text");
    if (text_it == message->attrs.end())
        throw MissingFeatureError("GreetingMessage has no text");
    auto name_it = person->attrs.find("name");
    if (name_it == person->attrs.end())
        throw MissingFeatureError("Person has no name");

    return ResultValue::of_string(text_it->second + " " + name_it->second + "!");
}

Model task_reverse_edges(Model m) {
    require_no_dangling(GraphView::from_model(m));
    for (auto& o : m.objects) {
        if (o.class_name != "Edge") continue;
        std::swap(o.refs["src"], o.refs["trg"]);
    }
    return m;
}

Model task_migrate_to_graph2(const Model& m) {
    require_no_dangling(GraphView::from_model(m));
    Model out = new_model("graph2");
    for (const auto& o : m.objects) {
        create_object(out, o.id, o.class_name);
        if (o.class_name == "Graph") {
            set_refs(out, o.id, "nodes", ref_list(o, "nodes"));
            set_refs(out, o.id, "edges", ref_list(o, "edges"));
        } else if (o.class_name == "Node") {
            if (auto it = o.attrs.find("name"); it != o.attrs.end())
                set_attr(out, o.id, "text", it->second);
        } else if (o.class_name == "Edge") {
            set_attr(out, o.id, "text", "");
            set_refs(out, o.id, "src", ref_list(o, "src"));
            set_refs(out, o.id, "trg", ref_list(o, "trg"));
        }
    }
    out.roots = m.roots;
    return out;
}

Model task_migrate_to_graph3(const Model& m) {
    GraphView g = GraphView::from_model(m);
    require_no_dangling(g);
    Model out = new_model("graph3");
    for (const auto& o : m.objects) {
        if (o.class_name == "Graph") {
            create_object(out, o.id, "Graph");
            set_refs(out, o.id, "nodes", ref_list(o, "nodes"));
        } else if (o.class_name == "Node") {
            create_object(out, o.id, "Node");
            if (auto it = o.attrs.find("name"); it != o.attrs.end())
                set_attr(out, o.id, "text", it->second);
        }
        // edge objects do not exist in graph3
    }
    for (const auto& e : g.edges) {
        MObject* src = out.find(*e.src);
        auto& links = src->refs["linksTo"];
        if (std::find(links.begin(), links.end(), *e.trg) == links.end())
            links.push_back(*e.trg);
    }
    out.roots = m.roots;
    return out;
}

Model task_delete_n1(Model m) {
    if (const MObject* n1 = find_node_named_n1(m))
        delete_object(m, n1->id);
    return m;
}

Model task_delete_n1_incident(Model m) {
    const MObject* n1 = find_node_named_n1(m);
    if (n1 == nullptr) return m;
    ObjectId n1_id = n1->id;

    std::vector<ObjectId> incident;
    for (const auto& o : m.objects) {
        if (o.class_name != "Edge") continue;
        auto src = ref_list(o, "src");
        auto trg = ref_list(o, "trg");
        bool hits = (!src.empty() && src.front() == n1_id) || (!trg.empty() && trg.front() == n1_id);
        if (hits) incident.push_back(o.id);
    }
    for (const auto& e : incident) delete_object(m, e);
    delete_object(m, n1_id);
    return m;
}

Model task_insert_transitive(Model m) {
    GraphView g = GraphView::from_model(m);
    require_no_dangling(g);

    std::set<std::pair<ObjectId, ObjectId>> relation;
    for (const auto& e : g.edges) relation.emplace(*e.src, *e.trg);

    // new pairs in first-witness order; only original edges generate witnesses
    std::vector<std::pair<ObjectId, ObjectId>> to_insert;
    std::set<std::pair<ObjectId, ObjectId>> seen;
    for (const auto& e1 : g.edges) {
        for (const auto& e2 : g.edges) {
            if (*e2.src != *e1.trg) continue;
            std::pair<ObjectId, ObjectId> pair{*e1.src, *e2.trg};
            if (relation.count(pair) || !seen.insert(pair).second) continue;
            to_insert.push_back(std::move(pair));
        }
    }
    if (to_insert.empty()) return m;

    int counter = 0;
    for (const auto& [src, trg] : to_insert) {
        ObjectId id;
        do {
            id = "t" + std::to_string(++counter);
        } while (m.find(id) != nullptr);
        create_object(m, id, "Edge");
        set_refs(m, id, "src", {src});
        set_refs(m, id, "trg", {trg});
        for (auto& o : m.objects)
            if (o.class_name == "Graph") {
                o.refs["edges"].push_back(id);
                break;
            }
    }
    return m;
}

} // namespace modelkit
