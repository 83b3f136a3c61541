#include "modelkit/codec.hpp"

#include <unordered_set>

#include <json.hpp>

namespace modelkit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError("at " + path + ": " + what);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool known = false;
        for (const char* k : allowed)
            if (key == k) known = true;
        if (!known) fail(path, "unknown key '" + key + "'");
    }
}

std::string require_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

std::vector<ObjectId> parse_id_list(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of ids");
    std::vector<ObjectId> ids;
    for (size_t i = 0; i < j.size(); ++i)
        ids.push_back(require_string(j[i], path + "[" + std::to_string(i) + "]"));
    return ids;
}

} // namespace

Model parse_model(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) fail("$", "top-level value must be an object");
    check_keys(doc, "$", {"metamodel", "roots", "objects"});
    if (!doc.contains("metamodel")) fail("$", "missing key 'metamodel'");
    if (!doc.contains("objects")) fail("$", "missing key 'objects'");

    Model m = new_model(require_string(doc["metamodel"], "$.metamodel"));
    if (doc.contains("roots")) m.roots = parse_id_list(doc["roots"], "$.roots");

    const json& objects = doc["objects"];
    if (!objects.is_array()) fail("$.objects", "expected an array");
    for (size_t i = 0; i < objects.size(); ++i) {
        const std::string path = "$.objects[" + std::to_string(i) + "]";
        const json& entry = objects[i];
        if (!entry.is_object()) fail(path, "expected an object");
        check_keys(entry, path, {"id", "class", "attrs", "refs"});
        if (!entry.contains("id")) fail(path, "missing key 'id'");
        if (!entry.contains("class")) fail(path, "missing key 'class'");

        ObjectId id = require_string(entry["id"], path + ".id");
        if (m.find(id) != nullptr) fail(path, "duplicate object id '" + id + "'");
        create_object(m, id, require_string(entry["class"], path + ".class"));

        if (entry.contains("attrs")) {
            const json& attrs = entry["attrs"];
            if (!attrs.is_object()) fail(path + ".attrs", "expected an object");
            for (const auto& [key, value] : attrs.items())
                set_attr(m, id, key, require_string(value, path + ".attrs." + key));
        }
        if (entry.contains("refs")) {
            const json& refs = entry["refs"];
            if (!refs.is_object()) fail(path + ".refs", "expected an object");
            for (const auto& [key, value] : refs.items())
                set_refs(m, id, key, parse_id_list(value, path + ".refs." + key));
        }
    }

    // syntactic resolvability only; conformance is validate's job
    std::unordered_set<std::string> ids;
    for (const auto& o : m.objects) ids.insert(o.id);
    for (const auto& root : m.roots)
        if (!ids.count(root)) fail("$.roots", "dangling id '" + root + "'");
    for (const auto& o : m.objects)
        for (const auto& [ref, targets] : o.refs)
            for (const auto& t : targets)
                if (!ids.count(t))
                    fail("$.objects(id=" + o.id + ").refs." + ref, "dangling id '" + t + "'");

    return m;
}

std::string serialize_model(const Model& m) {
    ordered_json doc;
    doc["metamodel"] = m.metamodel_name;
    doc["roots"] = m.roots;
    ordered_json objects = ordered_json::array();
    for (const auto& o : m.objects) {
        ordered_json entry;
        entry["id"] = o.id;
        entry["class"] = o.class_name;
        if (!o.attrs.empty()) {
            ordered_json attrs;
            for (const auto& [key, value] : o.attrs) attrs[key] = value;
            entry["attrs"] = std::move(attrs);
        }
        ordered_json refs;
        for (const auto& [key, targets] : o.refs)
            if (!targets.empty()) refs[key] = targets;
        if (!refs.is_null()) entry["refs"] = std::move(refs);
        objects.push_back(std::move(entry));
    }
    doc["objects"] = std::move(objects);
    return doc.dump(2) + "\n";
}

} // namespace modelkit
