#include "modelkit/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace modelkit {

const AttributeDef* ClassDef::find_attribute(std::string_view attr_name) const {
    for (const auto& a : attributes)
        if (a.name == attr_name) return &a;
    return nullptr;
}

const ReferenceDef* ClassDef::find_reference(std::string_view ref_name) const {
    for (const auto& r : references)
        if (r.name == ref_name) return &r;
    return nullptr;
}

const ClassDef* Metamodel::find_class(std::string_view class_name) const {
    for (const auto& c : classes)
        if (c.name == class_name) return &c;
    return nullptr;
}

const MObject* Model::find(const ObjectId& id) const {
    for (const auto& o : objects)
        if (o.id == id) return &o;
    return nullptr;
}

MObject* Model::find(const ObjectId& id) {
    for (auto& o : objects)
        if (o.id == id) return &o;
    return nullptr;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::UnknownClass: return "UnknownClass";
    case ViolationKind::UnknownFeature: return "UnknownFeature";
    case ViolationKind::MultiplicityLower: return "MultiplicityLower";
    case ViolationKind::MultiplicityUpper: return "MultiplicityUpper";
    case ViolationKind::DanglingId: return "DanglingId";
    case ViolationKind::ContainmentCycle: return "ContainmentCycle";
    case ViolationKind::ContainmentShared: return "ContainmentShared";
    case ViolationKind::NonUniqueRef: return "NonUniqueRef";
    }
    return "Unknown";
}

Model new_model(std::string metamodel_name) {
    Model m;
    m.metamodel_name = std::move(metamodel_name);
    return m;
}

void create_object(Model& m, ObjectId id, std::string class_name) {
    if (m.find(id) != nullptr)
        throw DuplicateIdError("duplicate object id '" + id + "'");
    MObject o;
    o.id = std::move(id);
    o.class_name = std::move(class_name);
    m.objects.push_back(std::move(o));
}

void set_attr(Model& m, const ObjectId& id, const std::string& attr, std::string value) {
    MObject* o = m.find(id);
    if (o == nullptr)
        throw UnknownObjectError("unknown object id '" + id + "'");
    o->attrs[attr] = std::move(value);
}

void set_refs(Model& m, const ObjectId& id, const std::string& ref, std::vector<ObjectId> targets) {
    MObject* o = m.find(id);
    if (o == nullptr)
        throw UnknownObjectError("unknown object id '" + id + "'");
    if (targets.empty())
        o->refs.erase(ref);
    else
        o->refs[ref] = std::move(targets);
}

void delete_object(Model& m, const ObjectId& id_ref) {
    // callers may pass an id owned by the object being erased
    ObjectId id = id_ref;
    if (m.find(id) == nullptr)
        throw UnknownObjectError("unknown object id '" + id + "'");
    std::erase_if(m.objects, [&](const MObject& o) { return o.id == id; });
    std::erase(m.roots, id);
    for (auto& o : m.objects) {
        for (auto it = o.refs.begin(); it != o.refs.end();) {
            std::erase(it->second, id);
            it = it->second.empty() ? o.refs.erase(it) : std::next(it);
        }
    }
}

std::vector<Violation> validate(const Model& m, const Metamodel& mm) {
    if (mm.name != m.metamodel_name)
        throw MetamodelMismatchError("model is tagged '" + m.metamodel_name +
                                     "' but metamodel is '" + mm.name + "'");

    std::vector<Violation> out;
    auto add = [&](std::optional<ObjectId> id, ViolationKind kind, std::string detail) {
        out.push_back({std::move(id), kind, std::move(detail)});
    };

    std::unordered_set<std::string> ids;
    for (const auto& o : m.objects) ids.insert(o.id);

    for (const auto& root : m.roots)
        if (!ids.count(root))
            add(std::nullopt, ViolationKind::DanglingId, "root id '" + root + "' does not exist");

    // containment in-degree, counted while walking declared references
    std::unordered_map<std::string, int> contained_count;

    for (const auto& o : m.objects) {
        const ClassDef* cls = mm.find_class(o.class_name);
        if (cls == nullptr) {
            add(o.id, ViolationKind::UnknownClass, "class '" + o.class_name + "' is not declared");
            continue;
        }
        for (const auto& [attr, value] : o.attrs) {
            (void)value;
            if (cls->find_attribute(attr) == nullptr)
                add(o.id, ViolationKind::UnknownFeature,
                    "attribute '" + attr + "' is not declared on '" + cls->name + "'");
        }
        for (const auto& [ref, targets] : o.refs) {
            (void)targets;
            if (cls->find_reference(ref) == nullptr)
                add(o.id, ViolationKind::UnknownFeature,
                    "reference '" + ref + "' is not declared on '" + cls->name + "'");
        }
        for (const auto& rd : cls->references) {
            auto it = o.refs.find(rd.name);
            const std::vector<ObjectId> empty;
            const auto& targets = it != o.refs.end() ? it->second : empty;
            for (const auto& t : targets) {
                if (!ids.count(t)) {
                    add(o.id, ViolationKind::DanglingId,
                        "reference '" + rd.name + "' cites nonexistent id '" + t + "'");
                } else if (rd.containment) {
                    contained_count[t]++;
                }
            }
            auto n = static_cast<int>(targets.size());
            if (n < rd.lower)
                add(o.id, ViolationKind::MultiplicityLower,
                    "reference '" + rd.name + "' has " + std::to_string(n) +
                        " targets, lower bound is " + std::to_string(rd.lower));
            if (rd.upper != kUnbounded && n > rd.upper)
                add(o.id, ViolationKind::MultiplicityUpper,
                    "reference '" + rd.name + "' has " + std::to_string(n) +
                        " targets, upper bound is " + std::to_string(rd.upper));
            if (rd.unique) {
                std::set<ObjectId> distinct(targets.begin(), targets.end());
                if (distinct.size() != targets.size())
                    add(o.id, ViolationKind::NonUniqueRef,
                        "unique reference '" + rd.name + "' holds duplicate targets");
            }
        }
    }

    std::unordered_set<std::string> root_set(m.roots.begin(), m.roots.end());
    for (const auto& o : m.objects) {
        int indeg = 0;
        if (auto it = contained_count.find(o.id); it != contained_count.end()) indeg = it->second;
        if (root_set.count(o.id)) {
            if (indeg > 0)
                add(o.id, ViolationKind::ContainmentShared, "root object is contained");
        } else if (indeg > 1) {
            add(o.id, ViolationKind::ContainmentShared,
                "object is contained " + std::to_string(indeg) + " times");
        }
    }

    // forest check: every non-root must be reachable from a root via containment
    std::unordered_set<std::string> reachable(root_set.begin(), root_set.end());
    std::vector<const MObject*> frontier;
    for (const auto& o : m.objects)
        if (root_set.count(o.id)) frontier.push_back(&o);
    while (!frontier.empty()) {
        const MObject* o = frontier.back();
        frontier.pop_back();
        const ClassDef* cls = mm.find_class(o->class_name);
        if (cls == nullptr) continue;
        for (const auto& [ref, targets] : o->refs) {
            const ReferenceDef* rd = cls->find_reference(ref);
            if (rd == nullptr || !rd->containment) continue;
            for (const auto& t : targets) {
                if (reachable.insert(t).second)
                    if (const MObject* child = m.find(t)) frontier.push_back(child);
            }
        }
    }
    for (const auto& o : m.objects)
        if (!reachable.count(o.id))
            add(o.id, ViolationKind::ContainmentCycle,
                "object is not reachable from any root via containment");

    return out;
}

namespace {

// Mapped reference slots of a must equal b's, order-sensitively.
bool refs_match(const Model& a, const Model& b, const std::vector<int>& mapping) {
    for (size_t i = 0; i < a.objects.size(); ++i) {
        const MObject& oa = a.objects[i];
        const MObject& ob = b.objects[static_cast<size_t>(mapping[i])];
        if (oa.refs.size() != ob.refs.size()) return false;
        for (const auto& [ref, targets] : oa.refs) {
            auto it = ob.refs.find(ref);
            if (it == ob.refs.end() || it->second.size() != targets.size()) return false;
            for (size_t k = 0; k < targets.size(); ++k) {
                const MObject* ta = a.find(targets[k]);
                if (ta == nullptr) return false;
                auto idx = static_cast<size_t>(ta - a.objects.data());
                if (b.objects[static_cast<size_t>(mapping[idx])].id != it->second[k]) return false;
            }
        }
    }
    return true;
}

bool extend(const Model& a, const Model& b, const std::vector<bool>& a_root,
            const std::vector<bool>& b_root, std::vector<int>& mapping,
            std::vector<bool>& used, size_t i) {
    if (i == a.objects.size()) return refs_match(a, b, mapping);
    const MObject& oa = a.objects[i];
    for (size_t j = 0; j < b.objects.size(); ++j) {
        if (used[j]) continue;
        const MObject& ob = b.objects[j];
        if (ob.class_name != oa.class_name || ob.attrs != oa.attrs) continue;
        if (a_root[i] != b_root[j]) continue;
        mapping[i] = static_cast<int>(j);
        used[j] = true;
        if (extend(a, b, a_root, b_root, mapping, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

} // namespace

bool model_equivalent(const Model& a, const Model& b) {
    if (a.metamodel_name != b.metamodel_name) return false;
    if (a.objects.size() != b.objects.size()) return false;
    if (a.roots.size() != b.roots.size()) return false;

    auto root_flags = [](const Model& m) {
        std::unordered_set<std::string> roots(m.roots.begin(), m.roots.end());
        std::vector<bool> flags(m.objects.size());
        for (size_t i = 0; i < m.objects.size(); ++i) flags[i] = roots.count(m.objects[i].id) > 0;
        return flags;
    };
    std::vector<bool> a_root = root_flags(a);
    std::vector<bool> b_root = root_flags(b);

    std::vector<int> mapping(a.objects.size(), -1);
    std::vector<bool> used(b.objects.size(), false);
    return extend(a, b, a_root, b_root, mapping, used, 0);
}

} // namespace modelkit
