#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modelkit {

using ObjectId = std::string;

// Errors thrown by kernel mutation primitives and task preconditions.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateIdError : public ModelError {
public:
    using ModelError::ModelError;
};

class UnknownObjectError : public ModelError {
public:
    using ModelError::ModelError;
};

class MetamodelMismatchError : public ModelError {
public:
    using ModelError::ModelError;
};

class MissingFeatureError : public ModelError {
public:
    using ModelError::ModelError;
};

class DanglingEdgeError : public ModelError {
public:
    using ModelError::ModelError;
};

enum class AttrType { String };

struct AttributeDef {
    std::string name;
    AttrType type = AttrType::String;
};

// upper bound of an unbounded (0..*) reference
inline constexpr int kUnbounded = -1;

struct ReferenceDef {
    std::string name;
    std::string target_class;
    bool containment = false;
    int lower = 0;
    int upper = kUnbounded;
    bool unique = false;
};

struct ClassDef {
    std::string name;
    std::vector<AttributeDef> attributes;
    std::vector<ReferenceDef> references;

    const AttributeDef* find_attribute(std::string_view attr_name) const;
    const ReferenceDef* find_reference(std::string_view ref_name) const;
};

struct Metamodel {
    std::string name;
    std::vector<ClassDef> classes;

    const ClassDef* find_class(std::string_view class_name) const;
};

// One instance object. Absent attrs key = unset; absent refs key = empty slot.
struct MObject {
    ObjectId id;
    std::string class_name;
    std::map<std::string, std::string> attrs;
    std::map<std::string, std::vector<ObjectId>> refs;

    bool operator==(const MObject&) const = default;
};

// An instance model: objects in insertion order plus the root objects.
struct Model {
    std::string metamodel_name;
    std::vector<MObject> objects;
    std::vector<ObjectId> roots;

    const MObject* find(const ObjectId& id) const;
    MObject* find(const ObjectId& id);

    bool operator==(const Model&) const = default;
};

enum class ViolationKind {
    UnknownClass,
    UnknownFeature,
    MultiplicityLower,
    MultiplicityUpper,
    DanglingId,
    ContainmentCycle,
    ContainmentShared,
    NonUniqueRef,
};

std::string to_string(ViolationKind kind);

struct Violation {
    std::optional<ObjectId> object_id;
    ViolationKind kind;
    std::string detail;
};

Model new_model(std::string metamodel_name);

// Throws DuplicateIdError if the id is taken. Does not touch roots.
void create_object(Model& m, ObjectId id, std::string class_name);

// Overwrites any previous value. Throws UnknownObjectError.
void set_attr(Model& m, const ObjectId& id, const std::string& attr, std::string value);

// Replaces the slot; an empty target list clears it. Throws UnknownObjectError.
void set_refs(Model& m, const ObjectId& id, const std::string& ref, std::vector<ObjectId> targets);

// Removes the object from objects and roots and filters its id out of every
// reference list. Contained objects are not cascaded. Throws UnknownObjectError.
void delete_object(Model& m, const ObjectId& id);

// Full conformance check; empty result means the model conforms.
// Throws MetamodelMismatchError when mm.name != m.metamodel_name.
std::vector<Violation> validate(const Model& m, const Metamodel& mm);

// True iff a bijection between object ids exists preserving class names,
// attribute slots, reference slots (order-sensitive) and root status.
// Backtracking search; intended for small (test-scale) models.
bool model_equivalent(const Model& a, const Model& b);

} // namespace modelkit
