#pragma once

#include <stdexcept>
#include <string>

#include "modelkit/model.hpp"

namespace modelkit {

// Malformed document, duplicate id, unresolvable id, unknown key, bad UTF-8.
// The message carries a position or JSON path.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntactic checks only (well-formed JSON, ids resolvable, no duplicate ids);
// conformance is a separate validate step.
Model parse_model(const std::string& bytes);

// Deterministic canonical form: objects in insertion order, attr/ref keys
// sorted, empty slots omitted, 2-space indentation, trailing newline.
std::string serialize_model(const Model& m);

} // namespace modelkit
