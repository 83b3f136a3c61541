#pragma once

#include <map>
#include <string>

#include "modelkit/model.hpp"

namespace modelkit {

// The six hard-coded metamodels: hello, helloext, graph1, graph2, graph3, result.
struct MetamodelRegistry {
    std::map<std::string, Metamodel> entries;
};

const MetamodelRegistry& registry();

// Single Greeting root with text "Hello World".
Model hello_instance();

// Greeting root containing a GreetingMessage ("Hello") and a Person ("TTC Participants").
Model helloext_instance();

} // namespace modelkit
