#pragma once

#include "modelkit/model.hpp"
#include "modelkit/queries.hpp"

namespace modelkit {

Model task_hello_constant();
Model task_helloext_constant();

// "<message text> <person name>!" from a helloext model with one Greeting root.
// Throws MissingFeatureError when the message, person or their attributes are unset.
ResultValue task_greeting_text(const Model& m);

// Swaps src and trg of every edge. Throws DanglingEdgeError on unset ends.
Model task_reverse_edges(Model m);

// graph1 -> graph2: node name becomes text, every edge gets text "".
Model task_migrate_to_graph2(const Model& m);

// graph1 -> graph3: edge objects become linksTo references; duplicates collapse.
Model task_migrate_to_graph3(const Model& m);

// Deletes the node named "n1" if present; its incident edges stay, dangling.
Model task_delete_n1(Model m);

// Deletes the node named "n1" and every edge incident to it.
Model task_delete_n1_incident(Model m);

// Inserts one new edge per ordered pair in R^2 \ R, where R is the input edge
// relation. Input edges are untouched; new edges get deterministic fresh ids.
Model task_insert_transitive(Model m);

} // namespace modelkit
