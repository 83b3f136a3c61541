#include "modelkit/builtins.hpp"

namespace modelkit {

namespace {

ReferenceDef cont(std::string name, std::string target, int lower, int upper) {
    return {std::move(name), std::move(target), true, lower, upper, false};
}

ReferenceDef xref(std::string name, std::string target, int lower, int upper, bool unique = false) {
    return {std::move(name), std::move(target), false, lower, upper, unique};
}

MetamodelRegistry build_registry() {
    MetamodelRegistry reg;

    reg.entries["hello"] = Metamodel{
        "hello",
        {
            ClassDef{"Greeting", {{"text"}}, {}},
        }};

    reg.entries["helloext"] = Metamodel{
        "helloext",
        {
            ClassDef{"Greeting",
                     {},
                     {cont("greetingMessage", "GreetingMessage", 1, 1),
                      cont("person", "Person", 1, 1)}},
            ClassDef{"GreetingMessage", {{"text"}}, {}},
            ClassDef{"Person", {{"name"}}, {}},
        }};

    reg.entries["graph1"] = Metamodel{
        "graph1",
        {
            ClassDef{"Graph",
                     {},
                     {cont("nodes", "Node", 0, kUnbounded), cont("edges", "Edge", 0, kUnbounded)}},
            ClassDef{"Node", {{"name"}}, {}},
            ClassDef{"Edge", {}, {xref("src", "Node", 0, 1), xref("trg", "Node", 0, 1)}},
        }};

    reg.entries["graph2"] = Metamodel{
        "graph2",
        {
            ClassDef{"Graph",
                     {},
                     {cont("nodes", "Node", 0, kUnbounded), cont("edges", "Edge", 0, kUnbounded)}},
            ClassDef{"Node", {{"text"}}, {}},
            ClassDef{"Edge", {{"text"}}, {xref("src", "Node", 0, 1), xref("trg", "Node", 0, 1)}},
        }};

    reg.entries["graph3"] = Metamodel{
        "graph3",
        {
            ClassDef{"Graph", {}, {cont("nodes", "Node", 0, kUnbounded)}},
            ClassDef{"Node", {{"text"}}, {xref("linksTo", "Node", 0, kUnbounded, true)}},
        }};

    // IntResult stores its value as a decimal string; the CLI prints it as a number.
    reg.entries["result"] = Metamodel{
        "result",
        {
            ClassDef{"StringResult", {{"result"}}, {}},
            ClassDef{"IntResult", {{"result"}}, {}},
        }};

    return reg;
}

} // namespace

const MetamodelRegistry& registry() {
    static const MetamodelRegistry reg = build_registry();
    return reg;
}

Model hello_instance() {
    Model m = new_model("hello");
    create_object(m, "greeting", "Greeting");
    set_attr(m, "greeting", "text", "Hello World");
    m.roots = {"greeting"};
    return m;
}

Model helloext_instance() {
    Model m = new_model("helloext");
    create_object(m, "greeting", "Greeting");
    create_object(m, "message", "GreetingMessage");
    create_object(m, "person", "Person");
    set_attr(m, "message", "text", "Hello");
    set_attr(m, "person", "name", "TTC Participants");
    set_refs(m, "greeting", "greetingMessage", {"message"});
    set_refs(m, "greeting", "person", {"person"});
    m.roots = {"greeting"};
    return m;
}

} // namespace modelkit
