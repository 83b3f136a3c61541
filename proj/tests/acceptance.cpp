// End-to-end acceptance suite. Prints one pass/fail line per criterion and
// exits nonzero if any criterion fails.

#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "modelkit/builtins.hpp"
#include "modelkit/codec.hpp"
#include "modelkit/queries.hpp"
#include "modelkit/transforms.hpp"
#include "support/oracles.hpp"
#include "support/random_graph.hpp"
#include "support/subprocess.hpp"

using namespace modelkit;
using namespace modelkit::testsupport;

namespace {

const std::string kCli{MODELCLI_PATH};
const std::filesystem::path kFixtures{FIXTURES_DIR};

int failures = 0;

void check(bool ok, const std::string& detail) {
    if (!ok) {
        ++failures;
        std::cout << "    failed: " << detail << "\n";
    }
}

void criterion(int number, const std::string& title, const std::function<void()>& body) {
    int before = failures;
    try {
        body();
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "    exception: " << e.what() << "\n";
    }
    std::cout << (failures == before ? "PASS" : "FAIL") << "  criterion " << number << ": " << title
              << "\n";
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

Model load(const char* name) { return parse_model(slurp(kFixtures / name)); }

const Metamodel& mm(const char* name) { return registry().entries.at(name); }

void constant_transformations() {
    Model hello = task_hello_constant();
    check(model_equivalent(hello, load("hello-golden.model.json")), "hello golden mismatch");
    check(validate(hello, mm("hello")).empty(), "hello violations");
    Model ext = task_helloext_constant();
    check(model_equivalent(ext, load("helloext-golden.model.json")), "helloext golden mismatch");
    check(validate(ext, mm("helloext")).empty(), "helloext violations");
}

void model_to_text() {
    RunResult r =
        run_command(kCli + " run greeting-text --input " + fixture("helloext-golden.model.json"));
    check(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
    check(r.out == "Hello TTC Participants!\n", "stdout was '" + r.out + "'");
}

void query_oracles() {
    std::mt19937 rng(1001);
    for (int i = 0; i < 200; ++i) {
        Model m = random_graph1(rng); // dangling edges included
        GraphView g = GraphView::from_model(m);
        check(count_nodes(g).int_value == oracle_count_nodes(m), "count-nodes");
        check(count_looping_edges(g).int_value == oracle_count_loops(m), "count-loops");
        check(count_isolated_nodes(g).int_value == oracle_count_isolated(m), "count-isolated");
        check(count_circles(g).int_value == oracle_count_circles(m), "count-circles");
        check(count_dangling_edges(g).int_value == oracle_count_dangling(m), "count-dangling");
    }
}

void triangle_law() {
    std::mt19937 rng(1002);
    GraphOptions opts;
    opts.allow_parallel = false;
    for (int i = 0; i < 100; ++i) {
        Model m = random_graph1(rng, opts);
        GraphView g = GraphView::from_model(m);
        check(count_circles(g).int_value == 3 * oracle_distinct_3cycles(m),
              "circles != 3 * distinct 3-cycles");
    }
}

void reverse_involution() {
    std::mt19937 rng(1003);
    GraphOptions opts;
    opts.allow_dangling = false;
    for (int i = 0; i < 100; ++i) {
        Model m = random_graph1(rng, opts);
        Model r = task_reverse_edges(m);
        check(model_equivalent(task_reverse_edges(r), m), "not an involution");
        check(oracle_count_nodes(r) == oracle_count_nodes(m), "node count changed");
        check(scan_edges(r).size() == scan_edges(m).size(), "edge count changed");
        check(oracle_count_loops(r) == oracle_count_loops(m), "loop count changed");
        check(oracle_count_isolated(r) == oracle_count_isolated(m), "isolated count changed");
    }
}

void migration_fidelity() {
    std::mt19937 rng(1004);
    GraphOptions opts;
    opts.allow_dangling = false;
    for (int i = 0; i < 100; ++i) {
        Model m = random_graph1(rng, opts);
        Model g2 = task_migrate_to_graph2(m);
        check(validate(g2, mm("graph2")).empty(), "graph2 violations");
        check(scan_nodes(g2).size() == scan_nodes(m).size(), "graph2 node count");
        check(scan_edges(g2).size() == scan_edges(m).size(), "graph2 edge count");
        for (const auto& node : scan_nodes(m))
            check(g2.find(node)->attrs.at("text") == m.find(node)->attrs.at("name"),
                  "text != former name");
        for (const auto& e : scan_edges(g2))
            check(g2.find(e.id)->attrs.at("text") == "", "edge text not empty");

        Model g3 = task_migrate_to_graph3(m);
        check(validate(g3, mm("graph3")).empty(), "graph3 violations");
        std::set<std::pair<ObjectId, ObjectId>> links;
        for (const auto& o : g3.objects)
            if (o.class_name == "Node")
                if (auto it = o.refs.find("linksTo"); it != o.refs.end())
                    for (const auto& t : it->second) links.insert({o.id, t});
        check(links == edge_pair_set(m), "linksTo pair set mismatch");
    }
    // parallel edges collapse to one link
    Model dup = new_model("graph1");
    create_object(dup, "g", "Graph");
    create_object(dup, "a", "Node");
    create_object(dup, "b", "Node");
    create_object(dup, "e1", "Edge");
    create_object(dup, "e2", "Edge");
    set_attr(dup, "a", "name", "a");
    set_attr(dup, "b", "name", "b");
    for (const char* e : {"e1", "e2"}) {
        set_refs(dup, e, "src", {"a"});
        set_refs(dup, e, "trg", {"b"});
    }
    set_refs(dup, "g", "nodes", {"a", "b"});
    set_refs(dup, "g", "edges", {"e1", "e2"});
    dup.roots = {"g"};
    Model g3 = task_migrate_to_graph3(dup);
    check(g3.find("a")->refs.at("linksTo") == std::vector<ObjectId>{"b"},
          "parallel edges did not collapse");
}

void deletion() {
    Model with = load("graph-n1.model.json");
    Model without = load("graph-no-n1.model.json");

    Model d1 = task_delete_n1(with);
    check(scan_nodes(d1).size() == scan_nodes(with).size() - 1, "node count did not drop");
    check(validate(d1, mm("graph1")).empty(), "delete-n1 violations");

    Model d1i = task_delete_n1_incident(with);
    check(scan_nodes(d1i).size() == scan_nodes(with).size() - 1, "incident node count");
    check(oracle_count_dangling(d1i) == 0, "incident variant left dangling edges");

    check(model_equivalent(task_delete_n1(without), without), "absent n1 changed the model");
    check(model_equivalent(task_delete_n1_incident(without), without),
          "absent n1 changed the model (incident)");
    check(scan_nodes(task_delete_n1(without)).size() == scan_nodes(without).size(),
          "node count changed without n1");
}

void transitive_edges() {
    std::mt19937 rng(1005);
    GraphOptions opts;
    opts.allow_dangling = false;
    opts.max_nodes = 8;
    for (int i = 0; i < 200; ++i) {
        Model m = random_graph1(rng, opts);
        auto r = edge_pair_set(m);
        auto expected = oracle_r_union_r2(m);
        Model out = task_insert_transitive(m);
        check(edge_pair_set(out) == expected, "pair set != R union R^2");
        for (const auto& e : scan_edges(m)) {
            const MObject* kept = out.find(e.id);
            check(kept != nullptr && *kept == *m.find(e.id), "input edge mutated");
        }
        check(scan_edges(out).size() == scan_edges(m).size() + (expected.size() - r.size()),
              "new edge count != |R^2 \\ R|");
    }
}

void codec_roundtrip() {
    for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
        if (entry.path().extension() != ".json") continue;
        std::string bytes = slurp(entry.path());
        Model m = parse_model(bytes);
        std::string canonical = serialize_model(m);
        check(parse_model(canonical) == m, "round trip not identity: " +
                                               entry.path().filename().string());
        check(serialize_model(parse_model(canonical)) == canonical,
              "canonical fixpoint broken: " + entry.path().filename().string());
    }
    std::mt19937 rng(1006);
    for (int i = 0; i < 50; ++i) {
        Model m = random_graph1(rng);
        check(parse_model(serialize_model(m)) == m, "random round trip");
    }
    int malformed = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kFixtures / "malformed")) {
        bool threw = false;
        try {
            parse_model(slurp(entry.path()));
        } catch (const ParseError&) {
            threw = true;
        }
        check(threw, "no ParseError for " + entry.path().filename().string());
        ++malformed;
    }
    check(malformed >= 5, "malformed fixture corpus too small");
}

void cli_contract() {
    auto run = [&](const std::string& args) { return run_command(kCli + " " + args); };

    check(run("list").exit_code == 0, "list exit");
    check(run("run hello-constant").exit_code == 0, "hello-constant exit");
    check(run("run helloext-constant").exit_code == 0, "helloext-constant exit");
    check(run("run no-such-task").exit_code == 2, "unknown task exit");
    check(run("run count-nodes --input " + fixture("malformed/bad-syntax.json")).exit_code == 3,
          "parse error exit");
    check(run("run count-nodes --input /nonexistent.model.json").exit_code == 3, "IO error exit");
    check(run("run reverse-edges --input " + fixture("dangling.model.json")).exit_code == 1,
          "precondition exit");
    check(run("validate " + fixture("invalid-multiplicity.model.json") + " --metamodel graph1")
                  .exit_code == 1,
          "validate exit");

    // stdout purity: result tasks emit exactly the value plus newline
    RunResult count = run("run count-circles --input " + fixture("triangle.model.json"));
    check(count.exit_code == 0 && count.out == "3\n", "count stdout impure");
    RunResult text = run("run greeting-text --input " + fixture("helloext-golden.model.json"));
    check(text.out == "Hello TTC Participants!\n", "greeting stdout impure");

    // all fourteen tasks end to end
    const char* graph_tasks[] = {"count-nodes", "count-loops", "count-isolated", "count-circles",
                                 "count-dangling", "reverse-edges", "migrate-evolved",
                                 "migrate-topology", "delete-n1", "delete-n1-incident",
                                 "transitive-edges"};
    for (const char* task : graph_tasks) {
        RunResult r = run(std::string("run ") + task + " --input " + fixture("graph-n1.model.json"));
        check(r.exit_code == 0, std::string(task) + " exit");
    }
    RunResult greet = run("run greeting-text --input " + fixture("helloext-golden.model.json"));
    check(greet.exit_code == 0, "greeting-text exit");
    for (const char* task : {"reverse-edges", "migrate-evolved"}) {
        RunResult r = run(std::string("run ") + task + " --input " + fixture("graph-n1.model.json"));
        bool parses = true;
        try {
            parse_model(r.out);
        } catch (const ParseError&) {
            parses = false;
        }
        check(parses, std::string(task) + " stdout is not a pure model document");
    }
}

} // namespace

int main() {
    criterion(1, "constant transformations match the golden instances", constant_transformations);
    criterion(2, "greeting-text prints 'Hello TTC Participants!' byte-for-byte", model_to_text);
    criterion(3, "five queries equal brute-force oracles on 200 random graphs", query_oracles);
    criterion(4, "count-circles = 3 x distinct directed 3-cycles on simple graphs", triangle_law);
    criterion(5, "reverse-edges is an involution preserving counts", reverse_involution);
    criterion(6, "migrations preserve counts, texts and the pair relation", migration_fidelity);
    criterion(7, "delete-n1 drops exactly one node iff present", deletion);
    criterion(8, "transitive insertion equals R union R^2 from the matrix oracle",
              transitive_edges);
    criterion(9, "codec round trip and canonical fixpoint; malformed fixtures rejected",
              codec_roundtrip);
    criterion(10, "CLI exit codes and stdout purity for all fourteen tasks", cli_contract);

    if (failures != 0) {
        std::cout << failures << " check(s) failed\n";
        return 1;
    }
    return 0;
}
