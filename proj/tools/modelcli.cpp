#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "modelkit/builtins.hpp"
#include "modelkit/codec.hpp"
#include "modelkit/model.hpp"
#include "modelkit/queries.hpp"
#include "modelkit/transforms.hpp"

namespace {

using namespace modelkit;

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

enum class InputKind { None, HelloExt, Graph1 };
enum class OutputKind { Model, String, Integer };

struct TaskInfo {
    const char* id;
    InputKind input;
    OutputKind output;
};

constexpr TaskInfo kTasks[] = {
    {"hello-constant", InputKind::None, OutputKind::Model},
    {"helloext-constant", InputKind::None, OutputKind::Model},
    {"greeting-text", InputKind::HelloExt, OutputKind::String},
    {"count-nodes", InputKind::Graph1, OutputKind::Integer},
    {"count-loops", InputKind::Graph1, OutputKind::Integer},
    {"count-isolated", InputKind::Graph1, OutputKind::Integer},
    {"count-circles", InputKind::Graph1, OutputKind::Integer},
    {"count-dangling", InputKind::Graph1, OutputKind::Integer},
    {"reverse-edges", InputKind::Graph1, OutputKind::Model},
    {"migrate-evolved", InputKind::Graph1, OutputKind::Model},
    {"migrate-topology", InputKind::Graph1, OutputKind::Model},
    {"delete-n1", InputKind::Graph1, OutputKind::Model},
    {"delete-n1-incident", InputKind::Graph1, OutputKind::Model},
    {"transitive-edges", InputKind::Graph1, OutputKind::Model},
};

const char* input_name(InputKind k) {
    switch (k) {
    case InputKind::None: return "none";
    case InputKind::HelloExt: return "helloext";
    case InputKind::Graph1: return "graph1";
    }
    return "?";
}

const char* output_name(OutputKind k) {
    switch (k) {
    case OutputKind::Model: return "model";
    case OutputKind::String: return "string";
    case OutputKind::Integer: return "integer";
    }
    return "?";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << bytes;
}

Model result_as_model(const ResultValue& r) {
    Model m = new_model("result");
    bool is_int = r.kind == ResultValue::Kind::Int;
    create_object(m, "r1", is_int ? "IntResult" : "StringResult");
    set_attr(m, "r1", "result", is_int ? std::to_string(r.int_value) : r.string_value);
    m.roots = {"r1"};
    return m;
}

int cmd_list() {
    for (const TaskInfo& t : kTasks)
        std::cout << t.id << "  input=" << input_name(t.input)
                  << "  output=" << output_name(t.output) << "\n";
    return kExitOk;
}

int cmd_run(const std::string& task_id, const std::optional<std::string>& input_path,
            const std::optional<std::string>& output_path) {
    const TaskInfo* task = nullptr;
    for (const TaskInfo& t : kTasks)
        if (task_id == t.id) task = &t;
    if (task == nullptr) {
        std::cerr << "unknown task '" << task_id << "'\n";
        return kExitUsage;
    }
    if ((task->input != InputKind::None) != input_path.has_value()) {
        std::cerr << "task '" << task_id << "' "
                  << (task->input == InputKind::None ? "takes no --input" : "requires --input")
                  << "\n";
        return kExitUsage;
    }

    Model in;
    if (input_path) {
        std::string bytes;
        try {
            bytes = read_file(*input_path);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return kExitIo;
        }
        try {
            in = parse_model(bytes);
        } catch (const ParseError& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return kExitIo;
        }
        const char* mm_name = input_name(task->input);
        const Metamodel& mm = registry().entries.at(mm_name);
        if (in.metamodel_name != mm.name) {
            std::cerr << "model is tagged '" << in.metamodel_name << "', expected '" << mm.name
                      << "'\n";
            return kExitPrecondition;
        }
        auto violations = validate(in, mm);
        if (!violations.empty()) {
            for (const auto& v : violations)
                std::cerr << to_string(v.kind) << ": " << v.detail << "\n";
            return kExitPrecondition;
        }
    }

    Model model_out;
    std::optional<ResultValue> result_out;
    try {
        if (task_id == "hello-constant") model_out = task_hello_constant();
        else if (task_id == "helloext-constant") model_out = task_helloext_constant();
        else if (task_id == "greeting-text") result_out = task_greeting_text(in);
        else if (task_id == "reverse-edges") model_out = task_reverse_edges(std::move(in));
        else if (task_id == "migrate-evolved") model_out = task_migrate_to_graph2(in);
        else if (task_id == "migrate-topology") model_out = task_migrate_to_graph3(in);
        else if (task_id == "delete-n1") model_out = task_delete_n1(std::move(in));
        else if (task_id == "delete-n1-incident") model_out = task_delete_n1_incident(std::move(in));
        else if (task_id == "transitive-edges") model_out = task_insert_transitive(std::move(in));
        else {
            GraphView g = GraphView::from_model(in);
            if (task_id == "count-nodes") result_out = count_nodes(g);
            else if (task_id == "count-loops") result_out = count_looping_edges(g);
            else if (task_id == "count-isolated") result_out = count_isolated_nodes(g);
            else if (task_id == "count-circles") result_out = count_circles(g);
            else if (task_id == "count-dangling") result_out = count_dangling_edges(g);
        }
    } catch (const ModelError& e) {
        std::cerr << e.what() << "\n";
        return kExitPrecondition;
    }

    try {
        if (result_out) {
            if (result_out->kind == ResultValue::Kind::Int)
                std::cout << result_out->int_value << "\n";
            else
                std::cout << result_out->string_value << "\n";
            if (output_path) write_file(*output_path, serialize_model(result_as_model(*result_out)));
        } else {
            std::string bytes = serialize_model(model_out);
            if (output_path)
                write_file(*output_path, bytes);
            else
                std::cout << bytes;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_validate(const std::string& path, const std::string& metamodel_name) {
    auto it = registry().entries.find(metamodel_name);
    if (it == registry().entries.end()) {
        std::cerr << "unknown metamodel '" << metamodel_name << "'\n";
        return kExitUsage;
    }
    Model m;
    try {
        m = parse_model(read_file(path));
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    }
    std::vector<Violation> violations;
    try {
        violations = validate(m, it->second);
    } catch (const MetamodelMismatchError& e) {
        std::cerr << e.what() << "\n";
        return kExitPrecondition;
    }
    for (const auto& v : violations)
        std::cout << to_string(v.kind) << ": " << v.detail << "\n";
    return violations.empty() ? kExitOk : kExitPrecondition;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Typed-graph model task runner"};
    app.require_subcommand(1);

    CLI::App* list = app.add_subcommand("list", "List the available tasks");

    std::string task_id;
    std::optional<std::string> input_path;
    std::optional<std::string> output_path;
    CLI::App* run = app.add_subcommand("run", "Run a task");
    run->add_option("task", task_id, "Task id (see 'list')")->required();
    run->add_option("--input", input_path, "Input model file");
    run->add_option("--output", output_path, "Output file");

    std::string validate_path;
    std::string metamodel_name;
    CLI::App* validate_cmd = app.add_subcommand("validate", "Check a model against a metamodel");
    validate_cmd->add_option("path", validate_path, "Model file")->required();
    validate_cmd->add_option("--metamodel", metamodel_name, "Metamodel name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (list->parsed()) return cmd_list();
    if (run->parsed()) return cmd_run(task_id, input_path, output_path);
    if (validate_cmd->parsed()) return cmd_validate(validate_path, metamodel_name);
    return kExitUsage;
}
