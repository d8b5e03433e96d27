// Command-line front end. Talks to the engine exclusively through the C API
// and renders either the raw JSON document or a plain-text report from it.

#include "toricirc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

using njson = nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct Options {
    std::string matrix_path;
    std::string graph_path;
    int max_degree = 4;
    bool json = false;
};

int map_status(tc_status st) {
    switch (st) {
    case TC_OK: return 0;
    case TC_ERR_PARSE: return kExitParse;
    case TC_ERR_PRECONDITION: return kExitPrecondition;
    case TC_ERR_USAGE: return kExitParse;
    default: return 1;
    }
}

std::string monomial_str(const njson& exps) {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        const long long e = exps[i].get<long long>();
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += "T" + std::to_string(i + 1);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::string binomial_str(const njson& item) {
    return monomial_str(item["plus"]) + " - " + monomial_str(item["minus"]);
}

std::string vector_str(const njson& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i].get<long long>());
    }
    return out + ")";
}

const char* yesno(bool b) {
    return b ? "yes" : "no";
}

void render_binomial_list(const njson& results) {
    for (std::size_t i = 0; i < results.size(); ++i) {
        const njson& item = results[i];
        std::cout << "  [" << i + 1 << "] " << binomial_str(item)
                  << "   vector: " << vector_str(item["vector"])
                  << "   balanced: " << yesno(item["balanced"].get<bool>())
                  << "   squarefree term: " << yesno(item["squarefree_term"].get<bool>()) << "\n";
    }
}

void render_normality(const njson& nj) {
    if (nj.is_null()) {
        std::cout << "normal up to bound: not applicable (not homogeneous)\n";
        return;
    }
    const bool normal = nj["normal"].get<bool>();
    std::cout << "normal: " << (normal ? "true" : "false");
    if (!normal) std::cout << " (witness degree " << nj["witness_degree"].get<long long>() << ")";
    std::cout << " [bound " << nj["bound"].get<long long>() << "]\n";
    if (!normal) std::cout << "normality witness: " << vector_str(nj["witness"]) << "\n";
}

void render(const njson& doc) {
    const std::string command = doc["command"].get<std::string>();
    const njson& results = doc["results"];
    if (command == "circuits") {
        std::cout << "circuits (" << results.size() << "):\n";
        render_binomial_list(results);
    } else if (command == "toric") {
        if (results.empty()) {
            std::cout << "I_A = (0)\n";
            return;
        }
        std::cout << (doc["minimal"].get<bool>() ? "minimal generators (" : "generators (")
                  << results.size() << "):\n";
        render_binomial_list(results);
    } else if (command == "classify" || command == "verify") {
        const njson& rep = results.at(0);
        std::cout << "homogeneous: " << (rep["homogeneous"].get<bool>() ? "true" : "false") << "\n";
        if (rep.contains("circuits")) {
            std::cout << "circuits (" << rep["circuits"].size() << "):\n";
            render_binomial_list(rep["circuits"]);
        }
        render_normality(rep["normal_up_to"]);
        std::cout << "generated by circuits (a): "
                  << (rep["cond_a"].get<bool>() ? "true" : "false") << "\n";
        std::cout << "generated by circuits with a square-free term (b): "
                  << (rep["cond_b"].get<bool>() ? "true" : "false") << "\n";
        std::cout << "connector condition (c): " << rep["cond_c"].get<std::string>() << "\n";
        const njson& wit = rep["witnesses"];
        if (!wit.empty()) {
            std::cout << "witnesses (" << wit.size() << "):\n";
            render_binomial_list(wit);
        }
    } else if (command == "graph-circuits") {
        std::cout << "graph circuits (" << results.size() << "):\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const njson& item = results[i];
            std::string kind = item["kind"].get<std::string>();
            for (auto& ch : kind)
                if (ch == '_') ch = ' ';
            std::string walk;
            for (const auto& e : item["walk"]) {
                if (!walk.empty()) walk += " ";
                walk += "e" + std::to_string(e.get<long long>());
            }
            std::cout << "  [" << i + 1 << "] " << kind << "   walk: " << walk << "   "
                      << binomial_str(item)
                      << "   class: " << item["classification"].get<std::string>() << "\n";
        }
    } else if (command == "graph-verify") {
        const njson& rep = results.at(0);
        const njson& nj = rep["normal_up_to"];
        const bool normal = nj["normal"].get<bool>();
        std::cout << "normal: " << (normal ? "true" : "false");
        if (!normal)
            std::cout << " (witness degree " << nj["witness_degree"].get<long long>() << ")";
        std::cout << " [bound " << nj["bound"].get<long long>() << "]\n";
        if (!normal) std::cout << "normality witness: " << vector_str(nj["witness"]) << "\n";
        std::cout << "generated by square-free circuits: "
                  << (rep["generated_by_squarefree_circuits"].get<bool>() ? "true" : "false")
                  << "\n";
        std::cout << "odd-cycle heuristic: "
                  << (rep["odd_cycle_heuristic"].get<bool>() ? "true" : "false") << "\n";
        std::cout << "consistent with Theorem 3.2: "
                  << (rep["consistent_with_theorem_3_2"].get<bool>() ? "yes" : "no") << "\n";
    }
}

int run_command(const std::string& command, const Options& opt) {
    char err[512] = {0};
    const bool graph_command = command.rfind("graph-", 0) == 0;

    tc_graph* graph = nullptr;
    tc_config* config = nullptr;
    tc_result* result = nullptr;
    tc_status st = TC_OK;

    const std::string input = graph_command || !opt.graph_path.empty() ? opt.graph_path
                                                                       : opt.matrix_path;
    if (!opt.graph_path.empty()) {
        st = tc_graph_load(opt.graph_path.c_str(), &graph, err, sizeof err);
        if (st == TC_OK && !graph_command)
            st = tc_graph_to_config(graph, &config, err, sizeof err);
    } else {
        st = tc_config_load(opt.matrix_path.c_str(), &config, err, sizeof err);
    }
    if (st == TC_OK) {
        st = graph_command
                 ? tc_graph_analyze(graph, command.c_str(), input.c_str(), opt.max_degree, &result,
                                    err, sizeof err)
                 : tc_config_analyze(config, command.c_str(), input.c_str(), opt.max_degree,
                                     &result, err, sizeof err);
    }
    int rc = map_status(st);
    if (st != TC_OK) {
        std::cerr << "toricirc: " << (err[0] ? err : "unknown error") << "\n";
    } else if (opt.json) {
        std::cout << tc_result_json(result);
    } else {
        render(njson::parse(tc_result_json(result)));
    }
    tc_result_free(result);
    tc_config_free(config);
    tc_graph_free(graph);
    return rc;
}

void add_common(CLI::App* cmd, Options& opt, bool graph_only) {
    if (!graph_only)
        cmd->add_option("-m,--matrix", opt.matrix_path, "matrix input file");
    cmd->add_option("-g,--graph", opt.graph_path, "graph input file");
    cmd->add_option("--max-degree", opt.max_degree, "degree bound for bounded searches")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--json", opt.json, "emit the JSON document");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circuits of toric ideals and edge subrings, in exact arithmetic"};
    app.require_subcommand(1);

    Options opt;
    const char* config_cmds[] = {"circuits", "toric", "classify", "verify"};
    const char* config_help[] = {
        "list the circuits of a configuration",
        "generators of the toric ideal",
        "full generation-by-circuits report with the circuit table",
        "generation-by-circuits report",
    };
    for (int i = 0; i < 4; ++i) add_common(app.add_subcommand(config_cmds[i], config_help[i]), opt, false);
    add_common(app.add_subcommand("graph-circuits", "list the circuits of a multigraph"), opt, true);
    add_common(app.add_subcommand("graph-verify", "normality versus square-free circuit generation"),
               opt, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    const bool graph_command = command.rfind("graph-", 0) == 0;
    if (graph_command && opt.graph_path.empty()) {
        std::cerr << "toricirc: " << command << " needs a graph input (-g)\n";
        return kExitParse;
    }
    if (!graph_command && opt.matrix_path.empty() == opt.graph_path.empty()) {
        std::cerr << "toricirc: provide exactly one input file (-m or -g)\n";
        return kExitParse;
    }
    return run_command(command, opt);
}
