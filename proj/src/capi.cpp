#include "toricirc.h"

#include "analysis.hpp"
#include "toricirc/errors.hpp"

#include <cstring>
#include <string>

using namespace toricirc;

struct tc_config {
    Configuration cfg;
};
struct tc_graph {
    Multigraph g;
};
struct tc_result {
    std::string json;
};

namespace {

void put_error(char* err, size_t cap, const std::string& msg) {
    if (!err || cap == 0) return;
    const size_t n = msg.size() < cap - 1 ? msg.size() : cap - 1;
    std::memcpy(err, msg.data(), n);
    err[n] = '\0';
}

template <typename Fn>
tc_status guarded(char* err, size_t cap, Fn&& fn) {
    try {
        return fn();
    } catch (const parse_error& e) {
        put_error(err, cap, e.what());
        return TC_ERR_PARSE;
    } catch (const precondition_error& e) {
        put_error(err, cap, e.what());
        return TC_ERR_PRECONDITION;
    } catch (const internal_error& e) {
        put_error(err, cap, e.what());
        return TC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        put_error(err, cap, e.what());
        return TC_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* tc_version(void) {
    return "0.1.0";
}

tc_status tc_config_parse(const char* text, tc_config** out, char* err, size_t err_cap) {
    if (!text || !out) {
        put_error(err, err_cap, "null argument");
        return TC_ERR_USAGE;
    }
    *out = nullptr;
    return guarded(err, err_cap, [&] {
        *out = new tc_config{Configuration(parse_matrix(text))};
        return TC_OK;
    });
}

tc_status tc_config_load(const char* path, tc_config** out, char* err, size_t err_cap) {
    if (!path || !out) {
        put_error(err, err_cap, "null argument");
        return TC_ERR_USAGE;
    }
    *out = nullptr;
    return guarded(err, err_cap, [&] {
        *out = new tc_config{Configuration(load_matrix(path))};
        return TC_OK;
    });
}

void tc_config_free(tc_config* cfg) {
    delete cfg;
}

int tc_config_dim(const tc_config* cfg) {
    return cfg ? static_cast<int>(cfg->cfg.dim()) : -1;
}

int tc_config_size(const tc_config* cfg) {
    return cfg ? static_cast<int>(cfg->cfg.size()) : -1;
}

tc_status tc_graph_parse(const char* text, tc_graph** out, char* err, size_t err_cap) {
    if (!text || !out) {
        put_error(err, err_cap, "null argument");
        return TC_ERR_USAGE;
    }
    *out = nullptr;
    return guarded(err, err_cap, [&] {
        *out = new tc_graph{parse_multigraph(text)};
        return TC_OK;
    });
}

tc_status tc_graph_load(const char* path, tc_graph** out, char* err, size_t err_cap) {
    if (!path || !out) {
        put_error(err, err_cap, "null argument");
        return TC_ERR_USAGE;
    }
    *out = nullptr;
    return guarded(err, err_cap, [&] {
        *out = new tc_graph{load_multigraph(path)};
        return TC_OK;
    });
}

void tc_graph_free(tc_graph* g) {
    delete g;
}

int tc_graph_vertex_count(const tc_graph* g) {
    return g ? static_cast<int>(g->g.vertex_count) : -1;
}

int tc_graph_edge_count(const tc_graph* g) {
    return g ? static_cast<int>(g->g.edges.size()) : -1;
}

tc_status tc_graph_to_config(const tc_graph* g, tc_config** out, char* err, size_t err_cap) {
    if (!g || !out) {
        put_error(err, err_cap, "null argument");
        return TC_ERR_USAGE;
    }
    *out = nullptr;
    return guarded(err, err_cap, [&] {
        *out = new tc_config{incidence_configuration(g->g)};
        return TC_OK;
    });
}

tc_status tc_config_analyze(const tc_config* cfg, const char* command, const char* input_name,
                            int max_degree, tc_result** out, char* err, size_t err_cap) {
    if (!cfg || !command || !out) {
        put_error(err, err_cap, "null argument");
        return TC_ERR_USAGE;
    }
    *out = nullptr;
    if (!analysis::is_config_command(command)) {
        put_error(err, err_cap, std::string("unknown configuration command '") + command + "'");
        return TC_ERR_USAGE;
    }
    if (max_degree < 1) {
        put_error(err, err_cap, "max_degree must be at least 1");
        return TC_ERR_USAGE;
    }
    return guarded(err, err_cap, [&] {
        *out = new tc_result{analysis::run_config_command(
            cfg->cfg, command, input_name ? input_name : "", Int(max_degree))};
        return TC_OK;
    });
}

tc_status tc_graph_analyze(const tc_graph* g, const char* command, const char* input_name,
                           int max_degree, tc_result** out, char* err, size_t err_cap) {
    if (!g || !command || !out) {
        put_error(err, err_cap, "null argument");
        return TC_ERR_USAGE;
    }
    *out = nullptr;
    if (!analysis::is_graph_command(command)) {
        put_error(err, err_cap, std::string("unknown graph command '") + command + "'");
        return TC_ERR_USAGE;
    }
    if (max_degree < 1) {
        put_error(err, err_cap, "max_degree must be at least 1");
        return TC_ERR_USAGE;
    }
    return guarded(err, err_cap, [&] {
        *out = new tc_result{analysis::run_graph_command(g->g, command,
                                                         input_name ? input_name : "",
                                                         Int(max_degree))};
        return TC_OK;
    });
}

const char* tc_result_json(const tc_result* result) {
    return result ? result->json.c_str() : nullptr;
}

void tc_result_free(tc_result* result) {
    delete result;
}

} // extern "C"
