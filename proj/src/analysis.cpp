#include "analysis.hpp"

#include "toricirc/errors.hpp"

#include <json.hpp>

namespace toricirc::analysis {

namespace {

using njson = nlohmann::ordered_json;

njson int_json(const Int& x) {
    if (x.fits_slong_p()) return njson(x.get_si());
    return njson(x.get_str()); // beyond int64, fall back to a decimal string
}

njson vec_json(const IntVec& v) {
    njson a = njson::array();
    for (const Int& x : v) a.push_back(int_json(x));
    return a;
}

njson binomial_json(const Binomial& b) {
    njson o;
    o["vector"] = vec_json(binomial_difference(b));
    o["plus"] = vec_json(b.plus);
    o["minus"] = vec_json(b.minus);
    o["balanced"] = is_balanced(b);
    o["squarefree_term"] = has_square_free_term(b);
    return o;
}

njson circuit_json(const Circuit& c) {
    njson o;
    o["vector"] = vec_json(c.vector);
    o["plus"] = vec_json(c.binomial.plus);
    o["minus"] = vec_json(c.binomial.minus);
    o["balanced"] = is_balanced(c.binomial);
    o["squarefree_term"] = has_square_free_term(c.binomial);
    return o;
}

njson normality_json(const NormalityResult& r) {
    njson o;
    o["bound"] = int_json(r.bound);
    o["normal"] = r.normal;
    if (r.witness) {
        o["witness"] = vec_json(*r.witness);
        o["witness_degree"] = int_json(r.witness_degree);
    } else {
        o["witness"] = nullptr;
    }
    return o;
}

const char* tri_state_str(TriState t) {
    switch (t) {
    case TriState::Holds: return "holds";
    case TriState::Fails: return "fails";
    default: return "unknown";
    }
}

njson report_json(const GeneratorReport& rep, bool with_circuits) {
    njson o;
    o["homogeneous"] = rep.homogeneous;
    o["cond_a"] = rep.cond_a;
    o["cond_b"] = rep.cond_b;
    o["cond_c"] = tri_state_str(rep.cond_c);
    o["cond_c_exhaustive"] = rep.cond_c_exhaustive;
    o["normal_up_to"] = rep.normal_up_to ? normality_json(*rep.normal_up_to) : njson(nullptr);
    njson gens = njson::array();
    for (const Binomial& f : rep.generators) gens.push_back(binomial_json(f));
    o["generators"] = std::move(gens);
    njson wit = njson::array();
    for (const Binomial& f : rep.witnesses) wit.push_back(binomial_json(f));
    o["witnesses"] = std::move(wit);
    if (with_circuits) {
        njson cs = njson::array();
        for (const Circuit& c : rep.circuits) cs.push_back(circuit_json(c));
        o["circuits"] = std::move(cs);
    }
    return o;
}

const char* kind_str(GraphCircuitKind k) {
    switch (k) {
    case GraphCircuitKind::EvenCycle: return "even_cycle";
    case GraphCircuitKind::OddPairSharedVertex: return "odd_pair_shared_vertex";
    default: return "odd_pair_joined_by_path";
    }
}

njson document(const std::string& command, const std::string& input, const Int& maxdeg) {
    njson o;
    o["command"] = command;
    o["input"] = input;
    o["max_degree"] = int_json(maxdeg);
    return o;
}

std::string finish(njson o) {
    return o.dump(2) + "\n";
}

} // namespace

bool is_config_command(const std::string& command) {
    return command == "circuits" || command == "toric" || command == "classify" ||
           command == "verify";
}

bool is_graph_command(const std::string& command) {
    return command == "graph-circuits" || command == "graph-verify";
}

std::string run_config_command(const Configuration& c, const std::string& command,
                               const std::string& input_name, const Int& maxdeg) {
    njson doc = document(command, input_name, maxdeg);
    njson results = njson::array();
    if (command == "circuits") {
        for (const Circuit& circ : enumerate_circuits(c)) results.push_back(circuit_json(circ));
    } else if (command == "toric") {
        const bool homogeneous = is_homogeneous(c);
        std::vector<Binomial> gens;
        if (kernel_lattice_basis(c.a).empty())
            gens = {};
        else if (homogeneous)
            gens = minimal_binomial_generators(c);
        else
            gens = toric_ideal_generators(c).generators;
        doc["minimal"] = homogeneous || gens.empty();
        for (const Binomial& f : gens) results.push_back(binomial_json(f));
    } else if (command == "classify" || command == "verify") {
        results.push_back(report_json(check_generation_by_circuits(c, maxdeg),
                                      command == "classify"));
    } else {
        throw precondition_error("unknown configuration command '" + command + "'");
    }
    doc["results"] = std::move(results);
    return finish(std::move(doc));
}

std::string run_graph_command(const Multigraph& g, const std::string& command,
                              const std::string& input_name, const Int& maxdeg) {
    njson doc = document(command, input_name, maxdeg);
    doc["vertices"] = g.vertex_count;
    doc["edges"] = g.edges.size();
    njson results = njson::array();
    if (command == "graph-circuits") {
        for (const GraphCircuit& gc : enumerate_graph_circuits(g)) {
            njson o;
            o["kind"] = kind_str(gc.kind);
            njson walk = njson::array();
            for (std::size_t e : gc.walk) walk.push_back(e + 1);
            o["walk"] = std::move(walk);
            njson b = binomial_json(gc.binomial);
            o.update(b);
            o["classification"] = classify_graph_circuit(gc) == CircuitClass::SquareFreeTerm
                                      ? "squarefree_term"
                                      : "balanced_max_two";
            results.push_back(std::move(o));
        }
    } else if (command == "graph-verify") {
        const EdgeRingReport rep = verify_edge_ring_theorem(g, maxdeg);
        njson o;
        o["normal_up_to"] = normality_json(rep.normal_oracle);
        o["generated_by_squarefree_circuits"] = rep.generated_by_sqfree_circuits;
        o["odd_cycle_heuristic"] = rep.odd_cycle_heuristic;
        o["consistent_with_theorem_3_2"] = rep.consistent_with_theorem_3_2;
        results.push_back(std::move(o));
    } else {
        throw precondition_error("unknown graph command '" + command + "'");
    }
    doc["results"] = std::move(results);
    return finish(std::move(doc));
}

} // namespace toricirc::analysis
