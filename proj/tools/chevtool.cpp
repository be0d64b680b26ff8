// Batch front end: one subcommand per module verb, JSON reports on stdout
// (or --out), exit codes 0 pass / 1 property failure / 2 usage or parse
// error / 3 undecided or budget.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "chev/autos.hpp"
#include "chev/ring_spec.hpp"
#include "json.hpp"

using namespace chev;
using nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kUndecided = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string system = "A2";
    std::string ring = "Z/5";
    std::string rep = "adjoint";
    std::uint64_t seed = 1;
    std::size_t budget = 2000000;
    std::size_t samples = 200;
    std::size_t max_len = 0;
    std::string out;
    bool timing = false;
    bool exhaustive = false;
    std::vector<std::string> relations;
    std::string pair = "a,b";
    std::string weight = "w1";
    std::string from = "g1";
    int label = 1;
    std::string labels;
    bool ascending = false;
    std::string mode = "half";
    std::string input;
    bool override_gate = false;
    std::string localize;
    bool diagram = false;
};

// Config-file binding: applied only when the flag was not given.
struct Binding {
    CLI::Option* opt;
    std::string key;
    std::function<void(const std::string&)> set;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    std::map<std::string, std::string> out;
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(n) + ": expected key=value");
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

std::uint64_t to_uint(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        auto x = std::stoull(v, &used);
        if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    throw UsageError("config key " + key + ": '" + v + "' is not a non-negative integer");
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw UsageError("config key " + key + ": '" + v + "' is not a boolean");
}

std::shared_ptr<const Representation> load_rep(const Options& o) {
    auto [family, rank] = parse_system_name(o.system);
    auto cb = std::make_shared<ChevalleyBasis>(std::make_shared<RootSystem>(family, rank));
    return std::make_shared<Representation>(make_representation(cb, o.rep));
}

std::shared_ptr<const ChevalleyBasis> load_basis(const Options& o) {
    auto [family, rank] = parse_system_name(o.system);
    return std::make_shared<ChevalleyBasis>(std::make_shared<RootSystem>(family, rank));
}

ordered_json matrix_json(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m.ring().format(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json int_matrix_json(const IntMat& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

std::string verdict_name(int code) {
    switch (code) {
        case kPass: return "pass";
        case kFail: return "fail";
        case kUndecided: return "undecided";
        default: return "error";
    }
}

// "a" -> a1, "b" -> a2, ...; anything else through the root parser.
std::size_t parse_root_token(const RootSystem& rs, const std::string& tok) {
    std::string t = trim(tok), out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        char ch = t[i];
        bool letter = ch >= 'a' && ch < 'a' + rs.rank() && (i + 1 == t.size() || !std::isdigit(static_cast<unsigned char>(t[i + 1])));
        if (letter)
            out += "a" + std::to_string(ch - 'a' + 1);
        else
            out += ch;
    }
    return rs.parse_root(out);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(trim(item)));
        } catch (const std::exception&) {
            throw UsageError("cannot read '" + item + "' as an integer");
        }
    }
    return out;
}

// ---------------------------------------------------------------- commands

int cmd_rootsys(const Options& o, ordered_json& r) {
    auto [family, rank] = parse_system_name(o.system);
    RootSystem rs(family, rank);
    r["name"] = rs.name();
    r["rank"] = rs.rank();
    r["roots"] = rs.size();
    r["positive_roots"] = rs.num_positive();
    ordered_json cartan = ordered_json::array();
    for (int i = 0; i < rank; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < rank; ++j) row.push_back(rs.cartan(i, j));
        cartan.push_back(row);
    }
    r["cartan"] = cartan;
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < rs.size(); ++i) {
        ordered_json e;
        e["index"] = i;
        e["name"] = rs.root_name(i);
        e["coefficients"] = rs.coeffs(i);
        e["height"] = rs.height(i);
        e["long"] = rs.is_long(i);
        list.push_back(e);
    }
    r["root_list"] = list;
    r["weyl_group_order"] = rs.weyl_group_order();
    r["weyl_orbits"] = rs.weyl_orbits().size();
    ordered_json autos = ordered_json::array();
    for (const auto& p : rs.diagram_automorphisms()) {
        ordered_json q = ordered_json::array();
        for (int k : p) q.push_back(k + 1);
        autos.push_back(q);
    }
    r["diagram_automorphisms"] = autos;
    return kPass;
}

int cmd_basis(const Options& o, ordered_json& r) {
    auto cb = load_basis(o);
    const RootSystem& rs = cb->roots();
    r["system"] = rs.name();
    r["dimension"] = cb->dim();
    ordered_json consts = ordered_json::array();
    for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = 0; b < rs.size(); ++b)
            if (rs.is_positive(a) && rs.is_positive(b) && cb->N(a, b) != 0) {
                ordered_json e;
                e["a"] = rs.root_name(a);
                e["b"] = rs.root_name(b);
                e["N"] = cb->N(a, b);
                consts.push_back(e);
            }
    r["structure_constants_positive"] = consts;
    auto jac = cb->check_jacobi();
    r["jacobi"] = jac ? ordered_json(*jac) : ordered_json("ok");
    return jac ? kFail : kPass;
}

int cmd_rep(const Options& o, ordered_json& r) {
    auto rep = load_rep(o);
    r["system"] = rep->roots().name();
    r["representation"] = rep->name;
    r["dimension"] = rep->dim;
    r["lattice"] = rep->lattice.tag_name();
    r["lattice_index_in_weights"] = rep->lattice.index_in_full();
    r["weights"] = rep->weights;
    auto br = rep->check_brackets();
    auto gr = rep->check_weight_grading();
    r["brackets"] = br ? ordered_json(*br) : ordered_json("ok");
    r["weight_grading"] = gr ? ordered_json(*gr) : ordered_json("ok");
    if (o.diagram) r["diagram"] = rep->diagram ? ordered_json::parse(rep->diagram->to_json()) : ordered_json(nullptr);
    return br || gr ? kFail : kPass;
}

int cmd_relations(const Options& o, ordered_json& r) {
    auto rep = load_rep(o);
    ChevalleyGroup g(rep, parse_ring(o.ring));
    SamplingPolicy policy;
    policy.exhaustive = o.exhaustive;
    policy.budget = o.budget;
    policy.samples = o.samples;
    policy.seed = o.seed;
    std::vector<std::string> ids = o.relations.empty() ? all_relation_ids() : o.relations;
    ordered_json list = ordered_json::array();
    bool ok = true;
    for (const auto& id : ids) {
        auto all = all_relation_ids();
        if (std::find(all.begin(), all.end(), id) == all.end()) throw UsageError("unknown relation " + id);
        auto rep_ = verify_relation(g, id, policy);
        ordered_json e;
        e["relation"] = rep_.relation;
        e["exhaustive"] = rep_.exhaustive;
        e["cases"] = rep_.cases;
        e["failures"] = rep_.failure_count;
        e["witnesses"] = rep_.failures;
        e["verdict"] = rep_.passed() ? "pass" : "fail";
        ok = ok && rep_.passed();
        list.push_back(e);
    }
    r["group"] = g.describe();
    r["relations"] = list;
    return ok ? kPass : kFail;
}

int cmd_constants(const Options& o, ordered_json& r) {
    auto cb = load_basis(o);
    const RootSystem& rs = cb->roots();
    auto comma = o.pair.find(',');
    if (comma == std::string::npos) throw UsageError("--pair needs two roots separated by a comma");
    std::size_t a = parse_root_token(rs, o.pair.substr(0, comma)), b = parse_root_token(rs, o.pair.substr(comma + 1));
    if (rs.neg(a) == b) throw UsageError("--pair roots must not be opposite");
    Representation adj = adjoint_representation(cb);
    auto f = commutator_constants(adj, a, b);
    r["system"] = rs.name();
    r["alpha"] = rs.root_name(a);
    r["beta"] = rs.root_name(b);
    ordered_json terms = ordered_json::array();
    for (const auto& t : f.terms) {
        ordered_json e;
        e["root"] = rs.root_name(t.root);
        e["i"] = t.i;
        e["j"] = t.j;
        e["c"] = t.c;
        terms.push_back(e);
    }
    r["terms"] = terms;
    r["formula"] = f.format(rs);
    bool ok = check_commutator_formula(adj, f, {{1, 1}, {2, 3}, {-1, 2}, {3, -2}});
    r["recheck"] = ok ? "ok" : "mismatch";
    return ok ? kPass : kFail;
}

int cmd_group(const Options& o, ordered_json& r) {
    auto rep = load_rep(o);
    ChevalleyGroup g(rep, parse_ring(o.ring));
    r["group"] = g.describe();
    r["dimension"] = g.dim();
    FullGroup full(g, o.budget);
    r["elementary_complete"] = full.elementary().complete();
    auto center = center_elements(g, o.budget);
    r["center_of_G"] = center.size();
    bool scalars = std::all_of(center.begin(), center.end(), [](const Mat& m) {
        if (!m.is_diagonal()) return false;
        for (std::size_t i = 1; i < m.n(); ++i)
            if (m(i, i) != m(0, 0)) return false;
        return true;
    });
    r["center_scalar"] = scalars;
    if (!full.elementary().complete()) {
        r["elementary_order"] = nullptr;
        r["center_of_E"] = nullptr;
        return kUndecided;
    }
    r["elementary_order"] = full.elementary().size();
    auto ze = full.center_bruteforce();
    r["center_of_E"] = ze ? ordered_json(ze->size()) : ordered_json(nullptr);
    std::size_t in_e = 0;
    for (const Mat& z : center) in_e += full.elementary().contains(z);
    r["center_of_G_in_E"] = in_e;
    return ze && ze->size() == in_e ? kPass : kFail;
}

int cmd_generate_mn(const Options& o, ordered_json& r) {
    auto rep = load_rep(o);
    ChevalleyGroup g(rep, parse_ring(o.ring));
    std::vector<Mat> gens;
    for (std::size_t a = 0; a < g.roots().size(); ++a) gens.push_back(g.pi(a));
    auto c = algebra_closure(gens, true, o.budget);
    r["group"] = g.describe();
    r["complete"] = c.complete;
    r["spanning_set"] = c.spanning.size();
    r["matrix_units_reached"] = c.units_reached;
    r["matrix_units_total"] = g.dim() * g.dim();
    r["full_matrix_ring"] = c.full_matrix_ring;
    r["closure_defect"] = c.closure_defect ? ordered_json(*c.closure_defect) : ordered_json(nullptr);
    if (!c.complete) return kUndecided;
    return c.full_matrix_ring && !c.closure_defect ? kPass : kFail;
}

int cmd_generate_lemma1(const Options& o, ordered_json& r) {
    auto rep = load_rep(o);
    ChevalleyGroup g(rep, parse_ring(o.ring));
    RecoveryMode mode;
    if (o.mode == "half")
        mode = RecoveryMode::Half;
    else if (o.mode == "square-zero")
        mode = RecoveryMode::SquareZero;
    else
        throw UsageError("--mode must be half or square-zero");
    std::size_t bad = 0;
    ordered_json mismatches = ordered_json::array();
    for (std::size_t a = 0; a < g.roots().size(); ++a)
        if (recover_lie_generator(g.x(a, g.ring().one()), *rep, mode) != g.pi(a)) {
            ++bad;
            mismatches.push_back(g.roots().root_name(a));
        }
    r["group"] = g.describe();
    r["mode"] = o.mode;
    r["roots_checked"] = g.roots().size();
    r["mismatches"] = mismatches;
    return bad ? kFail : kPass;
}

int cmd_generate_path(const Options& o, ordered_json& r) {
    Options ro = o;
    ro.rep = o.weight;
    auto rep = load_rep(ro);
    if (!rep->diagram) throw UsageError("--weight must name a microweight representation");
    const WeightDiagram& d = *rep->diagram;
    std::string from = o.from;
    if (!from.empty() && (from[0] == 'g' || from[0] == 'G')) from = from.substr(1);
    std::size_t gamma;
    try {
        gamma = std::stoul(from) - 1;
    } catch (const std::exception&) {
        throw UsageError("--from must be a vertex number like g1");
    }
    if (gamma >= d.vertices.size()) throw UsageError("--from vertex out of range");
    if (o.label < 1 || o.label > rep->roots().rank()) throw UsageError("--label out of range");
    int label = o.label - 1;
    r["system"] = rep->roots().name();
    r["representation"] = rep->name;
    r["vertices"] = d.vertices.size();
    r["gamma"] = {{"vertex", gamma + 1}, {"weight", d.vertices[gamma]}};
    auto nb = d.descend(gamma, label);
    if (!nb) throw UsageError("no edge labelled " + std::to_string(o.label) + " below the vertex");
    r["neighbor"] = {{"vertex", *nb + 1}, {"weight", d.vertices[*nb]}};

    std::optional<PathCertificate> c;
    if (!o.labels.empty()) {
        auto ls = parse_int_list(o.labels);
        std::vector<int> zero;
        for (int x : ls) zero.push_back(x - 1);
        if (zero.empty() || zero[0] != label) throw UsageError("--labels must start with --label");
        c = certificate_for_labels(d, gamma, zero, o.ascending);
        if (!c) {
            r["certificate"] = nullptr;
            r["check"] = "the label sequence is not a path from the vertex";
            return kFail;
        }
    } else {
        c = find_path_certificate(d, gamma, label, o.max_len);
        if (!c) {
            r["certificate"] = nullptr;
            return kUndecided;
        }
    }
    ordered_json cj;
    std::vector<int> one;
    for (int x : c->labels) one.push_back(x + 1);
    cj["labels"] = one;
    cj["direction"] = c->ascending ? "ascending" : "descending";
    cj["end_vertex"] = c->to + 1;
    cj["full_path_starts"] = c->full_starts;
    cj["tail_path_starts"] = c->tail_starts;
    r["certificate"] = cj;
    auto problem = check_certificate(d, *c);
    r["check"] = problem ? ordered_json(*problem) : ordered_json("ok");
    if (problem) return kFail;
    IntMat u = matrix_unit_from_certificate(*rep, *c);
    r["matrix_unit"] = {{"row", c->from + 1}, {"column", c->neighbor + 1}, {"nonzero_entries", u.nonzero_count()}};
    return kPass;
}

int cmd_auto_decompose(const Options& o, ordered_json& r) {
    auto rep = load_rep(o);
    ChevalleyGroup g(rep, parse_ring(o.ring));
    GraphAction graph(g);
    AutomorphismPresentation p;
    if (o.input.empty()) throw UsageError("--input is required");
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot open " + o.input);
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("bad JSON in ") + o.input + ": " + e.what());
    }
    // a report from `auto random` / `auto identity` works as input too
    if (j.is_object() && j.contains("result") && j["result"].contains("presentation")) j = j["result"]["presentation"];
    p = presentation_from_json(g, j);
    DecomposeOptions opt;
    opt.override_gate = o.override_gate;
    opt.seed = o.seed;
    auto d = decompose(g, p, opt);
    r["decomposition"] = decomposition_to_json(g, graph, d);
    switch (d.status) {
        case DecompositionStatus::Standard: return kPass;
        case DecompositionStatus::NonStandard: return kFail;
        default: return kUndecided;
    }
}

int cmd_auto_random(const Options& o, ordered_json& r, bool identity) {
    auto rep = load_rep(o);
    ChevalleyGroup g(rep, parse_ring(o.ring));
    GraphAction graph(g);
    StandardAutomorphism phi;
    if (!identity) phi = random_standard_automorphism(g, graph, o.seed);
    r["group"] = g.describe();
    r["graph"] = graph.describe(phi.graph);
    r["ring_automorphism"] = phi.ring ? "non-identity" : "identity";
    r["central"] = phi.central.empty() ? "trivial" : "non-trivial";
    r["presentation"] = presentation_to_json(g, present(g, graph, phi));
    return kPass;
}

int cmd_ring(const Options& o, ordered_json& r) {
    Ring R = parse_ring(o.ring);
    r["spec"] = R.spec();
    r["size"] = R.size();
    r["characteristic"] = R.characteristic();
    r["units"] = R.units().size();
    r["local"] = is_local_ring(R);
    ordered_json ms = ordered_json::array();
    auto maxi = maximal_ideals(R);
    for (const auto& m : maxi) {
        ordered_json e;
        ordered_json gens = ordered_json::array();
        for (Elem x : m.generators) gens.push_back(R.format(x));
        e["generators"] = gens;
        e["size"] = m.size();
        ms.push_back(e);
    }
    r["maximal_ideals"] = ms;
    auto emb = diagonal_embedding(R);
    ordered_json factors = ordered_json::array();
    for (const auto& l : emb.locals) factors.push_back({{"spec", l.ring.spec()}, {"size", l.ring.size()}});
    r["localizations"] = factors;
    r["diagonal_embedding_injective"] = emb.map.injective();
    ordered_json idem = ordered_json::array();
    for (Elem a : R.elements())
        if (R.mul(a, a) == a) idem.push_back(R.format(a));
    r["idempotents"] = idem;
    r["automorphisms"] = ring_automorphisms(R).size();
    if (!o.localize.empty()) {
        Ring base = R;
        std::optional<Elem> gen;
        for (Elem a : R.elements())
            if (R.format(a) == o.localize) gen = a;
        if (!gen) throw UsageError("--localize: '" + o.localize + "' is not an element of " + R.spec());
        Ideal p = ideal_generated(R, {*gen});
        if (!is_prime_ideal(R, p)) throw UsageError("--localize: (" + o.localize + ") is not a prime ideal");
        auto loc = localize_at(R, p);
        r["localized"] = {{"at", o.localize}, {"size", loc.ring.size()}, {"local", is_local_ring(loc.ring)}};
    }
    return emb.map.injective() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chevtool: Chevalley groups over finite commutative rings"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    std::string config_path;
    app.add_option("--config", config_path, "key=value defaults; flags override");
    std::vector<Binding> bindings;
    auto bind_str = [&](CLI::App* sub, const std::string& name, std::string& field, const std::string& help) {
        bindings.push_back({sub->add_option("--" + name, field, help), name, [&field](const std::string& v) { field = v; }});
    };
    auto bind_size = [&](CLI::App* sub, const std::string& name, auto& field, const std::string& help) {
        bindings.push_back({sub->add_option("--" + name, field, help), name, [&field, name](const std::string& v) {
                                field = static_cast<std::remove_reference_t<decltype(field)>>(to_uint(name, v));
                            }});
    };
    auto bind_flag = [&](CLI::App* sub, const std::string& name, bool& field, const std::string& help) {
        bindings.push_back({sub->add_flag("--" + name, field, help), name, [&field, name](const std::string& v) {
                                field = to_bool(name, v);
                            }});
    };
    auto common = [&](CLI::App* sub, bool ring, bool rep) {
        bind_str(sub, "system", o.system, "root system, e.g. A2, B3, E6");
        if (ring) bind_str(sub, "ring", o.ring, "ring spec, e.g. Z/6, GF(4), Z/5[y]/(y^2-2)");
        if (rep) bind_str(sub, "rep", o.rep, "adjoint | sc | standard | universal | w<k>");
        bind_str(sub, "out", o.out, "write the report here instead of stdout");
        bind_size(sub, "seed", o.seed, "seed for every sampled choice");
        bind_size(sub, "budget", o.budget, "closure / enumeration budget");
        bind_flag(sub, "timing", o.timing, "add wall-clock timing to the report (breaks byte-identity)");
    };

    auto* rootsys = app.add_subcommand("rootsys", "roots, Cartan matrix, Weyl data");
    common(rootsys, false, false);
    auto* basis = app.add_subcommand("basis", "Chevalley basis structure constants");
    common(basis, false, false);
    auto* rep = app.add_subcommand("rep", "representation matrices and checks");
    common(rep, false, true);
    bind_flag(rep, "diagram", o.diagram, "include the weight diagram");
    auto* relations = app.add_subcommand("relations", "verify Steinberg relations R1-R6 and e4");
    common(relations, true, true);
    bind_flag(relations, "exhaustive", o.exhaustive, "enumerate every case");
    bind_size(relations, "samples", o.samples, "samples per relation when not exhaustive");
    relations->add_option("--relation", o.relations, "relation ids (default: all)")->delimiter(',');
    auto* constants = app.add_subcommand("constants", "commutator constants for a pair of roots");
    common(constants, false, false);
    bind_str(constants, "pair", o.pair, "two roots, e.g. a,b or a1+a2,a2");
    auto* group = app.add_subcommand("group", "elementary group order and centers");
    common(group, true, true);
    auto* generate = app.add_subcommand("generate", "generation lemmas");
    generate->require_subcommand(1);
    auto* mn = generate->add_subcommand("check-mn", "algebra generated by pi(X_a) and 1");
    common(mn, true, true);
    auto* lemma1 = generate->add_subcommand("lemma1", "recover pi(X_a) from x_a(1)");
    common(lemma1, true, true);
    bind_str(lemma1, "mode", o.mode, "half | square-zero");
    auto* path = generate->add_subcommand("path", "weight-diagram matrix-unit certificate");
    common(path, false, false);
    bind_str(path, "weight", o.weight, "microweight tag, e.g. w2");
    bind_str(path, "from", o.from, "upper vertex, e.g. g1 (1-based)");
    bind_size(path, "label", o.label, "edge label (1-based)");
    bind_str(path, "labels", o.labels, "check this label sequence instead of searching, e.g. 2,1,3");
    bind_flag(path, "ascending", o.ascending, "read --labels as an ascending certificate");
    bind_size(path, "max-len", o.max_len, "longest path searched (0: twice the diameter)");
    auto* autos = app.add_subcommand("auto", "standard automorphisms");
    autos->require_subcommand(1);
    auto* dec = autos->add_subcommand("decompose", "decompose a presented automorphism");
    common(dec, true, true);
    dec->add_option("--lattice", o.rep, "alias of --rep");
    bind_str(dec, "input", o.input, "presentation JSON: list of {root, param, image}");
    bind_flag(dec, "override", o.override_gate, "run outside the theorem's invertibility hypotheses");
    auto* rnd = autos->add_subcommand("random", "presentation of a seeded random standard automorphism");
    common(rnd, true, true);
    rnd->add_option("--lattice", o.rep, "alias of --rep");
    auto* ident = autos->add_subcommand("identity", "presentation of the identity");
    common(ident, true, true);
    ident->add_option("--lattice", o.rep, "alias of --rep");
    auto* ring = app.add_subcommand("ring", "ring facts: ideals, localizations, idempotents");
    bind_str(ring, "ring", o.ring, "ring spec");
    bind_str(ring, "localize", o.localize, "generator of a prime ideal to localize at");
    bind_str(ring, "out", o.out, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    ordered_json report;
    int code = kUsage;
    std::string command;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (!config_path.empty()) {
            auto cfg = read_config(config_path);
            for (const auto& [k, v] : cfg) {
                // several subcommands share one field; any of them given on the command line wins
                const Binding* target = nullptr;
                bool given = false;
                for (const auto& b : bindings)
                    if (b.key == k) {
                        target = &b;
                        given = given || b.opt->count() > 0;
                    }
                if (!target) throw UsageError("unknown config key " + k);
                if (!given) target->set(v);
            }
        }
        ordered_json cfg;
        for (auto* sub : app.get_subcommands()) {
            command = sub->get_name();
            for (auto* s2 : sub->get_subcommands()) command += " " + s2->get_name();
        }
        cfg["command"] = command;
        if (command != "ring") cfg["system"] = o.system;
        if (command != "rootsys" && command != "basis" && command != "constants" && command != "generate path")
            cfg["ring"] = o.ring;
        if (command == "rep" || command == "relations" || command == "group" || command == "generate check-mn" ||
            command == "generate lemma1" || command.rfind("auto", 0) == 0)
            cfg["rep"] = o.rep;
        cfg["seed"] = o.seed;
        cfg["budget"] = o.budget;
        if (command == "relations") {
            cfg["exhaustive"] = o.exhaustive;
            cfg["samples"] = o.samples;
        }
        report["tool"] = "chevtool";
        report["config"] = cfg;
        ordered_json result;
        if (command == "rootsys") code = cmd_rootsys(o, result);
        else if (command == "basis") code = cmd_basis(o, result);
        else if (command == "rep") code = cmd_rep(o, result);
        else if (command == "relations") code = cmd_relations(o, result);
        else if (command == "constants") code = cmd_constants(o, result);
        else if (command == "group") code = cmd_group(o, result);
        else if (command == "generate check-mn") code = cmd_generate_mn(o, result);
        else if (command == "generate lemma1") code = cmd_generate_lemma1(o, result);
        else if (command == "generate path") code = cmd_generate_path(o, result);
        else if (command == "auto decompose") code = cmd_auto_decompose(o, result);
        else if (command == "auto random") code = cmd_auto_random(o, result, false);
        else if (command == "auto identity") code = cmd_auto_random(o, result, true);
        else if (command == "ring") code = cmd_ring(o, result);
        else throw UsageError("unknown command " + command);
        report["verdict"] = verdict_name(code);
        report["result"] = result;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const RingSpecError& e) {
        std::cerr << "error: ring spec: " << e.what() << "\n";
        return kUsage;
    } catch (const RootSystemError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const RepresentationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const AutomorphismError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kUndecided;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kFail;
    }
    if (o.timing)
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::string text = report.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return kUsage;
        }
        f << text;
    }
    return code;
}
