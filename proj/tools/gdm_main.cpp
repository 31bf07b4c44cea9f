// gdm: construct, verify, search, and scan for (group) distance magic
// labelings of graphs, chiefly lexicographic products G[C4].
//
// Exit codes are the machine contract:
//   0  success / magic / found
//   1  none / nonexistence
//   2  precondition or usage error
//   3  internal verification mismatch (a bug, never input)
//   4  search budget exceeded (neither found nor none)

#include <charconv>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdm/construct.hpp"
#include "gdm/errors.hpp"
#include "gdm/io.hpp"
#include "gdm/oracle.hpp"

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "gdm 0.1.0 (output format v1)";

int parse_int(const std::string& s, const char* what) {
    int v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw gdm::ArgumentError(std::string("bad integer for ") + what + ": '" + s + "'");
    return v;
}

// A graph argument is a file path or a generator spec:
//   c4 | cycle:N | complete:N | kpq:M,N | windmill:M,T | empty:N |
//   circulant:N,d1,d2,...
gdm::Graph load_graph(const std::string& arg) {
    std::string s = arg;
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s.find('/') == std::string::npos && !std::filesystem::exists(arg)) {
        if (s == "c4") return gdm::cycle(4);
        auto colon = s.find(':');
        if (colon != std::string::npos) {
            std::string kind = s.substr(0, colon);
            std::vector<int> args;
            std::string rest = s.substr(colon + 1);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                auto comma = rest.find(',', pos);
                if (comma == std::string::npos) comma = rest.size();
                args.push_back(parse_int(rest.substr(pos, comma - pos), kind.c_str()));
                pos = comma + 1;
            }
            if (kind == "cycle" && args.size() == 1) return gdm::cycle(args[0]);
            if (kind == "complete" && args.size() == 1) return gdm::complete(args[0]);
            if (kind == "empty" && args.size() == 1) return gdm::empty_graph(args[0]);
            if ((kind == "kpq" || kind == "complete_bipartite") && args.size() == 2)
                return gdm::complete_bipartite(args[0], args[1]);
            if (kind == "windmill" && args.size() == 2) return gdm::dutch_windmill(args[0], args[1]);
            if (kind == "circulant" && args.size() >= 2)
                return gdm::circulant(args[0], {args.begin() + 1, args.end()});
            throw gdm::ArgumentError("unknown graph generator: " + arg);
        }
    }
    return gdm::read_graph_file(arg);
}

gdm::SearchBudget parse_budget(const std::string& spec, std::uint64_t node_limit) {
    std::size_t idx = 0;
    while (idx < spec.size() && std::isdigit(static_cast<unsigned char>(spec[idx]))) ++idx;
    if (idx == 0) throw gdm::ArgumentError("bad budget: '" + spec + "'");
    long long value = std::stoll(spec.substr(0, idx));
    std::string unit = spec.substr(idx);
    std::chrono::milliseconds ms{};
    if (unit.empty() || unit == "s") ms = std::chrono::seconds(value);
    else if (unit == "ms") ms = std::chrono::milliseconds(value);
    else if (unit == "m") ms = std::chrono::minutes(value);
    else if (unit == "h") ms = std::chrono::hours(value);
    else throw gdm::ArgumentError("bad budget unit: '" + unit + "'");
    return {ms, node_limit};
}

ordered_json element_json(const gdm::GroupElement& e) {
    return ordered_json(e.residues);
}

double seconds(std::chrono::duration<double> d) { return d.count(); }

void emit(const ordered_json& j) { std::cout << j.dump() << '\n'; }

int group_verdict_to_exit(const gdm::GroupVerdict& v) { return v.magic() ? 0 : 1; }

void print_group_verdict(const gdm::GroupVerdict& v, bool json) {
    if (json) {
        ordered_json j{{"status", gdm::to_string(v.status)}};
        if (v.mu) j["mu"] = element_json(*v.mu);
        if (v.duplicate) j["witness"] = {v.duplicate->first, v.duplicate->second};
        if (v.unequal_vertex) j["witness"] = *v.unequal_vertex;
        emit(j);
        return;
    }
    switch (v.status) {
        case gdm::VerdictStatus::Magic:
            std::cout << "MAGIC mu=" << gdm::format_element(*v.mu) << '\n';
            break;
        case gdm::VerdictStatus::NotInjective:
            std::cout << "NOT-INJECTIVE witness=(" << v.duplicate->first << ','
                      << v.duplicate->second << ")\n";
            break;
        case gdm::VerdictStatus::NonConstantWeight:
            std::cout << "NON-CONSTANT-WEIGHT witness=" << *v.unequal_vertex << '\n';
            break;
    }
}

void print_classic_verdict(const gdm::ClassicVerdict& v, bool json) {
    if (json) {
        ordered_json j{{"status", gdm::to_string(v.status)}};
        if (v.k) j["mu"] = *v.k;
        if (v.unequal_vertex) j["witness"] = *v.unequal_vertex;
        emit(j);
        return;
    }
    if (v.magic()) std::cout << "MAGIC k=" << *v.k << '\n';
    else std::cout << "NON-CONSTANT-WEIGHT witness=" << *v.unequal_vertex << '\n';
}

int run_construct(const std::string& method, const std::optional<std::string>& graph_arg,
                  const std::optional<std::string>& group_spec, std::optional<int> p,
                  std::optional<int> q, const std::optional<std::string>& inner_arg,
                  const std::optional<std::string>& base_path, std::optional<int> prime,
                  const std::optional<std::string>& out_path,
                  const std::optional<std::string>& out_product, bool json) {
    using namespace gdm;
    auto need = [](const auto& opt, const char* what) -> const auto& {
        if (!opt) throw ArgumentError(std::string("construct: missing ") + what);
        return *opt;
    };

    ConstructionOutcome outcome = [&] {
        if (method == "klein")
            return label_c4_klein(load_graph(need(graph_arg, "--graph")),
                                  AbelianGroup::parse(need(group_spec, "--group (the A part)")));
        if (method == "cyclic")
            return label_c4_cyclic_two_part(load_graph(need(graph_arg, "--graph")),
                                            need(p, "--p (2-power exponent)"),
                                            AbelianGroup::parse(need(group_spec, "--group (the A part)")));
        if (method == "auto")
            return label_c4_any_group(load_graph(need(graph_arg, "--graph")),
                                      AbelianGroup::parse(need(group_spec, "--group")));
        if (method == "kpq")
            return label_kpq_c4(need(p, "--p"), need(q, "--q"),
                                AbelianGroup::parse(need(group_spec, "--group")));
        if (method == "compose") {
            auto base = read_labeling_file(need(base_path, "--base"));
            auto* gl = std::get_if<GroupLabeling>(&base);
            if (!gl) throw ArgumentError("construct: --base must be a group labeling file");
            return label_composition(load_graph(need(graph_arg, "--graph")),
                                     load_graph(need(inner_arg, "--inner")), *gl,
                                     need(prime, "--prime"));
        }
        throw ArgumentError("construct: unknown method '" + method + "'");
    }();

    if (out_path) write_labeling_file(*out_path, outcome.labeling);
    if (out_product) write_graph_file(*out_product, outcome.product);
    if (json) {
        ordered_json j{{"status", "magic"},
                       {"mu", element_json(outcome.predicted_mu)},
                       {"theorem", outcome.theorem_tag},
                       {"group", outcome.labeling.group.spec()},
                       {"vertices", outcome.product.vertex_count()}};
        emit(j);
    } else {
        if (!out_path) write_labeling(std::cout, outcome.labeling);
        std::cout << "MAGIC mu=" << format_element(outcome.predicted_mu)
                  << " theorem=" << outcome.theorem_tag << '\n';
    }
    return 0;
}

int run_search(const std::string& graph_arg, const std::optional<std::string>& group_spec,
               bool classic, const std::string& budget_spec, std::uint64_t node_limit,
               bool deterministic, const std::optional<std::string>& out_path, bool json) {
    using namespace gdm;
    Graph g = load_graph(graph_arg);
    SearchBudget budget = parse_budget(budget_spec, node_limit);
    if (classic == group_spec.has_value())
        throw ArgumentError("search: give exactly one of --group or --classic");

    SearchOutcome outcome;
    ordered_json j;
    std::string head;
    if (classic) {
        auto rep = search_classic_dm(g, budget, deterministic);
        outcome = rep.outcome;
        j = {{"status", to_string(rep.outcome)}};
        if (rep.k) j["mu"] = *rep.k;
        j["nodes"] = rep.nodes_explored;
        j["elapsed"] = seconds(rep.elapsed);
        j["deterministic"] = rep.deterministic;
        if (rep.labeling && out_path) write_labeling_file(*out_path, *rep.labeling);
        if (rep.outcome == SearchOutcome::Found) head = "FOUND k=" + std::to_string(*rep.k);
    } else {
        auto rep = search_group_dm(g, AbelianGroup::parse(*group_spec), budget, deterministic);
        outcome = rep.outcome;
        j = {{"status", to_string(rep.outcome)}};
        if (rep.mu) j["mu"] = element_json(*rep.mu);
        j["nodes"] = rep.nodes_explored;
        j["elapsed"] = seconds(rep.elapsed);
        j["deterministic"] = rep.deterministic;
        if (rep.labeling && out_path) write_labeling_file(*out_path, *rep.labeling);
        if (rep.outcome == SearchOutcome::Found) head = "FOUND mu=" + format_element(*rep.mu);
    }
    if (json) {
        emit(j);
    } else {
        if (outcome == SearchOutcome::ExhaustedNone) head = "NONE";
        if (outcome == SearchOutcome::BudgetExceeded) head = "BUDGET-EXCEEDED";
        std::cout << head << " nodes=" << j["nodes"].get<std::uint64_t>() << " elapsed="
                  << j["elapsed"].get<double>() << "s\n";
    }
    switch (outcome) {
        case SearchOutcome::Found: return 0;
        case SearchOutcome::ExhaustedNone: return 1;
        case SearchOutcome::BudgetExceeded: return 4;
    }
    return 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"group distance magic labelings of G[C4] products"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // groups
    auto* cmd_groups = app.add_subcommand("groups", "list all abelian groups of a given order");
    std::int64_t order = 0;
    cmd_groups->add_option("--order", order, "group order")->required();

    // product
    auto* cmd_product = app.add_subcommand("product", "emit the lexicographic product of two graphs");
    std::string outer_arg, inner_arg = "c4";
    std::optional<std::string> product_out;
    cmd_product->add_option("--outer", outer_arg, "outer graph (file or generator)")->required();
    cmd_product->add_option("--inner", inner_arg, "inner graph: c4, a file, or a generator");
    cmd_product->add_option("--out", product_out, "output edge-list file (default stdout)");

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "build a labeling from one of the constructions");
    std::string method = "auto";
    std::optional<std::string> c_graph, c_group, c_inner, c_base, c_out, c_out_product;
    std::optional<int> c_p, c_q, c_prime;
    bool c_json = false;
    cmd_construct->add_option("--method", method, "auto|klein|cyclic|kpq|compose")
        ->check(CLI::IsMember({"auto", "klein", "cyclic", "kpq", "compose"}));
    cmd_construct->add_option("--graph", c_graph, "base graph G (file or generator)");
    cmd_construct->add_option("--group", c_group,
                              "group spec; full group for auto/kpq, the A part for klein/cyclic");
    cmd_construct->add_option("--p", c_p, "cyclic: 2-power exponent; kpq: even part size");
    cmd_construct->add_option("--q", c_q, "kpq: odd part size");
    cmd_construct->add_option("--inner", c_inner, "compose: inner graph H");
    cmd_construct->add_option("--base", c_base, "compose: magic labeling file of H");
    cmd_construct->add_option("--prime", c_prime, "compose: the prime p");
    cmd_construct->add_option("--out", c_out, "write the labeling here instead of stdout");
    cmd_construct->add_option("--out-product", c_out_product, "also write the product graph");
    cmd_construct->add_flag("--json", c_json, "machine-readable verdict");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify a labeling file against a graph");
    std::string v_graph, v_labeling;
    bool v_classic = false, v_json = false;
    cmd_verify->add_option("--graph", v_graph, "graph (file or generator)")->required();
    cmd_verify->add_option("--labeling", v_labeling, "labeling file")->required();
    cmd_verify->add_flag("--classic", v_classic, "require a classic {1..n} labeling");
    cmd_verify->add_flag("--json", v_json, "machine-readable verdict");

    // search
    auto* cmd_search = app.add_subcommand("search", "exhaustive backtracking search");
    std::string s_graph, s_budget = "60s";
    std::optional<std::string> s_group, s_out;
    std::uint64_t s_nodes = UINT64_MAX;
    bool s_classic = false, s_deterministic = false, s_json = false;
    cmd_search->add_option("--graph", s_graph, "graph (file or generator)")->required();
    cmd_search->add_option("--group", s_group, "abelian group spec (order = |V|)");
    cmd_search->add_flag("--classic", s_classic, "classic {1..n} distance magic search");
    cmd_search->add_option("--budget", s_budget, "time budget, e.g. 500ms, 30s, 2m");
    cmd_search->add_option("--nodes", s_nodes, "node budget");
    cmd_search->add_flag("--deterministic", s_deterministic,
                         "guarantee the lexicographically least solution");
    cmd_search->add_option("--out", s_out, "write a found labeling here");
    cmd_search->add_flag("--json", s_json, "machine-readable report");

    // windmill
    auto* cmd_windmill = app.add_subcommand("windmill", "infeasibility certificate for D_4^t[C4]");
    int w_t = 0;
    bool w_json = false;
    cmd_windmill->add_option("--t", w_t, "number of blades, t >= 2")->required();
    cmd_windmill->add_flag("--json", w_json, "machine-readable certificate");

    // scan-kmn
    auto* cmd_scan = app.add_subcommand("scan-kmn", "decide distance magic for K_{m,n}[C4], 1 <= m < n <= max");
    int scan_max = 30;
    std::optional<std::string> scan_emit;
    cmd_scan->add_option("--max", scan_max, "range bound (default 30)");
    cmd_scan->add_option("--emit", scan_emit, "directory for found labelings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_groups) {
            for (const auto& g : gdm::enumerate_groups(order)) std::cout << g.spec() << '\n';
            return 0;
        }
        if (*cmd_product) {
            gdm::Graph p = gdm::lexicographic_product(load_graph(outer_arg), load_graph(inner_arg));
            if (product_out) gdm::write_graph_file(*product_out, p);
            else gdm::write_edge_list(std::cout, p);
            return 0;
        }
        if (*cmd_construct)
            return run_construct(method, c_graph, c_group, c_p, c_q, c_inner, c_base, c_prime,
                                 c_out, c_out_product, c_json);
        if (*cmd_verify) {
            gdm::Graph g = load_graph(v_graph);
            auto labeling = gdm::read_labeling_file(v_labeling);
            if (auto* cl = std::get_if<gdm::ClassicLabeling>(&labeling)) {
                auto verdict = gdm::verify_classic(g, *cl);
                print_classic_verdict(verdict, v_json);
                return verdict.magic() ? 0 : 1;
            }
            if (v_classic) throw gdm::ArgumentError("verify: --classic given but the file is a group labeling");
            auto verdict = gdm::verify_group(g, std::get<gdm::GroupLabeling>(labeling));
            print_group_verdict(verdict, v_json);
            return group_verdict_to_exit(verdict);
        }
        if (*cmd_search)
            return run_search(s_graph, s_group, s_classic, s_budget, s_nodes, s_deterministic,
                              s_out, s_json);
        if (*cmd_windmill) {
            auto cert = gdm::windmill_certificate(w_t);
            if (!gdm::check_certificate(cert))
                throw gdm::InternalCheckError("windmill certificate failed re-checking");
            if (w_json) {
                ordered_json steps = ordered_json::array();
                for (const auto& s : cert.steps)
                    steps.push_back({{"name", s.name}, {"coeffs", s.coeffs}, {"note", s.note}});
                emit(ordered_json{{"t", cert.t},
                                  {"infeasible", cert.infeasible},
                                  {"reason", cert.reason},
                                  {"steps", steps}});
            } else {
                std::cout << gdm::format_certificate(cert) << '\n';
            }
            return cert.infeasible ? 1 : 0;
        }
        if (*cmd_scan) {
            auto results = gdm::scan_kmn_c4(scan_max);
            for (const auto& r : results) {
                std::cout << r.m << ' ' << r.n << ' ' << (r.found ? "FOUND" : "NONE") << '\n';
                if (r.found && scan_emit && r.labeling) {
                    std::filesystem::create_directories(*scan_emit);
                    gdm::write_labeling_file(*scan_emit + "/K_" + std::to_string(r.m) + "_" +
                                                 std::to_string(r.n) + "_c4.json",
                                             *r.labeling);
                }
            }
            return 0;
        }
    } catch (const gdm::InternalCheckError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const gdm::ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const gdm::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
