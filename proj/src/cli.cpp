#include "loopdec/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loopdec/applications.hpp"
#include "loopdec/cyclotomic.hpp"
#include "loopdec/json_io.hpp"
#include "loopdec/lattice.hpp"
#include "loopdec/pbd.hpp"
#include "loopdec/solver.hpp"
#include "loopdec/verifier.hpp"

namespace loopdec {

namespace {

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json verify_report_json(const VerifyReport& rep) {
    json j;
    j["pass"] = rep.pass;
    j["edge_defects"] = json::array();
    for (const auto& d : rep.edge_defects)
        j["edge_defects"].push_back(
            {{"u", d.u}, {"v", d.v}, {"got", d.got}, {"want", d.want}});
    j["loop_defects"] = json::array();
    for (const auto& d : rep.loop_defects)
        j["loop_defects"].push_back(
            {{"vertex", d.vertex}, {"color", d.color}, {"got", d.got}, {"want", d.want}});
    return j;
}

json class_report_json(const ClassBalanceReport& rep) {
    return json{{"pass", rep.pass}, {"classes", rep.classes}, {"counts", rep.counts}};
}

// "k=path" pairs from repeated --part options.
std::map<int, Decomposition> load_parts(const std::vector<std::string>& specs) {
    std::map<int, Decomposition> parts;
    for (const auto& s : specs) {
        auto eq = s.find('=');
        size_t pos = 0;
        int k = -1;
        if (eq != std::string::npos) {
            try {
                k = std::stoi(s.substr(0, eq), &pos);
            } catch (...) {
            }
        }
        if (eq == std::string::npos || pos != eq || k < 2)
            fail("InvalidParameter", "--part expects SIZE=PATH, got \"" + s + "\"");
        parts.emplace(k, decomposition_from_json(load_json_file(s.substr(eq + 1))));
    }
    return parts;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"decompositions of complete multigraphs with colored loops"};
    app.name("loopdec");
    app.require_subcommand(1);

    std::string graph_path, dec_path, pbd_path, coloring_path, order_path;
    std::string out_path, out_dec_path, out_coloring_path, mode;
    std::vector<std::string> part_specs, k_sizes;
    int v = 0, s = 0, p = -1, k = 0, s_vertex = -1, t_vertex = -1;
    long long lambda = 1, modulus = 0, q = 0, timeout_ms = 10000;
    long long budget_nodes = 10'000'000;
    unsigned long long seed = 0;
    bool check_balance = false, check_degree = false, check_orbit = false;

    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_path, "block-graph JSON file")->required();
    };
    auto add_lambda = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", lambda, "edge multiplicity of the host");
    };

    auto* c_alpha = app.add_subcommand("alpha", "local admissibility divisor of a graph");
    add_graph(c_alpha);

    auto* c_mu = app.add_subcommand("mu", "per-color host loop counts for (v, lambda)");
    add_graph(c_mu);
    c_mu->add_option("--v", v, "host vertex count")->required();
    add_lambda(c_mu);

    auto* c_adm = app.add_subcommand("admissible", "check the divisibility conditions");
    add_graph(c_adm);
    c_adm->add_option("--v", v, "host vertex count")->required();
    add_lambda(c_adm);

    auto* c_res = app.add_subcommand("residues", "admissible residues of v mod a modulus");
    add_graph(c_res);
    add_lambda(c_res);
    c_res->add_option("--modulus", modulus, "modulus for v")->required();

    auto* c_con = app.add_subcommand("construct", "difference-family construction over GF(q)");
    add_graph(c_con);
    c_con->add_option("--q", q, "field order, q = 1 (mod 2m)")->required();
    add_lambda(c_con);
    c_con->add_option("--seed", seed, "search shuffle seed");
    c_con->add_option("--timeout-ms", timeout_ms, "search budget in milliseconds");
    c_con->add_option("--out", out_path, "write the decomposition here");

    auto* c_ss = app.add_subcommand("solve-signed", "exact signed coverage solve");
    add_graph(c_ss);
    c_ss->add_option("--v", v, "host vertex count")->required();
    add_lambda(c_ss);
    c_ss->add_option("--seed", seed, "column shuffle seed (0 = canonical)");
    c_ss->add_option("--out", out_path, "write the decomposition here");

    auto* c_sn = app.add_subcommand("solve-nonneg", "depth-first honest decomposition search");
    add_graph(c_sn);
    c_sn->add_option("--v", v, "host vertex count")->required();
    add_lambda(c_sn);
    c_sn->add_option("--budget-nodes", budget_nodes, "search node budget");
    c_sn->add_option("--out", out_path, "write the decomposition here");

    auto* c_ver = app.add_subcommand("verify", "re-tally a decomposition from its raw blocks");
    c_ver->add_option("--dec", dec_path, "decomposition JSON file")->required();
    c_ver->add_flag("--balance", check_balance, "also require constant replication");
    c_ver->add_flag("--degree", check_degree, "also require degree balance");
    c_ver->add_flag("--orbit", check_orbit, "also require orbit balance");
    c_ver->add_option("--coloring", coloring_path, "coloring JSON to check equitability");
    c_ver->add_option("--s", s, "number of colors");
    c_ver->add_option("--p", p, "colors every vertex must see (default s)");
    c_ver->add_option("--order", order_path, "ordering JSON to check");
    c_ver->add_option("--s-vertex", s_vertex, "marked start vertex for ordering");
    c_ver->add_option("--t-vertex", t_vertex, "marked end vertex for ordering");

    auto* c_att = app.add_subcommand("attach", "derive a loop decoration");
    c_att->add_option("--mode", mode, "degree | orbit | seats | union")->required();
    c_att->add_option("--graph", graph_path, "input graph (degree/orbit/union)");
    c_att->add_option("--k", k, "clique size (seats)");
    c_att->add_option("--s", s, "number of copies (union)");
    c_att->add_option("--out", out_path, "write the decorated graph here");

    auto* c_ord = app.add_subcommand("order", "cyclic block ordering through marked loops");
    c_ord->add_option("--dec", dec_path, "decomposition JSON file")->required();
    c_ord->add_option("--s", s_vertex, "start vertex (color-0 loop)")->required();
    c_ord->add_option("--t", t_vertex, "end vertex (color-1 loop)")->required();
    c_ord->add_option("--out", out_path, "write the ordering here");

    auto* c_ext = app.add_subcommand("extract-coloring",
                                     "split a union design into an equitably colored one");
    c_ext->add_option("--dec", dec_path, "decomposition JSON file")->required();
    c_ext->add_option("--out-dec", out_dec_path, "write the split design here");
    c_ext->add_option("--out-coloring", out_coloring_path, "write the coloring here");

    auto* c_com = app.add_subcommand("compose", "paste ingredient designs through a PBD");
    c_com->add_option("--pbd", pbd_path, "PBD JSON file")->required();
    c_com->add_option("--part", part_specs, "SIZE=PATH ingredient decomposition")
        ->required();
    c_com->add_option("--out", out_path, "write the composite here");

    auto* c_pbd = app.add_subcommand("pbd-params", "gcd parameters of a block-size set");
    c_pbd->add_option("--k", k_sizes, "block sizes (repeat or comma separate)")
        ->required()
        ->delimiter(',');

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        emit(err, json{{"error", "Usage"}, {"message", e.what()}});
        return 2;
    }

    try {
        if (app.got_subcommand(c_alpha)) {
            auto g = graph_from_json(load_json_file(graph_path));
            emit(out, json{{"alpha", compute_alpha(g)}});
        } else if (app.got_subcommand(c_mu)) {
            auto g = graph_from_json(load_json_file(graph_path));
            emit(out, json{{"mu", compute_mu(g, v, lambda)}, {"v", v}, {"lambda", lambda}});
        } else if (app.got_subcommand(c_adm)) {
            auto g = graph_from_json(load_json_file(graph_path));
            auto rep = is_admissible(g, v, lambda);
            json j{{"admissible", rep.admissible}, {"alpha", rep.alpha},
                   {"global_ok", rep.global_ok},  {"local_ok", rep.local_ok},
                   {"v", v},                      {"lambda", lambda}};
            if (rep.admissible) j["mu"] = rep.mu;
            emit(out, j);
            return rep.admissible ? 0 : 1;
        } else if (app.got_subcommand(c_res)) {
            auto g = graph_from_json(load_json_file(graph_path));
            emit(out, json{{"modulus", modulus},
                           {"residues", admissible_residues(g, lambda, modulus)}});
        } else if (app.got_subcommand(c_con)) {
            auto g = graph_from_json(load_json_file(graph_path));
            auto d = construct_cyclotomic(g, q, lambda, seed, timeout_ms);
            json dj = decomposition_to_json(d);
            if (out_path.empty()) {
                emit(out, dj);
            } else {
                save_json_file(out_path, dj);
                emit(out, json{{"out", out_path},
                               {"blocks", d.blocks.size()},
                               {"mu", d.host.mu},
                               {"verified", true}});
            }
        } else if (app.got_subcommand(c_ss) || app.got_subcommand(c_sn)) {
            auto g = graph_from_json(load_json_file(graph_path));
            auto d = app.got_subcommand(c_ss)
                         ? solve_signed(g, v, lambda, seed)
                         : solve_nonnegative(g, v, lambda, budget_nodes);
            json dj = decomposition_to_json(d);
            if (out_path.empty()) {
                emit(out, dj);
            } else {
                save_json_file(out_path, dj);
                emit(out, json{{"out", out_path},
                               {"blocks", d.blocks.size()},
                               {"verified", true}});
            }
        } else if (app.got_subcommand(c_ver)) {
            auto d = decomposition_from_json(load_json_file(dec_path));
            json j;
            bool pass;
            {
                auto rep = verify_decomposition(d);
                j["decomposition"] = verify_report_json(rep);
                pass = rep.pass;
            }
            if (check_balance) {
                auto rep = verify_balanced(d);
                j["balanced"] = {{"pass", rep.pass}, {"replication", rep.replication}};
                pass = pass && rep.pass;
            }
            if (check_degree) {
                auto rep = verify_degree_balanced(d);
                j["degree_balanced"] = class_report_json(rep);
                pass = pass && rep.pass;
            }
            if (check_orbit) {
                auto rep = verify_orbit_balanced(d);
                j["orbit_balanced"] = class_report_json(rep);
                pass = pass && rep.pass;
            }
            if (!coloring_path.empty()) {
                int cs = 0;
                std::vector<int> colors;
                coloring_from_json(load_json_file(coloring_path), cs, colors);
                if (s != 0) cs = s;
                auto rep = verify_equitable_coloring(d, colors, cs, p < 0 ? cs : p);
                j["coloring"] = {{"pass", rep.pass}, {"defects", rep.defects}};
                pass = pass && rep.pass;
            }
            if (!order_path.empty()) {
                if (s_vertex < 0 || t_vertex < 0)
                    fail("InvalidParameter",
                         "--order needs --s-vertex and --t-vertex");
                auto order = order_from_json(load_json_file(order_path));
                bool ok = verify_block_ordering(d, order, s_vertex, t_vertex);
                j["ordering"] = {{"pass", ok}};
                pass = pass && ok;
            }
            j["pass"] = pass;
            emit(out, j);
            return pass ? 0 : 1;
        } else if (app.got_subcommand(c_att)) {
            LoopedGraph result;
            json colors = json::array();
            if (mode == "degree" || mode == "orbit" || mode == "union") {
                if (graph_path.empty())
                    fail("InvalidParameter", "--graph required for mode " + mode);
                auto g = graph_from_json(load_json_file(graph_path));
                if (mode == "degree") {
                    result = attach_degree_loops(g);
                    for (const auto& cls : degree_classes(g))
                        colors.push_back("degree " +
                                         std::to_string(g.degrees()[cls[0]]));
                } else if (mode == "orbit") {
                    result = attach_orbit_loops(g);
                    for (const auto& orb :
                         automorphism_orbits(LoopedGraph::create(g.n, 0, g.edges), false))
                        colors.push_back("orbit of vertex " + std::to_string(orb[0]));
                } else {
                    if (s < 1) fail("InvalidParameter", "--s required for mode union");
                    result = build_equitable_union(g, s);
                    for (int i = 0; i < s; i++)
                        colors.push_back("copy " + std::to_string(i));
                }
            } else if (mode == "seats") {
                if (k < 2) fail("InvalidParameter", "--k required for mode seats");
                result = seats_clique(k);
                for (int i = 0; i < k; i++)
                    colors.push_back("seat " + std::to_string(i));
            } else {
                fail("InvalidParameter", "unknown mode \"" + mode + "\"");
            }
            json gj = graph_to_json(result);
            if (!out_path.empty()) save_json_file(out_path, gj);
            emit(out, json{{"graph", gj}, {"colors", colors}});
        } else if (app.got_subcommand(c_ord)) {
            auto d = decomposition_from_json(load_json_file(dec_path));
            auto order = order_blocks(d, s_vertex, t_vertex);
            json oj = order_to_json(order);
            if (!out_path.empty()) save_json_file(out_path, oj);
            emit(out, oj);
        } else if (app.got_subcommand(c_ext)) {
            auto d = decomposition_from_json(load_json_file(dec_path));
            auto cd = extract_coloring(d);
            json dj = decomposition_to_json(cd.design);
            json cj = coloring_to_json(cd.s, cd.colors);
            if (!out_dec_path.empty()) save_json_file(out_dec_path, dj);
            if (!out_coloring_path.empty()) save_json_file(out_coloring_path, cj);
            emit(out, json{{"decomposition", dj}, {"coloring", cj}});
        } else if (app.got_subcommand(c_com)) {
            auto pb = pbd_from_json(load_json_file(pbd_path));
            auto parts = load_parts(part_specs);
            auto d = compose(pb, parts);
            json dj = decomposition_to_json(d);
            if (out_path.empty()) {
                emit(out, dj);
            } else {
                save_json_file(out_path, dj);
                emit(out, json{{"out", out_path},
                               {"blocks", d.blocks.size()},
                               {"v", d.host.v},
                               {"verified", true}});
            }
        } else if (app.got_subcommand(c_pbd)) {
            std::vector<int> K;
            for (const auto& t : k_sizes) {
                try {
                    K.push_back(std::stoi(t));
                } catch (...) {
                    fail("InvalidParameter", "bad block size \"" + t + "\"");
                }
            }
            auto params = pbd_parameters(K);
            emit(out, json{{"alpha", params.alpha}, {"beta", params.beta}});
        }
    } catch (const DomainError& e) {
        emit(err, json{{"error", e.code}, {"message", e.what()}});
        return 1;
    } catch (const std::exception& e) {
        emit(err, json{{"error", "Internal"}, {"message", e.what()}});
        return 1;
    }
    return 0;
}

} // namespace loopdec
