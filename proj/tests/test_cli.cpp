#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "common.hpp"
#include "loopdec/applications.hpp"
#include "loopdec/cli.hpp"
#include "loopdec/json_io.hpp"
#include "loopdec/pbd.hpp"
#include "loopdec/verifier.hpp"

using namespace loopdec;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream o, e;
    int code = run_cli(args, o, e);
    return {code, o.str(), e.str()};
}

json out_json(const CliResult& r) { return json::parse(r.out); }

std::string err_code(const CliResult& r) {
    return json::parse(r.err).at("error").get<std::string>();
}

std::string scratch(const std::string& name) {
    std::filesystem::create_directories("cli_scratch");
    return "cli_scratch/" + name;
}

std::string write_graph(const std::string& name, const LoopedGraph& g) {
    auto p = scratch(name);
    save_json_file(p, graph_to_json(g));
    return p;
}

std::string write_dec(const std::string& name, const Decomposition& d) {
    auto p = scratch(name);
    save_json_file(p, decomposition_to_json(d));
    return p;
}

} // namespace

TEST_CASE("json round trips") {
    for (const auto& g : {tfix::k3(), tfix::c5_two_color(),
                          tfix::bowtie_two_color_a(), seats_clique(3),
                          LoopedGraph::create(3, 2, {{0, 1}}, {{0, 5}, {2, 0}, {0, 0}})})
        CHECK(graph_from_json(graph_to_json(g)) == g);

    auto d = tfix::c5_signed_certificate();
    auto back = decomposition_from_json(decomposition_to_json(d));
    CHECK(back.graph == d.graph);
    CHECK(back.host == d.host);
    CHECK(back.blocks == d.blocks);

    auto p = pbd_fano();
    auto pj = pbd_from_json(pbd_to_json(p));
    CHECK(pj.v == p.v);
    CHECK(pj.blocks == p.blocks);

    int s = 0;
    std::vector<int> colors;
    coloring_from_json(coloring_to_json(2, {1, 2, 2, 1}), s, colors);
    CHECK(s == 2);
    CHECK(colors == std::vector<int>{1, 2, 2, 1});

    CHECK(order_from_json(order_to_json({2, 0, 1})) == std::vector<int>{2, 0, 1});

    // loops are stored sparsely: zero rows vanish from the file
    auto gj = graph_to_json(tfix::p4_end_mid_loops());
    CHECK(gj["loops"].size() == 2);

    CHECK(tfix::code_of([] { graph_from_json(json{{"n", 2}, {"c", 0}}); }) ==
          "MalformedInput");
    CHECK(tfix::code_of([] {
              graph_from_json(json{{"n", 2},
                                   {"c", 1},
                                   {"edges", json::array({json::array({0, 1})})},
                                   {"loops", {{"5", {{"0", 1}}}}}});
          }) == "MalformedInput");
    CHECK(tfix::code_of([] {
              auto j = decomposition_to_json(tfix::k2_gadget_triangle());
              j["blocks"][0]["sign"] = 0;
              decomposition_from_json(j);
          }) == "MalformedInput");
}

TEST_CASE("alpha, mu, admissible, residues commands") {
    auto a = write_graph("bowtie_a.json", tfix::bowtie_two_color_a());
    auto b = write_graph("bowtie_b.json", tfix::bowtie_two_color_b());
    auto c5 = write_graph("c5d.json", tfix::c5_two_color());

    auto r = run({"alpha", "--graph", a});
    CHECK(r.code == 0);
    CHECK(out_json(r)["alpha"] == 6);
    CHECK(out_json(run({"alpha", "--graph", b}))["alpha"] == 12);

    r = run({"mu", "--graph", c5, "--v", "5"});
    CHECK(r.code == 0);
    CHECK(out_json(r)["mu"] == json::array({2, 2}));

    r = run({"mu", "--graph", c5, "--v", "4"});
    CHECK(r.code == 1);
    CHECK(err_code(r) == "NonIntegralMu");

    r = run({"admissible", "--graph", a, "--v", "16", "--lambda", "2"});
    CHECK(r.code == 0);
    auto j = out_json(r);
    CHECK(j["admissible"] == true);
    CHECK(j["mu"] == json::array({10, 10}));

    r = run({"admissible", "--graph", b, "--v", "16", "--lambda", "2"});
    CHECK(r.code == 1);
    j = out_json(r);
    CHECK(j["admissible"] == false);
    CHECK(j["global_ok"] == true);
    CHECK(j["local_ok"] == false);
    CHECK(!j.contains("mu"));

    r = run({"residues", "--graph", a, "--lambda", "2", "--modulus", "12"});
    CHECK(r.code == 0);
    CHECK(out_json(r)["residues"] == json::array({1, 4, 7, 10}));
}

TEST_CASE("construct and solve commands") {
    auto seats = write_graph("seats3.json", seats_clique(3));
    auto out_file = scratch("seats3_dec.json");

    auto r = run({"construct", "--graph", seats, "--q", "7", "--out", out_file});
    CHECK(r.code == 0);
    auto j = out_json(r);
    CHECK(j["blocks"] == 7);
    CHECK(j["verified"] == true);
    auto d = decomposition_from_json(load_json_file(out_file));
    CHECK(verify_decomposition(d).pass);
    CHECK(d.host.mu == std::vector<long long>{1, 1, 1});

    r = run({"construct", "--graph", seats, "--q", "8"});
    CHECK(r.code == 1);
    CHECK(err_code(r) == "BadCongruence");

    auto c5 = write_graph("c5d2.json", tfix::c5_two_color());
    r = run({"solve-signed", "--graph", c5, "--v", "5"});
    CHECK(r.code == 0);
    auto sd = decomposition_from_json(out_json(r));
    CHECK(verify_decomposition(sd).pass);

    r = run({"solve-signed", "--graph", c5, "--v", "6"});
    CHECK(r.code == 1);
    CHECK(err_code(r) == "Inconsistent");

    r = run({"solve-signed", "--graph", c5, "--v", "4"});
    CHECK(r.code == 1);
    CHECK(err_code(r) == "InvalidParameter");

    auto k3 = write_graph("k3.json", tfix::k3());
    auto sts_file = scratch("sts7.json");
    r = run({"solve-nonneg", "--graph", k3, "--v", "7", "--out", sts_file});
    CHECK(r.code == 0);
    CHECK(out_json(r)["blocks"] == 7);

    r = run({"verify", "--dec", sts_file, "--balance"});
    CHECK(r.code == 0);
    j = out_json(r);
    CHECK(j["pass"] == true);
    CHECK(j["balanced"]["replication"] == json::array({3, 3, 3, 3, 3, 3, 3}));
}

TEST_CASE("verify command composes its report") {
    auto good = write_dec("cert.json", tfix::c5_signed_certificate());
    auto r = run({"verify", "--dec", good});
    CHECK(r.code == 0);
    CHECK(out_json(r)["decomposition"]["pass"] == true);

    auto broken = tfix::c5_signed_certificate();
    broken.blocks[5].sign = 1;
    auto bad = write_dec("cert_bad.json", broken);
    r = run({"verify", "--dec", bad});
    CHECK(r.code == 1);
    auto j = out_json(r);
    CHECK(j["pass"] == false);
    CHECK(j["decomposition"]["edge_defects"].size() == 5);

    // ordering check wired through files
    auto tri = write_dec("gadget.json", tfix::k2_gadget_triangle());
    auto ord = scratch("order.json");
    save_json_file(ord, order_to_json({0, 1, 2}));
    r = run({"verify", "--dec", tri, "--order", ord, "--s-vertex", "0",
             "--t-vertex", "1"});
    CHECK(r.code == 0);
    CHECK(out_json(r)["ordering"]["pass"] == true);

    r = run({"verify", "--dec", tri, "--order", ord});
    CHECK(r.code == 1);
    CHECK(err_code(r) == "InvalidParameter");
}

TEST_CASE("attach, order, extract-coloring, compose, pbd-params") {
    auto p4 = write_graph("p4.json", tfix::p4());
    auto r = run({"attach", "--mode", "degree", "--graph", p4});
    CHECK(r.code == 0);
    auto j = out_json(r);
    CHECK(graph_from_json(j["graph"]) == attach_degree_loops(tfix::p4()));
    CHECK(j["colors"].size() == 2);

    r = run({"attach", "--mode", "seats", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(graph_from_json(out_json(r)["graph"]) == seats_clique(3));

    auto k3 = write_graph("k3u.json", tfix::k3());
    r = run({"attach", "--mode", "union", "--graph", k3, "--s", "2"});
    CHECK(r.code == 0);
    CHECK(graph_from_json(out_json(r)["graph"]) ==
          build_equitable_union(tfix::k3(), 2));

    r = run({"attach", "--mode", "nonsense", "--graph", p4});
    CHECK(r.code == 1);
    CHECK(err_code(r) == "InvalidParameter");

    auto tri = write_dec("gadget2.json", tfix::k2_gadget_triangle());
    auto ord_file = scratch("gadget_order.json");
    r = run({"order", "--dec", tri, "--s", "0", "--t", "1", "--out", ord_file});
    CHECK(r.code == 0);
    auto order = order_from_json(load_json_file(ord_file));
    CHECK(verify_block_ordering(tfix::k2_gadget_triangle(), order, 0, 1));

    // union design -> split design plus coloring, then verify through files
    Decomposition u;
    u.graph = build_equitable_union(tfix::k3(), 2);
    u.host = HostSpec{7, 2, {3, 3}};
    for (int rr = 0; rr < 7; rr++)
        u.blocks.push_back({{(1 + rr) % 7, (2 + rr) % 7, (4 + rr) % 7,
                             (3 + rr) % 7, (5 + rr) % 7, (6 + rr) % 7},
                            1});
    auto u_file = write_dec("union7.json", u);
    auto split_file = scratch("split7.json");
    auto col_file = scratch("colors7.json");
    r = run({"extract-coloring", "--dec", u_file, "--out-dec", split_file,
             "--out-coloring", col_file});
    CHECK(r.code == 0);
    r = run({"verify", "--dec", split_file, "--coloring", col_file});
    CHECK(r.code == 0);
    CHECK(out_json(r)["coloring"]["pass"] == true);

    auto fano = scratch("fano.json");
    save_json_file(fano, pbd_to_json(pbd_fano()));
    auto comp_file = scratch("composite.json");
    r = run({"compose", "--pbd", fano, "--part", "3=" + tri, "--out", comp_file});
    CHECK(r.code == 0);
    j = out_json(r);
    CHECK(j["blocks"] == 21);
    CHECK(j["v"] == 7);
    auto comp = decomposition_from_json(load_json_file(comp_file));
    CHECK(comp.host == HostSpec{7, 1, {3, 3}});
    CHECK(verify_decomposition(comp).pass);

    r = run({"compose", "--pbd", fano, "--part", "nonsense"});
    CHECK(r.code == 1);
    CHECK(err_code(r) == "InvalidParameter");

    r = run({"pbd-params", "--k", "3,4"});
    CHECK(r.code == 0);
    j = out_json(r);
    CHECK(j["alpha"] == 1);
    CHECK(j["beta"] == 6);

    r = run({"pbd-params", "--k", "x"});
    CHECK(r.code == 1);
    CHECK(err_code(r) == "InvalidParameter");
}

TEST_CASE("usage and error plumbing") {
    auto r = run({});
    CHECK(r.code == 2);
    CHECK(err_code(r) == "Usage");

    r = run({"frobnicate"});
    CHECK(r.code == 2);
    CHECK(err_code(r) == "Usage");

    r = run({"alpha"}); // missing --graph
    CHECK(r.code == 2);
    CHECK(err_code(r) == "Usage");

    r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("loopdec") != std::string::npos);

    r = run({"alpha", "--graph", "cli_scratch/definitely_missing.json"});
    CHECK(r.code == 1);
    CHECK(err_code(r) == "MalformedInput");

    auto junk = scratch("junk.json");
    {
        std::ofstream f(junk);
        f << "{ not json";
    }
    r = run({"alpha", "--graph", junk});
    CHECK(r.code == 1);
    CHECK(err_code(r) == "MalformedInput");

    // determinism of emitted bytes
    auto a = write_graph("det.json", tfix::bowtie_two_color_a());
    auto r1 = run({"alpha", "--graph", a});
    auto r2 = run({"alpha", "--graph", a});
    CHECK(r1.out == r2.out);
}
