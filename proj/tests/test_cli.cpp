#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "graphk/graph.hpp"
#include "graphk/text.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string cli_path() {
#ifdef GRAPHK_CLI_PATH
    return GRAPHK_CLI_PATH;
#else
    const char* p = std::getenv("GRAPHK_CLI_PATH");
    REQUIRE(p != nullptr);
    return p;
#endif
}

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = "\"" + cli_path() + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int st = pclose(pipe);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
}

}  // namespace

TEST_CASE("k0 subcommand") {
    RunResult text = run("k0 --graph graph_e");
    CHECK(text.code == 0);
    CHECK(text.out ==
          "invariant_factors: \nfree_rank: 1\nclass v: -2\nclass w: 1\nunit: -1\nk1_rank: 0\n");

    RunResult j = run("k0 --graph graph_e --format json");
    CHECK(j.code == 0);
    json d = json::parse(j.out);
    CHECK(d["invariant_factors"] == json::array());
    CHECK(d["free_rank"] == 1);
    CHECK(d["classes"]["v"] == json::array({-2}));
    CHECK(d["classes"]["w"] == json::array({1}));
    CHECK(d["unit"] == json::array({-1}));
    CHECK(d["k1_rank"] == 0);

    // Byte determinism: identical invocations produce identical bytes.
    CHECK(run("k0 --graph graph_e --format json").out == j.out);

    // The key order is fixed, not alphabetical.
    CHECK(j.out.find("invariant_factors") < j.out.find("free_rank"));
    CHECK(j.out.find("free_rank") < j.out.find("classes"));
    CHECK(j.out.find("unit") < j.out.find("k1_rank"));
}

TEST_CASE("h0 agrees with k0 for every fixture") {
    for (const auto& name : graphk::fixture_names()) {
        RunResult a = run("k0 --graph " + name + " --format json");
        RunResult b = run("h0 --graph " + name + " --format json");
        CHECK(a.code == 0);
        CHECK(b.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("k1 and classify subcommands") {
    CHECK(run("k1 --graph graph_e").out == "k1_rank: 0\n");
    CHECK(json::parse(run("k1 --graph graph_e --format json").out)["k1_rank"] == 0);

    RunResult c = run("classify --graph graph_e --other graph_f");
    CHECK(c.code == 0);
    CHECK(c.out == "IsoOnlyFlippingUnit\n");
    CHECK(run("classify --graph e_infinity --other e_infinity_minus").out ==
          "IsoPreservingUnit\n");
    CHECK(json::parse(run("classify --graph graph_e --other graph_f --format json").out)["verdict"] ==
          "IsoOnlyFlippingUnit");
}

TEST_CASE("graphs load from files as well as fixture names") {
    write_file("cli_graph.txt", "edge a a 3\n");
    CHECK(run("k0 --graph cli_graph.txt").out ==
          "invariant_factors: 2\nfree_rank: 0\nclass a: 1\nunit: 1\nk1_rank: 0\n");

    RunResult missing = run("k0 --graph no_such_file", true);
    CHECK(missing.code == 1);
    CHECK(missing.out.find("error:") != std::string::npos);
}

TEST_CASE("dot subcommand") {
    RunResult d = run("dot --graph graph_e");
    CHECK(d.code == 0);
    CHECK(d.out.substr(0, 9) == "digraph {");
    CHECK(d.out.find("\"w\" -> \"v\" [label=\"∞\"];") != std::string::npos);
}

TEST_CASE("monoid equality subcommand") {
    CHECK(run("monoid-eq --graph graph_e --lhs v --rhs '2*v + 2*w'").out == "Equal\n");
    CHECK(run("monoid-eq --graph graph_e --lhs v --rhs w").out == "NotEqual\n");
    CHECK(run("monoid-eq --graph e_infinity --lhs c --rhs 'c + q{c: e0}'").out == "Equal\n");
    CHECK(json::parse(run("monoid-eq --graph graph_e --lhs v --rhs v --format json").out)["result"] ==
          "Equal");

    RunResult bad = run("monoid-eq --graph graph_e --lhs 'q{v: e0}' --rhs v", true);
    CHECK(bad.code == 1);
    CHECK(bad.out.find("error:") != std::string::npos);
}

TEST_CASE("cylinder subcommand") {
    CHECK(run("cyl-op --graph e_infinity --op subtract --a 'Z(c)' --b 'Z(c.e0.e1)'").out ==
          "Z(c \\ {e0}) + Z(c.e0 \\ {e1})\n");
    CHECK(run("cyl-op --graph e_infinity --op intersect --a 'Z(c \\ {e0})' --b 'Z(c \\ {e1})'").out ==
          "Z(c \\ {e0, e1})\n");
    CHECK(run("cyl-op --graph graph_e --op full").out == "Z(v) + Z(w)\n");
    CHECK(run("cyl-op --graph e_infinity --op class --a 'Z(c \\ {e0})'").out == "q{c: e0}\n");
    CHECK(run("cyl-op --graph e_infinity --op member --a 'Z(c \\ {e0})' --path c").out ==
          "insufficient-depth\n");
    CHECK(run("cyl-op --graph e_infinity --op member --a 'Z(c \\ {e0})' --path c --terminal").out ==
          "yes\n");
    CHECK(run("cyl-op --graph e_infinity --op member --a 'Z(c \\ {e0})' --path c.e0 --terminal").out ==
          "no\n");

    RunResult missing_arg = run("cyl-op --graph graph_e --op subtract --a 'Z(v)'", true);
    CHECK(missing_arg.code == 1);
    CHECK(missing_arg.out.find("--b is required") != std::string::npos);
}

TEST_CASE("move subcommand") {
    RunResult split = run("move --graph e_infinity --kind outsplit --partition 'c = {c: 2} | {c: inf}'");
    CHECK(split.code == 0);
    graphk::Graph g = graphk::parse_graph(split.out);
    CHECK(g == graphk::parse_graph("vertex c#1\nvertex c#2\nedge c#1 c#1 2\nedge c#1 c#2 2\n"
                                   "edge c#2 c#1 inf\nedge c#2 c#2 inf\n"));
    CHECK(graphk::isomorphic(g, graphk::fixture("graph_e")));

    RunResult grown = run("move --graph graph_e --kind add-sources --vertex w --count 2");
    CHECK(grown.code == 0);
    CHECK(graphk::isomorphic(graphk::parse_graph(grown.out), graphk::fixture("graph_f")));

    RunResult fan = run("move --graph graph_e --kind fan --count 1");
    CHECK(fan.code == 0);
    CHECK(graphk::parse_graph(fan.out).vertex_count() == 4);

    RunResult bad = run("move --graph graph_e --kind outsplit", true);
    CHECK(bad.code == 1);
    CHECK(bad.out.find("--partition is required") != std::string::npos);
}

TEST_CASE("certificate subcommands round trip through files") {
    write_file("cli_b.json", "[[1],[2]]");
    write_file("cli_c.json", "[[1],[2]]");

    RunResult found = run(
        "cert-search --b cli_b.json --c cli_c.json --det=-1 --unit-src 1,1 --unit-tgt 1,3 "
        "--format json");
    CHECK(found.code == 0);
    json d = json::parse(found.out);
    REQUIRE(d["found"] == true);
    CHECK(d["word_length"] == 3);
    CHECK(d["certificate"]["U"] == json::array({{-1, 1}, {0, 1}}));
    CHECK(d["certificate"]["V"] == json::array({{1}}));
    CHECK(d["certificate"]["required_detU"] == "-1");
    CHECK(d["certificate"]["unit_src"] == json::array({1, 1}));
    CHECK(d["certificate"]["unit_tgt"] == json::array({1, 3}));

    write_file("cli_cert.json", d["certificate"].dump());
    RunResult ok = run("cert-verify --b cli_b.json --c cli_c.json --cert cli_cert.json");
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid\n");

    json tampered = d["certificate"];
    tampered["unit_tgt"] = json::array({1, 4});
    write_file("cli_cert_bad.json", tampered.dump());
    RunResult bad = run("cert-verify --b cli_b.json --c cli_c.json --cert cli_cert_bad.json");
    CHECK(bad.code == 0);
    CHECK(bad.out == "invalid\n");

    json malformed = d["certificate"];
    malformed["U"] = json::array({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    write_file("cli_cert_malformed.json", malformed.dump());
    RunResult err = run("cert-verify --b cli_b.json --c cli_c.json --cert cli_cert_malformed.json", true);
    CHECK(err.code == 1);
    CHECK(err.out.find("error:") != std::string::npos);

    CHECK(run("cert-search --b cli_b.json --c cli_c.json --det=+1 --unit-src 1,1 --unit-tgt 1,3").out ==
          "found: no\n");
    RunResult text = run("cert-search --b cli_b.json --c cli_c.json --det=-1");
    CHECK(text.out.find("found: yes") == 0);
}

TEST_CASE("report subcommand") {
    RunResult rep = run("report unit-flip");
    CHECK(rep.code == 0);
    CHECK(rep.out.find("pointed-class comparison: IsoOnlyFlippingUnit") != std::string::npos);
    CHECK(rep.out.find("det +1 certificate within bound 8: not found") != std::string::npos);
    CHECK(rep.out.find("det -1 certificate within bound 8: found, word length 3") != std::string::npos);

    RunResult j1 = run("report unit-flip --format json");
    RunResult j2 = run("report unit-flip --format json");
    CHECK(j1.code == 0);
    CHECK(j1.out == j2.out);
    json d = json::parse(j1.out);
    CHECK(d["verdict"] == "IsoOnlyFlippingUnit");
    CHECK(d["plus_found"] == false);
    CHECK(d["minus_found"] == true);
    CHECK(d["source_weights"] == json::array({1, 1}));
    CHECK(d["target_weights"] == json::array({1, 3}));

    RunResult unknown = run("report nonsense", true);
    CHECK(unknown.code == 1);
    CHECK(unknown.out.find("unknown report topic") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("frobnicate", true).code == 2);
    CHECK(run("k0", true).code == 2);  // missing --graph
    CHECK(run("k0 --graph graph_e --format xml", true).code == 2);
    CHECK(run("", true).code == 2);  // a subcommand is required
    RunResult help = run("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("k0") != std::string::npos);
}
