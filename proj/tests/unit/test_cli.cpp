#include "doctest.h"

#include "../../tools/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int status = copwin::cli::dispatch(args, in, out, err);
    return {status, out.str(), err.str()};
}

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("copwin_cli_" + std::to_string(std::rand()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    std::string write(const std::string& name, const std::string& body) const {
        std::ofstream(path(name)) << body;
        return path(name);
    }
};

} // namespace

TEST_CASE("generate, order and solve") {
    Scratch s;
    Run g = cli({"generate", "--family", "cycle", "--n", "4"});
    CHECK(g.status == 0);
    std::string c4 = s.write("c4.graph", g.out);
    Run solve = cli({"solve", "--graph", c4});
    CHECK(solve.status == 0);
    CHECK(solve.out == "robber-win\n");
    Run ord = cli({"order", "--graph", c4});
    CHECK(ord.out == "not constructible\n");

    Run h = cli({"generate", "--family", "h_block", "--out", s.path("h")});
    CHECK(h.status == 0);
    CHECK(h.out.find("h.order") != std::string::npos);
    Run verify = cli({"verify", "--graph", s.path("h.graph"), "--order", s.path("h.order"), "--shifted"});
    CHECK(verify.status == 0);
    CHECK(verify.out.find("constructing order: ok") != std::string::npos);
    CHECK(verify.out.find("shifted-edge property: ok") != std::string::npos);
    Run hs = cli({"solve", "--graph", s.path("h.graph"), "--table"});
    CHECK(hs.out.rfind("cop-win\n", 0) == 0);
    CHECK(hs.out.find("steps_cop_to_move") != std::string::npos);

    Run found = cli({"order", "--graph", s.path("h.graph"), "--flavor", "dismantling"});
    std::string dis = s.write("h.dis", found.out);
    Run vd = cli({"verify", "--graph", s.path("h.graph"), "--order", dis});
    CHECK(vd.out.find("dismantling order: ok") != std::string::npos);

    CHECK(cli({"generate", "--family", "random_constructible", "--n", "5"}).status == 2);
    CHECK(cli({"generate", "--family", "random_constructible", "--n", "5", "--seed", "3"}).status == 0);
    CHECK(cli({"generate", "--family", "tree", "--degree", "3", "--radius", "2", "--dot"}).out.find("--") !=
          std::string::npos);
}

TEST_CASE("a/b family with exemptions and its retraction") {
    Scratch s;
    cli({"generate", "--family", "ab_graph", "--n", "9", "--out", s.path("ab")});
    Run strict = cli({"verify", "--graph", s.path("ab.graph"), "--order", s.path("ab.order")});
    CHECK(strict.status == 1);
    Run lax = cli({"verify", "--graph", s.path("ab.graph"), "--order", s.path("ab.order"), "--exempt", "9",
                   "--retraction", s.path("ab.retraction")});
    CHECK(lax.status == 0);
    CHECK(lax.out.find("retraction: ok") != std::string::npos);
    Run shifted = cli({"verify", "--graph", s.path("ab.graph"), "--order", s.path("ab.order"), "--exempt", "9",
                       "--shifted"});
    // Checked over the ranks where the family is total.
    CHECK(shifted.status == 0);
    CHECK(shifted.out.find("shifted-edge property: ok") != std::string::npos);
}

TEST_CASE("simulate and verify transcripts") {
    Scratch s;
    cli({"generate", "--family", "h_block", "--out", s.path("h")});
    const std::string g = s.path("h.graph"), o = s.path("h.order");
    Run sim = cli({"simulate", "--graph", g, "--order", o, "--robber", "greedy", "--out", s.path("t.txt")});
    CHECK(sim.status == 0);
    CHECK(sim.out.rfind("capture", 0) == 0);
    CHECK(cli({"verify", "--graph", g, "--transcript", s.path("t.txt")}).status == 0);

    Run js = cli({"simulate", "--graph", g, "--order", o, "--format", "json"});
    std::string json = s.write("t.json", js.out);
    CHECK(js.out.find("stage_annotations") != std::string::npos);
    CHECK(cli({"verify", "--graph", g, "--transcript", json, "--criterion", "weak", "--bound", "default", "--order",
               o})
              .status == 0);

    // The robber shuttles between a_2 and a_3 while the cop waits on a_0.
    std::string osc = s.write("osc.txt",
                              "0 cop 0\n1 robber 2\n2 cop 0\n3 robber 3\n4 cop 0\n5 robber 2\n6 cop 0\n7 robber 3\n");
    Run cw = cli({"verify", "--graph", g, "--transcript", osc, "--criterion", "cweak"});
    CHECK(cw.status == 1);
    CHECK(cw.out.find("criterion cweak: violation") != std::string::npos);
    CHECK(cli({"verify", "--graph", g, "--transcript", osc}).status == 1);
    std::string one = s.write("one", "2\n");
    CHECK(cli({"verify", "--graph", g, "--transcript", osc, "--criterion", "weak", "--bound", one}).status == 0);

    std::string script = s.write("script", "7 8 9 8\n");
    Run scripted = cli({"simulate", "--graph", g, "--order", o, "--robber", "script:" + script, "--horizon", "8"});
    CHECK(scripted.status == 0);
    CHECK(scripted.out.find("1 robber 7") != std::string::npos);

    Run evader = cli({"simulate", "--graph", g, "--order", o, "--robber", "h_evader", "--horizon", "40"});
    CHECK(evader.status == 0);
}

TEST_CASE("timing") {
    Scratch s;
    cli({"generate", "--family", "path", "--n", "4", "--out", s.path("p")});
    Run t = cli({"timing", "--graph", s.path("p.graph"), "--order", s.path("p.order")});
    CHECK(t.status == 0);
    CHECK(t.out.find("t_c") != std::string::npos);
}

TEST_CASE("interactive play") {
    Scratch s;
    cli({"generate", "--family", "path", "--n", "3", "--out", s.path("p")});
    Run p = cli({"play", "--graph", s.path("p.graph"), "--order", s.path("p.order")}, "2 0 2 2\n");
    CHECK(p.status == 0);
    CHECK(p.out.find("illegal move 0") != std::string::npos);
    CHECK(p.out.find("captured at round 4") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    Scratch s;
    CHECK(cli({}).status == 2);
    CHECK(cli({"solve"}).status == 2);
    CHECK(cli({"solve", "--graph", s.path("missing")}).status == 2);
    CHECK(cli({"generate", "--family", "nope"}).status == 2);
    CHECK(cli({"frobnicate"}).status == 2);
    std::string broken = s.write("broken.graph", "3\n0 5\n");
    Run r = cli({"solve", "--graph", broken});
    CHECK(r.status == 2);
    CHECK(r.err.find("error") != std::string::npos);
    CHECK(cli({"--help"}).status == 0);
}
