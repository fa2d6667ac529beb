#include "cli.hpp"

#include "tropsa/examples.hpp"
#include "tropsa/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "tropsa");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = tropsa::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("tropsa_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

tropsa::io::Json json_of(const Result& r) { return tropsa::io::Json::parse(r.out); }

} // namespace

TEST(Cli, ExampleEmitPipesIntoAnalyze) {
    const auto emitted = run({"example", "phi3_sub", "--emit"});
    ASSERT_EQ(emitted.code, 0) << emitted.err;
    const auto r = run({"--json", "analyze", "-"}, emitted.out);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json_of(r);
    EXPECT_EQ(j["report"]["actual_dim"], 4);
    EXPECT_EQ(j["report"]["expected_dim"], 3);
    EXPECT_EQ(j["report"]["excess"], 1);
    EXPECT_EQ(j["class"]["irreducible"]["value"], "yes");
    EXPECT_EQ(j["class"]["indecomposable"]["value"], "yes");
}

TEST(Cli, VerdictOnTheGenusThreeFixture) {
    const auto path = write_temp("g3.json", run({"example", "fixture_g3_d5", "--emit"}).out);
    const auto r = run({"verdict", path, "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json_of(r);
    EXPECT_EQ(j["verdict"], "generic-non-realizable");
    EXPECT_EQ(j["moduli_dim"], 17);
    EXPECT_EQ(j["deformation_dim"], 18);
}

TEST(Cli, GenusZeroIsNotSuperabundant) {
    const std::string tree = R"({"schema_version": 1, "ambient_dim": 2,
      "vertices": [{"id": "p", "position": [0, 0]}, {"id": "q"}],
      "edges": [{"tail": "p", "head": "q", "direction": [1, 1], "length": "2"}],
      "legs": [{"vertex": "p", "direction": [-1, 0]}, {"vertex": "p", "direction": [0, -1]},
               {"vertex": "q", "direction": [1, 0]}, {"vertex": "q", "direction": [0, 1]}]})";
    const auto r = run({"--json", "analyze", "-"}, tree);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json_of(r)["report"]["superabundant"], false);
    EXPECT_EQ(json_of(r)["report"]["excess"], 0);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"analyze", "-"}, "{oops").code, 1);
    EXPECT_EQ(run({"analyze", "/nonexistent/file.json"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"example", "nope"}).code, 1);

    const auto phi4 = run({"example", "phi4_sub", "--emit"}).out;
    EXPECT_EQ(run({"--subset-cap", "8", "analyze", "-"}, phi4).code, 0);
    EXPECT_EQ(run({"--strict", "--subset-cap", "8", "analyze", "-"}, phi4).code, 2);
}

TEST(Cli, StrictRejectsSemanticErrors) {
    const std::string zero = R"({"schema_version": 1, "ambient_dim": 1,
      "vertices": [{"id": "p"}, {"id": "q"}],
      "edges": [{"tail": "p", "head": "q", "direction": [1], "length": "0"}],
      "legs": [{"vertex": "p", "direction": [-1]}, {"vertex": "q", "direction": [1]}]})";
    EXPECT_EQ(run({"analyze", "-"}, zero).code, 0);
    const auto r = run({"--strict", "analyze", "-"}, zero);
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run({"verify", "-"}, zero).code, 1);
}

TEST(Cli, JsonOutputIsStable) {
    const auto doc = run({"example", "composite_fig3", "--emit"}).out;
    const auto a = run({"--json", "analyze", "-"}, doc);
    const auto b = run({"--json", "analyze", "-"}, doc);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OtherSubcommands) {
    const auto tf = write_temp("tf.json", run({"example", "tuning_fork_r2", "--emit"}).out);

    const auto core = run({"core", tf});
    ASSERT_EQ(core.code, 0) << core.err;
    EXPECT_EQ(tropsa::io::parse(core.out).graph.edges.size(), 6u);

    const auto smooth = run({"--json", "smooth", tf});
    ASSERT_EQ(smooth.code, 0) << smooth.err;
    EXPECT_EQ(json_of(smooth)["segments"].size(), 3u);

    const auto c2 = run({"--json", "classify2", tf});
    ASSERT_EQ(c2.code, 0) << c2.err;
    EXPECT_EQ(json_of(c2)["type"], "canonical");

    const auto map = write_temp("map.json", R"({"matrix": [["2", "0"], ["0", "2"]], "offset": ["1", "0"]})");
    const auto tr = run({"--json", "transform", tf, "--map", map});
    ASSERT_EQ(tr.code, 0) << tr.err;
    EXPECT_EQ(json_of(tr)["curve"]["edges"][0]["length"], "2");

    const auto bad_map = write_temp("bad_map.json", R"({"matrix": [["1", "0"]]})");
    EXPECT_EQ(run({"transform", tf, "--map", bad_map}).code, 1);

    const auto pr = run({"--json", "project", tf});
    ASSERT_EQ(pr.code, 0) << pr.err;
    EXPECT_EQ(json_of(pr)["curve"]["ambient_dim"], 2);

    const auto ve = run({"verdict", tf});
    ASSERT_EQ(ve.code, 0) << ve.err;
    EXPECT_NE(ve.out.find("inconclusive"), std::string::npos);

    const auto vf = run({"verify", tf});
    EXPECT_EQ(vf.code, 0);
    EXPECT_NE(vf.out.find("valid"), std::string::npos);

    const auto phi3 = write_temp("phi3.json", run({"example", "phi3_sub", "--emit"}).out);
    EXPECT_EQ(run({"verify", "--plane", phi3}).code, 0);

    const auto list = run({"example"});
    EXPECT_NE(list.out.find("fixture_g4"), std::string::npos);

    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SeveralFilesGiveAnArray) {
    const auto a = write_temp("a.json", run({"example", "planar_g1", "--emit"}).out);
    const auto b = write_temp("b.json", run({"example", "tuning_fork_r2", "--emit"}).out);
    const auto r = run({"--json", "analyze", a, b});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json_of(r);
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.size(), 2u);
    EXPECT_TRUE(j[0]["class"]["planar"].is_object());
}
