#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <latcvx/io.hpp>

#include "latcvx/commands.hpp"
#include "test_util.hpp"

using namespace latcvx;
using latcvx::io::json;
using latcvx::testing::q;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome latcvx_run(std::vector<std::string> args) {
  args.insert(args.begin(), "latcvx");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  const char* dir = std::getenv("LATCVX_TEST_DATA");
  return (std::filesystem::path(dir ? dir : LATCVX_TEST_DATA_DIR) / name).string();
}

std::string scratch(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("latcvx_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

json parse(const Outcome& o) { return json::parse(o.out); }

}  // namespace

TEST(Cli, WidthOfSimplex) {
  const auto o = latcvx_run({"width", "--gallery", "s_d", "--param", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(parse(o).at("value"), "2");
  EXPECT_EQ(parse(o).at("span_dim"), 3);
}

TEST(Cli, DiameterOfSimplex) {
  const auto o = latcvx_run({"diameter", "--gallery", "s_d", "--param", "3", "--decimal", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(parse(o).at("value"), "4/3");
  EXPECT_EQ(parse(o).at("value_decimal"), "1.333");
}

TEST(Cli, WidthOfSquareFile) {
  const auto o = latcvx_run({"width", "-p", data("square.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(parse(o).at("value"), "2");
  EXPECT_EQ(parse(o).at("directions"), json::parse(R"([["1","0"],["0","1"]])"));
}

TEST(Cli, LatticeOption) {
  const auto o = latcvx_run({"width", "-p", data("square.json"), "-l", data("half_lattice.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  // the dual of (1/2)Z^2 is 2Z^2
  EXPECT_EQ(parse(o).at("value"), "4");
}

TEST(Cli, CheckVerdictsDriveTheExitCode) {
  EXPECT_EQ(latcvx_run({"check", "--reduced", "--gallery", "diamond"}).code, 0);
  const auto sq = latcvx_run({"check", "--reduced", "--gallery", "square"});
  EXPECT_EQ(sq.code, 1);
  const json cert = parse(sq).at("reduced");
  EXPECT_EQ(cert.at("verdict"), false);
  const RatVector cw = io::vector_from_json(cert.at("counter_witness"));
  EXPECT_EQ(cw[0].abs(), 1);
  EXPECT_EQ(cw[1].abs(), 1);
  EXPECT_EQ(latcvx_run({"check", "--complete", "--gallery", "delta_tetra", "--param", "3/4,3/4,1/2"}).code,
            0);
  // both properties by default
  const auto both = latcvx_run({"check", "--gallery", "square"});
  EXPECT_EQ(both.code, 1);
  EXPECT_EQ(parse(both).at("complete").at("verdict"), true);
  EXPECT_EQ(parse(both).at("verdict"), false);
  EXPECT_EQ(latcvx_run({"check", "--gallery", "hexagon"}).code, 0);
}

TEST(Cli, ReducePipeline) {
  const std::string out = scratch("reduced.json");
  const auto r = latcvx_run({"reduce", "-p", data("square.json"), "-o", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto c = latcvx_run({"check", "--reduced", "-p", out});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(parse(c).at("reduced").at("width").at("value"), "2");
  EXPECT_EQ(parse(latcvx_run({"width", "-p", out})).at("value"), "2");
  std::filesystem::remove(out);
}

TEST(Cli, JoinOfSegments) {
  const auto o = latcvx_run(
      {"construct", "join", "-a", data("seg.json"), "-b", data("seg.json"), "--height", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Polytope p = io::polytope_from_json(parse(o));
  EXPECT_EQ(p, Polytope::hull({{-1, 0, 0}, {1, 0, 0}, {0, -1, 3}, {0, 1, 3}}));
  const Lattice l = io::lattice_from_json(parse(o));
  EXPECT_TRUE(is_reduced(p, l).verdict);
  EXPECT_EQ(latcvx_run({"construct", "join", "-a", data("seg.json"), "-b", data("seg.json"), "--height",
                        "1"})
                .code,
            3);
}

TEST(Cli, OtherConstructions) {
  const auto prod =
      latcvx_run({"construct", "product", "-a", "gallery:square", "-b", data("square.json")});
  ASSERT_EQ(prod.code, 0) << prod.err;
  EXPECT_EQ(io::polytope_from_json(parse(prod)).num_vertices(), 16u);
  const auto sum = latcvx_run({"construct", "free-sum", "-a", data("seg.json"), "-b", "gallery:segment"});
  ASSERT_EQ(sum.code, 0) << sum.err;
  EXPECT_EQ(io::polytope_from_json(parse(sum)), Polytope::hull({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  const auto lift = latcvx_run({"construct", "lift", "-a", "gallery:hexagon"});
  ASSERT_EQ(lift.code, 0) << lift.err;
  EXPECT_EQ(io::polytope_from_json(parse(lift)).num_facets(), 6u);
  EXPECT_EQ(latcvx_run({"construct", "lift", "-a", "gallery:square"}).code, 3);
  EXPECT_EQ(latcvx_run({"construct", "product", "-a", "gallery:diamond", "-b", "gallery:square"}).code, 3);
}

TEST(Cli, VoronoiOfAStar) {
  const auto o = latcvx_run({"voronoi", "--gram", data("a3star.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  const Polytope p = io::polytope_from_json(parse(o));
  EXPECT_EQ(p.num_facets(), 14u);
  EXPECT_EQ(parse(o).at("relevant_vectors").size(), 14u);
  EXPECT_EQ(latcvx_run({"voronoi", "-l", data("half_lattice.json")}).code, 0);
  EXPECT_EQ(latcvx_run({"voronoi"}).code, 2);
}

TEST(Cli, ClassifyTriangle) {
  const auto o = latcvx_run({"classify-triangle", "--gallery", "t_xy", "--param", "1/4,-1/2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(parse(o).at("reduced"), true);
  EXPECT_EQ(parse(o).at("complete"), false);
  EXPECT_EQ(latcvx_run({"classify-triangle", "-p", data("square.json")}).code, 3);
}

TEST(Cli, Gallery) {
  const auto list = latcvx_run({"gallery", "list"});
  ASSERT_EQ(list.code, 0);
  EXPECT_EQ(parse(list).size(), gallery_catalog().size());
  const auto get = latcvx_run({"gallery", "get", "twisted_square", "--param", "1/2"});
  ASSERT_EQ(get.code, 0) << get.err;
  EXPECT_EQ(io::polytope_from_json(parse(get)), gallery("twisted_square", {q("1/2")}).polytope);
  EXPECT_EQ(latcvx_run({"gallery", "get", "nope"}).code, 3);
}

TEST(Cli, GridSweepIsDeterministic) {
  const std::vector<std::string> base{"check", "--gallery", "t_xy", "--grid", "-1:1:1/2", "--grid",
                                      "-1:1:1/2"};
  auto with_jobs = [&](const char* n) {
    auto a = base;
    a.push_back("--jobs");
    a.push_back(n);
    return latcvx_run(a);
  };
  const auto one = with_jobs("1");
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(parse(one).at("points").size(), 25u);
  EXPECT_EQ(with_jobs("4").out, one.out);
  EXPECT_EQ(with_jobs("7").out, one.out);
  std::size_t errors = 0;
  const json doc = parse(one);
  for (const auto& pt : doc.at("points"))
    if (pt.contains("error")) ++errors;
  EXPECT_EQ(errors, 1u);  // (1, 1) is degenerate
}

TEST(Cli, RenderSquareDots) {
  const auto o = latcvx_run({"render", "-p", data("square.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(count(o.out, "class=\"lattice\""), 9u);
  EXPECT_EQ(count(o.out, "<polygon"), 1u);
}

TEST(Cli, RenderDiamondMatchesGolden) {
  const std::string cert = scratch("diamond_cert.json");
  ASSERT_EQ(latcvx_run({"check", "--reduced", "--gallery", "diamond", "-o", cert}).code, 0);
  const auto o = latcvx_run({"render", "--gallery", "diamond", "--certificate", cert});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(count(o.out, "witness-arrow"), 4u);
  EXPECT_EQ(o.out, slurp(data("diamond_reduced.svg")));
  EXPECT_EQ(latcvx_run({"render", "--gallery", "diamond", "--certificate", cert}).out, o.out);
  std::filesystem::remove(cert);
}

TEST(Cli, RenderTriangleWitnessSegments) {
  const std::string cert = scratch("t_cert.json");
  ASSERT_EQ(
      latcvx_run({"check", "--complete", "--gallery", "t_xy", "--param", "1/4,-1/4", "-o", cert}).code,
      0);
  const auto o = latcvx_run({"render", "--gallery", "t_xy", "--param", "1/4,-1/4", "--certificate", cert});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(count(o.out, "witness-segment"), 3u);
  std::filesystem::remove(cert);
}

TEST(Cli, RenderOptions) {
  const auto w = latcvx_run({"render", "-p", data("square.json"), "--window", "-2,2,-2,2"});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(count(w.out, "class=\"lattice\""), 25u);
  const auto d = latcvx_run({"render", "--gallery", "diamond", "--directions", "width"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_GT(count(d.out, "<line"), 0u);
  EXPECT_EQ(latcvx_run({"render", "-p", data("simplex3.json")}).code, 3);
  EXPECT_EQ(latcvx_run({"render", "-p", data("square.json"), "--window", "1,2,3"}).code, 2);
}

TEST(Cli, ExitCodes) {
  // 2: unreadable, malformed or inexact input, bad command lines
  EXPECT_EQ(latcvx_run({"width", "-p", data("missing.json")}).code, 2);
  EXPECT_EQ(latcvx_run({"width", "-p", data("truncated.json")}).code, 2);
  EXPECT_EQ(latcvx_run({"width", "-p", data("float.json")}).code, 2);
  EXPECT_EQ(latcvx_run({"width", "--gallery", "s_d", "--param", "0.5"}).code, 2);
  EXPECT_EQ(latcvx_run({"width", "--bogus"}).code, 2);
  EXPECT_EQ(latcvx_run({"frobnicate"}).code, 2);
  EXPECT_EQ(latcvx_run({}).code, 2);
  EXPECT_EQ(latcvx_run({"width", "-p", data("square.json"), "--gallery", "square"}).code, 2);
  EXPECT_EQ(latcvx_run({"width"}).code, 2);
  // 3: well-formed input that violates a precondition
  EXPECT_EQ(latcvx_run({"width", "-p", data("flat.json")}).code, 3);
  EXPECT_EQ(latcvx_run({"width", "--gallery", "s_d", "--param", "99"}).code, 3);
  EXPECT_EQ(latcvx_run({"width", "-p", data("square.json"), "-l", data("a3star.json")}).code, 3);
  // 1: a false verdict, 0: success
  EXPECT_EQ(latcvx_run({"check", "--complete", "--gallery", "diamond"}).code, 1);
  EXPECT_EQ(latcvx_run({"width", "--help"}).code, 0);
  for (int code : {2, 3}) {
    const auto o = latcvx_run(code == 2 ? std::vector<std::string>{"width", "-p", data("missing.json")}
                                        : std::vector<std::string>{"width", "-p", data("flat.json")});
    EXPECT_FALSE(o.err.empty());
    EXPECT_TRUE(o.out.empty());
  }
}

TEST(Cli, EveryJsonOutputIsReReadable) {
  const std::vector<std::vector<std::string>> docs{
      {"reduce", "--gallery", "square"},
      {"construct", "lift", "-a", "gallery:hexagon"},
      {"voronoi", "--gram", data("a3star.json")},
      {"gallery", "get", "delta_tetra", "--param", "3/4,3/4,1/2"},
  };
  for (const auto& args : docs) {
    const auto o = latcvx_run(args);
    ASSERT_EQ(o.code, 0) << args[0] << ": " << o.err;
    const Polytope p = io::polytope_from_json(parse(o));
    const Lattice l = io::lattice_from_json(parse(o));
    const std::string path = scratch("doc.json");
    std::ofstream(path) << o.out;
    EXPECT_EQ(latcvx_run({"width", "-p", path}).code, 0) << args[0];
    EXPECT_EQ(parse(latcvx_run({"width", "-p", path})).at("value"), io::to_json(width(p, l).value));
    std::filesystem::remove(path);
  }
}
