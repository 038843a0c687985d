#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "helpers.hpp"
#include "winding/cli.hpp"
#include "winding/constructor.hpp"
#include "winding/errors.hpp"
#include "winding/io.hpp"
#include "winding/verify.hpp"

using namespace winding;
using testing_support::P;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "winding");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("winding-test-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("serialization of the straight base drawing") {
  const Drawing d = base_embedding(0, 0, 0);
  const std::string text = serialize(d);
  CHECK(text.find("\"format_version\": \"1\"") != std::string::npos);
  CHECK(text.find("\"4\": [\"2\",\"2\"]") != std::string::npos);
  CHECK(text.find("\"1-2\": [[\"0\",\"0\"],[\"6\",\"0\"]]") != std::string::npos);
  CHECK(parse_document(text) == d);
  CHECK(serialize(parse_document(text)) == text);
  // Keys come out sorted.
  CHECK(text.find("edge_lines") < text.find("format_version"));
  CHECK(text.find("format_version") < text.find("graph"));
  CHECK(text.find("graph") < text.find("vertices"));
}

TEST_CASE("rational coordinates are written reduced") {
  const Drawing d(Graph(2, {{1, 2}}), {Pt{Rat(2, 6), Rat(0)}, P(1, 1)},
                  {{{1, 2}, Polyline({Pt{Rat(1, 3), Rat(0)}, Pt{Rat(-4, 8), Rat(3)}, P(1, 1)})}});
  const std::string text = serialize(d);
  CHECK(text.find("[\"1/3\",\"0\"]") != std::string::npos);
  CHECK(text.find("[\"-1/2\",\"3\"]") != std::string::npos);
  CHECK(parse_document(text) == d);
}

TEST_CASE("round trips of constructed and sampled drawings") {
  std::vector<Drawing> all{realize(2, 3, 4, 6), realize(-1, 2, 0, 0), base_embedding(2, -1, 3)};
  for (std::uint64_t s = 0; s < 60; ++s) all.push_back(sample_random(Graph::k4(), s));
  for (std::uint64_t s = 0; s < 40; ++s) {
    all.push_back(sample_random(Graph::k5_minus_45(), s, fuzz_sampler_params(FuzzKind::k5_pm1)));
  }
  for (const Drawing& d : all) {
    const std::string text = serialize(d);
    const Drawing back = parse_document(text);
    CHECK(back == d);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("parse errors") {
  const std::string good = serialize(base_embedding(0, 0, 0));
  auto replace = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    const auto at = s.find(from);
    REQUIRE(at != std::string::npos);
    return s.replace(at, from.size(), to);
  };
  CHECK_THROWS_AS(parse_document("{"), SchemaError);
  CHECK_THROWS_AS(parse_document("[]"), SchemaError);
  CHECK_THROWS_AS(parse_document(replace("\"format_version\": \"1\"", "\"format_version\": \"2\"")), SchemaError);
  CHECK_THROWS_AS(parse_document(replace("\"1-2\": [[\"0\",\"0\"],[\"6\",\"0\"]]",
                                         "\"1-2\": [[\"0\",\"0\"],[\"5\",\"0\"]]")),
                  EndpointMismatch);
  CHECK_THROWS_AS(parse_document(replace("\"4\": [\"2\",\"2\"]", "\"4\": [\"1/0\",\"2\"]")), BadRational);
  CHECK_THROWS_AS(parse_document(replace("\"4\": [\"2\",\"2\"]", "\"4\": [2,2]")), SchemaError);
  CHECK_THROWS_AS(parse_document(replace("\"1-2\"", "\"2-1\"")), SchemaError);
  CHECK_THROWS_AS(parse_document(replace("[[1,2],", "[[1,1],")), SchemaError);
  CHECK_THROWS_AS(parse_document(replace("\"vertex_count\": 4", "\"vertex_count\": 5")), SchemaError);
  CHECK_THROWS_AS(parse_document(replace("[[\"0\",\"0\"],[\"6\",\"0\"]]", "[[\"0\",\"0\"],[\"0\",\"0\"],[\"6\",\"0\"]]")),
                  SchemaError);
}

TEST_CASE("svg rendering") {
  const std::string svg = render_svg(base_embedding(0, 0, 0));
  auto count = [&](const std::string& what) {
    std::size_t n = 0;
    for (auto at = svg.find(what); at != std::string::npos; at = svg.find(what, at + 1)) ++n;
    return n;
  };
  CHECK(count("<path ") == 6);
  CHECK(count("<circle ") == 4);
  CHECK(count("<text ") == 4);
  CHECK(svg.find("id=\"edge-1-3\" fill=\"none\" stroke=\"red\"") != std::string::npos);
  CHECK(svg.find("id=\"edge-2-4\" fill=\"none\" stroke=\"blue\"") != std::string::npos);
  CHECK(svg.find("viewBox=\"-0.3 -6.3 6.6 6.6\"") != std::string::npos);
  CHECK(render_svg(base_embedding(0, 0, 0)) == svg);
  const Drawing thirds(Graph(2, {{1, 2}}), {Pt{Rat(1, 3), Rat(2, 3)}, P(1, 1)},
                       {{{1, 2}, Polyline({Pt{Rat(1, 3), Rat(2, 3)}, P(1, 1)})}});
  const std::string t = render_svg(thirds);
  CHECK(t.find("M0.333333 -0.666667 L1 -1") != std::string::npos);  // 6 significant digits, y flipped
  SvgOptions plain;
  plain.edge_colors.clear();
  plain.labels = false;
  CHECK(render_svg(base_embedding(0, 0, 0), plain).find("red") == std::string::npos);
}

TEST_CASE("atomic file writes") {
  TempDir dir;
  const std::string f = dir.file("a.txt");
  write_file_atomic(f, "one");
  write_file_atomic(f, "two");
  CHECK(read_file(f) == "two");
  CHECK_FALSE(std::filesystem::exists(f + ".tmp"));
  CHECK_THROWS_AS(read_file(dir.file("missing")), Error);
  CHECK_THROWS_AS(write_file_atomic(dir.file("no/such/dir"), "x"), Error);
}

TEST_CASE("command line") {
  TempDir dir;
  const std::string doc = dir.file("d.json");
  const std::string svg = dir.file("d.svg");

  Run r = run({"realize", "--w", "2", "3", "4", "6", "--out", doc, "--svg", svg});
  CHECK(r.code == 0);
  CHECK(r.out == "w = (2, 3, 4, 6)\n");
  CHECK(parse_document(read_file(doc)) == realize(2, 3, 4, 6));
  CHECK(read_file(svg) == render_svg(realize(2, 3, 4, 6)));

  r = run({"realize", "--w", "10", "-7", "3", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "w = (10, -7, 3, 5)\n");

  r = run({"realize", "--w", "0", "0", "0", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("odd sum") != std::string::npos);

  r = run({"realize", "--w", "1", "2"});
  CHECK(r.code != 0);
  CHECK(r.code != 2);

  r = run({"check", doc});
  CHECK(r.code == 0);
  CHECK(r.out.find("almost embedding: yes") != std::string::npos);
  CHECK(r.out.find("w = (2, 3, 4, 6)") != std::string::npos);

  const std::string bad = dir.file("bad.json");
  const Drawing square(Graph::k4(), {P(0, 0), P(1, 0), P(1, 1), P(0, 1)},
                       {{{1, 2}, Polyline({P(0, 0), P(1, 0)})}, {{1, 3}, Polyline({P(0, 0), P(1, 1)})},
                        {{1, 4}, Polyline({P(0, 0), P(0, 1)})}, {{2, 3}, Polyline({P(1, 0), P(1, 1)})},
                        {{2, 4}, Polyline({P(1, 0), P(0, 1)})}, {{3, 4}, Polyline({P(1, 1), P(0, 1)})}});
  write_file_atomic(bad, serialize(square));
  r = run({"check", bad});
  CHECK(r.code == 1);
  CHECK(r.out.find("almost embedding: no") != std::string::npos);
  CHECK(r.out.find("edge 1-3 meets edge 2-4") != std::string::npos);

  const std::string k5 = dir.file("k5.json");
  write_file_atomic(k5, serialize(sample_random(Graph::k5_minus_45(), 3, fuzz_sampler_params(FuzzKind::k5_pm1))));
  r = run({"check", k5});
  CHECK(r.code == 0);
  CHECK(r.out.find("w(123, 4) - w(123, 5) = ") != std::string::npos);

  r = run({"winding", doc, "--cycle", "1,3,4", "--vertex", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  r = run({"winding", doc, "--cycle", "1,3", "--vertex", "2"});
  CHECK(r.code == 1);
  r = run({"winding", doc, "--cycle", "1,3,4", "--vertex", "3"});
  CHECK(r.code == 1);  // f(3) lies on its own cycle

  const std::string out_svg = dir.file("r.svg");
  r = run({"render", doc, "--out", out_svg});
  CHECK(r.code == 0);
  CHECK(read_file(out_svg) == read_file(svg));

  r = run({"check", dir.file("missing.json")});
  CHECK(r.code == 1);
  CHECK(r.err.find("cannot open") != std::string::npos);

  const std::string replay = dir.file("replay.tsv");
  r = run({"sample", "--graph", "k4", "--count", "200", "--seed", "42", "--check", "--replay", replay});
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 failures") != std::string::npos);
  CHECK(read_file(replay).empty());

  r = run({"sample", "--graph", "k5m45", "--count", "3", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("difference = ") != std::string::npos);

  r = run({"sample", "--graph", "k6", "--count", "3"});
  CHECK(r.code != 0);

  write_file_atomic(replay, std::to_string(sample_seed(42, 3)) + "\tk4_parity\t1\n");
  r = run({"replay", replay});
  CHECK(r.code == 0);
  CHECK(r.out.find("holds") != std::string::npos);

  r = run({});
  CHECK(r.code != 0);
}
