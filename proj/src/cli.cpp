#include "winding/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "winding/constructor.hpp"
#include "winding/errors.hpp"
#include "winding/io.hpp"
#include "winding/verify.hpp"

namespace winding {

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WINDING_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string("WINDING_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

void print_report(const ValidationReport& r, std::ostream& out) {
  out << "almost embedding: " << (r.is_almost_embedding ? "yes" : "no") << "\n";
  for (const Violation& v : r.violations) {
    out << "  " << v.first.str() << " meets " << v.second.str() << ": " << v.witness << "\n";
  }
}

int run_realize(const std::vector<long>& w, const std::string& out_path,
                const std::string& svg_path, std::ostream& out, std::ostream& err) {
  Drawing d = [&] {
    try {
      return realize(w[0], w[1], w[2], w[3]);
    } catch (const ParityViolation& e) {
      err << "error: " << e.what() << "\n";
      throw;
    }
  }();
  const ValidationReport report = is_almost_embedding(d);
  if (!report.is_almost_embedding) {
    print_report(report, err);
    return 1;
  }
  out << "w = " << winding_vector_k4(d).str() << "\n";
  if (!out_path.empty()) write_file_atomic(out_path, serialize(d));
  if (!svg_path.empty()) write_file_atomic(svg_path, render_svg(d));
  return 0;
}

int run_check(const std::string& path, std::ostream& out) {
  const Drawing d = parse_document(read_file(path));
  const ValidationReport report = is_almost_embedding(d);
  print_report(report, out);
  if (!report.is_almost_embedding) return 1;
  if (!report.windings_defined) {
    out << "winding numbers undefined: a vertex lies on a cycle through the others\n";
    return 1;
  }
  if (d.graph() == Graph::k4()) {
    const WindingVector w = winding_vector_k4(d);
    out << "w = " << w.str() << "\n";
  } else if (d.graph() == Graph::k5_minus_45()) {
    out << "w(123, 4) - w(123, 5) = " << k5_difference(d) << "\n";
  }
  return 0;
}

std::vector<int> parse_cycle(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw NotACycle("bad vertex list \"" + text + "\"");
    }
  }
  return out;
}

int run_winding(const std::string& path, const std::string& cycle, int vertex, std::ostream& out) {
  const Drawing d = parse_document(read_file(path));
  const Cycle c = restriction_to_cycle(d, parse_cycle(cycle));
  if (vertex < 1 || vertex > d.graph().vertex_count()) throw Error("no vertex " + std::to_string(vertex));
  out << winding_closed(c, d.position(vertex)) << "\n";
  return 0;
}

int run_sample(FuzzKind kind, long count, std::uint64_t seed, bool check, unsigned workers,
               const std::string& replay_path, std::ostream& out) {
  if (count < 1) throw Error("--count must be positive");
  if (check) {
    const FuzzReport report = fuzz(kind, count, seed, workers);
    out << report.str();
    if (!replay_path.empty()) write_file_atomic(replay_path, replay_text(report));
    return report.failures.empty() ? 0 : 1;
  }
  const Graph g = fuzz_graph(kind);
  const SamplerParams params = fuzz_sampler_params(kind);
  for (long i = 0; i < count; ++i) {
    const std::uint64_t s = sample_seed(seed, static_cast<std::uint64_t>(i));
    const Drawing d = sample_random(g, s, params);
    out << s << '\t';
    if (kind == FuzzKind::k4_parity) {
      out << "w = " << winding_vector_k4(d).str() << "\n";
    } else {
      out << "difference = " << k5_difference(d) << "\n";
    }
  }
  return 0;
}

int run_replay(const std::string& path, std::ostream& out) {
  int status = 0;
  for (const ReplayEntry& e : parse_replay(read_file(path))) {
    const SampleOutcome o = winding::run_sample(e.kind, e.seed);
    out << e.seed << '\t' << to_string(e.kind) << '\t' << o.observed << '\t'
        << (o.holds ? "holds" : "FAILS") << '\t' << o.summary << "\n";
    if (!o.holds) status = 1;
  }
  return status;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Winding numbers of piecewise-linear drawings of K4 and K5 - 45"};
  app.require_subcommand(1);

  auto* realize_cmd = app.add_subcommand("realize", "Build an almost embedding of K4 with given winding numbers");
  std::vector<long> target;
  std::string out_path, svg_path;
  realize_cmd->add_option("--w", target, "Winding numbers n1 n2 n3 n4 (odd sum)")->expected(4)->required();
  realize_cmd->add_option("--out", out_path, "Write the drawing as JSON");
  realize_cmd->add_option("--svg", svg_path, "Write an SVG picture");

  auto* check_cmd = app.add_subcommand("check", "Validate a drawing and print its winding numbers");
  std::string check_path;
  check_cmd->add_option("file", check_path, "Drawing document")->required();

  auto* winding_cmd = app.add_subcommand("winding", "Winding number of a cycle's image around a vertex");
  std::string winding_path, cycle;
  int vertex = 0;
  winding_cmd->add_option("file", winding_path, "Drawing document")->required();
  winding_cmd->add_option("--cycle", cycle, "Vertices of the cycle, e.g. 1,2,3")->required();
  winding_cmd->add_option("--vertex", vertex, "Vertex whose image is the centre")->required();

  auto* sample_cmd = app.add_subcommand("sample", "Draw random almost embeddings");
  std::string graph_name;
  long count = 1;
  std::uint64_t seed = 0;
  bool check = false;
  unsigned workers = 0;
  std::string replay_path;
  sample_cmd->add_option("--graph", graph_name, "k4 or k5m45")->required()->check(CLI::IsMember({"k4", "k5m45"}));
  sample_cmd->add_option("--count", count, "Number of accepted samples");
  auto* seed_opt = sample_cmd->add_option("--seed", seed, "Seed (default: $WINDING_SEED or 0)");
  sample_cmd->add_flag("--check", check, "Check the odd sum (k4) or the difference +-1 (k5m45)");
  sample_cmd->add_option("--workers", workers, "Worker threads for --check (0: all cores)");
  sample_cmd->add_option("--replay", replay_path, "With --check, write failing seeds to this file");

  auto* replay_cmd = app.add_subcommand("replay", "Re-run the samples listed in a replay file");
  std::string replay_in;
  replay_cmd->add_option("file", replay_in, "Replay file")->required();

  auto* render_cmd = app.add_subcommand("render", "Render a drawing as SVG");
  std::string render_in, render_out;
  render_cmd->add_option("file", render_in, "Drawing document")->required();
  render_cmd->add_option("--out", render_out, "SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*realize_cmd) return run_realize(target, out_path, svg_path, out, err);
    if (*check_cmd) return run_check(check_path, out);
    if (*winding_cmd) return run_winding(winding_path, cycle, vertex, out);
    if (*sample_cmd) {
      if (!*seed_opt) seed = default_seed();
      return run_sample(*parse_fuzz_kind(graph_name), count, seed, check, workers, replay_path, out);
    }
    if (*replay_cmd) return run_replay(replay_in, out);
    if (*render_cmd) {
      write_file_atomic(render_out, render_svg(parse_document(read_file(render_in))));
      return 0;
    }
  } catch (const ParityViolation&) {
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace winding
