#include "winding/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "winding/errors.hpp"

namespace winding {

double winding_oracle(const Cycle& c, const Pt& p) {
  if (on_curve(c, p)) throw PointOnCurve("point lies on the closed polyline");
  const double px = p.x.to_double();
  const double py = p.y.to_double();
  double total = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Pt& a = c[i];
    const Pt& b = c.next(i);
    const double ax = a.x.to_double() - px;
    const double ay = a.y.to_double() - py;
    const double bx = b.x.to_double() - px;
    const double by = b.y.to_double() - py;
    total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
  }
  return total / (2.0 * std::numbers::pi);
}

bool check_parity(const Drawing& d) { return winding_vector_k4(d).sum() % 2 != 0; }

std::string to_string(FuzzKind kind) {
  return kind == FuzzKind::k4_parity ? "k4_parity" : "k5_pm1";
}

std::optional<FuzzKind> parse_fuzz_kind(const std::string& s) {
  if (s == "k4_parity" || s == "k4") return FuzzKind::k4_parity;
  if (s == "k5_pm1" || s == "k5m45") return FuzzKind::k5_pm1;
  return std::nullopt;
}

Graph fuzz_graph(FuzzKind kind) {
  return kind == FuzzKind::k4_parity ? Graph::k4() : Graph::k5_minus_45();
}

SamplerParams fuzz_sampler_params(FuzzKind kind) {
  SamplerParams p;
  if (kind == FuzzKind::k5_pm1) {
    // Nine edges with up to three bends each are rarely an almost embedding.
    p.max_bends = 1;
    p.max_attempts = 200'000;
  }
  return p;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::string summarize(const Drawing& d) {
  std::ostringstream os;
  os << "vertices";
  for (const Pt& p : d.positions()) os << " (" << p.x.str() << "," << p.y.str() << ")";
  std::size_t points = 0;
  for (const auto& [e, l] : d.edge_lines()) points += l.size();
  os << "; " << points << " line points";
  return os.str();
}

}  // namespace

SampleOutcome run_sample(FuzzKind kind, std::uint64_t seed) {
  SampleResult s = sample_random_counted(fuzz_graph(kind), seed, fuzz_sampler_params(kind));
  SampleOutcome out{s.attempts, 0, false, summarize(s.drawing)};
  try {
    if (kind == FuzzKind::k4_parity) {
      out.observed = winding_vector_k4(s.drawing).sum();
      out.holds = out.observed % 2 != 0;
    } else {
      out.observed = k5_difference(s.drawing);
      out.holds = out.observed == 1 || out.observed == -1;
    }
  } catch (const Error& e) {
    out.summary += "; ";
    out.summary += e.what();
  }
  return out;
}

FuzzReport fuzz(FuzzKind kind, long count, std::uint64_t seed, unsigned workers) {
  if (count < 1) throw SamplerExhausted("fuzz needs a positive sample count");
  const auto t0 = std::chrono::steady_clock::now();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<long>(workers, count));

  std::vector<std::optional<SampleOutcome>> outcomes(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (long i = w; i < count; i += workers) {
        outcomes[static_cast<std::size_t>(i)] =
            run_sample(kind, sample_seed(seed, static_cast<std::uint64_t>(i)));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  FuzzReport report;
  report.kind = kind;
  for (long i = 0; i < count; ++i) {
    const SampleOutcome& o = *outcomes[static_cast<std::size_t>(i)];
    report.samples_attempted += o.attempts;
    ++report.samples_accepted;
    if (!o.holds) {
      report.failures.push_back({sample_seed(seed, static_cast<std::uint64_t>(i)), o.summary, o.observed});
    }
  }
  report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string FuzzReport::str() const {
  std::ostringstream os;
  os << to_string(kind) << ": " << samples_accepted << " samples accepted out of "
     << samples_attempted << " drawn, " << failures.size() << " failures, "
     << elapsed << " s\n";
  for (const FuzzFailure& f : failures) {
    os << "  seed " << f.seed << " observed " << f.observed << ": " << f.summary << "\n";
  }
  return os.str();
}

std::string replay_text(const FuzzReport& report) {
  std::ostringstream os;
  for (const FuzzFailure& f : report.failures) {
    os << f.seed << '\t' << to_string(report.kind) << '\t' << f.observed << '\n';
  }
  return os.str();
}

std::vector<ReplayEntry> parse_replay(const std::string& text) {
  std::vector<ReplayEntry> out;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string seed, kind, observed;
    auto bad = [&] { return SchemaError("replay line " + std::to_string(line_no) + " is malformed"); };
    if (!std::getline(fields, seed, '\t') || !std::getline(fields, kind, '\t') ||
        !std::getline(fields, observed)) {
      throw bad();
    }
    const auto k = parse_fuzz_kind(kind);
    if (!k) throw bad();
    try {
      std::size_t used = 0;
      const unsigned long long s = std::stoull(seed, &used);
      if (used != seed.size()) throw bad();
      const long o = std::stol(observed, &used);
      if (used != observed.size()) throw bad();
      out.push_back({static_cast<std::uint64_t>(s), *k, o});
    } catch (const std::logic_error&) {
      throw bad();
    }
  }
  return out;
}

}  // namespace winding
