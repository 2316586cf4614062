#include "berge/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "berge/constructions/constructions.hpp"
#include "berge/constructions/sampling.hpp"
#include "berge/constructive/trace.hpp"
#include "berge/core/error.hpp"
#include "berge/core/hypergraph_io.hpp"
#include "berge/core/thresholds.hpp"
#include "berge/oracle/frame.hpp"
#include "berge/oracle/spectrum.hpp"

namespace berge::cli {

namespace {

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw Error(Errc::ParseError, "not an integer: '" + text + "'");
  return value;
}

struct CellResult {
  int pancyclic = 0;
  int hamiltonian = 0;
  int unknown = 0;
  std::uint64_t nodes = 0;
};

void evaluate(const Hypergraph& h, std::uint64_t cap, CellResult& cell) {
  SearchOptions options;
  options.node_cap = cap;
  const SpectrumReport report = spectrum(h, 2, h.n(), options);
  cell.nodes += report.total_nodes();
  const auto& last = report.entries.at(h.n());
  if (last.status == SearchStatus::Found) ++cell.hamiltonian;
  if (report.is_pancyclic()) ++cell.pancyclic;
  if (!report.unknown().empty()) ++cell.unknown;
}

/// Sharpness example for a cell below the threshold, or nullopt if none applies.
std::optional<Hypergraph> seeded_example(int n, int r, int sample) {
  const int half = (n - 1) / 2;
  if (r <= half) {
    if (sample == 0) return two_cliques(n, r);
    if (sample == 1) return split_dominating(n, r);
    return std::nullopt;
  }
  if (sample == 0) return regular_minus_edge(n, r);
  return std::nullopt;
}

std::string fraction(int count, int total) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << (total == 0 ? 0.0 : static_cast<double>(count) / total);
  return out.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::BadParameters, "cannot write " + path);
  file << text;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

std::vector<int> parse_lengths(const std::string& text, int n) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  const auto value = [&](const std::string& s) { return s == "n" ? n : parse_int(s); };
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw Error(Errc::ParseError, "empty item in length list '" + text + "'");
    const auto dots = item.find("..");
    const int lo = value(dots == std::string::npos ? item : item.substr(0, dots));
    const int hi = dots == std::string::npos ? lo : value(item.substr(dots + 2));
    if (lo > hi) throw Error(Errc::ParseError, "empty length range '" + item + "'");
    for (int len = lo; len <= hi; ++len) {
      if (len < 2 || len > n) {
        throw Error(Errc::LengthOutOfRange, "length " + std::to_string(len) + " outside 2.." + std::to_string(n));
      }
      out.push_back(len);
    }
  }
  if (out.empty()) throw Error(Errc::ParseError, "no lengths in '" + text + "'");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string sweep_table(const SweepConfig& config) {
  std::ostringstream out;
  out << "n\tr\tdelta_offset\ttarget\tsamples\tpancyclic_frac\thamiltonian_frac\tunknown\tmean_nodes\n";
  if (config.samples <= 0) return out.str();
  for (int n = config.n_lo; n <= config.n_hi; ++n) {
    for (int r_off : config.r_offsets) {
      const int r = (n - 1) / 2 + r_off;
      if (r < 3 || r >= n) continue;
      const std::int64_t threshold = degree_threshold(n, r);
      for (int d_off : config.delta_offsets) {
        const std::int64_t target = threshold + d_off;
        CellResult cell;
        std::uint64_t key = config.seed;
        for (std::uint64_t part : {std::uint64_t(n), std::uint64_t(r_off + 1000), std::uint64_t(d_off + 1000)}) {
          key = mix_seed(key ^ part);
        }
        std::mt19937_64 rng(key);
        for (int s = 0; s < config.samples; ++s) {
          std::optional<Hypergraph> h;
          if (d_off < 0) h = seeded_example(n, r, s);
          if (!h) h = random_hamiltonian_hypergraph(rng, n, r, static_cast<int>(std::max<std::int64_t>(target, 0)));
          evaluate(*h, config.cap, cell);
        }
        out << n << '\t' << r << '\t' << d_off << '\t' << target << '\t' << config.samples << '\t'
            << fraction(cell.pancyclic, config.samples) << '\t' << fraction(cell.hamiltonian, config.samples) << '\t'
            << cell.unknown << '\t' << cell.nodes / static_cast<std::uint64_t>(config.samples) << '\n';
      }
    }
  }
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Berge cycle toolkit: generators, exact search and constructive extraction"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "Write the result to this file instead of stdout");

  auto* gen = app.add_subcommand("gen", "Generate a hypergraph");
  std::string kind;
  int n = 0;
  int r = 0;
  int k = 0;
  bool bridge = false;
  bool extra = false;
  gen->add_option("kind", kind, "tight-cycle | c1 | c2 | c3 | c4")
      ->required()
      ->check(CLI::IsMember({"tight-cycle", "c1", "c2", "c3", "c4"}));
  gen->add_option("--n", n, "Vertex count");
  gen->add_option("--r", r, "Uniformity")->required();
  gen->add_option("--k", k, "Number of cliques (c4)");
  gen->add_flag("--bridge", bridge, "c1: add the joining edge (n even)");
  gen->add_flag("--extra", extra, "c2: add the extra edge (n even)");
  gen->add_option("--out", out_path, "Output file");

  std::string file;
  int lo = 2;
  int hi = -1;
  std::uint64_t cap = 0;
  auto* spec = app.add_subcommand("spectrum", "Classify every cycle length in a range");
  spec->add_option("file", file, "Hypergraph file")->required();
  spec->add_option("--lo", lo, "Smallest length");
  spec->add_option("--hi", hi, "Largest length (default n)");
  spec->add_option("--cap", cap, "Node cap per length (0 = none)");
  spec->add_option("--out", out_path, "Output file");

  std::string lengths = "2..n";
  bool allow_fallback = false;
  auto* ext = app.add_subcommand("extract", "Build cycles with the constructive engine");
  ext->add_option("file", file, "Hypergraph file")->required();
  ext->add_option("--lengths", lengths, "Lengths, e.g. 2..n or 3,5,7");
  ext->add_flag("--allow-fallback", allow_fallback, "Use exact search when no construction applies");
  ext->add_option("--cap", cap, "Node cap for the hamiltonian search and fallback (0 = none)");
  ext->add_option("--out", out_path, "Output file");

  auto* chk = app.add_subcommand("check", "Decide hamiltonicity");
  chk->add_option("file", file, "Hypergraph file")->required();
  chk->add_option("--cap", cap, "Node cap (0 = none)");
  chk->add_option("--out", out_path, "Output file");

  SweepConfig sweep;
  std::string n_range;
  std::vector<int> r_offsets{0};
  std::vector<int> delta_offsets{0};
  auto* swp = app.add_subcommand("sweep", "Pancyclicity rates of sampled hypergraphs around the degree threshold");
  swp->add_option("--n", n_range, "Vertex counts, a..b")->required();
  swp->add_option("--r-offset", r_offsets, "r relative to floor((n-1)/2)")->delimiter(',');
  swp->add_option("--delta-offset", delta_offsets, "Minimum degree relative to the threshold")->delimiter(',');
  swp->add_option("--samples", sweep.samples, "Samples per cell");
  swp->add_option("--seed", sweep.seed, "Random seed");
  swp->add_option("--cap", cap, "Node cap per oracle call (0 = none)");
  swp->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    SearchOptions options;
    options.node_cap = cap;
    if (gen->parsed()) {
      Hypergraph h = [&] {
        if (kind == "tight-cycle") return tight_cycle(n, r);
        if (kind == "c1") return two_cliques(n, r, bridge);
        if (kind == "c2") return split_dominating(n, r, extra);
        if (kind == "c3") return regular_minus_edge(n, r);
        return clique_necklace(k, r);
      }();
      write_output(out_path, format_hypergraph(h), out);
    } else if (spec->parsed()) {
      const Hypergraph h = read_hypergraph_file(file);
      const SpectrumReport report = spectrum(h, lo, hi < 0 ? h.n() : hi, options);
      write_output(out_path, format_spectrum(report), out);
    } else if (ext->parsed()) {
      const Hypergraph h = read_hypergraph_file(file);
      const std::vector<int> wanted = parse_lengths(lengths, h.n());
      const FrameSearchResult found = search_hamiltonian_frame(h, options);
      if (!found.frame) {
        err << "error: " << (found.status == SearchStatus::Unknown ? "hamiltonian search hit the node cap"
                                                                      : "hypergraph has no hamiltonian Berge cycle")
            << '\n';
        return 2;
      }
      ExtractOptions xo;
      xo.allow_fallback = allow_fallback;
      xo.fallback_search = options;
      ExtractionTrace trace = extract_lengths(*found.frame, wanted, xo);
      for (Extraction& x : trace) x.cycle = found.frame->to_input(x.cycle);
      write_output(out_path, format_trace(trace), out);
    } else if (chk->parsed()) {
      const Hypergraph h = read_hypergraph_file(file);
      const FrameSearchResult found = search_hamiltonian_frame(h, options);
      std::string line;
      if (found.frame) {
        line = "HAMILTONIAN " + format_witness(found.frame->to_input(found.frame->cycle())) + "\n";
      } else {
        line = found.status == SearchStatus::Unknown ? "UNKNOWN\n" : "NOT_HAMILTONIAN\n";
      }
      write_output(out_path, line, out);
    } else if (swp->parsed()) {
      std::tie(sweep.n_lo, sweep.n_hi) = parse_range(n_range);
      if (sweep.n_lo > sweep.n_hi || sweep.n_lo < 4 || sweep.n_hi > kMaxVertices) {
        throw Error(Errc::BadParameters, "vertex range " + n_range + " must lie in 4..64");
      }
      if (sweep.samples < 0) throw Error(Errc::BadParameters, "sample count must be non-negative");
      sweep.r_offsets = r_offsets;
      sweep.delta_offsets = delta_offsets;
      sweep.cap = cap;
      write_output(out_path, sweep_table(sweep), out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace berge::cli
