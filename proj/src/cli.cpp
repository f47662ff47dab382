#include "rposet/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "rposet/decomposition.hpp"
#include "rposet/generators.hpp"
#include "rposet/incomp_graph.hpp"
#include "rposet/io.hpp"
#include "rposet/oracle.hpp"
#include "rposet/selftest.hpp"
#include "rposet/simd/bitops.hpp"
#include "rposet/witness.hpp"

namespace rposet {
namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

struct LoadedPoset {
  RealisticPoset poset;
  Report report;
};

LoadedPoset load(const std::string& path) {
  const std::string text = read_file(path);
  LoadedPoset lp{parse_poset(text), {}};
  lp.report.add("input.fnv1a64", hex64(fnv1a64(text)));
  lp.report.add("n", lp.poset.size());
  return lp;
}

std::vector<ElementId> parse_id_list(const std::string& text, std::size_t n) {
  std::vector<ElementId> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    const std::string token = item.substr(first, last - first + 1);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &used);
    } catch (const std::exception&) {
      throw InputError("malformed element id '" + token + "' in --chain");
    }
    if (used != token.size() || token[0] == '-') throw InputError("malformed element id '" + token + "' in --chain");
    if (v >= n) throw InputError("element id " + token + " out of range");
    ids.push_back(static_cast<ElementId>(v));
  }
  return ids;
}

int emit(std::ostream& out, const Report& r) {
  out << r.render();
  return r.failed() ? kExitVerificationFailed : kExitOk;
}

int cmd_gen(const GenSpec& spec, const std::string& out_path, std::ostream& out) {
  const RealisticPoset p = generate(spec);
  const std::string doc = format_poset(p, {"generated " + spec.str()});
  if (out_path.empty()) {
    out << doc;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + out_path + "'");
    f << doc;
  }
  return kExitOk;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  LoadedPoset lp = load(path);
  lp.report.add("relations", lp.poset.relations().size());
  lp.report.add("covers", lp.poset.hasse_covers().size());
  const auto v = validate(lp.poset);
  lp.report.verdict("valid", v.ok(), std::string(to_string(v.violation)) + " " + join_ids(v.witness));
  return emit(out, lp.report);
}

int cmd_analyze(const std::string& path, std::ostream& out) {
  LoadedPoset lp = load(path);
  const RealisticPoset& p = lp.poset;
  Report& r = lp.report;
  const std::size_t w = width(p);
  const std::size_t h = height(p);
  r.add("width", w);
  r.add("height", h);
  const IncompGraph g(p);
  const auto comps = components(g, p);
  r.add("components", comps.size());
  r.add("components.nontrivial", count_nontrivial_components(comps));
  for (std::size_t i = 0; i < comps.size(); ++i) {
    r.add("component." + std::to_string(i) + ".vertices", join_ids(comps[i].vertices));
    r.add("component." + std::to_string(i) + ".hull", "[" + comps[i].lo.str() + "," + comps[i].hi.str() + "]");
  }
  const auto lem0 = check_interval_structure(p, comps);
  r.verdict("lem0", lem0.ok, lem0.failure);
  r.verdict("dilworth", chain_partition(p).chains.size() == w);
  r.verdict("mirsky", antichain_layering(p).layers.size() == h);
  return emit(out, r);
}

int cmd_chains(const std::string& path, bool dot, bool via_maximal, std::ostream& out) {
  LoadedPoset lp = load(path);
  const RealisticPoset& p = lp.poset;
  Report& r = lp.report;
  const ChainPartition base = chain_partition(p);
  ChainPartition part = base;
  if (via_maximal) {
    std::vector<Chain> extended;
    for (const Chain& c : base.chains) extended.push_back(extend_to_maximal_chain(p, c));
    for (std::size_t i = 0; i < extended.size(); ++i) r.add("maximal." + std::to_string(i), join_ids(extended[i]));
    part = disjointify(p, extended);
  }
  if (dot) {
    out << export_dot(p, part);
    return kExitOk;
  }
  const std::size_t w = width(p);
  r.add("width", w);
  r.add("chains", part.chains.size());
  for (std::size_t i = 0; i < part.chains.size(); ++i) r.add("chain." + std::to_string(i), join_ids(part.chains[i]));
  const auto valid = oracle::check_chain_partition(p, part.chains);
  r.verdict("partition", valid.ok, valid.detail);
  r.verdict("size_matches_width", part.chains.size() == w);
  return emit(out, r);
}

int cmd_antichains(const std::string& path, bool dot, std::ostream& out) {
  LoadedPoset lp = load(path);
  const RealisticPoset& p = lp.poset;
  Report& r = lp.report;
  const AntichainPartition layering = antichain_layering(p);
  if (dot) {
    out << export_dot(p, layering);
    return kExitOk;
  }
  const std::size_t h = height(p);
  r.add("height", h);
  r.add("layers", layering.layers.size());
  for (std::size_t i = 0; i < layering.layers.size(); ++i)
    r.add("layer." + std::to_string(i), join_ids(layering.layers[i]));
  const auto valid = oracle::check_antichain_partition(p, layering.layers);
  r.verdict("partition", valid.ok, valid.detail);
  r.verdict("size_matches_height", layering.layers.size() == h);
  return emit(out, r);
}

int cmd_witness(const std::string& path, const std::string& chain_text, bool determining, std::size_t max_enum,
                std::ostream& out) {
  LoadedPoset lp = load(path);
  const RealisticPoset& p = lp.poset;
  Report& r = lp.report;
  const Chain Y = p.sorted_by_coordinate(parse_id_list(chain_text, p.size()));
  r.add("chain", join_ids(Y));

  const WitnessCover cover = cover_incomparables(p, Y);
  r.add("target", join_ids(cover.target));
  r.add("witnesses", join_ids(cover.witnesses));
  const auto v = oracle::verify_cover(p, cover.target, cover.witnesses, oracle::CoverMode::exact);
  r.verdict("cover", v.ok, v.detail);

  if (determining) {
    const auto X = determining_subchain(p, Y);
    r.add("determining", join_ids(X));
    r.add("intersection", join_ids(p.sorted_by_coordinate(common_comparables(p, X).to_vector())));
    r.verdict("identity", common_comparables(p, X) == Bitset::from(p.size(), Y));
    if (p.size() <= max_enum) {
      const auto unique = verify_unique_extension(p, X, Y, max_enum);
      r.add("maximal_extensions", unique.maximal_chains.size());
      r.verdict("unique_extension", unique.ok);
    } else {
      r.add("unique_extension", "skipped");
    }
  }
  return emit(out, r);
}

int cmd_selftest(const SelftestOptions& opts, std::ostream& out) {
  const SelftestResult result = run_selftest(opts);
  out << result.render();
  return result.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chain and antichain decompositions of realistic posets"};
  app.require_subcommand(1);

  std::string kernels = "auto";
  app.add_option("--kernels", kernels, "Bitset kernel set: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  GenSpec spec;
  std::string kind = "forward_dag", param = "1/2", cross = "1/4", out_path;
  auto* gen = app.add_subcommand("gen", "Generate a random realistic poset document");
  gen->add_option("--kind", kind, "forward_dag, k_chains or interval_order")
      ->check(CLI::IsMember({"forward_dag", "k_chains", "interval_order"}));
  gen->add_option("--n", spec.n, "Element count")->required();
  gen->add_option("--param", param, "Edge probability (forward_dag) or chain count k (k_chains)");
  gen->add_option("--cross", cross, "Cross-chain probability for k_chains");
  gen->add_option("--seed", spec.seed, "PRNG seed");
  gen->add_option("--out", out_path, "Write the document here instead of stdout");

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "Load a document and check all poset invariants");
  validate_cmd->add_option("file", file)->required();

  auto* analyze = app.add_subcommand("analyze", "Width, height and incomparability components");
  analyze->add_option("file", file)->required();

  bool dot = false, via_maximal = false;
  auto* chains = app.add_subcommand("chains", "Minimum chain partition");
  chains->add_option("file", file)->required();
  chains->add_flag("--dot", dot, "Emit DOT with chain colouring");
  chains->add_flag("--via-maximal", via_maximal, "Extend each chain to a maximal one, then disjointify");

  auto* antichains = app.add_subcommand("antichains", "Antichain layering by minimal-element peeling");
  antichains->add_option("file", file)->required();
  antichains->add_flag("--dot", dot, "Emit DOT with one rank per layer");

  std::string chain_text;
  bool determining = false;
  std::size_t max_enum = 14;
  auto* witness = app.add_subcommand("witness", "Witness cover of the incomparables of a chain");
  witness->add_option("file", file)->required();
  witness->add_option("--chain", chain_text, "Comma-separated element ids")->required();
  witness->add_flag("--determining", determining, "Also compute and verify a determining subchain");
  witness->add_option("--max-enum", max_enum, "Element limit for the unique-extension enumeration");

  SelftestOptions st;
  auto* selftest = app.add_subcommand("selftest", "Run the property suite on generated posets");
  selftest->add_option("--trials", st.trials, "Number of generated posets");
  selftest->add_option("--max-n", st.max_n, "Largest element count");
  selftest->add_option("--seed", st.seed, "Base seed");
  selftest->add_option("--threads", st.threads, "Worker threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (kernels != "auto") {
    const auto k = kernels == "scalar" ? simd::KernelKind::scalar : simd::KernelKind::avx2;
    if (!simd::force_kernels(k)) {
      err << "error: " << kernels << " kernels are not available on this machine\n";
      return kExitInputError;
    }
  }

  try {
    if (*gen) {
      spec.kind = parse_gen_kind(kind);
      spec.param = Rational::parse(param);
      spec.cross = Rational::parse(cross);
      return cmd_gen(spec, out_path, out);
    }
    if (*validate_cmd) return cmd_validate(file, out);
    if (*analyze) return cmd_analyze(file, out);
    if (*chains) return cmd_chains(file, dot, via_maximal, out);
    if (*antichains) return cmd_antichains(file, dot, out);
    if (*witness) return cmd_witness(file, chain_text, determining, max_enum, out);
    if (*selftest) return cmd_selftest(st, out);
  } catch (const PosetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace rposet
