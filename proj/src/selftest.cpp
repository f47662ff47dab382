#include "rposet/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "rposet/decomposition.hpp"
#include "rposet/incomp_graph.hpp"
#include "rposet/io.hpp"
#include "rposet/oracle.hpp"
#include "rposet/prng.hpp"
#include "rposet/witness.hpp"

namespace rposet {
namespace {

constexpr std::size_t kOracleAntichainLimit = 24;
constexpr std::size_t kEnumerationLimit = 14;

struct Outcome {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::string failure;
};

struct Property {
  const char* name;
  // Returns false when the property does not apply to this instance.
  std::function<bool(const RealisticPoset&, const GenSpec&, std::string&)> run;
};

bool fail(std::string& why, std::string text) {
  why = std::move(text);
  return false;
}

// Each property returns true when it applies; `why` is non-empty on failure.
std::vector<Property> properties() {
  std::vector<Property> ps;

  ps.push_back({"poset.valid", [](const RealisticPoset& p, const GenSpec&, std::string& why) {
                  const auto v = validate(p);
                  if (!v.ok()) why = std::string(to_string(v.violation)) + " at " + join_ids(v.witness);
                  return true;
                }});

  ps.push_back({"poset.query_partition", [](const RealisticPoset& p, const GenSpec&, std::string& why) {
                  const Bitset all = p.all();
                  for (ElementId x = 0; x < p.size(); ++x) {
                    const Bitset up = p.up_set(x), down = p.down_set(x), inc = p.incomparables(x);
                    Bitset self(p.size());
                    self.set(x);
                    if (!((up & down) == self)) return !fail(why, "up/down overlap beyond x=" + std::to_string(x));
                    if (!((up | down | inc) == all) || inc.intersects(up) || inc.intersects(down))
                      return !fail(why, "up/down/incomparables do not partition V at x=" + std::to_string(x));
                    bool bad = false;
                    inc.for_each([&](ElementId y) { bad = bad || !p.incomparables(y).test(x); });
                    if (bad) return !fail(why, "incomparability not symmetric at x=" + std::to_string(x));
                    for (ElementId y : p.above(x).to_vector())
                      if (!(p.coord(x) < p.coord(y))) return !fail(why, "successor below in coordinate");
                  }
                  return true;
                }});

  ps.push_back({"poset.rebuild_idempotent", [](const RealisticPoset& p, const GenSpec&, std::string& why) {
                  const auto rel = p.relations();
                  if (!(RealisticPoset::build(p.coords(), rel) == p)) why = "rebuild from closed relation differs";
                  return true;
                }});

  ps.push_back({"incomp.interval_structure", [](const RealisticPoset& p, const GenSpec&, std::string& why) {
                  const IncompGraph g(p);
                  const auto comps = components(g, p);
                  const auto v = check_interval_structure(p, comps);
                  if (!v.ok) why = v.failure;
                  std::size_t total = 0;
                  for (const auto& c : comps) total += c.vertices.size();
                  if (why.empty() && total != p.size()) why = "components do not partition V";
                  return true;
                }});

  ps.push_back({"decomposition.dilworth", [](const RealisticPoset& p, const GenSpec&, std::string& why) {
                  const ChainPartition part = chain_partition(p);
                  const auto valid = oracle::check_chain_partition(p, part.chains);
                  if (!valid.ok) return !fail(why, valid.detail);
                  const std::size_t w = width(p);
                  if (part.chains.size() != w) return !fail(why, "chain count differs from width");
                  if (p.size() <= kOracleAntichainLimit) {
                    const std::size_t expected = oracle::max_antichain(p);
                    if (w != expected)
                      return !fail(why, "width " + std::to_string(w) + " vs oracle " + std::to_string(expected));
                  }
                  return true;
                }});

  ps.push_back({"decomposition.mirsky", [](const RealisticPoset& p, const GenSpec&, std::string& why) {
                  const AntichainPartition layering = antichain_layering(p);
                  const auto valid = oracle::check_antichain_partition(p, layering.layers);
                  if (!valid.ok) return !fail(why, valid.detail);
                  const std::size_t expected = oracle::longest_chain(p);
                  if (layering.layers.size() != expected || height(p) != expected)
                    return !fail(why, "layer count/height differ from oracle " + std::to_string(expected));
                  const auto ending = oracle::longest_chain_ending_at(p);
                  for (std::size_t i = 0; i < layering.layers.size(); ++i)
                    for (ElementId x : layering.layers[i])
                      if (ending[x] != i + 1) return !fail(why, "element " + std::to_string(x) + " in wrong layer");
                  return true;
                }});

  ps.push_back({"decomposition.maximal_extension", [](const RealisticPoset& p, const GenSpec&, std::string& why) {
                  for (const Chain& c : chain_partition(p).chains) {
                    const Chain ext = extend_to_maximal_chain(p, c);
                    if (!oracle::is_maximal_chain(p, ext)) return !fail(why, "{" + join_ids(ext) + "} not maximal");
                    for (ElementId x : c)
                      if (std::find(ext.begin(), ext.end(), x) == ext.end())
                        return !fail(why, "extension dropped element " + std::to_string(x));
                  }
                  return true;
                }});

  ps.push_back({"decomposition.disjointify", [](const RealisticPoset& p, const GenSpec&, std::string& why) {
                  const ChainPartition part = chain_partition_via_maximal(p);
                  const auto valid = oracle::check_chain_partition(p, part.chains);
                  if (!valid.ok) return !fail(why, valid.detail);
                  if (part.chains.size() != width(p)) return !fail(why, "disjointified chain count differs from width");
                  return true;
                }});

  ps.push_back({"witness.partner_chain", [](const RealisticPoset& p, const GenSpec&, std::string& why) {
                  const ChainPartition part = chain_partition(p);
                  if (part.chains.size() != 2) return false;
                  const Chain& X = part.chains[0];
                  const Chain& Y = part.chains[1];
                  for (ElementId x : X)
                    if (p.incomparables(x).none()) return false;
                  const WitnessCover cover = cover_partner_chain(p, X, Y);
                  const auto v = oracle::verify_cover(p, X, cover.witnesses, oracle::CoverMode::contained);
                  if (!v.ok) return !fail(why, v.detail);
                  return true;
                }});

  ps.push_back({"witness.incomparables_cover", [](const RealisticPoset& p, const GenSpec&, std::string& why) {
                  for (const Chain& c : chain_partition(p).chains) {
                    const Chain Y = extend_to_maximal_chain(p, c);
                    const WitnessCover cover = cover_incomparables(p, Y);
                    std::vector<ElementId> expected;
                    for (ElementId x = 0; x < p.size(); ++x)
                      for (ElementId y : Y)
                        if (!p.is_comparable(x, y)) {
                          expected.push_back(x);
                          break;
                        }
                    auto target = cover.target;
                    std::sort(target.begin(), target.end());
                    if (target != expected) return !fail(why, "target differs from I(Y)");
                    const auto v = oracle::verify_cover(p, cover.target, cover.witnesses, oracle::CoverMode::exact);
                    if (!v.ok) return !fail(why, v.detail);
                  }
                  return true;
                }});

  ps.push_back({"witness.determining_subchain", [](const RealisticPoset& p, const GenSpec&, std::string& why) {
                  for (const Chain& c : chain_partition(p).chains) {
                    const Chain Y = extend_to_maximal_chain(p, c);
                    const auto X = determining_subchain(p, Y);
                    if (!(common_comparables(p, X) == Bitset::from(p.size(), Y)))
                      return !fail(why, "intersection identity fails for {" + join_ids(Y) + "}");
                    if (p.size() <= kEnumerationLimit && !verify_unique_extension(p, X, Y, kEnumerationLimit).ok)
                      return !fail(why, "{" + join_ids(X) + "} extends to more than {" + join_ids(Y) + "}");
                  }
                  return true;
                }});

  ps.push_back({"io.round_trip", [](const RealisticPoset& p, const GenSpec&, std::string& why) {
                  const std::string text = format_poset(p);
                  const RealisticPoset back = parse_poset(text);
                  if (!(back == p)) return !fail(why, "parse(format(p)) differs from p");
                  if (format_poset(back) != text) return !fail(why, "format is not stable");
                  return true;
                }});

  ps.push_back({"gen.width_bound", [](const RealisticPoset& p, const GenSpec& spec, std::string& why) {
                  if (spec.kind != GenKind::k_chains) return false;
                  if (width(p) > static_cast<std::size_t>(spec.param.num())) why = "width exceeds k";
                  return true;
                }});

  return ps;
}

}  // namespace

GenSpec trial_spec(std::uint64_t seed, std::size_t trial, std::size_t max_n) {
  Prng rng = Prng::stream(seed, trial);
  GenSpec spec;
  spec.kind = static_cast<GenKind>(trial % 3);
  spec.n = static_cast<std::size_t>(rng.between(0, max_n));
  switch (spec.kind) {
    case GenKind::forward_dag:
      spec.param = Rational(static_cast<std::int64_t>(rng.between(0, 8)), 8);
      break;
    case GenKind::k_chains:
      spec.param = Rational(static_cast<std::int64_t>(rng.between(1, std::max<std::size_t>(spec.n, 1))));
      spec.cross = Rational(static_cast<std::int64_t>(rng.between(0, 4)), 8);
      break;
    case GenKind::interval_order:
      break;
  }
  spec.seed = rng.next();
  return spec;
}

bool SelftestResult::ok() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyTally& t) { return t.passed == t.checked; });
}

std::string SelftestResult::render() const {
  Report r;
  r.add("selftest.seed", std::to_string(options.seed));
  r.add("selftest.trials", options.trials);
  r.add("selftest.max_n", options.max_n);
  for (const auto& t : properties) {
    r.add("property." + t.name, std::to_string(t.passed) + "/" + std::to_string(t.checked));
    if (!t.first_failure.empty()) r.add("failure." + t.name, t.first_failure);
  }
  r.verdict("selftest", ok());
  return r.render();
}

SelftestResult run_selftest(const SelftestOptions& options) {
  const std::vector<Property> props = properties();
  // outcomes[trial][property]
  std::vector<std::vector<Outcome>> outcomes(options.trials, std::vector<Outcome>(props.size()));

  auto run_trial = [&](std::size_t trial) {
    const GenSpec spec = trial_spec(options.seed, trial, options.max_n);
    std::vector<Outcome>& row = outcomes[trial];
    RealisticPoset p;
    try {
      p = generate(spec);
    } catch (const std::exception& e) {
      row[0] = {1, 0, "generator threw: " + std::string(e.what())};
      return;
    }
    for (std::size_t i = 0; i < props.size(); ++i) {
      std::string why;
      bool applies = true;
      try {
        applies = props[i].run(p, spec, why);
      } catch (const std::exception& e) {
        why = std::string("threw: ") + e.what();
      }
      if (!applies && why.empty()) continue;
      row[i].checked = 1;
      row[i].passed = why.empty() ? 1 : 0;
      if (!why.empty()) row[i].failure = why + " [" + spec.str() + "]";
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(options.trials, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < options.trials; i = next++) run_trial(i);
    });
  for (auto& th : pool) th.join();

  SelftestResult result;
  result.options = options;
  for (std::size_t i = 0; i < props.size(); ++i) {
    PropertyTally tally;
    tally.name = props[i].name;
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
      const Outcome& o = outcomes[trial][i];
      tally.checked += o.checked;
      tally.passed += o.passed;
      if (tally.first_failure.empty() && !o.failure.empty())
        tally.first_failure = "trial " + std::to_string(trial) + ": " + o.failure;
    }
    result.properties.push_back(std::move(tally));
  }
  return result;
}

}  // namespace rposet
