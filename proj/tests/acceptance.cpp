// Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rposet/cli.hpp"
#include "rposet/decomposition.hpp"
#include "rposet/generators.hpp"
#include "rposet/incomp_graph.hpp"
#include "rposet/io.hpp"
#include "rposet/oracle.hpp"
#include "rposet/prng.hpp"
#include "rposet/selftest.hpp"
#include "rposet/witness.hpp"

using namespace rposet;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;
};

struct Tally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  Outcome outcome(const std::string& what) const {
    std::string s = std::to_string(instances) + " " + what + ", " + std::to_string(failures) + " failures";
    if (failures) s += " (first: " + first_failure + ")";
    return {failures == 0, s};
  }
};

class Clock {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

RealisticPoset mixed_poset(std::uint64_t seed, std::size_t max_n, GenSpec* spec_out = nullptr) {
  const GenSpec spec = trial_spec(seed, seed, max_n);
  if (spec_out) *spec_out = spec;
  return generate(spec);
}

// Lemma-0 analogue results collected while running criteria 1 and 2.
Tally g_interval_tally;

void record_interval_structure(const RealisticPoset& p, const GenSpec& spec) {
  ++g_interval_tally.instances;
  const auto v = check_interval_structure(p, components(IncompGraph(p), p));
  if (!v.ok) g_interval_tally.fail(spec.str() + ": " + v.failure);
}

Outcome dilworth_equality() {
  constexpr double kLimitSeconds = 60;
  Clock clock;
  Tally t;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    GenSpec spec;
    const auto p = mixed_poset(seed, 16, &spec);
    ++t.instances;
    const auto part = chain_partition(p);
    const std::size_t oracle_width = oracle::max_antichain(p);
    const auto valid = oracle::check_chain_partition(p, part.chains);
    if (!valid.ok) t.fail(spec.str() + ": " + valid.detail);
    else if (part.chains.size() != oracle_width)
      t.fail(spec.str() + ": " + std::to_string(part.chains.size()) + " chains vs antichain " +
             std::to_string(oracle_width));
    record_interval_structure(p, spec);
  }
  const double secs = clock.seconds();
  if (secs > kLimitSeconds) t.fail("runtime " + std::to_string(secs) + " s exceeds limit");
  auto o = t.outcome("posets (n<=16)");
  o.summary += ", " + std::to_string(secs) + " s";
  return o;
}

Outcome mirsky_equality() {
  constexpr double kLimitSeconds = 60;
  Clock clock;
  Tally t;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    GenSpec spec;
    const auto p = mixed_poset(seed, 200, &spec);
    ++t.instances;
    const auto layering = antichain_layering(p);
    const std::size_t oracle_height = oracle::longest_chain(p);
    const auto valid = oracle::check_antichain_partition(p, layering.layers);
    if (!valid.ok) t.fail(spec.str() + ": " + valid.detail);
    else if (layering.layers.size() != oracle_height)
      t.fail(spec.str() + ": " + std::to_string(layering.layers.size()) + " layers vs chain " +
             std::to_string(oracle_height));
    record_interval_structure(p, spec);
  }
  const double secs = clock.seconds();
  if (secs > kLimitSeconds) t.fail("runtime " + std::to_string(secs) + " s exceeds limit");
  auto o = t.outcome("posets (n<=200)");
  o.summary += ", " + std::to_string(secs) + " s";
  return o;
}

Outcome interval_structure() { return g_interval_tally.outcome("posets from criteria 1-2"); }

Outcome incomparables_cover() {
  Tally t;
  std::size_t chains = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    GenSpec spec;
    const auto p = mixed_poset(seed, 60, &spec);
    ++t.instances;
    for (const Chain& c : chain_partition(p).chains) {
      const Chain Y = extend_to_maximal_chain(p, c);
      ++chains;
      try {
        const auto cover = cover_incomparables(p, Y);
        const auto v = oracle::verify_cover(p, cover.target, cover.witnesses, oracle::CoverMode::exact);
        // target must itself be I(Y), checked directly.
        std::vector<ElementId> expected;
        for (ElementId x = 0; x < p.size(); ++x)
          for (ElementId y : Y)
            if (!p.is_comparable(x, y)) {
              expected.push_back(x);
              break;
            }
        auto target = cover.target;
        std::sort(target.begin(), target.end());
        if (!v.ok) t.fail(spec.str() + ": " + v.detail);
        else if (target != expected) t.fail(spec.str() + ": target differs from I(Y)");
      } catch (const std::exception& e) {
        t.fail(spec.str() + ": " + e.what());
      }
    }
  }
  auto o = t.outcome("posets (n<=60)");
  o.summary += ", " + std::to_string(chains) + " maximal chains";
  return o;
}

Outcome determining_subchains() {
  constexpr double kLimitSeconds = 120;
  Clock clock;
  Tally t;
  std::size_t chains = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GenSpec spec;
    const auto p = mixed_poset(seed, 14, &spec);
    ++t.instances;
    std::vector<Chain> targets;
    for (const Chain& c : chain_partition(p).chains) targets.push_back(extend_to_maximal_chain(p, c));
    for (const Chain& Y : targets) {
      ++chains;
      try {
        const auto X = determining_subchain(p, Y);
        if (!(common_comparables(p, X) == Bitset::from(p.size(), Y)))
          t.fail(spec.str() + ": intersection identity fails for {" + join_ids(Y) + "}");
        else if (!verify_unique_extension(p, X, Y).ok)
          t.fail(spec.str() + ": {" + join_ids(X) + "} has other maximal extensions");
      } catch (const std::exception& e) {
        t.fail(spec.str() + ": " + e.what());
      }
    }
  }
  const double secs = clock.seconds();
  if (secs > kLimitSeconds) t.fail("runtime " + std::to_string(secs) + " s exceeds limit");
  auto o = t.outcome("posets (n<=14)");
  o.summary += ", " + std::to_string(chains) + " maximal chains, " + std::to_string(secs) + " s";
  return o;
}

Outcome worked_fixture() {
  const std::vector<Rational> coords{1, 2, 3, 4, 5, 6};
  const std::vector<Relation> rel{{0, 2}, {0, 4}, {2, 4}, {1, 3}, {1, 5}, {3, 5},
                                  {1, 2}, {1, 4}, {0, 3}, {0, 5}, {2, 5}};
  const auto f = RealisticPoset::build(coords, rel);
  const Chain Y{1, 3, 5};
  std::vector<std::string> bad;
  const auto cover = cover_incomparables(f, Y);
  if (cover.witnesses != std::vector<ElementId>{1, 3}) bad.push_back("witnesses=" + join_ids(cover.witnesses));
  const auto X = determining_subchain(f, Y);
  if (X != std::vector<ElementId>{1, 3}) bad.push_back("determining=" + join_ids(X));
  const auto inter = common_comparables(f, X).to_vector();
  if (inter != std::vector<ElementId>{1, 3, 5}) bad.push_back("intersection=" + join_ids(inter));
  const auto layers = antichain_layering(f).layers;
  if (layers != std::vector<std::vector<ElementId>>{{0, 1}, {2, 3}, {4, 5}}) bad.push_back("layering");
  if (width(f) != 2) bad.push_back("width=" + std::to_string(width(f)));
  if (height(f) != 3) bad.push_back("height=" + std::to_string(height(f)));
  std::string s = "witnesses {1,3}, determining {1,3}, intersection {1,3,5}, layers [{0,1},{2,3},{4,5}], width 2, height 3";
  for (const auto& b : bad) s += "; mismatch " + b;
  return {bad.empty(), s};
}

std::string run_cli(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "rposet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome round_trip_and_determinism() {
  Tally t;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    GenSpec spec;
    const auto p = mixed_poset(seed, 40, &spec);
    ++t.instances;
    const std::string text = format_poset(p);
    const auto back = parse_poset(text);
    if (!(back == p)) t.fail(spec.str() + ": parse(format(p)) != p");
    else if (format_poset(back) != text) t.fail(spec.str() + ": format not stable");
  }
  int code_a = 0, code_b = 0;
  const std::vector<std::string> args{"selftest", "--trials", "200", "--max-n", "12", "--seed", "7"};
  auto args_serial = args;
  args_serial.insert(args_serial.end(), {"--threads", "1"});
  const std::string a = run_cli(args, code_a);
  const std::string b = run_cli(args_serial, code_b);
  if (a != b) t.fail("selftest reports differ between runs");
  if (code_a != 0 || code_b != 0) t.fail("selftest exit codes " + std::to_string(code_a) + "/" + std::to_string(code_b));
  auto o = t.outcome("round trips");
  o.summary += ", selftest --seed 7 report " + std::string(a == b ? "byte-identical" : "DIFFERS") + " across two runs (" +
               std::to_string(a.size()) + " bytes)";
  return o;
}

Outcome width_bound() {
  Tally t;
  for (std::uint64_t draw = 0; draw < 1000; ++draw) {
    Prng rng = Prng::stream(8, draw);
    const std::size_t k = 1 + draw % 6;
    const std::size_t n = k + rng.between(0, 30);
    const Rational cross(static_cast<std::int64_t>(rng.between(0, 8)), 8);
    const std::uint64_t seed = rng.next();
    const auto p = gen_k_chains(n, k, cross, seed);
    ++t.instances;
    const std::size_t w = width(p);
    if (w > k) t.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " width " + std::to_string(w));
    if (n <= 24 && oracle::max_antichain(p) != w) t.fail("width disagrees with oracle at n=" + std::to_string(n));
  }
  return t.outcome("k_chains draws, k in 1..6");
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "Dilworth equality: chain partition size == max antichain", dilworth_equality},
      {"AC2", "Mirsky equality: layer count == longest chain", mirsky_equality},
      {"AC3", "Component hulls hold exactly their component and are disjoint", interval_structure},
      {"AC4", "Witness cover: union of I(b) == I(Y) exactly", incomparables_cover},
      {"AC5", "Determining subchain: identity and unique maximal extension", determining_subchains},
      {"AC6", "Worked fixture F", worked_fixture},
      {"AC7", "Round trip and selftest determinism", round_trip_and_determinism},
      {"AC8", "k_chains width bound", width_bound},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("[%s] %s %s: %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.summary.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
