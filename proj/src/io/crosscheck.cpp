#include "sigdef/io/crosscheck.hpp"

#include <algorithm>

#include "sigdef/io/generate.hpp"
#include "sigdef/io/sg_format.hpp"
#include "sigdef/maxdef.hpp"

namespace sigdef::io {

namespace {

CrosscheckMismatch mismatch(const SignedGraph &g, std::string kind, std::string detail) {
  return {0, std::move(kind), std::move(detail), serialize_sg(g)};
}

}  // namespace

std::vector<CrosscheckMismatch> check_instance(const SignedGraph &g, const CrosscheckOptions &options,
                                               int *value, int *terminating_step, bool *chi_checked) {
  std::vector<CrosscheckMismatch> out;
  MaxDefOptions mopts;
  mopts.assume_three_chromatic = true;
  mopts.check_invariants = options.check_invariants;

  MaxDefResult result;
  try {
    result = maxdef(g, mopts);
  } catch (const InvariantViolation &e) {
    out.push_back(mismatch(g, "invariant", e.what()));
    return out;
  }
  if (value) *value = result.value;
  if (terminating_step) *terminating_step = result.terminating_step;

  const bool has_cover = oracle::stable_positive_cover(g, options.limits).has_value();
  if (has_cover != (result.value == 1)) {
    out.push_back(mismatch(g, "cover", "maxdef returned " + std::to_string(result.value) +
                                           " but a stable positive cover " +
                                           (has_cover ? "exists" : "does not exist")));
  }

  bool checked = false;
  if (g.vertex_count() <= options.limits.max_vertices) {
    auto report = oracle::deficiency_report(g, options.limits);
    if (report.chi == 3) {
      checked = true;
      if (report.max != result.value)
        out.push_back(mismatch(g, "deficiency", "maxdef returned " + std::to_string(result.value) +
                                                    " but the maximum deficiency is " +
                                                    std::to_string(report.max)));
    }
  }
  if (chi_checked) *chi_checked = checked;
  return out;
}

CrosscheckSummary crosscheck(const CrosscheckOptions &options) {
  if (options.max_pairs < 1) throw std::invalid_argument("max_pairs must be at least 1");
  CrosscheckSummary summary;
  Random rng(options.seed);
  const std::size_t max_general = std::max<std::size_t>(2, std::min<std::size_t>(12, 2 * options.max_pairs));

  for (std::size_t i = 0; i < options.count; ++i) {
    const std::uint64_t instance_seed = rng.next();
    SignedGraph g;
    if (i % 2 == 0) {
      const std::size_t pairs = rng.between(1, options.max_pairs);
      const double p = 0.7 * rng.uniform();
      g = generate_matched(pairs, p, instance_seed);
      ++summary.matched_instances;
    } else {
      const std::size_t n = rng.between(2, max_general);
      const double pp = 0.15 + 0.5 * rng.uniform();
      const double pn = 0.6 * rng.uniform();
      g = generate_general(n, pp, pn, instance_seed);
      // Redraw until there is something for MaxDef to cover.
      for (std::uint64_t retry = 1; g.positive_edge_count() == 0; ++retry)
        g = generate_general(n, pp, pn, instance_seed + retry);
      ++summary.general_instances;
    }

    int value = 0;
    int step = 0;
    bool chi3 = false;
    auto found = check_instance(g, options, &value, &step, &chi3);
    ++summary.instances;
    if (chi3) ++summary.three_chromatic;
    for (auto &m : found) {
      m.index = i;
      summary.mismatches.push_back(std::move(m));
    }
    if (!found.empty() && found.front().kind == "invariant") continue;
    ++(value == 1 ? summary.value_one : summary.value_zero);
    ++summary.terminating_steps[step];
  }
  return summary;
}

}  // namespace sigdef::io
