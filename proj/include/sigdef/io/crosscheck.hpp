#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sigdef/oracle.hpp"

namespace sigdef::io {

struct CrosscheckOptions {
  std::size_t count = 1000;
  /// Matched instances have 1..max_pairs pairs; general ones at most
  /// min(12, 2 * max_pairs) vertices.
  std::size_t max_pairs = 6;
  std::uint64_t seed = 1;
  bool check_invariants = true;
  oracle::Limits limits;
};

struct CrosscheckMismatch {
  std::size_t index = 0;
  std::string kind;
  std::string detail;
  /// The offending instance in .sg form.
  std::string graph;
};

struct CrosscheckSummary {
  std::size_t instances = 0;
  std::size_t matched_instances = 0;
  std::size_t general_instances = 0;
  /// Instances whose chromatic number was computed and equals 3.
  std::size_t three_chromatic = 0;
  std::size_t value_one = 0;
  std::size_t value_zero = 0;
  std::map<int, std::size_t> terminating_steps;
  std::vector<CrosscheckMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Runs MaxDef on seeded random instances, alternating matched and general
/// graphs, and compares each value with the existence of a stable positive
/// cover. When the oracle can compute χ and it is 3, the maximum deficiency
/// is compared as well. Invariant violations count as mismatches.
CrosscheckSummary crosscheck(const CrosscheckOptions &options);

/// Compares MaxDef with the oracles on one graph; returns the mismatches
/// (empty on agreement). `chi_checked` tells whether χ = 3 was confirmed.
std::vector<CrosscheckMismatch> check_instance(const SignedGraph &g, const CrosscheckOptions &options,
                                               int *value = nullptr, int *terminating_step = nullptr,
                                               bool *chi_checked = nullptr);

}  // namespace sigdef::io
