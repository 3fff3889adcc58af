#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dowling/groups.hpp"
#include "dowling/io.hpp"
#include "dowling/set_partition.hpp"

namespace dowling {

struct VerifyConfig {
  int n = 3;
  GroupTable group = cyclic_group(2);
  std::size_t cap = kDefaultSizeCap;
  /// Ranges for the arithmetic identities.
  int nmax = 7;
  int kmax = 5;
  /// Random stellar subdivision trials.
  int trials = 200;
  std::uint64_t seed = 1;
};

struct CheckRecord {
  std::string suite;
  std::string id;
  std::string anchor;
  bool pass = true;
  /// Reported but never counted as a failure.
  bool informational = false;
  Json data = Json::object();
};

struct VerifyReport {
  std::vector<CheckRecord> records;
  std::size_t failures() const;
  Json to_json(const VerifyConfig& config) const;
};

/// lattice, building, trees, subdivision, filtration, identities.
const std::vector<std::string>& suite_names();

/// Runs the named suites ("all" expands to every suite). Records are sorted
/// by suite and then case id. Throws DomainError for unknown suite names
/// and ResourceError when a construction exceeds the cap.
VerifyReport run_suites(const VerifyConfig& config, const std::vector<std::string>& suites);

}  // namespace dowling
