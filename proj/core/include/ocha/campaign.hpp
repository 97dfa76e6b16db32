#pragma once

#include "ocha/brace.hpp"
#include "ocha/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ocha {

struct CampaignConfig {
  std::uint64_t seed = 0;
  int trials = 25;
  int max_dim = 3;
  int max_l = 3;
  int max_k = 3;
  /// Structure constants per random cochain.
  int entries = 6;
  /// Subset of campaign_identities(); empty means all.
  std::vector<std::string> identities;
  /// Sign corruption for the self-check; only brace-relation uses it.
  Mutation mutation = Mutation::none;
};

/// brace-relation, hat-brace, hat-squared, delta-squared, M-ainfty,
/// bracket-jacobi, cup-leibniz, comm-homotopy.
const std::vector<std::string>& campaign_identities();

struct FailureWitness {
  int trial = 0;
  std::string detail;
  StructureFile inputs;
};

struct IdentityResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<FailureWitness> first_failure;
  double seconds = 0;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<IdentityResult> results;
  bool passed() const;
  std::size_t total_checks() const;
  /// Machine-readable report; `with_timing` = false drops wall-clock fields
  /// (the remaining text is a pure function of the config).
  std::string to_json(bool with_timing = true) const;
};

/// Throws AlgebraError for an unknown identity name or a negative trial count.
CampaignReport run_campaign(const CampaignConfig& config);

/// The OCHAs the fixture-based identities run over: the built-in fixtures
/// plus two trivial OCHAs with nonzero l.
std::vector<std::pair<std::string, OchaStructure>> campaign_structures();

}  // namespace ocha
