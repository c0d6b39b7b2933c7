#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "srcfg/configuration.hpp"

namespace srcfg {

/// The 41 parameter sets of the published feasibility table, in table order.
const std::vector<SrcParams>& published_feasible_table();

struct ClaimResult {
  enum class Status { Match, Mismatch, Skipped };

  std::string id;
  int number = 0;
  std::string title;
  nlohmann::json expected;
  nlohmann::json observed;
  Status status = Status::Mismatch;
  std::string note;
  double seconds = 0;

  bool match() const { return status == Status::Match; }
};

std::string to_string(ClaimResult::Status s);

struct ClaimInfo {
  int number;
  std::string id;
  std::string title;
};

/// Registered claims; ids are accepted by run_claim, as are their numbers.
const std::vector<ClaimInfo>& claims();

/// Runs one claim. Throws InvalidSpec for an unknown id.
ClaimResult run_claim(const std::string& id);

nlohmann::json claim_json(const ClaimResult& r);

}  // namespace srcfg
