#pragma once

#include <string>

#include <json.hpp>

#include "nilheis/group.hpp"

namespace nilheis {

struct VerifyResult {
  bool ok = true;
  std::string failed;   // name of the first failing check
  std::string witness;  // human-readable diagnostics
};

// Re-runs every certificate check from scratch, using only the group and the
// certificate JSON — no state shared with the constructor.
VerifyResult verify_certificate(const GroupPtr& g, const nlohmann::json& cert);

}  // namespace nilheis
