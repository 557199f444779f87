#pragma once

#include <string>

#include <json.hpp>

#include "nilheis/embed.hpp"
#include "nilheis/group.hpp"
#include "nilheis/heisenberg.hpp"

namespace nilheis {

struct ParsedGroup {
  GroupPtr group;
  std::string label;
};

// {"A":[...],"B":[...],"C":[...],"mu":[[[c-coords]]]}
BilinearMap bilinear_from_json(const nlohmann::json& j);

// Dispatch on "format": cayley | heisenberg | hsub. Heisenberg and hsub
// inputs are materialized through the table bridge, so they are subject to
// the table bound. Errors: ParseError, NotAGroup, TooLarge.
ParsedGroup group_from_json(const nlohmann::json& j);
ParsedGroup load_group_file(const std::string& path);

nlohmann::json certificate_to_json(const EmbeddingCertificate& cert);

}  // namespace nilheis
