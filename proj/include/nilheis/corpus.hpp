#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nilheis/group.hpp"

namespace nilheis {

struct CorpusEntry {
  std::string name;
  nlohmann::json file;  // loadable group file, including the expected record
  GroupPtr group;
};

// The standard test corpus: both extraspecial types at p^3 for p in {2,3,5},
// extraspecial central products at p^5 for p in {2,3}, Heisenberg samples
// over Z/4 and Z/6, direct products with abelian groups, hsub samples, and a
// spread of abelian groups. Built once, cached.
const std::vector<CorpusEntry>& corpus();

// Writes one JSON file per entry into dir.
void write_corpus(const std::string& dir);

}  // namespace nilheis
