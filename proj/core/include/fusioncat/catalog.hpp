#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusioncat/backends.hpp"
#include "fusioncat/category.hpp"

namespace fcat {

// Built-in example categories and fusion-ring backends with known targets.
// F-symbol data is embedded; scripts/regen_catalog_fsymbols.py re-derives the
// tables by solving the pentagon equation and checks them against the values
// below.
struct CatalogEntry {
  std::string name;
  bool full_data = false;
  std::optional<SkeletalCategory> category;   // full-data entries
  std::shared_ptr<IrrBackend> backend;        // always present
  std::string notes;                          // expected values, provenance
};

CatalogEntry catalog_get(const std::string& name);
std::vector<std::string> catalog_names();

// convenience for tests
SkeletalCategory catalog_category(const std::string& name);

}  // namespace fcat
