#pragma once

#include <string>
#include <vector>

#include "fusioncat/types.hpp"

namespace fcat {

// One named check with its residual.  `tag` identifies the verified identity
// (e.g. "pentagon", "conjugate-equations", "halfbraid-mult").
struct CheckItem {
  std::string id;
  std::string tag;
  double residual = 0;
  double tol = 0;
  bool pass = false;
  std::string note;
};

struct CheckReport {
  std::vector<CheckItem> items;

  void add(const std::string& id, const std::string& tag, double residual, double tol,
           const std::string& note = "");
  void add_bool(const std::string& id, const std::string& tag, bool ok,
                const std::string& note = "");
  void merge(const CheckReport& other, const std::string& prefix = "");

  bool pass() const;
  double max_residual() const;
  const CheckItem* first_failure() const;
  // deterministic rendering, sorted by id
  std::string text() const;
};

}  // namespace fcat
