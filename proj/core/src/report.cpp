#include "fusioncat/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace fcat {

void CheckReport::add(const std::string& id, const std::string& tag, double residual, double tol,
                      const std::string& note) {
  items.push_back(CheckItem{id, tag, residual, tol, residual < tol, note});
}

void CheckReport::add_bool(const std::string& id, const std::string& tag, bool ok,
                           const std::string& note) {
  items.push_back(CheckItem{id, tag, ok ? 0.0 : 1.0, 0.5, ok, note});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (CheckItem it : other.items) {
    it.id = prefix + it.id;
    items.push_back(std::move(it));
  }
}

bool CheckReport::pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

double CheckReport::max_residual() const {
  double r = 0;
  for (const auto& i : items) r = std::max(r, i.residual);
  return r;
}

const CheckItem* CheckReport::first_failure() const {
  std::vector<const CheckItem*> sorted;
  for (const auto& i : items) sorted.push_back(&i);
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckItem* a, const CheckItem* b) { return a->id < b->id; });
  for (const auto* i : sorted)
    if (!i->pass) return i;
  return nullptr;
}

std::string CheckReport::text() const {
  std::vector<CheckItem> sorted = items;
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckItem& a, const CheckItem& b) { return a.id < b.id; });
  std::ostringstream os;
  for (const auto& i : sorted) {
    os << (i.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(44) << i.id << " ["
       << i.tag << "]  residual=" << std::scientific << std::setprecision(3) << i.residual
       << "  tol=" << i.tol;
    if (!i.note.empty()) os << "  (" << i.note << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace fcat
