#include "qhopf/report.hpp"

#include <algorithm>
#include <sstream>

namespace qhopf {

void Report::add(std::string id, bool pass, std::string details) {
  items_.push_back({std::move(id), pass, std::move(details)});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& it : other.items_) items_.push_back({prefix + it.id, it.pass, it.details});
}

bool Report::all_pass() const {
  return std::all_of(items_.begin(), items_.end(), [](const CheckItem& c) { return c.pass; });
}

const CheckItem& Report::get(const std::string& id) const {
  for (const auto& it : items_)
    if (it.id == id) return it;
  throw std::out_of_range("no check named " + id);
}

bool Report::has(const std::string& id) const {
  return std::any_of(items_.begin(), items_.end(), [&](const CheckItem& c) { return c.id == id; });
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> f;
  for (const auto& it : items_)
    if (!it.pass) f.push_back(it.id);
  return f;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& it : items_) {
    os << (it.pass ? "PASS " : "FAIL ") << it.id;
    if (!it.details.empty()) os << "  " << it.details;
    os << "\n";
  }
  return os.str();
}

}  // namespace qhopf
