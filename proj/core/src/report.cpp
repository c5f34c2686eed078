#include "slicefrac/report.hpp"

#include <sstream>

namespace sf {

void Report::merge(const Report& o) {
  for (const auto& [k, v] : o.items) items.emplace_back(o.name.empty() ? k : o.name + "." + k, v);
}

std::string Report::text() const {
  std::ostringstream os;
  if (!name.empty()) os << name << '\n';
  for (const auto& [k, v] : items) os << "  " << k << ": " << v << '\n';
  return os.str();
}

}  // namespace sf
