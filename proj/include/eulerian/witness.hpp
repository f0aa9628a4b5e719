#pragma once

#include <string>
#include <utility>

namespace eulerian {

// Outcome of checking an identity: both sides rendered exactly.
struct Witness {
  bool ok = false;
  std::string lhs;
  std::string rhs;
  std::string detail;

  explicit operator bool() const { return ok; }
};

template <class T>
Witness compare(const T& lhs, const T& rhs, std::string detail = {}) {
  using eulerian::to_string;
  return Witness{lhs == rhs, to_string(lhs), to_string(rhs), std::move(detail)};
}

}  // namespace eulerian
