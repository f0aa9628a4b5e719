#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eulerian/arith.hpp"
#include "eulerian/witness.hpp"

namespace eulerian::cli {

enum class Format { Text, Csv, Json };

struct Options {
  Format format = Format::Text;
  Budget budget;
  int order = 10;
  bool verbose = false;
};

// Reduced tables ʳAₙ/r! for 1 <= r <= 5, r <= n <= 8, or a single r.
std::string eulerian_table(Format f, std::optional<int> r = std::nullopt);
// t_1..t_14.
std::string euler_number_table(Format f);

struct Entry {
  std::string id;
  std::string params;
  Witness witness;
};

struct Report {
  std::string suite;
  std::vector<Entry> entries;  // stable-sorted by id
  double seconds = 0;

  size_t failures() const;
};

std::vector<std::string> suite_names();
// Throws DomainError for an unknown suite.
Report run_suite(const std::string& suite, const Options& opts);
std::string render(const Report& r, Format f, bool verbose);

// Whole command line; returns the process exit status
// (0 ok, 1 verification failure, 2 usage error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eulerian::cli
