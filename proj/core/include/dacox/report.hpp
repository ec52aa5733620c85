#pragma once

#include <string>
#include <vector>

namespace dacox {

struct Check {
  std::string id;
  bool pass = true;
  bool skipped = false;
  std::string witness;
};

struct VerificationReport {
  std::string suite;
  std::string label;
  std::vector<Check> checks;
  double elapsed_ms = 0;

  void add(std::string id, bool pass, std::string witness = {});
  void skip(std::string id, std::string note);
  void merge(const VerificationReport& other, const std::string& prefix = {});
  bool ok() const;
  std::size_t failures() const;
  std::size_t passed() const;
  // elapsed time is left out unless asked for, so that repeated runs are byte-identical
  std::string to_json(bool with_elapsed = false) const;
};

}  // namespace dacox
