#include "dacox/report.hpp"

#include <json.hpp>

namespace dacox {

void VerificationReport::add(std::string id, bool pass, std::string witness) {
  checks.push_back(Check{std::move(id), pass, false, pass ? std::string{} : std::move(witness)});
}

void VerificationReport::skip(std::string id, std::string note) {
  checks.push_back(Check{std::move(id), true, true, std::move(note)});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check d = c;
    if (!prefix.empty()) d.id = prefix + "/" + d.id;
    checks.push_back(std::move(d));
  }
  elapsed_ms += other.elapsed_ms;
}

bool VerificationReport::ok() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

std::size_t VerificationReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.pass && !c.skipped) ++n;
  return n;
}

std::string VerificationReport::to_json(bool with_elapsed) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["label"] = label;
  j["checks_run"] = checks.size();
  j["passed"] = passed();
  j["failed"] = failures();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["status"] = c.skipped ? "skipped" : (c.pass ? "pass" : "fail");
    if (!c.witness.empty()) e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

}  // namespace dacox
