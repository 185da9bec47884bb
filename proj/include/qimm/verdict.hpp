#pragma once

#include <string>
#include <vector>

namespace qimm {

// Collected failures of a verification routine; empty means pass.
struct Verdict {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
  void merge(const Verdict& other) { failures.insert(failures.end(), other.failures.begin(), other.failures.end()); }
};

}  // namespace qimm
