#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pauli_super {

/// Outcome of one named check. Failures carry a few witnesses.
struct ReportItem {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string detail;
  std::vector<std::string> witnesses;  // first few failures

  static constexpr std::size_t kMaxWitnesses = 8;

  void fail(std::string witness) {
    passed = false;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
  }
};

struct Report {
  std::string title;
  std::vector<ReportItem> items;

  bool passed() const {
    for (const auto& it : items)
      if (!it.passed) return false;
    return true;
  }
  const ReportItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }
};

}  // namespace pauli_super
