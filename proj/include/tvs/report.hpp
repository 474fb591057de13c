#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tvs {

/// Outcome of a verification run. Each residual is keyed by an integer list
/// (a partition, or a single x-degree) and holds a canonical scalar string.
struct Report {
  std::string check;
  int cap = 0;
  std::vector<std::pair<std::vector<int>, std::string>> residuals;
  bool pass = true;

  void add(std::vector<int> key, std::string value, bool zero) {
    residuals.emplace_back(std::move(key), std::move(value));
    pass = pass && zero;
  }
};

}  // namespace tvs
