#pragma once

#include <string>
#include <vector>

namespace dnsurf {

// Face counts (f_0, ..., f_d).
struct FVector {
  std::vector<long long> counts;

  FVector() = default;
  explicit FVector(std::vector<long long> c) : counts(std::move(c)) {}
  FVector(std::initializer_list<long long> c) : counts(c) {}

  int dim() const { return static_cast<int>(counts.size()) - 1; }
  long long operator[](int k) const { return counts[static_cast<size_t>(k)]; }

  long long euler() const {
    long long chi = 0, sign = 1;
    for (long long f : counts) {
      chi += sign * f;
      sign = -sign;
    }
    return chi;
  }

  // For a closed 3-manifold: f_3 = f_1 - f_0 and f_2 = 2(f_1 - f_0).
  bool closed3_relations() const {
    if (dim() != 3) return false;
    return counts[3] == counts[1] - counts[0] && counts[2] == 2 * (counts[1] - counts[0]);
  }

  bool operator==(const FVector& o) const = default;

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < counts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(counts[i]);
    }
    return s + ")";
  }
};

}  // namespace dnsurf
