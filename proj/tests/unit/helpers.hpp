#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cylspec/numeric.hpp"
#include "cylspec/spectrum.hpp"

namespace testutil {

using EntryStrings = std::vector<std::pair<std::string, std::string>>;

// (value, multiplicity) as canonical strings; requires an exact spectrum.
inline EntryStrings entry_strings(const cylspec::Spectrum& s) {
  EntryStrings out;
  for (const auto& e : s.entries()) {
    out.emplace_back(cylspec::rational_to_string(e.value),
                     cylspec::bigint_to_string(e.multiplicity));
  }
  return out;
}

inline std::vector<double> values_of(const cylspec::Spectrum& s) {
  std::vector<double> out;
  for (const auto& e : s.entries()) out.push_back(e.value_d);
  return out;
}

inline std::vector<long> mults_of(const cylspec::Spectrum& s) {
  std::vector<long> out;
  for (const auto& e : s.entries()) out.push_back(e.multiplicity.get_si());
  return out;
}

inline cylspec::Graph two_triangles() {
  return cylspec::Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

}  // namespace testutil
