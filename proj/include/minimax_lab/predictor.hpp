#pragma once

#include <map>
#include <optional>
#include <string>

#include "minimax_lab/graph.hpp"

namespace minimax_lab {

/// A predictor x -> labeling, stored as an explicit table over input point
/// ids plus an optional fallback for unseen points.
struct Predictor {
  std::map<std::string, Labeling> table;
  std::optional<Labeling> fallback;

  bool defined_on(const std::string& x) const { return table.count(x) > 0 || fallback.has_value(); }

  /// Throws DomainError when x is neither tabulated nor covered by a fallback.
  const Labeling& operator()(const std::string& x) const;

  bool operator==(const Predictor&) const = default;
};

/// Constant predictor returning the all-zeros labeling of length l everywhere.
Predictor zero_predictor(int l);

}  // namespace minimax_lab
