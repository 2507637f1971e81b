#include "mmsc/matching.hpp"

#include <functional>

namespace mmsc {

std::optional<std::vector<int>> perfect_matching(
    const std::vector<std::vector<char>>& allowed) {
  int agents = static_cast<int>(allowed.size());
  int bundles = agents == 0 ? 0 : static_cast<int>(allowed[0].size());
  if (bundles < agents) return std::nullopt;
  std::vector<int> holder(bundles, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int i) {
    for (int b = 0; b < bundles; ++b) {
      if (!allowed[i][b] || visited[b]) continue;
      visited[b] = 1;
      if (holder[b] < 0 || augment(holder[b])) {
        holder[b] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < agents; ++i) {
    visited.assign(bundles, 0);
    if (!augment(i)) return std::nullopt;
  }
  std::vector<int> of_agent(agents, -1);
  for (int b = 0; b < bundles; ++b) {
    if (holder[b] >= 0) of_agent[holder[b]] = b;
  }
  return of_agent;
}

}  // namespace mmsc
