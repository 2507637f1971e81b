#ifndef MMSC_MATCHING_HPP_
#define MMSC_MATCHING_HPP_

#include <optional>
#include <vector>

namespace mmsc {

// Perfect matching of agents to bundles; allowed[i][b] says agent i may take
// bundle b. Returns the bundle index per agent. Kuhn's augmenting paths.
std::optional<std::vector<int>> perfect_matching(
    const std::vector<std::vector<char>>& allowed);

}  // namespace mmsc

#endif  // MMSC_MATCHING_HPP_
