#ifndef MMSC_INSTANCE_IO_HPP_
#define MMSC_INSTANCE_IO_HPP_

#include <cstdint>
#include <string>

#include "mmsc/model.hpp"

namespace mmsc {

// Text format, one record per line ('#' starts a comment):
//   mmsc 1
//   graph (path|cycle|tree|unicyclic|general) <m>
//   edge <a> <b>            (tree, unicyclic and general graphs only)
//   agents <n>
//   u <m rationals>         (n lines)
//   types <n type ids>      (optional)
// Errors are kParse with the offending line number.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);
std::string serialize_instance(const Instance& inst);

struct GenerateOptions {
  int m = 8;
  int n = 3;
  // 0 gives every agent an independent row.
  int types = 0;
  std::uint64_t seed = 0;
  int max_value = 10;
};

// Random cycle instance with integer utilities in [0, max_value]. With types,
// the rows are pairwise distinct and agent i gets type i mod types.
Instance generate_instance(const GenerateOptions& options);

}  // namespace mmsc

#endif  // MMSC_INSTANCE_IO_HPP_
