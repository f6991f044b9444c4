#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordbench {

enum class errc {
  duplicate_label,
  unknown_label,
  antisymmetry_violation,
  not_dense,
  not_semi_separative,
  cap_exceeded,
  not_restriction_closed,
  coverage_gap,
  not_consistent,
  not_centred,
  not_generic,
  not_linked,
  invalid_family,
  empty_member,
  blocks_overlap,
  depth_cap,
  dimension_mismatch,
  not_independent,
  infeasible_domination,
  parse_error,
};

const char* errc_name(errc code);

// Domain error. `detail` carries the offending labels where the condition
// names a witness (e.g. the uncovered domain F of a coverage gap).
class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message, std::vector<std::string> detail = {})
      : std::runtime_error(std::move(message)), code_(code), detail_(std::move(detail)) {}

  errc code() const { return code_; }
  const std::vector<std::string>& detail() const { return detail_; }

 private:
  errc code_;
  std::vector<std::string> detail_;
};

}  // namespace ordbench
