#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace plab {

// Numeric values are shared with the C API (plab_status) and must stay stable.
enum class ErrorCode : int {
  ok = 0,
  // permutoid validation
  empty_element = 10,
  point_out_of_range = 11,
  not_functional = 12,
  not_injective = 13,
  missing_identity = 14,
  duplicate_element = 15,
  unique_extension_violated = 16,
  ground_set_mismatch = 17,
  // morphisms and canonical forms
  identity_not_preserved = 20,
  equivariance_violated = 21,
  composition_not_preserved = 22,
  ground_set_too_large = 23,
  // presentations and groups
  parse_error = 30,
  unknown_generator = 31,
  bad_exponent = 32,
  empty_generator_list = 33,
  out_of_bounds = 34,
  backend_inconclusive = 35,
  precondition_radius = 36,
  relator_not_killed = 37,
  closure_cap_exceeded = 38,
  bad_group_table = 39,
  // developments
  not_extending = 40,
  composition_broken = 41,
  identity_not_full = 42,
  invalid_source = 43,
  not_a_permutation = 44,
  // pseudogroups
  not_rigid = 50,
  not_free = 51,
  not_an_action = 52,
  group_closure_cap_exceeded = 53,
  // generic
  invalid_argument = 90,
  internal = 99,
};

const char* error_name(ErrorCode code) noexcept;

/// Base exception. `indices()` carries the offending element/point indices in
/// the order given by the error's name, e.g. UniqueExtensionViolated(p,q,r1,r2).
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message, std::vector<std::int64_t> indices = {})
      : std::runtime_error(std::move(message)), code_(code), indices_(std::move(indices)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::int64_t>& indices() const noexcept { return indices_; }

private:
  ErrorCode code_;
  std::vector<std::int64_t> indices_;
};

[[noreturn]] void raise(ErrorCode code, std::vector<std::int64_t> indices = {},
                        const std::string& detail = {});

}  // namespace plab
