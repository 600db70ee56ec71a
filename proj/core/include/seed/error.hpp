#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seed {

enum class Errc {
  dimension_mismatch,
  non_finite_input,
  invariant_violation,
  empty_training_set,
  empty_model,
  length_mismatch,
  unknown_label,
  empty_matrix,
  empty_runs,
  label_set_mismatch,
  insufficient_class_size,
  invalid_config,
  parse_error,
  duplicate_id,
  missing_class,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

// Every failure in the library surfaces as a seed::Error carrying a
// machine-checkable code plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace seed
