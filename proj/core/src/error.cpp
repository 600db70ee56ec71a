#include "seed/error.hpp"

namespace seed {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::non_finite_input: return "NonFiniteInput";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::empty_training_set: return "EmptyTrainingSet";
    case Errc::empty_model: return "EmptyModel";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::empty_matrix: return "EmptyMatrix";
    case Errc::empty_runs: return "EmptyRuns";
    case Errc::label_set_mismatch: return "LabelSetMismatch";
    case Errc::insufficient_class_size: return "InsufficientClassSize";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::parse_error: return "ParseError";
    case Errc::duplicate_id: return "DuplicateId";
    case Errc::missing_class: return "MissingClass";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace seed
