#pragma once

#include <stdexcept>
#include <string>

namespace hartogs {

// Failure categories shared across the toolkit. Callers that care about the
// specific failure switch on the code; everyone else treats these as
// std::runtime_error.
enum class errc {
  invalid_input,
  synthesis_failed,
  admissibility_violation,
  non_finite,
  not_converged,
  on_boundary,
  indeterminate,
  dimension_too_high,
  box_too_small,
  not_in_domain,
  line_cut_not_compact,
  cut_not_compact,
  unbounded_cut,
  missing_metadata,
  empty_samples,
  unknown_id,
  config_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "invalid_input";
    case errc::synthesis_failed: return "synthesis_failed";
    case errc::admissibility_violation: return "admissibility_violation";
    case errc::non_finite: return "non_finite";
    case errc::not_converged: return "not_converged";
    case errc::on_boundary: return "on_boundary";
    case errc::indeterminate: return "indeterminate";
    case errc::dimension_too_high: return "dimension_too_high";
    case errc::box_too_small: return "box_too_small";
    case errc::not_in_domain: return "not_in_domain";
    case errc::line_cut_not_compact: return "line_cut_not_compact";
    case errc::cut_not_compact: return "cut_not_compact";
    case errc::unbounded_cut: return "unbounded_cut";
    case errc::missing_metadata: return "missing_metadata";
    case errc::empty_samples: return "empty_samples";
    case errc::unknown_id: return "unknown_id";
    case errc::config_error: return "config_error";
  }
  return "unknown";
}

class ToolkitError : public std::runtime_error {
 public:
  ToolkitError(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw ToolkitError(code, what);
}

}  // namespace hartogs
