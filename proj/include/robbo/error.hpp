#ifndef ROBBO_ERROR_HPP
#define ROBBO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace robbo {

enum class ErrorKind {
  InvalidTolerance,
  InvalidArgument,
  InsufficientData,
  NonParetoDataset,
  DuplicateSample,
  OutOfDomain,
  InconsistentSample,
  SamplerFailure,
  UnsupportedBaseline,
  IterationCap,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module; the kind is machine-readable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace robbo

#endif  // ROBBO_ERROR_HPP
