#include "robbo/error.hpp"

namespace robbo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidTolerance: return "invalid-tolerance";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InsufficientData: return "insufficient-data";
    case ErrorKind::NonParetoDataset: return "non-pareto-dataset";
    case ErrorKind::DuplicateSample: return "duplicate-sample";
    case ErrorKind::OutOfDomain: return "out-of-domain";
    case ErrorKind::InconsistentSample: return "inconsistent-sample";
    case ErrorKind::SamplerFailure: return "sampler-failure";
    case ErrorKind::UnsupportedBaseline: return "unsupported-baseline";
    case ErrorKind::IterationCap: return "iteration-cap";
  }
  return "unknown";
}

}  // namespace robbo
