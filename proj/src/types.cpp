#include "combi/error.hpp"
#include "combi/types.hpp"

namespace combi {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse:
      return "parse-error";
    case ErrorCode::integrity:
      return "integrity-error";
    case ErrorCode::not_found:
      return "not-found";
    case ErrorCode::domain:
      return "domain-error";
    case ErrorCode::dependency:
      return "dependency-error";
    case ErrorCode::empty_paradigm:
      return "empty-paradigm";
    case ErrorCode::realization:
      return "realization-error";
    case ErrorCode::resource:
      return "resource-error";
    case ErrorCode::frame_incomplete:
      return "frame-incomplete";
  }
  return "error";
}

}  // namespace combi
