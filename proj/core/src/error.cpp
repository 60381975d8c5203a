#include "csinv/error.hpp"

namespace csinv {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IncomparableValues: return "IncomparableValues";
    case ErrorKind::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::RankLimit: return "RankLimit";
    case ErrorKind::MalformedSplit: return "MalformedSplit";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NoRewrite: return "NoRewrite";
    case ErrorKind::SignUnknown: return "SignUnknown";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownBlock: return "UnknownBlock";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::CatalogError: return "CatalogError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorKind::ParseError, message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

}  // namespace csinv
