#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qorep {

enum class Errc {
  UnknownElement,
  DuplicateElement,
  NotTransitive,
  InclusionViolated,
  PartitionMismatch,
  NotAntisymmetric,
  AntisymmetryViolated,
  InvalidLevel,
  TooLarge,
  Schema,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::InclusionViolated: return "InclusionViolated";
    case Errc::PartitionMismatch: return "PartitionMismatch";
    case Errc::NotAntisymmetric: return "NotAntisymmetric";
    case Errc::AntisymmetryViolated: return "AntisymmetryViolated";
    case Errc::InvalidLevel: return "InvalidLevel";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Schema: return "Schema";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qorep
