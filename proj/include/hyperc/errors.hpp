#pragma once

#include <stdexcept>
#include <string>

namespace hyperc {

struct AmbientMismatch : std::invalid_argument {
  explicit AmbientMismatch(const std::string& what) : std::invalid_argument("ambient mismatch: " + what) {}
};

struct NotDescending : std::domain_error {
  NotDescending() : std::domain_error("chain step does not map the start subgroup into itself") {}
};

struct NotAscending : std::domain_error {
  explicit NotAscending(const std::string& what) : std::domain_error("chain is not ascending: " + what) {}
};

struct InvalidGroup : std::invalid_argument {
  explicit InvalidGroup(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented operation precondition failed; the message names it.
struct PreconditionViolated : std::domain_error {
  explicit PreconditionViolated(const std::string& what) : std::domain_error(what) {}
};

struct NotConnected : PreconditionViolated {
  NotConnected() : PreconditionViolated("requires connected group") {}
};

struct MixedCenterUnsupported : std::runtime_error {
  explicit MixedCenterUnsupported(const std::string& what)
      : std::runtime_error("mixed central elements are not representable: " + what) {}
};

struct UndeterminedLimit : std::runtime_error {
  explicit UndeterminedLimit(const std::string& what) : std::runtime_error("undetermined limit: " + what) {}
};

struct CapExceeded : std::invalid_argument {
  explicit CapExceeded(const std::string& what) : std::invalid_argument("cap exceeded: " + what) {}
};

}  // namespace hyperc
