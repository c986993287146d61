#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "nec/hoare.hpp"
#include "nec/representation.hpp"

namespace nec {

/// Malformed input document. Line and column are 1-based; 0 when unknown.
class InputError : public std::runtime_error {
 public:
  InputError(std::string const& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  std::string located(std::string const& source) const;

 private:
  int line_;
  int column_;
};

/// Action document:
///
///   signature: (0; +; [ ]; {(2,3),( )})
///   degree: 4
///   generators:
///     c1.0: (1,2)(3)(4)
///     ...
///
/// The generator set must match the canonical presentation exactly.
CosetAction parse_action_document(std::string const& text);
CosetAction load_action_file(std::filesystem::path const& path);

std::string render_validation(ActionReport const& report,
                              CosetAction const& action);

/// Final signature only, or the full five-step trace when `trace` is set.
std::string render_text(SubgroupReport const& report, bool trace);

/// JSON document with the normalized signature, orientability, the area
/// derivation as exact fractions, and the full link/chain trace.
std::string render_machine(SubgroupReport const& report);

/// Signature recorded in a render_machine document.
NecSignature signature_from_machine(std::string const& json);

}  // namespace nec
