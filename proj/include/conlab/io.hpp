#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "conlab/hierarchy.hpp"
#include "conlab/properties.hpp"
#include "conlab/semantics.hpp"
#include "conlab/suszko.hpp"

namespace conlab {

struct ParsedStructure {
  ConsequenceOperator op;
  std::optional<FamilyK> family;
  std::optional<int> kappa;
};

/// Reads a structure document: a carrier, one operator entry per subset (no
/// defaults), and optionally a premise-set family and a kappa. Violations
/// raise ParseError with the offending path. A document may also wrap the
/// structure under a "structure" key, as generate reports do.
ParsedStructure parse_structure(const std::string& text);

/// Canonical text form: fixed key order, subsets as label arrays in carrier
/// order, entries in ascending subset order. parse(emit(x)) == x.
std::string emit_structure(const ConsequenceOperator& op, const std::optional<FamilyK>& family,
                           std::optional<int> kappa);

/// Semantics documents for construct output / verify input. The "type" key
/// selects functional, generic, or s.
std::string emit_functional(const FunctionalSemantics& sem, const Carrier& carrier);
std::string emit_generic(const GenericSemantics& sem, const Carrier& carrier);
std::string emit_s(const SSemantics& sem, const Carrier& carrier);

/// Full command dispatch; writes the report to `out` and diagnostics to
/// `err`. Returns 0 on success, 1 on input errors, 2 on type-precondition
/// failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conlab
