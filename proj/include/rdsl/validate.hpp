#pragma once

#include <vector>

#include "rdsl/ast.hpp"
#include "rdsl/diag.hpp"

namespace rdsl {

// Static checks over a (possibly multi-file, merged) unit:
//  - flow/modifier names unique across the compilation,
//  - every stream referenced in a flow body is declared in that flow or is
//    one of its formals,
//  - call arity/names match the callee's interface when the callee is known,
//  - every OUT param of a modifier is assigned on every guard arm,
//  - guard conditions reference only IN params.
// Findings come back as diagnostics; nothing is thrown.
std::vector<Diagnostic> validate_unit(const SourceUnit& unit);

}  // namespace rdsl
