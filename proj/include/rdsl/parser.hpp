#pragma once

#include <string_view>

#include "rdsl/ast.hpp"
#include "rdsl/lexer.hpp"

namespace rdsl {

// Parses one RDSL source text into flows and modifiers. Fatal findings are
// reported through `diags` (never thrown); the returned unit contains
// whatever parsed cleanly before the first error.
SourceUnit parse_unit(const std::vector<Token>& tokens,
                      std::vector<Diagnostic>& diags);

// tokenize + parse. Lexical errors are converted into diagnostics, so this
// is total over arbitrary byte sequences.
SourceUnit parse_source(std::string_view text, std::vector<Diagnostic>& diags);

}  // namespace rdsl
