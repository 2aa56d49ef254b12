#pragma once

#include <string>

#include "rdsl/ast.hpp"

namespace rdsl {

// Canonical source form. parse(pretty_print(u)) is structurally equal to u.
std::string pretty_print(const SourceUnit& unit);

}  // namespace rdsl
