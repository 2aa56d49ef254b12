#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rdsl/diag.hpp"

namespace rdsl {

enum class Tok {
    Ident,
    Int,
    String,
    // keywords
    KwFlow,
    KwModifier,
    KwStream,
    KwGuarded,
    KwFirst,
    KwIn,
    KwOut,
    KwType,
    KwTrue,
    KwEmpty,
    KwLabel,
    // punctuation
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Colon,
    Comma,
    Eq,
    Separator,  // ---
    Neq,
    EqEq,
    Le,
    Lt,
    Ge,
    Gt,
    Plus,
    Minus,
    Star,
    Slash,
    At,
    Newline,
    Eof,
};

const char* tok_name(Tok kind);

struct Token {
    Tok kind = Tok::Eof;
    std::string text;        // identifier name, literal digits, string value
    std::int64_t int_value = 0;
    SourcePos pos;
};

// Lexes RDSL source. `%` starts a comment running to end of line; a line
// whose first non-blank characters are `*****` is a banner comment. Newline
// tokens are emitted only at parenthesis/bracket depth zero, so statements
// may wrap inside `(...)` or `[...]`.
// Throws Error{IllegalCharacter}.
std::vector<Token> tokenize(std::string_view text);

}  // namespace rdsl
