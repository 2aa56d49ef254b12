#include "rdsl/lexer.hpp"

#include <cctype>
#include <map>

namespace rdsl {

const char* tok_name(Tok kind) {
    switch (kind) {
        case Tok::Ident: return "identifier";
        case Tok::Int: return "integer";
        case Tok::String: return "string";
        case Tok::KwFlow: return "'flow'";
        case Tok::KwModifier: return "'modifier'";
        case Tok::KwStream: return "'stream'";
        case Tok::KwGuarded: return "'guarded'";
        case Tok::KwFirst: return "'first'";
        case Tok::KwIn: return "'in'";
        case Tok::KwOut: return "'out'";
        case Tok::KwType: return "'type'";
        case Tok::KwTrue: return "'TRUE'";
        case Tok::KwEmpty: return "'EMPTY'";
        case Tok::KwLabel: return "'label'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Colon: return "':'";
        case Tok::Comma: return "','";
        case Tok::Eq: return "'='";
        case Tok::Separator: return "'---'";
        case Tok::Neq: return "'!='";
        case Tok::EqEq: return "'=='";
        case Tok::Le: return "'<='";
        case Tok::Lt: return "'<'";
        case Tok::Ge: return "'>='";
        case Tok::Gt: return "'>'";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::At: return "'@'";
        case Tok::Newline: return "newline";
        case Tok::Eof: return "end of input";
    }
    return "?";
}

namespace {

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_cont(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

Tok keyword_kind(const std::string& word) {
    static const std::map<std::string, Tok> kKeywords = {
        {"flow", Tok::KwFlow},       {"modifier", Tok::KwModifier},
        {"stream", Tok::KwStream},   {"guarded", Tok::KwGuarded},
        {"first", Tok::KwFirst},     {"in", Tok::KwIn},
        {"out", Tok::KwOut},         {"type", Tok::KwType},
        {"TRUE", Tok::KwTrue},       {"EMPTY", Tok::KwEmpty},
        {"label", Tok::KwLabel},
    };
    auto it = kKeywords.find(word);
    if (it != kKeywords.end()) return it->second;
    // The figures typeset the flow keyword in both cases.
    if (word == "Flow") return Tok::KwFlow;
    return Tok::Ident;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    int depth = 0;          // () and [] nesting; newlines inside are soft
    bool line_start = true;  // nothing but blanks seen on this line yet

    auto pos = [&]() { return SourcePos{line, column}; };
    auto push = [&](Tok kind, std::string tok_text = {}, std::int64_t v = 0) {
        out.push_back(Token{kind, std::move(tok_text), v, pos()});
    };
    auto advance = [&](std::size_t n = 1) {
        i += n;
        column += static_cast<int>(n);
    };

    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            if (depth == 0 && !out.empty() &&
                out.back().kind != Tok::Newline)
                push(Tok::Newline);
            ++i;
            ++line;
            column = 1;
            line_start = true;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            advance();
            continue;
        }
        if (c == '%') {  // comment to end of line
            while (i < text.size() && text[i] != '\n') advance();
            continue;
        }
        if (line_start && text.compare(i, 5, "*****") == 0) {
            while (i < text.size() && text[i] != '\n') advance();
            continue;
        }
        line_start = false;

        if (ident_start(c)) {
            std::string word;
            SourcePos start = pos();
            while (i < text.size() && ident_cont(text[i])) {
                word += text[i];
                advance();
            }
            out.push_back(Token{keyword_kind(word), word, 0, start});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            SourcePos start = pos();
            std::int64_t value = 0;
            std::string digits;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                digits += text[i];
                advance();
            }
            out.push_back(Token{Tok::Int, digits, value, start});
            continue;
        }
        if (c == '"') {
            SourcePos start = pos();
            advance();
            std::string value;
            while (i < text.size() && text[i] != '"') {
                if (text[i] == '\\' && i + 1 < text.size()) {
                    char esc = text[i + 1];
                    switch (esc) {
                        case 'n': value += '\n'; break;
                        case 't': value += '\t'; break;
                        case '\\': value += '\\'; break;
                        case '"': value += '"'; break;
                        default: value += esc;
                    }
                    advance(2);
                } else if (text[i] == '\n') {
                    throw Error(ErrorCode::SyntaxError,
                                "unterminated string literal", start);
                } else {
                    value += text[i];
                    advance();
                }
            }
            if (i >= text.size())
                throw Error(ErrorCode::SyntaxError,
                            "unterminated string literal", start);
            advance();  // closing quote
            out.push_back(Token{Tok::String, value, 0, start});
            continue;
        }

        SourcePos start = pos();
        auto two = text.substr(i, 2);
        if (text.compare(i, 3, "---") == 0) {
            push(Tok::Separator, "---");
            advance(3);
            continue;
        }
        if (two == "!=") { push(Tok::Neq, "!="); advance(2); continue; }
        if (two == "==") { push(Tok::EqEq, "=="); advance(2); continue; }
        if (two == "<=") { push(Tok::Le, "<="); advance(2); continue; }
        if (two == ">=") { push(Tok::Ge, ">="); advance(2); continue; }

        switch (c) {
            case '[': ++depth; push(Tok::LBracket, "["); break;
            case ']': if (depth > 0) --depth; push(Tok::RBracket, "]"); break;
            case '{': push(Tok::LBrace, "{"); break;
            case '}': push(Tok::RBrace, "}"); break;
            case '(': ++depth; push(Tok::LParen, "("); break;
            case ')': if (depth > 0) --depth; push(Tok::RParen, ")"); break;
            case ':': push(Tok::Colon, ":"); break;
            case ',': push(Tok::Comma, ","); break;
            case '=': push(Tok::Eq, "="); break;
            case '<': push(Tok::Lt, "<"); break;
            case '>': push(Tok::Gt, ">"); break;
            case '+': push(Tok::Plus, "+"); break;
            case '-': push(Tok::Minus, "-"); break;
            case '*': push(Tok::Star, "*"); break;
            case '/': push(Tok::Slash, "/"); break;
            case '@': push(Tok::At, "@"); break;
            default:
                throw Error(ErrorCode::IllegalCharacter,
                            "byte 0x" + [](unsigned char b) {
                                const char* hex = "0123456789abcdef";
                                return std::string{hex[b >> 4], hex[b & 0xf]};
                            }(static_cast<unsigned char>(c)),
                            start);
        }
        advance();
    }

    if (!out.empty() && out.back().kind != Tok::Newline)
        out.push_back(Token{Tok::Newline, "", 0, SourcePos{line, column}});
    out.push_back(Token{Tok::Eof, "", 0, SourcePos{line, column}});
    return out;
}

}  // namespace rdsl
