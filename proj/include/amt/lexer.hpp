#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "amt/source.hpp"

namespace amt {

enum class Tok {
    End,
    Ident,
    Int,
    Real,
    String,
    // keywords
    KwModel,
    KwClass,
    KwExtends,
    KwAttr,
    KwOp,
    KwInv,
    KwStatechart,
    KwInitial,
    KwState,
    KwTransition,
    KwOn,
    KwSend,
    KwObjects,
    KwLink,
    KwTest,
    KwFixture,
    KwSd,
    KwTrigger,
    KwObserve,
    KwAssert,
    KwOracle,
    KwAssoc,
    KwAs,
    KwEnv,
    KwSelf,
    KwAnd,
    KwOr,
    KwNot,
    KwImplies,
    KwTrue,
    KwFalse,
    KwMod,
    // punctuation
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Semi,
    Colon,
    Comma,
    Dot,
    DotDot,
    Arrow,       // ->
    Assign,      // :=
    Eq,          // =
    Neq,         // <>
    Lt,
    Le,
    Gt,
    Ge,
    Plus,
    Minus,
    Star,
    Slash,
    StereoOpen,  // <<
    StereoClose, // >>
    Pipe,
    Error,
};

struct Token {
    Tok type = Tok::End;
    std::string text;
    std::int64_t int_val = 0;
    double real_val = 0.0;
    SourceSpan span;
};

inline const std::unordered_map<std::string_view, Tok>& keyword_table() {
    static const std::unordered_map<std::string_view, Tok> table = {
        {"model", Tok::KwModel},         {"class", Tok::KwClass},
        {"extends", Tok::KwExtends},     {"attr", Tok::KwAttr},
        {"op", Tok::KwOp},               {"inv", Tok::KwInv},
        {"statechart", Tok::KwStatechart}, {"initial", Tok::KwInitial},
        {"state", Tok::KwState},         {"transition", Tok::KwTransition},
        {"on", Tok::KwOn},               {"send", Tok::KwSend},
        {"objects", Tok::KwObjects},     {"link", Tok::KwLink},
        {"test", Tok::KwTest},           {"fixture", Tok::KwFixture},
        {"sd", Tok::KwSd},               {"trigger", Tok::KwTrigger},
        {"observe", Tok::KwObserve},     {"assert", Tok::KwAssert},
        {"oracle", Tok::KwOracle},       {"assoc", Tok::KwAssoc},
        {"as", Tok::KwAs},               {"env", Tok::KwEnv},
        {"self", Tok::KwSelf},           {"and", Tok::KwAnd},
        {"or", Tok::KwOr},               {"not", Tok::KwNot},
        {"implies", Tok::KwImplies},     {"true", Tok::KwTrue},
        {"false", Tok::KwFalse},         {"mod", Tok::KwMod},
    };
    return table;
}

// Hand-rolled scanner for the .amt surface syntax. '//' comments run to end
// of line; CRLF input is accepted. String literals know \" \\ \n \t \r.
class Lexer {
public:
    Lexer(std::string_view text, std::string filename)
        : text_(text), file_(std::move(filename)) {}

    std::vector<Token> tokenize() {
        std::vector<Token> out;
        for (;;) {
            Token t = next();
            bool end = t.type == Tok::End;
            out.push_back(std::move(t));
            if (end) break;
        }
        return out;
    }

private:
    std::string_view text_;
    std::string file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_trivia() {
        for (;;) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (peek() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    Token make(Tok type, int sl, int sc, std::string text = {}) {
        Token t;
        t.type = type;
        t.text = std::move(text);
        t.span = SourceSpan{file_, sl, sc, line_, col_ > 1 ? col_ - 1 : col_};
        return t;
    }

    Token next() {
        skip_trivia();
        int sl = line_, sc = col_;
        if (pos_ >= text_.size()) return make(Tok::End, sl, sc);
        char c = advance();

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word(1, c);
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                word += advance();
            auto it = keyword_table().find(word);
            if (it != keyword_table().end()) return make(it->second, sl, sc, word);
            return make(Tok::Ident, sl, sc, word);
        }

        if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(c, sl, sc);

        switch (c) {
            case '{': return make(Tok::LBrace, sl, sc, "{");
            case '}': return make(Tok::RBrace, sl, sc, "}");
            case '(': return make(Tok::LParen, sl, sc, "(");
            case ')': return make(Tok::RParen, sl, sc, ")");
            case '[': return make(Tok::LBracket, sl, sc, "[");
            case ']': return make(Tok::RBracket, sl, sc, "]");
            case ';': return make(Tok::Semi, sl, sc, ";");
            case ',': return make(Tok::Comma, sl, sc, ",");
            case '|': return make(Tok::Pipe, sl, sc, "|");
            case '+': return make(Tok::Plus, sl, sc, "+");
            case '*': return make(Tok::Star, sl, sc, "*");
            case '/': return make(Tok::Slash, sl, sc, "/");
            case ':':
                if (peek() == '=') {
                    advance();
                    return make(Tok::Assign, sl, sc, ":=");
                }
                return make(Tok::Colon, sl, sc, ":");
            case '.':
                if (peek() == '.') {
                    advance();
                    return make(Tok::DotDot, sl, sc, "..");
                }
                return make(Tok::Dot, sl, sc, ".");
            case '-':
                if (peek() == '>') {
                    advance();
                    return make(Tok::Arrow, sl, sc, "->");
                }
                return make(Tok::Minus, sl, sc, "-");
            case '=': return make(Tok::Eq, sl, sc, "=");
            case '<':
                if (peek() == '>') {
                    advance();
                    return make(Tok::Neq, sl, sc, "<>");
                }
                if (peek() == '=') {
                    advance();
                    return make(Tok::Le, sl, sc, "<=");
                }
                if (peek() == '<') {
                    advance();
                    return make(Tok::StereoOpen, sl, sc, "<<");
                }
                return make(Tok::Lt, sl, sc, "<");
            case '>':
                if (peek() == '=') {
                    advance();
                    return make(Tok::Ge, sl, sc, ">=");
                }
                if (peek() == '>') {
                    advance();
                    return make(Tok::StereoClose, sl, sc, ">>");
                }
                return make(Tok::Gt, sl, sc, ">");
            case '"': return lex_string(sl, sc);
            default: break;
        }
        return make(Tok::Error, sl, sc, std::string("unexpected character '") + c + "'");
    }

    Token lex_number(char first, int sl, int sc) {
        std::string digits(1, first);
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();

        bool real = false;
        // '.' begins a fraction only when followed by a digit; "0..1" stays
        // Int DotDot Int
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            real = true;
            digits += advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
        }
        if (peek() == 'e' || peek() == 'E') {
            char sign = peek(1);
            std::size_t digit_at = (sign == '+' || sign == '-') ? 2 : 1;
            if (std::isdigit(static_cast<unsigned char>(peek(digit_at)))) {
                real = true;
                digits += advance();  // e
                if (sign == '+' || sign == '-') digits += advance();
                while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
            }
        }

        if (real) {
            Token t = make(Tok::Real, sl, sc, digits);
            auto res = std::from_chars(digits.data(), digits.data() + digits.size(), t.real_val);
            if (res.ec != std::errc{}) {
                t.type = Tok::Error;
                t.text = "real literal out of range: " + digits;
            }
            return t;
        }
        Token t = make(Tok::Int, sl, sc, digits);
        auto res = std::from_chars(digits.data(), digits.data() + digits.size(), t.int_val);
        if (res.ec != std::errc{}) {
            t.type = Tok::Error;
            t.text = "integer literal out of range: " + digits;
        }
        return t;
    }

    Token lex_string(int sl, int sc) {
        std::string out;
        for (;;) {
            if (pos_ >= text_.size() || peek() == '\n') {
                Token t = make(Tok::Error, sl, sc, "unterminated string literal");
                return t;
            }
            char c = advance();
            if (c == '"') break;
            if (c == '\\') {
                char esc = pos_ < text_.size() ? advance() : '\0';
                switch (esc) {
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case 'r': out += '\r'; break;
                    default:
                        return make(Tok::Error, sl, sc,
                                    std::string("unknown escape '\\") + esc + "'");
                }
            } else {
                out += c;
            }
        }
        return make(Tok::String, sl, sc, out);
    }
};

}  // namespace amt
