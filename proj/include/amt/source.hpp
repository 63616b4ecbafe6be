#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace amt {

// 1-based source range. start <= end for every span produced by the lexer.
struct SourceSpan {
    std::string file;
    int start_line = 0;
    int start_col = 0;
    int end_line = 0;
    int end_col = 0;

    bool valid() const { return start_line > 0; }

    std::string str() const {
        std::ostringstream os;
        os << file << ':' << start_line << ':' << start_col;
        return os.str();
    }
};

// Spans never participate in structural equality of AST nodes.
inline SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
    if (!a.valid()) return b;
    if (!b.valid()) return a;
    SourceSpan s = a;
    s.end_line = b.end_line;
    s.end_col = b.end_col;
    return s;
}

enum class Severity { Error, Warning };

struct Diagnostic {
    std::string code;  // stable machine code, e.g. "E_INHERIT_CYCLE"
    Severity severity = Severity::Error;
    SourceSpan span;
    std::string message;

    std::string str() const {
        std::ostringstream os;
        os << span.str() << ": " << (severity == Severity::Error ? "error" : "warning") << " ["
           << code << "] " << message;
        return os.str();
    }
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Severity::Error) return true;
    return false;
}

// Thrown for contract violations of point operations (unknown class, unknown
// fixture, ...). Batch checkers report Diagnostics instead of throwing.
class AmtError : public std::runtime_error {
public:
    AmtError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace amt
