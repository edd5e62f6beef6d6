#ifndef HEXEVAL_PARSER_HPP
#define HEXEVAL_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hexeval/ast.hpp"

namespace hexeval {

struct ParseDiagnostic {
    enum class Severity { Error, Warning };
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    std::string message;
    Severity severity = Severity::Error;
};

struct ParseResult {
    Program program;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const {
        for (const auto& d : diagnostics)
            if (d.severity == ParseDiagnostic::Severity::Error) return false;
        return true;
    }
};

/// Parses .hex surface syntax. Total: every input yields a program or at
/// least one error diagnostic.
ParseResult parse_program(std::string_view text);

}  // namespace hexeval

#endif
