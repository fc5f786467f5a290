#pragma once

#include <stdexcept>
#include <string>

namespace wildrep {

/// Which stage rejected the input; drives CLI exit codes.
enum class ErrorStage { Parse, Semantic, Pipeline };

class Error : public std::runtime_error {
public:
    Error(ErrorStage stage, std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), stage_(stage), kind_(std::move(kind)) {}
    ErrorStage stage() const { return stage_; }
    const std::string& kind() const { return kind_; }

private:
    ErrorStage stage_;
    std::string kind_;
};

#define WILDREP_ERROR(Name, Stage)                                                   \
    class Name : public Error {                                                      \
    public:                                                                          \
        explicit Name(const std::string& what) : Error(ErrorStage::Stage, #Name, what) {} \
    };

WILDREP_ERROR(NotRepresentable, Pipeline)
WILDREP_ERROR(DifferentPoints, Semantic)
WILDREP_ERROR(TargetTooSmall, Semantic)
WILDREP_ERROR(Incompatible, Pipeline)
WILDREP_ERROR(SymbolicScale, Pipeline)
WILDREP_ERROR(Unrealizable, Pipeline)
WILDREP_ERROR(ExcludedRankOne, Pipeline)
WILDREP_ERROR(SemanticError, Semantic)

#undef WILDREP_ERROR

/// Syntax error with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error(ErrorStage::Parse, "ParseError",
                std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace wildrep
