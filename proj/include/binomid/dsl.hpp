#ifndef BINOMID_DSL_HPP
#define BINOMID_DSL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "binomid/ast.hpp"
#include "binomid/errors.hpp"

namespace binomid {

struct SourceSpan {
    std::size_t start = 0;  // byte offsets, start <= end
    std::size_t end = 0;
    int line = 1;
    int column = 1;  // 1-based, of start
};

struct ParseError : Error {
    SourceSpan span;
    std::string expected;  // token set description
    std::string found;     // offending lexeme

    ParseError(SourceSpan sp, std::string exp, std::string fnd)
        : Error("parse error at line " + std::to_string(sp.line) + ", column " +
                std::to_string(sp.column) + ": expected " + exp + ", found '" +
                fnd + "'"),
          span(sp),
          expected(std::move(exp)),
          found(std::move(fnd)) {}
};

struct BindError : Error {
    SourceSpan span;
    std::string name;

    BindError(SourceSpan sp, const std::string& n, const std::string& what)
        : Error("bind error at line " + std::to_string(sp.line) + ", column " +
                std::to_string(sp.column) + ": " + what + " '" + n + "'"),
          span(sp),
          name(n) {}
};

// Parses a single identity declaration:
//
//   identity NAME(p: nat, ...) [requires cmp and ...] : expr == rhs
//
// where rhs is an expression or "cases { even(n) => e; odd(n) => e }".
// "#" starts a line comment. Throws ParseError / BindError.
Identity parse_identity(const std::string& text);

// All identity declarations in a file, in order.
std::vector<Identity> parse_program(const std::string& text);

// Canonical text rendering; parse_identity(format_identity(id)) is
// structurally identical to id.
std::string format_identity(const Identity& ident);

// Canonical rendering of a bare expression (as used inside identities).
std::string format_expr(const ExprPtr& e);

}  // namespace binomid

#endif
