#ifndef BINOMID_AST_HPP
#define BINOMID_AST_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "binomid/rational.hpp"

namespace binomid {

enum class NodeKind {
    IntLit,    // integer literal                          (value)
    RatLit,    // rational literal                         (value)
    ParamRef,  // declared parameter                       (name)
    Var,       // free sample variable (x, y)              (name)
    Neg,       // -e                                       (kids[0])
    Add,       // e0 + e1 + ...                            (kids)
    Mul,       // e0 * e1 * ...                            (kids)
    Pow,       // base ^ exp, exp integer-valued           (kids[0], kids[1])
    AltSign,   // (-1)^e, e integer-valued                 (kids[0])
    BinomI,    // binom(top, bottom), integer arguments    (kids[0], kids[1])
    BinomG,    // generalized binomial                     (kids[0], kids[1])
    BinomInv,  // binom(top, bottom)^(-1)                  (kids[0], kids[1])
    Catalan,   // Catalan number C_e                       (kids[0])
    Floor,     // floor(e/2)                               (kids[0])
    Ceil,      // ceil(e/2)                                (kids[0])
    Sum,       // sum over name = lo..hi of body           (name, kids[0..2])
};

struct SumExpr;
using ExprPtr = std::shared_ptr<const SumExpr>;

struct SumExpr {
    NodeKind kind;
    Rational value;             // IntLit / RatLit
    std::string name;           // ParamRef / Var / Sum index
    std::vector<ExprPtr> kids;  // Sum: {lo, hi, body}
};

// ---------------------------------------------------------------- builders

namespace ast {

inline ExprPtr node(NodeKind k, Rational v, std::string n,
                    std::vector<ExprPtr> kids) {
    return std::make_shared<SumExpr>(
        SumExpr{k, std::move(v), std::move(n), std::move(kids)});
}

inline ExprPtr lit(long v) { return node(NodeKind::IntLit, Rational(v), "", {}); }
inline ExprPtr lit(const Rational& v) {
    return node(is_integer(v) ? NodeKind::IntLit : NodeKind::RatLit, v, "", {});
}
inline ExprPtr param(std::string name) {
    return node(NodeKind::ParamRef, Rational(0), std::move(name), {});
}
inline ExprPtr var(std::string name) {
    return node(NodeKind::Var, Rational(0), std::move(name), {});
}
inline ExprPtr neg(ExprPtr e) {
    return node(NodeKind::Neg, Rational(0), "", {std::move(e)});
}
inline ExprPtr add(std::vector<ExprPtr> es) {
    return node(NodeKind::Add, Rational(0), "", std::move(es));
}
inline ExprPtr mul(std::vector<ExprPtr> es) {
    return node(NodeKind::Mul, Rational(0), "", std::move(es));
}
inline ExprPtr sub(ExprPtr a, ExprPtr b) {
    return add({std::move(a), neg(std::move(b))});
}
inline ExprPtr pow(ExprPtr base, ExprPtr exp) {
    return node(NodeKind::Pow, Rational(0), "", {std::move(base), std::move(exp)});
}
inline ExprPtr pow(ExprPtr base, long exp) {
    return pow(std::move(base), lit(exp));
}
inline ExprPtr altsign(ExprPtr e) {
    return node(NodeKind::AltSign, Rational(0), "", {std::move(e)});
}
inline ExprPtr binom(ExprPtr top, ExprPtr bottom) {
    return node(NodeKind::BinomI, Rational(0), "", {std::move(top), std::move(bottom)});
}
inline ExprPtr binomg(ExprPtr top, ExprPtr bottom) {
    return node(NodeKind::BinomG, Rational(0), "", {std::move(top), std::move(bottom)});
}
inline ExprPtr binominv(ExprPtr top, ExprPtr bottom) {
    return node(NodeKind::BinomInv, Rational(0), "", {std::move(top), std::move(bottom)});
}
inline ExprPtr cat(ExprPtr e) {
    return node(NodeKind::Catalan, Rational(0), "", {std::move(e)});
}
inline ExprPtr floor2(ExprPtr e) {
    return node(NodeKind::Floor, Rational(0), "", {std::move(e)});
}
inline ExprPtr ceil2(ExprPtr e) {
    return node(NodeKind::Ceil, Rational(0), "", {std::move(e)});
}
inline ExprPtr sum(std::string index, ExprPtr lo, ExprPtr hi, ExprPtr body) {
    return node(NodeKind::Sum, Rational(0), std::move(index),
                {std::move(lo), std::move(hi), std::move(body)});
}

}  // namespace ast

// Structural equality (used by round-trip checks).
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// ---------------------------------------------------------- identity object

enum class ParamKind { Natural, GridReal, FreeRational };

const char* param_kind_name(ParamKind k);

struct ParamDecl {
    std::string name;
    ParamKind kind = ParamKind::Natural;
};

enum class GuardKind { Always, EvenParam, OddParam, NonZeroParam };

struct Guard {
    GuardKind kind = GuardKind::Always;
    std::string param;  // for the parameterized guards
};

struct CasedRhs {
    Guard guard;
    ExprPtr expr;
};

enum class CmpOp { Lt, Le, Gt, Ge, Eq, Ne };

struct Comparison {
    ExprPtr lhs;
    CmpOp op = CmpOp::Ge;
    ExprPtr rhs;
};

// Conjunction of comparisons; an empty clause list is vacuously true.
struct Predicate {
    std::vector<Comparison> clauses;
    bool trivial() const { return clauses.empty(); }
};

struct Identity {
    std::string id;
    std::vector<ParamDecl> params;
    ExprPtr lhs;
    std::vector<CasedRhs> rhs;  // guards exhaustive over the validity domain
    Predicate validity;
    std::string source;  // human-readable provenance note

    const ParamDecl* find_param(const std::string& name) const {
        for (const auto& p : params)
            if (p.name == name) return &p;
        return nullptr;
    }
};

bool identity_equal(const Identity& a, const Identity& b);

// Parameter values; numeric samples are given as exact rationals
// (e.g. 0.3 enters as 3/10) so pole detection stays exact in every mode.
using ParamBinding = std::map<std::string, Rational>;

std::string binding_str(const ParamBinding& b);

}  // namespace binomid

#endif
