#include "binomid/ast.hpp"

#include <sstream>

namespace binomid {

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->name != b->name ||
        a->kids.size() != b->kids.size())
        return false;
    if ((a->kind == NodeKind::IntLit || a->kind == NodeKind::RatLit) &&
        a->value != b->value)
        return false;
    for (size_t i = 0; i < a->kids.size(); ++i)
        if (!expr_equal(a->kids[i], b->kids[i])) return false;
    return true;
}

const char* param_kind_name(ParamKind k) {
    switch (k) {
        case ParamKind::Natural: return "nat";
        case ParamKind::GridReal: return "grid";
        case ParamKind::FreeRational: return "rat";
    }
    return "?";
}

bool identity_equal(const Identity& a, const Identity& b) {
    if (a.id != b.id || a.params.size() != b.params.size() ||
        a.rhs.size() != b.rhs.size() ||
        a.validity.clauses.size() != b.validity.clauses.size())
        return false;
    for (size_t i = 0; i < a.params.size(); ++i)
        if (a.params[i].name != b.params[i].name ||
            a.params[i].kind != b.params[i].kind)
            return false;
    if (!expr_equal(a.lhs, b.lhs)) return false;
    for (size_t i = 0; i < a.rhs.size(); ++i) {
        if (a.rhs[i].guard.kind != b.rhs[i].guard.kind ||
            a.rhs[i].guard.param != b.rhs[i].guard.param)
            return false;
        if (!expr_equal(a.rhs[i].expr, b.rhs[i].expr)) return false;
    }
    for (size_t i = 0; i < a.validity.clauses.size(); ++i) {
        const auto& ca = a.validity.clauses[i];
        const auto& cb = b.validity.clauses[i];
        if (ca.op != cb.op || !expr_equal(ca.lhs, cb.lhs) ||
            !expr_equal(ca.rhs, cb.rhs))
            return false;
    }
    return true;
}

std::string binding_str(const ParamBinding& b) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : b) {
        if (!first) os << ",";
        first = false;
        os << k << "=" << rational_str(v);
    }
    return os.str();
}

}  // namespace binomid
