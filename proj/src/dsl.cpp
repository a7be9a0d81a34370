#include "binomid/dsl.hpp"

#include <cctype>
#include <optional>

namespace binomid {

namespace {

// ----------------------------------------------------------------- lexer

enum class Tok { Name, Int, Rat, Str, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    Rational value;
    SourceSpan span;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { scan_all(); }

    const std::vector<Token>& tokens() const { return toks_; }

  private:
    void scan_all() {
        while (true) {
            skip_ws();
            if (i_ >= src_.size()) break;
            toks_.push_back(scan_one());
        }
        Token end;
        end.kind = Tok::End;
        end.text = "<end of input>";
        end.span = here(i_, i_);
        toks_.push_back(end);
    }

    void skip_ws() {
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == '#') {
                while (i_ < src_.size() && src_[i_] != '\n') ++i_;
            } else if (c == '\n') {
                ++i_;
                ++line_;
                line_start_ = i_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++i_;
            } else {
                break;
            }
        }
    }

    SourceSpan here(std::size_t s, std::size_t e) const {
        SourceSpan sp;
        sp.start = s;
        sp.end = e;
        sp.line = line_;
        sp.column = static_cast<int>(s - line_start_) + 1;
        return sp;
    }

    Token scan_one() {
        std::size_t s = i_;
        char c = src_[i_];
        Token t;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
                    src_[i_] == '_'))
                ++i_;
            t.kind = Tok::Name;
            t.text = src_.substr(s, i_ - s);
            t.span = here(s, i_);
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[i_])))
                ++i_;
            // "3/4" with no spaces is a rational literal
            if (i_ + 1 < src_.size() && src_[i_] == '/' &&
                std::isdigit(static_cast<unsigned char>(src_[i_ + 1]))) {
                std::size_t slash = i_;
                ++i_;
                while (i_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[i_])))
                    ++i_;
                t.kind = Tok::Rat;
                t.text = src_.substr(s, i_ - s);
                Rational num(src_.substr(s, slash - s));
                Rational den(src_.substr(slash + 1, i_ - slash - 1));
                t.value = num / den;
                t.value.canonicalize();
            } else {
                t.kind = Tok::Int;
                t.text = src_.substr(s, i_ - s);
                t.value = Rational(t.text);
            }
            t.span = here(s, i_);
            return t;
        }
        if (c == '"') {
            ++i_;
            std::size_t body = i_;
            while (i_ < src_.size() && src_[i_] != '"' && src_[i_] != '\n')
                ++i_;
            if (i_ >= src_.size() || src_[i_] != '"')
                throw ParseError(here(s, i_), "closing '\"'",
                                 src_.substr(s, i_ - s));
            t.kind = Tok::Str;
            t.text = src_.substr(body, i_ - body);
            ++i_;
            t.span = here(s, i_);
            return t;
        }
        static const char* two[] = {"==", "=>", "..", ">=", "<=", "!="};
        for (const char* op : two) {
            if (src_.compare(i_, 2, op) == 0) {
                i_ += 2;
                t.kind = Tok::Punct;
                t.text = op;
                t.span = here(s, i_);
                return t;
            }
        }
        static const std::string singles = "(){},:;=+-*/^<>";
        if (singles.find(c) != std::string::npos) {
            ++i_;
            t.kind = Tok::Punct;
            t.text = std::string(1, c);
            t.span = here(s, i_);
            return t;
        }
        throw ParseError(here(s, i_ + 1), "a token", std::string(1, c));
    }

    const std::string& src_;
    std::size_t i_ = 0;
    int line_ = 1;
    std::size_t line_start_ = 0;
    std::vector<Token> toks_;
};

// ---------------------------------------------------------------- parser

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Identity parse_one() {
        Identity ident = parse_decl();
        expect_end();
        return ident;
    }

    std::vector<Identity> parse_all() {
        std::vector<Identity> out;
        while (peek().kind != Tok::End) out.push_back(parse_decl());
        return out;
    }

  private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        const auto& ts = lex_.tokens();
        return i < ts.size() ? ts[i] : ts.back();
    }
    const Token& get() { return lex_.tokens()[pos_ < lex_.tokens().size() - 1
                                                   ? pos_++
                                                   : pos_]; }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(peek().span, expected, peek().text);
    }

    bool at_punct(const char* p) const {
        return peek().kind == Tok::Punct && peek().text == p;
    }
    bool at_name(const char* n) const {
        return peek().kind == Tok::Name && peek().text == n;
    }
    void expect_punct(const char* p) {
        if (!at_punct(p)) fail(std::string("'") + p + "'");
        get();
    }
    std::string expect_name(const char* what) {
        if (peek().kind != Tok::Name) fail(what);
        return get().text;
    }
    void expect_end() {
        if (peek().kind != Tok::End) fail("end of input");
    }

    // identity NAME(params) [requires ...] : expr == rhs
    Identity parse_decl() {
        if (!at_name("identity")) fail("'identity'");
        get();
        Identity ident;
        ident.id = parse_identity_name();
        expect_punct("(");
        if (!at_punct(")")) {
            while (true) {
                ParamDecl p;
                SourceSpan sp = peek().span;
                p.name = expect_name("parameter name");
                if (find(p.name))
                    throw BindError(sp, p.name, "duplicate parameter");
                expect_punct(":");
                std::string kind = expect_name("'nat', 'grid' or 'rat'");
                if (kind == "nat")
                    p.kind = ParamKind::Natural;
                else if (kind == "grid")
                    p.kind = ParamKind::GridReal;
                else if (kind == "rat")
                    p.kind = ParamKind::FreeRational;
                else
                    fail("'nat', 'grid' or 'rat'");
                params_.push_back(p);
                if (at_punct(",")) {
                    get();
                    continue;
                }
                break;
            }
        }
        expect_punct(")");
        ident.params = params_;
        if (at_name("requires")) {
            get();
            while (true) {
                ident.validity.clauses.push_back(parse_comparison());
                if (at_name("and")) {
                    get();
                    continue;
                }
                break;
            }
        }
        expect_punct(":");
        ident.lhs = parse_expr();
        expect_punct("==");
        ident.rhs = parse_rhs();
        params_.clear();
        return ident;
    }

    // Bare names may include '-' joints (e.g. knuth-gen) when the pieces
    // are contiguous in the source; anything else is written quoted.
    std::string parse_identity_name() {
        if (peek().kind == Tok::Str) return get().text;
        if (peek().kind != Tok::Name) fail("identity name");
        Token first = get();
        std::string id = first.text;
        std::size_t end = first.span.end;
        while (at_punct("-") && peek().span.start == end &&
               (peek(1).kind == Tok::Name || peek(1).kind == Tok::Int) &&
               peek(1).span.start == end + 1) {
            get();
            Token part = get();
            id += "-" + part.text;
            end = part.span.end;
        }
        return id;
    }

    Comparison parse_comparison() {
        Comparison c;
        c.lhs = parse_expr();
        if (peek().kind != Tok::Punct) fail("a comparison operator");
        std::string op = peek().text;
        if (op == ">=")
            c.op = CmpOp::Ge;
        else if (op == "<=")
            c.op = CmpOp::Le;
        else if (op == ">")
            c.op = CmpOp::Gt;
        else if (op == "<")
            c.op = CmpOp::Lt;
        else if (op == "=")
            c.op = CmpOp::Eq;
        else if (op == "!=")
            c.op = CmpOp::Ne;
        else
            fail("a comparison operator");
        get();
        c.rhs = parse_expr();
        return c;
    }

    std::vector<CasedRhs> parse_rhs() {
        if (!at_name("cases"))
            return {{Guard{GuardKind::Always, ""}, parse_expr()}};
        get();
        expect_punct("{");
        std::vector<CasedRhs> out;
        while (true) {
            CasedRhs c;
            c.guard = parse_guard();
            expect_punct("=>");
            c.expr = parse_expr();
            out.push_back(std::move(c));
            if (at_punct(";")) {
                get();
                if (at_punct("}")) break;  // trailing separator
                continue;
            }
            break;
        }
        expect_punct("}");
        return out;
    }

    Guard parse_guard() {
        if (at_name("always")) {
            get();
            return {GuardKind::Always, ""};
        }
        GuardKind kind;
        if (at_name("even"))
            kind = GuardKind::EvenParam;
        else if (at_name("odd"))
            kind = GuardKind::OddParam;
        else if (at_name("nonzero"))
            kind = GuardKind::NonZeroParam;
        else {
            fail("'even', 'odd', 'always' or 'nonzero'");
        }
        get();
        expect_punct("(");
        SourceSpan sp = peek().span;
        std::string name = expect_name("parameter name");
        if (!find(name)) throw BindError(sp, name, "unbound parameter");
        expect_punct(")");
        return {kind, name};
    }

    // ---------------------------------------------------------- exprs

    ExprPtr parse_expr() {  // additive level, n-ary
        std::vector<ExprPtr> kids;
        kids.push_back(parse_term());
        while (at_punct("+") || at_punct("-")) {
            bool minus = peek().text == "-";
            get();
            ExprPtr t = parse_term();
            kids.push_back(minus ? ast::neg(std::move(t)) : std::move(t));
        }
        return kids.size() == 1 ? kids[0] : ast::add(std::move(kids));
    }

    ExprPtr parse_term() {  // multiplicative level, n-ary
        std::vector<ExprPtr> kids;
        kids.push_back(parse_factor());
        while (at_punct("*") || at_punct("/")) {
            bool div = peek().text == "/";
            get();
            ExprPtr f = parse_factor();
            kids.push_back(div ? ast::pow(std::move(f), -1) : std::move(f));
        }
        return kids.size() == 1 ? kids[0] : ast::mul(std::move(kids));
    }

    ExprPtr parse_factor() {
        if (at_punct("-")) {
            get();
            ExprPtr e = parse_factor();
            if (e->kind == NodeKind::IntLit || e->kind == NodeKind::RatLit)
                return ast::lit(Rational(-e->value));
            return ast::neg(std::move(e));
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (at_punct("^")) {
            get();
            ExprPtr exp = parse_exponent();
            if (base->kind == NodeKind::IntLit && base->value == -1)
                return ast::altsign(std::move(exp));
            return ast::pow(std::move(base), std::move(exp));
        }
        return base;
    }

    ExprPtr parse_exponent() {
        if (at_punct("-")) {
            get();
            ExprPtr e = parse_exponent();
            if (e->kind == NodeKind::IntLit || e->kind == NodeKind::RatLit)
                return ast::lit(Rational(-e->value));
            return ast::neg(std::move(e));
        }
        return parse_atom();
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        if (t.kind == Tok::Int || t.kind == Tok::Rat)
            return ast::lit(get().value);
        if (t.kind == Tok::Punct && t.text == "(") {
            get();
            ExprPtr e = parse_expr();
            expect_punct(")");
            return e;
        }
        if (t.kind == Tok::Name) {
            const std::string& n = t.text;
            if (n == "C" || n == "Cg" || n == "Cinv") return parse_binom(n);
            if (n == "Cat") {
                get();
                expect_punct("(");
                ExprPtr e = parse_expr();
                expect_punct(")");
                return ast::cat(std::move(e));
            }
            if (n == "floor" || n == "ceil") return parse_half(n == "floor");
            if (n == "sum") return parse_sum();
            SourceSpan sp = t.span;
            std::string name = get().text;
            if (at_punct("("))
                throw ParseError(sp, "a known function", name);
            if (!find(name) && !index_active(name))
                throw BindError(sp, name, "unbound name");
            return ast::param(name);
        }
        fail("an expression");
    }

    ExprPtr parse_binom(const std::string& which) {
        get();
        expect_punct("(");
        ExprPtr a = parse_expr();
        expect_punct(",");
        ExprPtr b = parse_expr();
        expect_punct(")");
        if (which == "C") return ast::binom(std::move(a), std::move(b));
        if (which == "Cg") return ast::binomg(std::move(a), std::move(b));
        return ast::binominv(std::move(a), std::move(b));
    }

    // floor(e/2) / ceil(e/2): the inner expression must end in "/2"
    ExprPtr parse_half(bool is_floor) {
        get();
        expect_punct("(");
        SourceSpan sp = peek().span;
        ExprPtr inner = parse_expr();
        expect_punct(")");
        ExprPtr arg = strip_half(inner, sp);
        return is_floor ? ast::floor2(std::move(arg))
                        : ast::ceil2(std::move(arg));
    }

    ExprPtr strip_half(const ExprPtr& e, const SourceSpan& sp) {
        if (e->kind == NodeKind::RatLit && e->value.get_den() == 2)
            return ast::lit(Rational(e->value.get_num()));
        if (e->kind == NodeKind::Mul && !e->kids.empty()) {
            const ExprPtr& last = e->kids.back();
            if (last->kind == NodeKind::Pow &&
                last->kids[0]->kind == NodeKind::IntLit &&
                last->kids[0]->value == 2 &&
                last->kids[1]->kind == NodeKind::IntLit &&
                last->kids[1]->value == -1) {
                if (e->kids.size() == 2) return e->kids[0];
                std::vector<ExprPtr> rest(e->kids.begin(), e->kids.end() - 1);
                return ast::mul(std::move(rest));
            }
        }
        throw ParseError(sp, "an expression of the form e/2", "expression");
    }

    ExprPtr parse_sum() {
        get();
        expect_punct("(");
        SourceSpan sp = peek().span;
        std::string index = expect_name("summation index");
        if (find(index) || index_active(index))
            throw BindError(sp, index, "duplicate index");
        expect_punct("=");
        ExprPtr lo = parse_expr();
        expect_punct("..");
        ExprPtr hi = parse_expr();
        expect_punct(")");
        indices_.push_back(index);
        ExprPtr body = parse_expr();
        indices_.pop_back();
        return ast::sum(index, std::move(lo), std::move(hi), std::move(body));
    }

    const ParamDecl* find(const std::string& name) const {
        for (const auto& p : params_)
            if (p.name == name) return &p;
        return nullptr;
    }
    bool index_active(const std::string& name) const {
        for (const auto& n : indices_)
            if (n == name) return true;
        return false;
    }

    Lexer lex_;
    std::size_t pos_ = 0;
    std::vector<ParamDecl> params_;
    std::vector<std::string> indices_;
};

// ------------------------------------------------------------- formatter

// Precedence levels: Sum 0, Add 1, Neg 2, Mul 3, Pow/AltSign 4, atoms 5.
int prec(const SumExpr& e) {
    switch (e.kind) {
        case NodeKind::Sum:
            return 0;
        case NodeKind::Add:
            return 1;
        case NodeKind::Neg:
            return 2;
        case NodeKind::Mul:
            return 3;
        case NodeKind::Pow:
        case NodeKind::AltSign:
            return 4;
        default:
            return 5;
    }
}

std::string fmt(const ExprPtr& e, int min_prec);

std::string lit_str(const Rational& v) {
    std::string s = rational_str(v);
    return v < 0 ? "(" + s + ")" : s;
}

bool is_inverse(const ExprPtr& e) {
    return e->kind == NodeKind::Pow && e->kids[1]->kind == NodeKind::IntLit &&
           e->kids[1]->value == -1;
}

std::string exp_str(const ExprPtr& e) {
    if ((e->kind == NodeKind::IntLit && e->value >= 0) ||
        e->kind == NodeKind::ParamRef || e->kind == NodeKind::Var)
        return fmt(e, 0);
    return "(" + fmt(e, 0) + ")";
}

std::string fmt_bare(const ExprPtr& e) {
    switch (e->kind) {
        case NodeKind::IntLit:
        case NodeKind::RatLit:
            return lit_str(e->value);
        case NodeKind::ParamRef:
        case NodeKind::Var:
            return e->name;
        case NodeKind::Neg:
            return "-" + fmt(e->kids[0], 4);
        case NodeKind::Add: {
            std::string out = fmt(e->kids[0], 2);
            for (std::size_t i = 1; i < e->kids.size(); ++i) {
                const ExprPtr& k = e->kids[i];
                if (k->kind == NodeKind::Neg)
                    out += " - " + fmt(k->kids[0], 2);
                else
                    out += " + " + fmt(k, 2);
            }
            return out;
        }
        case NodeKind::Mul: {
            std::string out = fmt(e->kids[0], 4);
            for (std::size_t i = 1; i < e->kids.size(); ++i) {
                const ExprPtr& k = e->kids[i];
                if (is_inverse(k))
                    out += " / " + fmt(k->kids[0], 5);
                else
                    out += " * " + fmt(k, 4);
            }
            return out;
        }
        case NodeKind::Pow: {
            // A bare rational base would reparse as a division.
            const ExprPtr& b = e->kids[0];
            std::string base = b->kind == NodeKind::RatLit
                                   ? "(" + fmt(b, 0) + ")"
                                   : fmt(b, 5);
            return base + "^" + exp_str(e->kids[1]);
        }
        case NodeKind::AltSign:
            return "(-1)^" + exp_str(e->kids[0]);
        case NodeKind::BinomI:
            return "C(" + fmt(e->kids[0], 0) + "," + fmt(e->kids[1], 0) + ")";
        case NodeKind::BinomG:
            return "Cg(" + fmt(e->kids[0], 0) + "," + fmt(e->kids[1], 0) + ")";
        case NodeKind::BinomInv:
            return "Cinv(" + fmt(e->kids[0], 0) + "," + fmt(e->kids[1], 0) +
                   ")";
        case NodeKind::Catalan:
            return "Cat(" + fmt(e->kids[0], 0) + ")";
        case NodeKind::Floor:
        case NodeKind::Ceil: {
            const ExprPtr& a = e->kids[0];
            std::string inner =
                (a->kind == NodeKind::ParamRef || a->kind == NodeKind::Var ||
                 (a->kind == NodeKind::IntLit && a->value >= 0))
                    ? fmt(a, 5)
                    : "(" + fmt(a, 0) + ")";
            return (e->kind == NodeKind::Floor ? "floor(" : "ceil(") + inner +
                   "/2)";
        }
        case NodeKind::Sum:
            return "sum(" + e->name + "=" + fmt(e->kids[0], 0) + ".." +
                   fmt(e->kids[1], 0) + ") " + fmt(e->kids[2], 0);
    }
    return "?";
}

std::string fmt(const ExprPtr& e, int min_prec) {
    std::string s = fmt_bare(e);
    return prec(*e) < min_prec ? "(" + s + ")" : s;
}

bool bare_id_ok(const std::string& id) {
    if (id.empty() || !(std::isalpha(static_cast<unsigned char>(id[0])) ||
                        id[0] == '_'))
        return false;
    bool prev_dash = false;
    for (std::size_t i = 1; i < id.size(); ++i) {
        char c = id[i];
        if (c == '-') {
            if (prev_dash) return false;
            prev_dash = true;
            continue;
        }
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
        prev_dash = false;
    }
    return !prev_dash;
}

const char* cmp_str(CmpOp op) {
    switch (op) {
        case CmpOp::Lt:
            return "<";
        case CmpOp::Le:
            return "<=";
        case CmpOp::Gt:
            return ">";
        case CmpOp::Ge:
            return ">=";
        case CmpOp::Eq:
            return "=";
        case CmpOp::Ne:
            return "!=";
    }
    return "?";
}

}  // namespace

Identity parse_identity(const std::string& text) {
    return Parser(text).parse_one();
}

std::vector<Identity> parse_program(const std::string& text) {
    return Parser(text).parse_all();
}

std::string format_expr(const ExprPtr& e) { return fmt(e, 0); }

std::string format_identity(const Identity& ident) {
    std::string out = "identity ";
    out += bare_id_ok(ident.id) ? ident.id : "\"" + ident.id + "\"";
    out += "(";
    for (std::size_t i = 0; i < ident.params.size(); ++i) {
        if (i) out += ", ";
        out += ident.params[i].name;
        out += ": ";
        out += param_kind_name(ident.params[i].kind);
    }
    out += ")";
    if (!ident.validity.trivial()) {
        out += " requires ";
        for (std::size_t i = 0; i < ident.validity.clauses.size(); ++i) {
            if (i) out += " and ";
            const Comparison& c = ident.validity.clauses[i];
            out += fmt(c.lhs, 1);
            out += " ";
            out += cmp_str(c.op);
            out += " ";
            out += fmt(c.rhs, 1);
        }
    }
    out += " : ";
    out += fmt(ident.lhs, 0);
    out += " == ";
    if (ident.rhs.size() == 1 &&
        ident.rhs[0].guard.kind == GuardKind::Always) {
        out += fmt(ident.rhs[0].expr, 0);
    } else {
        out += "cases { ";
        for (std::size_t i = 0; i < ident.rhs.size(); ++i) {
            if (i) out += "; ";
            const CasedRhs& c = ident.rhs[i];
            switch (c.guard.kind) {
                case GuardKind::Always:
                    out += "always";
                    break;
                case GuardKind::EvenParam:
                    out += "even(" + c.guard.param + ")";
                    break;
                case GuardKind::OddParam:
                    out += "odd(" + c.guard.param + ")";
                    break;
                case GuardKind::NonZeroParam:
                    out += "nonzero(" + c.guard.param + ")";
                    break;
            }
            out += " => ";
            out += fmt(c.expr, 0);
        }
        out += " }";
    }
    return out;
}

}  // namespace binomid
