#pragma once

#include <memory>
#include <string>
#include <vector>

#include "amt/source.hpp"
#include "amt/value.hpp"

namespace amt {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinOp { Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Le, Gt, Ge, And, Or, Implies };
enum class UnOp { Neg, Not };

// Collection operations reached through '->'.
enum class CollOp { Size, IsEmpty, NotEmpty, Includes, ForAll, Exists, Select, Collect, Sum };

inline const char* bin_op_text(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::Mod: return "mod";
        case BinOp::Eq: return "=";
        case BinOp::Ne: return "<>";
        case BinOp::Lt: return "<";
        case BinOp::Le: return "<=";
        case BinOp::Gt: return ">";
        case BinOp::Ge: return ">=";
        case BinOp::And: return "and";
        case BinOp::Or: return "or";
        case BinOp::Implies: return "implies";
    }
    return "?";
}

inline const char* coll_op_name(CollOp op) {
    switch (op) {
        case CollOp::Size: return "size";
        case CollOp::IsEmpty: return "isEmpty";
        case CollOp::NotEmpty: return "notEmpty";
        case CollOp::Includes: return "includes";
        case CollOp::ForAll: return "forAll";
        case CollOp::Exists: return "exists";
        case CollOp::Select: return "select";
        case CollOp::Collect: return "collect";
        case CollOp::Sum: return "sum";
    }
    return "?";
}

// Constraint expression AST. One node struct keyed by kind; the payload
// fields used depend on the kind:
//   Lit          lit
//   Name         name                       (self, parameter, object, iterator)
//   Nav          kids[0], name              (attribute or role navigation)
//   AllInstances name                       (class name)
//   Unary        un, kids[0]
//   Binary       bin, kids[0], kids[1]
//   Coll         coll, kids[0] = source,
//                Includes: kids[1] = argument
//                ForAll/Exists/Select/Collect: var, kids[1] = body
struct Expr {
    enum class Kind { Lit, Name, Nav, AllInstances, Unary, Binary, Coll };

    Kind kind = Kind::Lit;
    SourceSpan span;
    Value lit;
    std::string name;
    std::string var;
    BinOp bin = BinOp::Add;
    UnOp un = UnOp::Neg;
    CollOp coll = CollOp::Size;
    std::vector<ExprPtr> kids;
};

inline ExprPtr make_lit(Value v, SourceSpan sp = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Lit;
    e->lit = std::move(v);
    e->span = sp;
    return e;
}

inline ExprPtr make_name(std::string n, SourceSpan sp = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Name;
    e->name = std::move(n);
    e->span = sp;
    return e;
}

inline ExprPtr make_nav(ExprPtr base, std::string member, SourceSpan sp = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Nav;
    e->kids = {std::move(base)};
    e->name = std::move(member);
    e->span = sp;
    return e;
}

inline ExprPtr make_all_instances(std::string cls, SourceSpan sp = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::AllInstances;
    e->name = std::move(cls);
    e->span = sp;
    return e;
}

inline ExprPtr make_unary(UnOp op, ExprPtr inner, SourceSpan sp = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Unary;
    e->un = op;
    e->kids = {std::move(inner)};
    e->span = sp;
    return e;
}

inline ExprPtr make_binary(BinOp op, ExprPtr l, ExprPtr r, SourceSpan sp = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Binary;
    e->bin = op;
    e->kids = {std::move(l), std::move(r)};
    e->span = sp;
    return e;
}

inline ExprPtr make_coll(CollOp op, ExprPtr source, std::string var = {}, ExprPtr arg = nullptr,
                         SourceSpan sp = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Coll;
    e->coll = op;
    e->var = std::move(var);
    e->kids = {std::move(source)};
    if (arg) e->kids.push_back(std::move(arg));
    e->span = sp;
    return e;
}

// Structural equality, spans ignored.
inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::Lit:
            if (a->lit != b->lit) return false;
            break;
        case Expr::Kind::Name:
        case Expr::Kind::AllInstances:
            if (a->name != b->name) return false;
            break;
        case Expr::Kind::Nav:
            if (a->name != b->name) return false;
            break;
        case Expr::Kind::Unary:
            if (a->un != b->un) return false;
            break;
        case Expr::Kind::Binary:
            if (a->bin != b->bin) return false;
            break;
        case Expr::Kind::Coll:
            if (a->coll != b->coll || a->var != b->var) return false;
            break;
    }
    if (a->kids.size() != b->kids.size()) return false;
    for (std::size_t k = 0; k < a->kids.size(); ++k)
        if (!expr_equal(a->kids[k], b->kids[k])) return false;
    return true;
}

// Rebuilds the expression with every name node for `from` replaced by `to`.
// Iterator variables shadow: a bound occurrence of `from` is left alone.
inline ExprPtr substitute_name(const ExprPtr& e, const std::string& from, const std::string& to) {
    if (!e) return e;
    if (e->kind == Expr::Kind::Name) {
        if (e->name == from) return make_name(to, e->span);
        return e;
    }
    if (e->kind == Expr::Kind::Coll && e->var == from && e->kids.size() > 1) {
        // only the source is open; the body binds `from`
        auto copy = std::make_shared<Expr>(*e);
        copy->kids[0] = substitute_name(e->kids[0], from, to);
        return copy;
    }
    auto copy = std::make_shared<Expr>(*e);
    for (auto& k : copy->kids) k = substitute_name(k, from, to);
    return copy;
}

}  // namespace amt
