#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "amt/index.hpp"

namespace amt {

// Static type of a constraint expression.
struct Type {
    enum class Kind { Int, Real, Bool, Str, Class, Set, Seq };

    Kind kind = Kind::Int;
    std::string cls;                   // Class
    std::shared_ptr<const Type> elem;  // Set / Seq

    static Type of_prim(PrimType p) {
        switch (p) {
            case PrimType::Integer: return Type{Kind::Int, {}, nullptr};
            case PrimType::Real: return Type{Kind::Real, {}, nullptr};
            case PrimType::Boolean: return Type{Kind::Bool, {}, nullptr};
            case PrimType::String: return Type{Kind::Str, {}, nullptr};
        }
        return {};
    }
    static Type of_class(std::string c) { return Type{Kind::Class, std::move(c), nullptr}; }
    static Type set_of(Type t) {
        return Type{Kind::Set, {}, std::make_shared<const Type>(std::move(t))};
    }
    static Type seq_of(Type t) {
        return Type{Kind::Seq, {}, std::make_shared<const Type>(std::move(t))};
    }

    bool is_numeric() const { return kind == Kind::Int || kind == Kind::Real; }
    bool is_collection() const { return kind == Kind::Set || kind == Kind::Seq; }

    bool operator==(const Type& o) const {
        if (kind != o.kind || cls != o.cls) return false;
        if ((elem == nullptr) != (o.elem == nullptr)) return false;
        return elem == nullptr || *elem == *o.elem;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Int: return "Integer";
            case Kind::Real: return "Real";
            case Kind::Bool: return "Boolean";
            case Kind::Str: return "String";
            case Kind::Class: return cls;
            case Kind::Set: return "Set(" + (elem ? elem->str() : "?") + ")";
            case Kind::Seq: return "Sequence(" + (elem ? elem->str() : "?") + ")";
        }
        return "?";
    }
};

struct TypeEnv {
    const ModelIndex* index = nullptr;
    std::map<std::string, Type> vars;

    TypeEnv with(const std::string& name, Type t) const {
        TypeEnv e = *this;
        e.vars[name] = std::move(t);
        return e;
    }
};

struct TypecheckResult {
    std::optional<Type> type;  // absent when errors were reported
    std::vector<Diagnostic> errors;

    bool ok() const { return type.has_value() && errors.empty(); }
};

// Optional per-node type annotations, filled for every node that checked
// cleanly. The refactoring engine relies on these to find typed uses of a
// member.
using TypeAnnotations = std::map<const Expr*, Type>;

namespace detail {

class Typechecker {
public:
    Typechecker(const ModelIndex& index, TypeAnnotations* notes)
        : index_(index), notes_(notes) {}

    std::optional<Type> check(const ExprPtr& e, const TypeEnv& env) {
        auto t = infer(e, env);
        if (t && notes_) (*notes_)[e.get()] = *t;
        return t;
    }

    std::vector<Diagnostic> errors;

private:
    const ModelIndex& index_;
    TypeAnnotations* notes_;

    void fail(const std::string& code, const SourceSpan& span, const std::string& msg) {
        errors.push_back({code, Severity::Error, span, msg});
    }

    // Value compatibility for '=' / '<>' / includes.
    bool comparable(const Type& a, const Type& b) const {
        if (a.is_numeric() && b.is_numeric()) return true;
        if (a.kind != b.kind) return false;
        switch (a.kind) {
            case Type::Kind::Bool:
            case Type::Kind::Str: return true;
            case Type::Kind::Class:
                return index_.conforms(a.cls, b.cls) || index_.conforms(b.cls, a.cls);
            case Type::Kind::Set:
            case Type::Kind::Seq: return a.elem && b.elem && comparable(*a.elem, *b.elem);
            default: return true;
        }
    }

    std::optional<Type> infer(const ExprPtr& e, const TypeEnv& env) {
        switch (e->kind) {
            case Expr::Kind::Lit:
                switch (e->lit.kind) {
                    case Value::Kind::Int: return Type::of_prim(PrimType::Integer);
                    case Value::Kind::Real: return Type::of_prim(PrimType::Real);
                    case Value::Kind::Bool: return Type::of_prim(PrimType::Boolean);
                    case Value::Kind::Str: return Type::of_prim(PrimType::String);
                    default:
                        fail("E_TYPE", e->span, "literal kind not allowed in expressions");
                        return std::nullopt;
                }
            case Expr::Kind::Name: {
                auto it = env.vars.find(e->name);
                if (it == env.vars.end()) {
                    fail("E_UNBOUND", e->span, "unbound name '" + e->name + "'");
                    return std::nullopt;
                }
                return it->second;
            }
            case Expr::Kind::AllInstances: {
                if (!index_.find_class(e->name)) {
                    fail("E_UNBOUND", e->span, "unknown class '" + e->name + "'");
                    return std::nullopt;
                }
                return Type::set_of(Type::of_class(e->name));
            }
            case Expr::Kind::Nav: return infer_nav(e, env);
            case Expr::Kind::Unary: {
                auto t = check(e->kids[0], env);
                if (!t) return std::nullopt;
                if (e->un == UnOp::Not) {
                    if (t->kind != Type::Kind::Bool) {
                        fail("E_TYPE", e->span, "'not' needs Boolean, got " + t->str());
                        return std::nullopt;
                    }
                    return t;
                }
                if (!t->is_numeric()) {
                    fail("E_TYPE", e->span, "unary '-' needs a numeric operand, got " + t->str());
                    return std::nullopt;
                }
                return t;
            }
            case Expr::Kind::Binary: return infer_binary(e, env);
            case Expr::Kind::Coll: return infer_coll(e, env);
        }
        return std::nullopt;
    }

    std::optional<Type> infer_nav(const ExprPtr& e, const TypeEnv& env) {
        auto base = check(e->kids[0], env);
        if (!base) return std::nullopt;
        if (base->is_collection()) {
            fail("E_TYPE", e->span,
                 "navigation on a collection; use ->collect(x | x." + e->name + ")");
            return std::nullopt;
        }
        if (base->kind != Type::Kind::Class) {
            fail("E_TYPE", e->span, "cannot navigate into " + base->str());
            return std::nullopt;
        }
        EffectiveClass eff;
        try {
            eff = flatten(index_, base->cls);
        } catch (const AmtError&) {
            fail("E_UNBOUND", e->span, "unknown class '" + base->cls + "'");
            return std::nullopt;
        }
        if (const AttrDecl* a = eff.find_attr(e->name)) return Type::of_prim(a->type);
        if (const AssocDecl* r = index_.find_role(base->cls, e->name)) {
            Type target = Type::of_class(r->target);
            return r->mult == Multiplicity::Many ? Type::set_of(target) : target;
        }
        fail("E_UNBOUND", e->span,
             "class " + base->cls + " has no attribute or role '" + e->name + "'");
        return std::nullopt;
    }

    std::optional<Type> infer_binary(const ExprPtr& e, const TypeEnv& env) {
        auto l = check(e->kids[0], env);
        auto r = check(e->kids[1], env);
        if (!l || !r) return std::nullopt;
        switch (e->bin) {
            case BinOp::Add:
            case BinOp::Sub:
            case BinOp::Mul:
            case BinOp::Div:
                if (!l->is_numeric() || !r->is_numeric()) {
                    fail("E_TYPE", e->span,
                         "arithmetic needs numeric operands, got " + l->str() + " and " + r->str());
                    return std::nullopt;
                }
                if (l->kind == Type::Kind::Real || r->kind == Type::Kind::Real)
                    return Type::of_prim(PrimType::Real);
                return Type::of_prim(PrimType::Integer);
            case BinOp::Mod:
                if (l->kind != Type::Kind::Int || r->kind != Type::Kind::Int) {
                    fail("E_TYPE", e->span, "'mod' needs Integer operands");
                    return std::nullopt;
                }
                return Type::of_prim(PrimType::Integer);
            case BinOp::Lt:
            case BinOp::Le:
            case BinOp::Gt:
            case BinOp::Ge:
                if (!l->is_numeric() || !r->is_numeric()) {
                    fail("E_TYPE", e->span,
                         "ordering needs numeric operands, got " + l->str() + " and " + r->str());
                    return std::nullopt;
                }
                return Type::of_prim(PrimType::Boolean);
            case BinOp::Eq:
            case BinOp::Ne:
                if (!comparable(*l, *r)) {
                    fail("E_TYPE", e->span,
                         "cannot compare " + l->str() + " with " + r->str());
                    return std::nullopt;
                }
                return Type::of_prim(PrimType::Boolean);
            case BinOp::And:
            case BinOp::Or:
            case BinOp::Implies:
                if (l->kind != Type::Kind::Bool || r->kind != Type::Kind::Bool) {
                    fail("E_TYPE", e->span,
                         std::string(bin_op_text(e->bin)) + " needs Boolean operands, got " +
                             l->str() + " and " + r->str());
                    return std::nullopt;
                }
                return Type::of_prim(PrimType::Boolean);
        }
        return std::nullopt;
    }

    std::optional<Type> infer_coll(const ExprPtr& e, const TypeEnv& env) {
        auto source = check(e->kids[0], env);
        if (!source) return std::nullopt;
        if (!source->is_collection()) {
            fail("E_TYPE", e->span,
                 std::string("->") + coll_op_name(e->coll) + " needs a collection, got " +
                     source->str());
            return std::nullopt;
        }
        const Type& elem = *source->elem;
        switch (e->coll) {
            case CollOp::Size: return Type::of_prim(PrimType::Integer);
            case CollOp::IsEmpty:
            case CollOp::NotEmpty: return Type::of_prim(PrimType::Boolean);
            case CollOp::Sum:
                if (!elem.is_numeric()) {
                    fail("E_TYPE", e->span, "->sum() needs numeric elements, got " + elem.str());
                    return std::nullopt;
                }
                return elem;
            case CollOp::Includes: {
                auto arg = check(e->kids[1], env);
                if (!arg) return std::nullopt;
                if (!comparable(elem, *arg)) {
                    fail("E_TYPE", e->span,
                         "->includes argument " + arg->str() + " does not match element type " +
                             elem.str());
                    return std::nullopt;
                }
                return Type::of_prim(PrimType::Boolean);
            }
            case CollOp::ForAll:
            case CollOp::Exists: {
                auto body = check(e->kids[1], env.with(e->var, elem));
                if (!body) return std::nullopt;
                if (body->kind != Type::Kind::Bool) {
                    fail("E_TYPE", e->kids[1]->span, "quantifier body must be Boolean");
                    return std::nullopt;
                }
                return Type::of_prim(PrimType::Boolean);
            }
            case CollOp::Select: {
                auto body = check(e->kids[1], env.with(e->var, elem));
                if (!body) return std::nullopt;
                if (body->kind != Type::Kind::Bool) {
                    fail("E_TYPE", e->kids[1]->span, "select predicate must be Boolean");
                    return std::nullopt;
                }
                return *source;
            }
            case CollOp::Collect: {
                auto body = check(e->kids[1], env.with(e->var, elem));
                if (!body) return std::nullopt;
                return Type::seq_of(*body);
            }
        }
        return std::nullopt;
    }
};

}  // namespace detail

// Checks `expr` against the free-name environment. Sound: a checked
// expression can evaluate to Undefined but never to a wrongly-typed value.
inline TypecheckResult typecheck(const ExprPtr& expr, const TypeEnv& env,
                                 TypeAnnotations* notes = nullptr) {
    detail::Typechecker tc(*env.index, notes);
    TypecheckResult result;
    result.type = tc.check(expr, env);
    result.errors = std::move(tc.errors);
    if (!result.errors.empty()) result.type.reset();
    return result;
}

}  // namespace amt
