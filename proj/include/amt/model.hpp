#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amt/expr.hpp"
#include "amt/source.hpp"
#include "amt/value.hpp"

namespace amt {

// Sender name used for messages injected by the environment.
inline const std::string kEnv = "env";

enum class Stereotype { None, Requirement, Auxiliary };

struct Param {
    std::string name;
    PrimType type = PrimType::Integer;
    SourceSpan span;

    bool operator==(const Param& o) const { return name == o.name && type == o.type; }
};

struct AttrDecl {
    std::string name;
    PrimType type = PrimType::Integer;
    SourceSpan span;

    bool operator==(const AttrDecl& o) const { return name == o.name && type == o.type; }
};

struct OpDecl {
    std::string name;
    std::vector<Param> params;
    SourceSpan span;

    bool operator==(const OpDecl& o) const { return name == o.name && params == o.params; }
};

struct Action {
    enum class Kind { Assign, Send };

    Kind kind = Kind::Assign;
    // Assign
    std::string attr;
    ExprPtr value;
    // Send: path navigates from self; a single segment may also name a class,
    // addressing its instances directly (used by synthesized statecharts)
    std::vector<std::string> path;
    std::string op;
    std::vector<ExprPtr> args;
    SourceSpan span;

    bool operator==(const Action& o) const {
        if (kind != o.kind) return false;
        if (kind == Kind::Assign) return attr == o.attr && expr_equal(value, o.value);
        if (path != o.path || op != o.op || args.size() != o.args.size()) return false;
        for (std::size_t k = 0; k < args.size(); ++k)
            if (!expr_equal(args[k], o.args[k])) return false;
        return true;
    }
};

struct Transition {
    std::string source;
    std::string target;
    std::string event;  // operation name of the owning class
    ExprPtr guard;      // optional; Boolean over self + event parameters
    std::vector<Action> actions;
    SourceSpan span;

    bool operator==(const Transition& o) const {
        return source == o.source && target == o.target && event == o.event &&
               expr_equal(guard, o.guard) && actions == o.actions;
    }
};

struct Statechart {
    std::vector<std::string> states;
    std::string initial;
    std::vector<Transition> transitions;
    SourceSpan span;

    bool operator==(const Statechart& o) const {
        return states == o.states && initial == o.initial && transitions == o.transitions;
    }
};

struct ClassDecl {
    std::string name;
    Stereotype stereotype = Stereotype::None;
    std::optional<std::string> superclass;
    std::vector<AttrDecl> attributes;
    std::vector<OpDecl> operations;
    std::vector<ExprPtr> invariants;
    std::optional<Statechart> statechart;
    SourceSpan span;

    bool operator==(const ClassDecl& o) const {
        if (name != o.name || stereotype != o.stereotype || superclass != o.superclass ||
            attributes != o.attributes || operations != o.operations ||
            statechart != o.statechart)
            return false;
        if (invariants.size() != o.invariants.size()) return false;
        for (std::size_t k = 0; k < invariants.size(); ++k)
            if (!expr_equal(invariants[k], o.invariants[k])) return false;
        return true;
    }
};

enum class Multiplicity { Optional, Many };  // target end: 0..1 or 0..*

struct AssocDecl {
    std::string name;
    std::string source;
    std::string target;
    Multiplicity mult = Multiplicity::Many;
    std::string role;  // navigation name on the source class
    SourceSpan span;

    bool operator==(const AssocDecl& o) const {
        return name == o.name && source == o.source && target == o.target && mult == o.mult &&
               role == o.role;
    }
};

struct ObjAttrInit {
    std::string attr;
    Value value;
    SourceSpan span;

    bool operator==(const ObjAttrInit& o) const { return attr == o.attr && value == o.value; }
};

struct ObjDecl {
    std::string name;
    std::string cls;
    std::vector<ObjAttrInit> attrs;
    std::optional<std::string> state;
    SourceSpan span;

    bool operator==(const ObjDecl& o) const {
        return name == o.name && cls == o.cls && attrs == o.attrs && state == o.state;
    }
};

struct LinkDecl {
    std::string assoc;
    std::string src;
    std::string dst;
    SourceSpan span;

    bool operator==(const LinkDecl& o) const {
        return assoc == o.assoc && src == o.src && dst == o.dst;
    }
};

// Complete snapshot when used as a fixture, partial pattern when used as an
// oracle.
struct ObjectDiagram {
    std::string name;
    std::vector<ObjDecl> objects;
    std::vector<LinkDecl> links;
    SourceSpan span;

    bool operator==(const ObjectDiagram& o) const {
        return name == o.name && objects == o.objects && links == o.links;
    }
};

struct Message {
    std::string sender;  // kEnv or a fixture object name (a class name in scenario SDs)
    std::string target;
    std::string op;
    std::vector<Value> args;  // literals only
    SourceSpan span;

    bool operator==(const Message& o) const {
        return sender == o.sender && target == o.target && op == o.op && args == o.args;
    }
};

struct TestStep {
    enum class Kind { Observe, Assert };

    Kind kind = Kind::Observe;
    Message msg;   // Observe
    ExprPtr expr;  // Assert
    SourceSpan span;

    bool operator==(const TestStep& o) const {
        if (kind != o.kind) return false;
        return kind == Kind::Observe ? msg == o.msg : expr_equal(expr, o.expr);
    }
};

struct TestCaseDecl {
    std::string name;
    std::string fixture;
    std::vector<Message> trigger;  // non-empty driver prefix
    std::vector<TestStep> steps;   // observations and assertions, in order
    std::optional<ObjectDiagram> oracle;
    SourceSpan span;

    bool operator==(const TestCaseDecl& o) const {
        return name == o.name && fixture == o.fixture && trigger == o.trigger &&
               steps == o.steps && oracle == o.oracle;
    }
};

// Scenario sequence diagram: lifelines are class names, plus `env`.
struct SequenceDiagram {
    std::string name;
    std::vector<Message> messages;
    SourceSpan span;

    bool operator==(const SequenceDiagram& o) const {
        return name == o.name && messages == o.messages;
    }
};

struct Model {
    std::string name;
    std::vector<ClassDecl> classes;
    std::vector<AssocDecl> associations;
    std::vector<ObjectDiagram> fixtures;
    std::vector<TestCaseDecl> tests;
    std::vector<SequenceDiagram> sds;
    SourceSpan span;

    bool operator==(const Model& o) const {
        return name == o.name && classes == o.classes && associations == o.associations &&
               fixtures == o.fixtures && tests == o.tests && sds == o.sds;
    }

    const ClassDecl* find_class(const std::string& n) const {
        for (const auto& c : classes)
            if (c.name == n) return &c;
        return nullptr;
    }
    ClassDecl* find_class(const std::string& n) {
        for (auto& c : classes)
            if (c.name == n) return &c;
        return nullptr;
    }
    const AssocDecl* find_assoc(const std::string& n) const {
        for (const auto& a : associations)
            if (a.name == n) return &a;
        return nullptr;
    }
    const ObjectDiagram* find_fixture(const std::string& n) const {
        for (const auto& f : fixtures)
            if (f.name == n) return &f;
        return nullptr;
    }
    const TestCaseDecl* find_test(const std::string& n) const {
        for (const auto& t : tests)
            if (t.name == n) return &t;
        return nullptr;
    }
    const SequenceDiagram* find_sd(const std::string& n) const {
        for (const auto& s : sds)
            if (s.name == n) return &s;
        return nullptr;
    }
};

inline bool is_primitive_name(const std::string& n) {
    return n == "Integer" || n == "Real" || n == "Boolean" || n == "String";
}

inline std::optional<PrimType> prim_from_name(const std::string& n) {
    if (n == "Integer") return PrimType::Integer;
    if (n == "Real") return PrimType::Real;
    if (n == "Boolean") return PrimType::Boolean;
    if (n == "String") return PrimType::String;
    return std::nullopt;
}

}  // namespace amt
