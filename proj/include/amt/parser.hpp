#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amt/lexer.hpp"
#include "amt/model.hpp"

namespace amt {

struct ParseError {
    SourceSpan span;
    std::string message;
};

struct ParseResult {
    std::optional<Model> model;
    std::vector<ParseError> errors;

    bool ok() const { return model.has_value() && errors.empty(); }
};

struct ConstraintResult {
    ExprPtr expr;
    std::vector<ParseError> errors;

    bool ok() const { return expr != nullptr && errors.empty(); }
};

struct EventsResult {
    std::vector<Message> messages;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

namespace detail {

// Recursive descent over the token stream. Errors inside a top-level
// declaration abort that declaration and resynchronize at the next one, so a
// single run reports every broken declaration.
class Parser {
public:
    Parser(std::string_view text, std::string filename) {
        Lexer lex(text, std::move(filename));
        tokens_ = lex.tokenize();
    }

    ParseResult parse_model() {
        ParseResult result;
        Model m;
        try {
            Token start = expect(Tok::KwModel, "expected 'model'");
            m.name = expect(Tok::Ident, "expected model name").text;
            expect(Tok::LBrace, "expected '{'");
            m.span = start.span;
            while (!at(Tok::RBrace) && !at(Tok::End)) {
                try {
                    parse_top_decl(m);
                } catch (const Bail&) {
                    sync_top_level();
                }
            }
            Token close = expect(Tok::RBrace, "expected '}' closing the model");
            m.span = join(m.span, close.span);
            if (!at(Tok::End)) error_here("trailing input after model");
        } catch (const Bail&) {
            // unrecoverable at this level; errors_ already has the cause
        }
        result.errors = errors_;
        if (errors_.empty()) result.model = std::move(m);
        return result;
    }

    ConstraintResult parse_constraint_only() {
        ConstraintResult result;
        try {
            result.expr = parse_expr();
            if (!at(Tok::End)) error_here("trailing input after expression");
        } catch (const Bail&) {
        }
        result.errors = errors_;
        if (!result.errors.empty()) result.expr = nullptr;
        return result;
    }

    // `a1.deposit(50); a1.withdraw(30)` — the message grammar with the
    // sender defaulting to env; separators are ';' (a trailing one is fine).
    EventsResult parse_events_only() {
        EventsResult result;
        try {
            while (!at(Tok::End)) {
                result.messages.push_back(parse_message(/*allow_default_env=*/true));
                if (at(Tok::Semi)) advance();
            }
        } catch (const Bail&) {
        }
        result.errors = errors_;
        return result;
    }

private:
    struct Bail {};

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<ParseError> errors_;

    const Token& cur() const { return tokens_[pos_]; }
    const Token& peek(std::size_t n = 1) const {
        std::size_t k = pos_ + n;
        return k < tokens_.size() ? tokens_[k] : tokens_.back();
    }
    bool at(Tok t) const { return cur().type == t; }

    Token advance() {
        Token t = cur();
        if (t.type == Tok::Error) {
            errors_.push_back({t.span, t.text});
            ++pos_;
            throw Bail{};
        }
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return t;
    }

    Token expect(Tok t, const std::string& what) {
        if (cur().type == Tok::Error) advance();  // reports and bails
        if (!at(t)) {
            error_here(what + ", got '" + describe(cur()) + "'");
            throw Bail{};
        }
        return advance();
    }

    bool accept(Tok t) {
        if (at(t)) {
            advance();
            return true;
        }
        return false;
    }

    void error_here(const std::string& msg) { errors_.push_back({cur().span, msg}); }

    static std::string describe(const Token& t) {
        if (t.type == Tok::End) return "<end of input>";
        return t.text.empty() ? "?" : t.text;
    }

    // Skip to the start of the next top-level declaration, balancing braces
    // passed over on the way. A '}' at balance followed by end-of-input is
    // taken to be the model's own closing brace and left in place.
    void sync_top_level() {
        int depth = 0;
        while (!at(Tok::End)) {
            Tok t = cur().type;
            if (depth <= 0 &&
                (t == Tok::KwClass || t == Tok::KwAssoc || t == Tok::KwObjects ||
                 t == Tok::KwTest || t == Tok::KwSd))
                return;
            if (t == Tok::RBrace && depth <= 0) {
                if (peek().type == Tok::End) return;
                ++pos_;  // closing brace of the broken declaration
                continue;
            }
            if (t == Tok::LBrace) ++depth;
            if (t == Tok::RBrace) --depth;
            if (t == Tok::Error) {
                ++pos_;
                continue;
            }
            advance();
        }
    }

    void parse_top_decl(Model& m) {
        switch (cur().type) {
            case Tok::KwClass: m.classes.push_back(parse_class()); break;
            case Tok::KwAssoc: m.associations.push_back(parse_assoc()); break;
            case Tok::KwObjects: m.fixtures.push_back(parse_object_diagram(Tok::KwObjects)); break;
            case Tok::KwTest: m.tests.push_back(parse_test()); break;
            case Tok::KwSd: m.sds.push_back(parse_sd()); break;
            default:
                error_here("expected a declaration (class, assoc, objects, test or sd), got '" +
                           describe(cur()) + "'");
                throw Bail{};
        }
    }

    PrimType parse_prim_type() {
        Token t = expect(Tok::Ident, "expected a primitive type");
        auto p = prim_from_name(t.text);
        if (!p) {
            errors_.push_back({t.span, "unknown primitive type '" + t.text +
                                           "' (expected Integer, Real, Boolean or String)"});
            throw Bail{};
        }
        return *p;
    }

    ClassDecl parse_class() {
        ClassDecl c;
        Token start = expect(Tok::KwClass, "expected 'class'");
        c.span = start.span;
        c.name = expect(Tok::Ident, "expected class name").text;
        if (accept(Tok::StereoOpen)) {
            Token s = expect(Tok::Ident, "expected 'requirement' or 'auxiliary'");
            if (s.text == "requirement")
                c.stereotype = Stereotype::Requirement;
            else if (s.text == "auxiliary")
                c.stereotype = Stereotype::Auxiliary;
            else {
                errors_.push_back({s.span, "unknown stereotype '" + s.text + "'"});
                throw Bail{};
            }
            expect(Tok::StereoClose, "expected '>>'");
        }
        if (accept(Tok::KwExtends)) c.superclass = expect(Tok::Ident, "expected superclass name").text;
        expect(Tok::LBrace, "expected '{'");
        while (!at(Tok::RBrace) && !at(Tok::End)) parse_member(c);
        Token close = expect(Tok::RBrace, "expected '}' closing the class");
        c.span = join(c.span, close.span);
        return c;
    }

    void parse_member(ClassDecl& c) {
        switch (cur().type) {
            case Tok::KwAttr: {
                AttrDecl a;
                a.span = advance().span;
                a.name = expect(Tok::Ident, "expected attribute name").text;
                expect(Tok::Colon, "expected ':'");
                a.type = parse_prim_type();
                a.span = join(a.span, expect(Tok::Semi, "expected ';'").span);
                c.attributes.push_back(std::move(a));
                return;
            }
            case Tok::KwOp: {
                OpDecl o;
                o.span = advance().span;
                o.name = expect(Tok::Ident, "expected operation name").text;
                expect(Tok::LParen, "expected '('");
                if (!at(Tok::RParen)) {
                    do {
                        Param p;
                        Token n = expect(Tok::Ident, "expected parameter name");
                        p.name = n.text;
                        p.span = n.span;
                        expect(Tok::Colon, "expected ':'");
                        p.type = parse_prim_type();
                        o.params.push_back(std::move(p));
                    } while (accept(Tok::Comma));
                }
                expect(Tok::RParen, "expected ')'");
                o.span = join(o.span, expect(Tok::Semi, "expected ';'").span);
                c.operations.push_back(std::move(o));
                return;
            }
            case Tok::KwInv: {
                advance();
                c.invariants.push_back(parse_expr());
                expect(Tok::Semi, "expected ';'");
                return;
            }
            case Tok::KwStatechart: {
                if (c.statechart) error_here("class already has a statechart");
                c.statechart = parse_statechart();
                return;
            }
            default:
                error_here("expected a class member (attr, op, inv or statechart), got '" +
                           describe(cur()) + "'");
                throw Bail{};
        }
    }

    Statechart parse_statechart() {
        Statechart sc;
        sc.span = expect(Tok::KwStatechart, "expected 'statechart'").span;
        expect(Tok::LBrace, "expected '{'");
        expect(Tok::KwInitial, "expected 'initial'");
        sc.initial = expect(Tok::Ident, "expected initial state name").text;
        expect(Tok::Semi, "expected ';'");
        while (at(Tok::KwState)) {
            advance();
            sc.states.push_back(expect(Tok::Ident, "expected state name").text);
            expect(Tok::Semi, "expected ';'");
        }
        while (at(Tok::KwTransition)) sc.transitions.push_back(parse_transition());
        Token close = expect(Tok::RBrace, "expected '}' closing the statechart");
        sc.span = join(sc.span, close.span);
        return sc;
    }

    Transition parse_transition() {
        Transition t;
        t.span = expect(Tok::KwTransition, "expected 'transition'").span;
        t.source = expect(Tok::Ident, "expected source state").text;
        expect(Tok::Arrow, "expected '->'");
        t.target = expect(Tok::Ident, "expected target state").text;
        expect(Tok::KwOn, "expected 'on'");
        t.event = expect(Tok::Ident, "expected event (operation) name").text;
        if (accept(Tok::LBracket)) {
            t.guard = parse_expr();
            expect(Tok::RBracket, "expected ']'");
        }
        if (accept(Tok::Slash)) {
            expect(Tok::LBrace, "expected '{'");
            while (!at(Tok::RBrace) && !at(Tok::End)) t.actions.push_back(parse_action());
            expect(Tok::RBrace, "expected '}' closing the action block");
        }
        t.span = join(t.span, expect(Tok::Semi, "expected ';'").span);
        return t;
    }

    Action parse_action() {
        Action a;
        if (at(Tok::KwSend)) {
            a.kind = Action::Kind::Send;
            a.span = advance().span;
            // dotted path; the final segment is the operation
            std::vector<std::string> segs;
            if (accept(Tok::KwSelf)) {
                expect(Tok::Dot, "expected '.' after 'self'");
            }
            segs.push_back(expect(Tok::Ident, "expected navigation path").text);
            while (accept(Tok::Dot))
                segs.push_back(expect(Tok::Ident, "expected path segment").text);
            if (segs.size() < 2) {
                error_here("send needs a target path and an operation, e.g. send peer.notify()");
                throw Bail{};
            }
            a.op = segs.back();
            segs.pop_back();
            a.path = std::move(segs);
            expect(Tok::LParen, "expected '('");
            if (!at(Tok::RParen)) {
                do {
                    a.args.push_back(parse_expr());
                } while (accept(Tok::Comma));
            }
            expect(Tok::RParen, "expected ')'");
            a.span = join(a.span, expect(Tok::Semi, "expected ';'").span);
            return a;
        }
        a.kind = Action::Kind::Assign;
        Token n = expect(Tok::Ident, "expected an assignment or send action");
        a.attr = n.text;
        a.span = n.span;
        expect(Tok::Assign, "expected ':='");
        a.value = parse_expr();
        a.span = join(a.span, expect(Tok::Semi, "expected ';'").span);
        return a;
    }

    AssocDecl parse_assoc() {
        AssocDecl a;
        a.span = expect(Tok::KwAssoc, "expected 'assoc'").span;
        a.name = expect(Tok::Ident, "expected association name").text;
        expect(Tok::Colon, "expected ':'");
        a.source = expect(Tok::Ident, "expected source class").text;
        expect(Tok::Arrow, "expected '->'");
        a.target = expect(Tok::Ident, "expected target class").text;
        expect(Tok::LBracket, "expected '[' multiplicity");
        if (accept(Tok::Star)) {
            a.mult = Multiplicity::Many;
        } else {
            Token zero = expect(Tok::Int, "expected '*' or '0..1'");
            expect(Tok::DotDot, "expected '..'");
            Token one = expect(Tok::Int, "expected '1'");
            if (zero.int_val != 0 || one.int_val != 1) {
                errors_.push_back({zero.span, "only multiplicities '0..1' and '*' are supported"});
                throw Bail{};
            }
            a.mult = Multiplicity::Optional;
        }
        expect(Tok::RBracket, "expected ']'");
        expect(Tok::KwAs, "expected 'as' role");
        a.role = expect(Tok::Ident, "expected role name").text;
        a.span = join(a.span, expect(Tok::Semi, "expected ';'").span);
        return a;
    }

    Value parse_literal() {
        bool neg = accept(Tok::Minus);
        Token t = cur();
        switch (t.type) {
            case Tok::Int:
                advance();
                return Value::of_int(neg ? -t.int_val : t.int_val);
            case Tok::Real:
                advance();
                return Value::of_real(neg ? -t.real_val : t.real_val);
            case Tok::String:
                if (neg) break;
                advance();
                return Value::of_string(t.text);
            case Tok::KwTrue:
                if (neg) break;
                advance();
                return Value::of_bool(true);
            case Tok::KwFalse:
                if (neg) break;
                advance();
                return Value::of_bool(false);
            default: break;
        }
        error_here("expected a literal");
        throw Bail{};
    }

    ObjDecl parse_obj_decl() {
        ObjDecl o;
        Token n = expect(Tok::Ident, "expected object name");
        o.name = n.text;
        o.span = n.span;
        expect(Tok::Colon, "expected ':'");
        o.cls = expect(Tok::Ident, "expected class name").text;
        expect(Tok::LBrace, "expected '{'");
        while (at(Tok::Ident)) {
            ObjAttrInit init;
            Token a = advance();
            init.attr = a.text;
            init.span = a.span;
            expect(Tok::Eq, "expected '='");
            init.value = parse_literal();
            expect(Tok::Semi, "expected ';'");
            o.attrs.push_back(std::move(init));
        }
        if (accept(Tok::KwState)) {
            expect(Tok::Eq, "expected '='");
            o.state = expect(Tok::Ident, "expected state name").text;
            expect(Tok::Semi, "expected ';'");
        }
        Token close = expect(Tok::RBrace, "expected '}' closing the object");
        o.span = join(o.span, close.span);
        return o;
    }

    LinkDecl parse_link_decl() {
        LinkDecl l;
        l.span = expect(Tok::KwLink, "expected 'link'").span;
        l.assoc = expect(Tok::Ident, "expected association name").text;
        l.src = expect(Tok::Ident, "expected source object").text;
        expect(Tok::Arrow, "expected '->'");
        l.dst = expect(Tok::Ident, "expected target object").text;
        l.span = join(l.span, expect(Tok::Semi, "expected ';'").span);
        return l;
    }

    ObjectDiagram parse_object_diagram(Tok intro) {
        ObjectDiagram od;
        od.span = expect(intro, "expected 'objects'").span;
        if (intro == Tok::KwObjects) od.name = expect(Tok::Ident, "expected fixture name").text;
        expect(Tok::LBrace, "expected '{'");
        while (at(Tok::Ident)) od.objects.push_back(parse_obj_decl());
        while (at(Tok::KwLink)) od.links.push_back(parse_link_decl());
        Token close = expect(Tok::RBrace, "expected '}'");
        od.span = join(od.span, close.span);
        return od;
    }

    Message parse_message(bool allow_default_env = false) {
        Message m;
        if (at(Tok::KwEnv)) {
            m.span = advance().span;
            m.sender = kEnv;
            expect(Tok::Arrow, "expected '->'");
            m.target = expect(Tok::Ident, "expected target object").text;
        } else {
            Token first = expect(Tok::Ident, "expected message sender");
            m.span = first.span;
            if (at(Tok::Arrow)) {
                advance();
                m.sender = first.text;
                m.target = expect(Tok::Ident, "expected target object").text;
            } else if (allow_default_env && at(Tok::Dot)) {
                m.sender = kEnv;
                m.target = first.text;
            } else {
                error_here("expected '->' after message sender");
                throw Bail{};
            }
        }
        expect(Tok::Dot, "expected '.'");
        m.op = expect(Tok::Ident, "expected operation name").text;
        expect(Tok::LParen, "expected '('");
        if (!at(Tok::RParen)) {
            do {
                m.args.push_back(parse_literal());
            } while (accept(Tok::Comma));
        }
        Token close = expect(Tok::RParen, "expected ')'");
        m.span = join(m.span, close.span);
        return m;
    }

    TestCaseDecl parse_test() {
        TestCaseDecl t;
        t.span = expect(Tok::KwTest, "expected 'test'").span;
        t.name = expect(Tok::Ident, "expected test name").text;
        expect(Tok::LBrace, "expected '{'");
        expect(Tok::KwFixture, "expected 'fixture'");
        t.fixture = expect(Tok::Ident, "expected fixture name").text;
        expect(Tok::Semi, "expected ';'");
        expect(Tok::KwSd, "expected 'sd'");
        expect(Tok::LBrace, "expected '{'");
        expect(Tok::KwTrigger, "expected 'trigger'");
        expect(Tok::Colon, "expected ':'");
        do {
            t.trigger.push_back(parse_message());
            expect(Tok::Semi, "expected ';'");
        } while (at(Tok::Ident) || at(Tok::KwEnv));
        while (at(Tok::KwObserve) || at(Tok::KwAssert)) {
            TestStep step;
            if (accept(Tok::KwObserve)) {
                expect(Tok::Colon, "expected ':'");
                step.kind = TestStep::Kind::Observe;
                step.msg = parse_message();
                step.span = step.msg.span;
                expect(Tok::Semi, "expected ';'");
            } else {
                Token kw = advance();  // assert
                step.kind = TestStep::Kind::Assert;
                step.expr = parse_expr();
                step.span = join(kw.span, step.expr->span);
                expect(Tok::Semi, "expected ';'");
            }
            t.steps.push_back(std::move(step));
        }
        expect(Tok::RBrace, "expected '}' closing the sd section");
        if (at(Tok::KwOracle)) {
            t.oracle = parse_object_diagram(Tok::KwOracle);
        }
        Token close = expect(Tok::RBrace, "expected '}' closing the test");
        t.span = join(t.span, close.span);
        return t;
    }

    SequenceDiagram parse_sd() {
        SequenceDiagram sd;
        sd.span = expect(Tok::KwSd, "expected 'sd'").span;
        sd.name = expect(Tok::Ident, "expected sequence diagram name").text;
        expect(Tok::LBrace, "expected '{'");
        while (at(Tok::Ident) || at(Tok::KwEnv)) {
            sd.messages.push_back(parse_message());
            expect(Tok::Semi, "expected ';'");
        }
        Token close = expect(Tok::RBrace, "expected '}' closing the sd");
        sd.span = join(sd.span, close.span);
        return sd;
    }

    // --- expressions -----------------------------------------------------
    // implies < or < and < not < comparison < additive < multiplicative
    // < unary minus < navigation

    ExprPtr parse_expr() { return parse_implies(); }

    ExprPtr parse_implies() {
        ExprPtr lhs = parse_or();
        while (at(Tok::KwImplies)) {
            advance();
            ExprPtr rhs = parse_or();
            lhs = make_binary(BinOp::Implies, lhs, rhs, join(lhs->span, rhs->span));
        }
        return lhs;
    }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (at(Tok::KwOr)) {
            advance();
            ExprPtr rhs = parse_and();
            lhs = make_binary(BinOp::Or, lhs, rhs, join(lhs->span, rhs->span));
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_not();
        while (at(Tok::KwAnd)) {
            advance();
            ExprPtr rhs = parse_not();
            lhs = make_binary(BinOp::And, lhs, rhs, join(lhs->span, rhs->span));
        }
        return lhs;
    }

    ExprPtr parse_not() {
        if (at(Tok::KwNot)) {
            Token t = advance();
            ExprPtr inner = parse_not();
            return make_unary(UnOp::Not, inner, join(t.span, inner->span));
        }
        return parse_comparison();
    }

    ExprPtr parse_comparison() {
        ExprPtr lhs = parse_additive();
        for (;;) {
            BinOp op;
            switch (cur().type) {
                case Tok::Eq: op = BinOp::Eq; break;
                case Tok::Neq: op = BinOp::Ne; break;
                case Tok::Lt: op = BinOp::Lt; break;
                case Tok::Le: op = BinOp::Le; break;
                case Tok::Gt: op = BinOp::Gt; break;
                case Tok::Ge: op = BinOp::Ge; break;
                default: return lhs;
            }
            advance();
            ExprPtr rhs = parse_additive();
            lhs = make_binary(op, lhs, rhs, join(lhs->span, rhs->span));
        }
    }

    ExprPtr parse_additive() {
        ExprPtr lhs = parse_multiplicative();
        for (;;) {
            BinOp op;
            if (at(Tok::Plus))
                op = BinOp::Add;
            else if (at(Tok::Minus))
                op = BinOp::Sub;
            else
                return lhs;
            advance();
            ExprPtr rhs = parse_multiplicative();
            lhs = make_binary(op, lhs, rhs, join(lhs->span, rhs->span));
        }
    }

    ExprPtr parse_multiplicative() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            BinOp op;
            if (at(Tok::Star))
                op = BinOp::Mul;
            else if (at(Tok::Slash))
                op = BinOp::Div;
            else if (at(Tok::KwMod))
                op = BinOp::Mod;
            else
                return lhs;
            advance();
            ExprPtr rhs = parse_unary();
            lhs = make_binary(op, lhs, rhs, join(lhs->span, rhs->span));
        }
    }

    ExprPtr parse_unary() {
        if (at(Tok::Minus)) {
            Token t = advance();
            ExprPtr inner = parse_unary();
            // fold negated numeric literals so `-1` is a literal node and
            // printing stays an involution
            if (inner->kind == Expr::Kind::Lit) {
                if (inner->lit.kind == Value::Kind::Int)
                    return make_lit(Value::of_int(-inner->lit.i), join(t.span, inner->span));
                if (inner->lit.kind == Value::Kind::Real)
                    return make_lit(Value::of_real(-inner->lit.r), join(t.span, inner->span));
            }
            return make_unary(UnOp::Neg, inner, join(t.span, inner->span));
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        for (;;) {
            if (accept(Tok::Dot)) {
                Token member = expect(Tok::Ident, "expected attribute or role name");
                if (at(Tok::LParen)) {
                    if (member.text != "allInstances") {
                        errors_.push_back({member.span,
                                           "operation calls are not expressions; only "
                                           "Class.allInstances() may be called after '.'"});
                        throw Bail{};
                    }
                    advance();
                    expect(Tok::RParen, "expected ')'");
                    if (e->kind != Expr::Kind::Name) {
                        errors_.push_back({member.span, "allInstances() needs a class name"});
                        throw Bail{};
                    }
                    e = make_all_instances(e->name, join(e->span, member.span));
                } else {
                    e = make_nav(e, member.text, join(e->span, member.span));
                }
            } else if (accept(Tok::Arrow)) {
                Token op = expect(Tok::Ident, "expected a collection operation");
                e = parse_coll_op(e, op);
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_coll_op(ExprPtr source, const Token& op) {
        CollOp kind;
        const std::string& n = op.text;
        if (n == "size") kind = CollOp::Size;
        else if (n == "isEmpty") kind = CollOp::IsEmpty;
        else if (n == "notEmpty") kind = CollOp::NotEmpty;
        else if (n == "includes") kind = CollOp::Includes;
        else if (n == "forAll") kind = CollOp::ForAll;
        else if (n == "exists") kind = CollOp::Exists;
        else if (n == "select") kind = CollOp::Select;
        else if (n == "collect") kind = CollOp::Collect;
        else if (n == "sum") kind = CollOp::Sum;
        else {
            errors_.push_back({op.span, "unknown collection operation '" + n + "'"});
            throw Bail{};
        }
        expect(Tok::LParen, "expected '('");
        ExprPtr result;
        switch (kind) {
            case CollOp::Size:
            case CollOp::IsEmpty:
            case CollOp::NotEmpty:
            case CollOp::Sum: {
                Token close = expect(Tok::RParen, "expected ')'");
                result = make_coll(kind, source, {}, nullptr, join(source->span, close.span));
                return result;
            }
            case CollOp::Includes: {
                ExprPtr arg = parse_expr();
                Token close = expect(Tok::RParen, "expected ')'");
                result = make_coll(kind, source, {}, arg, join(source->span, close.span));
                return result;
            }
            default: {
                Token var = expect(Tok::Ident, "expected iterator variable");
                expect(Tok::Pipe, "expected '|'");
                ExprPtr body = parse_expr();
                Token close = expect(Tok::RParen, "expected ')'");
                result = make_coll(kind, source, var.text, body, join(source->span, close.span));
                return result;
            }
        }
    }

    ExprPtr parse_primary() {
        Token t = cur();
        switch (t.type) {
            case Tok::Int: advance(); return make_lit(Value::of_int(t.int_val), t.span);
            case Tok::Real: advance(); return make_lit(Value::of_real(t.real_val), t.span);
            case Tok::String: advance(); return make_lit(Value::of_string(t.text), t.span);
            case Tok::KwTrue: advance(); return make_lit(Value::of_bool(true), t.span);
            case Tok::KwFalse: advance(); return make_lit(Value::of_bool(false), t.span);
            case Tok::KwSelf: advance(); return make_name("self", t.span);
            case Tok::Ident: advance(); return make_name(t.text, t.span);
            case Tok::LParen: {
                advance();
                ExprPtr e = parse_expr();
                expect(Tok::RParen, "expected ')'");
                return e;
            }
            default:
                error_here("expected an expression, got '" + describe(t) + "'");
                throw Bail{};
        }
    }
};

}  // namespace detail

inline ParseResult parse(std::string_view text, const std::string& filename = "<input>") {
    detail::Parser p(text, filename);
    return p.parse_model();
}

inline ConstraintResult parse_constraint(std::string_view text,
                                         const std::string& filename = "<expr>") {
    detail::Parser p(text, filename);
    return p.parse_constraint_only();
}

inline EventsResult parse_events(std::string_view text, const std::string& filename = "<events>") {
    detail::Parser p(text, filename);
    return p.parse_events_only();
}

}  // namespace amt
