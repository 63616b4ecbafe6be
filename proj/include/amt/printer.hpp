#pragma once

#include <sstream>
#include <string>

#include "amt/model.hpp"

namespace amt {

namespace detail {

// Binding strength, used to decide where parentheses are required.
inline int expr_level(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Binary:
            switch (e.bin) {
                case BinOp::Implies: return 1;
                case BinOp::Or: return 2;
                case BinOp::And: return 3;
                case BinOp::Eq:
                case BinOp::Ne:
                case BinOp::Lt:
                case BinOp::Le:
                case BinOp::Gt:
                case BinOp::Ge: return 5;
                case BinOp::Add:
                case BinOp::Sub: return 6;
                default: return 7;
            }
        case Expr::Kind::Unary: return e.un == UnOp::Not ? 4 : 8;
        default: return 10;
    }
}

inline void print_expr_rec(std::ostream& os, const Expr& e, int min_level, bool right_operand) {
    int level = expr_level(e);
    bool parens = level < min_level || (level == min_level && right_operand && level <= 7);
    if (parens) os << '(';
    switch (e.kind) {
        case Expr::Kind::Lit: os << value_str(e.lit); break;
        case Expr::Kind::Name: os << e.name; break;
        case Expr::Kind::Nav:
            print_expr_rec(os, *e.kids[0], 9, false);
            os << '.' << e.name;
            break;
        case Expr::Kind::AllInstances: os << e.name << ".allInstances()"; break;
        case Expr::Kind::Unary:
            if (e.un == UnOp::Not) {
                os << "not ";
                print_expr_rec(os, *e.kids[0], 4, false);
            } else {
                os << '-';
                print_expr_rec(os, *e.kids[0], 8, false);
            }
            break;
        case Expr::Kind::Binary: {
            print_expr_rec(os, *e.kids[0], level, false);
            os << ' ' << bin_op_text(e.bin) << ' ';
            print_expr_rec(os, *e.kids[1], level, true);
            break;
        }
        case Expr::Kind::Coll: {
            print_expr_rec(os, *e.kids[0], 9, false);
            os << "->" << coll_op_name(e.coll) << '(';
            if (e.coll == CollOp::Includes) {
                print_expr_rec(os, *e.kids[1], 0, false);
            } else if (e.kids.size() > 1) {
                os << e.var << " | ";
                print_expr_rec(os, *e.kids[1], 0, false);
            }
            os << ')';
            break;
        }
    }
    if (parens) os << ')';
}

class ModelPrinter {
public:
    explicit ModelPrinter(std::ostream& os) : os_(os) {}

    void print(const Model& m) {
        os_ << "model " << m.name << " {\n";
        for (const auto& c : m.classes) print_class(c);
        for (const auto& a : m.associations) print_assoc(a);
        for (const auto& f : m.fixtures) print_fixture(f);
        for (const auto& t : m.tests) print_test(t);
        for (const auto& s : m.sds) print_sd(s);
        os_ << "}\n";
    }

private:
    std::ostream& os_;
    int indent_ = 1;

    std::string pad() const { return std::string(static_cast<std::size_t>(indent_) * 2, ' '); }

    void expr(const ExprPtr& e) { print_expr_rec(os_, *e, 0, false); }

    void print_class(const ClassDecl& c) {
        os_ << pad() << "class " << c.name;
        if (c.stereotype == Stereotype::Requirement) os_ << " <<requirement>>";
        if (c.stereotype == Stereotype::Auxiliary) os_ << " <<auxiliary>>";
        if (c.superclass) os_ << " extends " << *c.superclass;
        os_ << " {\n";
        ++indent_;
        for (const auto& a : c.attributes)
            os_ << pad() << "attr " << a.name << ": " << prim_name(a.type) << ";\n";
        for (const auto& o : c.operations) {
            os_ << pad() << "op " << o.name << '(';
            for (std::size_t k = 0; k < o.params.size(); ++k) {
                if (k) os_ << ", ";
                os_ << o.params[k].name << ": " << prim_name(o.params[k].type);
            }
            os_ << ");\n";
        }
        for (const auto& inv : c.invariants) {
            os_ << pad() << "inv ";
            expr(inv);
            os_ << ";\n";
        }
        if (c.statechart) print_statechart(*c.statechart);
        --indent_;
        os_ << pad() << "}\n";
    }

    void print_statechart(const Statechart& sc) {
        os_ << pad() << "statechart {\n";
        ++indent_;
        os_ << pad() << "initial " << sc.initial << ";\n";
        for (const auto& s : sc.states) os_ << pad() << "state " << s << ";\n";
        for (const auto& t : sc.transitions) {
            os_ << pad() << "transition " << t.source << " -> " << t.target << " on " << t.event;
            if (t.guard) {
                os_ << " [";
                expr(t.guard);
                os_ << ']';
            }
            if (!t.actions.empty()) {
                os_ << " / {";
                for (const auto& a : t.actions) {
                    os_ << ' ';
                    print_action(a);
                }
                os_ << " }";
            }
            os_ << ";\n";
        }
        --indent_;
        os_ << pad() << "}\n";
    }

    void print_action(const Action& a) {
        if (a.kind == Action::Kind::Assign) {
            os_ << a.attr << " := ";
            expr(a.value);
            os_ << ';';
            return;
        }
        os_ << "send ";
        for (const auto& seg : a.path) os_ << seg << '.';
        os_ << a.op << '(';
        for (std::size_t k = 0; k < a.args.size(); ++k) {
            if (k) os_ << ", ";
            expr(a.args[k]);
        }
        os_ << ");";
    }

    void print_assoc(const AssocDecl& a) {
        os_ << pad() << "assoc " << a.name << " : " << a.source << " -> " << a.target << " ["
            << (a.mult == Multiplicity::Many ? "*" : "0..1") << "] as " << a.role << ";\n";
    }

    void print_obj(const ObjDecl& o) {
        os_ << pad() << o.name << " : " << o.cls << " {";
        for (const auto& init : o.attrs)
            os_ << ' ' << init.attr << " = " << value_str(init.value) << ';';
        if (o.state) os_ << " state = " << *o.state << ';';
        os_ << " }\n";
    }

    void print_link(const LinkDecl& l) {
        os_ << pad() << "link " << l.assoc << ' ' << l.src << " -> " << l.dst << ";\n";
    }

    void print_fixture(const ObjectDiagram& od) {
        os_ << pad() << "objects " << od.name << " {\n";
        ++indent_;
        for (const auto& o : od.objects) print_obj(o);
        for (const auto& l : od.links) print_link(l);
        --indent_;
        os_ << pad() << "}\n";
    }

    void print_message(const Message& m) {
        os_ << m.sender << " -> " << m.target << '.' << m.op << '(';
        for (std::size_t k = 0; k < m.args.size(); ++k) {
            if (k) os_ << ", ";
            os_ << value_str(m.args[k]);
        }
        os_ << ')';
    }

    void print_test(const TestCaseDecl& t) {
        os_ << pad() << "test " << t.name << " {\n";
        ++indent_;
        os_ << pad() << "fixture " << t.fixture << ";\n";
        os_ << pad() << "sd {\n";
        ++indent_;
        os_ << pad() << "trigger:\n";
        ++indent_;
        for (const auto& m : t.trigger) {
            os_ << pad();
            print_message(m);
            os_ << ";\n";
        }
        --indent_;
        for (const auto& step : t.steps) {
            if (step.kind == TestStep::Kind::Observe) {
                os_ << pad() << "observe: ";
                print_message(step.msg);
                os_ << ";\n";
            } else {
                os_ << pad() << "assert ";
                expr(step.expr);
                os_ << ";\n";
            }
        }
        --indent_;
        os_ << pad() << "}\n";
        if (t.oracle) {
            os_ << pad() << "oracle {\n";
            ++indent_;
            for (const auto& o : t.oracle->objects) print_obj(o);
            for (const auto& l : t.oracle->links) print_link(l);
            --indent_;
            os_ << pad() << "}\n";
        }
        --indent_;
        os_ << pad() << "}\n";
    }

    void print_sd(const SequenceDiagram& sd) {
        os_ << pad() << "sd " << sd.name << " {\n";
        ++indent_;
        for (const auto& m : sd.messages) {
            os_ << pad();
            print_message(m);
            os_ << ";\n";
        }
        --indent_;
        os_ << pad() << "}\n";
    }
};

}  // namespace detail

// Canonical form: two-space indentation, declaration order preserved, LF line
// endings. print(parse(print(m))) is byte-identical to print(m).
inline std::string print(const Model& m) {
    std::ostringstream os;
    detail::ModelPrinter(os).print(m);
    return os.str();
}

inline std::string print_expr(const ExprPtr& e) {
    std::ostringstream os;
    if (e) detail::print_expr_rec(os, *e, 0, false);
    return os.str();
}

}  // namespace amt
