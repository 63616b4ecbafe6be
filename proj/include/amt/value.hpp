#pragma once

#include <bit>
#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

namespace amt {

using ObjectId = std::uint32_t;

enum class PrimType { Integer, Real, Boolean, String };

inline const char* prim_name(PrimType t) {
    switch (t) {
        case PrimType::Integer: return "Integer";
        case PrimType::Real: return "Real";
        case PrimType::Boolean: return "Boolean";
        case PrimType::String: return "String";
    }
    return "?";
}

// Runtime value universe of constraint evaluation. Undefined is a first-class
// value: evaluation is total and never faults.
//
// Sets keep their canonical order (object creation order for refs) and hold
// no duplicates. Real comparison is exact bit equality by design; models that
// need tolerance spell it out as an expression.
struct Value {
    enum class Kind { Undefined, Int, Real, Bool, Str, Obj, Set, Seq };

    Kind kind = Kind::Undefined;
    std::int64_t i = 0;
    double r = 0.0;
    bool b = false;
    std::string s;
    ObjectId obj = 0;
    std::vector<Value> elems;  // Set / Seq

    static Value undefined() { return Value{}; }
    static Value of_int(std::int64_t v) {
        Value x;
        x.kind = Kind::Int;
        x.i = v;
        return x;
    }
    static Value of_real(double v) {
        Value x;
        x.kind = Kind::Real;
        x.r = v;
        return x;
    }
    static Value of_bool(bool v) {
        Value x;
        x.kind = Kind::Bool;
        x.b = v;
        return x;
    }
    static Value of_string(std::string v) {
        Value x;
        x.kind = Kind::Str;
        x.s = std::move(v);
        return x;
    }
    static Value of_object(ObjectId id) {
        Value x;
        x.kind = Kind::Obj;
        x.obj = id;
        return x;
    }
    static Value set(std::vector<Value> es) {
        Value x;
        x.kind = Kind::Set;
        x.elems = std::move(es);
        return x;
    }
    static Value seq(std::vector<Value> es) {
        Value x;
        x.kind = Kind::Seq;
        x.elems = std::move(es);
        return x;
    }

    bool is_undefined() const { return kind == Kind::Undefined; }
    bool is_true() const { return kind == Kind::Bool && b; }
    bool is_false() const { return kind == Kind::Bool && !b; }

    bool operator==(const Value& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
            case Kind::Undefined: return true;
            case Kind::Int: return i == o.i;
            case Kind::Real: return std::bit_cast<std::uint64_t>(r) == std::bit_cast<std::uint64_t>(o.r);
            case Kind::Bool: return b == o.b;
            case Kind::Str: return s == o.s;
            case Kind::Obj: return obj == o.obj;
            case Kind::Set:
            case Kind::Seq: return elems == o.elems;
        }
        return false;
    }
    bool operator!=(const Value& o) const { return !(*this == o); }
};

// Literal rendering used by the pretty-printer and trace output. Reals always
// carry a '.' or exponent so they reparse as Real.
inline std::string format_real(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string out(buf, res.ptr);
    if (out.find('.') == std::string::npos && out.find('e') == std::string::npos &&
        out.find("inf") == std::string::npos && out.find("nan") == std::string::npos)
        out += ".0";
    return out;
}

inline std::string value_str(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Undefined: return "Undefined";
        case Value::Kind::Int: return std::to_string(v.i);
        case Value::Kind::Real: return format_real(v.r);
        case Value::Kind::Bool: return v.b ? "true" : "false";
        case Value::Kind::Str: {
            std::string out = "\"";
            for (char c : v.s) {
                switch (c) {
                    case '"': out += "\\\""; break;
                    case '\\': out += "\\\\"; break;
                    case '\n': out += "\\n"; break;
                    case '\t': out += "\\t"; break;
                    case '\r': out += "\\r"; break;
                    default: out += c;
                }
            }
            return out + "\"";
        }
        case Value::Kind::Obj: return "@" + std::to_string(v.obj);
        case Value::Kind::Set:
        case Value::Kind::Seq: {
            std::string out = v.kind == Value::Kind::Set ? "Set{" : "Seq{";
            for (std::size_t k = 0; k < v.elems.size(); ++k) {
                if (k) out += ", ";
                out += value_str(v.elems[k]);
            }
            return out + "}";
        }
    }
    return "?";
}

}  // namespace amt
