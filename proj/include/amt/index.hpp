#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "amt/model.hpp"

namespace amt {

// Inheritance-flattened view of a class: every inherited and own member
// exactly once, supertype members first. Invariants keep their declaring
// class for reporting. The statechart is the most-derived one on the chain.
struct EffectiveClass {
    std::string name;
    Stereotype stereotype = Stereotype::None;
    std::vector<std::string> chain;  // root ancestor first, this class last
    std::vector<AttrDecl> attributes;
    std::vector<OpDecl> operations;
    std::vector<std::pair<std::string, ExprPtr>> invariants;  // (declaring class, expr)
    const Statechart* statechart = nullptr;
    std::string statechart_owner;

    const AttrDecl* find_attr(const std::string& n) const {
        for (const auto& a : attributes)
            if (a.name == n) return &a;
        return nullptr;
    }
    const OpDecl* find_op(const std::string& n) const {
        for (const auto& o : operations)
            if (o.name == n) return &o;
        return nullptr;
    }

    bool operator==(const EffectiveClass& o) const {
        if (name != o.name || stereotype != o.stereotype || chain != o.chain ||
            attributes != o.attributes || operations != o.operations ||
            statechart_owner != o.statechart_owner)
            return false;
        if ((statechart == nullptr) != (o.statechart == nullptr)) return false;
        if (statechart && !(*statechart == *o.statechart)) return false;
        if (invariants.size() != o.invariants.size()) return false;
        for (std::size_t k = 0; k < invariants.size(); ++k)
            if (invariants[k].first != o.invariants[k].first ||
                !expr_equal(invariants[k].second, o.invariants[k].second))
                return false;
        return true;
    }
};

// Name-resolution helper over a model. Tolerant of ill-formed input (cycle
// walks are guarded) so the well-formedness checker can use it too.
class ModelIndex {
public:
    explicit ModelIndex(const Model& m) : model_(&m) {
        for (const auto& c : m.classes) classes_.emplace(c.name, &c);
        for (const auto& a : m.associations) assocs_.emplace(a.name, &a);
    }

    const Model& model() const { return *model_; }

    const ClassDecl* find_class(const std::string& n) const {
        auto it = classes_.find(n);
        return it == classes_.end() ? nullptr : it->second;
    }
    const AssocDecl* find_assoc(const std::string& n) const {
        auto it = assocs_.find(n);
        return it == assocs_.end() ? nullptr : it->second;
    }

    // Chain from the root ancestor down to `cls`; empty when the class is
    // unknown, a supertype is unknown, or the chain has a cycle.
    std::vector<std::string> chain_of(const std::string& cls) const {
        std::vector<std::string> chain;
        std::set<std::string> seen;
        std::string cur = cls;
        for (;;) {
            const ClassDecl* c = find_class(cur);
            if (!c || seen.count(cur)) return {};
            seen.insert(cur);
            chain.push_back(cur);
            if (!c->superclass) break;
            cur = *c->superclass;
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
    }

    bool conforms(const std::string& sub, const std::string& super) const {
        std::set<std::string> seen;
        std::string cur = sub;
        while (true) {
            if (cur == super) return true;
            const ClassDecl* c = find_class(cur);
            if (!c || !c->superclass || seen.count(cur)) return false;
            seen.insert(cur);
            cur = *c->superclass;
        }
    }

    std::vector<const ClassDecl*> direct_subclasses(const std::string& cls) const {
        std::vector<const ClassDecl*> out;
        for (const auto& c : model_->classes)
            if (c.superclass && *c.superclass == cls) out.push_back(&c);
        return out;
    }

    std::vector<const ClassDecl*> transitive_subclasses(const std::string& cls) const {
        std::vector<const ClassDecl*> out;
        for (const auto& c : model_->classes)
            if (c.name != cls && conforms(c.name, cls)) out.push_back(&c);
        return out;
    }

    // Outgoing associations navigable from `cls` (declared on it or an
    // ancestor), in model declaration order.
    std::vector<const AssocDecl*> roles_of(const std::string& cls) const {
        std::vector<const AssocDecl*> out;
        for (const auto& a : model_->associations)
            if (conforms(cls, a.source)) out.push_back(&a);
        return out;
    }

    const AssocDecl* find_role(const std::string& cls, const std::string& role) const {
        for (const auto& a : model_->associations)
            if (a.role == role && conforms(cls, a.source)) return &a;
        return nullptr;
    }

private:
    const Model* model_;
    std::map<std::string, const ClassDecl*> classes_;
    std::map<std::string, const AssocDecl*> assocs_;
};

// Inheritance flattening, supertype members first. Requires a well-formed
// model; unknown classes (or broken chains) raise E_UNKNOWN_CLASS.
inline EffectiveClass flatten(const ModelIndex& index, const std::string& clsName) {
    auto chain = index.chain_of(clsName);
    if (chain.empty()) throw AmtError("E_UNKNOWN_CLASS", "unknown class '" + clsName + "'");

    EffectiveClass eff;
    eff.name = clsName;
    eff.chain = chain;
    const ClassDecl* self = index.find_class(clsName);
    eff.stereotype = self->stereotype;
    for (const auto& link : chain) {
        const ClassDecl* c = index.find_class(link);
        for (const auto& a : c->attributes) eff.attributes.push_back(a);
        for (const auto& o : c->operations) eff.operations.push_back(o);
        for (const auto& inv : c->invariants) eff.invariants.emplace_back(link, inv);
        if (c->statechart) {
            eff.statechart = &*c->statechart;
            eff.statechart_owner = link;
        }
    }
    return eff;
}

inline EffectiveClass flatten(const Model& m, const std::string& clsName) {
    ModelIndex index(m);
    return flatten(index, clsName);
}

}  // namespace amt
