#include "fondltl/compiler/compiler.hpp"
#include "fondltl/error.hpp"

namespace fondltl::compiler {

using pddl::Formula;
using K = pddl::Formula::Kind;

namespace {

bool contains(const Formula& f, K kind) {
    if (f.is(kind)) return true;
    for (const Formula& c : f.children) {
        if (contains(c, kind)) return true;
    }
    return false;
}

void check_simple(const pddl::ActionSchema& a, const Formula& when) {
    const Formula& cond = when.children[0];
    const Formula& body = when.children[1];
    if (contains(cond, K::When) || contains(body, K::When) || contains(body, K::Forall) || contains(body, K::OneOf)) {
        throw UnsupportedError("action '" + a.name +
                               "' has a nested conditional effect; only simple conditional effects can be compiled");
    }
}

Formula conj_flat(std::vector<Formula> xs) { return pddl::flatten_and(Formula::conj(std::move(xs))); }

}  // namespace

pddl::Domain compile_conditional_effects(const pddl::Domain& d) {
    pddl::Domain out = d;
    out.actions.clear();
    for (const pddl::ActionSchema& a : d.actions) {
        if (a.effect.is(K::When)) {
            check_simple(a, a.effect);
            pddl::ActionSchema b = a;
            b.precondition = conj_flat({a.effect.children[0], a.precondition});
            b.effect = a.effect.children[1];
            out.actions.push_back(std::move(b));
            continue;
        }
        std::vector<const Formula*> whens;
        std::vector<Formula> rest;
        if (a.effect.is(K::And)) {
            for (const Formula& c : a.effect.children) {
                if (c.is(K::When)) {
                    check_simple(a, c);
                    whens.push_back(&c);
                } else {
                    rest.push_back(c);
                }
            }
        }
        for (const Formula& c : rest) {
            if (contains(c, K::When)) {
                throw UnsupportedError("action '" + a.name +
                                       "' has a conditional effect below oneof or forall; only simple conditional "
                                       "effects can be compiled");
            }
        }
        if (whens.empty()) {
            if (contains(a.effect, K::When)) {
                throw UnsupportedError("action '" + a.name + "' has a nested conditional effect");
            }
            out.actions.push_back(a);
            continue;
        }
        for (std::size_t i = 0; i < whens.size(); ++i) {
            pddl::ActionSchema b;
            b.name = a.name + "-" + std::to_string(i);
            if (d.find_action(b.name) != nullptr) {
                throw SemanticError("splitting action '" + a.name + "' would clash with existing action '" + b.name +
                                    "'");
            }
            b.parameters = a.parameters;
            b.precondition = conj_flat({whens[i]->children[0], a.precondition});
            std::vector<Formula> eff{whens[i]->children[1]};
            eff.insert(eff.end(), rest.begin(), rest.end());
            b.effect = conj_flat(std::move(eff));
            out.actions.push_back(std::move(b));
        }
    }
    return out;
}

}  // namespace fondltl::compiler
