#include <algorithm>
#include <cctype>

#include "fondltl/compiler/compiler.hpp"
#include "fondltl/error.hpp"

namespace fondltl::compiler {

using pddl::Formula;
using pddl::Predicate;
using pddl::Term;

namespace {

bool digits_only(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

std::string q_name(int state) { return "q" + std::to_string(state); }

bool is_q_name(std::string_view name) { return name.size() > 1 && name[0] == 'q' && digits_only(name.substr(1)); }

bool is_trans_name(std::string_view name) {
    return name.rfind("trans-", 0) == 0 && digits_only(name.substr(6));
}

std::vector<Term> ObjectVarMap::parameters() const {
    std::vector<Term> out;
    for (const ObjectVar& e : entries) out.push_back(Term::var(e.variable, e.type));
    return out;
}

std::vector<Term> ObjectVarMap::objects() const {
    std::vector<Term> out;
    for (const ObjectVar& e : entries) out.push_back(Term::constant(e.object));
    return out;
}

const ObjectVar* ObjectVarMap::find(std::string_view object) const {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const ObjectVar& e) { return e.object == object; });
    return it == entries.end() ? nullptr : &*it;
}

Term ObjectVarMap::variable(std::string_view object) const {
    const ObjectVar* e = find(object);
    if (e == nullptr) throw Error("object '" + std::string(object) + "' is not mapped to a variable");
    return Term::var(e->variable);
}

ObjectVarMap derive_parameters(const pddl::Domain& d, const std::vector<temporal::GroundedSymbol>& atoms) {
    ObjectVarMap map;
    for (const temporal::GroundedSymbol& a : atoms) {
        const Predicate* decl = d.find_predicate(a.name);
        if (decl == nullptr) {
            throw SemanticError("predicate '" + a.name + "' of the goal formula is not declared in domain '" + d.name +
                                "'; please check the formula");
        }
        if (decl->arity() != a.objects.size()) {
            throw SemanticError("'" + a.str() + "' has " + std::to_string(a.objects.size()) + " arguments but '" +
                                a.name + "' is declared with " + std::to_string(decl->arity()) +
                                "; please check the formula");
        }
        for (std::size_t i = 0; i < a.objects.size(); ++i) {
            const Term& arg = decl->args[i];
            const std::string& obj = a.objects[i];
            auto it = std::find_if(map.entries.begin(), map.entries.end(),
                                   [&](const ObjectVar& e) { return e.object == obj; });
            if (it == map.entries.end()) {
                map.entries.push_back({obj, arg.name + std::to_string(map.entries.size()), arg.type});
                continue;
            }
            // A later occurrence may only narrow the type along the hierarchy.
            const std::string have = it->type.value_or("object");
            const std::string want = arg.type.value_or("object");
            if (d.is_subtype(want, have)) {
                if (arg.type) it->type = arg.type;
            } else if (!d.is_subtype(have, want)) {
                throw SemanticError("object '" + obj + "' is used both as '" + have + "' and as '" + want +
                                    "'; please check the formula");
            }
        }
    }
    return map;
}

namespace {

std::vector<Term> vars_of(const ObjectVarMap& map) {
    std::vector<Term> out;
    for (const ObjectVar& e : map.entries) out.push_back(Term::var(e.variable));
    return out;
}

Formula q_atom(int state, const std::vector<Term>& args) { return Formula::atom(Predicate{q_name(state), args}); }

Formula turn_domain() { return Formula::atom(Predicate{std::string(kTurnDomain), {}}); }

// q_src(vars) ∧ the literals the guard fixes; a lone literal stays bare.
Formula disjunct(int src, const automaton::Guard& g, const automaton::Dfa& dfa, const ObjectVarMap& map,
                 const std::vector<Term>& vars) {
    std::vector<Formula> lits{q_atom(src, vars)};
    for (std::size_t i = 0; i < g.bits.size(); ++i) {
        if (g.bits[i] == 'X') continue;
        Predicate p{dfa.atoms[i].name, {}};
        for (const std::string& o : dfa.atoms[i].objects) p.args.push_back(map.variable(o));
        lits.push_back(g.bits[i] == '1' ? Formula::atom(std::move(p)) : Formula::negated(std::move(p)));
    }
    return lits.size() == 1 ? std::move(lits.front()) : Formula::conj(std::move(lits));
}

}  // namespace

std::vector<pddl::ActionSchema> synthesize_trans(const automaton::Dfa& dfa, const ObjectVarMap& map) {
    const std::vector<Term> vars = vars_of(map);
    std::vector<pddl::ActionSchema> out;
    for (int dest = 1; dest <= dfa.num_states; ++dest) {
        std::vector<Formula> sources;
        for (int src = 1; src <= dfa.num_states; ++src) {
            for (const automaton::Transition& t : dfa.out(src)) {
                if (t.dest == dest) sources.push_back(disjunct(src, t.guard, dfa, map, vars));
            }
        }
        if (sources.empty()) continue;

        pddl::ActionSchema a;
        a.name = "trans-" + std::to_string(out.size());
        a.parameters = map.parameters();
        std::vector<Formula> pre;
        if (sources.size() == 1) {
            pre.push_back(std::move(sources.front()));
        } else {
            pre.push_back(Formula::disj(std::move(sources)));
        }
        pre.push_back(Formula::negated(Predicate{std::string(kTurnDomain), {}}));
        a.precondition = pddl::flatten_and(Formula::conj(std::move(pre)));
        std::vector<Formula> eff{q_atom(dest, vars)};
        for (int s = 1; s <= dfa.num_states; ++s) {
            if (s != dest) eff.push_back(Formula::negated(Predicate{q_name(s), vars}));
        }
        eff.push_back(turn_domain());
        a.effect = Formula::conj(std::move(eff));
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace fondltl::compiler
