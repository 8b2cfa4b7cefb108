#include <algorithm>

#include "fondltl/automaton/construct.hpp"
#include "fondltl/compiler/compiler.hpp"
#include "fondltl/error.hpp"

namespace fondltl::compiler {

using pddl::Formula;
using pddl::Predicate;
using pddl::Term;

namespace {

Predicate turn_domain() { return Predicate{std::string(kTurnDomain), {}}; }

}  // namespace

pddl::Domain rewrite_domain(const pddl::Domain& d, const std::vector<pddl::ActionSchema>& trans, int num_states,
                            const ObjectVarMap& map) {
    for (const Predicate& p : d.predicates) {
        if (p.name == kTurnDomain || is_q_name(p.name)) {
            throw SemanticError("domain '" + d.name + "' already declares predicate '" + p.name +
                                "', which the compilation reserves");
        }
    }
    for (const pddl::ActionSchema& a : d.actions) {
        if (is_trans_name(a.name)) {
            throw SemanticError("domain '" + d.name + "' already declares action '" + a.name +
                                "', which the compilation reserves");
        }
    }
    pddl::Domain out = d;
    for (pddl::ActionSchema& a : out.actions) {
        a.precondition = pddl::conjoin(std::move(a.precondition), Formula::atom(turn_domain()));
        a.effect = pddl::conjoin(std::move(a.effect), Formula::negated(turn_domain()));
    }
    out.actions.insert(out.actions.end(), trans.begin(), trans.end());
    out.predicates.push_back(turn_domain());
    for (int q = 1; q <= num_states; ++q) out.predicates.push_back(Predicate{q_name(q), map.parameters()});
    return out;
}

automaton::Letter initial_letter(const pddl::Problem& p, const automaton::Dfa& dfa) {
    automaton::Letter l = 0;
    for (std::size_t i = 0; i < dfa.atoms.size(); ++i) {
        const bool holds = std::any_of(p.init.begin(), p.init.end(), [&](const Predicate& a) {
            if (a.name != dfa.atoms[i].name || a.args.size() != dfa.atoms[i].objects.size()) return false;
            for (std::size_t k = 0; k < a.args.size(); ++k) {
                if (a.args[k].name != dfa.atoms[i].objects[k]) return false;
            }
            return true;
        });
        if (holds) l |= automaton::Letter{1} << i;
    }
    return l;
}

pddl::Problem rewrite_problem(const pddl::Problem& p, const automaton::Dfa& dfa, const ObjectVarMap& map,
                              bool eval_initial_state) {
    const std::vector<Term> objs = map.objects();
    pddl::Problem out = p;
    out.add_init(turn_domain());
    const int q0 = eval_initial_state ? dfa.step(dfa.initial, initial_letter(p, dfa)) : dfa.initial;
    out.add_init(Predicate{q_name(q0), objs});
    std::vector<Formula> finals;
    for (int q : dfa.accepting) finals.push_back(Formula::atom(Predicate{q_name(q), objs}));
    Formula accept = finals.size() == 1 ? std::move(finals.front()) : Formula::disj(std::move(finals));
    out.goal = Formula::conj({Formula::atom(turn_domain()), std::move(accept)});
    return out;
}

CompilationResult compile(const pddl::Domain& d, const pddl::Problem& p, const temporal::FormulaPtr& f,
                          const CompileOptions& opts) {
    if (p.domain_name != d.name) {
        throw SemanticError("problem '" + p.name + "' is for domain '" + p.domain_name + "', not '" + d.name + "'");
    }
    CompilationResult r;
    automaton::BuildOptions build;
    build.minimize = opts.minimize;
    r.dfa = automaton::formula_to_dfa(f, build);
    r.map = derive_parameters(d, r.dfa.atoms);
    for (const ObjectVar& e : r.map.entries) {
        const bool known = p.find_object(e.object) != nullptr ||
                           std::any_of(d.constants.begin(), d.constants.end(),
                                       [&](const Term& c) { return c.name == e.object; });
        if (!known) {
            throw SemanticError("object '" + e.object + "' of the goal formula is not declared in problem '" + p.name +
                                "'");
        }
    }
    const pddl::Domain simple = compile_conditional_effects(d);
    const std::vector<pddl::ActionSchema> trans = synthesize_trans(r.dfa, r.map);
    for (const pddl::ActionSchema& a : trans) r.trans_names.push_back(a.name);
    r.new_domain = rewrite_domain(simple, trans, r.dfa.num_states, r.map);
    r.new_problem = rewrite_problem(p, r.dfa, r.map, opts.eval_initial_state);
    return r;
}

}  // namespace fondltl::compiler
