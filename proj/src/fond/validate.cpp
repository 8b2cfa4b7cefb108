#include "fondltl/fond/validate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fondltl/compiler/compiler.hpp"
#include "fondltl/error.hpp"
#include "fondltl/temporal/semantics.hpp"

namespace fondltl::fond {

bool is_trans(const GroundAction& a) { return compiler::is_trans_name(a.schema); }

bool alternates(const Task& t, const ExecTrace& tr) {
    for (std::size_t i = 0; i < tr.actions.size(); ++i) {
        if (is_trans(t.actions.at(static_cast<std::size_t>(tr.actions[i]))) != (i % 2 == 1)) return false;
    }
    return tr.actions.size() % 2 == 0;
}

bool one_q_atom(const Task& t, const ExecTrace& tr) {
    for (const WorldState& s : tr.states) {
        const auto n = std::count_if(s.begin(), s.end(), [&](int id) {
            const std::string& a = t.atoms[static_cast<std::size_t>(id)];
            return compiler::is_q_name(a.substr(0, a.find('(')));
        });
        if (n != 1) return false;
    }
    return true;
}

temporal::Letter project(const Task& t, const WorldState& s, const std::vector<temporal::GroundedSymbol>& atoms) {
    temporal::Letter l = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const int id = t.atom_id(atoms[i].str());
        if (id >= 0 && std::binary_search(s.begin(), s.end(), id)) l |= temporal::Letter{1} << i;
    }
    return l;
}

temporal::Trace domain_trace(const Task& t, const ExecTrace& tr, const std::vector<temporal::GroundedSymbol>& atoms,
                             bool include_initial) {
    temporal::Trace out;
    out.atoms = atoms;
    if (include_initial) out.letters.push_back(project(t, tr.states.front(), atoms));
    for (std::size_t i = 0; i < tr.actions.size(); ++i) {
        if (!is_trans(t.actions.at(static_cast<std::size_t>(tr.actions[i])))) {
            out.letters.push_back(project(t, tr.states[i + 1], atoms));
        }
    }
    return out;
}

std::string describe(const temporal::Trace& tr) {
    std::string s = "[";
    for (std::size_t i = 0; i < tr.size(); ++i) {
        if (i > 0) s += ", ";
        s += '{';
        bool first = true;
        for (std::size_t k = 0; k < tr.atoms.size(); ++k) {
            if (((tr.letters[i] >> k) & 1U) == 0) continue;
            if (!first) s += ' ';
            s += tr.atoms[k].str();
            first = false;
        }
        s += '}';
    }
    return s + "]";
}

ValidationReport validate(const Task& t, const Policy& pi, const temporal::FormulaPtr& f,
                          const automaton::Dfa& dfa, bool eval_initial_state) {
    ValidationReport r;
    std::vector<ExecTrace> traces;
    try {
        traces = enumerate_traces(t, pi);
    } catch (const Error& e) {
        r.failure = std::string("policy cannot be replayed: ") + e.what();
        return r;
    }
    r.traces = traces.size();
    r.pass = true;
    for (const ExecTrace& tr : traces) {
        TraceVerdict v;
        v.projected = domain_trace(t, tr, dfa.atoms, eval_initial_state);
        v.automaton = dfa.accepts(v.projected.letters);
        // The empty trace has no finite-trace semantics; only the automaton
        // can judge it (it occurs when the initial automaton state accepts).
        v.semantics = v.projected.size() == 0 ? v.automaton : temporal::satisfies(f, v.projected);
        if (r.pass && !(v.semantics && v.automaton)) {
            r.pass = false;
            std::ostringstream os;
            os << "trace " << describe(v.projected) << " is " << (v.semantics ? "accepted" : "rejected")
               << " by the formula and " << (v.automaton ? "accepted" : "rejected") << " by the automaton; actions:";
            for (int a : tr.actions) os << ' ' << t.actions[static_cast<std::size_t>(a)].name;
            r.failure = os.str();
        }
        r.verdicts.push_back(std::move(v));
    }
    return r;
}

ControllerGraph controller_graph(const Task& t, const std::vector<ExecTrace>& traces, bool collapse_trans) {
    ControllerGraph g;
    std::map<WorldState, int> ids;
    auto node = [&](const WorldState& s) {
        auto [it, inserted] = ids.emplace(s, static_cast<int>(g.nodes.size()));
        if (inserted) {
            g.nodes.push_back(s);
            g.goal.push_back(t.is_goal(s));
        }
        return it->second;
    };
    auto edge = [&](int from, int to, const std::string& label) {
        ControllerGraph::Edge e{from, to, label};
        if (std::find(g.edges.begin(), g.edges.end(), e) == g.edges.end()) g.edges.push_back(std::move(e));
    };
    node(t.init);
    for (const ExecTrace& tr : traces) {
        if (collapse_trans && !alternates(t, tr)) {
            throw Error("cannot collapse trans edges: a trace does not alternate domain and trans actions");
        }
        const std::size_t step = collapse_trans ? 2 : 1;
        for (std::size_t i = 0; i + step <= tr.actions.size(); i += step) {
            const int from = node(tr.states[i]);
            const int to = node(tr.states[i + step]);
            edge(from, to, t.actions[static_cast<std::size_t>(tr.actions[i])].name);
        }
    }
    return g;
}

std::string to_dot(const ControllerGraph& g) {
    std::ostringstream os;
    os << "digraph policy {\n rankdir = LR;\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        os << " n" << i << " [shape = " << (g.goal[i] ? "doublecircle" : "circle") << "];\n";
    }
    for (const auto& e : g.edges) os << " n" << e.from << " -> n" << e.to << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace fondltl::fond
