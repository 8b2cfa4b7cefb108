#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <unordered_map>

#include "fondltl/error.hpp"
#include "fondltl/fond/task.hpp"

namespace fondltl::fond {

using pddl::Formula;
using FK = pddl::Formula::Kind;
using CK = Condition::Kind;

std::string ground_name(const std::string& name, const std::vector<std::string>& args) {
    if (args.empty()) return name;
    std::string s = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) s += ',';
        s += args[i];
    }
    return s + ")";
}

bool Condition::holds(const WorldState& s) const {
    switch (kind) {
        case CK::True:
            return true;
        case CK::False:
            return false;
        case CK::Atom:
            return std::binary_search(s.begin(), s.end(), atom);
        case CK::Not:
            return !children[0].holds(s);
        case CK::And:
            return std::all_of(children.begin(), children.end(), [&](const Condition& c) { return c.holds(s); });
        case CK::Or:
            return std::any_of(children.begin(), children.end(), [&](const Condition& c) { return c.holds(s); });
    }
    return false;
}

bool applicable(const WorldState& s, const GroundAction& a) { return a.precondition.holds(s); }

WorldState apply(const WorldState& s, const Outcome& o) {
    WorldState kept;
    std::set_difference(s.begin(), s.end(), o.del.begin(), o.del.end(), std::back_inserter(kept));
    WorldState out;
    std::set_union(kept.begin(), kept.end(), o.add.begin(), o.add.end(), std::back_inserter(out));
    return out;
}

int Task::atom_id(const std::string& name) const {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), name);
    return it != atoms.end() && *it == name ? static_cast<int>(it - atoms.begin()) : -1;
}

int Task::action_id(const std::string& name) const {
    auto it = std::lower_bound(actions.begin(), actions.end(), name,
                               [](const GroundAction& a, const std::string& n) { return a.name < n; });
    return it != actions.end() && it->name == name ? static_cast<int>(it - actions.begin()) : -1;
}

std::vector<WorldState> Task::successors(const WorldState& s, const GroundAction& a) const {
    std::vector<WorldState> out;
    for (const Outcome& o : a.outcomes) {
        WorldState t = apply(s, o);
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
    }
    return out;
}

std::string Task::str(const WorldState& s) const {
    std::string out;
    for (int id : s) {
        if (!out.empty()) out += ' ';
        out += atoms.at(static_cast<std::size_t>(id));
    }
    return out;
}

WorldState Task::parse_state(const std::string& text) const {
    WorldState s;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(' ', pos);
        if (end == std::string::npos) end = text.size();
        if (end > pos) {
            const std::string name = text.substr(pos, end - pos);
            const int id = atom_id(name);
            if (id < 0) throw PolicyError("unknown atom '" + name + "'");
            s.push_back(id);
        }
        pos = end + 1;
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

namespace {

struct Object {
    std::string name;
    std::string type;
};

struct RawOutcome {
    std::vector<std::string> add;
    std::vector<std::string> del;
};

// A ground action whose outcomes still name their atoms.
struct RawAction {
    GroundAction action;
    std::vector<RawOutcome> outcomes;
};

void collect(const Condition& c, std::set<std::string>& names) {
    if (c.kind == CK::Atom) names.insert(c.name);
    for (const Condition& x : c.children) collect(x, names);
}

void intern(Condition& c, const std::unordered_map<std::string, int>& ids) {
    if (c.kind == CK::Atom) {
        c.atom = ids.at(c.name);
        c.name.clear();
    }
    for (Condition& x : c.children) intern(x, ids);
}

std::vector<int> to_ids(const std::vector<std::string>& names, const std::unordered_map<std::string, int>& ids) {
    std::vector<int> out;
    for (const std::string& n : names) out.push_back(ids.at(n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

class Grounder {
public:
    Grounder(const pddl::Domain& d, const pddl::Problem& p) : d_(d) {
        auto add = [&](const pddl::Term& t) {
            if (std::none_of(objects_.begin(), objects_.end(), [&](const Object& o) { return o.name == t.name; })) {
                objects_.push_back({t.name, t.type.value_or("object")});
            }
        };
        for (const pddl::Term& t : d.constants) add(t);
        for (const pddl::Term& t : p.objects) add(t);
    }

    std::vector<std::string> candidates(const std::optional<std::string>& type) const {
        std::vector<std::string> out;
        for (const Object& o : objects_) {
            if (!type || d_.is_subtype(o.type, *type)) out.push_back(o.name);
        }
        return out;
    }

    std::vector<RawAction> schema(const pddl::ActionSchema& a) const {
        std::vector<RawAction> out;
        std::vector<std::vector<std::string>> domains;
        for (const pddl::Term& t : a.parameters) domains.push_back(candidates(t.type));
        std::map<std::string, std::string> binding;
        std::vector<std::string> args(a.parameters.size());
        bind(a, domains, 0, binding, args, out);
        return out;
    }

    Condition condition(const Formula& f, std::map<std::string, std::string>& b) const {
        switch (f.kind) {
            case FK::Literal: {
                const pddl::Predicate& p = f.literal.predicate;
                Condition c;
                if (p.is_equality()) {
                    const bool same = resolve(p.args[0], b) == resolve(p.args[1], b);
                    c.kind = same == f.literal.positive ? CK::True : CK::False;
                    return c;
                }
                c.kind = CK::Atom;
                c.name = atom_name(p, b);
                return f.literal.positive ? c : negate(std::move(c));
            }
            case FK::And:
            case FK::Or: {
                std::vector<Condition> xs;
                for (const Formula& x : f.children) xs.push_back(condition(x, b));
                return junction(f.is(FK::And) ? CK::And : CK::Or, std::move(xs));
            }
            case FK::Not:
                return negate(condition(f.children[0], b));
            case FK::Imply:
                return junction(CK::Or, {negate(condition(f.children[0], b)), condition(f.children[1], b)});
            case FK::Forall:
            case FK::Exists: {
                std::vector<Condition> xs;
                quantify(f, 0, b, xs);
                return junction(f.is(FK::Forall) ? CK::And : CK::Or, std::move(xs));
            }
            default:
                throw SemanticError("'" + std::string(f.is(FK::When) ? "when" : "oneof") + "' inside a condition");
        }
    }

    std::vector<RawOutcome> effect(const Formula& f, std::map<std::string, std::string>& b,
                                   const std::string& action) const {
        switch (f.kind) {
            case FK::Literal: {
                if (f.literal.predicate.is_equality()) throw SemanticError("'=' in the effect of '" + action + "'");
                RawOutcome o;
                (f.literal.positive ? o.add : o.del).push_back(atom_name(f.literal.predicate, b));
                return {o};
            }
            case FK::And: {
                std::vector<RawOutcome> acc{RawOutcome{}};
                for (const Formula& x : f.children) {
                    std::vector<RawOutcome> part = effect(x, b, action);
                    std::vector<RawOutcome> next;
                    for (const RawOutcome& l : acc) {
                        for (const RawOutcome& r : part) {
                            RawOutcome o = l;
                            o.add.insert(o.add.end(), r.add.begin(), r.add.end());
                            o.del.insert(o.del.end(), r.del.begin(), r.del.end());
                            next.push_back(std::move(o));
                        }
                    }
                    acc = std::move(next);
                }
                return acc;
            }
            case FK::OneOf: {
                std::vector<RawOutcome> out;
                for (const Formula& x : f.children) {
                    std::vector<RawOutcome> part = effect(x, b, action);
                    out.insert(out.end(), part.begin(), part.end());
                }
                return out;
            }
            case FK::When:
            case FK::Forall:
                throw UnsupportedError("action '" + action + "' still has a " +
                                       (f.is(FK::When) ? "conditional" : "universally quantified") +
                                       " effect; compile it away before grounding");
            default:
                throw SemanticError("malformed effect in action '" + action + "'");
        }
    }

private:
    const pddl::Domain& d_;
    std::vector<Object> objects_;

    static std::string resolve(const pddl::Term& t, const std::map<std::string, std::string>& b) {
        if (!t.variable) return t.name;
        auto it = b.find(t.name);
        if (it == b.end()) throw SemanticError("unbound variable ?" + t.name);
        return it->second;
    }

    static std::string atom_name(const pddl::Predicate& p, const std::map<std::string, std::string>& b) {
        std::vector<std::string> args;
        for (const pddl::Term& t : p.args) args.push_back(resolve(t, b));
        return ground_name(p.name, args);
    }

    static Condition negate(Condition c) {
        if (c.kind == CK::True || c.kind == CK::False) {
            c.kind = c.kind == CK::True ? CK::False : CK::True;
            return c;
        }
        if (c.kind == CK::Not) return std::move(c.children[0]);
        Condition n;
        n.kind = CK::Not;
        n.children.push_back(std::move(c));
        return n;
    }

    // And/Or with constant folding.
    static Condition junction(CK kind, std::vector<Condition> xs) {
        const CK unit = kind == CK::And ? CK::True : CK::False;
        const CK zero = kind == CK::And ? CK::False : CK::True;
        Condition out;
        out.kind = kind;
        for (Condition& x : xs) {
            if (x.kind == zero) {
                Condition z;
                z.kind = zero;
                return z;
            }
            if (x.kind == unit) continue;
            if (x.kind == kind) {
                for (Condition& y : x.children) out.children.push_back(std::move(y));
            } else {
                out.children.push_back(std::move(x));
            }
        }
        if (out.children.empty()) {
            Condition u;
            u.kind = unit;
            return u;
        }
        if (out.children.size() == 1) return std::move(out.children.front());
        return out;
    }

    void quantify(const Formula& f, std::size_t i, std::map<std::string, std::string>& b,
                  std::vector<Condition>& out) const {
        if (i == f.bound.size()) {
            out.push_back(condition(f.children[0], b));
            return;
        }
        const pddl::Term& v = f.bound[i];
        const auto saved = b.find(v.name) == b.end() ? std::optional<std::string>{} : b[v.name];
        for (const std::string& o : candidates(v.type)) {
            b[v.name] = o;
            quantify(f, i + 1, b, out);
        }
        if (saved) {
            b[v.name] = *saved;
        } else {
            b.erase(v.name);
        }
    }

    void bind(const pddl::ActionSchema& a, const std::vector<std::vector<std::string>>& domains, std::size_t i,
              std::map<std::string, std::string>& b, std::vector<std::string>& args,
              std::vector<RawAction>& out) const {
        if (i == domains.size()) {
            Condition pre = condition(a.precondition, b);
            if (pre.kind == CK::False) return;
            RawAction r;
            r.action.schema = a.name;
            r.action.args = args;
            r.action.name = ground_name(a.name, args);
            r.action.precondition = std::move(pre);
            r.outcomes = effect(a.effect, b, a.name);
            out.push_back(std::move(r));
            return;
        }
        for (const std::string& o : domains[i]) {
            b[a.parameters[i].name] = o;
            args[i] = o;
            bind(a, domains, i + 1, b, args, out);
        }
        b.erase(a.parameters[i].name);
    }
};

}  // namespace

Task ground(const pddl::Domain& d, const pddl::Problem& p, const GroundOptions& opts) {
    const Grounder g(d, p);
    const long n = static_cast<long>(d.actions.size());
    std::vector<std::vector<RawAction>> per_schema(d.actions.size());
    std::vector<std::exception_ptr> errors(d.actions.size());
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (long i = 0; i < n; ++i) {
        try {
            per_schema[static_cast<std::size_t>(i)] = g.schema(d.actions[static_cast<std::size_t>(i)]);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    // Report the first failing schema in declaration order, as a serial run would.
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::vector<RawAction> raw;
    for (auto& v : per_schema) {
        for (RawAction& r : v) raw.push_back(std::move(r));
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const RawAction& a, const RawAction& b) { return a.action.name < b.action.name; });

    std::map<std::string, std::string> empty;
    Condition goal = g.condition(p.goal, empty);
    std::vector<std::string> init_names;
    for (const pddl::Predicate& a : p.init) {
        std::vector<std::string> args;
        for (const pddl::Term& t : a.args) args.push_back(t.name);
        init_names.push_back(ground_name(a.name, args));
    }

    std::set<std::string> names(init_names.begin(), init_names.end());
    collect(goal, names);
    for (const RawAction& r : raw) {
        collect(r.action.precondition, names);
        for (const RawOutcome& o : r.outcomes) {
            names.insert(o.add.begin(), o.add.end());
            names.insert(o.del.begin(), o.del.end());
        }
    }
    Task t;
    t.atoms.assign(names.begin(), names.end());
    std::unordered_map<std::string, int> ids;
    for (std::size_t i = 0; i < t.atoms.size(); ++i) ids.emplace(t.atoms[i], static_cast<int>(i));

    t.init = to_ids(init_names, ids);
    intern(goal, ids);
    t.goal = std::move(goal);
    for (RawAction& r : raw) {
        GroundAction a = std::move(r.action);
        intern(a.precondition, ids);
        for (const RawOutcome& o : r.outcomes) {
            Outcome out{to_ids(o.add, ids), to_ids(o.del, ids)};
            // An atom both added and deleted ends up true.
            std::vector<int> del;
            std::set_difference(out.del.begin(), out.del.end(), out.add.begin(), out.add.end(),
                                std::back_inserter(del));
            out.del = std::move(del);
            a.outcomes.push_back(std::move(out));
        }
        t.actions.push_back(std::move(a));
    }
    return t;
}

}  // namespace fondltl::fond
