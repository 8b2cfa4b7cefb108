#include "fondltl/pddl/ast.hpp"

#include <algorithm>

namespace fondltl::pddl {

const Predicate* Domain::find_predicate(const std::string& pred_name) const {
    auto it = std::find_if(predicates.begin(), predicates.end(),
                           [&](const Predicate& p) { return p.name == pred_name; });
    return it == predicates.end() ? nullptr : &*it;
}

const ActionSchema* Domain::find_action(const std::string& action_name) const {
    auto it = std::find_if(actions.begin(), actions.end(),
                           [&](const ActionSchema& a) { return a.name == action_name; });
    return it == actions.end() ? nullptr : &*it;
}

bool Domain::has_requirement(const std::string& req) const {
    return std::find(requirements.begin(), requirements.end(), req) != requirements.end();
}

bool Domain::is_subtype(const std::string& type, const std::string& ancestor) const {
    if (ancestor == "object") return true;
    std::string current = type;
    // Bounded walk so a cyclic type declaration cannot hang us.
    for (std::size_t guard = 0; guard <= types.size(); ++guard) {
        if (current == ancestor) return true;
        auto it = std::find_if(types.begin(), types.end(),
                               [&](const TypeDecl& t) { return t.name == current; });
        if (it == types.end() || !it->parent) return false;
        current = *it->parent;
    }
    return false;
}

std::vector<std::pair<std::string, std::vector<std::string>>> Problem::objects_by_type() const {
    std::vector<std::pair<std::string, std::vector<std::string>>> groups;
    for (const Term& o : objects) {
        const std::string key = o.type.value_or("");
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == key; });
        if (it == groups.end()) {
            groups.push_back({key, {o.name}});
        } else {
            it->second.push_back(o.name);
        }
    }
    return groups;
}

const Term* Problem::find_object(const std::string& obj) const {
    auto it = std::find_if(objects.begin(), objects.end(),
                           [&](const Term& t) { return t.name == obj; });
    return it == objects.end() ? nullptr : &*it;
}

void Problem::add_init(Predicate atom) {
    if (std::find(init.begin(), init.end(), atom) == init.end()) init.push_back(std::move(atom));
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
    using K = Formula::Kind;
    if (f.kind == K::Literal) {
        for (const Term& t : f.literal.predicate.args) {
            if (!t.variable) continue;
            if (std::find(bound.begin(), bound.end(), t.name) != bound.end()) continue;
            if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
        }
        return;
    }
    const std::size_t mark = bound.size();
    if (f.kind == K::Forall || f.kind == K::Exists) {
        for (const Term& v : f.bound) bound.push_back(v.name);
    }
    for (const Formula& c : f.children) collect_free(c, bound, out);
    bound.resize(mark);
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
    std::vector<std::string> bound;
    std::vector<std::string> out;
    collect_free(f, bound, out);
    return out;
}

Formula conjoin(Formula lhs, Formula rhs) {
    if (lhs.is(Formula::Kind::And)) {
        lhs.children.push_back(std::move(rhs));
        return lhs;
    }
    return Formula::conj({std::move(lhs), std::move(rhs)});
}

Formula flatten_and(Formula f) {
    if (!f.is(Formula::Kind::And)) return f;
    std::vector<Formula> flat;
    for (Formula& c : f.children) {
        Formula fc = flatten_and(std::move(c));
        if (fc.is(Formula::Kind::And)) {
            for (Formula& g : fc.children) flat.push_back(std::move(g));
        } else {
            flat.push_back(std::move(fc));
        }
    }
    if (flat.size() == 1) return std::move(flat.front());
    return Formula::conj(std::move(flat));
}

}  // namespace fondltl::pddl
