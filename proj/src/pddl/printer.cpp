#include "fondltl/pddl/printer.hpp"

#include <sstream>

namespace fondltl::pddl {

namespace {

std::string term_ref(const Term& t) { return t.variable ? "?" + t.name : t.name; }

// Typed list as it appears in declarations: consecutive terms sharing a
// type are grouped, `a b - t c - u`.
std::string typed_list(const std::vector<Term>& ts) {
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!out.empty()) out += ' ';
        out += term_ref(ts[i]);
        const bool last_of_run = i + 1 == ts.size() || ts[i + 1].type != ts[i].type;
        if (last_of_run && ts[i].type) out += " - " + *ts[i].type;
    }
    return out;
}

// Every variable annotated individually, `?from - location ?to - location`.
std::string annotated_vars(const std::vector<Term>& ts) {
    std::string out;
    for (const Term& t : ts) {
        if (!out.empty()) out += ' ';
        out += to_string(t);
    }
    return out;
}

void write(std::ostringstream& os, const Formula& f) {
    using K = Formula::Kind;
    auto list = [&](const char* op) {
        os << '(' << op << ' ';
        for (std::size_t i = 0; i < f.children.size(); ++i) {
            if (i > 0) os << ' ';
            write(os, f.children[i]);
        }
        os << ')';
    };
    switch (f.kind) {
        case K::Literal:
            os << to_string(f.literal);
            break;
        case K::And:
            list("and");
            break;
        case K::Or:
            list("or");
            break;
        case K::OneOf:
            list("oneof");
            break;
        case K::Not:
            list("not");
            break;
        case K::Imply:
            list("imply");
            break;
        case K::When:
            list("when");
            break;
        case K::Forall:
        case K::Exists:
            os << '(' << (f.kind == K::Forall ? "forall" : "exists") << " (" << annotated_vars(f.bound) << ") ";
            write(os, f.children.front());
            os << ')';
            break;
    }
}

}  // namespace

std::string to_string(const Term& t) {
    std::string out = term_ref(t);
    if (t.type) out += " - " + *t.type;
    return out;
}

std::string to_string(const Predicate& p) {
    std::string out = "(" + p.name;
    for (const Term& t : p.args) out += " " + term_ref(t);
    return out + ")";
}

std::string to_string(const Literal& l) {
    return l.positive ? to_string(l.predicate) : "(not " + to_string(l.predicate) + ")";
}

std::string to_string(const Formula& f) {
    std::ostringstream os;
    write(os, f);
    return os.str();
}

std::string to_string(const ActionSchema& a) {
    std::ostringstream os;
    os << "  (:action " << a.name << '\n'
       << "    :parameters (" << annotated_vars(a.parameters) << ")\n"
       << "    :precondition " << to_string(a.precondition) << '\n'
       << "    :effect " << to_string(a.effect) << '\n'
       << "  )";
    return os.str();
}

std::string print_domain(const Domain& d) {
    std::ostringstream os;
    os << "(define (domain " << d.name << ")\n";
    if (!d.requirements.empty()) {
        os << "  (:requirements";
        for (const std::string& r : d.requirements) os << ' ' << r;
        os << ")\n";
    }
    if (!d.types.empty()) {
        std::vector<Term> as_terms;
        for (const TypeDecl& t : d.types) as_terms.push_back(Term::constant(t.name, t.parent));
        os << "  (:types " << typed_list(as_terms) << ")\n";
    }
    if (!d.constants.empty()) os << "  (:constants " << typed_list(d.constants) << ")\n";
    os << "  (:predicates";
    for (const Predicate& p : d.predicates) {
        os << " (" << p.name;
        if (!p.args.empty()) os << ' ' << annotated_vars(p.args);
        os << ')';
    }
    os << ")\n";
    for (const ActionSchema& a : d.actions) os << to_string(a) << '\n';
    os << ")\n";
    return os.str();
}

std::string print_problem(const Problem& p) {
    std::ostringstream os;
    os << "(define (problem " << p.name << ")\n"
       << "  (:domain " << p.domain_name << ")\n"
       << "  (:objects " << typed_list(p.objects) << ")\n"
       << "  (:init";
    for (const Predicate& a : p.init) os << ' ' << to_string(a);
    os << ")\n"
       << "  (:goal " << to_string(p.goal) << ")\n"
       << ")\n";
    return os.str();
}

}  // namespace fondltl::pddl
