#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fondltl::pddl {

/// A variable or a constant. Variable names are stored without the `?`.
struct Term {
    bool variable = false;
    std::string name;
    std::optional<std::string> type;

    static Term var(std::string name, std::optional<std::string> type = std::nullopt) {
        return Term{true, std::move(name), std::move(type)};
    }
    static Term constant(std::string name, std::optional<std::string> type = std::nullopt) {
        return Term{false, std::move(name), std::move(type)};
    }

    friend bool operator==(const Term&, const Term&) = default;
};

/// Atom `(name args...)`. The name `=` denotes equality.
struct Predicate {
    std::string name;
    std::vector<Term> args;

    std::size_t arity() const { return args.size(); }
    bool is_equality() const { return name == "="; }

    friend bool operator==(const Predicate&, const Predicate&) = default;
};

struct Literal {
    Predicate predicate;
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

/// Condition or effect formula. Which kinds may appear where is enforced by
/// the parser: `oneof` and `when` only in effects, `or`, `imply` and `exists`
/// only in conditions.
struct Formula {
    enum class Kind { Literal, And, Or, Not, Imply, Forall, Exists, When, OneOf };

    Kind kind = Kind::And;
    Literal literal;                 // Kind::Literal
    std::vector<Formula> children;   // And/Or/OneOf: operands; Not: [sub];
                                     // Imply: [lhs, rhs]; When: [cond, effect];
                                     // Forall/Exists: [body]
    std::vector<Term> bound;         // Forall/Exists

    static Formula lit(Literal l) {
        Formula f;
        f.kind = Kind::Literal;
        f.literal = std::move(l);
        return f;
    }
    static Formula atom(Predicate p) { return lit(Literal{std::move(p), true}); }
    static Formula negated(Predicate p) { return lit(Literal{std::move(p), false}); }
    static Formula conj(std::vector<Formula> xs) { return nary(Kind::And, std::move(xs)); }
    static Formula disj(std::vector<Formula> xs) { return nary(Kind::Or, std::move(xs)); }
    static Formula oneof(std::vector<Formula> xs) { return nary(Kind::OneOf, std::move(xs)); }
    static Formula negation(Formula sub) { return nary(Kind::Not, {std::move(sub)}); }
    static Formula imply(Formula lhs, Formula rhs) {
        return nary(Kind::Imply, {std::move(lhs), std::move(rhs)});
    }
    static Formula when(Formula cond, Formula effect) {
        return nary(Kind::When, {std::move(cond), std::move(effect)});
    }
    static Formula quantified(Kind k, std::vector<Term> vars, Formula body) {
        Formula f = nary(k, {std::move(body)});
        f.bound = std::move(vars);
        return f;
    }

    bool is(Kind k) const { return kind == k; }

    friend bool operator==(const Formula&, const Formula&) = default;

private:
    static Formula nary(Kind k, std::vector<Formula> xs) {
        Formula f;
        f.kind = k;
        f.children = std::move(xs);
        return f;
    }
};

struct ActionSchema {
    std::string name;
    std::vector<Term> parameters;
    Formula precondition = Formula::conj({});
    Formula effect = Formula::conj({});

    friend bool operator==(const ActionSchema&, const ActionSchema&) = default;
};

struct TypeDecl {
    std::string name;
    std::optional<std::string> parent;

    friend bool operator==(const TypeDecl&, const TypeDecl&) = default;
};

struct Domain {
    std::string name;
    std::vector<std::string> requirements;
    std::vector<TypeDecl> types;
    std::vector<Term> constants;
    std::vector<Predicate> predicates;
    std::vector<ActionSchema> actions;

    const Predicate* find_predicate(const std::string& name) const;
    const ActionSchema* find_action(const std::string& name) const;
    bool has_requirement(const std::string& req) const;
    /// True when `type` equals `ancestor` or inherits from it; `object` is
    /// the implicit root.
    bool is_subtype(const std::string& type, const std::string& ancestor) const;

    friend bool operator==(const Domain&, const Domain&) = default;
};

struct Problem {
    std::string name;
    std::string domain_name;
    std::vector<Term> objects;       // constants, type optional
    std::vector<Predicate> init;     // ground atoms, insertion order, no duplicates
    Formula goal = Formula::conj({});

    /// Objects grouped by type name; untyped objects go under "".
    std::vector<std::pair<std::string, std::vector<std::string>>> objects_by_type() const;
    const Term* find_object(const std::string& name) const;
    /// Appends `atom` unless already present.
    void add_init(Predicate atom);

    friend bool operator==(const Problem&, const Problem&) = default;
};

/// Free variables of `f` (variables not bound by an enclosing forall/exists),
/// in order of first occurrence.
std::vector<std::string> free_variables(const Formula& f);

/// `lhs ∧ rhs`, appending to `lhs` when it already is a conjunction.
Formula conjoin(Formula lhs, Formula rhs);

/// Removes nested conjunctions and collapses singleton conjunctions.
Formula flatten_and(Formula f);

}  // namespace fondltl::pddl
