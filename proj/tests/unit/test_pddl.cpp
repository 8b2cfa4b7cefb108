#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fondltl/error.hpp"
#include "fondltl/pddl.hpp"
#include "support/corpus.hpp"

using namespace fondltl;
using namespace fondltl::pddl;

TEST_CASE("hanoi domain") {
    const Domain d = parse_domain(corpus::read("hanoi-domain.pddl"));
    CHECK(d.name == "hanoi");
    CHECK(d.actions.size() == 1);
    CHECK(d.actions[0].name == "move");
    CHECK(d.predicates.size() == 3);
}

TEST_CASE("triangle-tire domain") {
    const Domain d = parse_domain(corpus::read("triangle-tire.pddl"));
    REQUIRE(d.actions.size() == 2);
    const ActionSchema* mc = d.find_action("move-car");
    REQUIRE(mc != nullptr);
    CHECK(mc->effect.is(Formula::Kind::OneOf));
    CHECK(mc->effect.children.size() == 2);
    CHECK(mc->parameters.size() == 2);
    CHECK(mc->parameters[0] == Term::var("from", "location"));
}

TEST_CASE("hanoi problem") {
    const Problem p = parse_problem(corpus::read("hanoi-prob.pddl"));
    CHECK(p.objects.size() == 6);
    CHECK(p.init.size() == 18);
    REQUIRE(p.goal.is(Formula::Kind::And));
    CHECK(p.goal.children.size() == 3);
}

TEST_CASE("triangle-tire-1 problem") {
    const Problem p = parse_problem(corpus::read("triangle-tire-1.pddl"));
    CHECK(p.objects.size() == 9);
    for (const Term& o : p.objects) CHECK(o.type == std::optional<std::string>("location"));
    REQUIRE(p.goal.is(Formula::Kind::Literal));
    CHECK(p.goal.literal.predicate.name == "vehicleat");
    CHECK(p.goal.literal.predicate.args[0].name == "l13");
    CHECK_NOTHROW(check_problem(parse_domain(corpus::read("triangle-tire.pddl")), p));
}

TEST_CASE("undeclared predicate") {
    const char* text = R"((define (domain d) (:predicates (p))
        (:action a :parameters () :precondition (p) :effect (q))))";
    CHECK_THROWS_AS(parse_domain(text), SemanticError);
}

TEST_CASE("non-ground init atom") {
    const char* text = R"((define (problem p) (:domain hanoi) (:objects d2) (:init (on ?x d2)) (:goal (on d2 d2))))";
    CHECK_THROWS_AS(parse_problem(text), Error);
}

TEST_CASE("syntax errors carry a line") {
    try {
        parse_domain("(define (domain d)\n  (:predicates (p)\n");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line() > 0);
    }
}

TEST_CASE("placement rules") {
    const char* oneof_in_pre = R"((define (domain d) (:requirements :non-deterministic) (:predicates (p) (q))
        (:action a :parameters () :precondition (oneof (p) (q)) :effect (p))))";
    CHECK_THROWS_AS(parse_domain(oneof_in_pre), Error);
    const char* or_in_eff = R"((define (domain d) (:predicates (p) (q))
        (:action a :parameters () :precondition (p) :effect (or (p) (q)))))";
    CHECK_THROWS_AS(parse_domain(or_in_eff), Error);
    const char* single_oneof = R"((define (domain d) (:requirements :non-deterministic) (:predicates (p))
        (:action a :parameters () :precondition (p) :effect (oneof (p)))))";
    CHECK_THROWS_AS(parse_domain(single_oneof), Error);
}

TEST_CASE("arity and free variables are checked") {
    const char* arity = R"((define (domain d) (:predicates (p ?x))
        (:action a :parameters (?x) :precondition (p ?x ?x) :effect (p ?x))))";
    CHECK_THROWS_AS(parse_domain(arity), SemanticError);
    const char* free = R"((define (domain d) (:predicates (p ?x))
        (:action a :parameters () :precondition (p ?y) :effect (p ?y))))";
    CHECK_THROWS_AS(parse_domain(free), SemanticError);
}

TEST_CASE("undeclared object in problem") {
    const Domain d = parse_domain(corpus::read("triangle-tire.pddl"));
    Problem p = parse_problem(corpus::read("triangle-tire-1.pddl"));
    p.add_init(Predicate{"vehicleat", {Term::constant("l99")}});
    CHECK_THROWS_AS(check_problem(d, p), SemanticError);
}

TEST_CASE("negative literal rendering") {
    const char* text = R"((define (domain d) (:predicates (p ?x))
        (:action a :parameters (?x) :precondition (p ?x) :effect (not (p ?x)))))";
    const std::string out = print_domain(parse_domain(text));
    CHECK(out.find("(not (p ?x))") != std::string::npos);
}

TEST_CASE("print/parse round-trip on every data file") {
    for (const std::string& rel : corpus::pddl_files()) {
        CAPTURE(rel);
        const std::string text = corpus::read(rel);
        if (corpus::is_problem(text)) {
            const Problem p = parse_problem(text);
            CHECK(parse_problem(print_problem(p)) == p);
        } else {
            const Domain d = parse_domain(text);
            CHECK(parse_domain(print_domain(d)) == d);
        }
    }
}

TEST_CASE("printing is deterministic") {
    const Domain d = parse_domain(corpus::read("triangle-tire.pddl"));
    CHECK(print_domain(d) == print_domain(parse_domain(print_domain(d))));
}

TEST_CASE("flatten_and and conjoin") {
    const Formula p = Formula::atom({"p", {}});
    const Formula q = Formula::atom({"q", {}});
    const Formula nested = Formula::conj({Formula::conj({p, q}), Formula::conj({q})});
    const Formula flat = flatten_and(nested);
    REQUIRE(flat.is(Formula::Kind::And));
    CHECK(flat.children.size() == 3);
    CHECK(flatten_and(Formula::conj({p})) == p);
    CHECK(conjoin(Formula::conj({p}), q).children.size() == 2);
}

TEST_CASE("subtypes") {
    const char* text = R"((define (domain d) (:requirements :typing) (:types car truck - vehicle vehicle)
        (:predicates (at ?v - vehicle))))";
    const Domain d = parse_domain(text);
    CHECK(d.is_subtype("car", "vehicle"));
    CHECK(d.is_subtype("car", "object"));
    CHECK_FALSE(d.is_subtype("vehicle", "car"));
}
