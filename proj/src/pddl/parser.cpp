#include "fondltl/pddl/parser.hpp"

#include <algorithm>
#include <cctype>

#include "fondltl/error.hpp"

namespace fondltl::pddl {

const std::set<std::string>& reserved_words() {
    static const std::set<std::string> words = {
        "define",     "domain",     ":domain",       ":requirements", ":constants",
        ":strips",    ":adl",       ":non-deterministic", ":equality", ":typing",
        ":types",     ":predicates", ":action",      ":parameters",   ":precondition",
        ":effect",    "and",        "or",            "not",           "imply",
        "oneof",      "forall",     "exists",        "when",          "problem",
        ":objects",   ":init",      ":goal"};
    return words;
}

namespace {

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++i;
        } else if (c == ';') {
            while (i < n && text[i] != '\n') ++i;
        } else if (c == '(') {
            out.push_back({Token::Kind::LParen, "(", line});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::Kind::RParen, ")", line});
            ++i;
        } else if (c == '=') {
            out.push_back({Token::Kind::Equals, "=", line});
            ++i;
        } else if (c == '-') {
            out.push_back({Token::Kind::Hyphen, "-", line});
            ++i;
        } else if (c == '?' || c == ':') {
            std::size_t j = i + 1;
            while (j < n && is_ident_char(text[j])) ++j;
            if (j == i + 1) {
                throw SyntaxError(std::string("dangling '") + c + "'", line);
            }
            if (c == '?') {
                out.push_back({Token::Kind::Variable, lower(text.substr(i + 1, j - i - 1)), line});
            } else {
                std::string word = lower(text.substr(i, j - i));
                const bool reserved = reserved_words().count(word) > 0;
                out.push_back({reserved ? Token::Kind::Reserved : Token::Kind::Name, std::move(word), line});
            }
            i = j;
        } else if (is_ident_char(c)) {
            std::size_t j = i;
            while (j < n && is_ident_char(text[j])) ++j;
            std::string word = lower(text.substr(i, j - i));
            const bool reserved = reserved_words().count(word) > 0;
            out.push_back({reserved ? Token::Kind::Reserved : Token::Kind::Name, std::move(word), line});
            i = j;
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", line);
        }
    }
    out.push_back({Token::Kind::End, "<end of input>", line});
    return out;
}

namespace {

using K = Formula::Kind;

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    Domain domain(std::vector<std::string>* warnings) {
        Domain d;
        expect_lparen();
        expect_reserved("define");
        expect_lparen();
        expect_reserved("domain");
        d.name = expect_name("domain name");
        expect_rparen();
        while (!peek_is(Token::Kind::RParen)) {
            expect_lparen();
            const Token& head = next();
            if (head.kind != Token::Kind::Reserved) fail("expected a domain section, got '" + head.text + "'", head);
            if (head.text == ":requirements") {
                while (!peek_is(Token::Kind::RParen)) {
                    const Token& r = next();
                    if ((r.kind != Token::Kind::Reserved && r.kind != Token::Kind::Name) || r.text.front() != ':') {
                        fail("expected a requirement flag, got '" + r.text + "'", r);
                    }
                    d.requirements.push_back(r.text);
                }
                expect_rparen();
            } else if (head.text == ":types") {
                for (Term& t : typed_list(/*variables=*/false)) d.types.push_back({t.name, t.type});
                expect_rparen();
            } else if (head.text == ":constants") {
                d.constants = typed_list(false);
                expect_rparen();
            } else if (head.text == ":predicates") {
                while (!peek_is(Token::Kind::RParen)) {
                    expect_lparen();
                    Predicate p;
                    p.name = expect_name("predicate name");
                    p.args = typed_list(true);
                    expect_rparen();
                    d.predicates.push_back(std::move(p));
                }
                expect_rparen();
            } else if (head.text == ":action") {
                d.actions.push_back(action());
            } else {
                fail("unsupported domain section '" + head.text + "'", head);
            }
        }
        expect_rparen();
        expect_end();
        check_domain(d, warnings);
        return d;
    }

    Problem problem() {
        Problem p;
        expect_lparen();
        expect_reserved("define");
        expect_lparen();
        expect_reserved("problem");
        p.name = expect_name("problem name");
        expect_rparen();
        bool seen_domain = false;
        while (!peek_is(Token::Kind::RParen)) {
            expect_lparen();
            const Token& head = next();
            if (head.text == ":domain") {
                p.domain_name = expect_name("domain name");
                seen_domain = true;
                expect_rparen();
            } else if (head.text == ":requirements") {
                while (!peek_is(Token::Kind::RParen)) next();
                expect_rparen();
            } else if (head.text == ":objects") {
                p.objects = typed_list(false);
                expect_rparen();
            } else if (head.text == ":init") {
                for (Predicate& a : ground_atom_list("init")) p.add_init(std::move(a));
                expect_rparen();
            } else if (head.text == ":goal") {
                std::vector<Predicate> atoms = ground_atom_list("goal");
                if (atoms.size() == 1 && !goal_was_conjunction_) {
                    p.goal = Formula::atom(std::move(atoms.front()));
                } else {
                    std::vector<Formula> xs;
                    for (Predicate& a : atoms) xs.push_back(Formula::atom(std::move(a)));
                    p.goal = Formula::conj(std::move(xs));
                }
                expect_rparen();
            } else {
                fail("unsupported problem section '" + head.text + "'", head);
            }
        }
        expect_rparen();
        expect_end();
        if (!seen_domain) throw SemanticError("problem '" + p.name + "' has no (:domain ...) section");
        return p;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    bool goal_was_conjunction_ = false;

    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    bool peek_is(Token::Kind k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
    const Token& next() {
        const Token& t = peek();
        if (t.kind == Token::Kind::End) fail("unexpected end of input", t);
        ++pos_;
        return t;
    }

    [[noreturn]] static void fail(const std::string& msg, const Token& at) { throw SyntaxError(msg, at.line); }

    void expect_lparen() {
        const Token& t = peek();
        if (t.kind != Token::Kind::LParen) fail("expected '(' but found '" + t.text + "'", t);
        ++pos_;
    }
    void expect_rparen() {
        const Token& t = peek();
        if (t.kind != Token::Kind::RParen) fail("expected ')' but found '" + t.text + "'", t);
        ++pos_;
    }
    void expect_reserved(const std::string& word) {
        const Token& t = peek();
        if (t.kind != Token::Kind::Reserved || t.text != word) fail("expected '" + word + "' but found '" + t.text + "'", t);
        ++pos_;
    }
    std::string expect_name(const char* what) {
        const Token& t = peek();
        if (t.kind != Token::Kind::Name) fail(std::string("expected ") + what + " but found '" + t.text + "'", t);
        ++pos_;
        return t.text;
    }
    void expect_end() {
        const Token& t = peek();
        if (t.kind != Token::Kind::End) fail("trailing input after document: '" + t.text + "'", t);
    }

    // `a b - t c - u d` → a:t b:t c:u d:untyped
    std::vector<Term> typed_list(bool variables) {
        std::vector<Term> out;
        std::size_t run_start = 0;
        const Token::Kind want = variables ? Token::Kind::Variable : Token::Kind::Name;
        while (!peek_is(Token::Kind::RParen)) {
            const Token& t = next();
            if (t.kind == want) {
                out.push_back(variables ? Term::var(t.text) : Term::constant(t.text));
            } else if (t.kind == Token::Kind::Hyphen) {
                if (out.size() == run_start) fail("type annotation without preceding names", t);
                if (peek_is(Token::Kind::LParen)) fail("'either' types are not supported", peek());
                const std::string type = expect_name("type name");
                for (std::size_t i = run_start; i < out.size(); ++i) out[i].type = type;
                run_start = out.size();
            } else {
                fail(std::string("expected a ") + (variables ? "variable" : "name") + " but found '" + t.text + "'", t);
            }
        }
        return out;
    }

    Term term() {
        const Token& t = next();
        if (t.kind == Token::Kind::Variable) return Term::var(t.text);
        if (t.kind == Token::Kind::Name) return Term::constant(t.text);
        fail("expected a term but found '" + t.text + "'", t);
    }

    // After '(' has been consumed and the head is a predicate name or '='.
    Predicate predicate_body() {
        Predicate p;
        const Token& head = next();
        if (head.kind == Token::Kind::Equals) {
            p.name = "=";
            p.args.push_back(term());
            p.args.push_back(term());
        } else if (head.kind == Token::Kind::Name) {
            p.name = head.text;
            while (!peek_is(Token::Kind::RParen)) p.args.push_back(term());
        } else {
            fail("expected a predicate but found '" + head.text + "'", head);
        }
        expect_rparen();
        return p;
    }

    std::vector<Term> bound_vars() {
        expect_lparen();
        std::vector<Term> vars = typed_list(true);
        expect_rparen();
        return vars;
    }

    Formula condition() {
        expect_lparen();
        const Token& head = peek();
        if (head.kind == Token::Kind::RParen) {
            ++pos_;
            return Formula::conj({});
        }
        if (head.kind != Token::Kind::Reserved) return Formula::atom(predicate_body());
        ++pos_;
        const std::string& w = head.text;
        Formula f;
        if (w == "and" || w == "or") {
            std::vector<Formula> xs;
            while (!peek_is(Token::Kind::RParen)) xs.push_back(condition());
            f = w == "and" ? Formula::conj(std::move(xs)) : Formula::disj(std::move(xs));
        } else if (w == "not") {
            Formula sub = condition();
            if (sub.is(K::Literal) && sub.literal.positive) {
                f = Formula::negated(std::move(sub.literal.predicate));
            } else {
                f = Formula::negation(std::move(sub));
            }
        } else if (w == "imply") {
            Formula lhs = condition();
            Formula rhs = condition();
            f = Formula::imply(std::move(lhs), std::move(rhs));
        } else if (w == "forall" || w == "exists") {
            std::vector<Term> vars = bound_vars();
            Formula body = condition();
            f = Formula::quantified(w == "forall" ? K::Forall : K::Exists, std::move(vars), std::move(body));
        } else if (w == "oneof" || w == "when") {
            fail("'" + w + "' may only appear in an effect", head);
        } else {
            fail("unexpected '" + w + "' in a condition", head);
        }
        expect_rparen();
        return f;
    }

    Formula effect() {
        expect_lparen();
        const Token& head = peek();
        if (head.kind == Token::Kind::RParen) {
            ++pos_;
            return Formula::conj({});
        }
        if (head.kind != Token::Kind::Reserved) return Formula::atom(predicate_body());
        ++pos_;
        const std::string& w = head.text;
        Formula f;
        if (w == "and" || w == "oneof") {
            std::vector<Formula> xs;
            while (!peek_is(Token::Kind::RParen)) xs.push_back(effect());
            if (w == "oneof" && xs.size() < 2) fail("'oneof' needs at least two alternatives", head);
            f = w == "and" ? Formula::conj(std::move(xs)) : Formula::oneof(std::move(xs));
        } else if (w == "not") {
            expect_lparen();
            if (peek_is(Token::Kind::Reserved)) fail("only atoms may be negated in an effect", peek());
            f = Formula::negated(predicate_body());
        } else if (w == "when") {
            Formula cond = condition();
            Formula eff = effect();
            f = Formula::when(std::move(cond), std::move(eff));
        } else if (w == "forall") {
            std::vector<Term> vars = bound_vars();
            Formula body = effect();
            f = Formula::quantified(K::Forall, std::move(vars), std::move(body));
        } else if (w == "or" || w == "imply" || w == "exists") {
            fail("'" + w + "' may only appear in a condition", head);
        } else {
            fail("unexpected '" + w + "' in an effect", head);
        }
        expect_rparen();
        return f;
    }

    ActionSchema action() {
        ActionSchema a;
        a.name = expect_name("action name");
        while (!peek_is(Token::Kind::RParen)) {
            const Token& key = next();
            if (key.text == ":parameters") {
                a.parameters = bound_vars();
            } else if (key.text == ":precondition") {
                a.precondition = condition();
            } else if (key.text == ":effect") {
                a.effect = effect();
            } else {
                fail("unexpected '" + key.text + "' in action '" + a.name + "'", key);
            }
        }
        expect_rparen();
        return a;
    }

    std::vector<Predicate> ground_atom_list(const char* section) {
        std::vector<Predicate> atoms;
        goal_was_conjunction_ = false;
        auto one_atom = [&]() {
            const Token& open = peek();
            expect_lparen();
            if (peek_is(Token::Kind::Reserved)) {
                fail(std::string("only ground atoms are allowed in ") + section + ", found '" + peek().text + "'", peek());
            }
            Predicate p = predicate_body();
            for (const Term& t : p.args) {
                if (t.variable) {
                    throw SemanticError("line " + std::to_string(open.line) + ": " + section +
                                        " atom is not ground: variable ?" + t.name);
                }
            }
            if (p.is_equality()) fail(std::string("equality atoms are not allowed in ") + section, open);
            atoms.push_back(std::move(p));
        };
        if (peek_is(Token::Kind::LParen) && peek(1).kind == Token::Kind::Reserved && peek(1).text == "and") {
            pos_ += 2;
            goal_was_conjunction_ = true;
            while (!peek_is(Token::Kind::RParen)) one_atom();
            expect_rparen();
        } else {
            while (!peek_is(Token::Kind::RParen)) one_atom();
        }
        return atoms;
    }

    static void check_uses(const Domain& d, const ActionSchema& a, const Formula& f) {
        if (f.is(K::Literal)) {
            const Predicate& p = f.literal.predicate;
            if (p.is_equality()) return;
            const Predicate* decl = d.find_predicate(p.name);
            if (decl == nullptr) {
                throw SemanticError("action '" + a.name + "' uses undeclared predicate '" + p.name + "'");
            }
            if (decl->arity() != p.arity()) {
                throw SemanticError("action '" + a.name + "' uses predicate '" + p.name + "' with " +
                                    std::to_string(p.arity()) + " arguments, declared with " +
                                    std::to_string(decl->arity()));
            }
            return;
        }
        for (const Formula& c : f.children) check_uses(d, a, c);
    }

    static bool contains_oneof(const Formula& f) {
        if (f.is(K::OneOf)) return true;
        return std::any_of(f.children.begin(), f.children.end(), contains_oneof);
    }

    static void check_domain(const Domain& d, std::vector<std::string>* warnings) {
        for (std::size_t i = 0; i < d.predicates.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (d.predicates[i].name == d.predicates[j].name) {
                    throw SemanticError("predicate '" + d.predicates[i].name + "' declared twice");
                }
            }
        }
        bool uses_oneof = false;
        for (std::size_t i = 0; i < d.actions.size(); ++i) {
            const ActionSchema& a = d.actions[i];
            for (std::size_t j = 0; j < i; ++j) {
                if (d.actions[j].name == a.name) throw SemanticError("action '" + a.name + "' declared twice");
            }
            check_uses(d, a, a.precondition);
            check_uses(d, a, a.effect);
            std::vector<std::string> free = free_variables(a.precondition);
            for (std::string& v : free_variables(a.effect)) free.push_back(std::move(v));
            for (const std::string& v : free) {
                const bool is_param = std::any_of(a.parameters.begin(), a.parameters.end(),
                                                  [&](const Term& t) { return t.name == v; });
                if (!is_param) throw SemanticError("action '" + a.name + "' has free variable ?" + v);
            }
            uses_oneof = uses_oneof || contains_oneof(a.effect);
        }
        if (uses_oneof && !d.has_requirement(":non-deterministic") && warnings != nullptr) {
            warnings->push_back("domain '" + d.name + "' uses oneof without declaring :non-deterministic");
        }
    }
};

}  // namespace

Domain parse_domain(std::string_view text, std::vector<std::string>* warnings) {
    return Parser(text).domain(warnings);
}

Problem parse_problem(std::string_view text) { return Parser(text).problem(); }

void check_problem(const Domain& domain, const Problem& problem) {
    if (problem.domain_name != domain.name) {
        throw SemanticError("problem '" + problem.name + "' refers to domain '" + problem.domain_name +
                            "' but the domain is '" + domain.name + "'");
    }
    auto known_object = [&](const std::string& o) {
        if (problem.find_object(o) != nullptr) return true;
        return std::any_of(domain.constants.begin(), domain.constants.end(),
                           [&](const Term& c) { return c.name == o; });
    };
    auto check_atom = [&](const Predicate& p, const char* where) {
        const Predicate* decl = domain.find_predicate(p.name);
        if (decl == nullptr) throw SemanticError(std::string(where) + " uses undeclared predicate '" + p.name + "'");
        if (decl->arity() != p.arity()) {
            throw SemanticError(std::string(where) + " uses predicate '" + p.name + "' with wrong arity");
        }
        for (const Term& t : p.args) {
            if (!known_object(t.name)) throw SemanticError(std::string(where) + " uses undeclared object '" + t.name + "'");
        }
    };
    for (const Predicate& a : problem.init) check_atom(a, "init");
    auto check_goal = [&](const auto& self, const Formula& f) -> void {
        if (f.is(K::Literal)) {
            check_atom(f.literal.predicate, "goal");
            return;
        }
        for (const Formula& c : f.children) self(self, c);
    };
    check_goal(check_goal, problem.goal);
}

}  // namespace fondltl::pddl
