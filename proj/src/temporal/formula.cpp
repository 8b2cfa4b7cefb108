#include "fondltl/temporal/formula.hpp"

#include <algorithm>

#include "fondltl/error.hpp"

namespace fondltl::temporal {

std::string GroundedSymbol::str() const {
    if (objects.empty()) return name;
    std::string out = name + "(";
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (i > 0) out += ',';
        out += objects[i];
    }
    return out + ")";
}

bool is_future(Op op) {
    switch (op) {
        case Op::Next:
        case Op::WeakNext:
        case Op::Until:
        case Op::Release:
        case Op::Eventually:
        case Op::Always:
            return true;
        default:
            return false;
    }
}

bool is_past(Op op) {
    switch (op) {
        case Op::Yesterday:
        case Op::Since:
        case Op::Once:
        case Op::Historically:
            return true;
        default:
            return false;
    }
}

namespace {

const char* unary_name(Op op) {
    switch (op) {
        case Op::Not: return "!";
        case Op::Next: return "X";
        case Op::WeakNext: return "WX";
        case Op::Eventually: return "F";
        case Op::Always: return "G";
        case Op::Yesterday: return "Y";
        case Op::Once: return "O";
        case Op::Historically: return "H";
        default: return nullptr;
    }
}

const char* binary_name(Op op) {
    switch (op) {
        case Op::And: return "&";
        case Op::Or: return "|";
        case Op::Implies: return "->";
        case Op::Iff: return "<->";
        case Op::Until: return "U";
        case Op::Release: return "R";
        case Op::Since: return "S";
        default: return nullptr;
    }
}

std::string render(Op op, const GroundedSymbol& s, const std::vector<FormulaPtr>& xs) {
    switch (op) {
        case Op::True: return "true";
        case Op::False: return "false";
        case Op::Atom: return s.str();
        default: break;
    }
    if (const char* u = unary_name(op)) return std::string(u) + "(" + xs.front()->str() + ")";
    const std::string sep = std::string(" ") + binary_name(op) + " ";
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += sep;
        out += xs[i]->str();
    }
    return out + ")";
}

}  // namespace

Formula::Formula(Op op, GroundedSymbol symbol, std::vector<FormulaPtr> operands)
    : op_(op), symbol_(std::move(symbol)), operands_(std::move(operands)),
      text_(render(op_, symbol_, operands_)) {}

FormulaPtr Formula::make_true() {
    static const FormulaPtr t = std::make_shared<const Formula>(Op::True, GroundedSymbol{}, std::vector<FormulaPtr>{});
    return t;
}

FormulaPtr Formula::make_false() {
    static const FormulaPtr f = std::make_shared<const Formula>(Op::False, GroundedSymbol{}, std::vector<FormulaPtr>{});
    return f;
}

FormulaPtr Formula::atom(GroundedSymbol s) {
    return std::make_shared<const Formula>(Op::Atom, std::move(s), std::vector<FormulaPtr>{});
}

FormulaPtr Formula::unary(Op op, FormulaPtr sub) {
    return std::make_shared<const Formula>(op, GroundedSymbol{}, std::vector<FormulaPtr>{std::move(sub)});
}

FormulaPtr Formula::binary(Op op, FormulaPtr lhs, FormulaPtr rhs) {
    return std::make_shared<const Formula>(op, GroundedSymbol{}, std::vector<FormulaPtr>{std::move(lhs), std::move(rhs)});
}

FormulaPtr Formula::nary(Op op, std::vector<FormulaPtr> xs) {
    if (xs.empty()) return op == Op::And ? make_true() : make_false();
    if (xs.size() == 1) return std::move(xs.front());
    return std::make_shared<const Formula>(op, GroundedSymbol{}, std::move(xs));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) { return a == b || a->str() == b->str(); }

std::string_view to_string(Logic l) {
    switch (l) {
        case Logic::Propositional: return "propositional";
        case Logic::Future: return "future";
        case Logic::Past: return "past";
        case Logic::Mixed: return "mixed";
    }
    return "?";
}

namespace {

void scan_ops(const Formula& f, bool& future, bool& past) {
    future = future || is_future(f.op());
    past = past || is_past(f.op());
    for (const FormulaPtr& x : f.operands()) scan_ops(*x, future, past);
}

void collect_atoms(const Formula& f, std::vector<GroundedSymbol>& out) {
    if (f.op() == Op::Atom) {
        if (std::find(out.begin(), out.end(), f.symbol()) == out.end()) out.push_back(f.symbol());
        return;
    }
    for (const FormulaPtr& x : f.operands()) collect_atoms(*x, out);
}

}  // namespace

Logic classify(const FormulaPtr& f) {
    bool future = false;
    bool past = false;
    scan_ops(*f, future, past);
    if (future && past) return Logic::Mixed;
    if (future) return Logic::Future;
    if (past) return Logic::Past;
    return Logic::Propositional;
}

std::vector<GroundedSymbol> atoms(const FormulaPtr& f) {
    std::vector<GroundedSymbol> out;
    collect_atoms(*f, out);
    return out;
}

namespace {

FormulaPtr nnf(const FormulaPtr& f, bool negate);

std::vector<FormulaPtr> map_nnf(const std::vector<FormulaPtr>& xs, bool negate) {
    std::vector<FormulaPtr> out;
    out.reserve(xs.size());
    for (const FormulaPtr& x : xs) out.push_back(nnf(x, negate));
    return out;
}

FormulaPtr nnf(const FormulaPtr& f, bool negate) {
    const auto& xs = f->operands();
    switch (f->op()) {
        case Op::True:
            return negate ? Formula::make_false() : f;
        case Op::False:
            return negate ? Formula::make_true() : f;
        case Op::Atom:
            return negate ? Formula::unary(Op::Not, f) : f;
        case Op::Not:
            return nnf(xs[0], !negate);
        case Op::And:
            return Formula::nary(negate ? Op::Or : Op::And, map_nnf(xs, negate));
        case Op::Or:
            return Formula::nary(negate ? Op::And : Op::Or, map_nnf(xs, negate));
        case Op::Implies:
            // a -> b  ==  !a | b
            if (negate) return Formula::nary(Op::And, {nnf(xs[0], false), nnf(xs[1], true)});
            return Formula::nary(Op::Or, {nnf(xs[0], true), nnf(xs[1], false)});
        case Op::Iff: {
            // a <-> b == (a & b) | (!a & !b);  !(a <-> b) == (a & !b) | (!a & b)
            FormulaPtr a = nnf(xs[0], false);
            FormulaPtr na = nnf(xs[0], true);
            FormulaPtr b = nnf(xs[1], false);
            FormulaPtr nb = nnf(xs[1], true);
            if (negate) {
                return Formula::nary(Op::Or, {Formula::nary(Op::And, {a, nb}), Formula::nary(Op::And, {na, b})});
            }
            return Formula::nary(Op::Or, {Formula::nary(Op::And, {a, b}), Formula::nary(Op::And, {na, nb})});
        }
        case Op::Next:
            return Formula::unary(negate ? Op::WeakNext : Op::Next, nnf(xs[0], negate));
        case Op::WeakNext:
            return Formula::unary(negate ? Op::Next : Op::WeakNext, nnf(xs[0], negate));
        case Op::Until:
            return Formula::binary(negate ? Op::Release : Op::Until, nnf(xs[0], negate), nnf(xs[1], negate));
        case Op::Release:
            return Formula::binary(negate ? Op::Until : Op::Release, nnf(xs[0], negate), nnf(xs[1], negate));
        case Op::Eventually:
            return Formula::unary(negate ? Op::Always : Op::Eventually, nnf(xs[0], negate));
        case Op::Always:
            return Formula::unary(negate ? Op::Eventually : Op::Always, nnf(xs[0], negate));
        case Op::Once:
            return Formula::unary(negate ? Op::Historically : Op::Once, nnf(xs[0], negate));
        case Op::Historically:
            return Formula::unary(negate ? Op::Once : Op::Historically, nnf(xs[0], negate));
        case Op::Yesterday: {
            FormulaPtr y = Formula::unary(Op::Yesterday, nnf(xs[0], false));
            return negate ? Formula::unary(Op::Not, y) : y;
        }
        case Op::Since: {
            if (!negate) return Formula::binary(Op::Since, nnf(xs[0], false), nnf(xs[1], false));
            // !(a S b) == H(!b) | (!b S (!a & !b))
            FormulaPtr na = nnf(xs[0], true);
            FormulaPtr nb = nnf(xs[1], true);
            return Formula::nary(Op::Or, {Formula::unary(Op::Historically, nb),
                                          Formula::binary(Op::Since, nb, Formula::nary(Op::And, {na, nb}))});
        }
    }
    throw Error("to_nnf: unknown operator");
}

}  // namespace

FormulaPtr to_nnf(const FormulaPtr& f) { return nnf(f, false); }

}  // namespace fondltl::temporal
