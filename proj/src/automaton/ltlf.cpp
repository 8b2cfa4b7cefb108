#include <algorithm>
#include <deque>
#include <map>

#include "fondltl/automaton/construct.hpp"
#include "fondltl/error.hpp"

namespace fondltl::automaton {

using temporal::Formula;
using temporal::FormulaPtr;
using temporal::Op;

namespace {

// Obligations for the next instant are X ψ / WX ψ terms, interned by id.
// A residual is a DNF over them: a set of clauses, each a sorted set of ids.
// {} is false and {{}} is true.
using Clause = std::vector<int>;
using Dnf = std::vector<Clause>;

Dnf dnf_true() { return {Clause{}}; }

// Sorts, dedups and drops clauses subsumed by a smaller one.
Dnf normalize(Dnf d) {
    for (Clause& c : d) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    std::sort(d.begin(), d.end(), [](const Clause& a, const Clause& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    d.erase(std::unique(d.begin(), d.end()), d.end());
    Dnf out;
    for (const Clause& c : d) {
        const bool subsumed = std::any_of(out.begin(), out.end(), [&](const Clause& k) {
            return std::includes(c.begin(), c.end(), k.begin(), k.end());
        });
        if (!subsumed) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Dnf disj(Dnf a, const Dnf& b) {
    a.insert(a.end(), b.begin(), b.end());
    return normalize(std::move(a));
}

Dnf conj(const Dnf& a, const Dnf& b) {
    Dnf out;
    for (const Clause& x : a) {
        for (const Clause& y : b) {
            Clause c = x;
            c.insert(c.end(), y.begin(), y.end());
            out.push_back(std::move(c));
        }
    }
    return normalize(std::move(out));
}

class Progression {
public:
    explicit Progression(std::vector<temporal::GroundedSymbol> atoms) : atoms_(std::move(atoms)) {}

    // Residual of an NNF formula after reading `letter`.
    Dnf delta(const FormulaPtr& f, Letter letter) {
        switch (f->op()) {
            case Op::True:
                return dnf_true();
            case Op::False:
                return {};
            case Op::Atom:
                return holds(f, letter) ? dnf_true() : Dnf{};
            case Op::Not:
                if (f->operand()->op() != Op::Atom) throw Error("ltlf: formula is not in negation normal form");
                return holds(f->operand(), letter) ? Dnf{} : dnf_true();
            case Op::And: {
                Dnf acc = dnf_true();
                for (const FormulaPtr& x : f->operands()) acc = conj(acc, delta(x, letter));
                return acc;
            }
            case Op::Or: {
                Dnf acc;
                for (const FormulaPtr& x : f->operands()) acc = disj(std::move(acc), delta(x, letter));
                return acc;
            }
            case Op::Next:
            case Op::WeakNext:
                return {Clause{intern(f)}};
            case Op::Until:
                return disj(delta(f->operand(1), letter),
                            conj(delta(f->operand(0), letter), {Clause{intern(Formula::unary(Op::Next, f))}}));
            case Op::Release:
                return conj(delta(f->operand(1), letter),
                            disj(delta(f->operand(0), letter), {Clause{intern(Formula::unary(Op::WeakNext, f))}}));
            case Op::Eventually:
                return disj(delta(f->operand(), letter), {Clause{intern(Formula::unary(Op::Next, f))}});
            case Op::Always:
                return conj(delta(f->operand(), letter), {Clause{intern(Formula::unary(Op::WeakNext, f))}});
            default:
                throw FragmentError("ltlf: past operator in " + f->str());
        }
    }

    // Residual of a non-initial state after reading `letter`.
    Dnf step(const Dnf& state, Letter letter) {
        Dnf acc;
        for (const Clause& c : state) {
            Dnf prod = dnf_true();
            for (int id : c) {
                prod = conj(prod, term_delta(id, letter));
                if (prod.empty()) break;
            }
            acc = disj(std::move(acc), prod);
        }
        return acc;
    }

    // A residual holds on the empty remainder iff some clause has only
    // weak-next obligations.
    bool accepts_empty(const Dnf& d) const {
        return std::any_of(d.begin(), d.end(), [&](const Clause& c) {
            return std::all_of(c.begin(), c.end(), [&](int id) { return terms_[id]->op() == Op::WeakNext; });
        });
    }

    std::string key(const Dnf& d) const {
        std::string s;
        for (const Clause& c : d) {
            s += '{';
            for (int id : c) s += std::to_string(id) + ',';
            s += '}';
        }
        return s;
    }

private:
    std::vector<temporal::GroundedSymbol> atoms_;
    std::vector<FormulaPtr> terms_;
    std::map<std::string, int> ids_;
    std::map<std::pair<int, Letter>, Dnf> memo_;

    bool holds(const FormulaPtr& atom, Letter letter) const {
        auto it = std::find(atoms_.begin(), atoms_.end(), atom->symbol());
        return ((letter >> static_cast<unsigned>(it - atoms_.begin())) & 1U) != 0;
    }

    int intern(const FormulaPtr& term) {
        auto [it, inserted] = ids_.emplace(term->str(), static_cast<int>(terms_.size()));
        if (inserted) terms_.push_back(term);
        return it->second;
    }

    const Dnf& term_delta(int id, Letter letter) {
        auto key = std::pair{id, letter};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        FormulaPtr body = terms_[static_cast<std::size_t>(id)]->operand();
        Dnf d = delta(body, letter);
        return memo_.emplace(key, std::move(d)).first->second;
    }
};

// Truth of an NNF formula on the empty trace.
bool empty_eval(const FormulaPtr& f) {
    switch (f->op()) {
        case Op::True:
        case Op::WeakNext:
        case Op::Release:
        case Op::Always:
            return true;
        case Op::And:
            return std::all_of(f->operands().begin(), f->operands().end(), empty_eval);
        case Op::Or:
            return std::any_of(f->operands().begin(), f->operands().end(), empty_eval);
        default:
            return false;
    }
}

}  // namespace

Dfa ltlf_to_dfa(const FormulaPtr& f, const BuildOptions& opts) {
    const temporal::Logic logic = temporal::classify(f);
    if (logic == temporal::Logic::Past || logic == temporal::Logic::Mixed) {
        throw FragmentError("LTLf construction needs a future formula: " + f->str());
    }
    const FormulaPtr nnf = temporal::to_nnf(f);
    TableDfa t;
    t.atoms = temporal::atoms(f);
    const std::size_t n = letter_count(t.atoms.size());
    Progression prog(t.atoms);

    // State 0 is the initial state holding the formula itself; the rest hold
    // residual DNFs. Discovery order is breadth-first in letter rank.
    std::vector<Dnf> residual{Dnf{}};
    std::map<std::string, int> index;
    t.accepting.push_back(empty_eval(nnf));
    t.next.emplace_back(n, 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int q = queue.front();
        queue.pop_front();
        for (std::size_t r = 0; r < n; ++r) {
            const Letter l = letter_at_rank(r, t.atoms.size());
            Dnf succ = q == 0 ? prog.delta(nnf, l) : prog.step(residual[static_cast<std::size_t>(q)], l);
            auto [it, inserted] = index.emplace(prog.key(succ), static_cast<int>(residual.size()));
            if (inserted) {
                t.accepting.push_back(prog.accepts_empty(succ));
                t.next.emplace_back(n, 0);
                residual.push_back(std::move(succ));
                queue.push_back(it->second);
            }
            t.next[static_cast<std::size_t>(q)][r] = it->second;
        }
    }
    Dfa d = from_table(canonical(t), opts.guards);
    return opts.minimize ? minimize(d, opts.guards) : d;
}

}  // namespace fondltl::automaton
