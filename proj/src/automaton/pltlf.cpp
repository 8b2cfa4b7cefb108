#include <algorithm>
#include <deque>
#include <map>

#include "fondltl/automaton/construct.hpp"
#include "fondltl/error.hpp"

namespace fondltl::automaton {

using temporal::FormulaPtr;
using temporal::Op;

namespace {

// Subformulas in post-order, deduplicated structurally, so every operand
// precedes the formulas using it.
void closure(const FormulaPtr& f, std::vector<FormulaPtr>& out, std::map<std::string, std::size_t>& index) {
    if (index.count(f->str())) return;
    for (const FormulaPtr& x : f->operands()) closure(x, out, index);
    index.emplace(f->str(), out.size());
    out.push_back(f);
}

}  // namespace

Dfa pltlf_to_dfa(const FormulaPtr& f, const BuildOptions& opts) {
    const temporal::Logic logic = temporal::classify(f);
    if (logic == temporal::Logic::Future || logic == temporal::Logic::Mixed) {
        throw FragmentError("PLTLf construction needs a past formula: " + f->str());
    }
    std::vector<FormulaPtr> cl;
    std::map<std::string, std::size_t> index;
    closure(f, cl, index);

    TableDfa t;
    t.atoms = temporal::atoms(f);
    const std::size_t n = letter_count(t.atoms.size());
    std::vector<std::size_t> atom_bit(cl.size(), 0);
    for (std::size_t i = 0; i < cl.size(); ++i) {
        if (cl[i]->op() == Op::Atom) {
            atom_bit[i] = static_cast<std::size_t>(
                std::find(t.atoms.begin(), t.atoms.end(), cl[i]->symbol()) - t.atoms.begin());
        }
    }
    auto at = [&](const FormulaPtr& x) { return index.at(x->str()); };

    // Values of the closure at the current instant given the previous
    // instant's values (`prev` is null before the first letter).
    auto advance = [&](const std::vector<bool>* prev, Letter l) {
        std::vector<bool> v(cl.size(), false);
        for (std::size_t i = 0; i < cl.size(); ++i) {
            const auto& g = *cl[i];
            auto val = [&](std::size_t k) { return static_cast<bool>(v[at(g.operand(k))]); };
            switch (g.op()) {
                case Op::True: v[i] = true; break;
                case Op::False: v[i] = false; break;
                case Op::Atom: v[i] = ((l >> atom_bit[i]) & 1U) != 0; break;
                case Op::Not: v[i] = !val(0); break;
                case Op::And:
                    v[i] = std::all_of(g.operands().begin(), g.operands().end(),
                                       [&](const FormulaPtr& x) { return static_cast<bool>(v[at(x)]); });
                    break;
                case Op::Or:
                    v[i] = std::any_of(g.operands().begin(), g.operands().end(),
                                       [&](const FormulaPtr& x) { return static_cast<bool>(v[at(x)]); });
                    break;
                case Op::Implies: v[i] = !val(0) || val(1); break;
                case Op::Iff: v[i] = val(0) == val(1); break;
                case Op::Yesterday: v[i] = prev != nullptr && (*prev)[at(g.operand())]; break;
                case Op::Since: v[i] = val(1) || (val(0) && prev != nullptr && (*prev)[i]); break;
                case Op::Once: v[i] = val(0) || (prev != nullptr && (*prev)[i]); break;
                case Op::Historically: v[i] = val(0) && (prev == nullptr || (*prev)[i]); break;
                default: throw FragmentError("pltlf: future operator in " + g.str());
            }
        }
        return v;
    };

    // State 0 is the pre-initial state; the others are closure valuations.
    std::vector<std::vector<bool>> vals{{}};
    std::map<std::vector<bool>, int> ids;
    t.accepting.push_back(false);
    t.next.emplace_back(n, 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int q = queue.front();
        queue.pop_front();
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<bool> v = advance(q == 0 ? nullptr : &vals[static_cast<std::size_t>(q)],
                                          letter_at_rank(r, t.atoms.size()));
            auto [it, inserted] = ids.emplace(v, static_cast<int>(vals.size()));
            if (inserted) {
                t.accepting.push_back(v.back());
                t.next.emplace_back(n, 0);
                vals.push_back(std::move(v));
                queue.push_back(it->second);
            }
            t.next[static_cast<std::size_t>(q)][r] = it->second;
        }
    }
    Dfa d = from_table(canonical(t), opts.guards);
    return opts.minimize ? minimize(d, opts.guards) : d;
}

Dfa formula_to_dfa(const FormulaPtr& f, const BuildOptions& opts) {
    switch (temporal::classify(f)) {
        case temporal::Logic::Propositional:
        case temporal::Logic::Future:
            return ltlf_to_dfa(f, opts);
        case temporal::Logic::Past:
            return pltlf_to_dfa(f, opts);
        case temporal::Logic::Mixed:
            break;
    }
    throw FragmentError("formula mixes past and future operators: " + f->str());
}

}  // namespace fondltl::automaton
