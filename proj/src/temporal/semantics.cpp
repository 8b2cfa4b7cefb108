#include "fondltl/temporal/semantics.hpp"

#include <algorithm>

#include "fondltl/error.hpp"

namespace fondltl::temporal {

bool Trace::holds(const GroundedSymbol& s, std::size_t i) const {
    auto it = std::find(atoms.begin(), atoms.end(), s);
    if (it == atoms.end()) return false;
    const auto bit = static_cast<unsigned>(it - atoms.begin());
    return ((letters.at(i) >> bit) & 1U) != 0;
}

namespace {

using Column = std::vector<bool>;

// Truth value of `f` at every instant, computed bottom-up: future operators
// are filled from the last instant backwards, past ones from the first
// instant forwards.
Column column(const Formula& f, const Trace& t) {
    const std::size_t n = t.size();
    Column out(n, false);
    const auto& xs = f.operands();
    switch (f.op()) {
        case Op::True:
            out.assign(n, true);
            return out;
        case Op::False:
            return out;
        case Op::Atom: {
            auto it = std::find(t.atoms.begin(), t.atoms.end(), f.symbol());
            if (it == t.atoms.end()) return out;
            const auto bit = static_cast<unsigned>(it - t.atoms.begin());
            for (std::size_t i = 0; i < n; ++i) out[i] = ((t.letters[i] >> bit) & 1U) != 0;
            return out;
        }
        case Op::Not: {
            Column a = column(*xs[0], t);
            for (std::size_t i = 0; i < n; ++i) out[i] = !a[i];
            return out;
        }
        case Op::And:
        case Op::Or: {
            const bool is_and = f.op() == Op::And;
            out.assign(n, is_and);
            for (const FormulaPtr& x : xs) {
                Column a = column(*x, t);
                for (std::size_t i = 0; i < n; ++i) out[i] = is_and ? (out[i] && a[i]) : (out[i] || a[i]);
            }
            return out;
        }
        default:
            break;
    }

    Column a = column(*xs[0], t);
    Column b = xs.size() > 1 ? column(*xs[1], t) : Column{};
    switch (f.op()) {
        case Op::Implies:
            for (std::size_t i = 0; i < n; ++i) out[i] = !a[i] || b[i];
            break;
        case Op::Iff:
            for (std::size_t i = 0; i < n; ++i) out[i] = a[i] == b[i];
            break;
        case Op::Next:
            for (std::size_t i = 0; i + 1 < n; ++i) out[i] = a[i + 1];
            break;
        case Op::WeakNext:
            for (std::size_t i = 0; i < n; ++i) out[i] = i + 1 == n || a[i + 1];
            break;
        case Op::Until:
            for (std::size_t k = n; k-- > 0;) out[k] = b[k] || (a[k] && k + 1 < n && out[k + 1]);
            break;
        case Op::Release:
            for (std::size_t k = n; k-- > 0;) out[k] = b[k] && (a[k] || k + 1 == n || out[k + 1]);
            break;
        case Op::Eventually:
            for (std::size_t k = n; k-- > 0;) out[k] = a[k] || (k + 1 < n && out[k + 1]);
            break;
        case Op::Always:
            for (std::size_t k = n; k-- > 0;) out[k] = a[k] && (k + 1 == n || out[k + 1]);
            break;
        case Op::Yesterday:
            for (std::size_t i = 1; i < n; ++i) out[i] = a[i - 1];
            break;
        case Op::Since:
            for (std::size_t i = 0; i < n; ++i) out[i] = b[i] || (a[i] && i > 0 && out[i - 1]);
            break;
        case Op::Once:
            for (std::size_t i = 0; i < n; ++i) out[i] = a[i] || (i > 0 && out[i - 1]);
            break;
        case Op::Historically:
            for (std::size_t i = 0; i < n; ++i) out[i] = a[i] && (i == 0 || out[i - 1]);
            break;
        default:
            throw Error("evaluate: unexpected operator");
    }
    return out;
}

}  // namespace

std::vector<bool> evaluate_all(const FormulaPtr& f, const Trace& t) { return column(*f, t); }

bool evaluate(const FormulaPtr& f, const Trace& t, std::size_t i) {
    if (i >= t.size()) {
        throw Error("evaluate: position " + std::to_string(i) + " outside a trace of length " +
                    std::to_string(t.size()));
    }
    return column(*f, t)[i];
}

bool satisfies(const FormulaPtr& f, const Trace& t) {
    if (t.size() == 0) throw Error("satisfies: traces must be nonempty");
    switch (classify(f)) {
        case Logic::Propositional:
        case Logic::Future:
            return evaluate(f, t, 0);
        case Logic::Past:
            return evaluate(f, t, t.size() - 1);
        case Logic::Mixed:
            break;
    }
    throw FragmentError("formula mixes past and future operators: " + f->str());
}

}  // namespace fondltl::temporal
