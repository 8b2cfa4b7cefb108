#include "fondltl/automaton/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "fondltl/error.hpp"

namespace fondltl::automaton {

bool Guard::matches(Letter letter) const {
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const bool on = ((letter >> i) & 1U) != 0;
        if ((bits[i] == '1' && !on) || (bits[i] == '0' && on)) return false;
    }
    return true;
}

int Dfa::step(int state, Letter letter) const {
    for (const Transition& t : out(state)) {
        if (t.guard.matches(letter)) return t.dest;
    }
    throw Error("dfa: state " + std::to_string(state) + " has no transition for letter " + std::to_string(letter));
}

int Dfa::run(const std::vector<Letter>& word) const {
    int q = initial;
    for (Letter l : word) q = step(q, l);
    return q;
}

std::size_t letter_count(std::size_t num_atoms) {
    if (num_atoms > kMaxAtoms) {
        throw UnsupportedError("automaton over " + std::to_string(num_atoms) + " atoms exceeds the limit of " +
                               std::to_string(kMaxAtoms));
    }
    return std::size_t{1} << num_atoms;
}

Letter letter_at_rank(std::size_t rank, std::size_t num_atoms) {
    Letter l = 0;
    for (std::size_t i = 0; i < num_atoms; ++i) {
        if (((rank >> (num_atoms - 1 - i)) & 1U) != 0) l |= Letter{1} << i;
    }
    return l;
}

TableDfa to_table(const Dfa& d) {
    TableDfa t;
    t.atoms = d.atoms;
    const std::size_t n = letter_count(d.atoms.size());
    t.next.assign(static_cast<std::size_t>(d.num_states), std::vector<int>(n, 0));
    t.accepting.assign(static_cast<std::size_t>(d.num_states), false);
    t.initial = d.initial - 1;
    for (int q = 1; q <= d.num_states; ++q) {
        t.accepting[q - 1] = d.is_accepting(q);
        for (std::size_t r = 0; r < n; ++r) t.next[q - 1][r] = d.step(q, letter_at_rank(r, d.atoms.size())) - 1;
    }
    return t;
}

namespace {

// Paths of the reduced ordered decision diagram for one row. The block
// [lo, lo + size) holds the successors of the letters sharing `prefix`;
// the current atom splits it into two halves.
void decision_paths(const std::vector<int>& row, std::size_t lo, std::size_t size, std::string& prefix,
                    std::size_t num_atoms, std::vector<Transition>& out) {
    if (prefix.size() == num_atoms) {
        out.push_back({Guard{prefix}, row[lo] + 1});
        return;
    }
    const std::size_t half = size / 2;
    if (std::equal(row.begin() + static_cast<long>(lo), row.begin() + static_cast<long>(lo + half),
                   row.begin() + static_cast<long>(lo + half))) {
        prefix.push_back('X');
        decision_paths(row, lo, half, prefix, num_atoms, out);
        prefix.pop_back();
        return;
    }
    prefix.push_back('0');
    decision_paths(row, lo, half, prefix, num_atoms, out);
    prefix.back() = '1';
    decision_paths(row, lo + half, half, prefix, num_atoms, out);
    prefix.pop_back();
}

// Two guards merge when they differ in exactly one position holding 0/1.
bool try_merge(const std::string& a, const std::string& b, std::string& merged) {
    std::size_t diff = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        if (diff != a.size() || a[i] == 'X' || b[i] == 'X') return false;
        diff = i;
    }
    if (diff == a.size()) return false;
    merged = a;
    merged[diff] = 'X';
    return true;
}

std::vector<Transition> merge_row(std::vector<Transition> row) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < row.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < row.size() && !changed; ++j) {
                std::string m;
                if (row[i].dest == row[j].dest && try_merge(row[i].guard.bits, row[j].guard.bits, m)) {
                    row[i].guard.bits = m;
                    row.erase(row.begin() + static_cast<long>(j));
                    changed = true;
                }
            }
        }
    }
    return row;
}

}  // namespace

Dfa from_table(const TableDfa& t, GuardStyle style) {
    Dfa d;
    d.atoms = t.atoms;
    d.num_states = static_cast<int>(t.size());
    d.initial = t.initial + 1;
    const std::size_t n = letter_count(t.atoms.size());
    for (std::size_t q = 0; q < t.size(); ++q) {
        if (t.next[q].size() != n) throw Error("dfa: transition row has the wrong width");
        if (t.accepting[q]) d.accepting.insert(static_cast<int>(q) + 1);
        std::vector<Transition> row;
        std::string prefix;
        decision_paths(t.next[q], 0, n, prefix, t.atoms.size(), row);
        if (style == GuardStyle::Merged) row = merge_row(std::move(row));
        d.transitions.push_back(std::move(row));
    }
    return d;
}

TableDfa canonical(const TableDfa& t) {
    std::vector<int> id(t.size(), -1);
    std::vector<int> order;
    std::deque<int> queue{t.initial};
    id[static_cast<std::size_t>(t.initial)] = 0;
    order.push_back(t.initial);
    while (!queue.empty()) {
        const int q = queue.front();
        queue.pop_front();
        for (int s : t.next[static_cast<std::size_t>(q)]) {
            if (id[static_cast<std::size_t>(s)] >= 0) continue;
            id[static_cast<std::size_t>(s)] = static_cast<int>(order.size());
            order.push_back(s);
            queue.push_back(s);
        }
    }
    TableDfa out;
    out.atoms = t.atoms;
    out.initial = 0;
    for (int q : order) {
        std::vector<int> row;
        row.reserve(t.next[static_cast<std::size_t>(q)].size());
        for (int s : t.next[static_cast<std::size_t>(q)]) row.push_back(id[static_cast<std::size_t>(s)]);
        out.next.push_back(std::move(row));
        out.accepting.push_back(t.accepting[static_cast<std::size_t>(q)]);
    }
    return out;
}

bool guards_partition(const Dfa& d, std::string* why) {
    const std::size_t n = letter_count(d.atoms.size());
    for (int q = 1; q <= d.num_states; ++q) {
        for (const Transition& t : d.out(q)) {
            if (t.guard.bits.size() != d.atoms.size() || t.dest < 1 || t.dest > d.num_states) {
                if (why) *why = "state " + std::to_string(q) + " has a malformed transition";
                return false;
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            const Letter l = letter_at_rank(r, d.atoms.size());
            const auto hits = std::count_if(d.out(q).begin(), d.out(q).end(),
                                            [&](const Transition& t) { return t.guard.matches(l); });
            if (hits != 1) {
                if (why) {
                    *why = "state " + std::to_string(q) + ": " + std::to_string(hits) + " guards match letter " +
                           std::to_string(l);
                }
                return false;
            }
        }
    }
    return true;
}

}  // namespace fondltl::automaton
