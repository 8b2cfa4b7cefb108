#pragma once

// Classic pair-marking minimization, used to count the Myhill-Nerode
// classes of a DFA independently of the library's refinement loop.

#include <cstddef>
#include <queue>
#include <vector>

#include "fondltl/automaton/dfa.hpp"

namespace oracle {

inline std::vector<int> reachable(const fondltl::automaton::TableDfa& t) {
    std::vector<int> seen(t.size(), 0);
    std::queue<int> q;
    q.push(t.initial);
    seen[static_cast<std::size_t>(t.initial)] = 1;
    while (!q.empty()) {
        const int s = q.front();
        q.pop();
        for (int d : t.next[static_cast<std::size_t>(s)]) {
            if (!seen[static_cast<std::size_t>(d)]) {
                seen[static_cast<std::size_t>(d)] = 1;
                q.push(d);
            }
        }
    }
    return seen;
}

/// Number of states of the minimal DFA equivalent to `t`.
inline std::size_t minimal_size(const fondltl::automaton::TableDfa& t) {
    const std::size_t n = t.size();
    const std::vector<int> live = reachable(t);
    std::vector<std::vector<char>> marked(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) marked[a][b] = t.accepting[a] != t.accepting[b];
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                if (marked[a][b]) continue;
                for (std::size_t l = 0; l < t.next[a].size(); ++l) {
                    const auto x = static_cast<std::size_t>(t.next[a][l]);
                    const auto y = static_cast<std::size_t>(t.next[b][l]);
                    if (marked[x][y]) {
                        marked[a][b] = marked[b][a] = 1;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    std::size_t classes = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (!live[a]) continue;
        bool fresh = true;
        for (std::size_t b = 0; b < a && fresh; ++b) fresh = !(live[b] && !marked[a][b]);
        if (fresh) ++classes;
    }
    return classes;
}

/// Language equivalence by a product walk over the reachable pairs.
inline bool equivalent(const fondltl::automaton::TableDfa& x, const fondltl::automaton::TableDfa& y) {
    if (x.next.empty() || y.next.empty()) return x.next.size() == y.next.size();
    if (x.next[0].size() != y.next[0].size()) return false;
    std::vector<std::vector<char>> seen(x.size(), std::vector<char>(y.size(), 0));
    std::queue<std::pair<int, int>> q;
    q.emplace(x.initial, y.initial);
    seen[static_cast<std::size_t>(x.initial)][static_cast<std::size_t>(y.initial)] = 1;
    while (!q.empty()) {
        const auto [a, b] = q.front();
        q.pop();
        if (x.accepting[static_cast<std::size_t>(a)] != y.accepting[static_cast<std::size_t>(b)]) return false;
        for (std::size_t l = 0; l < x.next[0].size(); ++l) {
            const int c = x.next[static_cast<std::size_t>(a)][l];
            const int d = y.next[static_cast<std::size_t>(b)][l];
            if (!seen[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)]) {
                seen[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] = 1;
                q.emplace(c, d);
            }
        }
    }
    return true;
}

}  // namespace oracle
