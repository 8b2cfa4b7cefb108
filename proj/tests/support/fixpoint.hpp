#pragma once

// Strong solvability by the backward fixpoint over the reachable state
// space: W grows by every state with an action whose outcomes all land in
// W. Independent of the depth-first prover.

#include <map>
#include <set>
#include <vector>

#include "fondltl/fond/task.hpp"

namespace oracle {

inline std::set<fondltl::fond::WorldState> reachable_states(const fondltl::fond::Task& t) {
    std::set<fondltl::fond::WorldState> seen{t.init};
    std::vector<fondltl::fond::WorldState> stack{t.init};
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        for (const auto& a : t.actions) {
            if (!fondltl::fond::applicable(s, a)) continue;
            for (const auto& o : a.outcomes) {
                auto n = fondltl::fond::apply(s, o);
                if (seen.insert(n).second) stack.push_back(std::move(n));
            }
        }
    }
    return seen;
}

inline bool strongly_solvable(const fondltl::fond::Task& t) {
    const auto states = reachable_states(t);
    std::set<fondltl::fond::WorldState> win;
    for (const auto& s : states) if (t.is_goal(s)) win.insert(s);
    bool grew = true;
    while (grew && !win.count(t.init)) {
        grew = false;
        std::vector<fondltl::fond::WorldState> add;
        for (const auto& s : states) {
            if (win.count(s)) continue;
            for (const auto& a : t.actions) {
                if (!fondltl::fond::applicable(s, a)) continue;
                bool all = true;
                for (const auto& o : a.outcomes) all = all && win.count(fondltl::fond::apply(s, o)) > 0;
                if (all) {
                    add.push_back(s);
                    break;
                }
            }
        }
        for (auto& s : add) grew = win.insert(std::move(s)).second || grew;
    }
    return win.count(t.init) > 0;
}

}  // namespace oracle
