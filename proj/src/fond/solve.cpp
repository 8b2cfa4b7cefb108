#include "fondltl/fond/solve.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "fondltl/error.hpp"

namespace fondltl::fond {

namespace {

class Prover {
public:
    Prover(const Task& t, SolveStats& stats) : t_(t), stats_(stats) {}

    // True when `s` has a strong acyclic policy avoiding the states on the
    // current path. `path_dependent` is set when the answer relied on the
    // path, in which case a failure must not be cached.
    bool prove(const WorldState& s, bool& path_dependent) {
        if (t_.is_goal(s)) return true;
        if (proven_.count(s)) return true;
        if (disproven_.count(s)) return false;
        ++stats_.expanded;
        on_path_.insert(s);
        bool dependent = false;
        for (std::size_t i = 0; i < t_.actions.size(); ++i) {
            const GroundAction& a = t_.actions[i];
            if (!applicable(s, a)) continue;
            bool ok = true;
            for (const WorldState& next : t_.successors(s, a)) {
                if (on_path_.count(next)) {
                    dependent = true;
                    ok = false;
                    break;
                }
                bool dep = false;
                if (!prove(next, dep)) {
                    dependent = dependent || dep;
                    ok = false;
                    break;
                }
            }
            if (ok) {
                on_path_.erase(s);
                proven_.emplace(s, static_cast<int>(i));
                ++stats_.proven;
                return true;
            }
        }
        on_path_.erase(s);
        if (dependent) {
            path_dependent = true;
        } else {
            disproven_.insert(s);
            ++stats_.disproven;
        }
        return false;
    }

    const std::map<WorldState, int>& proven() const { return proven_; }

private:
    const Task& t_;
    SolveStats& stats_;
    std::set<WorldState> on_path_;
    std::map<WorldState, int> proven_;
    std::set<WorldState> disproven_;
};

}  // namespace

std::optional<Policy> strong_solve(const Task& t, SolveStats* stats) {
    SolveStats local;
    Prover p(t, stats ? *stats : local);
    bool dep = false;
    if (!p.prove(t.init, dep)) return std::nullopt;

    Policy pi;
    std::vector<WorldState> stack{t.init};
    std::set<WorldState> seen{t.init};
    while (!stack.empty()) {
        WorldState s = std::move(stack.back());
        stack.pop_back();
        if (t.is_goal(s)) continue;
        const int a = p.proven().at(s);
        pi.table.emplace(s, a);
        for (WorldState& n : t.successors(s, t.actions[static_cast<std::size_t>(a)])) {
            if (seen.insert(n).second) stack.push_back(std::move(n));
        }
    }
    return pi;
}

namespace {

void walk(const Task& t, const Policy& pi, ExecTrace& cur, std::set<WorldState>& on_path,
          std::vector<ExecTrace>& out, std::size_t limit) {
    const WorldState& s = cur.states.back();
    if (t.is_goal(s)) {
        if (out.size() >= limit) throw Error("more than " + std::to_string(limit) + " traces");
        out.push_back(cur);
        return;
    }
    const int* a = pi.find(s);
    if (a == nullptr) throw PolicyError("policy has no action for reachable state {" + t.str(s) + "}");
    const GroundAction& act = t.actions.at(static_cast<std::size_t>(*a));
    if (!applicable(s, act)) {
        throw PolicyError("policy action " + act.name + " is not applicable in state {" + t.str(s) + "}");
    }
    for (WorldState& n : t.successors(s, act)) {
        if (on_path.count(n)) throw Error("execution revisits state {" + t.str(n) + "}; the policy is not strong");
        on_path.insert(n);
        cur.actions.push_back(*a);
        cur.states.push_back(std::move(n));
        walk(t, pi, cur, on_path, out, limit);
        on_path.erase(cur.states.back());
        cur.states.pop_back();
        cur.actions.pop_back();
    }
}

}  // namespace

std::vector<ExecTrace> enumerate_traces(const Task& t, const Policy& pi, std::size_t limit) {
    std::vector<ExecTrace> out;
    ExecTrace cur;
    cur.states.push_back(t.init);
    std::set<WorldState> on_path{t.init};
    walk(t, pi, cur, on_path, out, limit);
    return out;
}

std::string state_hash(const std::string& atoms) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : atoms) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string write_policy(const Task& t, const Policy& pi) {
    std::vector<std::string> lines;
    for (const auto& [s, a] : pi.table) {
        const std::string atoms = t.str(s);
        lines.push_back(state_hash(atoms) + "\t" + atoms + "\t" + t.actions.at(static_cast<std::size_t>(a)).name);
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& l : lines) out += l + "\n";
    return out;
}

Policy read_policy(const Task& t, const std::string& text) {
    Policy pi;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos) {
            throw PolicyError("policy line " + std::to_string(lineno) + ": expected three tab-separated fields");
        }
        const std::string hash = line.substr(0, tab1);
        const std::string atoms = line.substr(tab1 + 1, tab2 - tab1 - 1);
        const std::string action = line.substr(tab2 + 1);
        if (state_hash(atoms) != hash) {
            throw PolicyError("policy line " + std::to_string(lineno) + ": hash does not match the state");
        }
        WorldState s;
        try {
            s = t.parse_state(atoms);
        } catch (const PolicyError& e) {
            throw PolicyError("policy line " + std::to_string(lineno) + ": " + e.what());
        }
        const int a = t.action_id(action);
        if (a < 0) throw PolicyError("policy line " + std::to_string(lineno) + ": unknown action '" + action + "'");
        if (!pi.table.emplace(std::move(s), a).second) {
            throw PolicyError("policy line " + std::to_string(lineno) + ": duplicate state");
        }
    }
    return pi;
}

}  // namespace fondltl::fond
