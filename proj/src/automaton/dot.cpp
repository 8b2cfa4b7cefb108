#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "fondltl/automaton/construct.hpp"
#include "fondltl/error.hpp"

namespace fondltl::automaton {

std::string to_dot(const Dfa& d) {
    std::ostringstream os;
    os << "digraph MONA_DFA {\n";
    os << " // atoms:";
    for (const auto& a : d.atoms) os << ' ' << a.str();
    os << "\n";
    os << " rankdir = LR;\n center = true;\n size = \"7.5,10.5\";\n edge [fontname = Courier];\n";
    os << " node [height = .5, width = .5];\n";
    os << " node [shape = doublecircle];";
    for (int q : d.accepting) os << ' ' << q << ';';
    os << "\n node [shape = circle];";
    for (int q = 1; q <= d.num_states; ++q) {
        if (!d.is_accepting(q)) os << ' ' << q << ';';
    }
    os << "\n init [shape = plaintext, label = \"\"];\n";
    os << " init -> " << d.initial << ";\n";
    for (int q = 1; q <= d.num_states; ++q) {
        for (const Transition& t : d.out(q)) os << ' ' << q << " -> " << t.dest << " [label=\"" << t.guard.bits << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
    return std::string(s.substr(b, e - b));
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    }
    return true;
}

GroundedSymbol parse_symbol(const std::string& tok, int line) {
    GroundedSymbol s;
    const auto open = tok.find('(');
    if (open == std::string::npos) {
        s.name = tok;
        return s;
    }
    if (tok.back() != ')' || open == 0) throw SyntaxError("malformed atom '" + tok + "'", line);
    s.name = tok.substr(0, open);
    std::string args = tok.substr(open + 1, tok.size() - open - 2);
    std::stringstream ss(args);
    std::string o;
    while (std::getline(ss, o, ',')) {
        o = trim(o);
        if (o.empty()) throw SyntaxError("malformed atom '" + tok + "'", line);
        s.objects.push_back(o);
    }
    return s;
}

int state_id(const std::string& tok, int line) {
    if (!all_digits(tok)) throw SyntaxError("expected a state number, got '" + tok + "'", line);
    return std::stoi(tok);
}

}  // namespace

Dfa from_dot(std::string_view text, const std::vector<GroundedSymbol>* atoms) {
    // Blank out comments, remembering the atom order if present.
    std::string body;
    std::optional<std::vector<GroundedSymbol>> declared;
    {
        std::istringstream in{std::string(text)};
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto c = line.find("//");
            if (c != std::string::npos) {
                const std::string comment = trim(std::string_view(line).substr(c + 2));
                if (comment.rfind("atoms:", 0) == 0) {
                    declared.emplace();
                    std::istringstream ws(comment.substr(6));
                    std::string tok;
                    while (ws >> tok) declared->push_back(parse_symbol(tok, lineno));
                }
                line.erase(c);
            }
            body += line;
            body += '\n';
        }
    }
    Dfa d;
    if (declared) {
        d.atoms = *declared;
    } else if (atoms != nullptr) {
        d.atoms = *atoms;
    } else {
        throw SyntaxError("automaton does not declare its atom order", 0);
    }

    auto line_of = [&](std::size_t pos) {
        return 1 + static_cast<int>(std::count(body.begin(), body.begin() + static_cast<long>(pos), '\n'));
    };
    const auto open = body.find('{');
    const auto close = body.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open ||
        trim(std::string_view(body).substr(0, open)).rfind("digraph", 0) != 0) {
        throw SyntaxError("expected 'digraph NAME { ... }'", 0);
    }
    if (!trim(std::string_view(body).substr(close + 1)).empty()) {
        throw SyntaxError("trailing text after the closing brace", line_of(close));
    }

    std::map<int, bool> states;  // id -> accepting
    std::optional<int> initial;
    std::vector<std::tuple<int, int, std::string, int>> edges;
    bool accepting_mode = false;
    std::size_t pos = open + 1;
    while (pos < close) {
        std::size_t end = body.find(';', pos);
        if (end == std::string::npos || end > close) end = close;
        const std::string stmt = trim(std::string_view(body).substr(pos, end - pos));
        const int line = line_of(std::min(body.find_first_not_of(" \t\r\n", pos), end));
        pos = end + 1;
        if (stmt.empty()) continue;
        if (stmt.rfind("node", 0) == 0 && stmt.find('[') != std::string::npos) {
            if (stmt.find("doublecircle") != std::string::npos) {
                accepting_mode = true;
            } else if (stmt.find("shape") != std::string::npos) {
                accepting_mode = false;
            }
            continue;
        }
        if (stmt.rfind("edge", 0) == 0 && stmt.find('[') != std::string::npos) continue;
        const auto arrow = stmt.find("->");
        if (arrow != std::string::npos) {
            const std::string src = trim(std::string_view(stmt).substr(0, arrow));
            std::string rest = trim(std::string_view(stmt).substr(arrow + 2));
            std::string label;
            bool has_label = false;
            const auto br = rest.find('[');
            if (br != std::string::npos) {
                const std::string attrs = rest.substr(br);
                rest = trim(std::string_view(rest).substr(0, br));
                const auto lab = attrs.find("label");
                const auto q1 = attrs.find('"', lab == std::string::npos ? 0 : lab);
                const auto q2 = q1 == std::string::npos ? q1 : attrs.find('"', q1 + 1);
                if (lab == std::string::npos || q1 == std::string::npos || q2 == std::string::npos ||
                    attrs.back() != ']') {
                    throw SyntaxError("malformed edge attributes in '" + stmt + "'", line);
                }
                label = attrs.substr(q1 + 1, q2 - q1 - 1);
                has_label = true;
            }
            if (src == "init") {
                if (has_label) throw SyntaxError("the init arrow takes no label", line);
                initial = state_id(rest, line);
                continue;
            }
            if (!has_label) throw SyntaxError("edge '" + stmt + "' has no label", line);
            edges.emplace_back(state_id(src, line), state_id(rest, line), label, line);
            continue;
        }
        if (stmt.rfind("init", 0) == 0) continue;
        if (all_digits(stmt)) {
            states[std::stoi(stmt)] = accepting_mode;
            continue;
        }
        if (stmt.find('=') != std::string::npos && stmt.find('[') == std::string::npos) continue;
        throw SyntaxError("unrecognised statement '" + stmt + "'", line);
    }

    if (states.empty()) throw SyntaxError("automaton declares no states", 0);
    if (!initial) throw SyntaxError("automaton has no init arrow", 0);
    d.num_states = static_cast<int>(states.size());
    if (states.begin()->first != 1 || states.rbegin()->first != d.num_states) {
        throw SyntaxError("states must be numbered 1.." + std::to_string(d.num_states), 0);
    }
    for (auto [q, acc] : states) {
        if (acc) d.accepting.insert(q);
    }
    if (*initial < 1 || *initial > d.num_states) throw SyntaxError("init arrow targets an undeclared state", 0);
    d.initial = *initial;
    d.transitions.assign(static_cast<std::size_t>(d.num_states), {});
    for (auto& [src, dst, label, line] : edges) {
        if (!states.count(src) || !states.count(dst)) {
            throw SyntaxError("edge " + std::to_string(src) + " -> " + std::to_string(dst) + " uses an undeclared state",
                              line);
        }
        if (label.size() != d.atoms.size()) {
            throw SyntaxError("guard '" + label + "' has " + std::to_string(label.size()) + " symbols but there are " +
                                  std::to_string(d.atoms.size()) + " atoms",
                              line);
        }
        if (label.find_first_not_of("01X") != std::string::npos) {
            throw SyntaxError("guard '" + label + "' may only contain 0, 1 and X", line);
        }
        d.transitions[static_cast<std::size_t>(src - 1)].push_back({Guard{label}, dst});
    }
    return d;
}

}  // namespace fondltl::automaton
