#include <map>

#include "fondltl/automaton/construct.hpp"

namespace fondltl::automaton {

Dfa minimize(const Dfa& d, GuardStyle style) {
    const TableDfa t = canonical(to_table(d));
    const std::size_t n = t.size();

    // Moore refinement: split classes by (own class, successor classes)
    // until the number of classes is stable.
    std::vector<int> cls(n);
    for (std::size_t q = 0; q < n; ++q) cls[q] = t.accepting[q] ? 1 : 0;
    std::size_t count = 0;
    while (true) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(n);
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<int> sig{cls[q]};
            for (int s : t.next[q]) sig.push_back(cls[static_cast<std::size_t>(s)]);
            next_cls[q] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size())).first->second;
        }
        cls = std::move(next_cls);
        if (sig_ids.size() == count) break;
        count = sig_ids.size();
    }

    TableDfa q;
    q.atoms = t.atoms;
    q.next.assign(count, {});
    q.accepting.assign(count, false);
    q.initial = cls[static_cast<std::size_t>(t.initial)];
    for (std::size_t s = 0; s < n; ++s) {
        auto& row = q.next[static_cast<std::size_t>(cls[s])];
        if (!row.empty()) continue;
        for (int succ : t.next[s]) row.push_back(cls[static_cast<std::size_t>(succ)]);
        q.accepting[static_cast<std::size_t>(cls[s])] = t.accepting[s];
    }
    return from_table(canonical(q), style);
}

}  // namespace fondltl::automaton
