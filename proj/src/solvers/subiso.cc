#include <isspack/solvers.hh>
#include <isspack/errors.hh>

#include <string>

using std::optional;
using std::to_string;
using std::vector;

namespace isspack
{
    namespace
    {
        // Assigns pattern vertices 1, 2, ... in turn, trying host vertices in
        // ascending order. A partial map is abandoned as soon as an edge
        // between two assigned pattern vertices is missing, which cannot
        // change which complete map is lexicographically first.
        auto extend(const SubIsoInstance & inst, vector<Vertex> & map, vector<bool> & used) -> bool
        {
            auto & g = inst.g();
            auto & h = inst.h();
            Vertex v = Vertex(map.size()) + 1;
            if (v > h.n())
                return true;
            for (Vertex a = 1 ; a <= g.n() ; ++a) {
                if (used[a - 1])
                    continue;
                bool ok = true;
                for (auto w : h.neighbours(v))
                    if (w < v && ! g.adjacent(map[w - 1], a)) {
                        ok = false;
                        break;
                    }
                if (! ok)
                    continue;
                map.push_back(a);
                used[a - 1] = true;
                if (extend(inst, map, used))
                    return true;
                used[a - 1] = false;
                map.pop_back();
            }
            return false;
        }
    }

    auto solve_subiso_bruteforce(const SubIsoInstance & inst, const SolveBudget & budget) -> optional<Isomorphism>
    {
        if (inst.h().n() > budget.max_subiso_pattern || inst.g().n() > budget.max_subiso_host)
            throw BudgetError("subgraph isomorphism oracle is limited to patterns of " + to_string(budget.max_subiso_pattern)
                    + " and hosts of " + to_string(budget.max_subiso_host) + " vertices");
        vector<Vertex> map;
        vector<bool> used(inst.g().n(), false);
        if (! extend(inst, map, used))
            return std::nullopt;
        return Isomorphism(std::move(map));
    }
}
