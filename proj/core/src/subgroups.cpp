#include "sumcont/subgroups.hpp"

#include <algorithm>
#include <set>

namespace sumcont {

namespace {

// Enumerate group elements in mixed-radix order (last coordinate fastest).
std::vector<Element> all_elements(const GroupSpec& spec) {
    std::vector<Element> out;
    Element cur = element_zero(spec);
    const int r = spec.rank();
    while (true) {
        out.push_back(cur);
        int k = r - 1;
        while (k >= 0) {
            if (++cur[static_cast<std::size_t>(k)] < spec.moduli[static_cast<std::size_t>(k)]) break;
            cur[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

// Subgroup as a sorted vector of element ids into all_elements order.
using SubgroupIds = std::vector<int>;

// Closure of H under adding the cyclic group generated by g (mod H):
// the union of cosets H + k*g. H is given as a membership mask.
SubgroupIds extend(const GroupSpec& spec, const std::vector<Element>& elems,
                   const std::map<Element, int>& id_of,
                   const std::vector<char>& in_h, const SubgroupIds& h_ids, int g) {
    std::vector<char> member = in_h;
    SubgroupIds out = h_ids;
    Element x = elems[static_cast<std::size_t>(g)];
    while (!member[static_cast<std::size_t>(id_of.at(x))]) {
        for (int h : h_ids) {
            Element y = element_add(spec, x, elems[static_cast<std::size_t>(h)]);
            int id = id_of.at(y);
            if (!member[static_cast<std::size_t>(id)]) {
                member[static_cast<std::size_t>(id)] = 1;
                out.push_back(id);
            }
        }
        x = element_add(spec, x, elems[static_cast<std::size_t>(g)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::vector<Element>> enumerate_subgroups(const GroupSpec& spec,
                                                      std::int64_t order_cap) {
    if (spec.integer_ambient()) {
        // Every nontrivial subgroup of Z is infinite.
        return {{element_zero(spec)}};
    }
    std::int64_t order = *spec.order();
    if (order > order_cap)
        throw CapExceeded("subgroup enumeration refused: group order " + std::to_string(order) +
                          " exceeds cap " + std::to_string(order_cap));

    const std::vector<Element> elems = all_elements(spec);
    std::map<Element, int> id_of;
    for (int i = 0; i < static_cast<int>(elems.size()); ++i)
        id_of.emplace(elems[static_cast<std::size_t>(i)], i);

    // Breadth-first closure over generator sets: level k holds subgroups
    // generated by at most k elements. Every subgroup of a finite abelian
    // group needs at most rank(G) generators.
    std::set<SubgroupIds> seen;
    SubgroupIds trivial{id_of.at(element_zero(spec))};
    seen.insert(trivial);
    std::vector<SubgroupIds> frontier{trivial};
    for (int level = 0; level < spec.rank() && !frontier.empty(); ++level) {
        std::vector<SubgroupIds> next;
        for (const SubgroupIds& h : frontier) {
            std::vector<char> in_h(elems.size(), 0);
            for (int id : h) in_h[static_cast<std::size_t>(id)] = 1;
            for (int g = 0; g < static_cast<int>(elems.size()); ++g) {
                if (in_h[static_cast<std::size_t>(g)]) continue;
                SubgroupIds ext = extend(spec, elems, id_of, in_h, h, g);
                if (seen.insert(ext).second) next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::vector<Element>> out;
    out.reserve(seen.size());
    for (const SubgroupIds& ids : seen) {
        std::vector<Element> sub;
        sub.reserve(ids.size());
        for (int id : ids) sub.push_back(elems[static_cast<std::size_t>(id)]);
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::int64_t beta(const GroupSpec& spec, std::int64_t m, std::int64_t order_cap) {
    if (m < 1) throw PreconditionError("beta requires m >= 1");
    if (spec.integer_ambient()) return 1;
    std::int64_t best = 1;
    for (const auto& sub : enumerate_subgroups(spec, order_cap)) {
        auto sz = static_cast<std::int64_t>(sub.size());
        if (sz <= m) best = std::max(best, sz);
    }
    return best;
}

} // namespace sumcont
