#include "sumcont/group.hpp"

#include <sstream>

namespace sumcont {

namespace {
// Keeps sums of two valid coordinates inside int64.
constexpr std::int64_t kIntegerCoordLimit = std::int64_t{1} << 62;
} // namespace

GroupSpec GroupSpec::product(std::vector<std::int64_t> qs) {
    if (qs.empty()) throw PreconditionError("GroupSpec: product needs at least one factor");
    for (std::int64_t q : qs)
        if (q < 1) throw PreconditionError("GroupSpec: factor modulus must be >= 1, got " + std::to_string(q));
    GroupSpec s;
    s.moduli = std::move(qs);
    return s;
}

std::optional<std::int64_t> GroupSpec::order() const {
    if (integer_ambient()) return std::nullopt;
    std::int64_t n = 1;
    for (std::int64_t q : moduli) {
        if (n > (std::int64_t{1} << 62) / q)
            throw CapExceeded("GroupSpec: group order overflows 64 bits");
        n *= q;
    }
    return n;
}

std::string GroupSpec::to_string() const {
    if (integer_ambient()) return "Z";
    if (moduli.size() == 1) return "Zmod:" + std::to_string(moduli[0]);
    std::ostringstream os;
    os << "prod:";
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i) os << ',';
        os << moduli[i];
    }
    return os.str();
}

void validate_element(const GroupSpec& spec, const Element& e) {
    if (static_cast<int>(e.size()) != spec.rank())
        throw PreconditionError("element arity " + std::to_string(e.size()) +
                                " does not match group rank " + std::to_string(spec.rank()));
    if (spec.integer_ambient()) {
        if (e[0] <= -kIntegerCoordLimit || e[0] >= kIntegerCoordLimit)
            throw PreconditionError("integer element " + std::to_string(e[0]) + " outside 64-bit safe range");
        return;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] < 0 || e[k] >= spec.moduli[k])
            throw PreconditionError("coordinate " + std::to_string(e[k]) +
                                    " out of range for cyclic factor of modulus " +
                                    std::to_string(spec.moduli[k]));
    }
}

Element element_add(const GroupSpec& spec, const Element& a, const Element& b) {
    Element out(a.size());
    if (spec.integer_ambient()) {
        out[0] = a[0] + b[0]; // inputs validated, sum cannot overflow
        return out;
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
        std::int64_t v = a[k] + b[k];
        if (v >= spec.moduli[k]) v -= spec.moduli[k];
        out[k] = v;
    }
    return out;
}

Element element_negate(const GroupSpec& spec, const Element& a) {
    Element out(a.size());
    if (spec.integer_ambient()) {
        out[0] = -a[0];
        return out;
    }
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = a[k] == 0 ? 0 : spec.moduli[k] - a[k];
    return out;
}

Element element_zero(const GroupSpec& spec) {
    return Element(static_cast<std::size_t>(spec.rank()), 0);
}

std::string element_to_string(const Element& e) {
    if (e.size() == 1) return std::to_string(e[0]);
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s.push_back(':');
        s += std::to_string(e[i]);
    }
    return s;
}

GroundSet GroundSet::build(GroupSpec spec, std::vector<Element> elements) {
    GroundSet gs;
    gs.spec_ = std::move(spec);
    if (elements.empty()) throw PreconditionError("ground set must be nonempty");
    for (const Element& e : elements) validate_element(gs.spec_, e);

    gs.elements_ = std::move(elements);
    for (int i = 0; i < static_cast<int>(gs.elements_.size()); ++i) {
        auto [it, inserted] = gs.index_.emplace(gs.elements_[static_cast<std::size_t>(i)], i);
        if (!inserted)
            throw PreconditionError("duplicate element " +
                                    element_to_string(gs.elements_[static_cast<std::size_t>(i)]));
    }

    // Sum universe ordered by first appearance in the row-major scan of YxY.
    const int n = gs.size();
    gs.add_index_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Element s = element_add(gs.spec_, gs.elements_[static_cast<std::size_t>(i)],
                                    gs.elements_[static_cast<std::size_t>(j)]);
            auto it = gs.sum_index_map_.find(s);
            int idx;
            if (it == gs.sum_index_map_.end()) {
                idx = static_cast<int>(gs.sum_elements_.size());
                gs.sum_elements_.push_back(s);
                gs.sum_index_map_.emplace(std::move(s), idx);
            } else {
                idx = it->second;
            }
            gs.add_index_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = idx;
        }
    }
    return gs;
}

GroundSet GroundSet::build(GroupSpec spec, const std::vector<std::int64_t>& values) {
    if (spec.rank() != 1)
        throw PreconditionError("scalar element list requires a rank-1 group");
    std::vector<Element> elems;
    elems.reserve(values.size());
    for (std::int64_t v : values) elems.push_back(Element{v});
    return build(std::move(spec), std::move(elems));
}

std::optional<int> GroundSet::index_of(const Element& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> GroundSet::sum_index_of(const Element& e) const {
    auto it = sum_index_map_.find(e);
    if (it == sum_index_map_.end()) return std::nullopt;
    return it->second;
}

IndexSet GroundSet::full_set(Universe u) const {
    IndexSet s = empty_set(u);
    const int n = u == Universe::Ground ? size() : sum_size();
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
}

IndexSet GroundSet::make_set(Universe u, const std::vector<int>& positions) const {
    IndexSet s = empty_set(u);
    for (int p : positions) s.set(p);
    return s;
}

IndexSet GroundSet::sumset(const IndexSet& a, const IndexSet& b) const {
    if (a.tag() != Universe::Ground || b.tag() != Universe::Ground ||
        a.universe_size() != size() || b.universe_size() != size())
        throw PreconditionError("sumset: operands must be subsets of this ground set");
    IndexSet out = empty_set(Universe::Sum);
    a.for_each([&](int i) {
        const auto& row = add_index_[static_cast<std::size_t>(i)];
        b.for_each([&](int j) { out.set(row[static_cast<std::size_t>(j)]); });
    });
    return out;
}

IndexSet GroundSet::sumset_complement(const IndexSet& a, const IndexSet& b) const {
    return full_set(Universe::Sum).and_not(sumset(a, b));
}

} // namespace sumcont
