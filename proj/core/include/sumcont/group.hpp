#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumcont/common.hpp"
#include "sumcont/index_set.hpp"

namespace sumcont {

/**
 * An ambient abelian group: the integers, a cyclic group Z_q, or a finite
 * product of cyclic factors. The integers are represented by an empty
 * modulus list.
 */
struct GroupSpec {
    std::vector<std::int64_t> moduli; // empty means integer ambient

    static GroupSpec integers() { return GroupSpec{}; }
    static GroupSpec cyclic(std::int64_t q) { return product({q}); }
    static GroupSpec product(std::vector<std::int64_t> qs);

    bool integer_ambient() const { return moduli.empty(); }
    int rank() const { return integer_ambient() ? 1 : static_cast<int>(moduli.size()); }

    /// Group order for finite specs; nullopt for the integers.
    std::optional<std::int64_t> order() const;

    std::string to_string() const;

    bool operator==(const GroupSpec& o) const { return moduli == o.moduli; }
};

/// A group element as one coordinate per cyclic factor (a single coordinate
/// for the integers). Coordinates of finite factors are kept reduced.
using Element = std::vector<std::int64_t>;

Element element_add(const GroupSpec& spec, const Element& a, const Element& b);
Element element_negate(const GroupSpec& spec, const Element& a);
Element element_zero(const GroupSpec& spec);
/// Throws PreconditionError on arity mismatch, unreduced finite coordinates,
/// or integer coordinates outside the 64-bit safe range.
void validate_element(const GroupSpec& spec, const Element& e);
std::string element_to_string(const Element& e);

/**
 * An ordered n-element subset Y of an ambient group, together with the sum
 * universe Y+Y. The element order is the order given at construction; the
 * sum universe is ordered by first appearance in a row-major scan of YxY.
 * Both orders stay fixed for the lifetime of the set; all tie-breaking and
 * fingerprint determinism relies on that.
 */
class GroundSet {
public:
    /// Validates and builds. Throws PreconditionError on duplicates or
    /// invalid coordinates.
    static GroundSet build(GroupSpec spec, std::vector<Element> elements);

    /// Convenience for rank-1 groups: elements given as plain integers.
    static GroundSet build(GroupSpec spec, const std::vector<std::int64_t>& values);

    const GroupSpec& spec() const { return spec_; }
    int size() const { return static_cast<int>(elements_.size()); }
    int sum_size() const { return static_cast<int>(sum_elements_.size()); }

    const Element& element(int i) const { return elements_.at(static_cast<std::size_t>(i)); }
    const Element& sum_element(int i) const { return sum_elements_.at(static_cast<std::size_t>(i)); }

    /// Position of y_i + y_j in the sum universe.
    int sum_index(int i, int j) const {
        return add_index_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    std::optional<int> index_of(const Element& e) const;
    std::optional<int> sum_index_of(const Element& e) const;

    IndexSet empty_set(Universe u) const {
        return IndexSet(u, u == Universe::Ground ? size() : sum_size());
    }
    IndexSet full_set(Universe u) const;
    IndexSet make_set(Universe u, const std::vector<int>& positions) const;

    /// { a+b : a in A, b in B } as a subset of Y+Y. Empty if either side is.
    IndexSet sumset(const IndexSet& a, const IndexSet& b) const;
    /// (Y+Y) minus A+B.
    IndexSet sumset_complement(const IndexSet& a, const IndexSet& b) const;
    int sumset_size(const IndexSet& a, const IndexSet& b) const { return sumset(a, b).count(); }

private:
    GroupSpec spec_;
    std::vector<Element> elements_;
    std::map<Element, int> index_;
    std::vector<Element> sum_elements_;
    std::map<Element, int> sum_index_map_;
    std::vector<std::vector<int>> add_index_;
};

} // namespace sumcont
