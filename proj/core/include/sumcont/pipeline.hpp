#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumcont/combinatorics.hpp"
#include "sumcont/group.hpp"
#include "sumcont/threshold.hpp"
#include "sumcont/tripartite.hpp"

namespace sumcont {

/**
 * The accuracy parameter of the refinement pipeline, kept in exact rational
 * form when possible so every derived comparison (delta = epsilon^2, stage
 * thresholds) reproduces bit-for-bit.
 */
class EpsilonSpec {
public:
    static EpsilonSpec real(double v);
    static EpsilonSpec rational(std::int64_t p, std::int64_t q);
    /// Parses "p/q" as exact rational, otherwise as a double.
    static EpsilonSpec parse(const std::string& text);

    double value() const;
    bool is_rational() const { return rational_; }
    Threshold delta() const; // epsilon^2

    /// ceil((1 + epsilon^-2) * sqrt(m)); exact for rational epsilon.
    std::int64_t scaled_sqrt_ceiling(std::int64_t m) const;

    /// lhs <= (1 - epsilon) * rhs; exact for rational epsilon.
    bool le_one_minus_eps(std::int64_t lhs, std::int64_t rhs) const;
    /// lhs <= (1 + 2*epsilon) * rhs; exact for rational epsilon.
    bool le_one_plus_two_eps(std::int64_t lhs, std::int64_t rhs) const;

    std::string repr() const;

private:
    bool rational_ = false;
    std::int64_t p_ = 0, q_ = 0;
    double value_ = 0.0;
};

/// The default accuracy choice ((sqrt(m) * log2 n) / s)^(1/3). Callers must
/// reject values outside (0, 1/4).
double default_epsilon(std::int64_t m, std::int64_t s, std::int64_t n);

/// Family parameters for the first-stage collection.
struct FamilySpec {
    std::int64_t m = 1;
    int s = 1;
    int lambda = 1;
};

struct FirstContainer {
    IndexSet container;   // fingerprint united with the surviving part
    IndexSet fingerprint; // S
};

/**
 * One first-stage container: a single bipartite pass over the full
 * universes. When enforce_size_inequality is set (the default), refuses
 * inputs unless delta * lambda * s >= (1 + delta) * m, the regime in which
 * the container size bound (1 + delta) * m is guaranteed and asserted.
 */
FirstContainer first_container_for(const GroundSet& gs, const IndexSet& a, const IndexSet& f,
                                   const FamilySpec& spec, const Threshold& delta,
                                   bool enforce_size_inequality = true);

struct FirstCollection {
    std::vector<IndexSet> containers; // distinct container contents, first-seen order
    std::int64_t runs = 0;            // family members processed
    BigInt count_bound;               // binomial(n,s) * binomial(n,lambda)
    bool size_bound_asserted = false; // whether the parameter inequality held
};

/// Runs first_container_for over a family of (A, F) pairs and deduplicates.
/// The size bound is asserted only when the parameter inequality holds.
FirstCollection build_first_collection(const GroundSet& gs, const FamilySpec& spec,
                                       const Threshold& delta,
                                       const std::vector<std::pair<IndexSet, IndexSet>>& family);

struct ContainerTriple {
    IndexSet c0, c1, c2;

    bool contains(const IndexSet& s0, const IndexSet& s1, const IndexSet& s2) const {
        return s0.is_subset_of(c0) && s1.is_subset_of(c1) && s2.is_subset_of(c2);
    }
    bool nested_in(const ContainerTriple& outer) const {
        return c0.is_subset_of(outer.c0) && c1.is_subset_of(outer.c1) && c2.is_subset_of(outer.c2);
    }
    bool operator<(const ContainerTriple& o) const {
        if (!(c0 == o.c0)) return c0 < o.c0;
        if (!(c1 == o.c1)) return c1 < o.c1;
        return c2 < o.c2;
    }
    bool operator==(const ContainerTriple& o) const {
        return c0 == o.c0 && c1 == o.c1 && c2 == o.c2;
    }
};

enum class ShrinkLabel { Sparse, Shrunk0, Shrunk1, OutOfRegime };
const char* shrink_label_name(ShrinkLabel label);

struct ShrinkOutcome {
    ContainerTriple triple; // (C0, C1 u S, C2 u F)
    ShrinkLabel label;
    bool in_regime = false; // lambda*s >= m and 4|U1| >= m
    SunsetResult run;
};

/**
 * One refinement step: a two-phase pass whose output triple is contained in
 * (U0, U1, U2) and still contains ((A+B)^c, A, B). The label records which
 * alternative held, decided by recount: the triple's hypergraph is sparse,
 * or U0 lost at least delta*m/6 vertices, or the U1 side shrank by the
 * factor (1 - delta/6). Inside the regime lambda*s >= m, 4|U1| >= m a
 * missing alternative is a build-stopping violation.
 */
ShrinkOutcome shrink_step(const GroundSet& gs, const IndexSet& a, const IndexSet& b,
                          const IndexSet& u0, const IndexSet& u1, const IndexSet& u2,
                          const Threshold& delta, int s, int lambda, std::int64_t m,
                          bool strict = true);

struct PipelineStep {
    int stage;    // 1 or 2
    bool swapped; // stage 2 swaps the roles of the two ground-side parts
    ContainerTriple triple;
    ShrinkLabel label;
    bool in_regime;
    std::string fingerprint_key;
};

struct ContainerSequence {
    ContainerTriple initial; // after the first stage
    std::vector<PipelineStep> steps;
    ContainerTriple final_triple;
    int shrink_count = 0;
    bool final_sparse = false; // e(H(final)) < delta |C1||C2|
    bool final_small = false;  // |C1| <= m/4 and |C2| <= m/4
    std::string chain_key;     // full fingerprint chain; the dedup key
    // Effective parameters (clamped to the pair sizes outside strict mode).
    std::int64_t s_first = 0, lambda_first = 0, s_shrink = 0;
    bool first_stage_clamped = false;
    bool first_stage_size_bound_asserted = false;
};

/**
 * The full refinement sequence for one pair (A, B) with |A+B| <= m:
 * first-stage containers over the full universes, then stage-1 steps
 * shrinking the A side while it is large and dense, then stage-2 steps with
 * the roles swapped, then termination. Each stage re-checks size and
 * density before every step, so on exit the final triple is sparse or both
 * ground-side parts are at most m/4; that dichotomy and the step-count cap
 * 2^5 / delta are verified, not assumed.
 *
 * strict mode enforces |A| >= ceil(sqrt(m)) and
 * |B| >= ceil((1+eps^-2) sqrt(m)); otherwise the stage parameters are
 * clamped to the pair sizes, which keeps every containment contract at the
 * cost of the guaranteed bounds whose parameter inequalities no longer
 * hold (those are then skipped and flagged, never silently assumed).
 */
ContainerSequence build_container_sequence(const GroundSet& gs, const IndexSet& a,
                                           const IndexSet& b, std::int64_t m,
                                           const EpsilonSpec& eps, bool strict = true);

struct Classification {
    char major; // 'a' or 'b'
    // Subtype flags, only filled when requested.
    std::optional<bool> b1, b2;   // split by the absolute half-size threshold
    std::optional<bool> b1p, b2p; // split by the s:(s+s') proportional threshold
};

/**
 * Container type labels. Type (a) means |C1|+|C2| <= (1-eps)m (inclusive,
 * exact for rational eps); everything else is type (b). Subtypes compare
 * each part against (1/2 + 2 sqrt(eps)) m, or against the proportional
 * cuts when the pair (s, s') is supplied, with the sparsity side condition.
 */
Classification classify_container(const GroundSet& gs, const ContainerTriple& triple,
                                  const EpsilonSpec& eps, std::int64_t m,
                                  std::optional<std::pair<std::int64_t, std::int64_t>> s_pair =
                                      std::nullopt,
                                  bool subtypes = false);

struct CollectionEntry {
    ContainerTriple triple;
    std::string chain_key;
    char type_label;
    std::vector<std::string> step_labels;
};

struct CollectionResult {
    std::vector<CollectionEntry> entries; // dedup by chain key, family order
    std::int64_t distinct_triples = 0;    // dedup by triple content
    std::int64_t family_size = 0;
    int max_steps = 0;
    bool step_cap_ok = true;
    std::map<std::string, std::int64_t> label_counts;
    // Distinct step-i fingerprints across the family, with the matching
    // per-step ceiling (binomial(n,s')+1) * binomial(n,lambda') summed over
    // the parameter combinations that actually occurred.
    std::vector<std::int64_t> per_step_fingerprints;
    std::vector<BigInt> per_step_bounds;
};

/// Runs the sequence for every pair of the family (in order), deduplicates
/// final triples by fingerprint chain, and gathers the per-step statistics.
/// Deterministic for any thread count.
CollectionResult build_collection(const GroundSet& gs,
                                  const std::vector<std::pair<IndexSet, IndexSet>>& family,
                                  std::int64_t m, const EpsilonSpec& eps, bool strict,
                                  int threads);

} // namespace sumcont
