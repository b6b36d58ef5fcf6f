#include "sumcont/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sumcont/bipartite.hpp"
#include "sumcont/parallel.hpp"

namespace sumcont {

EpsilonSpec EpsilonSpec::real(double v) {
    EpsilonSpec e;
    e.value_ = v;
    return e;
}

EpsilonSpec EpsilonSpec::rational(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0) throw PreconditionError("epsilon: rational must be positive");
    EpsilonSpec e;
    e.rational_ = true;
    e.p_ = p;
    e.q_ = q;
    return e;
}

EpsilonSpec EpsilonSpec::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    return real(std::stod(text));
}

double EpsilonSpec::value() const {
    if (rational_) return static_cast<double>(p_) / static_cast<double>(q_);
    return value_;
}

Threshold EpsilonSpec::delta() const {
    if (rational_) return Threshold::rational(p_ * p_, q_ * q_);
    return Threshold::real(value_ * value_);
}

std::int64_t EpsilonSpec::scaled_sqrt_ceiling(std::int64_t m) const {
    if (rational_) {
        // 1 + (q/p)^2 = (p^2 + q^2) / p^2
        return ceil_mul_sqrt(BigInt(p_) * p_ + BigInt(q_) * q_, BigInt(p_) * p_, m);
    }
    long double v = value_;
    long double k = std::ceil((1.0L + 1.0L / (v * v)) * std::sqrt(static_cast<long double>(m)));
    return static_cast<std::int64_t>(k);
}

bool EpsilonSpec::le_one_minus_eps(std::int64_t lhs, std::int64_t rhs) const {
    if (rational_) return BigInt(lhs) * q_ <= BigInt(q_ - p_) * rhs;
    return static_cast<long double>(lhs) <= (1.0L - static_cast<long double>(value_)) * rhs;
}

bool EpsilonSpec::le_one_plus_two_eps(std::int64_t lhs, std::int64_t rhs) const {
    if (rational_) return BigInt(lhs) * q_ <= BigInt(q_ + 2 * p_) * rhs;
    return static_cast<long double>(lhs) <= (1.0L + 2.0L * static_cast<long double>(value_)) * rhs;
}

std::string EpsilonSpec::repr() const {
    if (rational_) return std::to_string(p_) + "/" + std::to_string(q_);
    return std::to_string(value_);
}

double default_epsilon(std::int64_t m, std::int64_t s, std::int64_t n) {
    if (m < 1 || s < 1 || n < 2)
        throw PreconditionError("default epsilon needs m >= 1, s >= 1, n >= 2");
    double num = std::sqrt(static_cast<double>(m)) * std::log2(static_cast<double>(n));
    return std::cbrt(num / static_cast<double>(s));
}

namespace {

void check_epsilon_range(const EpsilonSpec& eps) {
    double v = eps.value();
    if (!(v > 0.0 && v < 0.25))
        throw PreconditionError("epsilon = " + eps.repr() + " outside (0, 1/4)");
}

IndexSet lowest_k(const GroundSet& gs, const IndexSet& from, int k) {
    IndexSet out = gs.empty_set(Universe::Ground);
    int taken = 0;
    from.for_each([&](int i) {
        if (taken < k) {
            out.set(i);
            ++taken;
        }
    });
    if (taken < k) throw PreconditionError("lowest_k: set smaller than requested size");
    return out;
}

// lhs <= (1 + delta) * rhs, exact for rational delta.
bool le_one_plus_delta(const Threshold& delta, std::int64_t lhs, std::int64_t rhs) {
    if (delta.is_rational())
        return BigInt(lhs) * *delta.denominator() <=
               BigInt(*delta.denominator() + *delta.numerator()) * rhs;
    return static_cast<long double>(lhs) <=
           (1.0L + static_cast<long double>(delta.value())) * rhs;
}

// delta * lambda * s >= (1 + delta) * m, exact for rational delta.
bool size_inequality_holds(const Threshold& delta, std::int64_t lambda, std::int64_t s,
                           std::int64_t m) {
    if (delta.is_rational())
        return BigInt(*delta.numerator()) * lambda * s >=
               BigInt(*delta.denominator() + *delta.numerator()) * m;
    long double d = delta.value();
    return d * static_cast<long double>(lambda) * static_cast<long double>(s) >=
           (1.0L + d) * static_cast<long double>(m);
}

std::string fingerprint_key(const IndexSet& s, const IndexSet& f) {
    return "S" + s.hex_key() + "F" + f.hex_key();
}

} // namespace

FirstContainer first_container_for(const GroundSet& gs, const IndexSet& a, const IndexSet& f,
                                   const FamilySpec& spec, const Threshold& delta,
                                   bool enforce_size_inequality) {
    const bool inequality = size_inequality_holds(delta, spec.lambda, spec.s, spec.m);
    if (enforce_size_inequality && !inequality)
        throw PreconditionError(
            "first_container_for: delta*lambda*s = " + std::to_string(delta.value()) + "*" +
            std::to_string(spec.lambda) + "*" + std::to_string(spec.s) +
            " is below (1+delta)*m with m = " + std::to_string(spec.m));
    if (a.count() < spec.s)
        throw PreconditionError("first_container_for: |A| below s");
    if (f.count() < spec.lambda)
        throw PreconditionError("first_container_for: |F| below lambda");

    SumriseOptions opts;
    opts.checked = true;
    opts.check_complement = true; // trivial against the full sum universe
    opts.sumset_cap = spec.m;
    SumriseResult run = sumrise(gs, spec.s, a, f, gs.full_set(Universe::Sum),
                                gs.full_set(Universe::Ground), opts);

    FirstContainer out;
    out.fingerprint = run.fingerprint;
    out.container = run.fingerprint | run.c1;
    if (!a.is_subset_of(out.container))
        throw InvariantViolation("first_container_for: input set escaped its container");
    if (inequality && !le_one_plus_delta(delta, out.container.count(), spec.m))
        throw InvariantViolation("first_container_for: container size exceeded (1+delta)m");
    return out;
}

FirstCollection build_first_collection(const GroundSet& gs, const FamilySpec& spec,
                                       const Threshold& delta,
                                       const std::vector<std::pair<IndexSet, IndexSet>>& family) {
    FirstCollection out;
    out.count_bound = binomial(gs.size(), spec.s) * binomial(gs.size(), spec.lambda);
    out.size_bound_asserted = size_inequality_holds(delta, spec.lambda, spec.s, spec.m);
    std::set<IndexSet> seen;
    for (const auto& [a, f] : family) {
        FirstContainer fc = first_container_for(gs, a, f, spec, delta,
                                                /*enforce_size_inequality=*/false);
        if (out.size_bound_asserted &&
            !le_one_plus_delta(delta, fc.container.count(), spec.m))
            throw InvariantViolation("first collection: container size exceeded (1+delta)m");
        ++out.runs;
        if (seen.insert(fc.container).second) out.containers.push_back(fc.container);
    }
    return out;
}

const char* shrink_label_name(ShrinkLabel label) {
    switch (label) {
        case ShrinkLabel::Sparse: return "sparse";
        case ShrinkLabel::Shrunk0: return "shrunk-0";
        case ShrinkLabel::Shrunk1: return "shrunk-1";
        case ShrinkLabel::OutOfRegime: return "out-of-regime";
    }
    return "?";
}

ShrinkOutcome shrink_step(const GroundSet& gs, const IndexSet& a, const IndexSet& b,
                          const IndexSet& u0, const IndexSet& u1, const IndexSet& u2,
                          const Threshold& delta, int s, int lambda, std::int64_t m,
                          bool strict) {
    ShrinkOutcome out;
    out.in_regime =
        static_cast<std::int64_t>(lambda) * s >= m && 4 * static_cast<std::int64_t>(u1.count()) >= m;

    SunsetOptions opts;
    opts.checked = strict;
    opts.sumset_cap = m;
    out.run = sunset(gs, delta, s, lambda, a, b, u0, u1, u2, opts);

    out.triple.c0 = out.run.c0;
    out.triple.c1 = out.run.c1 | out.run.fingerprint_s;
    out.triple.c2 = out.run.c2 | out.run.fingerprint_f;

    IndexSet comp = gs.sumset_complement(a, b);
    if (!out.triple.contains(comp, a, b))
        throw InvariantViolation("shrink_step: containment contract failed");
    ContainerTriple outer{u0, u1, u2};
    if (!out.triple.nested_in(outer))
        throw InvariantViolation("shrink_step: output escaped the input universes");

    const std::int64_t e =
        hyper_edge_count(gs, out.triple.c0, out.triple.c1, out.triple.c2);
    const bool sparse = !delta.at_least(e, out.triple.c1.count(), out.triple.c2.count());
    const bool shrunk0 =
        delta.at_least(6 * (static_cast<std::int64_t>(u0.count()) - out.triple.c0.count()), m, 1);
    const bool shrunk1 = delta.at_least(
        6 * (static_cast<std::int64_t>(u1.count()) - out.triple.c1.count()), u1.count(), 1);

    if (sparse) out.label = ShrinkLabel::Sparse;
    else if (shrunk0) out.label = ShrinkLabel::Shrunk0;
    else if (shrunk1) out.label = ShrinkLabel::Shrunk1;
    else if (!out.in_regime) out.label = ShrinkLabel::OutOfRegime;
    else
        throw InvariantViolation(
            "shrink_step: no alternative held inside the guaranteed regime");
    return out;
}

namespace {

bool triples_equal(const ContainerTriple& x, const ContainerTriple& y) {
    return x.c0 == y.c0 && x.c1 == y.c1 && x.c2 == y.c2;
}

void check_step_cap(const Threshold& delta, int count) {
    bool ok;
    if (delta.is_rational())
        ok = BigInt(count) * *delta.numerator() <= BigInt(32) * *delta.denominator();
    else
        ok = static_cast<long double>(count) <= 32.0L / static_cast<long double>(delta.value());
    if (!ok)
        throw InvariantViolation("refinement exceeded the 2^5/delta step bound at step " +
                                 std::to_string(count));
}

} // namespace

ContainerSequence build_container_sequence(const GroundSet& gs, const IndexSet& a,
                                           const IndexSet& b, std::int64_t m,
                                           const EpsilonSpec& eps, bool strict) {
    check_epsilon_range(eps);
    if (a.empty() || b.empty())
        throw PreconditionError("container sequence: both input sets must be nonempty");
    IndexSet ab = gs.sumset(a, b);
    if (ab.count() > m)
        throw PreconditionError("container sequence: |A+B| = " + std::to_string(ab.count()) +
                                " exceeds m = " + std::to_string(m));
    const IndexSet comp = gs.full_set(Universe::Sum).and_not(ab);

    const std::int64_t s_paper = ceil_sqrt(m);
    const std::int64_t lam_paper = eps.scaled_sqrt_ceiling(m);
    if (strict) {
        if (a.count() < s_paper)
            throw PreconditionError("container sequence: |A| = " + std::to_string(a.count()) +
                                    " below ceil(sqrt(m)) = " + std::to_string(s_paper));
        if (b.count() < lam_paper)
            throw PreconditionError("container sequence: |B| = " + std::to_string(b.count()) +
                                    " below the required " + std::to_string(lam_paper));
    }

    ContainerSequence seq;
    seq.s_first = std::min<std::int64_t>(s_paper, a.count());
    seq.lambda_first = std::min<std::int64_t>(lam_paper, b.count());
    seq.first_stage_clamped = seq.s_first < s_paper || seq.lambda_first < lam_paper;
    seq.s_shrink = s_paper;

    const Threshold delta = eps.delta();

    // First stage: one bipartite pass per side over the full universes.
    SumriseOptions fopts;
    fopts.checked = true;
    fopts.check_complement = true;
    fopts.sumset_cap = m;
    const IndexSet full_sum = gs.full_set(Universe::Sum);
    const IndexSet full_ground = gs.full_set(Universe::Ground);

    IndexSet f_for_a = lowest_k(gs, b, static_cast<int>(seq.lambda_first));
    SumriseResult ra =
        sumrise(gs, static_cast<int>(seq.s_first), a, f_for_a, full_sum, full_ground, fopts);
    IndexSet f_for_b = lowest_k(gs, a, static_cast<int>(seq.s_first));
    SumriseResult rb =
        sumrise(gs, static_cast<int>(seq.lambda_first), b, f_for_b, full_sum, full_ground, fopts);

    seq.initial.c0 = full_sum;
    seq.initial.c1 = ra.fingerprint | ra.c1;
    seq.initial.c2 = rb.fingerprint | rb.c1;
    if (!seq.initial.contains(comp, a, b))
        throw InvariantViolation("container sequence: first stage containment failed");

    seq.first_stage_size_bound_asserted =
        size_inequality_holds(delta, seq.lambda_first, seq.s_first, m);
    if (seq.first_stage_size_bound_asserted &&
        (!le_one_plus_delta(delta, seq.initial.c1.count(), m) ||
         !le_one_plus_delta(delta, seq.initial.c2.count(), m)))
        throw InvariantViolation("container sequence: first stage size bound failed");

    seq.chain_key = "0:" + fingerprint_key(ra.fingerprint, f_for_a) + "+" +
                    fingerprint_key(rb.fingerprint, f_for_b);

    ContainerTriple cur = seq.initial;
    const int absolute_cap = gs.sum_size() + 2 * gs.size() + 4;

    auto run_stage = [&](int stage) {
        const bool swapped = stage == 2;
        while (true) {
            const IndexSet& shrinking = swapped ? cur.c2 : cur.c1;
            if (4 * static_cast<std::int64_t>(shrinking.count()) <= m) break;
            std::int64_t e = hyper_edge_count(gs, cur.c0, cur.c1, cur.c2);
            if (!delta.at_least(e, cur.c1.count(), cur.c2.count())) break; // sparse

            const IndexSet& first = swapped ? b : a;
            const IndexSet& second = swapped ? a : b;
            int s_eff = static_cast<int>(std::min<std::int64_t>(seq.s_shrink, first.count()));
            int lam_eff = static_cast<int>(std::min<std::int64_t>(seq.s_shrink, second.count()));
            ShrinkOutcome step =
                swapped ? shrink_step(gs, b, a, cur.c0, cur.c2, cur.c1, delta, s_eff, lam_eff, m)
                        : shrink_step(gs, a, b, cur.c0, cur.c1, cur.c2, delta, s_eff, lam_eff, m);

            ContainerTriple next;
            if (swapped) {
                next.c0 = step.triple.c0;
                next.c2 = step.triple.c1;
                next.c1 = step.triple.c2;
            } else {
                next = step.triple;
            }
            if (!next.nested_in(cur) || !next.contains(comp, a, b))
                throw InvariantViolation("container sequence: nesting broke at a step");

            PipelineStep rec;
            rec.stage = stage;
            rec.swapped = swapped;
            rec.triple = next;
            rec.label = step.label;
            rec.in_regime = step.in_regime;
            rec.fingerprint_key = (swapped ? "2:" : "1:") +
                                  fingerprint_key(step.run.fingerprint_s, step.run.fingerprint_f);
            seq.chain_key += "|" + rec.fingerprint_key;
            seq.steps.push_back(rec);
            ++seq.shrink_count;
            check_step_cap(delta, seq.shrink_count);
            if (seq.shrink_count > absolute_cap)
                throw InvariantViolation("container sequence: progress bound exceeded");

            const bool stalled = triples_equal(next, cur);
            cur = next;
            if (stalled && step.label != ShrinkLabel::Sparse)
                throw InvariantViolation("container sequence: stalled without a sparse label");
        }
    };

    run_stage(1);
    run_stage(2);

    seq.final_triple = cur;
    std::int64_t e_final = hyper_edge_count(gs, cur.c0, cur.c1, cur.c2);
    seq.final_sparse = !delta.at_least(e_final, cur.c1.count(), cur.c2.count());
    seq.final_small = 4 * static_cast<std::int64_t>(cur.c1.count()) <= m &&
                      4 * static_cast<std::int64_t>(cur.c2.count()) <= m;
    if (!seq.final_sparse && !seq.final_small)
        throw InvariantViolation("container sequence: final dichotomy failed");
    return seq;
}

Classification classify_container(const GroundSet& gs, const ContainerTriple& triple,
                                  const EpsilonSpec& eps, std::int64_t m,
                                  std::optional<std::pair<std::int64_t, std::int64_t>> s_pair,
                                  bool subtypes) {
    check_epsilon_range(eps);
    Classification cls;
    const std::int64_t c1 = triple.c1.count();
    const std::int64_t c2 = triple.c2.count();
    cls.major = eps.le_one_minus_eps(c1 + c2, m) ? 'a' : 'b';
    if (!subtypes) return cls;

    const long double root = std::sqrt(static_cast<long double>(eps.value()));
    const long double md = static_cast<long double>(m);
    std::int64_t e = hyper_edge_count(gs, triple.c0, triple.c1, triple.c2);
    const bool sparse = !eps.delta().at_least(e, c1, c2);

    const long double cut = (0.5L + 2.0L * root) * md;
    cls.b1 = c1 > cut || c2 > cut;
    cls.b2 = c1 <= cut && c2 <= cut && sparse;

    if (s_pair) {
        const long double frac1 =
            static_cast<long double>(s_pair->first) / static_cast<long double>(s_pair->first + s_pair->second);
        const long double cut1 = (frac1 + 2.0L * root) * md;
        const long double cut2 = (1.0L - frac1 + 2.0L * root) * md;
        cls.b1p = c1 > cut1 || c2 > cut2;
        cls.b2p = c1 <= cut1 && c2 <= cut2 && sparse;
    }
    return cls;
}

CollectionResult build_collection(const GroundSet& gs,
                                  const std::vector<std::pair<IndexSet, IndexSet>>& family,
                                  std::int64_t m, const EpsilonSpec& eps, bool strict,
                                  int threads) {
    struct Item {
        std::string chain;
        ContainerTriple triple;
        std::vector<std::string> labels;
        std::vector<std::string> step_keys;
        std::vector<std::pair<int, int>> step_sizes; // (|S| requested, |F|) per step
        int steps;
        bool cap_ok;
    };
    using Chunk = std::vector<Item>;

    auto chunks = parallel_chunks<Chunk>(
        family.size(), threads, [&](std::uint64_t lo, std::uint64_t hi) {
            Chunk local;
            local.reserve(static_cast<std::size_t>(hi - lo));
            for (std::uint64_t i = lo; i < hi; ++i) {
                const auto& [a, b] = family[static_cast<std::size_t>(i)];
                ContainerSequence seq = build_container_sequence(gs, a, b, m, eps, strict);
                Item item;
                item.chain = seq.chain_key;
                item.triple = seq.final_triple;
                item.steps = seq.shrink_count;
                item.cap_ok = true;
                for (const PipelineStep& st : seq.steps) {
                    item.labels.emplace_back(shrink_label_name(st.label));
                    item.step_keys.push_back(st.fingerprint_key);
                    item.step_sizes.emplace_back(
                        st.swapped
                            ? std::min<int>(static_cast<int>(seq.s_shrink), b.count())
                            : std::min<int>(static_cast<int>(seq.s_shrink), a.count()),
                        st.swapped
                            ? std::min<int>(static_cast<int>(seq.s_shrink), a.count())
                            : std::min<int>(static_cast<int>(seq.s_shrink), b.count()));
                }
                local.push_back(std::move(item));
            }
            return local;
        });

    CollectionResult out;
    out.family_size = static_cast<std::int64_t>(family.size());
    std::set<std::string> chains;
    std::set<ContainerTriple> contents;
    std::vector<std::set<std::string>> step_fps;
    std::vector<std::set<std::pair<int, int>>> step_params;
    for (const Chunk& chunk : chunks) {
        for (const Item& item : chunk) {
            out.max_steps = std::max(out.max_steps, item.steps);
            for (const std::string& lab : item.labels) ++out.label_counts[lab];
            for (std::size_t k = 0; k < item.step_keys.size(); ++k) {
                if (step_fps.size() <= k) {
                    step_fps.emplace_back();
                    step_params.emplace_back();
                }
                step_fps[k].insert(item.step_keys[k]);
                step_params[k].insert(item.step_sizes[k]);
            }
            contents.insert(item.triple);
            if (chains.insert(item.chain).second) {
                CollectionEntry entry;
                entry.triple = item.triple;
                entry.chain_key = item.chain;
                entry.type_label = classify_container(gs, item.triple, eps, m).major;
                entry.step_labels = item.labels;
                out.entries.push_back(std::move(entry));
            }
        }
    }
    out.distinct_triples = static_cast<std::int64_t>(contents.size());
    // Global collection ceiling n^(2^7 eps^-2 sqrt(m)); far from binding at
    // this scale, the per-step ceilings below are the real checks.
    if (!out.entries.empty()) {
        const double v = eps.value();
        long double cap_log2 = 128.0L / (v * v) *
                               std::sqrt(static_cast<long double>(m)) *
                               std::log2(static_cast<long double>(std::max(2, gs.size())));
        if (std::log2(static_cast<long double>(out.entries.size())) > cap_log2)
            throw InvariantViolation("collection: global size ceiling exceeded");
    }
    for (std::size_t k = 0; k < step_fps.size(); ++k) {
        out.per_step_fingerprints.push_back(static_cast<std::int64_t>(step_fps[k].size()));
        BigInt bound = 0;
        for (auto [s_eff, lam_eff] : step_params[k])
            bound += (binomial(gs.size(), s_eff) + 1) * binomial(gs.size(), lam_eff);
        out.per_step_bounds.push_back(bound);
        if (BigInt(out.per_step_fingerprints.back()) > bound)
            throw InvariantViolation("collection: step fingerprint count exceeded its ceiling");
    }
    return out;
}

} // namespace sumcont
