// Command-line front end: exact counting, container builds, bound and
// inequality evaluation, structure sampling, and single algorithm runs.
//
// Exit codes: 0 success, 1 usage error, 2 domain/precondition error,
// 3 cap exceeded, 4 falsified invariant.

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumcont/bounds.hpp"
#include "sumcont/census.hpp"
#include "sumcont/grids.hpp"
#include "sumcont/lowerbound.hpp"
#include "sumcont/pipeline.hpp"
#include "sumcont/structure.hpp"
#include "sumcont/subgroups.hpp"

using json = nlohmann::ordered_json;
using namespace sumcont;

namespace {

struct CommonArgs {
    std::string group = "Z";
    std::string ground;
    std::string out;
    std::string format = "json";
    int threads = 0;
    std::uint64_t cap = 100'000'000;
    bool unchecked = false;
    bool trace = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        out.push_back(text.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

GroupSpec parse_group(const std::string& text) {
    if (text == "Z") return GroupSpec::integers();
    auto parse_list = [](const std::string& body) {
        std::vector<std::int64_t> qs;
        for (const std::string& tok : split(body, ',')) {
            if (tok.empty()) throw PreconditionError("group spec: empty modulus");
            qs.push_back(std::stoll(tok));
        }
        return qs;
    };
    if (text.rfind("Zmod:", 0) == 0) return GroupSpec::cyclic(std::stoll(text.substr(5)));
    if (text.rfind("prod:", 0) == 0) return GroupSpec::product(parse_list(text.substr(5)));
    throw PreconditionError("group spec '" + text +
                            "' not recognized (Z | Zmod:q | prod:q1,q2,...)");
}

Element parse_element(const GroupSpec& spec, const std::string& tok) {
    Element e;
    for (const std::string& part : split(tok, ':')) {
        if (part.empty()) throw PreconditionError("element '" + tok + "': empty coordinate");
        e.push_back(std::stoll(part));
    }
    if (static_cast<int>(e.size()) != spec.rank())
        throw PreconditionError("element '" + tok + "' has " + std::to_string(e.size()) +
                                " coordinates, group has rank " + std::to_string(spec.rank()));
    return e;
}

GroundSet parse_ground(const GroupSpec& spec, const std::string& text) {
    if (text.empty()) throw PreconditionError("missing --ground");
    if (text.rfind("interval:", 0) == 0) {
        std::string body = text.substr(9);
        auto dots = body.find("..");
        if (dots == std::string::npos)
            throw PreconditionError("interval ground spec must look like interval:lo..hi");
        std::int64_t lo = std::stoll(body.substr(0, dots));
        std::int64_t hi = std::stoll(body.substr(dots + 2));
        if (hi < lo) throw PreconditionError("interval ground spec: hi < lo");
        if (spec.rank() != 1)
            throw PreconditionError("interval ground spec requires a rank-1 group");
        std::vector<std::int64_t> vals(static_cast<std::size_t>(hi - lo + 1));
        std::iota(vals.begin(), vals.end(), lo);
        return GroundSet::build(spec, vals);
    }
    std::vector<Element> elems;
    for (const std::string& tok : split(text, ',')) elems.push_back(parse_element(spec, tok));
    return GroundSet::build(spec, std::move(elems));
}

IndexSet parse_subset(const GroundSet& gs, const std::string& text) {
    IndexSet out = gs.empty_set(Universe::Ground);
    if (text.empty()) return out;
    for (const std::string& tok : split(text, ',')) {
        auto idx = gs.index_of(parse_element(gs.spec(), tok));
        if (!idx) throw PreconditionError("element " + tok + " is not in the ground set");
        out.set(*idx);
    }
    return out;
}

IndexSet parse_sum_subset(const GroundSet& gs, const std::string& text) {
    IndexSet out = gs.empty_set(Universe::Sum);
    if (text.empty()) return out;
    for (const std::string& tok : split(text, ',')) {
        auto idx = gs.sum_index_of(parse_element(gs.spec(), tok));
        if (!idx) throw PreconditionError("element " + tok + " is not in Y+Y");
        out.set(*idx);
    }
    return out;
}

json set_to_json(const GroundSet& gs, const IndexSet& set) {
    json arr = json::array();
    set.for_each([&](int i) {
        const Element& e = set.tag() == Universe::Ground ? gs.element(i) : gs.sum_element(i);
        if (e.size() == 1) {
            arr.push_back(e[0]);
        } else {
            json tup = json::array();
            for (std::int64_t c : e) tup.push_back(c);
            arr.push_back(tup);
        }
    });
    return arr;
}

json bigint_to_json(const BigInt& v) {
    if (v >= BigInt(std::numeric_limits<std::int64_t>::min()) &&
        v <= BigInt(std::numeric_limits<std::int64_t>::max()))
        return static_cast<std::int64_t>(v);
    return v.str();
}

void flatten_csv(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten_csv(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array()) {
        int i = 0;
        for (const auto& item : j) flatten_csv(item, prefix + "[" + std::to_string(i++) + "]", os);
    } else {
        os << prefix << "," << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const json& j, const CommonArgs& common) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!common.out.empty()) {
        file.open(common.out);
        if (!file) throw PreconditionError("cannot open output file " + common.out);
        os = &file;
    }
    if (common.format == "csv") {
        flatten_csv(j, "", *os);
    } else {
        *os << j.dump(2) << "\n";
    }
}

CensusOptions census_options(const CommonArgs& c, bool materialize = false) {
    CensusOptions opts;
    opts.cost_cap = c.cap;
    opts.threads = c.threads;
    opts.materialize = materialize;
    return opts;
}

EpsilonSpec epsilon_or_default(const std::string& text, std::int64_t m, std::int64_t s,
                               std::int64_t n) {
    if (!text.empty()) return EpsilonSpec::parse(text);
    double eps = default_epsilon(m, s, n);
    if (!(eps > 0.0 && eps < 0.25))
        throw PreconditionError("default epsilon " + std::to_string(eps) +
                                " falls outside (0, 1/4); pass --epsilon explicitly");
    return EpsilonSpec::real(eps);
}

json trace_to_json(const RunTrace& trace) {
    json lines = json::array();
    for (const std::string& line : trace.lines()) lines.push_back(line);
    return lines;
}

void add_common(CLI::App* cmd, CommonArgs& common, bool with_ground = true) {
    cmd->add_option("--group", common.group, "Z | Zmod:q | prod:q1,q2,...");
    if (with_ground)
        cmd->add_option("--ground", common.ground, "interval:lo..hi or a comma list of elements");
    cmd->add_option("--out", common.out, "write output to a file instead of stdout");
    cmd->add_option("--format", common.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--threads", common.threads, "worker count (0 = auto)");
    cmd->add_option("--cap", common.cap, "enumeration cost cap");
    cmd->add_flag("--unchecked", common.unchecked, "skip input-family membership checks");
    cmd->add_flag("--trace", common.trace, "include per-iteration trace records");
}

} // namespace

int run_command(int argc, char** argv) {
    CLI::App app{"containers, exact counts and bound checks for small-sumset families"};
    app.require_subcommand(1);

    CommonArgs count_common;
    std::string count_mode = "sym";
    std::int64_t count_m = 1;
    int count_s = -1, count_s2 = -1, count_min = 0;
    auto* count = app.add_subcommand("count", "exact family counts");
    count->require_subcommand(1);
    auto* count_exact = count->add_subcommand("exact", "enumerate a family exactly");
    add_common(count_exact, count_common);
    count_exact->add_option("--mode", count_mode, "sym | asym | unrefined | asym-unrefined")
        ->check(CLI::IsMember({"sym", "asym", "unrefined", "asym-unrefined"}));
    count_exact->add_option("--m", count_m, "sumset size cap")->required();
    count_exact->add_option("--s", count_s, "size of A");
    count_exact->add_option("--s2", count_s2, "size of B (asym)");
    count_exact->add_option("--minsize", count_min, "size floor (asym-unrefined)");

    CommonArgs cont_common;
    std::string cont_mode = "sym";
    std::int64_t cont_m = 1;
    int cont_s = 1, cont_s2 = -1;
    std::string cont_eps;
    bool cont_strict = false;
    auto* containers = app.add_subcommand("containers", "refinement pipeline");
    containers->require_subcommand(1);
    auto* cont_build = containers->add_subcommand("build", "emit the final container collection");
    auto* cont_verify =
        containers->add_subcommand("verify", "check the collection covers the census");
    for (CLI::App* c : {cont_build, cont_verify}) {
        add_common(c, cont_common);
        c->add_option("--mode", cont_mode, "sym | asym")->check(CLI::IsMember({"sym", "asym"}));
        c->add_option("--m", cont_m, "sumset size cap")->required();
        c->add_option("--s", cont_s, "member size (A side)")->required();
        c->add_option("--s2", cont_s2, "member size (B side, asym)");
        c->add_option("--epsilon", cont_eps, "accuracy parameter, value or p/q");
        c->add_flag("--strict", cont_strict, "enforce the full size preconditions");
    }

    CommonArgs bound_common;
    std::string bound_theorem;
    BoundParams bound_params;
    std::string bound_eps;
    bool bound_strict = false;
    auto* bound = app.add_subcommand("bound", "closed-form bound evaluation");
    bound->require_subcommand(1);
    auto* bound_eval = bound->add_subcommand("eval", "evaluate a bound in log2");
    add_common(bound_eval, bound_common, /*with_ground=*/false);
    bound_eval->add_option("--theorem", bound_theorem, "1.1 | 1.3 | 1.4 | 1.7")->required();
    bound_eval->add_option("--n", bound_params.n, "ground set size")->required();
    bound_eval->add_option("--m", bound_params.m, "sumset size cap")->required();
    bound_eval->add_option("--s", bound_params.s, "member size");
    bound_eval->add_option("--s2", bound_params.s2, "second member size");
    bound_eval->add_option("--epsilon", bound_eps, "accuracy parameter");
    bound_eval->add_flag("--strict", bound_strict, "refuse out-of-regime parameters");

    CommonArgs lemma_common;
    std::string lemma_id;
    std::int64_t lemma_points = 0;
    std::uint64_t lemma_seed = 1;
    std::vector<double> lemma_args;
    auto* lemma = app.add_subcommand("lemma", "inequality checkers");
    lemma->require_subcommand(1);
    auto* lemma_check = lemma->add_subcommand("check", "run one checker");
    add_common(lemma_check, lemma_common, /*with_ground=*/false);
    lemma_check->add_option("--lemma", lemma_id, "B1 | B2 | B3 | B4 | supersaturation")
        ->required();
    lemma_check->add_option("--grid", lemma_points, "points of a pseudo-random hypothesis grid");
    lemma_check->add_option("--seed", lemma_seed, "grid seed");
    lemma_check->add_option("--args", lemma_args,
                            "explicit checker arguments (see the README for each order)");

    CommonArgs struct_common;
    std::int64_t struct_m = 1;
    int struct_s = 1, struct_s2 = -1;
    std::int64_t struct_samples = 100;
    std::uint64_t struct_seed = 1;
    double struct_slack = 0.1;
    auto* structure = app.add_subcommand("structure", "typical-structure experiments");
    structure->require_subcommand(1);
    auto* struct_sample = structure->add_subcommand("sample", "sample census members");
    add_common(struct_sample, struct_common);
    struct_sample->add_option("--m", struct_m)->required();
    struct_sample->add_option("--s", struct_s)->required();
    struct_sample->add_option("--s2", struct_s2);
    struct_sample->add_option("--samples", struct_samples);
    struct_sample->add_option("--seed", struct_seed);
    struct_sample->add_option("--slack", struct_slack, "progression length slack factor");

    CommonArgs lower_common;
    std::int64_t lower_n = 1, lower_m = 1;
    int lower_s = 3;
    bool lower_relaxed = false;
    auto* lower = app.add_subcommand("lowerbound", "constructive lower bounds");
    lower->require_subcommand(1);
    auto* lower_app = lower->add_subcommand("appendixA", "dilated-family construction");
    add_common(lower_app, lower_common, /*with_ground=*/false);
    lower_app->add_option("--n", lower_n)->required();
    lower_app->add_option("--m", lower_m)->required();
    lower_app->add_option("--s", lower_s)->required();
    lower_app->add_flag("--relaxed", lower_relaxed, "skip the parameter window check");

    CommonArgs rise_common;
    std::string rise_a, rise_f, rise_u0, rise_u1;
    int rise_s = 1;
    std::int64_t rise_m = -1;
    auto* rise = app.add_subcommand("sumrise", "bipartite container pass");
    rise->require_subcommand(1);
    auto* rise_run = rise->add_subcommand("run", "single run");
    add_common(rise_run, rise_common);
    rise_run->add_option("--a", rise_a, "member set, comma list")->required();
    rise_run->add_option("--f", rise_f, "shift set, comma list")->required();
    rise_run->add_option("--s", rise_s, "fingerprint size")->required();
    rise_run->add_option("--m", rise_m, "sumset cap for the membership check");
    rise_run->add_option("--u0", rise_u0, "top universe (default Y+Y), sum values");
    rise_run->add_option("--u1", rise_u1, "bottom universe (default Y)");

    CommonArgs set_common;
    std::string set_a, set_b, set_u1, set_u2;
    std::string set_delta = "1/2";
    int set_s = 1, set_lambda = 1;
    std::int64_t set_m = -1;
    auto* sunset_cmd = app.add_subcommand("sunset", "tripartite container pass");
    sunset_cmd->require_subcommand(1);
    auto* set_run = sunset_cmd->add_subcommand("run", "single run");
    add_common(set_run, set_common);
    set_run->add_option("--a", set_a)->required();
    set_run->add_option("--b", set_b)->required();
    set_run->add_option("--s", set_s)->required();
    set_run->add_option("--lambda", set_lambda)->required();
    set_run->add_option("--delta", set_delta, "density threshold, value or p/q");
    set_run->add_option("--m", set_m, "sumset cap for the membership check");
    set_run->add_option("--u1", set_u1);
    set_run->add_option("--u2", set_u2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (count_exact->parsed()) {
            auto started = std::chrono::steady_clock::now();
            GroupSpec spec = parse_group(count_common.group);
            GroundSet gs = parse_ground(spec, count_common.ground);
            CensusOptions opts = census_options(count_common);
            FamilyCensus census;
            if (count_mode == "sym") {
                if (count_s < 0) throw PreconditionError("count exact --mode sym needs --s");
                census = census_symmetric(gs, count_m, count_s, opts);
            } else if (count_mode == "unrefined") {
                census = census_unrefined(gs, count_m, opts);
            } else if (count_mode == "asym") {
                if (count_s < 0 || count_s2 < 0)
                    throw PreconditionError("count exact --mode asym needs --s and --s2");
                census = census_asymmetric(gs, count_m, count_s, count_s2, opts);
            } else {
                census = census_asym_unrefined(gs, count_m, count_min, opts);
            }
            json params{{"group", spec.to_string()},
                        {"n", gs.size()},
                        {"mode", census.mode},
                        {"m", census.m}};
            if (census.s >= 0) params["s"] = census.s;
            if (census.s2 >= 0) params["s2"] = census.s2;
            if (census.min_size >= 0) params["minsize"] = census.min_size;
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - started)
                               .count();
            emit(json{{"schema", 1},
                      {"command", "count-exact"},
                      {"params", params},
                      {"count", bigint_to_json(census.count)},
                      {"elapsed_ms", elapsed}},
                 count_common);
        } else if (cont_build->parsed() || cont_verify->parsed()) {
            GroupSpec spec = parse_group(cont_common.group);
            GroundSet gs = parse_ground(spec, cont_common.ground);
            CensusOptions opts = census_options(cont_common, /*materialize=*/true);
            FamilyCensus census =
                cont_mode == "asym"
                    ? census_asymmetric(gs, cont_m, cont_s, cont_s2 < 0 ? cont_s : cont_s2, opts)
                    : census_symmetric(gs, cont_m, cont_s, opts);
            EpsilonSpec eps = epsilon_or_default(cont_eps, cont_m, cont_s, gs.size());
            CollectionResult col = build_collection(gs, census_pairs(census), cont_m, eps,
                                                    cont_strict, cont_common.threads);
            json params{{"group", spec.to_string()}, {"n", gs.size()}, {"mode", cont_mode},
                        {"m", cont_m},               {"s", cont_s},    {"epsilon", eps.repr()}};
            if (cont_s2 >= 0) params["s2"] = cont_s2;
            if (cont_build->parsed()) {
                json list = json::array();
                for (const CollectionEntry& e : col.entries) {
                    json steps = json::array();
                    for (const std::string& lab : e.step_labels) steps.push_back(lab);
                    list.push_back(json{{"chain", e.chain_key},
                                        {"c0", e.triple.c0.count()},
                                        {"c1", e.triple.c1.count()},
                                        {"c2", e.triple.c2.count()},
                                        {"type", std::string(1, e.type_label)},
                                        {"steps", steps}});
                }
                emit(json{{"schema", 1},
                          {"command", "containers-build"},
                          {"params", params},
                          {"family", bigint_to_json(census.count)},
                          {"containers", list}},
                     cont_common);
            } else {
                std::vector<ContainerTriple> triples;
                triples.reserve(col.entries.size());
                for (const auto& e : col.entries) triples.push_back(e.triple);
                CoverageReport cover = verify_coverage(triples, census, gs);
                json result{{"schema", 1},
                            {"command", "containers-verify"},
                            {"params", params},
                            {"family", cover.total},
                            {"collection", col.entries.size()},
                            {"distinct_triples", col.distinct_triples},
                            {"max_steps", col.max_steps},
                            {"covered", cover.complete() ? "100%"
                                                         : std::to_string(cover.covered) + "/" +
                                                               std::to_string(cover.total)},
                            {"misses", cover.total - cover.covered}};
                if (cover.first_uncovered) result["first_uncovered"] = *cover.first_uncovered;
                emit(result, cont_common);
                if (!cover.complete()) return 4;
            }
        } else if (bound_eval->parsed()) {
            if (!bound_eps.empty()) bound_params.epsilon = std::stod(bound_eps);
            BoundId id = bound_id_from_string(bound_theorem);
            GroupSpec spec = parse_group(bound_common.group);
            bound_params.beta =
                beta(spec, std::max<std::int64_t>(1, beta_argument(id, bound_params)));
            BoundResult r = eval_bound(id, bound_params, bound_strict);
            json warnings = json::array();
            for (const std::string& w : r.warnings) warnings.push_back(w);
            emit(json{{"schema", 1},
                      {"command", "bound-eval"},
                      {"theorem", bound_theorem},
                      {"params", json{{"n", bound_params.n},
                                      {"m", bound_params.m},
                                      {"s", bound_params.s},
                                      {"s2", bound_params.s2},
                                      {"beta", bound_params.beta}}},
                      {"log2_bound", static_cast<double>(r.log2_value)},
                      {"regime", r.in_regime ? "ok" : "out-of-regime"},
                      {"label", r.label},
                      {"warnings", warnings}},
                 bound_common);
        } else if (lemma_check->parsed()) {
            json out{{"schema", 1}, {"command", "lemma-check"}, {"lemma", lemma_id}};
            if (lemma_points > 0) {
                GridOutcome grid = lemma_grid(lemma_id, lemma_points, lemma_seed);
                out["points"] = grid.points;
                out["seed"] = lemma_seed;
                out["violations"] = grid.violations;
                if (grid.violations > 0) out["first_violation"] = grid.first_violation;
                emit(out, lemma_common);
                if (grid.violations > 0) return 4;
            } else {
                const auto& v = lemma_args;
                auto need = [&](std::size_t k) {
                    if (v.size() != k)
                        throw PreconditionError("--args needs " + std::to_string(k) +
                                                " values for " + lemma_id);
                };
                if (lemma_id == "B1") {
                    need(3);
                    SplitMaxResult r = lemma_b1_check(static_cast<std::int64_t>(v[0]),
                                                      static_cast<std::int64_t>(v[1]),
                                                      static_cast<std::int64_t>(v[2]));
                    out["max"] = bigint_to_json(r.max_value);
                    out["argmax"] = r.argmax;
                    out["inequality"] = r.inequality_holds;
                    out["monotone"] = r.monotone_holds;
                } else if (lemma_id == "B2") {
                    need(6);
                    BinomialApproxResult r = lemma_b2_check(v[0], v[1], v[2], v[3], v[4],
                                                            static_cast<std::int64_t>(v[5]));
                    out["part1"] =
                        json{{"applicable", r.part1.applicable}, {"holds", r.part1.holds}};
                    out["part2"] =
                        json{{"applicable", r.part2.applicable}, {"holds", r.part2.holds}};
                    out["part3"] =
                        json{{"applicable", r.part3.applicable}, {"holds", r.part3.holds}};
                } else if (lemma_id == "B3") {
                    need(5);
                    ShiftedSplitResult r = lemma_b3_check(static_cast<std::int64_t>(v[0]),
                                                          static_cast<std::int64_t>(v[1]),
                                                          static_cast<std::int64_t>(v[2]), v[3],
                                                          v[4]);
                    out["holds"] = r.holds;
                    out["domain_empty"] = r.domain_empty;
                } else if (lemma_id == "B4") {
                    need(4);
                    TailSumResult r =
                        lemma_b4_check(v[0], v[1], v[2], static_cast<std::int64_t>(v[3]));
                    out["holds"] = r.holds;
                    out["empty_sum"] = r.empty_sum;
                } else {
                    throw PreconditionError("unknown lemma id '" + lemma_id + "'");
                }
                emit(out, lemma_common);
            }
        } else if (struct_sample->parsed()) {
            GroupSpec spec = parse_group(struct_common.group);
            GroundSet gs = parse_ground(spec, struct_common.ground);
            StructureReport rep = sample_structure_experiment(
                gs, struct_m, struct_s,
                struct_s2 >= 0 ? std::optional<int>(struct_s2) : std::nullopt, struct_samples,
                struct_seed, struct_slack, census_options(struct_common));
            json hist = json::object();
            for (const auto& [unc, cnt] : rep.histogram) hist[std::to_string(unc)] = cnt;
            json out{{"schema", 1},
                     {"command", "structure-sample"},
                     {"params", json{{"group", spec.to_string()},
                                     {"n", gs.size()},
                                     {"m", struct_m},
                                     {"s", struct_s},
                                     {"samples", struct_samples},
                                     {"seed", struct_seed},
                                     {"slack", struct_slack},
                                     {"max_len", rep.max_len_a}}},
                     {"family_size", bigint_to_json(rep.family_size)},
                     {"drawn", rep.drawn},
                     {"histogram", hist}};
            if (struct_s2 >= 0) {
                out["params"]["s2"] = struct_s2;
                out["params"]["max_len_b"] = rep.max_len_b;
            }
            emit(out, struct_common);
        } else if (lower_app->parsed()) {
            DilateVerification rep =
                verify_dilate_construction(lower_n, lower_m, lower_s, lower_relaxed,
                                           census_options(lower_common), lower_common.threads);
            json per_a = json::object();
            for (const auto& [a, cnt] : rep.per_a_counts)
                per_a[std::to_string(a)] = bigint_to_json(cnt);
            emit(json{{"schema", 1},
                      {"command", "lowerbound-appendixA"},
                      {"params", json{{"n", lower_n},
                                      {"m", lower_m},
                                      {"s", lower_s},
                                      {"relaxed", lower_relaxed}}},
                      {"per_a_counts", per_a},
                      {"total", bigint_to_json(rep.total)},
                      {"census", bigint_to_json(rep.census_count)},
                      {"counts_match_formula", rep.counts_match_formula},
                      {"pairwise_disjoint", rep.pairwise_disjoint},
                      {"all_members_in_family", rep.all_members_in_family},
                      {"sound", rep.sound}},
                 lower_common);
            if (!(rep.sound && rep.pairwise_disjoint && rep.all_members_in_family &&
                  rep.counts_match_formula))
                return 4;
        } else if (rise_run->parsed()) {
            GroupSpec spec = parse_group(rise_common.group);
            GroundSet gs = parse_ground(spec, rise_common.ground);
            IndexSet a = parse_subset(gs, rise_a);
            IndexSet f = parse_subset(gs, rise_f);
            IndexSet u1 =
                rise_u1.empty() ? gs.full_set(Universe::Ground) : parse_subset(gs, rise_u1);
            IndexSet u0 =
                rise_u0.empty() ? gs.full_set(Universe::Sum) : parse_sum_subset(gs, rise_u0);
            SumriseOptions opts;
            opts.checked = !rise_common.unchecked;
            if (rise_m >= 0) opts.sumset_cap = rise_m;
            SumriseResult r = sumrise(gs, rise_s, a, f, u0, u1, opts);
            json out{{"schema", 1},
                     {"command", "sumrise-run"},
                     {"s", set_to_json(gs, r.fingerprint)},
                     {"c0", set_to_json(gs, r.c0)},
                     {"c1", set_to_json(gs, r.c1)}};
            if (rise_common.trace) out["trace"] = trace_to_json(r.trace);
            emit(out, rise_common);
        } else if (set_run->parsed()) {
            GroupSpec spec = parse_group(set_common.group);
            GroundSet gs = parse_ground(spec, set_common.ground);
            IndexSet a = parse_subset(gs, set_a);
            IndexSet b = parse_subset(gs, set_b);
            IndexSet u1 =
                set_u1.empty() ? gs.full_set(Universe::Ground) : parse_subset(gs, set_u1);
            IndexSet u2 =
                set_u2.empty() ? gs.full_set(Universe::Ground) : parse_subset(gs, set_u2);
            SunsetOptions opts;
            opts.checked = !set_common.unchecked;
            if (set_m >= 0) opts.sumset_cap = set_m;
            SunsetResult r = sunset(gs, Threshold::parse(set_delta), set_s, set_lambda, a, b,
                                    gs.full_set(Universe::Sum), u1, u2, opts);
            json out{{"schema", 1},
                     {"command", "sunset-run"},
                     {"branch", r.ran_dense_branch ? "if" : "else"},
                     {"s", set_to_json(gs, r.fingerprint_s)},
                     {"f", set_to_json(gs, r.fingerprint_f)},
                     {"c0", set_to_json(gs, r.c0)},
                     {"c1", set_to_json(gs, r.c1)},
                     {"c2", set_to_json(gs, r.c2)}};
            if (set_common.trace) out["trace"] = trace_to_json(r.trace);
            emit(out, set_common);
        }
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant falsified: " << e.what() << "\n";
        return 4;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int main(int argc, char** argv) { return run_command(argc, argv); }
