#include "app.hpp"

#include "render.hpp"
#include "table_cache.hpp"

#include "frobscan/cohom.hpp"
#include "frobscan/error.hpp"
#include "frobscan/kostant.hpp"
#include "frobscan/rootsys.hpp"
#include "frobscan/scan.hpp"
#include "frobscan/weyl.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

namespace frobscan::cli {

namespace {

using nlohmann::ordered_json;
using Coords = std::vector<std::int64_t>;

struct RunConfig {
    std::string command;
    std::string type;
    int rank = 0;
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> degree;
    std::optional<std::int64_t> i_max;
    std::string format = "json";
    std::string cache_dir;
    bool no_cache = false;
    unsigned jobs = 1;
    bool early_exit = false;
    std::string memo = "shared";

    Coords nu;
    std::optional<std::int64_t> parts;
    bool bruteforce = false;
    Coords lambda;
    std::string kind = "global";
    std::optional<int> j;
    int r = 1;
    std::string identity;
    Coords gamma1;
    Coords gamma2;
    std::optional<int> sigma;

    std::ostream* warnings = nullptr;
};

struct Outcome {
    Rendered rendered;
    int exit_code = kExitOk;
};

// ---------------------------------------------------------------------------
// Formatting helpers

std::string join(const Coords& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

Coords coords(const Weight& w) { return {w.fund().begin(), w.fund().end()}; }

std::string rational(const mpq_class& q) { return q.get_str(); }

ordered_json weight_json(const Weight& w) {
    ordered_json root = ordered_json::array();
    for (const auto& q : w.root_coords()) root.push_back(rational(q));
    return {{"fund", coords(w)}, {"root", root}};
}

std::vector<int> word_of(const WeylGroup& group, std::size_t w) {
    std::vector<int> out;
    for (std::size_t i : group.reduced_word(w)) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::string word_text(const WeylGroup& group, std::size_t w) {
    const auto word = word_of(group, w);
    if (word.empty()) return "e";
    std::string s;
    for (int i : word) s += "s" + std::to_string(i);
    return s;
}

ordered_json element_json(const WeylGroup& group, std::size_t w) {
    return {{"index", w}, {"length", group[w].length}, {"word", word_of(group, w)}};
}

ordered_json decomposition_json(const WeylGroup& group, const Decomposition& d) {
    return {{"mu", weight_json(d.mu)}, {"w", element_json(group, d.w)}};
}

ordered_json dim_json(const WeylGroup& group, const DimResult& r) {
    ordered_json j;
    j["lambda"] = weight_json(r.lambda);
    j["degree"] = r.degree;
    j["dimension"] = r.dimension.get_str();
    j["decomposition"] = r.decomposition ? decomposition_json(group, *r.decomposition) : ordered_json(nullptr);
    j["parts"] = r.parts >= 0 ? ordered_json(r.parts) : ordered_json(nullptr);
    j["terms_evaluated"] = r.terms.size();
    ordered_json terms = ordered_json::array();
    for (const auto& t : r.terms) {
        if (t.value == 0) continue;
        terms.push_back({{"u", element_json(group, t.u)},
                         {"sign", t.sign},
                         {"argument", weight_json(t.argument)},
                         {"value", t.value.get_str()}});
    }
    j["nonzero_terms"] = std::move(terms);
    return j;
}

ordered_json sharp_json(const SharpBound& s) {
    ordered_json j;
    j["covered"] = s.covered;
    j["r"] = s.r;
    j["case"] = s.case_label;
    if (s.covered) {
        j["degree"] = s.degree;
        j["dimension"] = std::to_string(s.dimension);
        j["witnesses"] = s.witnesses;
    }
    return j;
}

std::string witnesses_text(const std::vector<Coords>& ws) {
    std::string s;
    for (std::size_t k = 0; k < ws.size(); ++k) s += (k ? " " : "") + join(ws[k]);
    return s.empty() ? "-" : s;
}

// ---------------------------------------------------------------------------
// Validation

RootSystemSpec spec_of(const RunConfig& cfg) {
    if (cfg.type.size() != 1) throw Error(ErrorCode::InvalidArgument, "--type must be one of A B C D G F");
    RootSystemSpec spec{parse_family(cfg.type), cfg.rank};
    validate(spec);
    return spec;
}

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag) {
    if (!v) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required");
    return *v;
}

Weight dominant_weight(const RootSystem& rs, const Coords& fund, const char* flag) {
    if (fund.size() != rs.rank())
        throw Error(ErrorCode::InvalidArgument, std::string(flag) + " needs " + std::to_string(rs.rank()) +
                                                    " fundamental coordinates");
    const Weight w = rs.weight_from_fund(fund);
    if (!rs.is_dominant(w)) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " must be dominant");
    return w;
}

std::optional<std::filesystem::path> cache_dir_of(const RunConfig& cfg) {
    if (cfg.no_cache || cfg.cache_dir.empty()) return std::nullopt;
    return std::filesystem::path(cfg.cache_dir);
}

ScanOptions scan_options(const RunConfig& cfg) {
    ScanOptions o;
    o.jobs = std::max(1u, cfg.jobs);
    o.early_exit = cfg.early_exit;
    o.memo = cfg.memo == "per-worker" ? MemoMode::PerWorker : MemoMode::Shared;
    return o;
}

// Mathematical inputs only: worker count and cache location never change a
// report, so they stay out of it.
ordered_json config_echo(const RunConfig& cfg) {
    ordered_json j;
    j["command"] = cfg.command;
    if (!cfg.type.empty()) j["type"] = cfg.type;
    if (cfg.rank) j["rank"] = cfg.rank;
    if (cfg.p) j["p"] = *cfg.p;
    if (cfg.degree) j["i"] = *cfg.degree;
    if (cfg.i_max) j["i_max"] = *cfg.i_max;
    j["format"] = cfg.format;
    if (cfg.command == "scan" || cfg.command == "verify") j["early_exit"] = cfg.early_exit;
    if (cfg.command == "kostant") {
        j["nu"] = cfg.nu;
        if (cfg.parts) j["n"] = *cfg.parts;
        j["bruteforce"] = cfg.bruteforce;
    }
    if (!cfg.lambda.empty()) j["lambda"] = cfg.lambda;
    if (cfg.command == "bound") {
        j["kind"] = cfg.kind;
        if (cfg.j) j["j"] = *cfg.j;
        if (!cfg.gamma1.empty()) j["gamma1"] = cfg.gamma1;
        if (!cfg.gamma2.empty()) j["gamma2"] = cfg.gamma2;
        if (cfg.sigma) j["sigma"] = *cfg.sigma;
    }
    if (cfg.command == "bound" || cfg.command == "verify") j["r"] = cfg.r;
    if (!cfg.identity.empty()) j["identity"] = cfg.identity;
    return j;
}

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_info(const RunConfig& cfg) {
    const auto rs = RootSystem::build(spec_of(cfg));
    Outcome o;
    auto& j = o.rendered.json;
    j["system"] = rs.name();
    j["rank"] = rs.rank();
    j["coxeter_number"] = rs.coxeter_number();
    j["weyl_group_order"] = std::to_string(WeylGroup::expected_order(rs.spec()));
    j["cartan_det"] = rs.cartan_det();
    ordered_json cartan = ordered_json::array();
    for (std::size_t r = 0; r < rs.rank(); ++r) {
        Coords row;
        for (std::size_t c = 0; c < rs.rank(); ++c) row.push_back(rs.cartan()(r, c));
        cartan.push_back(row);
    }
    j["cartan_matrix"] = cartan;
    j["rho"] = weight_json(rs.rho());
    j["highest_root"] = weight_json(rs.highest_root());
    j["highest_short_root"] = weight_json(rs.highest_short_root());
    ordered_json fund = ordered_json::array();
    for (const auto& w : rs.fundamental_weights()) fund.push_back(weight_json(w));
    j["fundamental_weights"] = fund;
    std::vector<std::size_t> dual;
    for (std::size_t s : rs.dual_permutation()) dual.push_back(s + 1);
    j["dual_permutation"] = dual;

    ordered_json roots = ordered_json::array();
    o.rendered.header = {"index", "root", "height", "length", "coroot"};
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        const auto v = rs.root_vector(k);
        const auto cv = rs.coroot_coefficients(k);
        const Coords root(v.begin(), v.end()), coroot(cv.begin(), cv.end());
        const char* length = rs.is_long(k) ? "long" : "short";
        roots.push_back({{"index", k + 1},
                         {"root", root},
                         {"height", rs.root_height(k)},
                         {"length", length},
                         {"coroot", coroot},
                         {"fund", coords(rs.positive_roots()[k])}});
        o.rendered.rows.push_back(
            {std::to_string(k + 1), join(root), std::to_string(rs.root_height(k)), length, join(coroot)});
    }
    j["positive_roots"] = roots;

    o.rendered.summary = {{"system", rs.name()},
                          {"coxeter number", std::to_string(rs.coxeter_number())},
                          {"|W|", std::to_string(WeylGroup::expected_order(rs.spec()))},
                          {"positive roots", std::to_string(rs.num_positive_roots())},
                          {"rho", rs.rho().to_string()}};
    return o;
}

Outcome cmd_kostant(const RunConfig& cfg) {
    const auto rs = RootSystem::build(spec_of(cfg));
    if (cfg.nu.size() != rs.rank())
        throw Error(ErrorCode::InvalidArgument, "--nu needs " + std::to_string(rs.rank()) + " root coordinates");
    const std::int64_t n = need(cfg.parts, "--n");

    PartitionTable table(rs);
    TableCache cache(cache_dir_of(cfg), *cfg.warnings);
    cache.open(table);
    const mpz_class value = table.partition(cfg.nu, n);
    cache.save(table);

    Outcome o;
    auto& j = o.rendered.json;
    j["nu"] = cfg.nu;
    j["n"] = n;
    j["count"] = value.get_str();
    o.rendered.summary = {{"nu", join(cfg.nu)}, {"n", std::to_string(n)}, {"P_n(nu)", value.get_str()}};
    if (cfg.bruteforce) {
        const mpz_class oracle = partition_bruteforce(rs, rs.weight_from_root(std::span<const std::int64_t>(cfg.nu)), n);
        j["bruteforce"] = oracle.get_str();
        j["agree"] = oracle == value;
        o.rendered.summary.emplace_back("bruteforce", oracle.get_str());
        if (oracle != value) o.exit_code = kExitMismatch;
    }
    return o;
}

Outcome cmd_dim(const RunConfig& cfg) {
    Workspace ws(spec_of(cfg));
    const std::int64_t p = need(cfg.p, "--p");
    const std::int64_t i = need(cfg.degree, "--i");
    require_good_prime(ws.rs, p);
    const Weight lambda = dominant_weight(ws.rs, cfg.lambda, "--lambda");

    TableCache cache(cache_dir_of(cfg), *cfg.warnings);
    cache.open(*ws.table);
    const auto r = dim_frobtwist_cohomology(ws.rs, ws.group, *ws.table, lambda, p, i);
    cache.save(*ws.table);

    Outcome o;
    o.rendered.json = dim_json(ws.group, r);
    o.rendered.summary = {{"lambda", lambda.to_string()},
                          {"degree", std::to_string(i)},
                          {"dimension", r.dimension.get_str()}};
    if (r.decomposition) {
        o.rendered.summary.emplace_back("mu", r.decomposition->mu.to_string());
        o.rendered.summary.emplace_back("w", word_text(ws.group, r.decomposition->w));
    } else {
        o.rendered.summary.emplace_back("decomposition", "none");
    }
    o.rendered.header = {"u", "sign", "argument", "value"};
    for (const auto& t : r.terms)
        if (t.value != 0)
            o.rendered.rows.push_back({word_text(ws.group, t.u), t.sign > 0 ? "+" : "-", t.argument.to_string(),
                                       t.value.get_str()});
    return o;
}

Decomposition unique_decomposition(const Workspace& ws, const Weight& lambda, std::int64_t p) {
    const auto decs = decompose(ws.rs, ws.group, lambda, p);
    if (decs.empty()) throw Error(ErrorCode::InvalidArgument, lambda.to_string() + " has no decomposition");
    if (decs.size() > 1)
        throw Error(ErrorCode::AmbiguousDecomposition, lambda.to_string() + " has several decompositions");
    return decs.front();
}

Outcome cmd_bound(const RunConfig& cfg) {
    const auto spec = spec_of(cfg);
    Outcome o;
    auto& j = o.rendered.json;
    j["kind"] = cfg.kind;

    if (cfg.kind == "expected") {
        const auto s = expected_sharp_bound(spec.family, spec.rank, need(cfg.p, "--p"), cfg.r);
        j["expected"] = sharp_json(s);
        o.rendered.summary = {{"covered", s.covered ? "yes" : "no"}, {"case", s.case_label}};
        if (s.covered) {
            o.rendered.summary.emplace_back("degree", std::to_string(s.degree));
            o.rendered.summary.emplace_back("dimension", std::to_string(s.dimension));
            o.rendered.summary.emplace_back("witnesses", witnesses_text(s.witnesses));
        }
        return o;
    }

    if (cfg.kind == "fundamental") {
        if (spec.family != Family::A) throw Error(ErrorCode::InvalidArgument, "--kind fundamental is for type A");
        if (!cfg.j) throw Error(ErrorCode::InvalidArgument, "--j is required");
        const auto b = fundamental_degree_bound(spec.rank, need(cfg.p, "--p"), *cfg.j);
        j["bound"] = rational(b.bound);
        j["witness"] = b.witness;
        o.rendered.summary = {{"bound", rational(b.bound)}, {"equality at", join(b.witness)}};
        return o;
    }

    Workspace ws(spec);
    const std::int64_t p = need(cfg.p, "--p");
    require_good_prime(ws.rs, p);

    if (cfg.kind == "ext") {
        const auto d1 = unique_decomposition(ws, dominant_weight(ws.rs, cfg.gamma1, "--gamma1"), p);
        const auto d2 = unique_decomposition(ws, dominant_weight(ws.rs, cfg.gamma2, "--gamma2"), p);
        std::size_t sigma = ws.rs.highest_root_index();
        if (cfg.sigma) {
            if (*cfg.sigma < 1 || static_cast<std::size_t>(*cfg.sigma) > ws.rs.num_positive_roots())
                throw Error(ErrorCode::InvalidArgument, "--sigma must be a root index from info");
            sigma = static_cast<std::size_t>(*cfg.sigma - 1);
        }
        const auto b = ext_degree_bound(ws.rs, ws.group, d1, d2, sigma, p);
        const auto sv = ws.rs.root_vector(sigma);
        j["gamma1"] = decomposition_json(ws.group, d1);
        j["gamma2"] = decomposition_json(ws.group, d2);
        j["sigma"] = Coords(sv.begin(), sv.end());
        j["via_sigma"] = b.via_sigma;
        j["via_highest_root"] = b.via_highest;
        j["bound"] = b.bound();
        o.rendered.summary = {{"via sigma", std::to_string(b.via_sigma)},
                              {"via highest root", std::to_string(b.via_highest)},
                              {"bound", std::to_string(b.bound())}};
        return o;
    }

    if (cfg.kind != "global") throw Error(ErrorCode::InvalidArgument, "unknown --kind '" + cfg.kind + "'");
    const std::int64_t i = need(cfg.degree, "--i");
    TableCache cache(cache_dir_of(cfg), *cfg.warnings);
    cache.open(*ws.table);
    const auto ub = finite_group_upper_bound(ws.rs, ws.group, *ws.table, p, i);
    cache.save(*ws.table);

    j["degree"] = i;
    j["total"] = ub.total.get_str();
    j["pairs_evaluated"] = ub.pairs_evaluated;
    ordered_json terms = ordered_json::array();
    o.rendered.header = {"lambda", "mu", "w", "dimension"};
    for (const auto& t : ub.terms) {
        terms.push_back({{"lambda", weight_json(t.lambda)},
                         {"decomposition", decomposition_json(ws.group, t.decomposition)},
                         {"dimension", t.dimension.get_str()}});
        o.rendered.rows.push_back({t.lambda.to_string(), t.decomposition.mu.to_string(),
                                   word_text(ws.group, t.decomposition.w), t.dimension.get_str()});
    }
    j["terms"] = std::move(terms);
    o.rendered.summary = {{"degree", std::to_string(i)},
                          {"upper bound", ub.total.get_str()},
                          {"pairs evaluated", std::to_string(ub.pairs_evaluated)}};
    return o;
}

Outcome scan_outcome(const Workspace& ws, const ScanReport& report) {
    Outcome o;
    auto& j = o.rendered.json;
    j["system"] = ws.rs.name();
    j["p"] = report.p;
    j["i_max"] = report.i_max;
    j["early_exit"] = report.early_exit;
    j["last_degree_scanned"] = report.last_degree_scanned;
    j["least_degree"] = report.least_degree ? ordered_json(*report.least_degree) : ordered_json(nullptr);
    j["least_degree_dimension"] = report.least_degree ? report.least_degree_dimension.get_str() : "0";
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : report.witnesses) witnesses.push_back(dim_json(ws.group, w));
    j["witnesses"] = std::move(witnesses);

    ordered_json hits = ordered_json::array();
    o.rendered.header = {"lambda", "degree", "dimension", "mu", "w", "witness"};
    for (const auto& h : report.nonzero) {
        hits.push_back({{"lambda", coords(h.lambda)}, {"degree", h.degree}, {"dimension", h.dimension.get_str()}});
        const bool witness = report.least_degree && h.degree == *report.least_degree;
        o.rendered.rows.push_back({h.lambda.to_string(), std::to_string(h.degree), h.dimension.get_str(),
                                   h.decomposition.mu.to_string(), word_text(ws.group, h.decomposition.w),
                                   witness ? "yes" : "no"});
    }
    j["nonzero"] = std::move(hits);
    j["vanishing_certificate"] = {{"candidates", report.candidates}, {"pairs_checked", report.pairs_checked}};
    j["expected"] = sharp_json(report.expected);
    j["verdict"] = to_string(report.verdict);

    std::vector<Coords> found;
    for (const auto& w : report.witnesses) found.push_back(coords(w.lambda));
    o.rendered.summary = {
        {"system", ws.rs.name()},
        {"p", std::to_string(report.p)},
        {"scanned degrees", "1.." + std::to_string(report.last_degree_scanned)},
        {"least degree", report.least_degree ? std::to_string(*report.least_degree) : "none"},
        {"dimension", report.least_degree ? report.least_degree_dimension.get_str() : "0"},
        {"witnesses", witnesses_text(found)},
        {"pairs checked", std::to_string(report.pairs_checked)},
        {"expected", report.expected.covered ? std::to_string(report.expected.degree) + " / " +
                                                   std::to_string(report.expected.dimension) + " / " +
                                                   witnesses_text(report.expected.witnesses)
                                             : "not covered"},
        {"verdict", to_string(report.verdict)}};
    o.exit_code = report.verdict == Verdict::Mismatch ? kExitMismatch : kExitOk;
    return o;
}

Outcome cmd_scan(const RunConfig& cfg) {
    const auto spec = spec_of(cfg);
    const std::int64_t p = need(cfg.p, "--p");
    check_desk_caps(spec, p);
    Workspace ws(spec);
    require_good_prime(ws.rs, p);
    const std::int64_t i_max = cfg.i_max.value_or(default_i_max(p));

    TableCache cache(cache_dir_of(cfg), *cfg.warnings);
    cache.open(*ws.table);
    const auto report = vanishing_scan(ws.rs, ws.group, *ws.table, p, i_max, scan_options(cfg));
    cache.save(*ws.table);
    return scan_outcome(ws, report);
}

Outcome identity_outcome(const RunConfig& cfg) {
    Outcome o;
    auto& j = o.rendered.json;
    j["identity"] = cfg.identity;
    if (cfg.identity == "a3-omega2") {
        Workspace ws({Family::A, 3});
        const std::int64_t p = need(cfg.p, "--p");
        TableCache cache(cache_dir_of(cfg), *cfg.warnings);
        cache.open(*ws.table);
        const auto r = check_a3_omega2_sum(ws.rs, ws.group, *ws.table, p);
        cache.save(*ws.table);
        j["p"] = p;
        j["sum"] = r.sum.get_str();
        j["expected"] = "1";
        j["pass"] = r.pass;
        ordered_json terms = ordered_json::array();
        o.rendered.header = {"u", "sign", "argument", "value"};
        for (const auto& t : r.terms) {
            terms.push_back({{"u", element_json(ws.group, t.u)},
                             {"sign", t.sign},
                             {"argument", weight_json(t.argument)},
                             {"value", t.value.get_str()}});
            o.rendered.rows.push_back({word_text(ws.group, t.u), t.sign > 0 ? "+" : "-", t.argument.to_string(),
                                       t.value.get_str()});
        }
        j["nonzero_terms"] = std::move(terms);
        o.rendered.summary = {{"p", std::to_string(p)}, {"sum", r.sum.get_str()}, {"pass", r.pass ? "yes" : "no"}};
        o.exit_code = r.pass ? kExitOk : kExitMismatch;
        return o;
    }
    if (cfg.identity == "a4-omega2") {
        if (cfg.p && *cfg.p != 11) throw Error(ErrorCode::InvalidArgument, "the A4 omega_2 sums are taken at p = 11");
        Workspace ws({Family::A, 4});
        TableCache cache(cache_dir_of(cfg), *cfg.warnings);
        cache.open(*ws.table);
        const auto r = check_a4_omega2_sums(ws.rs, ws.group, *ws.table);
        cache.save(*ws.table);
        j["p"] = 11;
        j["sum_a"] = r.sum_a.get_str();
        j["sum_b"] = r.sum_b.get_str();
        j["stabilizer_size"] = r.stabilizer_size;
        j["stabilizer_sum_a"] = r.stabilizer_sum_a.get_str();
        j["pass"] = r.pass;
        o.rendered.summary = {{"sum_a", r.sum_a.get_str()},
                              {"sum_b", r.sum_b.get_str()},
                              {"stabilizer sum_a", r.stabilizer_sum_a.get_str()},
                              {"pass", r.pass ? "yes" : "no"}};
        o.exit_code = r.pass ? kExitOk : kExitMismatch;
        return o;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown --identity '" + cfg.identity + "'");
}

Outcome cmd_verify(const RunConfig& cfg) {
    if (!cfg.identity.empty()) return identity_outcome(cfg);
    Workspace ws(spec_of(cfg));
    const std::int64_t p = need(cfg.p, "--p");
    require_good_prime(ws.rs, p);
    TableCache cache(cache_dir_of(cfg), *cfg.warnings);
    cache.open(*ws.table);
    const auto report = verify_theorem(ws, p, cfg.r, scan_options(cfg));
    cache.save(*ws.table);
    return scan_outcome(ws, report);
}

// ---------------------------------------------------------------------------
// Argument parsing

void add_system(CLI::App* sub, RunConfig& cfg, bool required = true) {
    auto* t = sub->add_option("--type", cfg.type, "Family letter: A B C D G F")
                  ->check(CLI::IsMember({"A", "B", "C", "D", "G", "F"}));
    auto* r = sub->add_option("--rank", cfg.rank, "Rank of the root system")->check(CLI::PositiveNumber);
    if (required) {
        t->required();
        r->required();
    }
}

void add_output(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
}

void add_cache(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--cache-dir", cfg.cache_dir, "Directory for persisted partition tables")->envname(kCacheDirEnv);
    sub->add_flag("--no-cache", cfg.no_cache, "Neither read nor write the partition cache");
}

void add_parallel(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_flag("--early-exit", cfg.early_exit, "Stop after the first degree with a nonzero dimension");
    sub->add_option("--memo", cfg.memo, "Partition memo: one shared table or one per worker")
        ->check(CLI::IsMember({"shared", "per-worker"}))
        ->capture_default_str();
}

std::unique_ptr<CLI::App> build_app(RunConfig& cfg) {
    auto app = std::make_unique<CLI::App>(
        "frobscan: exact cohomology dimensions and vanishing ranges for finite Chevalley groups");
    app->require_subcommand(1);

    auto* info = app->add_subcommand("info", "Root system tables: Cartan matrix, positive roots, rho");
    add_system(info, cfg);
    add_output(info, cfg);

    auto* kostant = app->add_subcommand(
        "kostant", "Kostant partition count P_n(nu); nu is given in simple-root coordinates, e.g. --nu 1,2,1");
    add_system(kostant, cfg);
    kostant->add_option("--nu", cfg.nu, "Simple-root coordinates of nu")->delimiter(',')->required();
    kostant->add_option("--n", cfg.parts, "Number of positive roots in each partition")->required();
    kostant->add_flag("--bruteforce", cfg.bruteforce, "Also count by direct enumeration");
    add_output(kostant, cfg);
    add_cache(kostant, cfg);

    auto* dim = app->add_subcommand(
        "dim", "dim H^i(G, H^0(lambda) (x) H^0(lambda*)^(1)); lambda in fundamental-weight coordinates, e.g. 3,3");
    add_system(dim, cfg);
    dim->add_option("--lambda", cfg.lambda, "Fundamental-weight coordinates of a dominant lambda")
        ->delimiter(',')
        ->required();
    dim->add_option("--p", cfg.p, "Prime above the Coxeter number")->required();
    dim->add_option("--i", cfg.degree, "Cohomological degree")->required();
    add_output(dim, cfg);
    add_cache(dim, cfg);

    auto* bound = app->add_subcommand(
        "bound",
        "Degree bounds. --kind global: upper bound on dim H^i(G(F_p), k) (needs --p --i); "
        "fundamental: type A bound for p omega_j + w.0 (needs --p --j); "
        "expected: known sharp bound (needs --p, optional --r); "
        "ext: Ext degree bound for two dominant weights in fundamental coordinates (needs --gamma1 --gamma2 --p)");
    add_system(bound, cfg);
    bound->add_option("--kind", cfg.kind, "global | fundamental | expected | ext")
        ->check(CLI::IsMember({"global", "fundamental", "expected", "ext"}))
        ->capture_default_str();
    bound->add_option("--p", cfg.p, "Prime")->required();
    bound->add_option("--i", cfg.degree, "Cohomological degree (global)");
    bound->add_option("--j", cfg.j, "Fundamental weight index, 1-based (fundamental)");
    bound->add_option("--r", cfg.r, "Field degree q = p^r (expected)")->check(CLI::PositiveNumber);
    bound->add_option("--gamma1", cfg.gamma1, "First dominant weight (ext)")->delimiter(',');
    bound->add_option("--gamma2", cfg.gamma2, "Second dominant weight (ext)")->delimiter(',');
    bound->add_option("--sigma", cfg.sigma, "Positive root index from info; default the highest root (ext)");
    add_output(bound, cfg);
    add_cache(bound, cfg);

    auto* scan = app->add_subcommand("scan", "Least nonvanishing degree of H^*(G(F_p), k) by exhaustive scan");
    add_system(scan, cfg);
    scan->add_option("--p", cfg.p, "Prime above the Coxeter number")->required();
    scan->add_option("--i-max", cfg.i_max, "Largest degree scanned (default 2p - 2)");
    add_parallel(scan, cfg);
    add_output(scan, cfg);
    add_cache(scan, cfg);

    auto* verify = app->add_subcommand(
        "verify",
        "Scan and compare with the known sharp bound, or check an alternating-sum identity with "
        "--identity a3-omega2 (needs --p) or a4-omega2 (p = 11)");
    add_system(verify, cfg, false);
    verify->add_option("--p", cfg.p, "Prime above the Coxeter number");
    verify->add_option("--r", cfg.r, "Field degree; only r = 1 can be scanned")->check(CLI::PositiveNumber);
    verify->add_option("--identity", cfg.identity, "a3-omega2 | a4-omega2")
        ->check(CLI::IsMember({"a3-omega2", "a4-omega2"}));
    add_parallel(verify, cfg);
    add_output(verify, cfg);
    add_cache(verify, cfg);

    return app;
}

Outcome dispatch(const RunConfig& cfg) {
    if (cfg.command == "info") return cmd_info(cfg);
    if (cfg.command == "kostant") return cmd_kostant(cfg);
    if (cfg.command == "dim") return cmd_dim(cfg);
    if (cfg.command == "bound") return cmd_bound(cfg);
    if (cfg.command == "scan") return cmd_scan(cfg);
    if (cfg.command == "verify") {
        if (cfg.identity.empty() && (cfg.type.empty() || cfg.rank == 0))
            throw Error(ErrorCode::InvalidArgument, "verify needs --type and --rank, or --identity");
        return cmd_verify(cfg);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown command " + cfg.command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    auto app = build_app(cfg);
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app->parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app->exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app->exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app->exit(e, out, err);
        return kExitError;
    }
    cfg.command = app->get_subcommands().front()->get_name();
    cfg.warnings = &err;

    try {
        const Format format = parse_format(cfg.format);
        Outcome o = dispatch(cfg);
        ordered_json doc;
        doc["schema"] = "frobscan-report";
        doc["schema_version"] = kSchemaVersion;
        doc["config"] = config_echo(cfg);
        doc["result"] = std::move(o.rendered.json);
        o.rendered.json = std::move(doc);
        write(out, o.rendered, format);
        return o.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return run(args, out, err);
}

}  // namespace frobscan::cli
