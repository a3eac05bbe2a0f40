#include "primeweb/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "primeweb/cli/output.hpp"
#include "primeweb/errors.hpp"
#include "primeweb/laws/distribution.hpp"
#include "primeweb/laws/growth.hpp"
#include "primeweb/laws/logint_laws.hpp"
#include "primeweb/laws/zeta.hpp"
#include "primeweb/sequences/mesm_matrix.hpp"
#include "primeweb/sequences/partition.hpp"
#include "primeweb/sequences/segments.hpp"
#include "primeweb/sequences/twins.hpp"
#include "primeweb/web/approx_web.hpp"
#include "primeweb/web/export.hpp"
#include "primeweb/web/trapezoid.hpp"
#include "primeweb/web/w3_system.hpp"

namespace primeweb::cli {

using nlohmann::ordered_json;

Context::Context(RunConfig config, std::filesystem::path cache_path, std::ostream& out_, std::ostream& err_)
    : out(out_), err(err_), config_(std::move(config)), cache_path_(std::move(cache_path)),
      engine_(std::make_shared<const engine::PrimeIndexer>()) {}

const seq::FilterSet& Context::family(seq::FamilyId id) {
    auto& f = families_[id];
    if (!f) f = seq::make_filter(id, engine_);
    return *f;
}

RayCache& Context::cache() {
    if (!cache_) cache_ = std::make_unique<RayCache>(cache_path_);
    return *cache_;
}

std::vector<seq::Ray> Context::rays(seq::FamilyId id, std::size_t rows, std::size_t cols, std::uint64_t bound) {
    const auto& fam = family(id);
    std::vector<seq::Ray> out;
    for (const auto g : fam.generators(rows)) {
        seq::Ray r;
        r.family = id;
        r.generator = g;
        r.elements = cached_ray(cache(), fam, g, cols, bound);
        if (r.elements.size() < cols) r.truncated_at = bound;
        out.push_back(std::move(r));
    }
    cache().flush();
    return out;
}

namespace {

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

std::uint64_t effective_bound(Context& ctx, std::optional<std::uint64_t> requested) {
    const std::uint64_t cap = ctx.config().value_bound();
    if (requested && *requested > cap)
        ctx.err << fmt::format("note: bound {} capped at {} (raise hard_limit or use --deep)\n", *requested, cap);
    return std::min(requested.value_or(cap), cap);
}

void emit(Context& ctx, const std::string& name, const std::string& text) {
    if (name == "-") {
        ctx.out << text;
        return;
    }
    ctx.out << "wrote " << write_output(ctx.config().output_dir, name, text).string() << "\n";
}

int finish(Context& ctx, const std::string& name, ordered_json report, bool passed, const std::string& summary) {
    report["passed"] = passed;
    emit(ctx, name, json_text(report));
    ctx.out << verdict(passed) << " " << summary << "\n";
    return passed ? exit_pass : exit_verification_failed;
}

std::string matrix_ext(const std::string& format) {
    if (format == "csv") return "csv";
    if (format == "json") return "json";
    throw DomainError("matrix format must be csv or json");
}

}  // namespace

int cmd_matrix(Context& ctx, const MatrixOptions& o) {
    const auto id = seq::parse_family(o.family);
    const auto& fam = ctx.family(id);
    const std::string ext = matrix_ext(o.format);
    const std::uint64_t bound = effective_bound(ctx, o.bound);
    if (o.rows == 0 || o.cols == 0) throw DomainError("matrix needs at least one row and one column");

    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
    bool budget_hit = false, capacity_hit = false;
    seq::MesmMatrix m;
    if (!o.use_cache) {
        m = seq::build_matrix(fam, o.rows, o.cols, bound, ctx.config().threads);
    } else {
        m.family = id;
        m.columns = o.cols;
        m.value_bound = bound;
        for (const auto g : fam.generators(o.rows)) {
            seq::Ray r;
            r.family = id;
            r.generator = g;
            if (ctx.config().deep && elapsed() > ctx.config().time_budget) {
                budget_hit = true;
            } else {
                try {
                    r.elements = cached_ray(ctx.cache(), fam, g, o.cols, bound);
                } catch (const CapacityError& e) {
                    capacity_hit = true;
                    ctx.err << "capacity: row " << g << ": " << e.what() << "\n";
                }
                ctx.cache().flush();
            }
            if (r.elements.size() < o.cols) r.truncated_at = bound;
            m.rows.push_back(std::move(r));
        }
    }
    const std::string text = ext == "csv" ? seq::to_csv(m) : json_text(seq::to_json(m));
    emit(ctx, o.output.empty() ? fmt::format("matrix_{}.{}", o.family, ext) : o.output, text);

    std::size_t entries = 0;
    for (const auto& r : m.rows) entries += r.depth();
    ctx.out << fmt::format("matrix {}: {} rows, {} entries <= {}, {:.1f} s\n", o.family, m.rows.size(), entries, bound,
                           elapsed());
    if (capacity_hit) ctx.err << "note: some rows stopped at the family's capacity (marked as truncated)\n";
    if (budget_hit) {
        ctx.err << fmt::format("time budget of {} s exhausted; remaining rows are marked as truncated\n",
                               ctx.config().time_budget);
        return exit_operational_error;
    }
    return exit_pass;
}

int cmd_verify(Context& ctx, const VerifyOptions& o) {
    const auto id = seq::parse_family(o.family);
    const auto& fam = ctx.family(id);
    ordered_json j;
    j["check"] = o.what;
    const std::string file = "verify_" + o.what + ".json";

    if (o.what == "partition") {
        const std::uint64_t bound = o.bound.value_or(1'000'000);
        const auto rep = seq::verify_partition(fam, bound, false);
        j["family"] = o.family;
        j["bound"] = bound;
        j["members"] = rep.members;
        j["uncovered"] = rep.uncovered;
        j["multiply_covered"] = rep.multiply_covered;
        j["address_mismatches"] = rep.address_mismatches;
        return finish(ctx, file, j, rep.exact(),
                      fmt::format("partition {} up to {}: {} members", o.family, bound, rep.members));
    }
    if (o.what == "eq6") {
        const std::uint64_t bound = effective_bound(ctx, o.bound);
        const auto rays = ctx.rays(id, appendix_rows, appendix_columns, bound);
        std::vector<const seq::Ray*> usable;
        for (const auto& r : rays)
            if (r.depth() > 0) usable.push_back(&r);
        if (usable.empty()) throw DomainError("no materialized ray elements below the bound");
        std::mt19937_64 rng(o.seed);
        const auto pick = [&] {
            const auto* r = usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
            const auto d = std::uniform_int_distribution<std::size_t>(1, r->depth())(rng);
            return std::pair{r, d};
        };
        std::size_t checked = 0, failures = 0;
        ordered_json bad = ordered_json::array();
        while (checked < o.pairs) {
            const auto [r1, d1] = pick();
            const auto [r2, d2] = pick();
            if (r1 == r2 && d1 == d2) continue;
            const std::uint64_t v1 = r1->elements[d1 - 1], v2 = r2->elements[d2 - 1];
            const std::uint64_t q1 = d1 == 1 ? r1->generator : r1->elements[d1 - 2];
            const std::uint64_t q2 = d2 == 1 ? r2->generator : r2->elements[d2 - 2];
            const auto [lo, hi] = std::minmax(v1, v2);
            const std::uint64_t between = lo == hi ? 0 : fam.count_upto(hi - 1) - fam.count_upto(lo);
            const std::int64_t expected =
                static_cast<std::int64_t>(std::max(q1, q2) - std::min(q1, q2)) - 1;
            ++checked;
            if (static_cast<std::int64_t>(between) != expected || lo == hi) {
                ++failures;
                if (bad.size() < 20)
                    bad.push_back({{"address1", {r1->generator, d1}}, {"address2", {r2->generator, d2}},
                                   {"values", {v1, v2}}, {"between", between}, {"expected", expected}});
            }
        }
        j["family"] = o.family;
        j["bound"] = bound;
        j["pairs"] = checked;
        j["failures"] = failures;
        j["examples"] = bad;
        return finish(ctx, file, j, failures == 0,
                      fmt::format("eq6 on {} random address pairs: {} failures", checked, failures));
    }
    if (o.what == "theorem2") {
        const std::uint64_t bound = o.bound.value_or(1'000'000);
        const auto rep = seq::clusters(ctx.engine(), bound, false);
        j["bound"] = bound;
        j["primes_checked"] = rep.primes_checked;
        j["missing"] = rep.missing;
        j["interior_duplicates"] = rep.interior_duplicates;
        j["interior_and_ghost"] = rep.interior_and_ghost;
        j["ghost_overlaps"] = rep.ghost_overlaps;
        return finish(ctx, file, j, rep.exact(),
                      fmt::format("cluster union up to {}: {} primes", bound, rep.primes_checked));
    }
    if (o.what == "theorem3") {
        const std::uint64_t bound = o.bound.value_or(10'000'000);
        const auto s = seq::summarize(seq::classify_twins(ctx.engine(), bound));
        j["bound"] = bound;
        j["twins"] = s.total;
        j["special"] = s.special;
        j["u"] = s.u;
        j["b_left"] = s.b_left;
        j["b_right"] = s.b_right;
        j["uncovered"] = s.uncovered;
        return finish(ctx, file, j, s.theorem_holds(),
                      fmt::format("twins up to {}: {} pairs, {} without a first-column element", bound, s.total,
                                  s.uncovered));
    }
    if (o.what == "q1") {
        const std::uint64_t bound = effective_bound(ctx, o.bound);
        const auto rays = ctx.rays(seq::FamilyId::P, appendix_rows, appendix_columns, bound);
        std::size_t checked = 0, failures = 0;
        for (const auto& r : rays) {
            std::uint64_t prev = r.generator;
            for (const auto e : r.elements) {
                ++checked;
                failures += ctx.engine().prime_pi(e) != prev;
                prev = e;
            }
        }
        j["bound"] = bound;
        j["rays"] = rays.size();
        j["identities"] = checked;
        j["failures"] = failures;
        return finish(ctx, file, j, failures == 0,
                      fmt::format("pi(p_(n+1)(m)) = p_n(m) on {} ray points: {} failures", checked, failures));
    }
    throw DomainError("verify: unknown check '" + o.what + "' (partition, eq6, theorem2, theorem3, q1)");
}

int cmd_laws(Context& ctx, const LawOptions& o) {
    const auto& primes = ctx.family(seq::FamilyId::P);
    const std::uint64_t bound = ctx.config().value_bound();
    const auto appendix = [&] { return ctx.rays(seq::FamilyId::P, appendix_rows, appendix_columns, bound); };
    const std::string file = "laws_" + o.law + ".json";

    if (o.law == "eq7") {
        const auto rays = appendix();
        const auto rep = laws::ray_law_report(rays);
        auto j = rep.to_json();
        const double small = rep.max_abs_residual(0, 3), large = rep.max_abs_residual(4, UINT32_MAX);
        j["max_abs_epsilon_depth_le_3"] = small;
        j["max_abs_epsilon_depth_ge_4"] = large;
        for (const auto& r : rays)
            if (r.generator == o.generator)
                emit(ctx, fmt::format("laws_eq7_ray{}.csv", o.generator), laws::ray_law_csv(r));
        return finish(ctx, file, j, rep.passed(),
                      fmt::format("eq7 on {} points: max|eps| {:.4f} (depth <= 3), {:.4f} (depth >= 4)",
                                  rep.points.size(), small, large));
    }
    if (o.law == "eq8") {
        ordered_json rows = ordered_json::array();
        std::size_t mismatches = 0;
        double worst = 0.0;
        for (const auto m : primes.generators(appendix_rows)) {
            const auto c = laws::column_distribution_law(ctx.engine(), m);
            const bool ok = c.mu == primes.generator_row(m);
            mismatches += !ok;
            if (c.relative_deviation) worst = std::max(worst, std::abs(*c.relative_deviation));
            ordered_json row{{"m", m}, {"mu", c.mu}, {"row", primes.generator_row(m)}};
            row["mu_asymptotic"] = c.mu_asymptotic ? ordered_json(*c.mu_asymptotic) : ordered_json(nullptr);
            row["relative_deviation"] =
                c.relative_deviation ? ordered_json(*c.relative_deviation) : ordered_json(nullptr);
            rows.push_back(row);
        }
        ordered_json j{{"law", "eq8"}, {"generators", rows.size()}, {"row_mismatches", mismatches},
                       {"max_abs_relative_deviation", worst}, {"points", rows}};
        return finish(ctx, file, j, mismatches == 0,
                      fmt::format("eq8 on {} generators: exact row index matches, max relative deviation {:.4f}",
                                  rows.size(), worst));
    }
    if (o.law == "eta") {
        ordered_json rows = ordered_json::array();
        for (const auto& r : appendix()) {
            if (r.depth() == 0) continue;
            const auto e = laws::eta_partial(r, o.s, r.depth());
            rows.push_back({{"m", r.generator},
                            {"terms", e.terms},
                            {"value", e.value},
                            {"tail_bound", std::isfinite(e.tail_bound) ? ordered_json(e.tail_bound) : ordered_json("inf")}});
        }
        ordered_json j{{"law", "eta"}, {"s", o.s}, {"bound", bound}, {"rays", rows}};
        emit(ctx, file, json_text(j));
        ctx.out << fmt::format("eta(s = {}) on {} rays\n", o.s, rows.size());
        return exit_pass;
    }
    if (o.law == "zeta") {
        const auto z = laws::zeta_global(primes, o.s, o.prime_bound, o.prime_bound);
        const auto zr = laws::zeta_ray(primes, o.s, o.generator, o.prime_bound);
        ordered_json j{{"law", "zeta"},
                       {"s", o.s},
                       {"prime_bound", o.prime_bound},
                       {"value", z.value},
                       {"euler_value", z.euler_value},
                       {"covers_all_primes", z.covers_all_primes},
                       {"bit_equal", z.bit_equal},
                       {"rays", z.rays},
                       {"primes", z.primes},
                       {"truncation_bound", z.truncation_bound},
                       {"ray", {{"m", zr.m}, {"sum", zr.sum}, {"product", zr.product}, {"consistent", zr.consistent()}}}};
        bool ok = z.covers_all_primes && z.bit_equal && zr.consistent();
        if (o.s == 2.0) {
            const double exact = std::numbers::pi * std::numbers::pi / 6;
            j["reference"] = exact;
            ok = ok && exact - z.value >= 0.0 && exact - z.value <= z.truncation_bound;
        }
        return finish(ctx, file, j, ok,
                      fmt::format("zeta({}) = {:.9f} (+ at most {:.3g}) over {} rays", o.s, z.value,
                                  z.truncation_bound, z.rays));
    }
    if (o.law == "predict") {
        const auto method = laws::parse_predictor(o.method);
        std::string csv = "m,n,target,root,actual,relative_error\r\n";
        std::size_t count = 0;
        for (const auto& r : appendix())
            for (std::uint32_t n = 1; n + 1 <= r.depth(); ++n) {
                if (r.elements[n - 1] < 2) continue;
                const auto p = laws::predict_next(r, n, method);
                csv += fmt::format("{},{},{},{:.6f},{},{:.6g}\r\n", p.m, p.n, p.target, p.root, p.actual.value_or(0),
                                   p.relative_error.value_or(0.0));
                ++count;
            }
        emit(ctx, fmt::format("laws_predict_{}.csv", o.method), csv);
        ctx.out << fmt::format("predict ({}) on {} ray points\n", o.method, count);
        return exit_pass;
    }
    if (o.law == "conj3") {
        const auto rep = laws::conjecture3_scan(appendix());
        std::string csv = "m,n,value,next,log_integral,ratio\r\n";
        for (const auto& p : rep.points)
            csv += fmt::format("{},{},{},{},{:.9f},{:.9g}\r\n", p.m, p.n, p.value, p.next, p.log_integral, p.ratio);
        emit(ctx, "laws_conj3.csv", csv);
        ordered_json j{{"law", "conj3"},       {"points", rep.points.size()}, {"max_ratio", rep.max_ratio},
                       {"argmax_m", rep.argmax_m}, {"argmax_n", rep.argmax_n}};
        emit(ctx, file, json_text(j));
        ctx.out << fmt::format("conj3 on {} points: max ratio {:.6g} at ray {} depth {} (reported, not asserted)\n",
                               rep.points.size(), rep.max_ratio, rep.argmax_m, rep.argmax_n);
        return exit_pass;
    }
    throw DomainError("laws: unknown law '" + o.law + "' (eq7, eq8, eta, zeta, predict, conj3)");
}

int cmd_web(Context& ctx, const WebOptions& o) {
    const auto& primes = ctx.family(seq::FamilyId::P);
    const double tol = ctx.config().angle_tolerance;
    web::Web w = [&] {
        if (o.variant == "pure")
            return web::build_pure_log_web(primes, o.phi_degrees * std::numbers::pi / 180.0, o.rotations,
                                           primes.generators(25));
        if (o.variant == "w3") return web::build_approx_web(primes, 3);
        if (o.variant == "w4") return web::build_approx_web(primes, 4);
        if (o.variant == "degenerate") return web::build_degenerate_web(primes);
        throw DomainError("web: unknown variant '" + o.variant + "' (pure, w3, w4, degenerate)");
    }();

    std::vector<web::Trapezoid> pieces;
    if (o.trapezoid) {
        const web::RotationIndex index(ctx.engine(), 11);
        pieces = web::decompose(index, web::trapezoid(index, 1, *o.trapezoid, 1, 2));
    }
    const auto iso = web::check_isometry(w);
    const auto st = web::check_straightness(w);
    const auto inj = web::check_angular_injectivity(w);
    const auto cross = web::check_crossings(w);

    web::SvgOptions svg;
    svg.highlight_ray = o.highlight;
    svg.trapezoids = pieces;
    svg.title = w.name;
    auto j = web::to_json(w, pieces);
    j["checks"] = {{"isometry_max_relative_error", iso.max_relative_error},
                   {"max_exact_spread", st.max_exact_spread},
                   {"max_approximate_residual", st.max_approximate_residual},
                   {"min_direction_separation", inj.min_separation},
                   {"crossing_pairs", cross.crossings()}};
    const std::string base = "web_" + o.variant;
    emit(ctx, base + ".svg", stamp_svg(web::to_svg(w, svg), "web " + o.variant));
    emit(ctx, base + ".json", json_text(j));

    ctx.out << fmt::format(
        "web {}: {} ray primes (max {}), segments {} exact / {} approximate / {} failed\n", o.variant,
        w.ray_primes().size(), w.max_prime(), w.count(web::Placement::exact), w.count(web::Placement::approximate),
        w.count(web::Placement::failed));
    ctx.out << fmt::format("  isometry {:.3g}, exact straightness {:.3g} rad, approximate residual {:.3g} rad, "
                           "{} crossing ray pairs\n",
                           iso.max_relative_error, st.max_exact_spread, st.max_approximate_residual, cross.crossings());
    // the pure web is not expected to have straight rays
    const bool passed = iso.holds(1e-9) && (o.variant == "pure" || st.max_exact_spread <= tol);
    ctx.out << verdict(passed) << " web " << o.variant << " construction conditions\n";
    return passed ? exit_pass : exit_verification_failed;
}

int cmd_export_w3(Context& ctx, const std::string& output) {
    const auto sys = web::assemble_w3_system(ctx.family(seq::FamilyId::P), 11);
    emit(ctx, output.empty() ? "w3_system.mod" : output, web::export_model(sys));
    const bool square = sys.unknowns() == sys.equations.size();
    ctx.out << fmt::format("W3-system: {} segments, {} variables, {} equations, {} inequalities "
                           "(published count 304; all pairwise ray separations of 25 rays give {})\n",
                           sys.segments.size(), sys.unknowns(), sys.equations.size(), sys.inequalities.size(),
                           sys.inequalities.size());
    return square ? exit_pass : exit_verification_failed;
}

int cmd_cache(Context& ctx, const CacheOptions& o) {
    auto& cache = ctx.cache();
    if (o.action == "stats") {
        const auto s = cache.stats();
        ordered_json j{{"path", cache.path().string()}, {"entries", s.entries}, {"evicted", s.evicted},
                       {"file_bytes", s.file_bytes}, {"per_family", s.per_family}};
        ctx.out << json_text(j);
        return exit_pass;
    }
    if (o.action == "clear") {
        const auto n = cache.size();
        cache.clear();
        ctx.out << fmt::format("cleared {} entries from {}\n", n, cache.path().string());
        return exit_pass;
    }
    if (o.action == "audit") {
        const auto a = cache.audit([&](seq::FamilyId id) -> const seq::FilterSet& { return ctx.family(id); },
                                   o.fraction, o.seed);
        ctx.out << fmt::format("{} cache audit: {} of {} entries recomputed, {} mismatches (rate {:.3g}), evicted {}\n",
                               verdict(a.passed()), a.sampled, a.entries, a.mismatches, a.mismatch_rate(),
                               a.evicted.size());
        return a.passed() ? exit_pass : exit_verification_failed;
    }
    throw DomainError("cache: unknown action '" + o.action + "' (audit, clear, stats)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"primeweb: prime progression matrices, ray laws and prime spider webs"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string config_file;
    std::vector<std::string> settings;
    std::optional<std::uint64_t> hard_limit;
    std::optional<unsigned> threads;
    std::optional<std::string> out_dir, cache_path;
    std::optional<double> budget;
    bool deep = false;
    app.add_option("--config", config_file, "key=value configuration file")->check(CLI::ExistingFile);
    app.add_option("--set", settings, "override one config key (key=value), repeatable");
    app.add_option("--hard-limit", hard_limit, "largest ray value computed");
    app.add_option("--threads", threads, "worker threads");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--cache", cache_path, "ray cache file (overrides PRIMEWEB_CACHE)");
    app.add_option("--time-budget", budget, "seconds allowed for a deep run");
    app.add_flag("--deep", deep, "allow values up to 1e12");

    MatrixOptions mo;
    std::optional<std::uint64_t> matrix_bound;
    bool no_cache = false;
    auto* matrix = app.add_subcommand("matrix", "progression matrix of a prime family");
    matrix->add_option("family", mo.family, "family tag (P, T1, S, D6n-1, D6n+1, Euler, H, ...)")->required();
    matrix->add_option("rows", mo.rows, "number of generator rows");
    matrix->add_option("cols", mo.cols, "depth per row");
    matrix->add_option("--bound", matrix_bound, "value bound (capped by the hard limit)");
    matrix->add_option("--format", mo.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    matrix->add_option("--output", mo.output, "file name in the output directory, - for stdout");
    matrix->add_flag("--no-cache", no_cache, "compute every entry without the ray cache");

    VerifyOptions vo;
    std::optional<std::uint64_t> verify_bound;
    auto* verify = app.add_subcommand("verify", "exact identity checks");
    verify->add_option("what", vo.what, "partition, eq6, theorem2, theorem3 or q1")
        ->required()
        ->check(CLI::IsMember({"partition", "eq6", "theorem2", "theorem3", "q1"}));
    verify->add_option("bound", verify_bound, "bound of the check");
    verify->add_option("--family", vo.family, "family tag");
    verify->add_option("--pairs", vo.pairs, "random address pairs (eq6)");
    verify->add_option("--seed", vo.seed, "random seed");

    LawOptions lo;
    auto* law = app.add_subcommand("laws", "growth and distribution laws on the rays");
    law->add_option("law", lo.law, "eq7, eq8, eta, zeta, predict or conj3")
        ->required()
        ->check(CLI::IsMember({"eq7", "eq8", "eta", "zeta", "predict", "conj3"}));
    law->add_option("--s", lo.s, "exponent s (eta, zeta)");
    law->add_option("--ray", lo.generator, "ray generator for the per-ray output");
    law->add_option("--prime-bound", lo.prime_bound, "largest prime in the zeta product");
    law->add_option("--method", lo.method, "L or R (predict)")->check(CLI::IsMember({"L", "R"}));

    WebOptions wo;
    std::optional<std::uint64_t> trapezoid;
    auto* web = app.add_subcommand("web", "prime spider web as SVG and JSON");
    web->add_option("variant", wo.variant, "pure, w3, w4 or degenerate")
        ->required()
        ->check(CLI::IsMember({"pure", "w3", "w4", "degenerate"}));
    web->add_option("--phi", wo.phi_degrees, "pitch angle in degrees (pure)");
    web->add_option("--rotations", wo.rotations, "spiral turns (pure)");
    web->add_option("--trapezoid", trapezoid, "overlay the three-rotation trapezoid of this first-rotation index");
    web->add_option("--highlight", wo.highlight, "ray generator drawn thick (default: the initial ray)");

    std::string export_path;
    auto* exp = app.add_subcommand("export-w3", "write the W3-system as an optimisation model");
    exp->add_option("path", export_path, "file name in the output directory, - for stdout");

    CacheOptions co;
    auto* cache = app.add_subcommand("cache", "inspect or maintain the ray cache");
    cache->add_option("action", co.action, "audit, clear or stats")
        ->required()
        ->check(CLI::IsMember({"audit", "clear", "stats"}));
    cache->add_option("--fraction", co.fraction, "share of entries recomputed by an audit");
    cache->add_option("--seed", co.seed, "sampling seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_operational_error;
    }

    try {
        RunConfig config = config_file.empty() ? RunConfig{} : RunConfig::load(config_file);
        for (const auto& s : settings) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) throw DomainError("--set expects key=value, got '" + s + "'");
            config.set(s.substr(0, eq), s.substr(eq + 1));
        }
        if (hard_limit) config.set("hard_limit", std::to_string(*hard_limit));
        if (threads) config.set("threads", std::to_string(*threads));
        if (out_dir) config.set("output_dir", *out_dir);
        if (cache_path) config.set("cache_path", *cache_path);
        if (budget) config.set("time_budget", fmt::format("{}", *budget));
        if (deep) config.deep = true;

        Context ctx(config, resolved_cache_path(config, cache_path.has_value()), out, err);
        if (*matrix) {
            mo.bound = matrix_bound;
            mo.use_cache = !no_cache;
            return cmd_matrix(ctx, mo);
        }
        if (*verify) {
            vo.bound = verify_bound;
            return cmd_verify(ctx, vo);
        }
        if (*law) return cmd_laws(ctx, lo);
        if (*web) {
            wo.trapezoid = trapezoid;
            return cmd_web(ctx, wo);
        }
        if (*exp) return cmd_export_w3(ctx, export_path);
        if (*cache) return cmd_cache(ctx, co);
        return exit_operational_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_operational_error;
    }
}

}  // namespace primeweb::cli
