#include <doctest.h>

#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <set>

#include "primeweb/errors.hpp"
#include "primeweb/numeric/quadrature.hpp"
#include "primeweb/web/approx_web.hpp"
#include "primeweb/web/events.hpp"
#include "primeweb/web/export.hpp"
#include "primeweb/web/mosaic.hpp"
#include "primeweb/web/trapezoid.hpp"
#include "primeweb/web/w3_system.hpp"

using namespace primeweb;
using namespace primeweb::web;
using doctest::Approx;

namespace {

std::shared_ptr<const engine::PrimeIndexer> shared_engine() {
    static const auto e = std::make_shared<const engine::PrimeIndexer>();
    return e;
}

const engine::PrimeIndexer& engine_ref() { return *shared_engine(); }

const seq::FilterSet& primes() {
    static const auto p = seq::make_filter(seq::FamilyId::P, shared_engine());
    return *p;
}

const Web& w3() {
    static const Web w = build_approx_web(primes(), 3);
    return w;
}

const Web& w4() {
    static const Web w = build_approx_web(primes(), 4);
    return w;
}

// Plain sieve oracle: primes up to n, and p(k) by table lookup.
struct Oracle {
    std::vector<std::uint64_t> list;
    std::vector<bool> is_prime;
    explicit Oracle(std::uint64_t n) : is_prime(n + 1, true) {
        is_prime[0] = is_prime[1] = false;
        for (std::uint64_t i = 2; i * i <= n; ++i)
            if (is_prime[i])
                for (std::uint64_t j = i * i; j <= n; j += i) is_prime[j] = false;
        for (std::uint64_t i = 2; i <= n; ++i)
            if (is_prime[i]) list.push_back(i);
    }
    std::uint64_t p(std::uint64_t k) const { return list.at(k - 1); }
};

const Oracle& oracle() {
    static const Oracle o(2'000'000);
    return o;
}

// Arc length of a spline spiral at θ by quadrature of √(ρ² + ρ'²) segment by
// segment, then the angle with arc = x by bisection: an independent inverse.
double oracle_theta(const geo::SplineSpiral& s, double x) {
    const auto arc = [&](double theta) {
        double total = 0.0;
        for (std::size_t i = 1; i <= s.segments(); ++i) {
            const double a = s.knots()[i - 1], b = std::min(theta, s.knots()[i]);
            if (b <= a) break;
            const double al = s.alphas()[i - 1], be = s.betas()[i - 1];
            numeric::QuadratureSpec spec;
            spec.abs_tolerance = 0.0;
            spec.rel_tolerance = 1e-13;
            total += numeric::integrate([&](double t) { return std::sqrt(1 + al * al) * std::exp(al * t + be); }, a, b,
                                        spec)
                         .value;
        }
        return total;
    };
    double lo = 0.0, hi = s.max_theta();
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        (arc(mid) < x ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double chord_sine(const geo::PlanePoint& a, const geo::PlanePoint& b, const geo::PlanePoint& c) {
    const double ax = b.u - a.u, ay = b.v - a.v, bx = c.u - b.u, by = c.v - b.v;
    return (ax * by - ay * bx) / (std::hypot(ax, ay) * std::hypot(bx, by));
}

}  // namespace

TEST_CASE("truncated ray starts") {
    const auto t = truncated_rays(primes(), 11);
    REQUIRE(t.size() == 25);
    CHECK(t.at(1) == 127);
    CHECK(t.at(4) == 59);
    CHECK(t.at(6) == 41);
    CHECK(t.at(8) == 67);  // the printed start 87 = 3·29 is not prime
    CHECK(t.at(9) == 83);
    CHECK(t.at(10) == 109);
    CHECK(t.at(12) == 37);
    CHECK(t.rbegin()->first == 36);
    // every start is the first element above p(11) = 31 on its ray
    for (const auto& [g, s] : t) {
        std::uint64_t e = oracle().p(g);
        while (e <= 31) e = oracle().p(e);
        CHECK(s == e);
    }
    for (const auto& [g, s] : truncated_rays(primes(), 0, 40)) CHECK(s == oracle().p(g));
}

TEST_CASE("pure logarithmic web") {
    const double phi = 74.69 * std::numbers::pi / 180.0;
    const auto web = build_pure_log_web(primes(), phi, 2, {1, 4, 6, 8, 9, 10, 12});
    const auto limit = static_cast<std::uint64_t>(web.spiral.max_value());
    std::size_t expected = 0;
    for (std::uint64_t p : oracle().list) expected += p <= limit;
    CHECK(web.points.size() == expected);
    CHECK(check_isometry(web).holds());
    const geo::LogSpiral log(phi);
    for (const auto& [p, pt] : web.points)
        CHECK(pt.point.theta == Approx(log.theta_for_value(static_cast<double>(p))).epsilon(1e-12));

    // ray 1 (2, 3, 5, ...) is bent on a pure spiral
    const auto& r1 = web.rays.at(1).primes;
    REQUIRE(r1.size() >= 3);
    CHECK(std::vector<std::uint64_t>(r1.begin(), r1.begin() + 3) == std::vector<std::uint64_t>{2, 3, 5});
    const auto st = check_straightness(web);
    CHECK(st.rays.front().generator == 1);
    CHECK(st.rays.front().exact_spread > 1e-3);
    CHECK(std::abs(chord_sine(web.at(2).point, web.at(3).point, web.at(5).point)) > 1e-3);

    const auto single = build_pure_log_web(primes(), phi, 3, {4});
    const auto& r4 = single.rays.at(4).primes;
    for (std::size_t k = 1; k < r4.size(); ++k) CHECK(single.at(r4[k]).point.rho > single.at(r4[k - 1]).point.rho);
    CHECK_THROWS_AS(build_pure_log_web(primes(), phi, 2, {7}), NotAMemberError);
    CHECK_THROWS_AS(build_pure_log_web(primes(), 2.0, 2, {1}), DomainError);
}

TEST_CASE("approximate web W3") {
    const Web& web = w3();
    // composition 3·20 + 2·5 + 2·71 ray elements
    std::map<std::size_t, std::size_t> rays_by_size;
    for (const auto& [g, ray] : web.rays) ++rays_by_size[ray.primes.size()];
    CHECK(rays_by_size[3] == 20);
    CHECK(rays_by_size[2] == 5 + 71);
    CHECK(web.ray_primes().size() == 212);
    CHECK(composition_size(primes(), w3_tilde_spec()) == 212);
    CHECK(web.max_prime() == 5381);
    CHECK(web.points.size() == 212 + 11);
    CHECK(web.solves.size() == 20);
    CHECK(web.rays.at(1).primes == std::vector<std::uint64_t>{127, 709, 5381});
    CHECK(web.rays.at(126).primes == std::vector<std::uint64_t>{701, 5281});

    // condition (i) against an independent quadrature inverse
    const auto iso = check_isometry(web);
    CHECK(iso.holds(1e-9));
    for (const auto& [p, pt] : web.points) {
        if (p % 7 != 3 && p != 5381) continue;
        CHECK(std::abs(oracle_theta(web.spiral, static_cast<double>(p)) - pt.point.theta) <= 1e-9);
    }

    // condition (ii) on exactly solved segments, recomputed from coordinates
    const auto st = check_straightness(web);
    CHECK(st.max_exact_spread <= 1e-9);
    std::size_t exact_rays = 0;
    for (const auto& [g, ray] : web.rays) {
        if (ray.primes.size() < 3) continue;
        const auto& c = web.at(ray.primes[2]);
        if (c.placement != Placement::exact) continue;
        ++exact_rays;
        const auto& a = web.at(ray.primes[0]).point;
        const auto& b = web.at(ray.primes[1]).point;
        CHECK(std::abs(chord_sine(a, b, c.point)) <= 1e-9);
        CHECK((b.u - a.u) * (c.point.u - b.u) + (b.v - a.v) * (c.point.v - b.v) > 0.0);  // same direction
    }
    CHECK(exact_rays == web.count(Placement::exact));
    CHECK(web.count(Placement::exact) + web.count(Placement::approximate) + web.count(Placement::failed) == 20);
    for (const auto& s : web.solves)
        if (s.status == Placement::approximate) CHECK(std::abs(web.at(s.prime).residual) > 1e-9);

    CHECK(check_angular_injectivity(web).holds(1e-6));
    CHECK(check_crossings(web).crossings() == 0);
    // the first two turns are the pure spiral at φ = 74.18896°
    CHECK(web.spiral.alphas().front() == Approx(1 / std::tan(74.18896 * std::numbers::pi / 180)).epsilon(1e-14));
    CHECK(web.spiral.knots()[1] == Approx(4 * std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("approximate web W4") {
    const Web& web = w4();
    CHECK(web.solves.size() == 116);
    CHECK(web.ray_primes().size() == 212 + 96);
    const std::size_t exact = web.count(Placement::exact);
    CHECK(exact >= 94 - 5);
    CHECK(exact <= 94 + 5);
    CHECK(web.count(Placement::failed) == 0);
    CHECK(check_isometry(web).holds(1e-9));
    const auto st = check_straightness(web);
    CHECK(st.max_exact_spread <= 1e-9);
    CHECK(st.approximate_points == web.count(Placement::approximate));
    CHECK(check_angular_injectivity(web).holds(1e-6));
    // W4 continues W3: the first 20 segments are the same solves
    for (std::size_t i = 0; i < 20; ++i) {
        CHECK(web.solves[i].prime == w3().solves[i].prime);
        CHECK(web.solves[i].alpha == w3().solves[i].alpha);
    }
    CHECK_THROWS_AS(build_approx_web(primes(), 5), DomainError);
}

TEST_CASE("degenerate web") {
    const auto web = build_degenerate_web(primes());
    CHECK(web.ray_primes() == w3().ray_primes());
    CHECK(check_isometry(web).holds(1e-9));
    std::size_t checked = 0;
    for (const auto& [g, ray] : web.rays) {
        if (ray.primes.size() < 3 || web.at(ray.primes[2]).placement != Placement::exact) continue;
        const auto& a = web.at(ray.primes[0]).point;
        const auto& b = web.at(ray.primes[1]).point;
        const auto& c = web.at(ray.primes[2]).point;
        CHECK(std::abs(chord_sine(a, b, c)) <= 1e-9);                               // one straight carrier
        CHECK((b.u - a.u) * (c.u - b.u) + (b.v - a.v) * (c.v - b.v) < 0.0);  // reversed direction
        ++checked;
    }
    CHECK(checked > 0);
    CHECK(check_straightness(web).max_exact_spread <= 1e-9);
}

TEST_CASE("trapezoids and the formation rule") {
    const RotationIndex idx(engine_ref(), 11);
    CHECK(idx.first_index(1) == 12);
    CHECK(idx.first_index(2) == 37);
    CHECK(idx.first_index(3) == 157);
    CHECK(idx.size(1) == 25);
    CHECK(idx.rotation_of(37) == 1);
    CHECK(idx.rotation_of(151) == 1);
    CHECK(idx.rotation_of(157) == 2);
    CHECK(idx.rotation_of(919) == 3);
    CHECK(idx.rotation_of(31) == 0);

    const auto z19 = trapezoid(idx, 1, 19, 1, 1);
    CHECK(z19.to_string() == "[(113, 127), (617, 709)]");
    CHECK(z19.elementary());

    const auto ret = trapezoid(idx, 1, 19, 1, 2);
    CHECK(ret.to_string() == "[(113, 127), (4549, 5381)]");
    const auto split = split_first_rotation(idx, ret);
    CHECK(split.alpha == 13);
    CHECK(split.composite.to_string() == "[(617, 709), (4549, 5381)]");
    CHECK(split.composite.k == 14);

    const auto pieces = decompose(idx, ret);
    REQUIRE(pieces.size() == 15);
    CHECK(pieces[0] == z19);
    // oracle: consecutive primes from 617 to 709 and their images
    std::vector<std::uint64_t> level2;
    for (std::uint64_t p : oracle().list)
        if (p >= 617 && p <= 709) level2.push_back(p);
    REQUIRE(level2.size() == 15);
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        CHECK(pieces[i].nu == 2);
        CHECK(pieces[i].inner[0] == level2[i - 1]);
        CHECK(pieces[i].inner[1] == level2[i]);
        CHECK(pieces[i].outer[0] == oracle().p(level2[i - 1]));
        CHECK(pieces[i].outer[1] == oracle().p(level2[i]));
    }
    CHECK(pieces[1].to_string() == "[(617, 619), (4549, 4567)]");
    CHECK(pieces[2].to_string() == "[(619, 631), (4567, 4663)]");
    CHECK(pieces.back().to_string() == "[(701, 709), (5281, 5381)]");
    CHECK(check_tiling(idx, ret, pieces).holds());

    // width split and a tampered list
    const auto wide = trapezoid(idx, 1, 3, 4, 1);
    const auto parts = split_width(idx, wide);
    CHECK(parts.size() == 4);
    CHECK(check_tiling(idx, wide, parts).holds());
    auto broken = pieces;
    broken.erase(broken.begin() + 5);
    CHECK_FALSE(check_tiling(idx, ret, broken).holds());
    auto overlapping = pieces;
    overlapping.push_back(pieces[3]);
    CHECK_FALSE(check_tiling(idx, ret, overlapping).disjoint);

    // every 3RET of the first rotation tiles exactly, also for depth 3
    for (std::uint64_t mu = 1; mu <= 25; ++mu)
        for (std::uint32_t q = 1; q <= 3; ++q) {
            const auto t = trapezoid(idx, 1, mu, 1, q);
            CHECK(check_tiling(idx, t, decompose(idx, t)).holds());
        }

    CHECK_THROWS_AS(trapezoid(idx, 1, 19, 0, 1), DegenerateInputError);
    CHECK_THROWS_AS(trapezoid(idx, 1, 19, 1, 0), DegenerateInputError);
    CHECK_THROWS_AS(trapezoid(idx, 1, 26, 1, 1), RangeError);
}

TEST_CASE("ray start events") {
    const auto e = ray_starts_between(engine_ref(), 113, 127);
    CHECK(e.starts == std::vector<std::uint64_t>{619, 631, 641, 643, 647, 653, 659, 661, 673, 677, 683, 691, 701});
    CHECK(e.starts.size() == 127 - 113 - 1);

    const auto events = ray_start_events(w3(), engine_ref());
    REQUIRE(!events.empty());
    CHECK(events.front().rotation == 1);
    CHECK(events.front().starts.size() == 25);
    CHECK(events.front().placed == 25);
    bool found = false;
    for (const auto& ev : events) {
        if (ev.rotation == 1) continue;
        // every event's start count is α of its source pair
        CHECK(ev.starts.size() == ev.source_hi - ev.source_lo - 1);
        for (std::uint64_t s : ev.starts) CHECK(oracle().is_prime[s]);
        if (ev.source_lo == 113) {
            found = true;
            CHECK(ev.rotation == 2);
            CHECK(ev.starts == e.starts);
            CHECK(ev.placed == 13);
        }
    }
    CHECK(found);
    CHECK_THROWS_AS(ray_starts_between(engine_ref(), 113, 120), DomainError);
}

TEST_CASE("twin events") {
    const auto u1 = twin_event(engine_ref(), 11, 71);
    CHECK(u1.cls == seq::TwinClass::u);
    CHECK(u1.mid_ray == 359);
    CHECK(twin_event(engine_ref(), 11, 101).mid_ray == 557);
    CHECK(twin_event(engine_ref(), 11, 137).mid_ray == 787);
    CHECK(twin_event(engine_ref(), 11, 149).mid_ray == 863);
    CHECK(twin_event(engine_ref(), 11, 641).mid_ray == 4783);
    CHECK(twin_event(engine_ref(), 11, 659).mid_ray == 4937);

    const auto right = twin_event(engine_ref(), 11, 617);
    CHECK(right.cls == seq::TwinClass::b_right);
    CHECK(right.side() == "right");
    CHECK(right.anchor == 113u);
    CHECK(right.anchor_depth == 1);
    CHECK(right.images == std::array<std::uint64_t, 2>{4549, 4567});
    CHECK(right.mid_ray == 4561);
    CHECK(right.rotation == 2);

    const auto left = twin_event(engine_ref(), 11, 857);
    CHECK(left.cls == seq::TwinClass::b_left);
    CHECK(left.side() == "left");
    CHECK(left.anchor == 149u);
    CHECK(left.images == std::array<std::uint64_t, 2>{6653, 6661});
    CHECK(left.mid_ray == 6659);
    CHECK_THROWS_AS(twin_event(engine_ref(), 11, 97), NotAMemberError);

    // one event per twin pair with both members on drawn rays
    const auto events = twin_events(w4(), engine_ref());
    std::size_t expected = 0;
    for (std::uint64_t p : oracle().list)
        if (p + 2 <= w4().max_prime() && oracle().is_prime[p + 2] && w4().on_ray(p) && w4().on_ray(p + 2)) ++expected;
    CHECK(events.size() == expected);
    CHECK(expected > 10);
    for (const auto& ev : events) CHECK(ev.cls != seq::TwinClass::uncovered);
}

TEST_CASE("geometric prime counting identity") {
    const auto a = pi_geometric_check(primes(), 1, 7);
    CHECK(a.value == 709);
    CHECK(a.pi_value == 127);
    CHECK(a.holds);
    const auto b = pi_geometric_check(primes(), 4, 2);
    CHECK(b.value == 17);
    CHECK(b.pi_value == 7);
    CHECK(b.holds);
    const auto c = pi_geometric_check(primes(), 9, 3);
    CHECK(c.value == 431);
    CHECK(c.pi_value == 83);
    CHECK(c.holds);
    // on the web: the arc length at the previous element equals that element
    const auto d = pi_geometric_check(primes(), 12, 3, &w3());
    CHECK(d.value == 919);
    CHECK(d.previous == 157);
    REQUIRE(d.arc);
    CHECK(*d.arc == Approx(157.0).epsilon(1e-12));
    CHECK(d.holds);
    CHECK_THROWS_AS(pi_geometric_check(primes(), 7, 2), NotAMemberError);
}

TEST_CASE("mosaic and mitos") {
    const auto report = mosaic_check(w3(), engine_ref());
    CHECK(report.uncovered.empty());
    CHECK(report.gaps.empty());
    CHECK(report.tiling_exact);
    CHECK(report.three_ret_checked == 19);
    CHECK(report.three_ret_exact);
    CHECK(report.mitos_exact);
    CHECK(report.passed());
    CHECK(report.elementary == 25 + 90);

    const auto mitos = mitos_region(w3(), engine_ref());
    CHECK(mitos.arc_start == 37);
    CHECK(mitos.arc_end == 157);
    CHECK(mitos.skipped == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31});
    CHECK(mitos.exact());

    // empty web: nothing to cover
    const Web empty(geo::SplineSpiral::from_knots({1.0}, {0.3}));
    CHECK(mosaic_check(empty, engine_ref()).passed());

    // fault injection: removing one ray leaves a gap
    Web broken = w3();
    broken.rays.erase(14);
    for (std::uint64_t p : {43, 191, 1153}) broken.points.erase(p);
    const auto bad = mosaic_check(broken, engine_ref());
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.gaps.empty());
    CHECK(bad.gaps.front().inner[1] == 43);
}

TEST_CASE("W3-system assembly and export") {
    const auto sys = assemble_w3_system(primes(), 11);
    CHECK(sys.segments.size() == 76);
    CHECK(sys.unknowns() == 228);
    CHECK(sys.equations.size() == 228);
    std::map<EquationKind, std::size_t> kinds;
    for (const auto& e : sys.equations) ++kinds[e.kind];
    CHECK(kinds[EquationKind::start_exponent] == 1);
    CHECK(kinds[EquationKind::continuity] == 75);
    CHECK(kinds[EquationKind::arc_length] == 76);
    CHECK(kinds[EquationKind::on_ray] == 76);
    CHECK(sys.inequalities.size() == 300);  // all pairs of the 25 rays
    CHECK(sys.lines.size() == 25);
    CHECK(sys.segments.front().prime == 37);
    CHECK(sys.segments.back().prime == 7193);
    CHECK(sys.segments.back().generator == 12);
    CHECK(sys.segments.back().depth == 4);

    // arc right-hand sides telescope to the last prime
    double total = 0.0;
    for (const auto& e : sys.equations)
        if (e.kind == EquationKind::arc_length) total += e.rhs;
    CHECK(total == 7193.0);

    // the initial guess meets continuity exactly and the ray lines where the
    // approximation web placed the points exactly
    const auto res = sys.equation_residuals(sys.initial);
    for (std::size_t i = 0; i < sys.equations.size(); ++i)
        if (sys.equations[i].kind == EquationKind::continuity || sys.equations[i].kind == EquationKind::start_exponent)
            CHECK(std::abs(res[i]) <= 1e-9);
    std::size_t ok = 0;
    for (const auto v : sys.inequality_values(sys.initial)) ok += v >= 0.0;
    CHECK(ok >= 290);

    const auto text = export_model(sys);
    CHECK(text.find("param n := 76;") != std::string::npos);
    std::size_t constraints = 0;
    for (std::size_t pos = text.find("subject to"); pos != std::string::npos; pos = text.find("subject to", pos + 1))
        ++constraints;
    CHECK(constraints == 228 + 300);
    const auto back = parse_model(text);
    CHECK(back == sys);
    CHECK(export_model(back) == text);
    CHECK_THROWS_AS(parse_model("subject to nonsense: x = 1;\n"), DomainError);
    CHECK_THROWS_AS(parse_model(text.substr(0, text.size() / 2)), DomainError);
}

TEST_CASE("svg and json export") {
    const auto& web = w3();
    const auto pieces = decompose(RotationIndex(engine_ref(), 11), trapezoid(RotationIndex(engine_ref(), 11), 1, 19, 1, 2));
    SvgOptions opt;
    opt.trapezoids = pieces;
    opt.title = "W3";
    const auto svg = to_svg(web, opt);
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t circles = 0;
    for (std::size_t pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
    CHECK(circles == web.points.size());
    CHECK(svg.find("stroke=\"black\" stroke-width=\"3\"") != std::string::npos);  // the initial ray
    std::size_t polygons = 0;
    for (std::size_t pos = svg.find("<polygon"); pos != std::string::npos; pos = svg.find("<polygon", pos + 1))
        ++polygons;
    CHECK(polygons == 15);

    const auto j = to_json(web, pieces);
    CHECK(j["rays"].size() == web.rays.size());
    CHECK(j["segments"].size() == 20);
    CHECK(j["trapezoids"].size() == 15);
    CHECK(j["loose"].size() == 11);
    CHECK(j["rays"][0]["generator"] == 1);
    CHECK(j["rays"][0]["points"][2]["prime"] == 5381);
}
