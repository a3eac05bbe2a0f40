#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "primeweb/cli/commands.hpp"
#include "primeweb/cli/output.hpp"
#include "primeweb/errors.hpp"
#include "primeweb/sequences/ray.hpp"
#include "primeweb/web/w3_system.hpp"

using namespace primeweb;
using namespace primeweb::cli;
namespace fs = std::filesystem;

namespace {

std::shared_ptr<const engine::PrimeIndexer> shared_engine() {
    static const auto e = std::make_shared<const engine::PrimeIndexer>();
    return e;
}

const seq::FilterSet& primes() {
    static const auto p = seq::make_filter(seq::FamilyId::P, shared_engine());
    return *p;
}

// Fresh scratch directory per test case.
struct Scratch {
    fs::path dir;
    explicit Scratch(const std::string& name) : dir(fs::temp_directory_path() / ("primeweb_cli_" + name)) {
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    fs::path operator/(const std::string& f) const { return dir / f; }
};

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void append_line(const fs::path& p, const std::string& line) {
    std::ofstream out(p, std::ios::app);
    out << line << "\n";
}

// Sieve oracle p(k).
std::vector<std::uint64_t> sieve(std::uint64_t n) {
    std::vector<bool> comp(n + 1);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

}  // namespace

TEST_CASE("run config parses, validates and echoes back") {
    const RunConfig d;
    CHECK(RunConfig::parse(d.echo()) == d);
    CHECK(d.value_bound() == 1'000'000'000);

    const auto c = RunConfig::parse(
        "# desk run\n"
        "hard_limit = 5000000\n"
        "angle_tolerance=1e-10   # tighter\n"
        "\n"
        "threads=4\noutput_dir=results/run 1\ndeep=true\ntime_budget=12.5\nquadrature_tolerance=0.1\n");
    CHECK(c.hard_limit == 5'000'000);
    CHECK(c.angle_tolerance == 1e-10);
    CHECK(c.threads == 4);
    CHECK(c.output_dir == "results/run 1");
    CHECK(c.deep);
    CHECK(c.time_budget == 12.5);
    CHECK(c.value_bound() == 1'000'000'000'000);
    CHECK(RunConfig::parse(c.echo()) == c);
    CHECK(c.echo() == RunConfig::parse(c.echo()).echo());
    CHECK(c.echo().rfind("hard_limit=5000000\n", 0) == 0);

    CHECK_THROWS_AS(RunConfig::parse("colour=blue\n"), DomainError);
    CHECK_THROWS_AS(RunConfig::parse("threads=two\n"), DomainError);
    CHECK_THROWS_AS(RunConfig::parse("threads=0\n"), DomainError);
    CHECK_THROWS_AS(RunConfig::parse("angle_tolerance=2\n"), DomainError);
    CHECK_THROWS_AS(RunConfig::parse("just words\n"), DomainError);
    CHECK_THROWS_AS(RunConfig::load("/nonexistent/primeweb.cfg"), DomainError);
}

TEST_CASE("cache path precedence: flag, environment, file") {
    RunConfig c;
    c.cache_path = "from_file.tsv";
    ::unsetenv(cache_env);
    CHECK(resolved_cache_path(c) == "from_file.tsv");
    ::setenv(cache_env, "from_env.tsv", 1);
    CHECK(resolved_cache_path(c) == "from_env.tsv");
    CHECK(resolved_cache_path(c, true) == "from_file.tsv");
    ::unsetenv(cache_env);
}

TEST_CASE("ray cache stores, reloads and evicts corrupted entries") {
    Scratch s("cache");
    const auto path = s / "cache.tsv";
    {
        RayCache cache(path);
        CHECK(cache.size() == 0);
        cache.put({seq::FamilyId::P, 4, 1}, 7);
        cache.put({seq::FamilyId::P, 4, 2}, 17);
        cache.put({seq::FamilyId::T1, 1, 3}, 137);
        cache.flush();
    }
    {
        RayCache cache(path);
        CHECK(cache.size() == 3);
        CHECK(cache.get({seq::FamilyId::P, 4, 2}) == 17u);
        CHECK(cache.get({seq::FamilyId::T1, 1, 3}) == 137u);
        CHECK_FALSE(cache.get({seq::FamilyId::P, 4, 3}));
        CHECK(cache.stats().per_family.at("P") == 2);
    }
    // bit rot in the value, a foreign engine version, a truncated line, a
    // conflicting duplicate
    auto text = slurp(path);
    const auto good = RayCache::format_line({seq::FamilyId::P, 6, 1}, 13);
    std::string rotten = good;
    rotten.replace(rotten.find("\t13\t"), 4, "\t14\t");
    append_line(path, rotten);
    std::string foreign = "P\t6\t2\t41\tother-engine\t";
    foreign += fmt::format("{:08x}", RayCache::checksum("P\t6\t2\t41\tother-engine"));
    append_line(path, foreign);
    append_line(path, "P\t6\t3");
    append_line(path, RayCache::format_line({seq::FamilyId::P, 4, 1}, 8));
    {
        RayCache cache(path);
        CHECK_FALSE(cache.get({seq::FamilyId::P, 6, 1}));
        CHECK_FALSE(cache.get({seq::FamilyId::P, 6, 2}));
        CHECK_FALSE(cache.get({seq::FamilyId::P, 4, 1}));  // two different values: neither is served
        CHECK(cache.get({seq::FamilyId::P, 4, 2}) == 17u);
        CHECK(cache.stats().evicted == 4);
        cache.flush();  // compacts the file
    }
    {
        RayCache cache(path);
        CHECK(cache.stats().evicted == 0);
        CHECK(cache.size() == 2);
        cache.clear();
    }
    CHECK(RayCache(path).size() == 0);
}

TEST_CASE("cached rays equal recomputation and a sieve oracle") {
    Scratch s("rays");
    const auto p = sieve(2'000'000);
    RayCache cache(s / "c.tsv");
    for (std::uint64_t g : {1, 4, 6, 12, 30}) {
        const auto first = cached_ray(cache, primes(), g, 8, 1'000'000);
        const auto again = cached_ray(cache, primes(), g, 8, 1'000'000);  // served from the cache
        CHECK(first == again);
        CHECK(first == seq::extend_ray(primes(), g, 8, 1'000'000).elements);
        std::uint64_t prev = g;
        for (auto v : first) {
            CHECK(v == p.at(prev - 1));
            prev = v;
        }
    }
    CHECK(cached_ray(cache, primes(), 1, 20, 1'000'000).back() == 648391);
    CHECK_THROWS_AS(cached_ray(cache, primes(), 5, 3, 1000), NotAMemberError);

    cache.flush();
    RayCache reloaded(s / "c.tsv");
    const auto audit = reloaded.audit([](seq::FamilyId) -> const seq::FilterSet& { return primes(); }, 1.0);
    CHECK(audit.sampled == reloaded.size());
    CHECK(audit.passed());

    // a wrong value with a valid checksum is served, and the audit finds it
    reloaded.put({seq::FamilyId::P, 12, 3}, 911);
    reloaded.flush();
    RayCache planted(s / "c.tsv");
    CHECK(planted.get({seq::FamilyId::P, 12, 3}) == 911u);
    const auto one_percent = planted.audit([](seq::FamilyId) -> const seq::FilterSet& { return primes(); });
    CHECK(one_percent.sampled == (planted.size() + one_percent.mismatches + 99) / 100);
    const auto full = planted.audit([](seq::FamilyId) -> const seq::FilterSet& { return primes(); }, 1.0);
    CHECK(full.mismatches + one_percent.mismatches == 1);
    CHECK_FALSE(RayCache(s / "c.tsv").get({seq::FamilyId::P, 12, 3}));
}

TEST_CASE("matrix command reproduces published corners") {
    Scratch s("matrix");
    const std::string cache = (s / "c.tsv").string();
    auto r = run_cli({"--cache", cache, "matrix", "P", "7", "4", "--output", "-"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("generator,d1,d2,d3,d4\r\n"
                      "1,2,3,5,11\r\n"
                      "4,7,17,59,277\r\n"
                      "6,13,41,179,1063\r\n"
                      "8,19,67,331,2221\r\n"
                      "9,23,83,431,3001\r\n"
                      "10,29,109,599,4397\r\n"
                      "12,37,157,919,7193\r\n",
                      0) == 0);
    r = run_cli({"--cache", cache, "matrix", "T1", "2", "4", "--output", "-"});
    CHECK(r.out.find("1,3,11,137,5639\r\n2,5,29,641,44381\r\n") != std::string::npos);
    r = run_cli({"--cache", cache, "matrix", "H", "1", "3", "--output", "-"});
    CHECK(r.out.find("1,2,5,101\r\n") != std::string::npos);

    // the bound is capped by the hard limit; capped entries carry a marker
    r = run_cli({"--cache", cache, "--hard-limit", "1000", "matrix", "P", "2", "6", "--bound", "5000", "--output", "-"});
    CHECK(r.code == 0);
    CHECK(r.err.find("capped at 1000") != std::string::npos);
    CHECK(r.out.find("1,2,3,5,11,31,127\r\n4,7,17,59,277,>1000,>1000\r\n") != std::string::npos);

    // cached and uncached runs and repeated runs are byte-identical
    const std::string out = (s / "out").string();
    CHECK(run_cli({"--cache", cache, "--out", out, "matrix", "P", "30", "8", "--format", "json"}).code == 0);
    const auto a = slurp(s / "out" / "matrix_P.json");
    CHECK(run_cli({"--cache", cache, "--out", out, "matrix", "P", "30", "8", "--format", "json"}).code == 0);
    CHECK(slurp(s / "out" / "matrix_P.json") == a);
    CHECK(run_cli({"--out", out, "--threads", "2", "matrix", "P", "30", "8", "--format", "json", "--no-cache"}).code ==
          0);
    CHECK(slurp(s / "out" / "matrix_P.json") == a);
}

TEST_CASE("exit codes") {
    Scratch s("exit");
    const std::string cache = (s / "c.tsv").string(), out = (s / "out").string();
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"--cache", cache, "matrix", "Q"}).code == 2);
    CHECK(run_cli({"--cache", cache, "--set", "threads=zero", "matrix", "P"}).code == 2);
    CHECK(run_cli({"--cache", cache, "--out", out, "verify", "partition", "100000"}).code == 0);
    CHECK(run_cli({"--cache", cache, "--out", out, "verify", "theorem2", "100000"}).code == 0);
    CHECK(run_cli({"--cache", cache, "--out", out, "verify", "theorem3", "1000000"}).code == 0);
    CHECK(run_cli({"--cache", cache, "--out", out, "verify", "q1"}).code == 0);
    const auto report = slurp(s / "out" / "verify_q1.json");
    CHECK(report.find("\"passed\": true") != std::string::npos);
    CHECK(run_cli({"--cache", cache, "--out", out, "cache", "audit"}).code == 0);
}

TEST_CASE("config file with flag overrides") {
    Scratch s("config");
    const auto cfg = s / "run.cfg";
    std::ofstream(cfg) << "output_dir=" << (s / "from_file").string() << "\ncache_path=" << (s / "c.tsv").string()
                       << "\nhard_limit=100\n";
    auto r = run_cli({"--config", cfg.string(), "matrix", "P", "3", "3"});
    CHECK(r.code == 0);
    CHECK(fs::exists(s / "from_file" / "matrix_P.csv"));
    CHECK(slurp(s / "from_file" / "matrix_P.csv").find("4,7,17,59\r\n") != std::string::npos);
    r = run_cli({"--config", cfg.string(), "--out", (s / "from_flag").string(), "--set", "hard_limit=1000", "matrix",
                 "P", "3", "3"});
    CHECK(r.code == 0);
    CHECK(fs::exists(s / "from_flag" / "matrix_P.csv"));
    CHECK(slurp(s / "from_flag" / "matrix_P.csv").find("4,7,17,59\r\n") != std::string::npos);
    CHECK(slurp(s / "from_file" / "matrix_P.csv").find("6,13,41,>100\r\n") != std::string::npos);
    CHECK(slurp(s / "from_flag" / "matrix_P.csv").find("6,13,41,179\r\n") != std::string::npos);
}

TEST_CASE("eq6 verification with a corrupted cache") {
    Scratch s("eq6");
    const auto cache_path = s / "c.tsv";
    const std::string cache = cache_path.string(), out = (s / "out").string();
    CHECK(run_cli({"--cache", cache, "--out", out, "verify", "eq6", "--pairs", "300"}).code == 0);

    // bit rot: lines fail their checksum, are evicted and recomputed
    {
        auto text = slurp(cache_path);
        const auto pos = text.find("\nP\t4\t3\t59\t");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 11, "\nP\t4\t3\t61\t");
        std::ofstream(cache_path, std::ios::trunc) << text;
    }
    CHECK(run_cli({"--cache", cache, "--out", out, "verify", "eq6", "--pairs", "300"}).code == 0);

    // wrong values with valid checksums are served and make the check fail
    {
        RayCache c(cache_path);
        for (std::uint64_t g : primes().generators(119))
            for (std::uint32_t d = 1; d <= 3; ++d)
                if (auto v = c.get({seq::FamilyId::P, g, d})) c.put({seq::FamilyId::P, g, d}, *v + 2);
        c.flush();
    }
    const auto r = run_cli({"--cache", cache, "--out", out, "verify", "eq6", "--pairs", "300"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL eq6") != std::string::npos);
    CHECK(run_cli({"--cache", cache, "cache", "audit", "--fraction", "1"}).code == 1);
    CHECK(run_cli({"--cache", cache, "--out", out, "verify", "eq6", "--pairs", "300"}).code == 0);
}

TEST_CASE("laws, web and export commands") {
    Scratch s("laws");
    const std::string cache = (s / "c.tsv").string(), out = (s / "out").string();
    const std::vector<std::string> base{"--cache", cache, "--out", out};
    const auto cmd = [&](std::vector<std::string> rest) {
        auto a = base;
        a.insert(a.end(), rest.begin(), rest.end());
        return run_cli(a);
    };
    const auto eq7 = cmd({"laws", "eq7"});
    CHECK(eq7.code == 1);  // large-depth residuals exceed 0.06 on the ray of 4
    CHECK(slurp(s / "out" / "laws_eq7_ray9.csv").rfind("n,value,integral,count,epsilon\r\n", 0) == 0);
    CHECK(cmd({"laws", "eq8"}).code == 0);
    CHECK(cmd({"laws", "zeta", "--prime-bound", "100000"}).code == 0);
    CHECK(cmd({"laws", "conj3"}).code == 0);
    CHECK(slurp(s / "out" / "laws_conj3.csv").find("\r\n1,6,127,709,") != std::string::npos);
    CHECK(cmd({"laws", "predict", "--method", "R"}).code == 0);
    CHECK(cmd({"laws", "eta", "--s", "1"}).code == 0);

    const auto w = cmd({"web", "w3", "--trapezoid", "19"});
    CHECK(w.code == 0);
    CHECK(w.out.find("212 ray primes (max 5381)") != std::string::npos);
    const auto svg1 = slurp(s / "out" / "web_w3.svg");
    const auto json1 = slurp(s / "out" / "web_w3.json");
    CHECK(svg1.rfind("<!-- primeweb web w3 generated ", 0) == 0);
    CHECK(cmd({"web", "w3", "--trapezoid", "19"}).code == 0);
    CHECK(slurp(s / "out" / "web_w3.json") == json1);
    const auto strip = [](const std::string& t) { return t.substr(t.find('\n') + 1); };
    CHECK(strip(slurp(s / "out" / "web_w3.svg")) == strip(svg1));
    CHECK(json1.find("\"trapezoids\"") != std::string::npos);
    CHECK(cmd({"web", "pure", "--phi", "74.69"}).code == 0);
    CHECK(cmd({"web", "pure", "--phi", "95"}).code == 2);

    const auto e = cmd({"export-w3"});
    CHECK(e.code == 0);
    CHECK(e.out.find("228 variables, 228 equations, 300 inequalities") != std::string::npos);
    const auto sys = web::parse_model(slurp(s / "out" / "w3_system.mod"));
    CHECK(sys.unknowns() == 228);
    CHECK(sys.equations.size() == 228);
}

TEST_CASE("output helpers") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(stamp_svg("<svg/>", "web --x").find("web - -x") != std::string::npos);
    CHECK(json_text(nlohmann::ordered_json{{"b", 1}, {"a", 2}}) == "{\n  \"b\": 1,\n  \"a\": 2\n}\n");
}
