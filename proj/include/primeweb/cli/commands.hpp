#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "primeweb/cli/ray_cache.hpp"
#include "primeweb/cli/run_config.hpp"
#include "primeweb/engine/prime_indexer.hpp"
#include "primeweb/sequences/filter_set.hpp"
#include "primeweb/sequences/ray.hpp"

namespace primeweb::cli {

enum ExitCode : int { exit_pass = 0, exit_verification_failed = 1, exit_operational_error = 2 };

// Number of generator rows in the published prime matrix (generators 1..155).
inline constexpr std::size_t appendix_rows = 119;
inline constexpr std::size_t appendix_columns = 16;

// Shared state of one command run: the configuration, one prime engine, the
// filtered families built on demand and the ray cache.
class Context {
public:
    Context(RunConfig config, std::filesystem::path cache_path, std::ostream& out, std::ostream& err);

    const RunConfig& config() const { return config_; }
    const engine::PrimeIndexer& engine() const { return *engine_; }
    const seq::FilterSet& family(seq::FamilyId id);
    RayCache& cache();
    std::ostream& out;
    std::ostream& err;

    // First `rows` generator rays of a family up to `cols` elements and the
    // value bound, served through the cache.
    std::vector<seq::Ray> rays(seq::FamilyId id, std::size_t rows, std::size_t cols, std::uint64_t bound);

private:
    RunConfig config_;
    std::filesystem::path cache_path_;
    std::shared_ptr<const engine::PrimeIndexer> engine_;
    std::map<seq::FamilyId, std::shared_ptr<const seq::FilterSet>> families_;
    std::unique_ptr<RayCache> cache_;
};

struct MatrixOptions {
    std::string family = "P";
    std::size_t rows = appendix_rows;
    std::size_t cols = appendix_columns;
    std::optional<std::uint64_t> bound;  // capped by the configured value bound
    std::string format = "csv";          // csv | json
    std::string output;                  // file name in the output dir, "-" for stdout
    bool use_cache = true;
};
int cmd_matrix(Context& ctx, const MatrixOptions& options);

struct VerifyOptions {
    std::string what;  // partition | eq6 | theorem2 | theorem3 | q1
    std::string family = "P";
    std::optional<std::uint64_t> bound;
    std::size_t pairs = 1000;
    std::uint64_t seed = 1;
};
int cmd_verify(Context& ctx, const VerifyOptions& options);

struct LawOptions {
    std::string law;  // eq7 | eq8 | eta | zeta | predict | conj3
    double s = 2.0;
    std::uint64_t generator = 9;
    std::uint64_t prime_bound = 1'000'000;
    std::string method = "L";
};
int cmd_laws(Context& ctx, const LawOptions& options);

struct WebOptions {
    std::string variant;  // pure | w3 | w4 | degenerate
    double phi_degrees = 74.69;
    std::uint32_t rotations = 2;
    std::optional<std::uint64_t> trapezoid;  // μ of a first-rotation 3RET overlay
    std::uint64_t highlight = 0;
};
int cmd_web(Context& ctx, const WebOptions& options);

int cmd_export_w3(Context& ctx, const std::string& output);

struct CacheOptions {
    std::string action;  // audit | clear | stats
    double fraction = 0.01;
    std::uint64_t seed = 1;
};
int cmd_cache(Context& ctx, const CacheOptions& options);

// Parses the command line (args exclude the program name), runs one command
// and returns its exit code: 0 pass, 1 verification failed, 2 operational
// error (including bad arguments).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primeweb::cli
