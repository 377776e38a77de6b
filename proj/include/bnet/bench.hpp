#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnet/attractor.hpp"
#include "bnet/network.hpp"

namespace bnet {

/**
 * \brief Chain of strongly connected modules.
 *
 * Module j holds variables j*size .. j*size+size-1 wired as a ring, with a few
 * extra internal AND/OR inputs. Module j > 0 reads one or two variables of
 * module j-1, so the dependency graph has exactly `modules` SCCs in a chain
 * and every basic block has at most size+2 vertices.
 */
BooleanNetwork chained_module_network(std::size_t modules, std::size_t size, std::uint64_t seed);

/// Where a benchmarked network comes from.
struct NetworkSource {
    enum class Kind { File, Random, Chained };
    Kind kind = Kind::Random;
    std::string path;  // File
    std::size_t n = 0, k = 0;  // Random: variables and in-degree bound; Chained: modules and module size
    std::uint64_t seed = 0;

    std::string descriptor() const;
    BooleanNetwork load() const;
    /// Parses "file:PATH", "random:N:K:SEED" or "chained:MODULES:SIZE:SEED".
    static NetworkSource parse(const std::string& text);
};

enum class TableMethod { Global, Decomp, Both };

struct TableOptions {
    TableMethod method = TableMethod::Both;
    std::size_t reps = 5;          // timed repetitions per pair; the median is reported
    double timeout_s = 300.0;      // per pair and method
    std::size_t workers = 0;       // 0 = hardware concurrency
    std::size_t scope_cap = Limits::kDefaultScopeCap;
};

/// One (source, target) cell of a control table.
struct PairRecord {
    std::size_t source = 0, target = 0;  // attractor indices
    std::string source_state, target_state;
    std::size_t hd = 0;                  // Hamming distance between the attractors' states
    std::optional<std::size_t> drivers;  // minimal control size
    std::size_t witness_count = 0;
    std::optional<double> t_global_ms, t_decom_ms;
    bool global_timeout = false, decomp_timeout = false;
    bool degraded = false;
    bool mismatch = false;  // the two methods disagreed on (d, witnesses)

    std::optional<double> speedup() const;
    /// "ok" or a ';'-joined list of global_timeout, decomp_timeout, degraded, mismatch.
    std::string status() const;
};

struct BenchRecord {
    std::string network;
    std::size_t n = 0;
    std::size_t blocks = 0;
    std::size_t max_block_scope = 0;
    std::vector<std::string> attractors;     // one entry per attractor: its states joined by '|'
    std::vector<std::size_t> excluded_sources;  // multi-state attractors
    std::vector<PairRecord> pairs;           // row-major over (source, target), diagonal omitted
};

/// All source x target control problems between attractors of `bn`.
BenchRecord run_table(const BooleanNetwork& bn, const std::string& descriptor, const TableOptions& options);

struct BenchReport {
    std::vector<BenchRecord> networks;
};

BenchReport run_bench(const std::vector<NetworkSource>& sources, const TableOptions& options);

inline constexpr const char* kBenchCsvHeader = "source,target,hd,drivers,t_global_ms,t_decom_ms,speedup,status";

std::string bench_csv(const BenchReport& report);

/// (HD, #D) matrix with attractors as rows (sources) and columns (targets).
std::string table_csv(const BenchRecord& record);
std::string table_text(const BenchRecord& record);

}  // namespace bnet
