#pragma once

// Command-line front end: table1, exact, mc, counterexample and qscan.
//
// Records go to stdout as JSON lines (or an aligned table with --table).
// The run manifest, which carries a timestamp, goes to stderr or to the
// file named by --manifest so that stdout stays byte-identical across runs.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sylvester/exactnum/pi_polynomial.hpp"
#include "sylvester/moments.hpp"
#include "sylvester/montecarlo/certify.hpp"

namespace sylvester::cli {

enum ExitCode : int {
    kSuccess = 0,
    kOppositeCertified = 1,
    kUsageError = 2,
    kInconclusive = 3,
    kExactMismatch = 4,
};

/// Bad user input; maps to kUsageError.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunManifest {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<std::uint64_t> seeds;
    std::string timestamp;
    std::string version;
    std::vector<nlohmann::json> records;
    int exit_code = 0;

    nlohmann::json to_json() const;
};

std::string_view artifact_version();

// table1 -------------------------------------------------------------------

struct Table1Row {
    long k = 0;
    Rational fixed_moment;  // E V_{T,x}^k, x an edge midpoint
    Rational moment;        // E V_T^k
    Rational ratio;
};

/// Published values, k = 3..10, triangle of area one.
const std::vector<Table1Row>& table1_expected();

/// Rows recomputed from the closed forms.
std::vector<Table1Row> table1_computed();

/// One line per disagreeing field; empty when the tables agree.
std::vector<std::string> table1_diff(const std::vector<Table1Row>& computed, const std::vector<Table1Row>& expected);

// exact / mc ---------------------------------------------------------------

/// Body and fixed point used for simulation of a query: the unit interval
/// scaled to length l, the unit ball or half-ball, and the standard simplex
/// of unit volume for triangle and tetrahedron. Edge midpoints and facet
/// centroids are taken opposite vertex 0. Throws UsageError.
mc::EstimateSpec simulation_target(const moments::MomentQuery& query);

nlohmann::json query_to_json(const moments::MomentQuery& query);

// counterexample -----------------------------------------------------------

struct Scenario {
    std::string name;
    std::string claim;
    mc::Comparand lhs;
    mc::Comparand rhs;
    /// Relation that witnesses non-monotonicity.
    mc::Relation expected = mc::Relation::lhs_greater;
};

std::vector<std::string> scenario_names();
/// Throws UsageError for unknown names.
Scenario scenario(std::string_view name);

// qscan --------------------------------------------------------------------

struct QScanRow {
    long k = 0;
    Rational q;
    std::optional<PiPolynomial> ratio_bound;  // d = 3 only
};

struct QScan {
    long d = 0;
    long k_max = 0;
    std::vector<QScanRow> rows;
    std::optional<long> first_below_one;
    long monotone_from = 0;
    bool strictly_decreasing = true;
    /// Published first k with q < 1; checked when k_max reaches it.
    long expected_first_below_one = 0;
    bool matches_expected = true;
};

/// Throws UsageError unless d is 2 or 3 and k_max >= 2.
QScan run_qscan(long d, long k_max);

// entry point --------------------------------------------------------------

/// Parses args (without the program name) and runs one command. Reads
/// SYLVESTER_THREADS to cap worker threads. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sylvester::cli
