#ifndef RFUNC_VERIFY_HPP
#define RFUNC_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rfunc {

struct VerifyConfig {
    int grid_size = 10000;       // bound-soundness grid on (0, 1/2]
    int table_N = 60;            // coefficient table size
    std::uint64_t seed = 12345;  // for the random sample points
    double tol_constants = 2e-6; // constants ledger: relative, with equal absolute floor
    double tol_grid = 1e-12;     // relative slack for the bound inequalities
    int max_cm_order = 6;        // deepest complete-monotonicity order probed
    bool strict = false;         // promote the conjecture probe to a counted failure
    bool use_printed_tolerance = false;  // acceptance mode: 2 units in the last printed place
};

struct Check {
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool advisory = false;  // a failing advisory check does not fail the suite
    std::string note;
};

struct VerifyReport {
    std::vector<Check> checks;
    int passed = 0;
    int failed = 0;           // counted (non-advisory) failures
    int advisory_failed = 0;  // failing advisory checks (conjecture probe)
    double runtime_ms = 0.0;
};

/// Runs the full verification suite; deterministic for a fixed config.
VerifyReport run_verify(const VerifyConfig& config = {});

/// One row of the constants ledger: a computed value against the reference
/// truncated print.
struct ConstantRow {
    std::string name;
    double computed = 0.0;
    std::string reference;     // the reference digits, as printed
    double reference_value = 0.0;
    double last_place = 0.0;   // unit in the last printed decimal place
    std::string note;          // nonempty for documented reference discrepancies
};

std::vector<ConstantRow> constants_ledger();

enum class TableKind { constants, bounds, errors };
enum class TableFormat { csv, json };

struct GridSpec {
    double from = 0.01;
    double to = 0.5;
    int points = 100;
};

/// Writes a machine-readable table; CSV has a header row, comma separators,
/// LF endings; JSON is one object {"meta": ..., "rows": [...]}. All numbers
/// are serialized with 17 significant digits.
void emit_table(TableKind what, const GridSpec& grid, TableFormat format,
                const std::string& out_path);
void emit_table(TableKind what, const GridSpec& grid, TableFormat format, std::ostream& out);

/// Serializes a report (same JSON conventions).
void write_report_json(const VerifyReport& report, const VerifyConfig& config,
                       std::ostream& out);

}  // namespace rfunc

#endif
