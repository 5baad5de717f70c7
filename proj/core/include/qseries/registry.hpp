#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

using Params = std::map<std::string, std::string>;

enum class VerdictStatus { verified, failed, skipped };

struct Verdict {
    std::string id;
    Params params;
    Exp order = 0;
    VerdictStatus status = VerdictStatus::skipped;
    std::optional<Discrepancy> first_discrepancy;
    std::string note;
    std::optional<LaurentSeries> attached;  // difference series for diff_* records
    double wall_seconds = 0.0;
};

// Binds an identity id to two series recipes, a default parameter grid and a
// citation. diff_only records emit lhs - rhs as an attached series and are
// reported SKIPPED rather than verified.
struct IdentityRecord {
    std::string id;
    std::string citation;
    Exp default_order = 40;
    std::vector<Params> grid;  // grid entries may carry an "_order" override
    std::function<LaurentSeries(const Params&, Exp)> lhs;
    std::function<LaurentSeries(const Params&, Exp)> rhs;
    bool diff_only = false;
};

const std::vector<IdentityRecord>& registry();
const IdentityRecord& lookup(const std::string& id);

// Evaluates both recipes at fully specified params and compares coefficients
// on the overlap of their precisions up to `order` (0 = record default).
Verdict check(const IdentityRecord& rec, const Params& params, Exp order);
Verdict check(const std::string& id, const Params& params, Exp order);

// Deterministic one-line rendering (no timing, so reports are byte-identical).
std::string verdict_line(const Verdict& v);

// Checks every record at its default grid, printing one line per grid point in
// registry order; `order` = 0 keeps per-record defaults. Returns 0 iff nothing
// failed. `jobs` > 1 evaluates grid points in parallel; the report order is
// unchanged.
int run_all(Exp order, int jobs, std::ostream& report);

// Named series for the `expand` interface (R1..R4, B1, B2, bilateral_f,
// ag_lhs, ag_rhs take k; classical names take no parameters).
std::vector<std::string> series_catalog();
LaurentSeries expand_series(const std::string& id, const Params& params, Exp order);

}  // namespace qseries
