#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zetafib/catalog.hpp"

namespace zetafib {

enum class Status { pass, fail, domain_skip, non_converged };

std::string to_string(Status s);

/// Outcome of one (identity, parameters) verification cell.
struct VerificationResult {
    std::string identity_id;
    ParamSet params;
    std::optional<Real> lhs_value;
    std::optional<Real> lhs_error_bound;
    std::optional<Real> rhs_value;
    std::optional<Real> abs_diff;
    long terms_used = 0;
    long precision_bits = 0;
    Status status = Status::fail;
    std::string note; // violated constraint (domain_skip) or error detail
};

enum class ReportFormat { json, csv };

struct SweepConfig {
    std::vector<std::string> identity_filter; // empty selects the whole catalog
    long m_lo = 0, m_hi = 8;
    long n_lo = 1, n_hi = 10;
    long precision_bits = 256;
    std::string tolerance = "1e-40"; // decimal, parsed at working precision
    std::string output_path;
    ReportFormat format = ReportFormat::json;
    int jobs = 0; // 0 = hardware concurrency
};

struct Summary {
    long pass = 0, fail = 0, domain_skip = 0, non_converged = 0;
    bool clean() const { return fail == 0 && non_converged == 0; }
};

Summary summarize(const std::vector<VerificationResult>& results);

/// Verifies one cell: LHS by certified summation at target_abs_err =
/// tolerance/2, RHS closed form, pass iff |LHS - RHS| <= bound + tolerance.
/// Unknown ids throw; non-convergence becomes a status, not an exception.
VerificationResult verify_one(const std::string& id, const ParamSet& p,
                              const SweepConfig& cfg);

/// Cartesian sweep over in-range parameters per entry; out-of-domain points
/// yield domain_skip records. Results are ordered by (id, m, n) and are
/// byte-identical across runs and worker counts.
std::vector<VerificationResult> sweep(const SweepConfig& cfg);

std::string report_json(const std::vector<VerificationResult>& results);
std::string report_csv(const std::vector<VerificationResult>& results);
void write_report(const std::vector<VerificationResult>& results, ReportFormat fmt,
                  const std::string& path);

/// 256 unless the ZETAFIB_DEFAULT_PREC environment variable overrides it.
long default_precision_bits();

} // namespace zetafib
