#include "zetafib/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "zetafib/errors.hpp"

namespace zetafib {

namespace {

constexpr int kReportDigits = 50;

void validate(const SweepConfig& cfg) {
    if (cfg.m_lo > cfg.m_hi || cfg.n_lo > cfg.n_hi)
        throw DomainError("sweep: parameter ranges must be non-empty");
    if (cfg.precision_bits < Precision::kMinBits)
        throw DomainError("sweep: precision must be >= 64 bits");
}

Real parse_tolerance(const SweepConfig& cfg, long wp) {
    Real tol = Real::parse(cfg.tolerance, wp);
    if (!(tol.sign() > 0))
        throw DomainError("tolerance must be > 0");
    return tol;
}

std::string decimal(const std::optional<Real>& v) {
    return v ? v->to_string(kReportDigits) : std::string();
}

} // namespace

std::string to_string(Status s) {
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::domain_skip:
        return "domain_skip";
    case Status::non_converged:
        return "non_converged";
    }
    return "unknown";
}

Summary summarize(const std::vector<VerificationResult>& results) {
    Summary s;
    for (const auto& r : results) {
        switch (r.status) {
        case Status::pass:
            ++s.pass;
            break;
        case Status::fail:
            ++s.fail;
            break;
        case Status::domain_skip:
            ++s.domain_skip;
            break;
        case Status::non_converged:
            ++s.non_converged;
            break;
        }
    }
    return s;
}

VerificationResult verify_one(const std::string& id, const ParamSet& p,
                              const SweepConfig& cfg) {
    validate(cfg);
    const IdentityEntry* entry = find_entry(id);
    if (!entry)
        throw std::invalid_argument("verify_one: unknown identity id '" + id + "'");

    VerificationResult r;
    r.identity_id = id;
    r.params = p;
    r.precision_bits = cfg.precision_bits;

    if (auto violation = entry->domain_violation(p)) {
        r.status = Status::domain_skip;
        r.note = *violation;
        return r;
    }

    const Precision prec(cfg.precision_bits);
    const long wp = prec.working();
    const Real tol = parse_tolerance(cfg, wp);

    try {
        const SeriesSpec spec = entry->lhs(p, prec);
        const CertifiedValue lhs = eval_series(spec, tol / 2);
        const Real rhs = entry->rhs(p, prec);
        const Real diff = abs(lhs.value - rhs);
        r.lhs_value = lhs.value;
        r.lhs_error_bound = lhs.abs_error_bound;
        r.rhs_value = rhs;
        r.abs_diff = diff;
        r.terms_used = lhs.terms_used;
        r.status = diff <= lhs.abs_error_bound + tol ? Status::pass : Status::fail;
        if (r.status == Status::fail && entry->expect_discrepancy)
            r.note = "known discrepancy";
    } catch (const NonConvergenceError& e) {
        r.status = Status::non_converged;
        r.note = e.what();
    }
    return r;
}

namespace {

struct Cell {
    std::string id;
    ParamSet p;
};

std::vector<Cell> sweep_cells(const SweepConfig& cfg) {
    std::vector<const IdentityEntry*> selected;
    if (cfg.identity_filter.empty()) {
        for (const auto& e : catalog_entries())
            selected.push_back(&e);
    } else {
        // filter ids that match nothing contribute nothing (empty sweeps are
        // legal); verify_one is the strict path for unknown ids
        for (const auto& id : cfg.identity_filter)
            if (const IdentityEntry* e = find_entry(id))
                selected.push_back(e);
    }
    std::sort(selected.begin(), selected.end(),
              [](const IdentityEntry* a, const IdentityEntry* b) { return a->id < b->id; });

    std::vector<Cell> cells;
    for (const IdentityEntry* e : selected) {
        if (e->uses_m && e->uses_n) {
            for (long m = cfg.m_lo; m <= cfg.m_hi; ++m)
                for (long n = cfg.n_lo; n <= cfg.n_hi; ++n)
                    cells.push_back({e->id, ParamSet{m, n}});
        } else if (e->uses_m) {
            for (long m = cfg.m_lo; m <= cfg.m_hi; ++m)
                cells.push_back({e->id, ParamSet{m, std::nullopt}});
        } else if (e->uses_n) {
            for (long n = cfg.n_lo; n <= cfg.n_hi; ++n)
                cells.push_back({e->id, ParamSet{std::nullopt, n}});
        } else {
            cells.push_back({e->id, ParamSet{}});
        }
    }
    return cells;
}

} // namespace

std::vector<VerificationResult> sweep(const SweepConfig& cfg) {
    validate(cfg);
    const std::vector<Cell> cells = sweep_cells(cfg);
    std::vector<VerificationResult> results(cells.size());

    unsigned jobs = cfg.jobs > 0 ? static_cast<unsigned>(cfg.jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, cells.size() == 0 ? 1 : cells.size());

    // Cells are independent; results land at their generation index, so the
    // report order never depends on scheduling.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size())
                return;
            results[i] = verify_one(cells[i].id, cells[i].p, cfg);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return results;
}

std::string report_json(const std::vector<VerificationResult>& results) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = "1";
    doc["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json row;
        row["identity_id"] = r.identity_id;
        row["m"] = r.params.m ? nlohmann::ordered_json(*r.params.m)
                              : nlohmann::ordered_json(nullptr);
        row["n"] = r.params.n ? nlohmann::ordered_json(*r.params.n)
                              : nlohmann::ordered_json(nullptr);
        row["status"] = to_string(r.status);
        row["lhs_value"] = r.lhs_value ? nlohmann::ordered_json(decimal(r.lhs_value))
                                       : nlohmann::ordered_json(nullptr);
        row["lhs_error_bound"] =
            r.lhs_error_bound ? nlohmann::ordered_json(decimal(r.lhs_error_bound))
                              : nlohmann::ordered_json(nullptr);
        row["rhs_value"] = r.rhs_value ? nlohmann::ordered_json(decimal(r.rhs_value))
                                       : nlohmann::ordered_json(nullptr);
        row["abs_diff"] = r.abs_diff ? nlohmann::ordered_json(decimal(r.abs_diff))
                                     : nlohmann::ordered_json(nullptr);
        row["terms_used"] = r.terms_used;
        row["precision_bits"] = r.precision_bits;
        row["note"] = r.note;
        doc["results"].push_back(std::move(row));
    }
    const Summary s = summarize(results);
    doc["summary"] = {{"pass", s.pass},
                      {"fail", s.fail},
                      {"domain_skip", s.domain_skip},
                      {"non_converged", s.non_converged}};
    return doc.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string report_csv(const std::vector<VerificationResult>& results) {
    std::string out = "identity_id,m,n,status,lhs_value,lhs_error_bound,rhs_value,"
                      "abs_diff,terms_used,precision_bits,note\n";
    for (const auto& r : results) {
        out += csv_escape(r.identity_id);
        out += ',';
        out += r.params.m ? std::to_string(*r.params.m) : std::string();
        out += ',';
        out += r.params.n ? std::to_string(*r.params.n) : std::string();
        out += ',';
        out += to_string(r.status);
        out += ',';
        out += decimal(r.lhs_value);
        out += ',';
        out += decimal(r.lhs_error_bound);
        out += ',';
        out += decimal(r.rhs_value);
        out += ',';
        out += decimal(r.abs_diff);
        out += ',';
        out += std::to_string(r.terms_used);
        out += ',';
        out += std::to_string(r.precision_bits);
        out += ',';
        out += csv_escape(r.note);
        out += '\n';
    }
    return out;
}

void write_report(const std::vector<VerificationResult>& results, ReportFormat fmt,
                  const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("write_report: cannot open '" + path + "'");
    f << (fmt == ReportFormat::json ? report_json(results) : report_csv(results));
    if (!f)
        throw std::runtime_error("write_report: write failed for '" + path + "'");
}

long default_precision_bits() {
    if (const char* env = std::getenv("ZETAFIB_DEFAULT_PREC")) {
        char* end = nullptr;
        const long bits = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || bits < Precision::kMinBits)
            throw DomainError("ZETAFIB_DEFAULT_PREC must be an integer >= 64");
        return bits;
    }
    return 256;
}

} // namespace zetafib
