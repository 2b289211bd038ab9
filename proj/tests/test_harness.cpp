#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zetafib/harness.hpp"
#include "zetafib/specfun.hpp"

using namespace zetafib;

namespace {

SweepConfig default_cfg() { return SweepConfig{}; }

} // namespace

TEST_CASE("verify_one: parameter-free pass cases") {
    const SweepConfig cfg = default_cfg();

    const VerificationResult e24 = verify_one("E24", {}, cfg);
    CHECK(e24.status == Status::pass);
    REQUIRE(e24.abs_diff.has_value());
    CHECK(*e24.abs_diff < Real::parse("1e-40", 320));
    CHECK(e24.precision_bits == 256);
    CHECK(e24.terms_used > 50);

    const VerificationResult k2 = verify_one("K2", {}, cfg);
    CHECK(k2.status == Status::pass);
    CHECK(abs(*k2.lhs_value - Real::of_ratio(1, 2, 320)) <=
          *k2.lhs_error_bound + Real::parse("1e-40", 320));
}

TEST_CASE("verify_one: domain skip carries the constraint name") {
    const VerificationResult r = verify_one("T4-e", ParamSet{1, 1}, default_cfg());
    CHECK(r.status == Status::domain_skip);
    CHECK(r.note == "base>=2");
    CHECK(!r.lhs_value.has_value());
}

TEST_CASE("verify_one: unknown id raises") {
    CHECK_THROWS_AS(verify_one("NOPE", {}, default_cfg()), std::invalid_argument);
}

TEST_CASE("verify_one: bad configuration is rejected") {
    SweepConfig cfg = default_cfg();
    cfg.tolerance = "0";
    CHECK_THROWS_AS(verify_one("E24", {}, cfg), DomainError);
    cfg = default_cfg();
    cfg.tolerance = "banana";
    CHECK_THROWS_AS(verify_one("E24", {}, cfg), DomainError);
    cfg = default_cfg();
    cfg.m_lo = 5;
    cfg.m_hi = 2;
    CHECK_THROWS_AS(sweep(cfg), DomainError);
}

TEST_CASE("sweep: filtered run reproduces the printed example values") {
    SweepConfig cfg = default_cfg();
    cfg.identity_filter = {"T1-F"};
    cfg.m_lo = 2;
    cfg.m_hi = 3;
    const auto rs = sweep(cfg);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].status == Status::pass);
    CHECK(rs[1].status == Status::pass);

    const Precision prec(256);
    const Real ex_f2 = build_rhs(*find_entry("EX1-F2"), {}, prec);
    const Real ex_f3 = build_rhs(*find_entry("EX1-F3"), {}, prec);
    CHECK(abs(*rs[0].lhs_value - ex_f2) < Real::parse("1e-40", 320));
    CHECK(abs(*rs[1].lhs_value - ex_f3) < Real::parse("1e-40", 320));
}

TEST_CASE("sweep: a filter matching nothing yields an empty report") {
    SweepConfig cfg = default_cfg();
    cfg.identity_filter = {"NO-SUCH-ID"};
    const auto rs = sweep(cfg);
    CHECK(rs.empty());
    const Summary s = summarize(rs);
    CHECK(s.pass == 0);
    CHECK(s.fail == 0);
    CHECK(s.domain_skip == 0);
    CHECK(s.non_converged == 0);
    CHECK(s.clean());
}

TEST_CASE("sweep: every cell appears with some status, ordered by (id, m, n)") {
    SweepConfig cfg = default_cfg();
    cfg.identity_filter = {"T4-e", "E19"};
    const auto rs = sweep(cfg);
    // E19: n cells; T4-e: m x n cells
    CHECK(rs.size() == 10 + 9 * 10);
    for (std::size_t i = 0; i < 10; ++i)
        CHECK(rs[i].identity_id == "E19");
    for (std::size_t i = 10; i < rs.size(); ++i)
        CHECK(rs[i].identity_id == "T4-e");
    CHECK(rs[0].params.n == 1);
    CHECK(rs[0].status == Status::domain_skip); // E19 needs n >= 2
    CHECK(rs[10].params.m == 0);                // T4-e m=0 row skipped
    CHECK(rs[10].status == Status::domain_skip);
    long skips = 0;
    for (const auto& r : rs) {
        CHECK((r.status == Status::pass || r.status == Status::domain_skip));
        if (r.status == Status::domain_skip)
            ++skips;
    }
    CHECK(skips > 0);
}

TEST_CASE("reports: shape and round-trip parseability") {
    SweepConfig cfg = default_cfg();
    cfg.identity_filter = {"E24"};
    const auto rs = sweep(cfg);
    REQUIRE(rs.size() == 1);

    const std::string js = report_json(rs);
    const auto doc = nlohmann::json::parse(js);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["results"].size() == 1);
    CHECK(doc["results"][0]["status"] == "pass");
    CHECK(doc["results"][0]["m"].is_null());
    CHECK(doc["summary"]["pass"] == 1);
    CHECK(doc["summary"]["fail"] == 0);
    // 50 significant digits in the decimal strings
    const std::string lhs = doc["results"][0]["lhs_value"].get<std::string>();
    CHECK(lhs.find('e') != std::string::npos);
    const Real parsed = Real::parse(lhs, 320);
    CHECK(abs(parsed - *rs[0].lhs_value) < Real::parse("1e-45", 320));

    SweepConfig mixed = default_cfg();
    mixed.identity_filter = {"T4-e"};
    const auto rs2 = sweep(mixed);
    const std::string csv = report_csv(rs2);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line ==
          "identity_id,m,n,status,lhs_value,lhs_error_bound,rhs_value,abs_diff,"
          "terms_used,precision_bits,note");
    long rows = 0;
    while (std::getline(is, line))
        if (!line.empty())
            ++rows;
    CHECK(rows == static_cast<long>(rs2.size()));
}

TEST_CASE("reports: deterministic byte-for-byte, independent of worker count") {
    SweepConfig cfg = default_cfg();
    cfg.identity_filter = {"T5-c", "K1", "E22", "AUX-PSI-F"};
    cfg.jobs = 1;
    const std::string first = report_json(sweep(cfg));
    const std::string second = report_json(sweep(cfg));
    CHECK(first == second);
    cfg.jobs = 8;
    const std::string parallel = report_json(sweep(cfg));
    CHECK(first == parallel);
    const std::string csv1 = report_csv(sweep(cfg));
    cfg.jobs = 3;
    const std::string csv2 = report_csv(sweep(cfg));
    CHECK(csv1 == csv2);
}

TEST_CASE("write_report: files land on disk; bad paths surface the path") {
    SweepConfig cfg = default_cfg();
    cfg.identity_filter = {"E24"};
    const auto rs = sweep(cfg);
    const std::string path = "harness_report_test.json";
    write_report(rs, ReportFormat::json, path);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == report_json(rs));
    std::remove(path.c_str());

    CHECK_THROWS_WITH_AS(write_report(rs, ReportFormat::csv, "/no/such/dir/x.csv"),
                         doctest::Contains("/no/such/dir/x.csv"),
                         std::runtime_error);
}

TEST_CASE("full default sweep is clean") {
    const auto rs = sweep(default_cfg());
    const Summary s = summarize(rs);
    CHECK(rs.size() == 1046);
    CHECK(s.fail == 0);
    CHECK(s.non_converged == 0);
    CHECK(s.pass > 600);
}

TEST_CASE("monotone precision: doubled bits and hundredfold tighter tolerance") {
    SweepConfig cfg = default_cfg();
    cfg.precision_bits = 512;
    cfg.tolerance = "1e-42";
    const auto rs = sweep(cfg);
    const Summary s = summarize(rs);
    CHECK(s.fail == 0);
    CHECK(s.non_converged == 0);
    const auto base = summarize(sweep(default_cfg()));
    CHECK(s.pass == base.pass);
    CHECK(s.domain_skip == base.domain_skip);
}

TEST_CASE("default precision env override") {
    unsetenv("ZETAFIB_DEFAULT_PREC");
    CHECK(default_precision_bits() == 256);
    setenv("ZETAFIB_DEFAULT_PREC", "384", 1);
    CHECK(default_precision_bits() == 384);
    setenv("ZETAFIB_DEFAULT_PREC", "12", 1);
    CHECK_THROWS_AS(default_precision_bits(), DomainError);
    setenv("ZETAFIB_DEFAULT_PREC", "many", 1);
    CHECK_THROWS_AS(default_precision_bits(), DomainError);
    unsetenv("ZETAFIB_DEFAULT_PREC");
}
