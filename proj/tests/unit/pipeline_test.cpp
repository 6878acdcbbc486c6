#include "doctest.h"

#include "cli.hpp"
#include "holonorm/pipeline/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace holonorm;

namespace {

bool has_warning(const AnalysisReport& rep, const std::string& type) {
    for (const auto& w : rep.warnings)
        if (w.type == type)
            return true;
    return false;
}

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
    args.insert(args.begin(), "holonorm");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text)
        *out_text = out.str();
    if (err_text)
        *err_text = err.str();
    return code;
}

AnalysisConfig quick() {
    AnalysisConfig cfg;
    cfg.n_max_terms = 120;
    cfg.stats_n = {25, 50, 100};
    return cfg;
}

} // namespace

TEST_CASE("apery analysis") {
    const auto rep = analyze(catalog_get("apery"));
    CHECK(rep.verdict == Verdict::AsymptoticallyNormal);
    CHECK(rep.warnings.empty());
    REQUIRE(rep.mu_leading());
    CHECK(std::abs(*rep.mu_leading() - 0.6180340) < 1e-7);
    CHECK(std::abs(*rep.sigma2_leading() - 0.1055728) < 1e-7);
    CHECK(rep.sufficiency->mu_exponent == 1);
    CHECK(*rep.sufficiency->m == 1);
    for (const auto& v : rep.verification)
        CHECK(v->ok);
    CHECK(rep.real_rooted->all_verified);
    CHECK(rep.real_rooted->bound == 40);
    CHECK(rep.stats.size() == 4);
    CHECK(rep.statement.find("n <= 40") != std::string::npos);
}

TEST_CASE("franel analysis") {
    const auto rep = analyze(catalog_get("franel"), quick());
    CHECK(rep.verdict == Verdict::AsymptoticallyNormal);
    CHECK(std::abs(*rep.mu_leading() - 0.5) < 1e-12);
    CHECK(std::abs(*rep.sigma2_leading() - 1.0 / 12) < 1e-10);
    const auto& mu = rep.sufficiency->mu_terms;
    REQUIRE(mu.size() > 1);
    for (size_t i = 1; i < mu.size(); ++i)
        CHECK(mu[i].zero);
    REQUIRE(exact_lambda(*rep.forms[0]));
    CHECK(*exact_lambda(*rep.forms[0]) == 8);
    CHECK_FALSE(exact_lambda(*analyze(catalog_get("apery"), quick()).forms[0]));
}

TEST_CASE("degenerate and failing inputs") {
    CoeffTriangle point;
    point.name = "point";
    point.source = parse_def("binomial(0,k)");
    auto rep = analyze(point, quick());
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK(has_warning(rep, "ZeroVariance"));

    CoeffTriangle neg;
    neg.name = "neg";
    neg.source = parse_def("binomial(n,k)*(2*k-1)");
    rep = analyze(neg, quick());
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK(rep.first_negative_row == 0);
    CHECK(has_warning(rep, "NegativeCoefficients"));

    // x^n + 1 is not real-rooted from n = 2 on, although its moments behave.
    CoeffTriangle ends;
    ends.name = "ends";
    ends.source = RowGenerator([](long n_max) {
        std::vector<std::vector<Rational>> rows;
        for (long n = 0; n <= n_max; ++n) {
            std::vector<Rational> row(static_cast<size_t>(n) + 1);
            row.front() = 1;
            row.back() = 1;
            rows.push_back(row);
        }
        return rows;
    });
    rep = analyze(ends, quick());
    REQUIRE(rep.sufficiency);
    CHECK(rep.sufficiency->verdict == Verdict::AsymptoticallyNormal);
    CHECK(rep.real_rooted->first_failure == 2);
    CHECK(has_warning(rep, "NotRealRooted"));
    CHECK(rep.verdict == Verdict::Inconclusive);

    // Recurrence-only definitions cannot be checked for real roots.
    auto rec = parse_definition("name: pow2\n"
                                "F0 = (-2) * S^0 + (1) * S^1 ; 1\n"
                                "F1 = (-2*n-2) * S^0 + (n) * S^1 ; 0, 1\n"
                                "F2 = (-2*n-2) * S^0 + (n-1) * S^1 ; 0, 0, 2\n");
    rep = analyze(rec, quick());
    CHECK(std::abs(*rep.sigma2_leading() - 0.25) < 1e-10);
    CHECK(has_warning(rep, "RowsUnavailable"));
    CHECK(rep.verdict == Verdict::Inconclusive);
}

TEST_CASE("config validation") {
    AnalysisConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.stats_n = {25, 500};
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
    cfg = {};
    cfg.sturm_bound = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
    cfg = {};
    cfg.depth = 0;
    CHECK_THROWS_AS(analyze(catalog_get("binomial"), cfg), InvalidInput);
}

TEST_CASE("reports are deterministic and stage isolated") {
    AnalysisConfig cfg = quick();
    const auto t = catalog_get("binomial");
    const auto r1 = analyze(t, cfg), r2 = analyze(t, cfg);
    CHECK(render_report(r1, OutputFormat::Json) == render_report(r2, OutputFormat::Json));
    cfg.run_stats = false;
    const auto r3 = analyze(t, cfg);
    CHECK(r3.stats.empty());
    CHECK(report_json(r3)["theorem23"] == report_json(r1)["theorem23"]);

    const auto j = report_json(r1);
    for (const char* key : {"schema", "sequence", "recurrences", "asymptotics", "ratios", "theorem23",
                            "real_rooted_upto", "stats", "warnings"})
        CHECK(j.contains(key));
    CHECK(j["schema"] == 1);
    for (const char* key : {"condition1", "condition2", "m", "leading", "verdict"})
        CHECK(j["theorem23"].contains(key));
    CHECK(j["theorem23"]["m"] == "1");
    CHECK(j["theorem23"]["leading"] == "0.25");
    CHECK(j["recurrences"].size() == 3);
    CHECK(j["asymptotics"][0]["lambda"]["value"] == "2 +/- 0");
    CHECK(j["stats"][0]["n"] == "25");
    CHECK(render_report(r1, OutputFormat::Csv).rfind("n,mu,sigma2,kolmogorov,llt_sup\n", 0) == 0);
    CHECK(render_report(r1, OutputFormat::Text).find("verdict: AsymptoticallyNormal") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    std::string out, err;
    CHECK(run_cli({"catalog"}, &out) == 0);
    for (const char* name : {"apery", "franel", "narayana", "binomial"})
        CHECK(out.find(name) != std::string::npos);

    CHECK(run_cli({"analyze", "--catalog", "binomial", "--terms", "100", "--stats-n", "25,50"}, &out) == 0);
    CHECK(nlohmann::json::parse(out)["theorem23"]["verdict"] == "AsymptoticallyNormal");

    CHECK(run_cli({"analyze", "--def", "missing.txt"}, &out, &err) == 1);
    CHECK(err.find("not found") != std::string::npos);
    CHECK(run_cli({"analyze", "--catalog", "nope"}, &out, &err) == 1);
    CHECK(err.find("franel") != std::string::npos);
    CHECK(run_cli({"analyze"}, &out, &err) == 1);
    CHECK(run_cli({"analyze", "--catalog", "franel", "--format", "xml"}, &out, &err) == 1);
    CHECK(run_cli({}, &out, &err) == 1);
    CHECK(err.find("binomial(expr, expr)") != std::string::npos);

    const std::string def = "pipeline_test_point.txt";
    std::ofstream(def) << "name: point\na(n,k) = binomial(0,k)\n";
    CHECK(run_cli({"analyze", "--def", def, "--terms", "60", "--stats-n", "25", "--sturm-bound", "20"}, &out) == 2);
    std::ofstream(def) << "name: bad\na(n,k) = binomial(n,k\n";
    CHECK(run_cli({"analyze", "--def", def}, &out, &err) == 1);
    CHECK(err.find("line 2") != std::string::npos);
    std::remove(def.c_str());

    CHECK(run_cli({"sturm", "--catalog", "narayana", "--nmax", "20"}, &out) == 0);
    CHECK(out.find("yes") != std::string::npos);
    CHECK(run_cli({"stats", "--catalog", "franel", "--n", "25,50"}, &out) == 0);
    CHECK(out.find("25,12.5,") != std::string::npos);
}

TEST_CASE("cli guess and asym") {
    const std::string terms = "pipeline_test_terms.txt", rec = "pipeline_test_rec.json";
    {
        std::ofstream f(terms);
        Integer a = 0, b = 1;
        for (int i = 0; i < 50; ++i) {
            f << a << (i % 10 == 9 ? "\n" : ", ");
            Integer c = a + b;
            a = b;
            b = c;
        }
    }
    std::string out;
    REQUIRE(run_cli({"guess", "--terms", terms}, &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["order"] == "2");
    std::ofstream(rec) << out;
    REQUIRE(run_cli({"asym", "--rec", rec, "--order", "3"}, &out) == 0);
    j = nlohmann::json::parse(out);
    CHECK(j["lambda"]["value"].get<std::string>().rfind("1.61803398874989484820458", 0) == 0);
    CHECK(j["r"] == "0");

    std::ofstream(rec) << "(n+1) * S^0 + (-1) * S^1";
    std::string err;
    CHECK(run_cli({"asym", "--rec", rec}, &out, &err) == 2);
    CHECK(err.find("uperexponential") != std::string::npos);

    std::ofstream(terms) << "3 1 4 1 5 9 2 6 5 3 5 8 9 7 9 3 2 3 8 4 6 2 6 4 3 3 8 3 2 7 9 5 0 2 8 8 4 1 9 7 1 6 9 3 9 9 "
                            "3 7 5 1 0 5 8 2 0 9 7 4 9";
    CHECK(run_cli({"guess", "--terms", terms}, &out) == 2);
    std::remove(terms.c_str());
    std::remove(rec.c_str());
}
