#include "cli.hpp"

#include "holonorm/ore/recurrence_json.hpp"
#include "holonorm/ore/text.hpp"
#include "holonorm/pipeline/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace holonorm {

namespace {

constexpr const char* kGrammar = R"(Definition file:
  name: <identifier>
  a(n,k) = <expr>
  symmetric: true          (optional)

expr   := term (('+'|'-') term)*
term   := factor (('*'|'/') factor)*
factor := base ('^' uint)?
base   := uint | n | k | binomial(expr, expr) | factorial(expr) | (expr)
)";

struct Source {
    std::string catalog;
    std::string def;
    bool optional = false;

    void attach(CLI::App* cmd) {
        auto* c = cmd->add_option("--catalog", catalog, "built-in sequence name");
        auto* d = cmd->add_option("--def", def, "definition file");
        c->excludes(d);
        cmd->add_flag("--optional", optional, "allow optional catalog entries");
    }

    CoeffTriangle load() const {
        if (!def.empty())
            return load_definition(def);
        if (catalog.empty())
            throw CLI::ValidationError("one of --catalog or --def is required");
        return catalog_get(catalog, optional);
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open '" + path + "': file not found or unreadable");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Rational> read_terms(const std::string& path) {
    std::vector<Rational> out;
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        for (char& c : line)
            if (c == ',')
                c = ' ';
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok)
            out.push_back(parse_rational(tok));
    }
    return out;
}

// JSON recurrence file, or a bare operator in text form.
Recurrence read_recurrence(const std::string& path) {
    const std::string text = read_file(path);
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_object())
        return j.get<Recurrence>();
    const auto op = parse_operator(text).normalized();
    if (op.is_zero())
        throw InvalidInput("zero operator is not a recurrence");
    Recurrence rec; // the expansion needs no initial values
    for (const auto& c : op.coeffs())
        rec.coeffs.push_back(c.num());
    return rec;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw InvalidInput("cannot write '" + path + "'");
    f << text;
}

} // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Asymptotic normality of P-recursive coefficient triangles"};
    app.require_subcommand(1);
    app.footer(kGrammar);

    AnalysisConfig cfg;
    Source src;
    std::string format = "json", out_path;
    long max_order = cfg.guess.max_order, max_degree = cfg.guess.max_degree;
    bool no_stats = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "run the full analysis");
    src.attach(analyze_cmd);
    analyze_cmd->add_option("--terms", cfg.n_max_terms, "largest index n of generated terms")->capture_default_str();
    analyze_cmd->add_option("--max-order", max_order, "recurrence order bound")->capture_default_str();
    analyze_cmd->add_option("--max-degree", max_degree, "recurrence degree bound")->capture_default_str();
    analyze_cmd->add_option("--order", cfg.M, "series order M")->capture_default_str();
    analyze_cmd->add_option("--precision", cfg.precision, "working precision in bits")->capture_default_str();
    analyze_cmd->add_option("--depth", cfg.depth, "extrapolation depth")->capture_default_str();
    analyze_cmd->add_option("--sturm-bound", cfg.sturm_bound, "real-rootedness bound")->capture_default_str();
    analyze_cmd->add_option("--stats-n", cfg.stats_n, "rows for the limit statistics")->delimiter(',');
    analyze_cmd->add_flag("--no-stats", no_stats, "skip the statistics stage");
    analyze_cmd->add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    analyze_cmd->add_option("--out", out_path, "write the report to a file");

    std::string terms_path;
    auto* guess_cmd = app.add_subcommand("guess", "guess a recurrence for a list of terms");
    guess_cmd->add_option("--terms", terms_path, "file of rational terms starting at n = 0")->required();
    guess_cmd->add_option("--max-order", max_order)->capture_default_str();
    guess_cmd->add_option("--max-degree", max_degree)->capture_default_str();

    std::string rec_path;
    AsymConfig acfg;
    auto* asym_cmd = app.add_subcommand("asym", "asymptotic expansion of a recurrence");
    asym_cmd->add_option("--rec", rec_path, "recurrence JSON or operator text")->required();
    asym_cmd->add_option("--order", acfg.M)->capture_default_str();
    asym_cmd->add_option("--precision", acfg.precision)->capture_default_str();

    long nmax = 40;
    auto* sturm_cmd = app.add_subcommand("sturm", "verify real-rootedness of the rows");
    Source sturm_src;
    sturm_src.attach(sturm_cmd);
    sturm_cmd->add_option("--nmax", nmax)->capture_default_str();

    std::vector<long> stats_n{25, 50, 100, 200};
    auto* stats_cmd = app.add_subcommand("stats", "limit statistics of selected rows");
    Source stats_src;
    stats_src.attach(stats_cmd);
    stats_cmd->add_option("--n", stats_n)->delimiter(',');

    bool list_optional = false;
    auto* catalog_cmd = app.add_subcommand("catalog", "list built-in sequences");
    catalog_cmd->add_flag("--optional", list_optional, "include optional entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return 1;
    }

    try {
        if (*analyze_cmd) {
            cfg.guess.max_order = static_cast<int>(max_order);
            cfg.guess.max_degree = static_cast<int>(max_degree);
            cfg.run_stats = !no_stats;
            cfg.format = format == "csv" ? OutputFormat::Csv : format == "text" ? OutputFormat::Text : OutputFormat::Json;
            const CoeffTriangle t = src.load();
            const AnalysisReport rep = analyze(t, cfg);
            write_output(render_report(rep, cfg.format), out_path, out);
            return rep.verdict == Verdict::AsymptoticallyNormal ? 0 : 2;
        }
        if (*guess_cmd) {
            GuessConfig g;
            g.max_order = static_cast<int>(max_order);
            g.max_degree = static_cast<int>(max_degree);
            const auto terms = read_terms(terms_path);
            if (auto rec = try_guess_recurrence(terms, g)) {
                nlohmann::json j = *rec;
                j["order"] = std::to_string(rec->order());
                j["degree"] = std::to_string(rec->degree());
                out << j.dump(2) << "\n";
                return 0;
            }
            out << "no recurrence of order <= " << max_order << " and degree <= " << max_degree << " fits\n";
            return 2;
        }
        if (*asym_cmd) {
            const Recurrence rec = read_recurrence(rec_path);
            const AsymptoticForm form = expand_asymptotics(rec, acfg);
            out << asymptotic_json(form, "c").dump(2) << "\n";
            return 0;
        }
        if (*sturm_cmd) {
            if (nmax < 4)
                throw InvalidInput("--nmax must be at least 4");
            const CoeffTriangle t = sturm_src.load();
            if (!t.has_rows())
                throw InvalidInput("definition has no coefficient rows");
            const RowData d = eval_rows(t, nmax);
            const RealRootedness r = real_rooted_upto(d.rows);
            out << "real-rooted for n <= " << r.bound << ": " << (r.all_verified ? "yes" : "no");
            if (r.first_failure)
                out << " (first failure at n = " << *r.first_failure << ")";
            out << "\n";
            return 0;
        }
        if (*stats_cmd) {
            const CoeffTriangle t = stats_src.load();
            if (!t.has_rows())
                throw InvalidInput("definition has no coefficient rows");
            long top = 4;
            for (long n : stats_n) {
                if (n < 1)
                    throw InvalidInput("--n entries must be positive");
                top = std::max(top, n);
            }
            const RowData d = eval_rows(t, top);
            std::vector<LimitStats> table;
            for (long n : stats_n) {
                auto s = limit_stats(d.rows[static_cast<size_t>(n)]);
                s.n = n;
                table.push_back(s);
            }
            out << stats_csv(table);
            return 0;
        }
        if (*catalog_cmd) {
            for (const auto& name : catalog_names(list_optional))
                out << name << "\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return 1;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n\n" << kGrammar;
        return 1;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace holonorm
