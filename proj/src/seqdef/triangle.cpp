#include "holonorm/seqdef/triangle.hpp"

#include "holonorm/ore/text.hpp"

#include <fstream>
#include <sstream>

namespace holonorm {

RowData eval_rows(const CoeffTriangle& t, long n_max) {
    if (n_max < 4)
        throw InvalidInput("n_max must be at least 4");
    RowData out;
    if (const auto* recs = std::get_if<TermRecurrences>(&t.source)) {
        for (size_t j = 0; j < 3; ++j)
            out.F[j] = (*recs)[j].generate(static_cast<size_t>(n_max) + 1);
        return out;
    }
    if (const auto* gen = std::get_if<RowGenerator>(&t.source)) {
        out.rows = (*gen)(n_max);
        out.rows.resize(static_cast<size_t>(n_max) + 1);
    } else {
        const Expr& e = *std::get<ExprPtr>(t.source);
        for (long n = 0; n <= n_max; ++n) {
            std::vector<Rational> row;
            if (n == 0 && t.row0) {
                row = *t.row0;
            } else {
                for (long k = 0; k <= n; ++k)
                    row.push_back(eval_coeff(e, n, k));
            }
            out.rows.push_back(std::move(row));
        }
    }
    if (t.row0 && !out.rows.empty())
        out.rows[0] = *t.row0;
    for (size_t n = 0; n < out.rows.size(); ++n) {
        Rational s0 = 0, s1 = 0, s2 = 0;
        for (size_t k = 0; k < out.rows[n].size(); ++k) {
            const Rational& a = out.rows[n][k];
            if (a < 0 && !out.first_negative_row)
                out.first_negative_row = static_cast<long>(n);
            const long kk = static_cast<long>(k);
            s0 += a;
            s1 += a * kk;
            s2 += a * (kk * (kk - 1));
        }
        out.F[0].push_back(s0);
        out.F[1].push_back(s1);
        out.F[2].push_back(s2);
    }
    return out;
}

namespace {

CoeffTriangle expr_entry(std::string name, const std::string& def, bool symmetric) {
    CoeffTriangle t;
    t.name = std::move(name);
    t.definition = def;
    t.source = parse_def(def);
    t.symmetric = symmetric;
    return t;
}

// D(i, j) counts lattice paths with steps (1,0), (0,1), (1,1); row n holds D(n-k, k).
std::vector<std::vector<Rational>> delannoy_rows(long n_max) {
    std::vector<std::vector<Integer>> d(static_cast<size_t>(n_max) + 1, std::vector<Integer>(static_cast<size_t>(n_max) + 1));
    for (size_t i = 0; i <= static_cast<size_t>(n_max); ++i)
        for (size_t j = 0; i + j <= static_cast<size_t>(n_max); ++j)
            d[i][j] = (i == 0 || j == 0) ? Integer(1) : d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
    std::vector<std::vector<Rational>> rows;
    for (long n = 0; n <= n_max; ++n) {
        std::vector<Rational> row;
        for (long k = 0; k <= n; ++k)
            row.emplace_back(d[static_cast<size_t>(n - k)][static_cast<size_t>(k)]);
        rows.push_back(std::move(row));
    }
    return rows;
}

struct Entry {
    const char* name;
    bool optional;
};

const Entry kEntries[] = {
    {"apery", false},
    {"franel", false},
    {"binomial", false},
    {"narayana", false},
    {"delannoy", false},
    {"central-trinomial-triangle", false},
    {"generalized-narayana", false},
    {"motzkin", true},
    {"schroeder", true},
    {"reversed-schroeder", true},
};

} // namespace

std::vector<std::string> catalog_names(bool include_optional) {
    std::vector<std::string> out;
    for (const auto& e : kEntries)
        if (include_optional || !e.optional)
            out.emplace_back(e.name);
    return out;
}

CoeffTriangle catalog_get(const std::string& query, bool include_optional) {
    std::string name = query;
    std::optional<long> param;
    if (auto colon = query.find(':'); colon != std::string::npos) {
        name = query.substr(0, colon);
        try {
            size_t used = 0;
            param = std::stol(query.substr(colon + 1), &used);
            if (used != query.size() - colon - 1 || *param < 0)
                throw std::invalid_argument("parameter");
        } catch (const std::exception&) {
            throw InvalidInput("bad parameter in '" + query + "'");
        }
        if (name != "generalized-narayana")
            throw InvalidInput("'" + name + "' takes no parameter");
    }
    bool known = false, optional = false;
    for (const auto& e : kEntries)
        if (name == e.name) {
            known = true;
            optional = e.optional;
        }
    if (!known || (optional && !include_optional)) {
        std::string names;
        for (const auto& n : catalog_names(include_optional))
            names += (names.empty() ? "" : ", ") + n;
        throw UnknownSequence("unknown sequence '" + query + "'" +
                              (known ? " (optional entry; pass --optional)" : "") + "; available: " + names);
    }

    if (name == "apery")
        return expr_entry(name, "binomial(n, k)^2*binomial(n + k, k)", false);
    if (name == "franel")
        return expr_entry(name, "binomial(n, k)^3", true);
    if (name == "binomial")
        return expr_entry(name, "binomial(n, k)", true);
    if (name == "narayana") {
        CoeffTriangle t = expr_entry(name, "binomial(n, k)*binomial(n, k - 1)/n", false);
        t.row0 = std::vector<Rational>{1};
        return t;
    }
    if (name == "delannoy") {
        CoeffTriangle t;
        t.name = name;
        t.definition = "D(n - k, k), D(i, j) = D(i - 1, j) + D(i, j - 1) + D(i - 1, j - 1), D(i, 0) = D(0, j) = 1";
        t.source = RowGenerator(delannoy_rows);
        t.symmetric = false;
        return t;
    }
    if (name == "central-trinomial-triangle")
        return expr_entry(name, "binomial(n, 2*k)*binomial(2*k, k)", false);
    if (name == "generalized-narayana") {
        const long r = param.value_or(1);
        CoeffTriangle t = expr_entry(name, "binomial(n, k)*binomial(n, k + " + std::to_string(r) + ")", r == 0);
        if (param)
            t.name = query;
        return t;
    }
    CoeffTriangle t;
    if (name == "motzkin")
        t = expr_entry(name, "binomial(n, 2*k)*binomial(2*k, k)/(k + 1)", false);
    else if (name == "schroeder")
        t = expr_entry(name, "binomial(2*n - k, 2*n - 2*k)*binomial(2*n - 2*k, n - k)/(n - k + 1)", false);
    else
        t = expr_entry(name, "binomial(n + k, 2*k)*binomial(2*k, k)/(k + 1)", false);
    t.optional_entry = true;
    return t;
}

namespace {

std::string trim(const std::string& s) {
    const size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool valid_identifier(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.'))
            return false;
    return true;
}

} // namespace

CoeffTriangle parse_definition(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    CoeffTriangle t;
    bool have_name = false, have_expr = false;
    std::array<std::optional<Recurrence>, 3> recs;

    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        if (!have_name) {
            if (line.rfind("name:", 0) != 0)
                throw SyntaxError(lineno, 1, "first line must be 'name: <identifier>'", {"name:"});
            t.name = trim(line.substr(5));
            if (!valid_identifier(t.name))
                throw SyntaxError(lineno, 6, "invalid sequence name '" + t.name + "'", {"identifier"});
            have_name = true;
            continue;
        }
        if (line.rfind("a(n,k)", 0) == 0) {
            const size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw SyntaxError(lineno, 7, "missing '='", {"'='"});
            const size_t offset = raw.find('=') + 1;
            // Blank out the prefix so reported columns match the file.
            t.source = parse_def(std::string(offset, ' ') + raw.substr(offset), lineno);
            t.definition = trim(raw.substr(offset));
            have_expr = true;
            continue;
        }
        if (line.rfind("symmetric:", 0) == 0) {
            const std::string v = trim(line.substr(10));
            if (v != "true" && v != "false")
                throw SyntaxError(lineno, 11, "symmetric must be true or false", {"true", "false"});
            t.symmetric = v == "true";
            continue;
        }
        if (line.size() > 2 && line[0] == 'F' && line[1] >= '0' && line[1] <= '2') {
            const size_t j = static_cast<size_t>(line[1] - '0');
            const size_t eq = line.find('='), semi = line.find(';');
            if (eq == std::string::npos || semi == std::string::npos || semi < eq)
                throw SyntaxError(lineno, 1, "expected 'F" + std::to_string(j) + " = <operator> ; <initial values>'");
            std::vector<Rational> init;
            std::stringstream vals(line.substr(semi + 1));
            std::string tok;
            while (std::getline(vals, tok, ','))
                if (!trim(tok).empty())
                    init.push_back(parse_rational(trim(tok)));
            try {
                recs[j] = Recurrence::from_operator(parse_operator(line.substr(eq + 1, semi - eq - 1)), 0, init);
            } catch (const ParseError& e) {
                throw SyntaxError(lineno, e.column() + eq + 1, e.what());
            }
            continue;
        }
        throw SyntaxError(lineno, 1, "unrecognized line", {"a(n,k) = <expr>", "symmetric: true", "F0 = ..."});
    }
    if (!have_name)
        throw SyntaxError(lineno + 1, 1, "missing 'name:' line", {"name:"});
    const bool any_rec = recs[0] || recs[1] || recs[2];
    if (have_expr && any_rec)
        throw InvalidInput("definition has both a(n,k) and F0/F1/F2 recurrences");
    if (any_rec) {
        if (!(recs[0] && recs[1] && recs[2]))
            throw InvalidInput("recurrence definitions need all of F0, F1 and F2");
        t.source = TermRecurrences{*recs[0], *recs[1], *recs[2]};
        t.definition = "F0, F1, F2 by recurrence";
    } else if (!have_expr) {
        throw SyntaxError(lineno + 1, 1, "missing 'a(n,k) = <expr>' line", {"a(n,k) ="});
    }
    return t;
}

CoeffTriangle load_definition(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open definition file '" + path + "': file not found or unreadable");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_definition(ss.str());
}

} // namespace holonorm
