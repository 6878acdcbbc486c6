#include "holonorm/asym/asymptotics.hpp"

#include "holonorm/exact/complex_roots.hpp"
#include "holonorm/exact/paired.hpp"

#include <algorithm>
#include <cmath>

namespace holonorm {

Unsupported::Unsupported(Kind kind, const std::string& detail)
    : Error(std::string("unsupported (") + kind_name(kind) + "): " + detail), kind_(kind) {}

const char* kind_name(Unsupported::Kind kind) {
    switch (kind) {
    case Unsupported::Kind::Superexponential:
        return "superexponential";
    case Unsupported::Kind::Subexponential:
        return "subexponential";
    case Unsupported::Kind::MultipleDominant:
        return "multiple dominant roots";
    case Unsupported::Kind::ComplexDominantPair:
        return "complex dominant pair";
    case Unsupported::Kind::NegativeDominant:
        return "negative dominant root";
    case Unsupported::Kind::RepeatedRoot:
        return "repeated root";
    }
    return "unknown";
}

Poly char_poly(const Recurrence& rec) {
    const int D = rec.degree();
    if (D < 0)
        throw InvalidInput("recurrence has no nonzero coefficient");
    std::vector<Rational> c;
    for (const auto& p : rec.coeffs)
        c.push_back(p.coeff(D));
    Poly chi(std::move(c));
    if (chi.degree() < rec.order())
        throw Unsupported(Unsupported::Kind::Superexponential,
                          "leading coefficient degree is below the maximal degree " + std::to_string(D));
    int low = 0;
    while (chi.coeff(low) == 0)
        ++low;
    if (low == chi.degree())
        throw Unsupported(Unsupported::Kind::Subexponential, "characteristic polynomial " + chi.to_string("L") +
                                                                  " has no nonzero root");
    return chi;
}

std::optional<Rational> rational_reconstruct(const BigFloat& x, long max_den, const BigFloat& tol) {
    const BigFloat bound = tol * max(abs(x), BigFloat(1L, x.precision()));
    std::optional<Rational> best;
    BigFloat best_err(x.precision());
    for (long q = 1; q <= max_den; ++q) {
        BigFloat scaled = x * BigFloat(q, x.precision());
        Integer p;
        mpfr_get_z(p.get_mpz_t(), scaled.get(), MPFR_RNDN);
        Rational cand = make_rational(p, Integer(q));
        BigFloat err = abs(x - BigFloat(cand, x.precision()));
        if (err <= bound && (!best || err < best_err)) {
            best = cand;
            best_err = err;
        }
    }
    return best;
}

std::string AsymptoticForm::r_text() const {
    if (r_exact)
        return to_string(*r_exact);
    return render_decimal(r, std::max(agreed_digits, 1));
}

namespace {

struct Dominant {
    Poly factor; // square-free factor of chi containing lambda
    RootEnclosure enclosure;
};

// Dominance is decided with Aberth roots at `prec`; lambda itself is certified by Sturm bisection.
Dominant dominant_root(const Poly& chi, int prec) {
    Poly sf = square_free_part(chi);
    if (sf.coeff(0) == 0)
        sf = exact_div(sf, Poly::var());
    auto roots = complex_roots(sf, prec);
    if (roots.empty())
        throw Unsupported(Unsupported::Kind::Subexponential, "no nonzero characteristic root");

    std::vector<BigFloat> mods;
    for (const auto& z : roots)
        mods.push_back(z.modulus());
    size_t top = 0;
    for (size_t i = 1; i < mods.size(); ++i)
        if (mods[i] > mods[top])
            top = i;
    const BigFloat margin = two_pow(-(prec / 4), prec) * mods[top];
    std::vector<size_t> dominant;
    for (size_t i = 0; i < mods.size(); ++i)
        if (mods[top] - mods[i] <= margin)
            dominant.push_back(i);
    auto is_real = [&](size_t i) { return abs(roots[i].im) <= margin; };
    if (dominant.size() > 1) {
        for (size_t i : dominant)
            if (!is_real(i))
                throw Unsupported(Unsupported::Kind::ComplexDominantPair,
                                  "dominant roots of modulus " + mods[top].to_string(12) + " include a non-real pair");
        throw Unsupported(Unsupported::Kind::MultipleDominant,
                          std::to_string(dominant.size()) + " real roots share the maximal modulus " +
                              mods[top].to_string(12));
    }
    const BigComplex& lam = roots[top];
    if (!is_real(top))
        throw Unsupported(Unsupported::Kind::ComplexDominantPair, "dominant root is not real");
    if (lam.re.sign() < 0)
        throw Unsupported(Unsupported::Kind::NegativeDominant, "dominant root " + lam.re.to_string(12) + " is negative");

    RootEnclosure enc = isolate_root(sf, RootSelector::largest_real(), prec);
    if (abs(enclosure_value(enc, prec) - lam.re) > margin)
        throw Error("Sturm enclosure disagrees with the Aberth dominant root");

    // Multiplicity from the Yun factorization of chi.
    auto yun = square_free_factorization(chi);
    for (size_t i = 1; i < yun.size(); ++i) {
        const Poly& f = yun[i];
        if (f.degree() < 1)
            continue;
        if (f(enc.lo) == 0 || f(enc.hi) == 0 || sturm_count(f, enc.lo, enc.hi) > 0)
            throw Unsupported(Unsupported::Kind::RepeatedRoot,
                              "dominant root has multiplicity " + std::to_string(i + 1));
    }
    return {sf, enc};
}

BigFloat gen_binom(const BigFloat& top, int t, int prec) {
    BigFloat acc(1L, prec);
    for (int u = 0; u < t; ++u)
        acc = acc * (top - BigFloat(static_cast<long>(u), prec)) / BigFloat(static_cast<long>(u + 1), prec);
    return acc;
}

struct Expansion {
    BigFloat lambda;
    BigFloat r;
    std::optional<Rational> r_exact;
    std::vector<BigFloat> b;
};

Expansion expand_at(const Recurrence& rec, const Poly& sf, int M, int prec, RootEnclosure* enc_out) {
    const int D = rec.degree();
    const int d = rec.order();
    RootEnclosure enc = isolate_root(sf, RootSelector::largest_real(), prec + 16);
    if (enc_out)
        *enc_out = enc;
    const BigFloat lam = enclosure_value(enc, prec);

    std::vector<BigFloat> lam_pow;
    lam_pow.emplace_back(1L, prec);
    for (int i = 1; i <= d; ++i)
        lam_pow.push_back(lam_pow.back() * lam);
    auto p = [&](int i, int j) { return BigFloat(rec.coeffs[static_cast<size_t>(i)].coeff(j), prec); };

    BigFloat lchi(prec), rnum(prec);
    for (int i = 0; i <= d; ++i) {
        lchi += BigFloat(static_cast<long>(i), prec) * lam_pow[static_cast<size_t>(i)] * p(i, D);
        if (D >= 1)
            rnum -= lam_pow[static_cast<size_t>(i)] * p(i, D - 1);
    }
    if (lchi.is_zero())
        throw Unsupported(Unsupported::Kind::RepeatedRoot, "characteristic derivative vanishes at the dominant root");

    Expansion out{lam, rnum / lchi, std::nullopt, {}};
    out.r_exact = rational_reconstruct(out.r, 64, two_pow(-(prec / 3), prec));
    const BigFloat r = out.r_exact ? BigFloat(*out.r_exact, prec) : out.r;
    if (out.r_exact)
        out.r = r;

    std::vector<BigFloat> b{BigFloat(1L, prec)};
    for (int K = 2; K <= M + 1; ++K) {
        BigFloat S(prec);
        for (int s = 0; s <= K - 2; ++s)
            for (int j = 0; j <= D; ++j) {
                const int t = K - s - (D - j);
                if (t < 0)
                    continue;
                const BigFloat bin = gen_binom(r - BigFloat(static_cast<long>(s), prec), t, prec);
                for (int i = 0; i <= d; ++i) {
                    const Rational& pij = rec.coeffs[static_cast<size_t>(i)].coeff(j);
                    if (pij == 0 || (i == 0 && t > 0))
                        continue;
                    S += lam_pow[static_cast<size_t>(i)] * BigFloat(pij, prec) * b[static_cast<size_t>(s)] * bin *
                         pow(BigFloat(static_cast<long>(i), prec), static_cast<long>(t));
                }
            }
        b.push_back(S / (BigFloat(static_cast<long>(K - 1), prec) * lchi));
    }
    out.b.assign(b.begin() + 1, b.end());
    return out;
}

} // namespace

AsymptoticForm expand_asymptotics(const Recurrence& rec, const AsymConfig& cfg) {
    if (cfg.M < 0)
        throw InvalidInput("truncation order must be nonnegative");
    AsymptoticForm form;
    form.char_poly = char_poly(rec);
    const Dominant dom = dominant_root(form.char_poly, cfg.precision);

    std::optional<Rational> r_exact;
    bool r_consistent = true;
    RootEnclosure enc = dom.enclosure;
    auto run = [&](int prec) {
        Expansion e = expand_at(rec, dom.factor, cfg.M, prec, &enc);
        if (prec > cfg.precision && e.r_exact != r_exact)
            r_consistent = false;
        r_exact = e.r_exact;
        std::vector<BigFloat> v{e.lambda, e.r};
        for (auto& x : e.b)
            v.push_back(x);
        return v;
    };
    PairedConfig pc{cfg.precision, cfg.target_digits, cfg.precision_cap};
    PairedResult res = paired_compute(run, pc);

    form.lambda_enclosure = enc;
    form.lambda = res.values[0];
    form.r = res.values[1];
    form.r_exact = r_consistent ? r_exact : std::nullopt;
    form.b.assign(res.values.begin() + 2, res.values.end());
    form.M = cfg.M;
    form.agreed_digits = res.agreed_digits;
    form.precision = res.precision;
    return form;
}

ResidualCheck residual_check(const Recurrence& rec, const AsymptoticForm& form, const std::vector<long>& points) {
    const int prec = std::max(form.precision * 2, 256);
    ResidualCheck out;
    out.points = points;
    const BigFloat lam = form.lambda.with_precision(prec);
    const BigFloat r = form.r_exact ? BigFloat(*form.r_exact, prec) : form.r.with_precision(prec);
    // c^(n+i) / (lambda^n n^r) = lambda^i (1+i/n)^r (1 + sum_s b_s (n+i)^-s)
    auto scaled = [&](long n, int i) {
        BigFloat nn(n, prec), ni(n + i, prec);
        BigFloat series(1L, prec);
        BigFloat inv(1L, prec);
        for (const auto& bs : form.b) {
            inv = inv / ni;
            series += bs.with_precision(prec) * inv;
        }
        return pow(lam, static_cast<long>(i)) * pow(ni / nn, r) * series;
    };
    for (long n : points) {
        BigFloat sum(prec);
        const Rational at(n);
        for (int i = 0; i <= rec.order(); ++i)
            sum += BigFloat(rec.coeffs[static_cast<size_t>(i)](at), prec) * scaled(n, i);
        BigFloat denom = abs(BigFloat(rec.coeffs.back()(at), prec) * scaled(n, rec.order()));
        out.residuals.push_back((abs(sum) / denom).to_double());
    }
    const double noise = std::ldexp(1.0, -prec / 2);
    const bool exact = std::all_of(out.residuals.begin(), out.residuals.end(), [&](double x) { return x < noise; });
    if (!exact && points.size() >= 2 && out.residuals.front() > 0 && out.residuals.back() > 0) {
        out.slope = std::log(out.residuals.back() / out.residuals.front()) /
                    std::log(static_cast<double>(points.back()) / static_cast<double>(points.front()));
        out.ok = out.slope <= -(form.M + 0.5);
    } else {
        // The ansatz is exact up to rounding.
        out.slope = -INFINITY;
        out.ok = true;
    }
    return out;
}

} // namespace holonorm
