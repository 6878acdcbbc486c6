#pragma once

#include "holonorm/errors.hpp"
#include "holonorm/exact/nullspace.hpp"
#include "holonorm/ore/coefficient_field.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace holonorm {

/// Skew polynomial sum_i c_i(n) S^i in the shift operator, S c(n) = c(n+1) S.
/// The last stored coefficient is nonzero; the zero operator stores nothing and has order -1.
template <class K>
class OrePoly {
public:
    using Field = CoefficientField<K>;
    using Ring = typename Field::Ring;

    OrePoly() = default;
    explicit OrePoly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static OrePoly scalar(K c) { return OrePoly(std::vector<K>{std::move(c)}); }
    static OrePoly shift_power(int k) {
        std::vector<K> v(static_cast<size_t>(k) + 1, K());
        v.back() = K(Rational(1));
        return OrePoly(std::move(v));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<K>& coeffs() const { return coeffs_; }
    K coeff(int i) const { return i >= 0 && i <= order() ? coeffs_[static_cast<size_t>(i)] : K(); }

    OrePoly& operator+=(const OrePoly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size())
            coeffs_.resize(rhs.coeffs_.size(), K());
        for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
            coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }
    OrePoly& operator-=(const OrePoly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size())
            coeffs_.resize(rhs.coeffs_.size(), K());
        for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
            coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }
    friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
    friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }

    /// Composition under the commutation rule S p(n) = p(n+1) S.
    friend OrePoly operator*(const OrePoly& a, const OrePoly& b) {
        if (a.is_zero() || b.is_zero())
            return OrePoly();
        std::vector<K> v(a.coeffs_.size() + b.coeffs_.size() - 1, K());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j].shifted(static_cast<long>(i));
        }
        return OrePoly(std::move(v));
    }

    /// Left multiplication by a scalar of K.
    friend OrePoly operator*(const K& c, const OrePoly& a) {
        std::vector<K> v = a.coeffs_;
        for (auto& x : v)
            x = c * x;
        return OrePoly(std::move(v));
    }

    /// Mathematical equality (coefficient differences vanish).
    bool equals(const OrePoly& other) const { return (*this - other).is_zero(); }

    /// Coefficients as ring elements after left multiplication by a common denominator `scale`:
    /// result[i] = scale * c_i.
    std::vector<Ring> cleared(Ring* scale_out = nullptr) const {
        Ring common = Field::one();
        for (const auto& c : coeffs_)
            common = Field::common_multiple(common, Field::denominator(c));
        std::vector<Ring> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_)
            out.push_back(Field::exact_quotient(Field::numerator(c) * common, Field::denominator(c)));
        if (scale_out)
            *scale_out = common;
        return out;
    }

    /// Cleared-denominator polynomial form with integer content 1 and positive leading sign
    /// (sign of the leading term of the top coefficient). `factor` receives s with result = s * this.
    OrePoly normalized(K* factor = nullptr) const {
        if (is_zero()) {
            if (factor)
                *factor = K(Rational(1));
            return *this;
        }
        Ring common;
        std::vector<Ring> ring = cleared(&common);
        std::vector<Rational> all;
        for (const auto& r : ring)
            for (auto& c : Field::ring_coeffs(r))
                all.push_back(c);
        Rational content(numerator_gcd(all), denominator_lcm(all));
        content.canonicalize();
        if (Field::leading_coeff(ring.back()) < 0)
            content = -content;
        std::vector<K> v;
        v.reserve(ring.size());
        for (const auto& r : ring)
            v.push_back(Field::from_ring(Field::scale(r, 1 / content)));
        if (factor)
            *factor = Field::from_ring(Field::scale(common, 1 / content));
        return OrePoly(std::move(v));
    }

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string out;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero())
                continue;
            if (!out.empty())
                out += " + ";
            out += "(" + coeffs_[i].to_string() + ") * S^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }
    std::vector<K> coeffs_;
};

using RecurrenceOperator = OrePoly<RatFunc>;
using XOperator = OrePoly<BiFrac>;

/// Term accessor n -> t(n).
using TermFn = std::function<Rational(long)>;

/// Raised when a coefficient has a pole at the evaluation index.
class PoleError : public Error {
public:
    PoleError(long index, const std::string& what) : Error(what), index_(index) {}
    long index() const { return index_; }

private:
    long index_;
};

/// n -> sum_i c_i(n) t(n+i), exact.
TermFn ore_apply(const RecurrenceOperator& op, TermFn terms);

/// Residuals for every window that fits in `terms` (terms[0] is index `first`):
/// result[j] is the value at n = first + j.
std::vector<Rational> ore_apply(const RecurrenceOperator& op, std::span<const Rational> terms, long first = 0);

/// Substitutes a value for x in every coefficient.
RecurrenceOperator at_x(const XOperator& op, const Rational& x);

/// Coefficient-wise partial derivative in x.
XOperator derivative_x(const XOperator& op);

template <class K>
struct LclmResult {
    OrePoly<K> lclm; // M
    OrePoly<K> u;    // M = u * L1
    OrePoly<K> v;    // M = v * L2
};

/// Least common left multiple by the ascending linear ansatz: for m = max(d1, d2), ..., d1 + d2,
/// solve U L1 = V L2 with ord U = m - d1, ord V = m - d2 via fraction-free nullspace over the
/// coefficient ring. Returns M normalized, with U and V scaled consistently.
template <class K>
LclmResult<K> lclm(const OrePoly<K>& l1, const OrePoly<K>& l2) {
    using Field = CoefficientField<K>;
    using Ring = typename Field::Ring;
    if (l1.is_zero() || l2.is_zero())
        throw InvalidInput("lclm of a zero operator");

    Ring c1, c2;
    const std::vector<Ring> a = l1.cleared(&c1);
    const std::vector<Ring> b = l2.cleared(&c2);
    const int d1 = l1.order(), d2 = l2.order();

    for (int m = std::max(d1, d2); m <= d1 + d2; ++m) {
        const int nu = m - d1 + 1, nv = m - d2 + 1;
        Matrix<Ring> sys(static_cast<size_t>(m + 1), static_cast<size_t>(nu + nv));
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j <= d1; ++j)
                sys(static_cast<size_t>(i + j), static_cast<size_t>(i)) = Field::shift(a[static_cast<size_t>(j)], i);
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j <= d2; ++j)
                sys(static_cast<size_t>(i + j), static_cast<size_t>(nu + i)) =
                    Ring() - Field::shift(b[static_cast<size_t>(j)], i);

        auto basis = nullspace_ring(std::move(sys));
        if (basis.empty())
            continue;

        std::optional<LclmResult<K>> best;
        int best_degree = 0;
        for (const auto& vec : basis) {
            std::vector<K> uc, vc;
            for (int i = 0; i < nu; ++i)
                uc.push_back(Field::from_ring(vec[static_cast<size_t>(i)]));
            for (int i = 0; i < nv; ++i)
                vc.push_back(Field::from_ring(vec[static_cast<size_t>(nu + i)]));
            // The ring system used c1*L1 and c2*L2; fold the scalars into U and V.
            OrePoly<K> u = OrePoly<K>(std::move(uc)) * OrePoly<K>::scalar(Field::from_ring(c1));
            OrePoly<K> v = OrePoly<K>(std::move(vc)) * OrePoly<K>::scalar(Field::from_ring(c2));
            if (u.is_zero())
                continue;
            OrePoly<K> mop = u * l1;
            K s;
            OrePoly<K> normalized = mop.normalized(&s);
            int deg = Field::total_degree(Field::numerator(normalized.coeffs().back()));
            if (!best || deg < best_degree) {
                best = LclmResult<K>{normalized, s * u, s * v};
                best_degree = deg;
            }
        }
        if (best)
            return *best;
    }
    throw Error("lclm ansatz failed up to order d1 + d2");
}

/// Given L1 annihilating f_n(x), returns V L1 (normalized) annihilating f_n'(x), where
/// L2 = dL1/dx and U L1 = V L2 is their lclm. Returns L1 normalized when L2 = 0.
XOperator derivative_closure(const XOperator& l1);

} // namespace holonorm
