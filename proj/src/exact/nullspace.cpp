#include "holonorm/exact/nullspace.hpp"

namespace holonorm {

std::vector<std::vector<Rational>> nullspace_ff(const Matrix<Rational>& m) {
    Matrix<Integer> a(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (size_t j = 0; j < m.cols(); ++j) {
            Rational scaled = m(i, j) * l;
            a(i, j) = scaled.get_num();
        }
    }
    std::vector<std::vector<Rational>> out;
    for (auto& v : nullspace_ring(std::move(a))) {
        Integer g = 0;
        for (const auto& z : v)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        int last_sign = 0;
        for (auto it = v.rbegin(); it != v.rend() && last_sign == 0; ++it)
            last_sign = sgn(*it);
        if (last_sign < 0)
            g = -g;
        std::vector<Rational> q;
        q.reserve(v.size());
        for (const auto& z : v)
            q.emplace_back(Integer(z / g));
        out.push_back(std::move(q));
    }
    return out;
}

} // namespace holonorm
