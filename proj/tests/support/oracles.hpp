#pragma once

// Reference computations for the tests.  Nothing here calls into the library
// algorithms being checked: determinants and ranks are fraction-free
// (Bareiss), the Pfaffian is a sum over perfect matchings, and forms are kept
// as dense maps keyed by sorted index vectors.

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "logsym/logform.hpp"
#include "logsym/model.hpp"
#include "logsym/skew_matrix.hpp"

namespace logsym {
// readable failure messages under gtest
inline void PrintTo(const LogForm& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const ExponentVector& e, std::ostream* os) { *os << to_string(e); }
}  // namespace logsym

namespace oracle {

using Q = mpq_class;
using Grid = std::vector<std::vector<Q>>;

inline Grid to_grid(const logsym::RationalMatrix& m) {
    Grid g(m.rows(), std::vector<Q>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
    return g;
}

// Scale every row to integers, then run Bareiss elimination with row pivoting.
// The determinant is undone by the row scales.
struct BareissResult {
    std::size_t rank = 0;
    Q det;
};

inline BareissResult bareiss(Grid g) {
    const std::size_t rows = g.size();
    const std::size_t cols = rows ? g[0].size() : 0;
    Q scale = 1;
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (const auto& q : g[r]) l = lcm(l, mpz_class(q.get_den()));
        for (std::size_t c = 0; c < cols; ++c) {
            Q v = g[r][c] * l;
            a[r][c] = v.get_num();
        }
        scale *= Q(l);
    }
    mpz_class prev = 1;
    int sign = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != rank) {
            std::swap(a[p], a[rank]);
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    BareissResult out;
    out.rank = rank;
    if (rows == cols) out.det = rank == rows ? Q(sign * prev) / scale : Q(0);
    return out;
}

inline Q det(const Grid& g) { return g.empty() ? Q(1) : bareiss(g).det; }
inline std::size_t rank(const Grid& g) { return g.empty() ? 0 : bareiss(g).rank; }

// Pf(B) = sum over perfect matchings of sign * prod b_{i j}.
inline Q pfaffian(const Grid& b) {
    const std::size_t n = b.size();
    if (n % 2) return 0;
    Q total = 0;
    std::vector<int> used(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    auto rec = [&](auto&& self) -> void {
        std::size_t first = 0;
        while (first < n && used[first]) ++first;
        if (first == n) {
            // sign of the permutation (i1 j1 i2 j2 ...)
            std::vector<std::size_t> perm;
            for (auto [i, j] : pairs) {
                perm.push_back(i);
                perm.push_back(j);
            }
            int inversions = 0;
            for (std::size_t x = 0; x < perm.size(); ++x)
                for (std::size_t y = x + 1; y < perm.size(); ++y) inversions += perm[x] > perm[y];
            Q prod = inversions % 2 ? -1 : 1;
            for (auto [i, j] : pairs) prod *= b[i][j];
            total += prod;
            return;
        }
        used[first] = 1;
        for (std::size_t k = first + 1; k < n; ++k) {
            if (used[k]) continue;
            used[k] = 1;
            pairs.emplace_back(first, k);
            self(self);
            pairs.pop_back();
            used[k] = 0;
        }
        used[first] = 0;
    };
    rec(rec);
    return total;
}

// Dense forms: (exponents, sorted indices) -> coefficient.
using Key = std::pair<std::vector<int>, std::vector<std::size_t>>;
using Dense = std::map<Key, Q>;

inline Dense to_dense(const logsym::LogForm& f) {
    Dense out;
    for (const auto& t : f.terms()) {
        std::vector<int> e(t.exp.entries().begin(), t.exp.entries().end());
        out[{e, t.idx.indices()}] += t.coeff;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// d(z^a eta_I) = sum_k a_k z^a eta_k ^ eta_I; moving eta_k past the members of I below k.
inline Dense d(const Dense& f) {
    Dense out;
    for (const auto& [key, c] : f) {
        const auto& [a, idx] = key;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] == 0 || std::find(idx.begin(), idx.end(), k) != idx.end()) continue;
            std::size_t below = 0;
            for (auto i : idx) below += i < k;
            auto merged = idx;
            merged.insert(merged.begin() + static_cast<std::ptrdiff_t>(below), k);
            out[{a, merged}] += (below % 2 ? -1 : 1) * a[k] * c;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// Closedness of z^(a - e_i - e_j) rho_i ^ rho_j for m = N: d of it is
// gamma ^ rho_i ^ rho_j, whose coefficients are the 3x3 minors of the rows
// (a - e_i - e_j, b_i, b_j).  Rows b_i, b_j are independent, so closed iff rank <= 2.
inline bool closed_by_minors(const logsym::Model& m, std::size_t i, std::size_t j, const std::vector<int>& a) {
    const std::size_t n = m.dim();
    Grid g(3, std::vector<Q>(n));
    for (std::size_t k = 0; k < n; ++k) {
        g[0][k] = a[k] - (k == i ? 1 : 0) - (k == j ? 1 : 0);
        g[1][k] = m.b(i, k);
        g[2][k] = m.b(j, k);
    }
    return rank(g) <= 2;
}

// Exactness for m = N by a rank test on eta_p ^ eta_q coefficients:
//   gamma_c ^ rho_k  ->  c_p b_kq - c_q b_kp,   rho_i ^ rho_j -> b_ip b_jq - b_iq b_jp,
// over the admissible k (c + e_k >= 0).
inline bool exact_by_rank(const logsym::Model& m, std::size_t i, std::size_t j, const std::vector<int>& a) {
    const std::size_t n = m.dim();
    std::vector<int> c(a);
    c[i] -= 1;
    c[j] -= 1;
    std::vector<std::size_t> dirs;
    for (std::size_t k = 0; k < n; ++k) {
        bool ok = true;
        for (std::size_t l = 0; l < n; ++l) ok = ok && c[l] + (l == k ? 1 : 0) >= 0;
        if (ok) dirs.push_back(k);
    }
    Grid sys, aug;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            std::vector<Q> row;
            for (auto k : dirs) row.push_back(c[p] * m.b(k, q) - c[q] * m.b(k, p));
            auto row_aug = row;
            row_aug.push_back(m.b(i, p) * m.b(j, q) - m.b(i, q) * m.b(j, p));
            sys.push_back(std::move(row));
            aug.push_back(std::move(row_aug));
        }
    const std::size_t r = dirs.empty() ? 0 : rank(sys);
    return r == rank(aug);
}

// ------------------------------------------------------------ generators

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Q rational(int range = 5, int max_den = 4) {
        Q q(integer(-range, range), integer(1, max_den));
        q.canonicalize();
        return q;
    }
    Q nonzero_rational(int range = 5, int max_den = 4) {
        Q q;
        do q = rational(range, max_den);
        while (q == 0);
        return q;
    }

    logsym::RationalMatrix skew(std::size_t n, int range = 5, int max_den = 3) {
        logsym::RationalMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) {
                m(r, c) = coin(0.7) ? Q(integer(-range, range)) : rational(range, max_den);
                m(c, r) = -m(r, c);
            }
        return m;
    }

    logsym::RationalMatrix square(std::size_t n, int range = 5) {
        logsym::RationalMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) = rational(range, 3);
            }
        return m;
    }

    /// Random Model with m = N and Pf != 0.
    logsym::Model model(std::size_t n, std::size_t m, int range = 5, int max_den = 3) {
        for (;;) {
            auto b = logsym::complete_skew(skew(n, range, max_den));
            if (pfaffian(to_grid(b.matrix())) != 0) return logsym::Model::create(b, m);
        }
    }

    /// Random model in which the pair {i, j} has every triple ratio equal to a
    /// prescribed natural number (a planted special pair).
    logsym::Model planted_special(std::size_t n, std::size_t i, std::size_t j, int max_ratio = 3, int range = 5,
                                  int max_den = 3) {
        for (;;) {
            auto m = skew(n, range, max_den);
            Q c = nonzero_rational(4, 2);
            m(i, j) = c;
            m(j, i) = -c;
            for (std::size_t l = 0; l < n; ++l) {
                if (l == i || l == j) continue;
                // b_jl + b_li = r c  =>  b_jl = r c + b_il
                Q r = integer(0, max_ratio);
                Q bjl = r * c + m(i, l);
                m(j, l) = bjl;
                m(l, j) = -bjl;
            }
            auto b = logsym::complete_skew(m);
            if (pfaffian(to_grid(b.matrix())) != 0) return logsym::Model::create(b, n);
        }
    }

    logsym::ExponentVector exponent(std::size_t n, int lo, int hi) {
        std::vector<int> e(n);
        for (auto& v : e) v = integer(lo, hi);
        return logsym::ExponentVector(std::move(e));
    }

    logsym::IndexSet index_set(std::size_t n) {
        return logsym::IndexSet::from_mask(static_cast<std::uint32_t>(integer(0, (1 << n) - 1)));
    }

    /// Sum of up to `terms` random monomials (not necessarily homogeneous).
    logsym::LogForm form(std::size_t n, std::size_t terms, int lo = -2, int hi = 3) {
        std::vector<logsym::LogTerm> raw;
        const auto count = static_cast<std::size_t>(integer(0, static_cast<int>(terms)));
        for (std::size_t k = 0; k < count; ++k) {
            Q c = rational(5, 3);
            raw.push_back({c, exponent(n, lo, hi), index_set(n)});
        }
        return logsym::normalize(n, raw);
    }

    /// Random terms with repetitions and zeros, for normalization tests.
    std::vector<logsym::LogTerm> raw_terms(std::size_t n, std::size_t count) {
        std::vector<logsym::LogTerm> raw;
        for (std::size_t k = 0; k < count; ++k) {
            Q c = integer(-2, 2);
            raw.push_back({c, exponent(n, 0, 1), index_set(n)});
        }
        return raw;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
