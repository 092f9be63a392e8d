#ifndef ULTRAFIX_TESTS_ORACLES_HPP
#define ULTRAFIX_TESTS_ORACLES_HPP

// Independent reference computations. None of these call into the library
// code they are used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle
{

using Q = boost::multiprecision::cpp_rational;

// Order relation on k radii given as leq[i][j], zero at index z.
struct Poset {
    std::vector<std::vector<bool>> leq;
    std::size_t zero = 0;
};

inline Poset chain(std::size_t k)
{
    Poset p;
    p.leq.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            p.leq[i][j] = true;
        }
    }
    return p;
}

// Elements 0, a, b, 1 with a, b incomparable.
inline Poset diamond()
{
    Poset p = chain(4);
    p.leq[1][2] = false;
    return p;
}

// Elements 0, a, b, c with a < b, a < c, b and c incomparable.
inline Poset fork()
{
    Poset p;
    p.leq = {{true, true, true, true}, {false, true, true, true}, {false, false, true, false},
             {false, false, false, true}};
    return p;
}

using Matrix = std::vector<std::vector<std::size_t>>;

inline bool is_ultrametric(const Matrix &d, const Poset &p)
{
    const auto n = d.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if ((d[x][y] == p.zero) != (x == y) || d[x][y] != d[y][x]) {
                return false;
            }
            for (std::size_t z = 0; z < n; ++z) {
                for (std::size_t g = 0; g < p.leq.size(); ++g) {
                    if (p.leq[d[x][y]][g] && p.leq[d[y][z]][g] && !p.leq[d[x][z]][g]) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// Lexicographically least flattened matrix over all relabelings.
inline std::vector<std::size_t> canonical(const Matrix &d)
{
    const auto n = d.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::size_t> best;
    do {
        std::vector<std::size_t> flat;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                flat.push_back(d[perm[i]][perm[j]]);
            }
        }
        if (best.empty() || flat < best) {
            best = flat;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All ultrametric tables on n points up to relabeling, by brute force over
// every assignment of nonzero radii to the pairs.
inline std::set<std::vector<std::size_t>> ultrametric_classes(std::size_t n, const Poset &p)
{
    std::vector<std::size_t> nonzero;
    for (std::size_t g = 0; g < p.leq.size(); ++g) {
        if (g != p.zero) {
            nonzero.push_back(g);
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    std::set<std::vector<std::size_t>> out;
    std::vector<std::size_t> choice(pairs.size(), 0);
    while (true) {
        Matrix d(n, std::vector<std::size_t>(n, p.zero));
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            d[pairs[k].first][pairs[k].second] = d[pairs[k].second][pairs[k].first] = nonzero[choice[k]];
        }
        if (is_ultrametric(d, p)) {
            out.insert(canonical(d));
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == nonzero.size()) {
            choice[k++] = 0;
        }
        if (k == choice.size()) {
            break;
        }
    }
    return out;
}

// Self-maps f with d(f x, f y) < d(x, y) for all x != y.
inline std::vector<std::vector<std::size_t>> contracting_maps(const Matrix &d, const Poset &p)
{
    const auto n = d.size();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> f(n, 0);
    while (true) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
            for (std::size_t y = 0; y < n && ok; ++y) {
                if (x != y) {
                    const auto a = d[f[x]][f[y]];
                    const auto b = d[x][y];
                    ok = a != b && p.leq[a][b];
                }
            }
        }
        if (ok) {
            out.push_back(f);
        }
        std::size_t k = 0;
        while (k < n && ++f[k] == n) {
            f[k++] = 0;
        }
        if (k == n) {
            break;
        }
    }
    return out;
}

// Roots of sum c_k x^k in [0, m), by trying every residue.
inline std::vector<std::uint64_t> roots_mod(const std::vector<std::int64_t> &coeffs, std::uint64_t m)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < m; ++x) {
        boost::multiprecision::cpp_int acc = 0;
        boost::multiprecision::cpp_int power = 1;
        for (auto c : coeffs) {
            acc += power * c;
            power *= x;
        }
        acc %= m;
        if (acc == 0) {
            out.push_back(x);
        }
    }
    return out;
}

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m)
{
    for (std::uint64_t x = 1; x < m; ++x) {
        if ((a % m) * x % m == 1) {
            return x;
        }
    }
    return 0;
}

// Exponent of p in v (v != 0).
inline unsigned valuation(std::uint64_t v, std::uint64_t p)
{
    unsigned k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

inline std::vector<Q> exp_coefficients(std::size_t n)
{
    std::vector<Q> out;
    Q c = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            c /= static_cast<long>(k);
        }
        out.push_back(c);
    }
    return out;
}

// (k+1) c_{k+1} == c_k for k + 1 < size: the t^k coefficient of y' - y.
inline bool solves_y_prime_eq_y(const std::vector<Q> &c)
{
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        if (Q(static_cast<long>(k + 1)) * c[k + 1] != c[k]) {
            return false;
        }
    }
    return true;
}

// The t^k coefficient of y' - y^2 vanishes for k + 1 < size.
inline bool solves_y_prime_eq_y_squared(const std::vector<Q> &c)
{
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        Q sq = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            sq += c[i] * c[k - i];
        }
        if (Q(static_cast<long>(k + 1)) * c[k + 1] != sq) {
            return false;
        }
    }
    return true;
}

} // namespace oracle

#endif
