#pragma once

#include "structure.hpp"

namespace suspension {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Rows and columns follow increasing vertex id.
inline IntegerMatrix intersection_matrix(const DecoratedGraph& g) {
    auto order = g.indices_by_id();
    std::vector<std::size_t> pos(g.size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
    IntegerMatrix m(g.size(), std::vector<Integer>(g.size(), 0));
    for (std::size_t i = 0; i < g.size(); ++i) {
        m[pos[i]][pos[i]] = g.at(i).e;
        for (std::size_t j : g.neighbors(i)) m[pos[i]][pos[j]] = 1;
    }
    return m;
}

inline IntegerMatrix negated(IntegerMatrix m) {
    for (auto& row : m)
        for (auto& x : row) x = -x;
    return m;
}

// Fraction-free elimination with row pivoting.
inline Integer bareiss_determinant(IntegerMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Leading principal minors det(A[0..k, 0..k]) for k = 0..n-1.
inline std::vector<Integer> leading_principal_minors(const IntegerMatrix& m) {
    const std::size_t n = m.size();
    std::vector<Integer> minors;
    IntegerMatrix a = m;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // Pivot breakdown: fall back to independent determinants for the rest.
            minors.push_back(0);
            for (std::size_t r = k + 1; r < n; ++r) {
                IntegerMatrix sub(r + 1, std::vector<Integer>(r + 1));
                for (std::size_t i = 0; i <= r; ++i)
                    for (std::size_t j = 0; j <= r; ++j) sub[i][j] = m[i][j];
                minors.push_back(bareiss_determinant(std::move(sub)));
            }
            return minors;
        }
        minors.push_back(a[k][k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return minors;
}

struct ForestDeterminant {
    Integer value = 1;
    bool positive_definite = true;
};

// det(-I) of the forest induced on `mask` (whole graph when empty), by peeling leaves:
// P(v) = -e_v * prod P(c) - sum_c Q(c) * prod_{c' != c} P(c'), Q(v) = prod P(c).
// -I is positive definite iff every P(v) is positive.
inline ForestDeterminant forest_determinant(const DecoratedGraph& g, const std::vector<char>& mask = {}) {
    auto inside = [&](std::size_t i) { return mask.empty() || mask[i]; };
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    ForestDeterminant result;
    std::vector<std::size_t> parent(g.size(), none);
    std::vector<char> seen(g.size(), 0);
    std::vector<Integer> prod(g.size()), sum(g.size()), P(g.size());
    std::vector<std::size_t> order;
    order.reserve(g.size());
    for (std::size_t root = 0; root < g.size(); ++root) {
        if (seen[root] || !inside(root)) continue;
        order.clear();
        order.push_back(root);
        seen[root] = 1;
        for (std::size_t k = 0; k < order.size(); ++k) {
            std::size_t v = order[k];
            prod[v] = 1;
            sum[v] = 0;
            for (std::size_t w : g.neighbors(v))
                if (inside(w) && !seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    order.push_back(w);
                }
        }
        for (std::size_t k = order.size(); k-- > 0;) {
            std::size_t v = order[k];
            P[v] = -g.at(v).e * prod[v] - sum[v];
            if (P[v] <= 0) result.positive_definite = false;
            if (k == 0) break;
            std::size_t p = parent[v];
            sum[p] = sum[p] * P[v] + prod[v] * prod[p];
            prod[p] *= P[v];
        }
        result.value *= P[root];
    }
    return result;
}

namespace detail {

inline IntegerMatrix negated_submatrix(const DecoratedGraph& g, const std::vector<char>& mask) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (mask.empty() || mask[i]) keep.push_back(i);
    std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) { return g.at(a).id < g.at(b).id; });
    std::vector<std::size_t> pos(g.size(), static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = k;
    IntegerMatrix m(keep.size(), std::vector<Integer>(keep.size(), 0));
    for (std::size_t k = 0; k < keep.size(); ++k) {
        m[k][k] = -g.at(keep[k]).e;
        for (std::size_t j : g.neighbors(keep[k]))
            if (pos[j] != static_cast<std::size_t>(-1)) m[k][pos[j]] = -1;
    }
    return m;
}

inline bool induced_is_forest(const DecoratedGraph& g, const std::vector<char>& mask) {
    if (mask.empty()) return is_forest(g);
    std::size_t v = 0, e = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!mask[i]) continue;
        ++v;
        for (std::size_t j : g.neighbors(i))
            if (mask[j] && i < j) ++e;
    }
    return e + components(g, mask).size() == v;
}

}  // namespace detail

struct DefiniteDeterminant {
    Integer value = 1;
    bool positive_definite = true;
};

inline DefiniteDeterminant definite_determinant(const DecoratedGraph& g, const std::vector<char>& mask = {}) {
    if (detail::induced_is_forest(g, mask)) {
        auto f = forest_determinant(g, mask);
        return {f.value, f.positive_definite};
    }
    auto minors = leading_principal_minors(detail::negated_submatrix(g, mask));
    DefiniteDeterminant d;
    for (const auto& x : minors)
        if (x <= 0) d.positive_definite = false;
    d.value = minors.empty() ? Integer(1) : minors.back();
    return d;
}

// det(-I); the empty graph has determinant 1.
inline Integer determinant(const DecoratedGraph& g) {
    auto d = definite_determinant(g);
    if (!d.positive_definite) throw Error(ErrorCode::NotNegativeDefinite, "intersection form is not negative definite");
    return d.value;
}

// det(-I) of the subgraph induced on `mask`.
inline Integer determinant(const DecoratedGraph& g, const std::vector<char>& mask) {
    auto d = definite_determinant(g, mask);
    if (!d.positive_definite) throw Error(ErrorCode::NotNegativeDefinite, "intersection form is not negative definite");
    return d.value;
}

inline Integer determinant_of(const DecoratedGraph& g, const std::vector<std::size_t>& indices) {
    return determinant(g, mask_of(g, indices));
}

inline bool is_negative_definite(const DecoratedGraph& g) { return definite_determinant(g).positive_definite; }

// Diagonal of the Smith normal form: non-negative, each entry dividing the next,
// zeros last. Length min(rows, cols).
inline std::vector<Integer> smith_invariants(IntegerMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    const std::size_t n = std::min(rows, cols);
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < n; ++t) {
        auto select_pivot = [&]() -> bool {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows) return false;
            std::swap(a[t], a[bi]);
            for (auto& row : a) std::swap(row[t], row[bj]);
            return true;
        };
        if (!select_pivot()) break;
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) dirty = true;
            }
            if (dirty) {
                select_pivot();
                continue;
            }
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        fixed = true;
                    }
            if (!fixed) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    while (diag.size() < n) diag.push_back(0);
    return diag;
}

struct HomologySummary {
    std::vector<Integer> torsion;
    Integer betti = 0;
    friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

// H_1 of the plumbed 3-manifold: coker(I) plus a free part of rank 2g + c.
inline HomologySummary first_homology(const DecoratedGraph& g) {
    HomologySummary h;
    Integer genus = 0;
    for (const auto& v : g.vertices()) genus += v.genus;
    h.betti = 2 * genus + cycle_rank(g);
    for (const auto& d : smith_invariants(intersection_matrix(g))) {
        if (d == 0)
            h.betti += 1;
        else if (d > 1)
            h.torsion.push_back(d);
    }
    return h;
}

inline bool is_rational_homology_sphere(const DecoratedGraph& g) {
    for (const auto& v : g.vertices())
        if (v.genus != 0) return false;
    return cycle_rank(g) == 0 && definite_determinant(g).value != 0;
}

inline bool is_integral_homology_sphere(const DecoratedGraph& g) {
    if (!is_rational_homology_sphere(g)) return false;
    auto d = definite_determinant(g);
    return d.value == 1 || d.value == -1;
}

namespace detail {

inline std::vector<Rational> solve_dense(const DecoratedGraph& g, const std::vector<Integer>& rhs) {
    const std::size_t n = g.size();
    RationalMatrix a(n, std::vector<Rational>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = Rational(-g.at(i).e);
        for (std::size_t j : g.neighbors(i)) a[i][j] = -1;
        a[i][n] = Rational(rhs[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a[r][k] == 0) ++r;
        if (r == n) throw Error(ErrorCode::NotNegativeDefinite, "singular intersection matrix");
        std::swap(a[k], a[r]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

// Solve (-I) m = b on a forest by eliminating leaves towards each root.
inline std::vector<Rational> solve_forest(const DecoratedGraph& g, const std::vector<Integer>& rhs) {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    const std::size_t n = g.size();
    std::vector<Rational> d(n), r(n), m(n);
    std::vector<std::size_t> parent(n, none);
    std::vector<char> seen(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<std::size_t> order{root};
        seen[root] = 1;
        for (std::size_t k = 0; k < order.size(); ++k)
            for (std::size_t w : g.neighbors(order[k]))
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = order[k];
                    order.push_back(w);
                }
        for (std::size_t v : order) {
            d[v] = Rational(-g.at(v).e);
            r[v] = Rational(rhs[v]);
        }
        for (std::size_t k = order.size(); k-- > 1;) {
            std::size_t v = order[k];
            if (d[v] == 0) throw Error(ErrorCode::NotNegativeDefinite, "singular intersection matrix");
            d[parent[v]] -= 1 / d[v];
            r[parent[v]] += r[v] / d[v];
        }
        if (d[root] == 0) throw Error(ErrorCode::NotNegativeDefinite, "singular intersection matrix");
        m[root] = r[root] / d[root];
        for (std::size_t k = 1; k < order.size(); ++k) {
            std::size_t v = order[k];
            m[v] = (r[v] + m[parent[v]]) / d[v];
        }
    }
    return m;
}

}  // namespace detail

// Fills every vertex multiplicity from the arrow multiplicities via I m + m_A = 0.
inline DecoratedGraph solve_multiplicities(const DecoratedGraph& g) {
    if (!is_negative_definite(g)) throw Error(ErrorCode::NotNegativeDefinite, "intersection form is not negative definite");
    std::vector<Integer> rhs(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) rhs[i] = g.arrow_multiplicity_sum(i);
    auto m = is_forest(g) ? detail::solve_forest(g, rhs) : detail::solve_dense(g, rhs);
    DecoratedGraph out = g;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto value = as_integer(m[i]);
        if (!value || *value <= 0)
            throw Error(ErrorCode::NonIntegralSolution,
                        "multiplicity " + to_string(m[i]) + " at vertex " + to_string(g.at(i).id));
        out.set_multiplicity(g.at(i).id, *value);
    }
    return out;
}

// The (w1, w2) entry of I^{-1}: -det(G minus the w1-w2 path) / det(G).
inline Rational inverse_entry(const DecoratedGraph& g, VertexId w1, VertexId w2) {
    require_tree(g);
    auto path = tree_path(g, g.index(w1), g.index(w2));
    std::vector<char> rest(g.size(), 1);
    for (std::size_t i : path) rest[i] = 0;
    return Rational(-determinant(g, rest), determinant(g));
}

// Exact inverse by Gauss-Jordan; used as an independent check.
inline RationalMatrix inverse(const IntegerMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix a(n, std::vector<Rational>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a[r][k] == 0) ++r;
        if (r == n) throw Error(ErrorCode::InvalidInput, "singular matrix");
        std::swap(a[k], a[r]);
        Rational pivot = a[k][k];
        for (auto& x : a[k]) x /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rational f = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

}  // namespace suspension
