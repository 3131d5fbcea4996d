/*
   Copyright 2026 The gadyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "gadyn/linalg.hpp"

#include <algorithm>

#include "gadyn/error.hpp"

namespace gadyn {

namespace {

using PolyRows = std::vector<std::vector<CPoly>>;

void remove_content(std::vector<CPoly>& row) {
    CPoly g;
    for (const auto& x : row) {
        if (x.is_zero()) continue;
        g = g.field() ? gcd(g, x) : x.monic();
        if (g.is_one()) return;
    }
    if (!g.field() || g.is_one()) return;
    for (auto& x : row)
        if (!x.is_zero()) x = x / g;
}

/// Clears denominators row by row; zero rows are dropped.
PolyRows clear_rows(const RatMatrix& M) {
    PolyRows rows;
    Field f = M.zero().field();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        CPoly L = CPoly::constant(f, 1);
        bool nonzero = false;
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (M(i, j).is_zero()) continue;
            nonzero = true;
            if (!M(i, j).den().is_one()) L = lcm(L, M(i, j).den());
        }
        if (!nonzero) continue;
        std::vector<CPoly> row(M.cols(), CPoly(f));
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!M(i, j).is_zero()) row[j] = M(i, j).num() * (L / M(i, j).den());
        remove_content(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Fraction-free Gauss-Jordan; returns the pivot column of each leading row.
std::vector<std::size_t> reduce(PolyRows& A, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < A.size(); ++c) {
        std::size_t best = A.size();
        for (std::size_t r = pr; r < A.size(); ++r)
            if (!A[r][c].is_zero() && (best == A.size() || A[r][c].degree() < A[best][c].degree())) best = r;
        if (best == A.size()) continue;
        std::swap(A[pr], A[best]);
        for (std::size_t r = 0; r < A.size(); ++r) {
            if (r == pr || A[r][c].is_zero()) continue;
            const CPoly g = gcd(A[pr][c], A[r][c]);
            const CPoly a = A[pr][c] / g, b = A[r][c] / g;
            for (std::size_t j = 0; j < cols; ++j) {
                if (A[pr][j].is_zero() && A[r][j].is_zero()) continue;
                A[r][j] = a * A[r][j] - b * A[pr][j];
            }
            remove_content(A[r]);
        }
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

}  // namespace

RatMatrix rat_zero(Field f, std::size_t r, std::size_t c) { return RatMatrix(r, c, RatFun(f)); }

RatMatrix rat_identity(Field f, std::size_t n) { return RatMatrix::identity(n, RatFun(f), RatFun::constant(f, 1)); }

std::vector<RatVector> kernel_basis(const RatMatrix& M) {
    Field f = M.zero().field();
    PolyRows A = clear_rows(M);
    const auto pivots = reduce(A, M.cols());
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVector> out;
    for (std::size_t fc = 0; fc < M.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        // v[fc] = L, v[pc_i] = -A[i][fc] * L / A[i][pc_i] with L the lcm of the pivots involved
        CPoly L = CPoly::constant(f, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (!A[i][fc].is_zero()) L = lcm(L, A[i][pivots[i]]);
        std::vector<CPoly> v(M.cols(), CPoly(f));
        v[fc] = L;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (!A[i][fc].is_zero()) v[pivots[i]] = -(A[i][fc] * (L / A[i][pivots[i]]));
        remove_content(v);
        RatVector rv;
        rv.reserve(v.size());
        for (auto& x : v) rv.emplace_back(x);
        out.push_back(std::move(rv));
    }
    return out;
}

std::size_t rank(const RatMatrix& M) {
    PolyRows A = clear_rows(M);
    return reduce(A, M.cols()).size();
}

CPoly determinant(const PolyMatrix& M) {
    require(M.rows() == M.cols(), "determinant of a non-square matrix");
    const std::size_t n = M.rows();
    Field f = M.zero().field();
    if (n == 0) return CPoly::constant(f, 1);
    PolyRows A(n, std::vector<CPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A[i][j] = M(i, j);
    bool negate = false;
    CPoly prev = CPoly::constant(f, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k].is_zero()) {
            std::size_t i = k + 1;
            while (i < n && A[i][k].is_zero()) ++i;
            if (i == n) return CPoly(f);
            std::swap(A[k], A[i]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
            A[i][k] = CPoly(f);
        }
        prev = A[k][k];
    }
    return negate ? -A[n - 1][n - 1] : A[n - 1][n - 1];
}

std::vector<CPoly> adjugate_row(const PolyMatrix& M, std::size_t i) {
    const std::size_t n = M.rows();
    require(n == M.cols() && i < n, "adjugate of a non-square matrix");
    Field f = M.zero().field();
    std::vector<CPoly> out(n, CPoly(f));
    for (std::size_t k = 0; k < n; ++k) {
        PolyMatrix minor(n - 1, n - 1, CPoly(f));
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
            if (r == k) continue;
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == i) continue;
                minor(rr, cc++) = M(r, c);
            }
            ++rr;
        }
        CPoly d = determinant(minor);
        out[k] = ((i + k) % 2) ? -d : d;
    }
    return out;
}

std::vector<RatFun> charpoly(const RatMatrix& M) {
    require(M.rows() == M.cols(), "characteristic polynomial of a non-square matrix");
    const std::size_t n = M.rows();
    Field f = M.zero().field();
    RatMatrix H = M;
    // similarity reduction to upper Hessenberg form
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && H(i, m - 1).is_zero()) ++i;
        if (i == n) continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(H(i, j), H(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(H(j, i), H(j, m));
        }
        const RatFun t = H(m, m - 1);
        for (std::size_t r = m + 1; r < n; ++r) {
            if (H(r, m - 1).is_zero()) continue;
            const RatFun u = H(r, m - 1) / t;
            for (std::size_t j = 0; j < n; ++j) H(r, j) -= u * H(m, j);
            for (std::size_t j = 0; j < n; ++j) H(j, m) += u * H(j, r);
        }
    }
    using Poly = std::vector<RatFun>;
    auto axpy = [&](Poly& acc, const RatFun& c, const Poly& p, std::size_t shift) {
        if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, RatFun(f));
        for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += c * p[k];
    };
    std::vector<Poly> P(n + 1);
    P[0] = {RatFun::constant(f, 1)};
    for (std::size_t m = 1; m <= n; ++m) {
        Poly pm;
        axpy(pm, RatFun::constant(f, 1), P[m - 1], 1);
        axpy(pm, -H(m - 1, m - 1), P[m - 1], 0);
        RatFun t = RatFun::constant(f, 1);
        for (std::size_t i = 1; i < m; ++i) {
            t *= H(m - i, m - i - 1);
            if (t.is_zero()) break;
            axpy(pm, -(t * H(m - i - 1, m - 1)), P[m - i - 1], 0);
        }
        P[m] = std::move(pm);
    }
    return P[n];
}

std::size_t rank(Field f, ElemMatrix M) {
    std::size_t r = 0;
    const std::size_t cols = M.empty() ? 0 : M[0].size();
    for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
        std::size_t i = r;
        while (i < M.size() && M[i][c] == 0) ++i;
        if (i == M.size()) continue;
        std::swap(M[r], M[i]);
        const Elem inv = f->inv(M[r][c]);
        for (std::size_t k = r + 1; k < M.size(); ++k) {
            if (M[k][c] == 0) continue;
            const Elem u = f->mul(M[k][c], inv);
            for (std::size_t j = c; j < cols; ++j)
                if (M[r][j]) M[k][j] = f->sub(M[k][j], f->mul(u, M[r][j]));
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<Elem>> kernel_basis(Field f, ElemMatrix M) {
    const std::size_t cols = M.empty() ? 0 : M[0].size();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
        std::size_t i = r;
        while (i < M.size() && M[i][c] == 0) ++i;
        if (i == M.size()) continue;
        std::swap(M[r], M[i]);
        const Elem inv = f->inv(M[r][c]);
        for (std::size_t j = c; j < cols; ++j) M[r][j] = f->mul(M[r][j], inv);
        for (std::size_t k = 0; k < M.size(); ++k) {
            if (k == r || M[k][c] == 0) continue;
            const Elem u = M[k][c];
            for (std::size_t j = c; j < cols; ++j)
                if (M[r][j]) M[k][j] = f->sub(M[k][j], f->mul(u, M[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> out;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Elem> v(cols, 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f->neg(M[i][fc]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace gadyn
