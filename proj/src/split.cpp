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


#include "gadyn/split.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gadyn/error.hpp"

namespace gadyn {

const char* factor_kind_name(FactorKind k) {
    switch (k) {
        case FactorKind::FrobeniusType: return "frobenius";
        case FactorKind::Independent: return "independent";
        case FactorKind::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

/// k when c = s^k exactly.
std::optional<std::uint64_t> monomial_exponent(const RatFun& c) {
    if (!c.is_polynomial() || c.is_zero()) return std::nullopt;
    const auto& v = c.num().coeffs();
    if (v.back() != 1) return std::nullopt;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i]) return std::nullopt;
    return v.size() - 1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> d{1};
    for (auto q : prime_factors(n)) {
        std::uint64_t e = 0, m = n;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        const std::size_t sz = d.size();
        std::uint64_t pw = 1;
        for (std::uint64_t k = 1; k <= e; ++k) {
            pw *= q;
            for (std::size_t i = 0; i < sz; ++i) d.push_back(d[i] * pw);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

CenterPoly center_powmod_x(std::uint64_t e, const CenterPoly& g) {
    Field fp = g.field();
    const RatFun one = RatFun::constant(fp, 1);
    CenterPoly r = CenterPoly::constant(one), b(fp, {RatFun(fp), one});
    b = divmod(b, g).second;
    while (e) {
        if (e & 1) r = divmod(r * b, g).second;
        e >>= 1;
        if (e) b = divmod(b * b, g).second;
    }
    return r;
}

SkewMatrix stack_rows(Field f, const std::vector<std::vector<SkewElem>>& rows, std::size_t cols) {
    SkewMatrix m = skew_zero(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

std::vector<SkewElem> row_of(const SkewMatrix& M, std::size_t i) {
    std::vector<SkewElem> r;
    for (std::size_t j = 0; j < M.cols(); ++j) r.push_back(M(i, j));
    return r;
}

std::vector<SkewElem> row_times(const std::vector<SkewElem>& v, const SkewMatrix& M) {
    std::vector<SkewElem> out(M.cols(), SkewElem(M.zero().field()));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!M(k, j).is_zero()) out[j] += v[k] * M(k, j);
    }
    return out;
}

/// Basis of the row space in reduced echelon form.
SkewMatrix row_space_basis(const SkewMatrix& E, std::vector<std::size_t>* pivots = nullptr) {
    auto e = gauss_eliminate(E);
    if (pivots) *pivots = e.pivots;
    return e.reduced.block(0, 0, e.rank, E.cols());
}

/// Basis of {w : w M = 0}.
std::vector<std::vector<SkewElem>> left_kernel(const SkewMatrix& M) {
    auto e = gauss_eliminate(M);
    std::vector<std::vector<SkewElem>> out;
    for (std::size_t i = e.rank; i < M.rows(); ++i) out.push_back(row_of(e.transform, i));
    return out;
}

std::size_t row_rank(Field f, const std::vector<std::vector<SkewElem>>& rows, std::size_t cols) {
    if (rows.empty()) return 0;
    return gauss_eliminate(stack_rows(f, rows, cols)).rank;
}

CPoly clear_denominators(Field fq, const SkewMatrix& M, CPoly acc) {
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            for (const auto& p : M(i, j).parts())
                if (!p.is_zero() && !p.den().is_one()) acc = lcm(acc, prime_field_closure(p.den()));
    (void)fq;
    return acc;
}

}  // namespace

CenterPoly monomial_root_poly(Field fp, const std::vector<std::uint64_t>& exponents) {
    std::vector<std::uint64_t> e = exponents;
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    CenterPoly r = CenterPoly::constant(RatFun::constant(fp, 1));
    for (auto k : e) r = r * CenterPoly::linear(RatFun(CPoly::monomial(fp, 1, k)));
    return r;
}

// ---------------------------------------------------------------- classification

FactorClassification classify_factor(const CenterPoly& g, const SplitLimits& lim) {
    require(g.degree() >= 1 && g.lead().is_one(), "classification expects a monic polynomial of positive degree");
    require(!g.coeffs()[0].is_zero(), "classification requires g(0) != 0");
    Field fp = g.field();
    const auto p = fp->p();
    const auto m = static_cast<std::uint64_t>(g.degree());
    FactorClassification fc;
    fc.factor = g;
    if (!g.has_polynomial_coeffs()) {
        fc.kind = FactorKind::Independent;
        fc.diagnostics = "roots are not integral over F_p[s]";
        return fc;
    }
    // the product of the roots must be a unit times a power of s
    const CPoly c0 = g.coeffs()[0].num();
    std::uint64_t a = 0;
    {
        std::size_t nz = 0;
        for (std::size_t i = 0; i < c0.coeffs().size(); ++i)
            if (c0.coeffs()[i]) {
                ++nz;
                a = i;
            }
        if (nz != 1) {
            fc.kind = FactorKind::Independent;
            fc.diagnostics = "norm of a root is not a monomial in s";
            return fc;
        }
    }
    // any admissible n divides n0 = m (p^m - 1)
    long double pm = 1;
    for (std::uint64_t i = 0; i < m; ++i) pm *= static_cast<long double>(p);
    if (pm * static_cast<long double>(m) > 1e15L) {
        fc.kind = FactorKind::Unknown;
        fc.diagnostics = "candidate period too large to enumerate";
        return fc;
    }
    std::uint64_t pmi = 1;
    for (std::uint64_t i = 0; i < m; ++i) pmi *= p;
    const std::uint64_t n0 = m * (pmi - 1);
    fc.bound = n0;
    // modular prefilter at a place where g stays squarefree
    CPoly pi;
    ReductionPlace place;
    for (int guard = 0; guard < 64; ++guard) {
        pi = next_irreducible(fp, pi);
        place = ReductionPlace(pi);
        std::vector<CPoly> cs;
        for (const auto& c : g.coeffs()) cs.push_back(c.num());
        const CPoly gb = place.reduce(cs);
        if (gcd(gb, gb.derivative()).is_one()) break;
    }
    std::vector<CPoly> cs;
    for (const auto& c : g.coeffs()) cs.push_back(c.num());
    const CPoly gb = place.reduce(cs);
    Field K = place.residue_field();
    const Elem sb = place.reduce(CPoly::var(fp));
    const CPoly y = CPoly::var(K);
    for (auto n : divisors(n0)) {
        if ((n * a) % m != 0) continue;
        const std::uint64_t j = n * a / m;
        if (powmod(y, n, gb) != CPoly::constant(K, K->pow(sb, j)) % gb) continue;
        if (n > lim.max_power) {
            fc.kind = FactorKind::Unknown;
            fc.bound = n;
            fc.diagnostics = "candidate n = " + std::to_string(n) + " passes the modular test but exceeds the exact-test cap";
            return fc;
        }
        const CenterPoly target = CenterPoly::constant(RatFun(CPoly::monomial(fp, 1, j)));
        if (center_powmod_x(n, g) == divmod(target, g).second) {
            fc.kind = FactorKind::FrobeniusType;
            fc.n = n;
            fc.j = j;
            return fc;
        }
    }
    fc.kind = FactorKind::Independent;
    fc.diagnostics = "no divisor of " + std::to_string(n0) + " gives a power of s";
    return fc;
}

// ---------------------------------------------------------------- Jordan form

JordanForm jordan_form_central(const SkewMatrix& A) {
    require(A.rows() == A.cols(), "Jordan form of a non-square matrix");
    Field fq = A.zero().field();
    Field fp = fq->prime_field();
    const std::size_t n = A.rows();
    JordanForm out;
    if (n == 0) {
        out.P = out.J = skew_zero(fq, 0, 0);
        return out;
    }
    const CenterPoly mp = min_poly_center(A);
    const auto fs = factor_center(mp);
    std::vector<std::pair<std::uint64_t, unsigned>> eig;
    for (const auto& [g, e] : fs) {
        if (g.degree() != 1) fail(ErrorCode::InvalidArgument, "eigenvalue data is not central: factor " + g.to_string());
        const auto k = monomial_exponent(-g.coeffs()[0]);
        if (!k) fail(ErrorCode::InvalidArgument, "eigenvalue is not a power of s: factor " + g.to_string());
        eig.push_back({*k, e});
    }
    std::sort(eig.begin(), eig.end());
    std::vector<std::vector<SkewElem>> rows;
    for (const auto& [k, e] : eig) {
        const RatFun lambda(CPoly::monomial(fp, 1, k));
        CenterPoly ge = CenterPoly::constant(RatFun::constant(fp, 1));
        for (unsigned i = 0; i < e; ++i) ge = ge * CenterPoly::linear(lambda);
        const CenterPoly other = divmod(mp, ge).first;
        const auto eg = ext_gcd(ge, other);
        const SkewMatrix E = eval(eg.v * other, A);
        std::vector<std::size_t> piv;
        const SkewMatrix W = row_space_basis(E, &piv);
        const std::size_t kd = W.rows();
        // restriction to the generalized eigenspace: W A = B W
        const SkewMatrix WA = W * A;
        SkewMatrix N = skew_zero(fq, kd, kd);
        const SkewElem lam = SkewElem::scalar(fq, lambda.over(fq));
        for (std::size_t i = 0; i < kd; ++i)
            for (std::size_t j = 0; j < kd; ++j) N(i, j) = WA(i, piv[j]) - (i == j ? lam : SkewElem(fq));
        std::vector<SkewMatrix> Np{skew_identity(fq, kd)};
        for (unsigned i = 1; i <= e; ++i) Np.push_back(Np.back() * N);
        std::vector<std::vector<std::vector<SkewElem>>> ker(e + 1);
        for (unsigned i = 1; i <= e; ++i) ker[i] = left_kernel(Np[i]);
        std::vector<std::pair<std::vector<SkewElem>, unsigned>> chains;
        for (unsigned i = e; i >= 1; --i) {
            std::vector<std::vector<SkewElem>> cur = ker[i - 1];
            for (const auto& [w, L] : chains)
                if (L > i) cur.push_back(row_times(w, Np[L - i]));
            std::size_t r = row_rank(fq, cur, kd);
            for (const auto& v : ker[i]) {
                cur.push_back(v);
                const std::size_t r2 = row_rank(fq, cur, kd);
                if (r2 > r) {
                    chains.push_back({v, i});
                    r = r2;
                } else {
                    cur.pop_back();
                }
            }
        }
        for (const auto& [w, L] : chains) {
            std::vector<SkewElem> v = w;
            for (unsigned t = 0; t < L; ++t) {
                rows.push_back(row_times(v, W));
                v = row_times(v, N);
            }
            out.blocks.push_back({k, L});
        }
    }
    require(rows.size() == n, "Jordan chains do not span the space");
    out.P = stack_rows(fq, rows, n);
    out.J = skew_zero(fq, n, n);
    std::size_t off = 0;
    for (const auto& b : out.blocks) {
        const SkewElem lam = SkewElem::scalar(fq, RatFun(CPoly::monomial(fq, 1, b.exponent)));
        for (std::size_t i = 0; i < b.size; ++i) {
            out.J(off + i, off + i) = lam;
            if (i + 1 < b.size) out.J(off + i, off + i + 1) = SkewElem::one(fq);
        }
        off += b.size;
    }
    require(out.P * A == out.J * out.P, "Jordan form verification failed");
    return out;
}

PowerUp power_up(const std::vector<JordanBlock>& blocks, std::uint64_t p) {
    PowerUp pu;
    std::size_t mx = 0;
    for (const auto& b : blocks) mx = std::max(mx, b.size);
    while (pu.factor < mx) {
        pu.factor *= p;
        ++pu.a;
    }
    std::map<std::uint64_t, std::size_t> merged;
    for (const auto& b : blocks) merged[b.exponent * pu.factor] += b.size;
    for (const auto& [e, m] : merged) pu.blocks.push_back({e, m});
    return pu;
}

// ---------------------------------------------------------------- splitting

SplitData split_endomorphism(const OreMatrix& A, const SplitLimits& lim) {
    require(A.rows() == A.cols() && A.rows() > 0, "endomorphism must be a nonempty square matrix");
    Field fq = A.zero().field();
    Field fp = fq->prime_field();
    const std::size_t N = A.rows();
    const auto p = fq->p();
    SplitData sd;
    sd.r = min_poly_center(to_skew(A));
    if (sd.r.coeffs()[0].is_zero()) fail(ErrorCode::NotDominant, "map is not dominant: minimal polynomial " + sd.r.to_string() + " vanishes at 0");
    std::uint64_t n = 1;
    for (const auto& [g, e] : factor_center(sd.r, lim.factor)) {
        auto fc = classify_factor(g, lim);
        fc.multiplicity = e;
        if (fc.kind == FactorKind::Unknown)
            fail(ErrorCode::UnknownClassification, "factor " + g.to_string() + ": " + fc.diagnostics);
        if (fc.kind == FactorKind::FrobeniusType) n = std::lcm(n, fc.n);
        sd.factors.push_back(std::move(fc));
    }
    sd.n_before_power_up = n;
    const SkewMatrix B = to_skew(mat_pow(A, n, OrePoly::constant(fq, 1)));
    const CenterPoly rB = min_poly_center(B);
    const RatFun one = RatFun::constant(fp, 1);
    CenterPoly r0 = CenterPoly::constant(one), r1 = CenterPoly::constant(one);
    for (const auto& [g, e] : factor_center(rB, lim.factor)) {
        const bool frob = g.degree() == 1 && monomial_exponent(-g.coeffs()[0]).has_value();
        for (unsigned i = 0; i < e; ++i) (frob ? r0 : r1) = (frob ? r0 : r1) * g;
    }
    SkewMatrix P = skew_identity(fq, N), Pinv = skew_identity(fq, N);
    SkewMatrix B0 = skew_zero(fq, 0, 0), B1 = skew_zero(fq, 0, 0);
    if (r1.degree() == 0) {
        B0 = B;
    } else if (r0.degree() == 0) {
        B1 = B;
    } else {
        const auto eg = ext_gcd(r0, r1);
        require(eg.g.is_one(), "Frobenius and independent parts share a factor");
        const SkewMatrix E0 = eval(eg.v * r1, B), E1 = eval(eg.u * r0, B);
        const SkewMatrix W0 = row_space_basis(E0), W1 = row_space_basis(E1);
        std::vector<std::vector<SkewElem>> rows;
        for (std::size_t i = 0; i < W0.rows(); ++i) rows.push_back(row_of(W0, i));
        for (std::size_t i = 0; i < W1.rows(); ++i) rows.push_back(row_of(W1, i));
        require(rows.size() == N, "idempotent images do not span the space");
        P = stack_rows(fq, rows, N);
        Pinv = matrix_inverse(P);
        const SkewMatrix M = P * B * Pinv;
        const std::size_t n0 = W0.rows();
        B0 = M.block(0, 0, n0, n0);
        B1 = M.block(n0, n0, N - n0, N - n0);
        require(M.block(0, n0, n0, N - n0).is_zero() && M.block(n0, 0, N - n0, n0).is_zero(),
                "conjugated power is not block diagonal");
    }
    const std::size_t n0 = B0.rows(), n1 = B1.rows();
    JordanForm jf;
    if (n0 > 0) jf = jordan_form_central(B0);
    const PowerUp pu = power_up(jf.blocks, p);
    sd.a = pu.a;
    sd.jordan = jf.blocks;
    sd.blocks = pu.blocks;
    sd.n = n * pu.factor;
    if (n0 > 0) {
        const SkewMatrix Pj = jf.P, Pj_inv = matrix_inverse(jf.P);
        P = direct_sum(Pj, skew_identity(fq, n1), SkewElem(fq)) * P;
        Pinv = Pinv * direct_sum(Pj_inv, skew_identity(fq, n1), SkewElem(fq));
    }
    sd.P = P;
    sd.Pinv = Pinv;
    sd.A0 = skew_zero(fq, n0, n0);
    {
        std::size_t off = 0;
        for (const auto& b : sd.blocks) {
            const SkewElem lam = SkewElem::scalar(fq, RatFun(CPoly::monomial(fq, 1, b.n)));
            for (std::size_t i = 0; i < b.m; ++i) sd.A0(off + i, off + i) = lam;
            off += b.m;
        }
    }
    sd.A1 = n1 ? mat_pow(B1, pu.factor, SkewElem::one(fq)) : skew_zero(fq, 0, 0);
    std::vector<std::uint64_t> ex;
    for (const auto& b : sd.blocks) ex.push_back(b.n);
    sd.r0 = monomial_root_poly(fp, ex);
    sd.r1 = n1 ? min_poly_center(sd.A1) : CenterPoly::constant(one);
    // the defining identity P A^n = (A0 ⊕ A1) P, checked exactly
    const SkewMatrix An = to_skew(mat_pow(A, sd.n, OrePoly::constant(fq, 1)));
    require(P * An == direct_sum(sd.A0, sd.A1, SkewElem(fq)) * P, "split identity failed");
    require(gcd(sd.r0, sd.r1).is_one(), "r0 and r1 are not coprime");
    CPoly h = CPoly::constant(fq, 1);
    h = clear_denominators(fq, P, h);
    h = clear_denominators(fq, Pinv, h);
    if (n1) {
        SkewMatrix Ai = skew_identity(fq, n1);
        for (int i = 0; i < std::max(1, sd.r1.degree()); ++i) {
            h = clear_denominators(fq, Ai, h);
            Ai = Ai * sd.A1;
        }
    }
    sd.h = h.over(fp);
    return sd;
}

}  // namespace gadyn
