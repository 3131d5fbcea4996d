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


#include "gadyn/classify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "gadyn/error.hpp"
#include "gadyn/factor.hpp"
#include "gadyn/linalg.hpp"

namespace gadyn {

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::A: return "A";
        case VerdictKind::B: return "B";
        case VerdictKind::C: return "C";
    }
    return "?";
}

const char* density_outcome_name(DensityOutcome o) {
    switch (o) {
        case DensityOutcome::DenseUpToD: return "dense-up-to-D";
        case DensityOutcome::FoundPolynomial: return "found-polynomial";
        case DensityOutcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

OrePoly ore_one(Field f) { return OrePoly::constant(f, 1); }

RatFun central(Field fq, const CPoly& h) { return RatFun(h.over(fq)); }

/// c * rows[first, last) of M with the smallest central c making every entry a polynomial.
OreMatrix cleared_rows(const SkewMatrix& M, std::size_t first, std::size_t last) {
    Field fq = M.zero().field();
    CPoly c = CPoly::constant(fq, 1);
    for (std::size_t i = first; i < last; ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            for (const auto& part : M(i, j).parts())
                if (!part.den().is_one()) c = lcm(c, prime_field_closure(part.den()));
    return to_ore(scaled_left(M.block(first, 0, last - first, M.cols()), RatFun(c)));
}

std::size_t point_size(const Point& x) {
    std::size_t n = 0;
    for (const auto& c : x) n += c.num().terms().size() + c.den().terms().size();
    return n;
}

MRatFun map_field(const MRatFun& x, const Embedding& emb) {
    auto conv = [&](const MPoly& a) {
        std::vector<MPoly::Term> t;
        for (const auto& [m, c] : a.terms()) t.push_back({m, emb(c)});
        return MPoly(emb.to(), std::move(t));
    };
    return MRatFun(conv(x.num()), conv(x.den()));
}

std::optional<std::vector<Elem>> specialize(const Point& x, const Embedding& emb, const std::vector<Elem>& tvals) {
    std::vector<Elem> out;
    for (const auto& c : x) {
        auto v = c.eval(emb, tvals);
        if (!v) return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

std::vector<std::vector<unsigned>> monomials_upto(std::size_t N, unsigned D) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> e(N, 0);
    for (unsigned deg = 0; deg <= D; ++deg) {
        // exponent vectors of total degree deg, x1 varying slowest
        std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
            if (i + 1 == N) {
                e[i] = left;
                out.push_back(e);
                return;
            }
            for (unsigned a = left + 1; a-- > 0;) {
                e[i] = a;
                rec(i + 1, left - a);
            }
        };
        if (N == 0) {
            if (deg == 0) out.push_back({});
            continue;
        }
        rec(0, deg);
    }
    return out;
}

std::string monomial_poly_string(Field f, const std::vector<std::vector<unsigned>>& mons, const std::vector<Elem>& c) {
    std::ostringstream os;
    bool first = true;
    std::vector<std::size_t> order(mons.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto deg = [&](std::size_t u) { return std::accumulate(mons[u].begin(), mons[u].end(), 0u); };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg(a) > deg(b); });
    for (std::size_t u : order) {
        if (!c[u]) continue;
        if (!first) os << " + ";
        first = false;
        bool constant = true;
        std::ostringstream mono;
        for (std::size_t v = 0; v < mons[u].size(); ++v) {
            if (!mons[u][v]) continue;
            if (!constant) mono << '*';
            constant = false;
            mono << 'x' << (v + 1);
            if (mons[u][v] > 1) mono << '^' << mons[u][v];
        }
        if (constant) os << f->to_string(c[u]);
        else if (c[u] == 1) os << mono.str();
        else os << f->to_string(c[u]) << '*' << mono.str();
    }
    return first ? "0" : os.str();
}

/// Rows over F_p expressing sum_u c_u v_u = 0 with unknown c_u in the subfield `sub` of v's field.
void append_fp_rows(ElemMatrix& rows, Field E, const std::vector<Elem>& basis_in_E, const std::vector<Elem>& v) {
    const unsigned kE = E->degree();
    const std::size_t ncols = v.size() * basis_in_E.size();
    const std::size_t base = rows.size();
    rows.resize(base + kE, std::vector<Elem>(ncols, 0));
    for (std::size_t u = 0; u < v.size(); ++u)
        for (std::size_t a = 0; a < basis_in_E.size(); ++a) {
            const auto dg = E->digits(E->mul(basis_in_E[a], v[u]));
            for (unsigned r = 0; r < kE; ++r) rows[base + r][u * basis_in_E.size() + a] = dg[r];
        }
}

std::vector<Elem> subfield_basis(Field sub, const Embedding& emb) {
    std::vector<Elem> b;
    Elem pw = 1;
    for (unsigned a = 0; a < sub->degree(); ++a) {
        b.push_back(emb(pw));
        pw *= sub->p();
    }
    return b;
}

std::vector<Elem> collapse(Field sub, const std::vector<Elem>& kv) {
    const unsigned k = sub->degree();
    std::vector<Elem> c(kv.size() / k);
    for (std::size_t u = 0; u < c.size(); ++u)
        c[u] = sub->from_digits(std::span<const std::uint64_t>(kv.data() + u * k, k));
    return c;
}

}  // namespace

OreMatrix FiniteToFiniteMap::cleared_power(std::uint64_t k) const {
    Field fq = A.zero().field();
    return to_ore(scaled_left(mat_pow(A, k, SkewElem::one(fq)), central(fq, h)));
}

// ---------------------------------------------------------------- certificates

VerifyResult verify_certificate(const OreMatrix& A, const CertificateB& cert) {
    const std::size_t N = A.rows();
    if (A.cols() != N || cert.v.rows() != 1 || cert.v.cols() != N || cert.v.zero().field() != A.zero().field())
        return {false, "shape mismatch"};
    if (cert.v.is_zero()) return {false, "degenerate"};
    const OreMatrix An = mat_pow(A, cert.n, ore_one(A.zero().field()));
    if (cert.v * An != cert.v) return {false, "identity fails"};
    return {true, "ok"};
}

VerifyResult verify_certificate(const OreMatrix& A, const CertificateC& cert) {
    const std::size_t N = A.rows();
    Field fq = A.zero().field();
    if (A.cols() != N || cert.T.rows() == 0 || cert.T.cols() != N || cert.T.zero().field() != fq)
        return {false, "shape mismatch"};
    if (gauss_eliminate(to_skew(cert.T)).rank != cert.T.rows()) return {false, "degenerate"};
    const OreMatrix Am = mat_pow(A, cert.m, ore_one(fq));
    const OrePoly Fr = OrePoly::frobenius(fq, cert.r);
    OreMatrix rhs = cert.T;
    for (std::size_t i = 0; i < rhs.rows(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) = Fr * cert.T(i, j);
    if (cert.T * Am != rhs) return {false, "identity fails"};
    return {true, "ok"};
}

CertificateC iterate_certificate(const CertificateC& cert, std::uint64_t k) {
    require(k >= 1, "iterate factor must be positive");
    return {cert.T, cert.m * k, cert.r * k};
}

CertificateB build_certificate_B(const SplitData& sd) {
    std::size_t off = 0;
    for (const auto& b : sd.blocks) {
        if (b.n == 0 && b.m > 0) return {cleared_rows(sd.P, off, off + 1), sd.n};
        off += b.m;
    }
    fail(ErrorCode::InvalidArgument, "no Frobenius block with exponent 0");
}

CertificateC build_certificate_C(const SplitData& sd, unsigned d) {
    std::size_t off = 0, best_off = 0;
    const DiagonalBlock* best = nullptr;
    for (const auto& b : sd.blocks) {
        if (b.n >= 1 && b.m > d && (!best || b.m > best->m)) {
            best = &b;
            best_off = off;
        }
        off += b.m;
    }
    require(best != nullptr, "no Frobenius block with positive exponent and multiplicity above d");
    Field fq = sd.P.zero().field();
    return {cleared_rows(sd.P, best_off, best_off + best->m), sd.n, best->n * fq->degree()};
}

// ---------------------------------------------------------------- density

DensityReport density_check(Field fq, std::size_t N, std::size_t nvars, const PointSpecializer& specialize_fn,
                            const PointMaterializer& materialize, const DensityOptions& opt) {
    require(opt.D >= 1 && opt.M >= 1 && opt.trials >= 1, "density check needs M, D, trials >= 1");
    require(nvars <= kMaxVars, "too many variables");
    DensityReport rep;
    rep.M = opt.M;
    rep.D = opt.D;
    rep.monomials = monomials_upto(N, opt.D);
    rep.columns = rep.monomials.size();
    const auto p = fq->p();
    Field E = GF::standard(p, extension_degree_for(p, fq->degree(), opt.min_field_size));
    rep.field_degree = E->degree();
    rep.field_order = E->order();
    const Embedding emb(fq, E);
    Rng rng(opt.seed);
    std::vector<ElemMatrix> values;
    bool dense = false;
    for (unsigned trial = 0; trial < opt.trials; ++trial) {
        std::optional<std::vector<std::vector<Elem>>> pts;
        for (int attempt = 0; attempt < 32 && !pts; ++attempt) {
            std::vector<Elem> tv(kMaxVars, 0);
            for (std::size_t i = 0; i < nvars; ++i) tv[i] = E->random(rng);
            pts = specialize_fn(emb, tv);
        }
        if (!pts) fail(ErrorCode::Capacity, "no specialization avoids the poles of the points");
        ElemMatrix V;
        for (const auto& x : *pts) {
            std::vector<std::vector<Elem>> pw(N, std::vector<Elem>(opt.D + 1, 1));
            for (std::size_t v = 0; v < N; ++v)
                for (unsigned e = 1; e <= opt.D; ++e) pw[v][e] = E->mul(pw[v][e - 1], x[v]);
            std::vector<Elem> row;
            for (const auto& m : rep.monomials) {
                Elem val = 1;
                for (std::size_t v = 0; v < N; ++v) val = E->mul(val, pw[v][m[v]]);
                row.push_back(val);
            }
            V.push_back(std::move(row));
        }
        const std::size_t r = rank(E, V);
        rep.trial_ranks.push_back(r);
        if (r == rep.columns) dense = true;
        values.push_back(std::move(V));
    }
    if (dense) {
        rep.outcome = DensityOutcome::DenseUpToD;
        rep.note = "full column rank at a specialization, so no polynomial of degree <= D vanishes on the points";
        return rep;
    }
    // look for a polynomial with coefficients in the points' field vanishing at every specialization
    Field fp = GF::prime(p);
    const auto basis = subfield_basis(fq, emb);
    ElemMatrix sys;
    for (const auto& V : values)
        for (const auto& row : V) append_fp_rows(sys, E, basis, row);
    const auto ker = kernel_basis(fp, sys);
    if (ker.empty()) {
        rep.outcome = DensityOutcome::Inconclusive;
        rep.note = "rank deficient at every specialization but no vanishing polynomial over the base field";
        return rep;
    }
    const auto pts = materialize();
    if (!pts) {
        rep.outcome = DensityOutcome::Inconclusive;
        rep.note = "candidate vanishing polynomial not verified: points too large to expand exactly";
        return rep;
    }
    for (const auto& kv : ker) {
        std::vector<Elem> c = collapse(fq, kv);
        std::size_t top = c.size();
        while (top > 0 && !c[top - 1]) --top;
        if (top == 0) continue;
        const Elem li = fq->inv(c[top - 1]);
        for (auto& x : c) x = fq->mul(x, li);
        bool vanishes = true;
        for (const auto& x : *pts) {
            MRatFun acc(fq);
            for (std::size_t u = 0; u < c.size(); ++u) {
                if (!c[u]) continue;
                MRatFun term = MRatFun::constant(fq, c[u]);
                for (std::size_t v = 0; v < N; ++v)
                    if (rep.monomials[u][v]) term *= pow(x[v], rep.monomials[u][v]);
                acc += term;
            }
            if (!acc.is_zero()) {
                vanishes = false;
                break;
            }
        }
        if (vanishes) {
            rep.outcome = DensityOutcome::FoundPolynomial;
            rep.coefficients = c;
            rep.polynomial = monomial_poly_string(fq, rep.monomials, c);
            rep.note = "polynomial verified to vanish exactly on every point";
            return rep;
        }
    }
    rep.outcome = DensityOutcome::Inconclusive;
    rep.note = "candidate polynomials from specializations failed exact verification";
    return rep;
}

DensityReport density_check(const std::vector<Point>& points, std::size_t nvars, const DensityOptions& opt) {
    require(!points.empty(), "density check needs at least one point");
    Field fq = points[0].empty() ? nullptr : points[0][0].field();
    require(fq != nullptr, "points must have at least one coordinate");
    DensityOptions o = opt;
    o.M = points.size();
    auto specializer = [&](const Embedding& emb, const std::vector<Elem>& tv) -> std::optional<std::vector<std::vector<Elem>>> {
        std::vector<std::vector<Elem>> out;
        for (const auto& x : points) {
            auto v = specialize(x, emb, tv);
            if (!v) return std::nullopt;
            out.push_back(std::move(*v));
        }
        return out;
    };
    auto mat = [&]() -> std::optional<std::vector<Point>> { return points; };
    return density_check(fq, points[0].size(), nvars, specializer, mat, o);
}

std::vector<Point> orbit(const OreMatrix& A, const Point& alpha, std::size_t M) {
    std::vector<Point> out;
    if (M == 0) return out;
    out.push_back(alpha);
    for (std::size_t k = 1; k < M; ++k) out.push_back(gadyn::apply(A, out.back()));
    return out;
}

namespace {

std::vector<std::pair<OreMatrix, OreMatrix>> sequence_maps(const FiniteToFiniteMap& phi0,
                                                          const FiniteToFiniteMap& phi1, std::size_t M) {
    std::vector<std::pair<OreMatrix, OreMatrix>> maps;
    Field fq = phi0.A.rows() ? phi0.A.zero().field() : phi1.A.zero().field();
    SkewMatrix P0 = skew_identity(fq, phi0.A.rows()), P1 = skew_identity(fq, phi1.A.rows());
    for (std::size_t k = 0; k < M; ++k) {
        maps.push_back({to_ore(scaled_left(P0, central(fq, phi0.h))), to_ore(scaled_left(P1, central(fq, phi1.h)))});
        P0 = P0 * phi0.A;
        P1 = P1 * phi1.A;
    }
    return maps;
}

Point concat(Point a, const Point& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

std::vector<Point> orbit_sequence(const FiniteToFiniteMap& phi0, const FiniteToFiniteMap& phi1, const Point& alpha0,
                                  const Point& alpha1, std::size_t M) {
    std::vector<Point> out;
    for (const auto& [C0, C1] : sequence_maps(phi0, phi1, M)) out.push_back(concat(gadyn::apply(C0, alpha0), gadyn::apply(C1, alpha1)));
    return out;
}

DensityReport orbit_density(const OreMatrix& A, const Point& alpha, std::size_t nvars, const DensityOptions& opt) {
    Field fq = A.zero().field();
    auto specializer = [&](const Embedding& emb, const std::vector<Elem>& tv) -> std::optional<std::vector<std::vector<Elem>>> {
        auto x = specialize(alpha, emb, tv);
        if (!x) return std::nullopt;
        std::vector<std::vector<Elem>> out{*x};
        for (std::size_t k = 1; k < opt.M; ++k) out.push_back(gadyn::apply(A, emb, out.back()));
        return out;
    };
    auto mat = [&]() -> std::optional<std::vector<Point>> {
        try {
            std::vector<Point> out{alpha};
            for (std::size_t k = 1; k < opt.M; ++k) {
                out.push_back(gadyn::apply(A, out.back()));
                if (point_size(out.back()) > opt.symbolic_term_cap) return std::nullopt;
            }
            return out;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Capacity) return std::nullopt;
            throw;
        }
    };
    return density_check(fq, A.rows(), nvars, specializer, mat, opt);
}

DensityReport sequence_density(const FiniteToFiniteMap& phi0, const FiniteToFiniteMap& phi1, const Point& alpha0,
                               const Point& alpha1, std::size_t nvars, const DensityOptions& opt) {
    Field fq = phi0.A.rows() ? phi0.A.zero().field() : phi1.A.zero().field();
    const auto maps = sequence_maps(phi0, phi1, opt.M);
    const Point a = concat(alpha0, alpha1);
    auto specializer = [&](const Embedding& emb, const std::vector<Elem>& tv) -> std::optional<std::vector<std::vector<Elem>>> {
        auto x0 = specialize(alpha0, emb, tv), x1 = specialize(alpha1, emb, tv);
        if (!x0 || !x1) return std::nullopt;
        std::vector<std::vector<Elem>> out;
        for (const auto& [C0, C1] : maps) {
            auto y = gadyn::apply(C0, emb, *x0);
            const auto z = gadyn::apply(C1, emb, *x1);
            y.insert(y.end(), z.begin(), z.end());
            out.push_back(std::move(y));
        }
        return out;
    };
    auto mat = [&]() -> std::optional<std::vector<Point>> {
        try {
            std::vector<Point> out;
            for (const auto& [C0, C1] : maps) {
                out.push_back(concat(gadyn::apply(C0, alpha0), gadyn::apply(C1, alpha1)));
                if (point_size(out.back()) > opt.symbolic_term_cap) return std::nullopt;
            }
            return out;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Capacity) return std::nullopt;
            throw;
        }
    };
    return density_check(fq, a.size(), nvars, specializer, mat, opt);
}

// ---------------------------------------------------------------- independence

std::vector<MRatFun> construct_independent_points(std::size_t k, const std::vector<MRatFun>& deltas, Field base) {
    std::vector<MRatFun> out;
    CPoly pi(base);
    while (out.size() < k) {
        pi = next_irreducible(base, pi);
        const MPoly pm = MPoly::from_univariate(pi, 0);
        bool clash = false;
        for (const auto& d : deltas) {
            if (!d.is_zero() && divide_exact(d.num(), pm)) clash = true;
            if (divide_exact(d.den(), pm)) clash = true;
        }
        if (!clash) out.push_back(MRatFun(MPoly::constant(base, 1), pm));
    }
    return out;
}

std::vector<std::vector<Elem>> linear_relations(const std::vector<Point>& fs, Field C, std::uint64_t seed) {
    if (fs.empty()) return {};
    Field fq = fs[0].at(0).field();
    const std::size_t N = fs[0].size();
    for (const auto& f : fs) {
        require(f.size() == N, "points of different dimensions");
        for (const auto& x : f) require(x.field() == fq, "all points must share one field");
    }
    const auto p = fq->p();
    require(C->p() == p, "coefficient field of a different characteristic");
    const unsigned g = std::lcm(C->degree(), fq->degree());
    Field G = GF::standard(p, g);
    Field E = GF::standard(p, extension_degree_for(p, g, std::uint64_t{1} << 20));
    const Embedding qE(fq, E), cE(C, E), qG(fq, G), cG(C, G);
    const auto basis = subfield_basis(C, cE);
    std::vector<Point> fg;
    for (const auto& f : fs) {
        Point y;
        for (const auto& x : f) y.push_back(map_field(x, qG));
        fg.push_back(std::move(y));
    }
    Rng rng(seed);
    ElemMatrix sys;
    const std::size_t batch = fs.size() * C->degree() / (E->degree() * N) + 3;
    auto add_samples = [&](std::size_t count) {
        for (std::size_t s = 0, attempts = 0; s < count; ++attempts) {
            if (attempts > 64 * count) fail(ErrorCode::Capacity, "no specialization avoids the poles of the points");
            std::vector<Elem> tv(kMaxVars);
            for (auto& t : tv) t = E->random(rng);
            std::vector<std::vector<Elem>> vals;
            bool ok = true;
            for (const auto& f : fs) {
                auto y = specialize(f, qE, tv);
                if (!y) {
                    ok = false;
                    break;
                }
                vals.push_back(std::move(*y));
            }
            if (!ok) continue;
            for (std::size_t j = 0; j < N; ++j) {
                std::vector<Elem> v;
                for (const auto& y : vals) v.push_back(y[j]);
                append_fp_rows(sys, E, basis, v);
            }
            ++s;
        }
    };
    add_samples(batch);
    for (int round = 0; round < 8; ++round) {
        // the specialized kernel contains the true one; once every basis vector checks exactly they agree
        const auto ker = kernel_basis(GF::prime(p), sys);
        std::vector<std::vector<Elem>> out;
        bool exact = true;
        for (const auto& kv : ker) {
            auto c = collapse(C, kv);
            for (std::size_t j = 0; j < N && exact; ++j) {
                MRatFun acc(G);
                for (std::size_t u = 0; u < c.size(); ++u)
                    if (c[u]) acc += fg[u][j].scaled(cG(c[u]));
                exact = acc.is_zero();
            }
            if (!exact) break;
            out.push_back(std::move(c));
        }
        if (exact) return out;
        add_samples(batch);
    }
    fail(ErrorCode::Capacity, "linear relation search did not stabilize");
}

IndependenceResult check_independence(const std::vector<MRatFun>& gammas, const std::vector<MRatFun>& deltas,
                                      unsigned D, unsigned k, std::uint64_t seed) {
    require(D >= 1 && k >= 1, "independence check needs D, k >= 1");
    IndependenceResult res;
    if (gammas.empty()) return res;
    Field C = GF::standard(gammas[0].field()->p(), k);
    res.coeff_field = C;
    std::vector<MRatFun> all = gammas;
    all.insert(all.end(), deltas.begin(), deltas.end());
    std::vector<Point> fs;
    for (const auto& f : all)
        for (unsigned e = 0; e <= D; ++e) fs.push_back({f.frobenius_power(e)});
    const std::size_t gp = gammas.size() * (D + 1);
    for (const auto& c : linear_relations(fs, C, seed)) {
        if (std::all_of(c.begin(), c.begin() + gp, [](Elem x) { return x == 0; })) continue;
        res.independent = false;
        std::ostringstream os;
        for (std::size_t i = 0; i < all.size(); ++i) {
            std::vector<Elem> op(c.begin() + i * (D + 1), c.begin() + (i + 1) * (D + 1));
            const bool is_gamma = i < gammas.size();
            if (!is_gamma)
                for (auto& x : op) x = C->neg(x);
            (is_gamma ? res.P : res.Q).push_back(op);
            const OrePoly P(C, op);
            if (P.is_zero()) continue;
            if (os.tellp() > 0) os << "; ";
            os << (is_gamma ? "P" : "Q") << (is_gamma ? i + 1 : i - gammas.size() + 1) << " = " << P.to_string();
        }
        res.relation = os.str();
        return res;
    }
    return res;
}

// ---------------------------------------------------------------- witness and verdict

WitnessA witness_A(const OreMatrix& A, const SplitData& sd, unsigned d, const DensityOptions& opt) {
    for (const auto& b : sd.blocks) require(b.n >= 1 && b.m <= d, "witness A needs positive exponents and m_i <= d");
    if (d > kMaxVars) fail(ErrorCode::Capacity, "at most 6 transcendental variables are supported");
    Field fq = A.zero().field();
    WitnessA w;
    for (const auto& b : sd.blocks)
        for (std::size_t i = 0; i < b.m; ++i) w.alpha0.push_back(MRatFun::var(fq, i));
    w.alpha1 = construct_independent_points(sd.N1(), w.alpha0, fq);
    const OreMatrix back = to_ore(scaled_left(sd.Pinv, central(fq, sd.h)));
    w.alpha = gadyn::apply(back, concat(w.alpha0, w.alpha1));
    w.report = orbit_density(A, w.alpha, d, opt);
    w.sequence_report = sequence_density({sd.h, sd.A0}, {sd.h, sd.A1}, w.alpha0, w.alpha1, d, opt);
    return w;
}

Verdict classify(const OreMatrix& A, unsigned d, const ClassifyOptions& opt) {
    require(d >= 1, "transcendence degree must be at least 1");
    Verdict v;
    v.d = d;
    v.split = split_endomorphism(A, opt.split);
    bool all_positive = true, all_small = true;
    for (const auto& b : v.split.blocks) {
        if (b.n == 0 && b.m > 0) v.applicable_B = true;
        if (b.n >= 1 && b.m > d) v.applicable_C = true;
        if (b.n == 0) all_positive = false;
        if (b.m > d) all_small = false;
    }
    v.applicable_A = all_positive && all_small;
    if (v.applicable_B) {
        v.cert_B = build_certificate_B(v.split);
        require(verify_certificate(A, *v.cert_B).ok, "certificate B failed self-check");
    }
    if (v.applicable_C) {
        v.cert_C = build_certificate_C(v.split, d);
        require(verify_certificate(A, *v.cert_C).ok, "certificate C failed self-check");
    }
    if (v.applicable_B) v.kind = VerdictKind::B;
    else if (v.applicable_C) v.kind = VerdictKind::C;
    else {
        v.kind = VerdictKind::A;
        v.witness = witness_A(A, v.split, d, opt.density);
    }
    return v;
}

}  // namespace gadyn
