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


#include "gadyn/factor.hpp"

#include <algorithm>
#include <map>

#include "gadyn/error.hpp"

namespace gadyn {

// ---------------------------------------------------------------- finite fields

namespace {

/// Splits a product of irreducibles of degree d into its factors.
void equal_degree_split(const CPoly& g, unsigned d, Rng& rng, std::vector<CPoly>& out) {
    if (g.degree() <= static_cast<int>(d)) {
        out.push_back(g.monic());
        return;
    }
    Field f = g.field();
    const std::uint64_t q = f->order();
    while (true) {
        std::vector<Elem> c(static_cast<std::size_t>(g.degree()));
        for (auto& x : c) x = f->random(rng);
        const CPoly a(f, std::move(c));
        if (a.degree() < 1) continue;
        CPoly b;
        if (f->p() == 2) {
            // absolute trace to F_2: sum of a^{2^j}, j < k d
            const unsigned steps = f->degree() * d;
            CPoly t = a % g, acc = t;
            for (unsigned j = 1; j < steps; ++j) {
                t = mulmod(t, t, g);
                acc += t;
            }
            b = acc;
        } else {
            // a^{(q^d - 1)/2} = c^{1 + q + ... + q^{d-1}} with c = a^{(q-1)/2}
            const CPoly cpow = powmod(a, (q - 1) / 2, g);
            CPoly acc = cpow, t = cpow;
            for (unsigned j = 1; j < d; ++j) {
                t = powmod(t, q, g);
                acc = mulmod(acc, t, g);
            }
            b = acc - CPoly::constant(f, 1);
        }
        const CPoly h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<CPoly> factor_squarefree(const CPoly& f0, Rng& rng) {
    std::vector<CPoly> out;
    CPoly f = f0.monic();
    if (f.degree() <= 0) return out;
    Field F = f.field();
    const std::uint64_t q = F->order();
    const CPoly x = CPoly::var(F);
    CPoly h = x % f;
    for (unsigned i = 1; f.degree() >= 2 * static_cast<int>(i); ++i) {
        h = powmod(h, q, f);
        const CPoly g = gcd(h - x, f);
        if (!g.is_one()) {
            equal_degree_split(g, i, rng, out);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.push_back(f);
    std::sort(out.begin(), out.end(), [](const CPoly& a, const CPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(), b.coeffs().rend());
    });
    return out;
}

std::vector<std::pair<CPoly, unsigned>> factor(const CPoly& f0) {
    std::vector<std::pair<CPoly, unsigned>> out;
    CPoly f = f0.monic();
    if (f.degree() <= 0) return out;
    Field F = f.field();
    Rng rng(0x5eed);
    std::map<std::vector<Elem>, std::pair<CPoly, unsigned>> acc;
    auto add = [&](const CPoly& g, unsigned e) {
        auto [it, inserted] = acc.try_emplace(g.coeffs(), g, e);
        if (!inserted) it->second.second += e;
    };
    // squarefree decomposition for characteristic p
    std::vector<std::pair<CPoly, unsigned>> todo{{f, 1}};
    while (!todo.empty()) {
        auto [g, mult] = todo.back();
        todo.pop_back();
        CPoly c = gcd(g, g.derivative());
        CPoly w = g / c;
        unsigned i = 1;
        while (w.degree() > 0) {
            CPoly y = gcd(w, c);
            CPoly z = w / y;
            for (const auto& irr : factor_squarefree(z, rng)) add(irr, i * mult);
            ++i;
            w = y;
            c = c / y;
        }
        if (c.degree() > 0) {
            const auto p = F->p();
            std::vector<Elem> root(static_cast<std::size_t>(c.degree()) / p + 1, 0);
            for (std::size_t k = 0; k < root.size(); ++k) root[k] = F->frob_inv(c[k * p], 1);
            todo.push_back({CPoly(F, std::move(root)), mult * static_cast<unsigned>(p)});
        }
    }
    for (auto& [k, v] : acc) out.push_back(v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
    return out;
}

CPoly next_irreducible(Field f, const CPoly& prev) {
    const bool fresh = prev.degree() < 1;
    std::vector<Elem> c = fresh ? std::vector<Elem>{0, 1} : prev.coeffs();
    for (bool advance = !fresh;; advance = true) {
        if (advance) {
            // base-q counter over c_0..c_{d-1}; overflow moves to the next degree
            std::size_t i = 0;
            const std::size_t d = c.size() - 1;
            while (i < d && ++c[i] == f->order()) c[i++] = 0;
            if (i == d) {
                c.assign(d + 2, 0);
                c.back() = 1;
            }
        }
        const CPoly cand(f, c);
        if (is_irreducible(cand)) return cand;
    }
}

// ---------------------------------------------------------------- over F_p(s)

ReductionPlace::ReductionPlace(const CPoly& pi) : pi_(pi) {
    std::vector<std::uint64_t> mod(pi.coeffs().begin(), pi.coeffs().end());
    K_ = GF::get(pi.field()->p(), mod);
}

Elem ReductionPlace::reduce(const CPoly& c) const {
    const CPoly r = c % pi_;
    std::vector<std::uint64_t> d(r.coeffs().begin(), r.coeffs().end());
    return K_->from_digits(d);
}

CPoly ReductionPlace::lift(Elem e) const {
    const auto d = K_->digits(e);
    return CPoly(pi_.field(), std::vector<Elem>(d.begin(), d.end()));
}

CPoly ReductionPlace::reduce(const std::vector<CPoly>& coeffs) const {
    std::vector<Elem> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.push_back(reduce(c));
    return CPoly(K_, std::move(v));
}

std::vector<CPoly> ReductionPlace::lift(const CPoly& a) const {
    std::vector<CPoly> r;
    for (Elem e : a.coeffs()) r.push_back(lift(e));
    return r;
}

namespace {

using Bi = std::vector<CPoly>;  // coefficients in F_p[s] of x^0, x^1, ...

void bi_trim(Bi& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Bi bi_mul(const Bi& a, const Bi& b, Field fp) {
    if (a.empty() || b.empty()) return {};
    Bi r(a.size() + b.size() - 1, CPoly(fp));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    bi_trim(r);
    return r;
}

Bi bi_sub(Bi a, const Bi& b, Field fp) {
    if (b.size() > a.size()) a.resize(b.size(), CPoly(fp));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    bi_trim(a);
    return a;
}

Bi bi_mod(Bi a, const CPoly& m) {
    for (auto& c : a) c = c % m;
    bi_trim(a);
    return a;
}

/// Exact division by a monic polynomial over F_p[s]; nullopt when the remainder is nonzero.
std::optional<Bi> bi_div_monic(const Bi& a, const Bi& b, Field fp) {
    if (a.size() < b.size()) return std::nullopt;
    Bi r = a;
    Bi q(a.size() - b.size() + 1, CPoly(fp));
    const std::size_t db = b.size() - 1;
    for (std::size_t i = r.size(); i-- > db;) {
        const CPoly c = r[i];
        if (c.is_zero()) continue;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            if (!b[j].is_zero()) r[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (!r[i].is_zero()) return std::nullopt;
    bi_trim(q);
    return q;
}

int bi_coeff_degree(const Bi& a) {
    int d = -1;
    for (const auto& c : a) d = std::max(d, c.degree());
    return d;
}

using Place = ReductionPlace;

/// Lifts r ≡ g h (mod pi) to r ≡ g h (mod pi^K) with g, h monic.
void hensel_lift(const Bi& r, Bi& g, Bi& h, const Place& pl, unsigned K, Field fp) {
    const CPoly gb = pl.reduce(g), hb = pl.reduce(h);
    const auto eg = ext_gcd(gb, hb);
    require(eg.g.is_one(), "modular factors are not coprime");
    CPoly pik = pl.pi();
    for (unsigned k = 1; k < K; ++k) {
        Bi e = bi_sub(r, bi_mul(g, h, fp), fp);
        for (auto& c : e) {
            auto [q, rem] = divmod(c, pik);
            require(rem.is_zero(), "Hensel lifting lost exactness");
            c = q;
        }
        const CPoly eb = pl.reduce(e);
        const CPoly dg = (eg.v * eb) % gb;
        const CPoly dh = (eg.u * eb) % hb;
        Bi dgl = pl.lift(dg), dhl = pl.lift(dh);
        for (auto& c : dgl) c = c * pik;
        for (auto& c : dhl) c = c * pik;
        if (g.size() < dgl.size()) g.resize(dgl.size(), CPoly(fp));
        if (h.size() < dhl.size()) h.resize(dhl.size(), CPoly(fp));
        for (std::size_t i = 0; i < dgl.size(); ++i) g[i] += dgl[i];
        for (std::size_t i = 0; i < dhl.size(); ++i) h[i] += dhl[i];
        pik = pik * pl.pi();
    }
}

/// Irreducible factors of a monic squarefree r with coefficients in F_p[s].
std::vector<Bi> factor_separable(const Bi& r, Field fp, const FactorLimits& lim) {
    const int n = static_cast<int>(r.size()) - 1;
    if (n <= 1) return {r};
    // choose a place where r stays squarefree, preferring few modular factors
    Rng rng(0xfac7);
    std::vector<CPoly> best;
    Place best_place;
    CPoly pi;
    int tried = 0;
    for (int guard = 0; guard < 4096 && tried < 4; ++guard) {
        pi = next_irreducible(fp, pi);
        Place pl(pi);
        const CPoly rb = pl.reduce(r);
        if (!gcd(rb, rb.derivative()).is_one()) continue;
        ++tried;
        auto fs = factor_squarefree(rb, rng);
        if (best.empty() || fs.size() < best.size()) {
            best = std::move(fs);
            best_place = pl;
        }
        if (best.size() == 1) return {r};
        if (pi.degree() * best.size() > 40) break;
    }
    if (best.empty()) fail(ErrorCode::Capacity, "no good reduction place found for factorization");
    if (best.size() > lim.max_modular_factors) fail(ErrorCode::Capacity, "too many modular factors for recombination");
    const int B = bi_coeff_degree(r);
    const unsigned K = static_cast<unsigned>(B / best_place.pi().degree()) + 1;
    CPoly piK = pow(best_place.pi(), K);
    // lift the factors one at a time against the product of the rest
    std::vector<Bi> lifted;
    Bi target = r;
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        CPoly rest = CPoly::constant(best_place.residue_field(), 1);
        for (std::size_t j = i + 1; j < best.size(); ++j) rest = rest * best[j];
        Bi g = best_place.lift(best[i]), h = best_place.lift(rest);
        hensel_lift(target, g, h, best_place, K, fp);
        lifted.push_back(bi_mod(g, piK));
        target = bi_mod(h, piK);
    }
    lifted.push_back(target);
    // recombination by trial division
    std::vector<Bi> out;
    Bi rem = r;
    std::vector<Bi> pool = lifted;
    for (std::size_t size = 1; 2 * size <= pool.size();) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            Bi cand{CPoly::constant(fp, 1)};
            for (auto i : idx) cand = bi_mod(bi_mul(cand, pool[i], fp), piK);
            if (bi_coeff_degree(cand) <= B) {
                if (auto q = bi_div_monic(rem, cand, fp)) {
                    out.push_back(cand);
                    rem = *q;
                    std::vector<Bi> np;
                    for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
                        if (k < idx.size() && idx[k] == i) {
                            ++k;
                            continue;
                        }
                        np.push_back(pool[i]);
                    }
                    pool = std::move(np);
                    found = true;
                    break;
                }
            }
            // next combination
            std::size_t k = size;
            while (k > 0 && idx[k - 1] == pool.size() - size + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (rem.size() > 1) out.push_back(rem);
    return out;
}

void factor_rec(const Bi& r, unsigned mult, Field fp, const FactorLimits& lim, std::vector<std::pair<Bi, unsigned>>& out);

CenterPoly to_center(const Bi& a, Field fp) {
    std::vector<RatFun> v;
    for (const auto& c : a) v.emplace_back(c);
    return CenterPoly(fp, std::move(v));
}

Bi from_center(const CenterPoly& a) {
    Bi r;
    for (const auto& c : a.coeffs()) r.push_back(c.num());
    return r;
}

void factor_rec(const Bi& r, unsigned mult, Field fp, const FactorLimits& lim, std::vector<std::pair<Bi, unsigned>>& out) {
    if (r.size() <= 1) return;
    if (r.size() == 2) {
        out.push_back({r, mult});
        return;
    }
    const CenterPoly rc = to_center(r, fp);
    const CenterPoly dr = rc.derivative();
    if (dr.is_zero()) {
        // r(x) = r~(x^p)
        const auto p = fp->p();
        Bi rt;
        for (std::size_t i = 0; i < r.size(); i += p) rt.push_back(r[i]);
        std::vector<std::pair<Bi, unsigned>> sub;
        factor_rec(rt, 1, fp, lim, sub);
        for (auto& [g, e] : sub) {
            bool pth_power = true;
            for (const auto& c : g)
                for (std::size_t k = 0; k < c.coeffs().size() && pth_power; ++k)
                    if (c.coeffs()[k] && k % p) pth_power = false;
            if (pth_power) {
                Bi h;
                for (const auto& c : g) {
                    std::vector<Elem> v;
                    for (std::size_t k = 0; k < c.coeffs().size(); k += p) v.push_back(c.coeffs()[k]);
                    h.emplace_back(fp, std::move(v));
                }
                out.push_back({h, e * static_cast<unsigned>(p) * mult});
            } else {
                Bi inflated((g.size() - 1) * p + 1, CPoly(fp));
                for (std::size_t i = 0; i < g.size(); ++i) inflated[i * p] = g[i];
                out.push_back({inflated, e * mult});
            }
        }
        return;
    }
    const CenterPoly d = gcd(rc, dr);
    if (d.degree() == 0) {
        for (auto& g : factor_separable(r, fp, lim)) out.push_back({g, mult});
        return;
    }
    factor_rec(from_center(d), mult, fp, lim, out);
    factor_rec(from_center(divmod(rc, d).first), mult, fp, lim, out);
}

}  // namespace

std::vector<std::pair<CenterPoly, unsigned>> factor_center(const CenterPoly& r, const FactorLimits& lim) {
    require(!r.is_zero(), "factorization of the zero polynomial");
    require(r.lead().is_one(), "factorization expects a monic polynomial");
    Field fp = r.field();
    const int n = r.degree();
    if (n > static_cast<int>(lim.max_degree)) fail(ErrorCode::Capacity, "polynomial degree exceeds the factorization limit");
    // x -> x / D makes the polynomial integral over F_p[s]
    CPoly D = CPoly::constant(fp, 1);
    for (const auto& c : r.coeffs()) D = lcm(D, c.den());
    Bi rh(static_cast<std::size_t>(n) + 1, CPoly(fp));
    for (int i = 0; i <= n; ++i) {
        const RatFun c = r.coeffs()[static_cast<std::size_t>(i)] * RatFun(pow(D, static_cast<std::uint64_t>(n - i)));
        require(c.is_polynomial(), "denominator clearing failed");
        rh[static_cast<std::size_t>(i)] = c.num();
    }
    if (bi_coeff_degree(rh) > static_cast<int>(lim.max_coeff_degree))
        fail(ErrorCode::Capacity, "coefficient degree exceeds the factorization limit");
    std::vector<std::pair<Bi, unsigned>> raw;
    factor_rec(rh, 1, fp, lim, raw);
    // merge equal factors and undo the substitution
    std::vector<std::pair<CenterPoly, unsigned>> out;
    for (auto& [g, e] : raw) {
        const int m = static_cast<int>(g.size()) - 1;
        std::vector<RatFun> c;
        for (int i = 0; i <= m; ++i)
            c.push_back(RatFun(g[static_cast<std::size_t>(i)], pow(D, static_cast<std::uint64_t>(m - i))));
        CenterPoly gc(fp, std::move(c));
        bool merged = false;
        for (auto& [h, k] : out)
            if (h == gc) {
                k += e;
                merged = true;
                break;
            }
        if (!merged) out.push_back({gc, e});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.to_string() < b.first.to_string();
    });
    return out;
}

}  // namespace gadyn
