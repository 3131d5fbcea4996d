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


#include "gadyn/fsets.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "gadyn/error.hpp"
#include "gadyn/linalg.hpp"

namespace gadyn {

namespace {

Point zero_point(Field f, std::size_t N) { return Point(N, MRatFun(f)); }

Point frobenius_point(const Point& x, std::uint64_t e) {
    Point y;
    for (const auto& c : x) y.push_back(c.frobenius_power(e));
    return y;
}

void add_scaled(Point& acc, const Point& x, Elem c) {
    if (!c) return;
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += x[j].scaled(c);
}

Field point_field(const Point& x) {
    require(!x.empty(), "points must have at least one coordinate");
    return x[0].field();
}

std::uint64_t checked_count(std::uint64_t base, std::uint64_t exp, std::size_t cap) {
    std::uint64_t n = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        n *= base;
        if (n > cap) fail(ErrorCode::Capacity, "enumeration exceeds the configured cap of " + std::to_string(cap));
    }
    return n;
}

void push_unique(std::vector<Point>& out, Point x) {
    for (const auto& y : out)
        if (y == x) return;
    out.push_back(std::move(x));
}

/// Set partitions of {0..r-1}.
void partitions(std::size_t r, std::vector<std::vector<std::vector<std::size_t>>>& out) {
    std::vector<std::vector<std::size_t>> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == r) {
            out.push_back(cur);
            return;
        }
        for (std::size_t g = 0; g < cur.size(); ++g) {
            cur[g].push_back(i);
            rec(i + 1);
            cur[g].pop_back();
        }
        cur.push_back({i});
        rec(i + 1);
        cur.pop_back();
    };
    rec(0);
}

std::vector<std::vector<std::uint64_t>> solve_power(Field f, const MPoly& L, const std::vector<Elem>& c) {
    const std::size_t r = c.size() - 1;
    std::map<std::uint64_t, Elem> R;
    for (const auto& [mono, a] : L.terms()) R[mono.e[0]] = a;
    R[0] = f->sub(R[0], c[0]);
    if (!R[0]) R.erase(0);
    std::vector<std::vector<std::uint64_t>> out;
    if (R.count(0)) return out;
    std::uint64_t bound = 0;
    for (const auto& [mono, a] : L.terms()) bound = std::max(bound, mono.e[0]);
    std::vector<std::vector<std::vector<std::size_t>>> parts;
    partitions(r, parts);
    const std::vector<std::pair<std::uint64_t, Elem>> supp(R.begin(), R.end());
    for (const auto& part : parts) {
        std::vector<std::size_t> nonzero, zero;
        std::vector<Elem> sums;
        for (std::size_t g = 0; g < part.size(); ++g) {
            Elem s = 0;
            for (auto i : part[g]) s = f->add(s, c[i + 1]);
            sums.push_back(s);
            (s ? nonzero : zero).push_back(g);
        }
        if (nonzero.size() != supp.size()) continue;
        std::vector<std::uint64_t> expo(part.size(), 0);
        // nonzero groups take the support of R bijectively
        std::vector<std::size_t> perm(supp.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        do {
            bool ok = true;
            for (std::size_t a = 0; a < nonzero.size() && ok; ++a) {
                ok = sums[nonzero[a]] == supp[perm[a]].second;
                expo[nonzero[a]] = supp[perm[a]].first;
            }
            if (!ok) continue;
            // zero-sum groups take any further distinct exponents in [1, bound]
            std::function<void(std::size_t)> rec = [&](std::size_t z) {
                if (z == zero.size()) {
                    std::vector<std::uint64_t> tup(r);
                    for (std::size_t g = 0; g < part.size(); ++g)
                        for (auto i : part[g]) tup[i] = expo[g];
                    out.push_back(std::move(tup));
                    return;
                }
                for (std::uint64_t n = 1; n <= bound; ++n) {
                    bool clash = false;
                    for (std::size_t g = 0; g < part.size(); ++g) {
                        const bool assigned = std::find(zero.begin() + z, zero.end(), g) == zero.end();
                        if (assigned && expo[g] == n) clash = true;
                    }
                    if (clash) continue;
                    expo[zero[z]] = n;
                    rec(z + 1);
                }
                expo[zero[z]] = 0;
            };
            rec(0);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_instance(const LambdaEqInstance& inst) {
    require(!inst.lambda.is_zero(), "lambda must be nonzero");
    require(!inst.c.empty(), "instance needs c_0");
    require(inst.c.size() <= 4, "at most three t-power terms are supported");
    for (std::size_t i = 1; i < inst.c.size(); ++i) require(inst.c[i] != 0, "c_i must be nonzero for i >= 1");
    const int a = inst.lambda.num().sole_variable(), b = inst.lambda.den().sole_variable();
    require((a == -1 || a == 0) && (b == -1 || b == 0), "lambda must depend on t_1 only");
}

}  // namespace

std::vector<std::pair<Point, std::vector<std::vector<Elem>>>> module_elements(const FpFModule& H, Field f,
                                                                             std::size_t N, unsigned bound,
                                                                             std::size_t cap) {
    const auto p = f->p();
    const std::size_t G = H.generators.size();
    const std::size_t slots = G * (bound + 1);
    const std::uint64_t total = checked_count(p, slots, cap);
    std::vector<Point> pw;
    for (const auto& g : H.generators) {
        require(g.size() == N, "module generator of the wrong dimension");
        for (unsigned e = 0; e <= bound; ++e) pw.push_back(frobenius_point(g, e));
    }
    std::vector<std::pair<Point, std::vector<std::vector<Elem>>>> out;
    std::vector<Elem> digit(slots, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (auto& d : digit) {
            d = v % p;
            v /= p;
        }
        Point x = zero_point(f, N);
        std::vector<std::vector<Elem>> P(G, std::vector<Elem>(bound + 1, 0));
        for (std::size_t s = 0; s < slots; ++s) {
            add_scaled(x, pw[s], digit[s]);
            P[s / (bound + 1)][s % (bound + 1)] = digit[s];
        }
        out.push_back({std::move(x), std::move(P)});
    }
    return out;
}

std::vector<Point> fset_enumerate(const FSetDescriptor& desc, std::uint64_t B, unsigned module_bound,
                                  const FSetLimits& lim) {
    require(B >= 1, "exponent bound must be positive");
    require(desc.gammas.size() == desc.ks.size(), "one period per gamma");
    for (auto k : desc.ks) require(k >= 1, "periods must be positive");
    Field f = point_field(desc.gamma0);
    const std::size_t N = desc.gamma0.size();
    for (const auto& g : desc.gammas) require(g.size() == N, "gamma of the wrong dimension");
    const auto H = module_elements(desc.H, f, N, module_bound, lim.cap);
    const std::uint64_t lo = lim.include_zero ? 0 : 1;
    const std::uint64_t tuples = checked_count(B - lo + 1, desc.gammas.size(), lim.cap);
    if (tuples * H.size() > lim.cap) fail(ErrorCode::Capacity, "enumeration exceeds the configured cap");
    std::vector<Point> out;
    std::vector<std::uint64_t> n(desc.gammas.size(), lo);
    for (std::uint64_t idx = 0; idx < tuples; ++idx) {
        std::uint64_t v = idx;
        for (auto& x : n) {
            x = lo + v % (B - lo + 1);
            v /= (B - lo + 1);
        }
        Point base = desc.gamma0;
        for (std::size_t i = 0; i < n.size(); ++i) add_scaled(base, frobenius_point(desc.gammas[i], n[i] * desc.ks[i]), 1);
        for (const auto& [h, P] : H) {
            Point y = base;
            add_scaled(y, h, 1);
            push_unique(out, std::move(y));
        }
    }
    return out;
}

Membership module_contains(const FpFModule& Gamma, const Point& x, unsigned bound) {
    Membership m;
    Field f = point_field(x);
    Field fp = GF::prime(f->p());
    std::vector<Point> fs;
    for (const auto& g : Gamma.generators) {
        require(g.size() == x.size(), "module generator of the wrong dimension");
        for (unsigned e = 0; e <= bound; ++e) fs.push_back(frobenius_point(g, e));
    }
    fs.push_back(x);
    for (const auto& c : linear_relations(fs, fp)) {
        const Elem cx = c.back();
        if (!cx) continue;
        const Elem scale = fp->neg(fp->inv(cx));
        m.found = true;
        m.label = "member";
        for (std::size_t i = 0; i < Gamma.generators.size(); ++i) {
            std::vector<Elem> P;
            for (unsigned e = 0; e <= bound; ++e) P.push_back(fp->mul(c[i * (bound + 1) + e], scale));
            m.P.push_back(std::move(P));
        }
        return m;
    }
    m.label = "not found within bound";
    return m;
}

MRatFun Equation::eval(const Point& x) const {
    require(!terms.empty(), "empty equation");
    MRatFun acc(terms[0].second.field());
    for (const auto& [e, c] : terms) {
        require(e.size() == x.size(), "equation exponent vector of the wrong length");
        MRatFun t = c;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) t *= pow(x[v], e[v]);
        acc += t;
    }
    return acc;
}

IntersectionReport brute_force_intersection(const std::vector<Equation>& V, const FpFModule& Gamma, unsigned bound,
                                            std::size_t cap) {
    require(!Gamma.generators.empty(), "module needs at least one generator");
    Field f = point_field(Gamma.generators[0]);
    const std::size_t N = Gamma.generators[0].size();
    IntersectionReport rep;
    for (auto& [x, P] : module_elements(Gamma, f, N, bound, cap)) {
        bool ok = true;
        for (const auto& eq : V)
            if (!eq.eval(x).is_zero()) {
                ok = false;
                break;
            }
        if (!ok) continue;
        std::ostringstream sig;
        for (std::size_t i = 0; i < P.size(); ++i) {
            if (i) sig << ';';
            sig << 'g' << (i + 1) << ":{";
            bool first = true;
            for (std::size_t e = 0; e < P[i].size(); ++e)
                if (P[i][e]) {
                    sig << (first ? "" : ",") << e;
                    first = false;
                }
            sig << '}';
        }
        rep.patterns[sig.str()]++;
        rep.solutions.push_back({std::move(x), std::move(P), sig.str()});
    }
    return rep;
}

std::vector<std::vector<std::uint64_t>> solve_lambda_eq(const LambdaEqInstance& inst, std::uint64_t m) {
    check_instance(inst);
    require(m >= 1, "m must be positive");
    const MRatFun L = pow(inst.lambda, m);
    if (!L.is_polynomial()) return {};
    Field f = L.field();
    const MPoly num = L.num().scaled(f->inv(L.den().constant_term()));
    return solve_power(f, num, inst.c);
}

LambdaDensity lambda_density(const LambdaEqInstance& inst, std::uint64_t M) {
    check_instance(inst);
    require(M >= 1, "M must be positive");
    LambdaDensity out;
    out.M = M;
    out.witness.resize(M);
    if (inst.lambda.is_polynomial()) {
        Field f = inst.lambda.field();
        const MPoly lam = inst.lambda.num().scaled(f->inv(inst.lambda.den().constant_term()));
        MPoly L = lam;
        for (std::uint64_t m = 1; m <= M; ++m) {
            if (m > 1) L = L * lam;
            auto sols = solve_power(f, L, inst.c);
            if (!sols.empty()) {
                out.solvable.push_back(m);
                out.witness[m - 1] = sols.front();
            }
        }
    }
    out.density = static_cast<double>(out.solvable.size()) / static_cast<double>(M);
    return out;
}

std::string LambdaDensity::csv() const {
    std::ostringstream os;
    os << "m,solvable,tuple\n";
    std::set<std::uint64_t> S(solvable.begin(), solvable.end());
    for (std::uint64_t m = 1; m <= M; ++m) {
        os << m << ',' << (S.count(m) ? 1 : 0) << ',';
        const auto& w = witness[m - 1];
        for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
        os << '\n';
    }
    return os.str();
}

bool vandermonde_check(Field f, const std::vector<Elem>& lambdas, std::uint64_t N) {
    const std::size_t r = lambdas.size();
    require(r >= 1, "need at least one lambda");
    for (std::size_t i = 0; i < r; ++i) {
        require(lambdas[i] != 0, "lambdas must be nonzero");
        for (std::size_t j = 0; j < i; ++j) require(lambdas[i] != lambdas[j], "lambdas must be distinct");
    }
    ElemMatrix V(r, std::vector<Elem>(r));
    for (std::size_t n = 0; n < r; ++n)
        for (std::size_t i = 0; i < r; ++i) V[n][i] = f->pow(lambdas[i], N + n);
    return rank(f, V) == r;
}

}  // namespace gadyn
