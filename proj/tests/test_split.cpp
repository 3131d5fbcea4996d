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


#include <algorithm>

#include "doctest.h"
#include "generators.hpp"
#include "gadyn/error.hpp"
#include "gadyn/split.hpp"

using namespace gadyn;
using namespace gadyn::testgen;

namespace {

RatFun s_pow(Field f, std::size_t k) { return RatFun(CPoly::monomial(f, 1, k)); }
RatFun rf(Field f, std::vector<Elem> c) { return RatFun(CPoly(f, std::move(c))); }
CenterPoly cp(Field fp, std::vector<RatFun> c) { return CenterPoly(fp, std::move(c)); }

// smallest n with g | y^n - s^j for some j, by linear scan up to the bound
std::optional<std::pair<std::uint64_t, std::uint64_t>> brute_period(const CenterPoly& g, std::uint64_t bound,
                                                                   std::uint64_t max_j) {
    Field fp = g.field();
    const RatFun one = RatFun::constant(fp, 1);
    CenterPoly yn = CenterPoly::constant(one);
    const CenterPoly y(fp, {RatFun(fp), one});
    for (std::uint64_t n = 1; n <= bound; ++n) {
        yn = divmod(yn * y, g).second;
        for (std::uint64_t j = 0; j <= max_j * n; ++j)
            if (yn == divmod(CenterPoly::constant(s_pow(fp, j)), g).second) return std::make_pair(n, j);
    }
    return std::nullopt;
}

SkewMatrix jordan_matrix(Field fq, const std::vector<JordanBlock>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size;
    SkewMatrix J = skew_zero(fq, n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size; ++i) {
            J(off + i, off + i) = SkewElem::scalar(fq, s_pow(fq, b.exponent));
            if (i + 1 < b.size) J(off + i, off + i + 1) = SkewElem::one(fq);
        }
        off += b.size;
    }
    return J;
}

std::vector<std::pair<std::uint64_t, std::size_t>> multiset(const std::vector<JordanBlock>& b) {
    std::vector<std::pair<std::uint64_t, std::size_t>> v;
    for (const auto& x : b) v.push_back({x.exponent, x.size});
    std::sort(v.begin(), v.end());
    return v;
}

void check_split_invariants(const OreMatrix& A, const SplitData& sd) {
    Field fq = A.zero().field();
    const std::size_t N = A.rows();
    CHECK(sd.N0() + sd.N1() == N);
    CHECK(sd.P * sd.Pinv == skew_identity(fq, N));
    const SkewMatrix An = to_skew(mat_pow(A, sd.n, OrePoly::constant(fq, 1)));
    const SkewMatrix M = sd.P * An * sd.Pinv;
    CHECK(M == direct_sum(sd.A0, sd.A1, SkewElem(fq)));
    if (sd.N0()) CHECK(min_poly_center(sd.A0) == sd.r0);
    if (sd.N1()) CHECK(min_poly_center(sd.A1) == sd.r1);
    CHECK(gcd(sd.r0, sd.r1).is_one());
    CHECK(sd.r0 * sd.r1 == min_poly_center(An));
    // exponents distinct after power-up
    for (std::size_t i = 1; i < sd.blocks.size(); ++i) CHECK(sd.blocks[i - 1].n < sd.blocks[i].n);
    // h clears A1^m beyond the certified range
    CHECK(!sd.h.is_zero());
    if (sd.N1()) {
        const RatFun h = RatFun(sd.h.over(fq));
        SkewMatrix Am = skew_identity(fq, sd.N1());
        for (int m = 0; m <= 2 * sd.r1.degree(); ++m) {
            const SkewMatrix C = scaled_left(Am, h);
            for (std::size_t i = 0; i < C.rows(); ++i)
                for (std::size_t j = 0; j < C.cols(); ++j) CHECK(C(i, j).is_ore_polynomial());
            Am = Am * sd.A1;
        }
    }
}

}  // namespace

TEST_CASE("classify_factor on named factors") {
    Field f2 = GF::standard(2, 1), f3 = GF::standard(3, 1);
    const RatFun one2 = RatFun::constant(f2, 1), one3 = RatFun::constant(f3, 1);
    auto a = classify_factor(CenterPoly::linear(s_pow(f2, 1)));
    CHECK(a.kind == FactorKind::FrobeniusType);
    CHECK(a.n == 1);
    CHECK(a.j == 1);
    auto b = classify_factor(cp(f2, {s_pow(f2, 1), RatFun(f2), one2}));
    CHECK(b.kind == FactorKind::FrobeniusType);
    CHECK(b.n == 2);
    CHECK(b.j == 1);
    auto c = classify_factor(CenterPoly::linear(rf(f3, {1, 1})));
    CHECK(c.kind == FactorKind::Independent);
    auto d = classify_factor(CenterPoly::linear(one3));
    CHECK(d.kind == FactorKind::FrobeniusType);
    CHECK(d.n == 1);
    CHECK(d.j == 0);
    auto e = classify_factor(cp(f2, {one2, one2, one2}));
    CHECK(e.kind == FactorKind::FrobeniusType);
    CHECK(e.n == 3);
    CHECK(e.j == 0);
    // roots s*w with w^2 + w + 1 = 0
    auto g = classify_factor(cp(f2, {s_pow(f2, 2), s_pow(f2, 1), one2}));
    CHECK(g.kind == FactorKind::FrobeniusType);
    CHECK(g.n == 3);
    CHECK(g.j == 3);
    auto h = classify_factor(cp(f3, {-s_pow(f3, 3), RatFun(f3), one3}));
    CHECK(h.kind == FactorKind::FrobeniusType);
    CHECK(h.n == 2);
    CHECK(h.j == 3);
    auto k = classify_factor(CenterPoly::linear(RatFun(CPoly::constant(f3, 1), CPoly::var(f3))));
    CHECK(k.kind == FactorKind::Independent);
    auto m = classify_factor(cp(f3, {rf(f3, {0, 2, 0, 1}), RatFun(f3), one3}));
    CHECK(m.kind == FactorKind::Independent);
    CHECK(std::string(factor_kind_name(FactorKind::Unknown)) == "unknown");
}

TEST_CASE("classify_factor agrees with a linear scan") {
    Rng rng(101);
    for (std::uint64_t p : {2u, 3u}) {
        Field fp = GF::standard(p, 1);
        const RatFun one = RatFun::constant(fp, 1);
        int seen_frob = 0, seen_indep = 0;
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t m = uniform(rng, 1, 2);
            std::vector<RatFun> c;
            for (std::size_t i = 0; i < m; ++i) {
                // sparse coefficients so Frobenius-type factors actually occur
                CPoly x = uniform(rng, 0, 1) ? CPoly::monomial(fp, fp->random_nonzero(rng), uniform(rng, 0, 2))
                                             : cpoly(rng, fp, 2);
                c.push_back(RatFun(x));
            }
            c.push_back(one);
            if (c[0].is_zero()) continue;
            for (const auto& [g, e] : factor_center(CenterPoly(fp, c))) {
                if (g.coeffs()[0].is_zero()) continue;
                const auto fc = classify_factor(g);
                REQUIRE(fc.kind != FactorKind::Unknown);
                const std::uint64_t dg = static_cast<std::uint64_t>(g.degree());
                std::uint64_t bound = dg;
                for (std::uint64_t i = 0; i < dg; ++i) bound *= p;
                std::uint64_t maxj = 0;
                for (const auto& x : g.coeffs())
                    maxj = std::max<std::uint64_t>(maxj, x.num().degree() < 0 ? 0 : x.num().degree());
                const auto oracle = brute_period(g, bound, maxj);
                if (fc.kind == FactorKind::FrobeniusType) {
                    ++seen_frob;
                    REQUIRE(oracle.has_value());
                    CHECK(fc.n == oracle->first);
                    CHECK(fc.j == oracle->second);
                } else {
                    ++seen_indep;
                    CHECK_FALSE(oracle.has_value());
                }
            }
        }
        CHECK(seen_frob > 0);
        CHECK(seen_indep > 0);
    }
}

TEST_CASE("power_up") {
    auto a = power_up({{1, 1}, {2, 1}}, 3);
    CHECK(a.a == 0);
    CHECK(a.factor == 1);
    CHECK(a.blocks.size() == 2);
    auto b = power_up({{1, 2}}, 2);
    CHECK(b.a == 1);
    REQUIRE(b.blocks.size() == 1);
    CHECK(b.blocks[0].n == 2);
    CHECK(b.blocks[0].m == 2);
    CHECK(power_up({{1, 3}}, 2).a == 2);
    // blocks merging to the same exponent
    auto c = power_up({{0, 2}, {0, 1}, {3, 1}}, 2);
    REQUIRE(c.blocks.size() == 2);
    CHECK(c.blocks[0].n == 0);
    CHECK(c.blocks[0].m == 3);
    CHECK(c.blocks[1].n == 6);
    // J^{p^a} is scalar
    for (std::uint64_t p : {2u, 3u}) {
        Field f = GF::standard(p, 2);
        for (std::size_t size = 1; size <= 4; ++size) {
            const std::vector<JordanBlock> blk{{2, size}};
            const auto pu = power_up(blk, p);
            const SkewMatrix Jp = mat_pow(jordan_matrix(f, blk), pu.factor, SkewElem::one(f));
            SkewMatrix S = skew_zero(f, size, size);
            for (std::size_t i = 0; i < size; ++i) S(i, i) = SkewElem::scalar(f, s_pow(f, 2 * pu.factor));
            CHECK(Jp == S);
            if (pu.a > 0) {
                const SkewMatrix Jq = mat_pow(jordan_matrix(f, blk), pu.factor / p, SkewElem::one(f));
                CHECK(Jq != S);
            }
        }
    }
}

TEST_CASE("jordan_form_central") {
    Field f = GF::standard(2, 2);
    SUBCASE("diagonal input") {
        const auto jf = jordan_form_central(jordan_matrix(f, {{1, 1}, {2, 1}, {2, 1}}));
        CHECK(jf.P == skew_identity(f, 3));
        CHECK(multiset(jf.blocks) == multiset({{1, 1}, {2, 1}, {2, 1}}));
    }
    SUBCASE("single block") {
        const auto jf = jordan_form_central(jordan_matrix(f, {{1, 2}}));
        REQUIRE(jf.blocks.size() == 1);
        CHECK(jf.blocks[0].size == 2);
        CHECK(jf.blocks[0].exponent == 1);
    }
    SUBCASE("non-central eigenvalue") {
        SkewMatrix A = skew_identity(f, 1);
        A(0, 0) = SkewElem::from_ore(OrePoly::frobenius(f, 1));
        CHECK_THROWS_AS(jordan_form_central(A), Error);
    }
    SUBCASE("random conjugates keep the block multiset") {
        Rng rng(7);
        const std::vector<std::vector<JordanBlock>> fixtures{
            {{1, 2}, {2, 1}}, {{0, 1}, {0, 2}}, {{1, 3}}, {{3, 1}, {1, 1}, {1, 2}}};
        for (const auto& fx : fixtures) {
            const SkewMatrix J = jordan_matrix(f, fx);
            for (int t = 0; t < 10; ++t) {
                const OreMatrix G = unimodular(rng, f, J.rows(), 3, 1);
                const SkewMatrix Gs = to_skew(G);
                const SkewMatrix A = Gs * J * matrix_inverse(Gs);
                const auto jf = jordan_form_central(A);
                CHECK(multiset(jf.blocks) == multiset(fx));
                CHECK(jf.P * A == jf.J * jf.P);
                CHECK(gauss_eliminate(jf.P).rank == J.rows());
            }
        }
    }
}

TEST_CASE("split_endomorphism on named inputs") {
    SUBCASE("[F] gives n = l") {
        for (unsigned l : {1u, 2u, 3u}) {
            Field f = GF::standard(2, l);
            OreMatrix A = ore_identity(f, 1);
            A(0, 0) = OrePoly::frobenius(f, 1);
            const auto sd = split_endomorphism(A);
            CHECK(sd.n == l);
            CHECK(sd.N1() == 0);
            REQUIRE(sd.blocks.size() == 1);
            CHECK(sd.blocks[0].n == 1);
            CHECK(sd.blocks[0].m == 1);
            CHECK(sd.P == skew_identity(f, 1));
            check_split_invariants(A, sd);
        }
    }
    SUBCASE("diag(F^l, F^l + 1) is already split") {
        for (unsigned l : {1u, 2u}) {
            Field f = GF::standard(3, l);
            OreMatrix A = ore_zero(f, 2, 2);
            A(0, 0) = OrePoly::frobenius(f, l);
            A(1, 1) = OrePoly::frobenius(f, l) + OrePoly::constant(f, 1);
            const auto sd = split_endomorphism(A);
            CHECK(sd.n == 1);
            CHECK(sd.P == skew_identity(f, 2));
            REQUIRE(sd.blocks.size() == 1);
            CHECK(sd.blocks[0].n == 1);
            CHECK(sd.blocks[0].m == 1);
            REQUIRE(sd.N1() == 1);
            CHECK(sd.A1(0, 0) == SkewElem::scalar(f, rf(f, {1, 1})));
            check_split_invariants(A, sd);
        }
    }
    SUBCASE("Jordan block needs power-up") {
        Field f = GF::standard(2, 1);
        OreMatrix A = ore_zero(f, 2, 2);
        A(0, 0) = A(1, 1) = OrePoly::frobenius(f, 1);
        A(0, 1) = OrePoly::constant(f, 1);
        const auto sd = split_endomorphism(A);
        CHECK(sd.n_before_power_up == 1);
        CHECK(sd.a == 1);
        CHECK(sd.n == 2);
        REQUIRE(sd.blocks.size() == 1);
        CHECK(sd.blocks[0].n == 2);
        CHECK(sd.blocks[0].m == 2);
        check_split_invariants(A, sd);
    }
    SUBCASE("independent only") {
        Field f = GF::standard(3, 1);
        OreMatrix A = ore_identity(f, 1);
        A(0, 0) = OrePoly::frobenius(f, 1) + OrePoly::constant(f, 1);
        const auto sd = split_endomorphism(A);
        CHECK(sd.N0() == 0);
        CHECK(sd.N1() == 1);
        CHECK(sd.r0.is_one());
        check_split_invariants(A, sd);
    }
    SUBCASE("non-dominant input") {
        Field f = GF::standard(2, 1);
        OreMatrix A = ore_zero(f, 2, 2);
        A(0, 0) = A(0, 1) = A(1, 0) = A(1, 1) = OrePoly::frobenius(f, 1);
        try {
            split_endomorphism(A);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotDominant);
        }
    }
}

TEST_CASE("split_endomorphism recovers r0 and r1 under conjugation") {
    Rng rng(2026);
    for (unsigned l : {1u, 2u}) {
        Field f = GF::standard(2, l);
        Field fp = f->prime_field();
        OreMatrix D = ore_zero(f, 2, 2);
        D(0, 0) = OrePoly::frobenius(f, l);
        D(1, 1) = OrePoly::frobenius(f, l) + OrePoly::constant(f, 1);
        for (int t = 0; t < 4; ++t) {
            const OreMatrix G = unimodular(rng, f, 2, 2, 1);
            const OreMatrix A = G * D * unimodular_inverse(G);
            const auto sd = split_endomorphism(A);
            CHECK(sd.n == 1);
            CHECK(sd.r0 == CenterPoly::linear(s_pow(fp, 1)));
            CHECK(sd.r1 == CenterPoly::linear(rf(fp, {1, 1})));
            check_split_invariants(A, sd);
        }
    }
    // a Jordan block next to an independent eigenvalue
    Field f = GF::standard(3, 1);
    OreMatrix D = ore_zero(f, 3, 3);
    D(0, 0) = D(1, 1) = OrePoly::frobenius(f, 1);
    D(0, 1) = OrePoly::constant(f, 1);
    D(2, 2) = OrePoly::frobenius(f, 1) + OrePoly::constant(f, 2);
    for (int t = 0; t < 3; ++t) {
        const OreMatrix G = unimodular(rng, f, 3, 3, 1);
        const OreMatrix A = G * D * unimodular_inverse(G);
        const auto sd = split_endomorphism(A);
        CHECK(sd.a == 1);
        CHECK(sd.n == 3);
        REQUIRE(sd.blocks.size() == 1);
        CHECK(sd.blocks[0].n == 3);
        CHECK(sd.blocks[0].m == 2);
        check_split_invariants(A, sd);
    }
}
