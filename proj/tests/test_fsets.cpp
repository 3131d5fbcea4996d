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


#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "gadyn/error.hpp"
#include "gadyn/fsets.hpp"

using namespace gadyn;
using namespace gadyn::testgen;

namespace {

MRatFun t(Field f) { return MRatFun::var(f, 0); }
MRatFun k(Field f, Elem c) { return MRatFun::constant(f, c); }

// (lambda^m) by repeated multiplication, compared coefficientwise against every tuple in the box
std::vector<std::vector<std::uint64_t>> brute_lambda(const LambdaEqInstance& inst, std::uint64_t m, std::uint64_t box) {
    Field f = inst.lambda.field();
    MRatFun L = k(f, 1);
    for (std::uint64_t i = 0; i < m; ++i) L *= inst.lambda;
    const std::size_t r = inst.c.size() - 1;
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> n(r, 1);
    while (true) {
        MRatFun rhs = k(f, inst.c[0]);
        for (std::size_t i = 0; i < r; ++i) rhs += pow(t(f), n[i]).scaled(inst.c[i + 1]);
        if (rhs == L) out.push_back(n);
        std::size_t i = 0;
        while (i < r && ++n[i] > box) n[i++] = 1;
        if (i == r) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("fset_enumerate") {
    Field f = GF::prime(2);
    FSetDescriptor one{{MRatFun(f)}, {{k(f, 1)}}, {1}, {}, std::nullopt};
    const auto a = fset_enumerate(one, 5, 0);
    REQUIRE(a.size() == 1);
    CHECK(a[0][0] == k(f, 1));
    FSetDescriptor tt{{MRatFun(f)}, {{t(f)}}, {1}, {}, std::nullopt};
    const auto b = fset_enumerate(tt, 3, 0);
    REQUIRE(b.size() == 3);
    CHECK(b[0][0] == pow(t(f), 2));
    CHECK(b[1][0] == pow(t(f), 4));
    CHECK(b[2][0] == pow(t(f), 8));
    FSetLimits z;
    z.include_zero = true;
    CHECK(fset_enumerate(tt, 3, 0, z).size() == 4);
    // four exponent tuples; in characteristic 2 they give only two distinct points
    FSetDescriptor two{{MRatFun(f)}, {{t(f)}, {t(f) + k(f, 1)}}, {1, 1}, {}, std::nullopt};
    CHECK(fset_enumerate(two, 2, 0).size() == 2);
    FSetDescriptor inv{{MRatFun(f)}, {{t(f)}, {t(f).inv()}}, {1, 1}, {}, std::nullopt};
    const auto c = fset_enumerate(inv, 2, 0);
    CHECK(c.size() == 4);
    // every element lies in the module generated by the gammas
    FpFModule M{{{t(f)}, {t(f).inv()}}};
    for (const auto& x : c) CHECK(module_contains(M, x, 2).found);
    FSetLimits tiny;
    tiny.cap = 3;
    CHECK_THROWS_AS(fset_enumerate(inv, 2, 0, tiny), Error);
}

TEST_CASE("module_contains") {
    Field f = GF::prime(3);
    FpFModule M{{{t(f)}, {t(f) * t(f)}}};
    CHECK(module_contains(M, {t(f)}, 0).found);
    const auto r = module_contains(M, {pow(t(f), 3) + t(f) * t(f)}, 1);
    CHECK(r.found);
    CHECK(r.P[0] == std::vector<Elem>{0, 1});
    CHECK(r.P[1] == std::vector<Elem>{1, 0});
    for (unsigned b : {0u, 2u, 4u}) {
        const auto no = module_contains(FpFModule{{{t(f)}}}, {t(f).inv()}, b);
        CHECK_FALSE(no.found);
        CHECK(no.label == "not found within bound");
    }
    // scalars outside F_p are not in an F_p[F]-module generated by t
    Field f4 = GF::standard(2, 2);
    CHECK_FALSE(module_contains(FpFModule{{{t(f4)}}}, {t(f4).scaled(2)}, 3).found);
}

TEST_CASE("brute_force_intersection") {
    Field f = GF::prime(2);
    FpFModule G{{{t(f), pow(t(f), 2)}}};
    Equation curve{{{{0, 1}, k(f, 1)}, {{2, 0}, k(f, 1)}}};  // x2 + x1^2 (char 2)
    const auto r = brute_force_intersection({curve}, G, 2);
    CHECK(r.solutions.size() == 8);  // the full cyclic module at bound 2
    Equation x1{{{{1}, k(f, 1)}}};
    const auto r2 = brute_force_intersection({x1}, FpFModule{{{t(f)}}}, 3);
    REQUIRE(r2.solutions.size() == 1);
    CHECK(r2.solutions[0].point[0].is_zero());
    Equation lin{{{{1}, k(f, 1)}, {{0}, pow(t(f), 2)}}};  // x1 + t^2
    const auto r3 = brute_force_intersection({lin}, FpFModule{{{t(f)}}}, 2);
    REQUIRE(r3.solutions.size() == 1);
    CHECK(r3.solutions[0].signature == "g1:{1}");
    CHECK(r3.patterns.at("g1:{1}") == 1);
}

TEST_CASE("solve_lambda_eq") {
    Field f2 = GF::prime(2);
    LambdaEqInstance a{t(f2) + k(f2, 1), {1, 1}};
    CHECK(solve_lambda_eq(a, 4) == std::vector<std::vector<std::uint64_t>>{{4}});
    LambdaEqInstance b{t(f2), {0, 1}};
    for (std::uint64_t m : {1u, 5u, 9u}) CHECK(solve_lambda_eq(b, m) == std::vector<std::vector<std::uint64_t>>{{m}});
    LambdaEqInstance c{t(f2) + k(f2, 1), {0, 1}};
    CHECK(solve_lambda_eq(c, 3).empty());
    CHECK_THROWS_AS(solve_lambda_eq(LambdaEqInstance{MRatFun(f2), {1, 1}}, 1), Error);
    // against a brute-force box search, including cancelling terms
    Field f3 = GF::prime(3);
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const MRatFun lam = uniform(rng, 0, 1) ? t(f3) + k(f3, f3->random(rng)) : pow(t(f3), uniform(rng, 1, 2));
        const std::size_t r = uniform(rng, 1, 3);
        std::vector<Elem> cs{f3->random(rng)};
        for (std::size_t i = 0; i < r; ++i) cs.push_back(f3->random_nonzero(rng));
        const LambdaEqInstance inst{lam, cs};
        const std::uint64_t m = uniform(rng, 1, 4);
        const std::uint64_t deg = m * 2;
        const auto got = solve_lambda_eq(inst, m), want = brute_lambda(inst, m, deg);
        INFO("lambda = ", lam.to_string(), " m = ", m, " c = ", cs.size(), " got ", got.size(), " want ", want.size());
        CHECK(got == want);
    }
}

TEST_CASE("lambda_density") {
    Field f2 = GF::prime(2);
    const LambdaEqInstance a{t(f2) + k(f2, 1), {1, 1}};
    const auto d = lambda_density(a, 512);
    std::vector<std::uint64_t> expect{1};
    for (std::uint64_t e = 2; e <= 512; e *= 2) expect.push_back(e);
    CHECK(d.solvable == expect);
    CHECK(d.solvable.size() == 10);
    CHECK(d.density == doctest::Approx(10.0 / 512));
    double prev = 1.0;
    for (std::uint64_t M : {64u, 128u, 256u, 512u}) {
        const auto x = lambda_density(a, M);
        CHECK(x.density <= prev);
        prev = x.density;
        for (std::uint64_t m = 1; m <= std::min<std::uint64_t>(M, 40); ++m)
            CHECK(std::count(x.solvable.begin(), x.solvable.end(), m) == !solve_lambda_eq(a, m).empty());
    }
    const auto ctrl = lambda_density(LambdaEqInstance{t(f2), {0, 1}}, 100);
    CHECK(ctrl.density == 1.0);
    const auto q = lambda_density(LambdaEqInstance{t(f2) * t(f2) + t(f2) + k(f2, 1), {1, 1}}, 256);
    CHECK(q.density < 0.05);
    const std::string csv = d.csv();
    CHECK(csv.rfind("m,solvable,tuple\n1,1,1\n2,1,2\n3,0,\n", 0) == 0);
}

TEST_CASE("vandermonde_check") {
    Field f5 = GF::prime(5);
    CHECK(vandermonde_check(f5, {1, 2}, 1));
    CHECK(vandermonde_check(f5, {3}, 7));
    CHECK_THROWS_AS(vandermonde_check(f5, {1, 1}, 1), Error);
    CHECK_THROWS_AS(vandermonde_check(f5, {0, 1}, 1), Error);
    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        Field f = GF::standard(uniform(rng, 0, 1) ? 2 : 3, static_cast<unsigned>(uniform(rng, 2, 4)));
        const std::size_t r = uniform(rng, 1, std::min<std::size_t>(4, f->order() - 1));
        std::set<Elem> s;
        while (s.size() < r) s.insert(f->random_nonzero(rng));
        CHECK(vandermonde_check(f, std::vector<Elem>(s.begin(), s.end()), uniform(rng, 0, 50)));
    }
}
