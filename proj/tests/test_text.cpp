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

#include <doctest.h>

#include <random>
#include <string>

#include "generators.hpp"
#include "gadyn/text.hpp"

using namespace gadyn;
using namespace gadyn::text;

namespace {

const char* kIdentity = R"(# identity on G_a
[field]
p = 2
ell = 1

[map]
N = 1
row1 = [1]

[question]
d = 1
)";

const char* kDiagFF = R"([field]
p = 3
ell = 1
[map]
N = 2
row1 = [F, 0]
row2 = [0, F]
[question]
d = 1
)";

const char* kFPlusOne = R"([field]
p = 2
ell = 1
[map]
N = 1
row1 = [F + 1]
[question]
d = 1
density_M = 25
density_D = 3
lambda1 = t + 1 ; [1, 1]
lambda2 = t ; [0, 1]
)";

std::string replace(std::string s, const std::string& from, const std::string& to) {
    const auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, from.size(), to);
}

ErrorCode code_of(const std::string& text) {
    try {
        parse_problem(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("element and expression parsing") {
    Field f2 = GF::prime(2), f4 = GF::standard(2, 2), f5 = GF::prime(5);
    CHECK(parse_element(f5, "7") == 2);
    CHECK(parse_element(f5, "-1") == 4);
    CHECK(parse_element(f4, "[0,1]") == f4->from_digits(std::vector<std::uint64_t>{0, 1}));
    CHECK(parse_element(f4, "[1]") == 1);
    CHECK_THROWS_AS(parse_element(f4, "[1,0,1]"), Error);

    const OrePoly P = parse_ore(f4, "[0,1] + F^2 + 3*F");
    CHECK(P == OrePoly(f4, {f4->from_digits(std::vector<std::uint64_t>{0, 1}), 1, 1}));
    // F·a = a^p·F
    const Elem a = f4->from_digits(std::vector<std::uint64_t>{0, 1});
    CHECK(parse_ore(f4, "F*[0,1]") == OrePoly(f4, {0, f4->frob(a, 1)}));
    CHECK(parse_ore(f2, "(F + 1)^2") == OrePoly(f2, {1, 0, 1}));
    CHECK(parse_ore(f5, "-F") == OrePoly(f5, {0, 4}));
    CHECK_THROWS_AS(parse_ore(f2, "F / F"), Error);
    CHECK_THROWS_AS(parse_ore(f2, "x + 1"), Error);
    CHECK_THROWS_AS(parse_ore(f2, "F +"), Error);
    CHECK_THROWS_AS(parse_ore(f2, "(F"), Error);

    const MRatFun r = parse_mratfun(f2, "1 / (t + 1)");
    CHECK(r * (MRatFun::var(f2, 0) + MRatFun::constant(f2, 1)) == MRatFun::constant(f2, 1));
    CHECK(parse_mratfun(f5, "t1*t2^3 - 2") ==
          MRatFun::var(f5, 0) * pow(MRatFun::var(f5, 1), 3) - MRatFun::constant(f5, 2));
    CHECK_THROWS_AS(parse_mratfun(f2, "t7"), Error);
    CHECK_THROWS_AS(parse_mratfun(f2, "1 / 0"), Error);
}

TEST_CASE("to_string output parses back to the same value") {
    Rng rng(41);
    for (auto [p, k] : {std::pair{2u, 1u}, {2u, 3u}, {3u, 2u}, {5u, 1u}}) {
        Field f = GF::standard(p, k);
        for (int i = 0; i < 50; ++i) {
            const OrePoly P = testgen::ore(rng, f, 5);
            CHECK(parse_ore(f, P.to_string()) == P);
            const Elem e = f->random(rng);
            CHECK(parse_element(f, f->to_string(e)) == e);
            MRatFun x = MRatFun::constant(f, f->random_nonzero(rng));
            for (int j = 0; j < 3; ++j) {
                const MRatFun v = MRatFun::var(f, testgen::uniform(rng, 0, 2));
                x = x * v + MRatFun::constant(f, f->random(rng));
            }
            if (i % 2) x = x / (MRatFun::var(f, 0) + MRatFun::constant(f, f->random_nonzero(rng)));
            CHECK(parse_mratfun(f, x.to_string()) == x);
        }
    }
}

TEST_CASE("split_list respects nesting") {
    CHECK(split_list("[]").empty());
    CHECK(split_list("[[1,1]*F, F]") == std::vector<std::string>{"[1,1]*F", "F"});
    CHECK(split_list("[ (t + 1) / (t), [[1,0]] ]") == std::vector<std::string>{"(t + 1) / (t)", "[[1,0]]"});
    CHECK_THROWS_AS(split_list("1, 2"), Error);
    CHECK_THROWS_AS(split_list("[1,,2]"), Error);
    CHECK_THROWS_AS(split_list("[[1,2]"), Error);
}

TEST_CASE("problem files are canonicalized idempotently") {
    for (const char* src : {kIdentity, kDiagFF, kFPlusOne}) {
        const Problem P = parse_problem(src);
        const std::string canon = serialize_problem(P);
        const Problem Q = parse_problem(canon);
        CHECK(serialize_problem(Q) == canon);
        CHECK(Q.A == P.A);
        CHECK(problem_digest(Q) == problem_digest(P));
    }
    const Problem P = parse_problem(kFPlusOne);
    CHECK(P.d == 1);
    CHECK(*P.density_M == 25);
    CHECK(*P.density_D == 3);
    REQUIRE(P.lambdas.size() == 2);
    CHECK(P.lambdas[0].c == std::vector<Elem>{1, 1});
    CHECK(serialize_problem(P).find("modulus = [0, 1]") != std::string::npos);

    const std::string with_fset = std::string(kDiagFF) + "fset1 = [0, 0] ; [[t, 1 / (t + 1)]] ; [1] ; [[t^3, 0]]\n";
    const Problem F = parse_problem(with_fset);
    REQUIRE(F.fsets.size() == 1);
    CHECK(F.fsets[0].ks == std::vector<std::uint64_t>{1});
    CHECK(serialize_problem(parse_problem(serialize_problem(F))) == serialize_problem(F));

    // extension field with an explicit modulus and element literals
    const char* ext = "[field]\np = 2\nell = 2\nmodulus = [1,1,1]\n[map]\nN = 1\nrow1 = [[0,1]*F + [1,1]]\n";
    const Problem E = parse_problem(ext);
    CHECK(E.field->order() == 4);
    CHECK(serialize_problem(parse_problem(serialize_problem(E))) == serialize_problem(E));
}

TEST_CASE("problem validation errors") {
    CHECK(code_of(replace(kIdentity, "ell = 1", "ell = 1\ncolour = red")) == ErrorCode::Parse);
    CHECK(code_of(replace(kIdentity, "[question]", "[questions]")) == ErrorCode::Parse);
    CHECK(code_of(replace(kIdentity, "row1 = [1]", "row1 = [1, 0]")) == ErrorCode::Parse);
    CHECK(code_of(replace(kIdentity, "row1 = [1]", "row2 = [1]")) == ErrorCode::Parse);
    CHECK(code_of(replace(kIdentity, "d = 1", "d = one")) == ErrorCode::Parse);
    CHECK(code_of(replace(kIdentity, "d = 1", "d = 1\nd = 2")) == ErrorCode::Parse);
    CHECK(code_of(replace(kIdentity, "d = 1", "lambda2 = t ; [0, 1]")) == ErrorCode::Parse);
    CHECK(code_of(replace(kIdentity, "d = 1", "lambda1 = t ; [1, 0]")) == ErrorCode::Parse);
    // x^2 + 1 = (x + 1)^2 over F_2
    CHECK(code_of(replace(kIdentity, "ell = 1", "ell = 2\nmodulus = [1, 0, 1]")) == ErrorCode::ReducibleModulus);
    CHECK_NOTHROW(parse_problem(replace(kIdentity, "row1 = [1]", "row1 = [F]")));
    CHECK(code_of(replace(kDiagFF, "row2 = [0, F]", "row2 = [0, 0]")) == ErrorCode::NotDominant);
    CHECK(code_of(replace(kDiagFF, "row1 = [F, 0]", "row1 = [F, F]\nrow2 = [F, F]\n#")) == ErrorCode::Parse);
}

TEST_CASE("digest is FNV-1a") {
    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("certificates round-trip and re-verify from file") {
    for (const char* src : {kIdentity, kDiagFF, kFPlusOne}) {
        const Problem P = parse_problem(src);
        DensityOptions dopt;
        dopt.M = P.density_M.value_or(25);
        dopt.D = P.density_D.value_or(3);
        ClassifyOptions opt;
        opt.density = dopt;
        const Verdict v = classify(P.A, P.d, opt);
        const std::string cert = serialize_certificate(P, v, dopt);
        const auto ver = verify_certificate_file(P, cert);
        INFO(cert);
        INFO(ver.report);
        CHECK(ver.status == VerifyStatus::Ok);
        const CertificateFile cf = parse_certificate(P.field, cert);
        CHECK(cf.kind == v.kind);
        CHECK(cf.digest == problem_digest(P));
    }
    const Problem I = parse_problem(kIdentity);
    CHECK(parse_certificate(I.field, serialize_certificate(I, classify(I.A, 1), {})).kind == VerdictKind::B);
}

TEST_CASE("tampering is detected") {
    const Problem P = parse_problem(kDiagFF);
    const Verdict v = classify(P.A, P.d);
    REQUIRE(v.kind == VerdictKind::C);
    const std::string cert = serialize_certificate(P, v, {});
    CHECK(cert.find("r = 1\n") != std::string::npos);

    const auto bad_r = verify_certificate_file(P, replace(cert, "\nr = 1\n", "\nr = 2\n"));
    CHECK(bad_r.status == VerifyStatus::Failed);
    CHECK(bad_r.report.find("identity fails") != std::string::npos);

    const Problem other = parse_problem(replace(kDiagFF, "row2 = [0, F]", "row2 = [0, F^2]"));
    CHECK(verify_certificate_file(other, cert).status == VerifyStatus::DigestMismatch);

    CHECK_THROWS_AS(parse_certificate(P.field, replace(cert, "verdict = C", "verdict = D")), Error);
    CHECK_THROWS_AS(parse_certificate(P.field, cert + "\n[extra]\nx = 1\n"), Error);

    const Problem A = parse_problem(kFPlusOne);
    DensityOptions dopt;
    const std::string certA = serialize_certificate(A, classify(A.A, 1), dopt);
    const auto pos = certA.find("alpha = ");
    REQUIRE(pos != std::string::npos);
    const std::string line = certA.substr(pos, certA.find('\n', pos) - pos);
    // the constant point has a finite orbit
    const auto bad_alpha = verify_certificate_file(A, replace(certA, line, "alpha = [1]"));
    CHECK(bad_alpha.status == VerifyStatus::Failed);
}

TEST_CASE("tools") {
    Field f4 = GF::standard(2, 2);
    const std::string ext = "[field]\np = 2\nell = 2\n[map]\nN = 1\nrow1 = [F]\n";
    const Problem P = parse_problem(ext);
    CHECK(P.field == f4);
    CHECK(run_tool("minpoly", P, {}) == "x^2 + s\n");
    // tilde of F over F_4: the row for F^0 picks part 1, the row for F^1 picks part 0 times s
    const std::string t = run_tool("tilde", P, {});
    CHECK(t == "[0, [1,0]]\n[s, 0]\n");

    const Problem L = parse_problem(kFPlusOne);
    const std::string ld = run_tool("lambda-density", L, {{"M", "512"}});
    CHECK(ld.rfind("10/512\n", 0) == 0);
    const std::string control = run_tool("lambda-density", L, {{"M", "512"}, {"index", "2"}});
    INFO(control);
    CHECK(control.rfind("512/512\n", 0) == 0);
    CHECK_THROWS_AS(run_tool("lambda-density", L, {{"index", "3"}}), Error);

    const std::string orb = run_tool("orbit", L, {{"alpha", "[t]"}, {"M", "3"}});
    CHECK(orb == "0 = [t1]\n1 = [t1^2 + t1]\n2 = [t1^4 + t1]\n");
    const std::string den = run_tool("density", L, {{"alpha", "[1 / t]"}});
    CHECK(den.rfind("outcome = dense-up-to-D\n", 0) == 0);

    const std::string sp = run_tool("split", parse_problem(kDiagFF), {});
    CHECK(sp.rfind("n = 1\n", 0) == 0);
    CHECK(sp.find("blocks = [[1,2]]") != std::string::npos);

    const std::string ind = run_tool("independence", L, {{"gammas", "[t, t^2]"}, {"D", "2"}, {"k", "1"}});
    CHECK(ind.find("independent = no") != std::string::npos);
    CHECK(run_tool("independence", L, {{"gammas", "[1 / t, 1 / (t + 1)]"}, {"D", "4"}})
              .find("independent = yes") != std::string::npos);

    const Problem Fs = parse_problem(std::string(kDiagFF) + "fset1 = [0, 0] ; [[t, 0]] ; [1] ; []\n");
    const std::string fs = run_tool("fset", Fs, {{"B", "3"}});
    CHECK(fs.rfind("count = 3\n", 0) == 0);
    CHECK(fs.find("[t1^3, 0]") != std::string::npos);

    CHECK_THROWS_AS(run_tool("nope", P, {}), Error);
    CHECK_THROWS_AS(run_tool("minpoly", P, {{"x", "1"}}), Error);
}
