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

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "gadyn/gadyn.h"

namespace {

std::string fixture(const char* name) {
    std::ifstream in(std::string(GADYN_FIXTURES) + "/" + name);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string take(char* s) {
    std::string out = s ? s : "";
    gadyn_string_free(s);
    return out;
}

struct Problem {
    gadyn_problem* p = nullptr;
    explicit Problem(const std::string& text) { REQUIRE(gadyn_problem_parse(text.c_str(), &p) == GADYN_OK); }
    ~Problem() { gadyn_problem_free(p); }
};

}  // namespace

TEST_CASE("status names and null arguments") {
    CHECK(std::strcmp(gadyn_status_name(GADYN_OK), "ok") == 0);
    CHECK(std::strlen(gadyn_version()) > 0);
    gadyn_problem* p = nullptr;
    CHECK(gadyn_problem_parse(nullptr, &p) == GADYN_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(gadyn_last_error()) > 0);
    char* s = nullptr;
    CHECK(gadyn_problem_canonical(nullptr, &s) == GADYN_ERR_INVALID_ARGUMENT);
    CHECK(gadyn_classify(nullptr, nullptr, nullptr) == GADYN_ERR_INVALID_ARGUMENT);
    gadyn_problem_free(nullptr);
    gadyn_verdict_free(nullptr);
    gadyn_string_free(nullptr);
}

TEST_CASE("parse errors map to distinct codes") {
    gadyn_problem* p = nullptr;
    CHECK(gadyn_problem_parse("[field]\np = 2\n", &p) == GADYN_ERR_PARSE);
    CHECK(p == nullptr);
    CHECK(gadyn_problem_parse(fixture("reducible.gadyn").c_str(), &p) == GADYN_ERR_REDUCIBLE_MODULUS);
    CHECK(gadyn_problem_parse(fixture("not_dominant.gadyn").c_str(), &p) == GADYN_ERR_NOT_DOMINANT);
    CHECK(gadyn_problem_parse("[field]\np = 4\nell = 1\n[map]\nN = 1\nrow1 = [1]\n", &p) ==
          GADYN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("canonical text and digest") {
    Problem P(fixture("diag_ff.gadyn"));
    char* canon = nullptr;
    REQUIRE(gadyn_problem_canonical(P.p, &canon) == GADYN_OK);
    const std::string c = take(canon);
    Problem Q(c);
    char* canon2 = nullptr;
    REQUIRE(gadyn_problem_canonical(Q.p, &canon2) == GADYN_OK);
    CHECK(take(canon2) == c);
    char *d1 = nullptr, *d2 = nullptr;
    REQUIRE(gadyn_problem_digest(P.p, &d1) == GADYN_OK);
    REQUIRE(gadyn_problem_digest(Q.p, &d2) == GADYN_OK);
    CHECK(take(d1) == take(d2));
    size_t n = 0;
    CHECK(gadyn_problem_size(P.p, &n) == GADYN_OK);
    CHECK(n == 2);
}

TEST_CASE("classify and verify through handles") {
    struct Case {
        const char* file;
        char kind;
    };
    for (Case c : {Case{"identity.gadyn", 'B'}, Case{"diag_ff.gadyn", 'C'}, Case{"f_plus_one.gadyn", 'A'},
                   Case{"frobenius.gadyn", 'A'}}) {
        INFO(c.file);
        Problem P(fixture(c.file));
        gadyn_verdict* v = nullptr;
        REQUIRE(gadyn_classify(P.p, nullptr, &v) == GADYN_OK);
        char kind = 0;
        CHECK(gadyn_verdict_kind(v, &kind) == GADYN_OK);
        CHECK(kind == c.kind);
        char* cert = nullptr;
        REQUIRE(gadyn_verdict_certificate(v, &cert) == GADYN_OK);
        const std::string text = take(cert);
        char* summary = nullptr;
        REQUIRE(gadyn_verdict_summary(v, &summary) == GADYN_OK);
        CHECK(take(summary).find(std::string("verdict: ") + c.kind) == 0);
        char* report = nullptr;
        CHECK(gadyn_verify(P.p, text.c_str(), &report) == GADYN_OK);
        CHECK(take(report).find("verified") != std::string::npos);
        gadyn_verdict_free(v);
    }
}

TEST_CASE("verify failures") {
    Problem P(fixture("diag_ff.gadyn"));
    Problem other(fixture("diag_ff_other.gadyn"));
    gadyn_verdict* v = nullptr;
    REQUIRE(gadyn_classify(P.p, nullptr, &v) == GADYN_OK);
    char* cert = nullptr;
    REQUIRE(gadyn_verdict_certificate(v, &cert) == GADYN_OK);
    std::string text = take(cert);
    gadyn_verdict_free(v);

    char* report = nullptr;
    CHECK(gadyn_verify(other.p, text.c_str(), &report) == GADYN_ERR_DIGEST_MISMATCH);
    take(report);
    const auto pos = text.find("\nr = 1\n");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 7, "\nr = 3\n");
    CHECK(gadyn_verify(P.p, text.c_str(), &report) == GADYN_ERR_VERIFY_FAILED);
    CHECK(take(report).find("identity fails") != std::string::npos);
    CHECK(gadyn_verify(P.p, "not a certificate", nullptr) == GADYN_ERR_PARSE);
}

TEST_CASE("options and unknown classification") {
    Problem P(fixture("frobenius_f4.gadyn"));
    gadyn_options opt;
    gadyn_options_init(&opt);
    opt.max_power = 1;
    gadyn_verdict* v = nullptr;
    CHECK(gadyn_classify(P.p, &opt, &v) == GADYN_ERR_UNKNOWN_CLASSIFICATION);
    CHECK(v == nullptr);
    gadyn_options_init(&opt);
    opt.density_M = 12;
    opt.density_D = 2;
    REQUIRE(gadyn_classify(P.p, &opt, &v) == GADYN_OK);
    char* cert = nullptr;
    REQUIRE(gadyn_verdict_certificate(v, &cert) == GADYN_OK);
    const std::string text = take(cert);
    CHECK(text.find("\nM = 12\n") != std::string::npos);
    CHECK(text.find("\nD = 2\n") != std::string::npos);
    gadyn_verdict_free(v);
}

TEST_CASE("tools through the C API") {
    Problem F4(fixture("frobenius_f4.gadyn"));
    char* out = nullptr;
    REQUIRE(gadyn_tool(F4.p, "minpoly", nullptr, &out) == GADYN_OK);
    CHECK(take(out) == "x^2 + s\n");
    Problem L(fixture("f_plus_one.gadyn"));
    REQUIRE(gadyn_tool(L.p, "lambda-density", "M=512; index=1", &out) == GADYN_OK);
    CHECK(take(out).rfind("10/512\n", 0) == 0);
    CHECK(gadyn_tool(L.p, "lambda-density", "M", &out) == GADYN_ERR_INVALID_ARGUMENT);
    CHECK(gadyn_tool(L.p, "bogus", nullptr, &out) == GADYN_ERR_INVALID_ARGUMENT);
    CHECK(out == nullptr);
}
