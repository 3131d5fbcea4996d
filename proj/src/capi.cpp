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

#include "gadyn/gadyn.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <new>
#include <string>

#include "gadyn/text.hpp"

struct gadyn_problem {
    gadyn::text::Problem problem;
};

struct gadyn_verdict {
    gadyn::Verdict verdict;
    std::string certificate;
    std::string summary;
};

namespace {

thread_local std::string g_last_error;

gadyn_status status_of(gadyn::ErrorCode c) {
    using gadyn::ErrorCode;
    switch (c) {
        case ErrorCode::InvalidArgument: return GADYN_ERR_INVALID_ARGUMENT;
        case ErrorCode::DivisionByZero: return GADYN_ERR_DIVISION_BY_ZERO;
        case ErrorCode::ReducibleModulus: return GADYN_ERR_REDUCIBLE_MODULUS;
        case ErrorCode::NotDominant: return GADYN_ERR_NOT_DOMINANT;
        case ErrorCode::NotInvertible: return GADYN_ERR_NOT_INVERTIBLE;
        case ErrorCode::Capacity: return GADYN_ERR_CAPACITY;
        case ErrorCode::UnknownClassification: return GADYN_ERR_UNKNOWN_CLASSIFICATION;
        case ErrorCode::Parse: return GADYN_ERR_PARSE;
    }
    return GADYN_ERR_INTERNAL;
}

template <class Fn>
gadyn_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const gadyn::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return GADYN_ERR_CAPACITY;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return GADYN_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GADYN_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return GADYN_ERR_INTERNAL;
    }
}

gadyn_status null_argument(const char* what) {
    g_last_error = std::string("null argument: ") + what;
    return GADYN_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::map<std::string, std::string> parse_args(const char* args) {
    std::map<std::string, std::string> out;
    if (!args) return out;
    std::string cur;
    auto flush = [&] {
        const auto b = cur.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
            cur.clear();
            return;
        }
        const auto eq = cur.find('=');
        if (eq == std::string::npos) gadyn::fail(gadyn::ErrorCode::InvalidArgument, "expected key=value, got '" + cur + "'");
        auto strip = [](std::string s) {
            const auto l = s.find_first_not_of(" \t\r");
            const auto r = s.find_last_not_of(" \t\r");
            return l == std::string::npos ? std::string() : s.substr(l, r - l + 1);
        };
        out[strip(cur.substr(0, eq))] = strip(cur.substr(eq + 1));
        cur.clear();
    };
    for (const char* p = args; *p; ++p) {
        if (*p == ';' || *p == '\n') flush();
        else cur += *p;
    }
    flush();
    return out;
}

}  // namespace

extern "C" {

const char* gadyn_version(void) { return gadyn::text::tool_version(); }

const char* gadyn_status_name(gadyn_status status) {
    switch (status) {
        case GADYN_OK: return "ok";
        case GADYN_ERR_INVALID_ARGUMENT: return "invalid argument";
        case GADYN_ERR_PARSE: return "parse error";
        case GADYN_ERR_REDUCIBLE_MODULUS: return "reducible modulus";
        case GADYN_ERR_NOT_DOMINANT: return "map not dominant";
        case GADYN_ERR_NOT_INVERTIBLE: return "not invertible";
        case GADYN_ERR_DIVISION_BY_ZERO: return "division by zero";
        case GADYN_ERR_CAPACITY: return "capacity exceeded";
        case GADYN_ERR_UNKNOWN_CLASSIFICATION: return "unknown classification";
        case GADYN_ERR_DIGEST_MISMATCH: return "digest mismatch";
        case GADYN_ERR_VERIFY_FAILED: return "verification failed";
        case GADYN_ERR_INTERNAL: return "internal error";
    }
    return "unrecognized status";
}

const char* gadyn_last_error(void) { return g_last_error.c_str(); }

void gadyn_string_free(char* s) { std::free(s); }

void gadyn_options_init(gadyn_options* opt) {
    if (!opt) return;
    const gadyn::DensityOptions dflt;
    const gadyn::SplitLimits lim;
    opt->d = 0;
    opt->density_M = 0;
    opt->density_D = 0;
    opt->density_trials = dflt.trials;
    opt->seed = dflt.seed;
    opt->max_power = lim.max_power;
}

gadyn_status gadyn_problem_parse(const char* text, gadyn_problem** out) {
    if (!text) return null_argument("text");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        auto p = std::make_unique<gadyn_problem>();
        p->problem = gadyn::text::parse_problem(text);
        *out = p.release();
        return GADYN_OK;
    });
}

void gadyn_problem_free(gadyn_problem* problem) { delete problem; }

gadyn_status gadyn_problem_canonical(const gadyn_problem* problem, char** out) {
    if (!problem) return null_argument("problem");
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = dup_string(gadyn::text::serialize_problem(problem->problem));
        return GADYN_OK;
    });
}

gadyn_status gadyn_problem_digest(const gadyn_problem* problem, char** out) {
    if (!problem) return null_argument("problem");
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = dup_string(gadyn::text::problem_digest(problem->problem));
        return GADYN_OK;
    });
}

gadyn_status gadyn_problem_size(const gadyn_problem* problem, size_t* n) {
    if (!problem) return null_argument("problem");
    if (!n) return null_argument("n");
    *n = problem->problem.A.rows();
    return GADYN_OK;
}

gadyn_status gadyn_classify(const gadyn_problem* problem, const gadyn_options* opt, gadyn_verdict** out) {
    if (!problem) return null_argument("problem");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        gadyn_options o;
        gadyn_options_init(&o);
        if (opt) o = *opt;
        const auto& P = problem->problem;
        gadyn::ClassifyOptions co;
        co.split.max_power = o.max_power;
        co.density.M = o.density_M ? o.density_M : P.density_M.value_or(co.density.M);
        co.density.D = o.density_D ? o.density_D : P.density_D.value_or(co.density.D);
        co.density.trials = o.density_trials ? o.density_trials : co.density.trials;
        co.density.seed = o.seed;
        const unsigned d = o.d ? o.d : P.d;
        auto v = std::make_unique<gadyn_verdict>();
        v->verdict = gadyn::classify(P.A, d, co);
        v->certificate = gadyn::text::serialize_certificate(P, v->verdict, co.density);
        v->summary = gadyn::text::describe_verdict(v->verdict);
        *out = v.release();
        return GADYN_OK;
    });
}

void gadyn_verdict_free(gadyn_verdict* verdict) { delete verdict; }

gadyn_status gadyn_verdict_kind(const gadyn_verdict* verdict, char* kind) {
    if (!verdict) return null_argument("verdict");
    if (!kind) return null_argument("kind");
    *kind = gadyn::verdict_name(verdict->verdict.kind)[0];
    return GADYN_OK;
}

gadyn_status gadyn_verdict_certificate(const gadyn_verdict* verdict, char** out) {
    if (!verdict) return null_argument("verdict");
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = dup_string(verdict->certificate);
        return GADYN_OK;
    });
}

gadyn_status gadyn_verdict_summary(const gadyn_verdict* verdict, char** out) {
    if (!verdict) return null_argument("verdict");
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = dup_string(verdict->summary);
        return GADYN_OK;
    });
}

gadyn_status gadyn_verify(const gadyn_problem* problem, const char* certificate, char** report) {
    if (!problem) return null_argument("problem");
    if (!certificate) return null_argument("certificate");
    if (report) *report = nullptr;
    return guarded([&] {
        const auto r = gadyn::text::verify_certificate_file(problem->problem, certificate);
        if (report) *report = dup_string(r.report);
        switch (r.status) {
            case gadyn::text::VerifyStatus::Ok: return GADYN_OK;
            case gadyn::text::VerifyStatus::DigestMismatch:
                g_last_error = "certificate digest does not match the problem";
                return GADYN_ERR_DIGEST_MISMATCH;
            case gadyn::text::VerifyStatus::Failed: break;
        }
        g_last_error = "certificate identity does not hold";
        return GADYN_ERR_VERIFY_FAILED;
    });
}

gadyn_status gadyn_tool(const gadyn_problem* problem, const char* name, const char* args, char** out) {
    if (!problem) return null_argument("problem");
    if (!name) return null_argument("name");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        *out = dup_string(gadyn::text::run_tool(name, problem->problem, parse_args(args)));
        return GADYN_OK;
    });
}

}  // extern "C"
