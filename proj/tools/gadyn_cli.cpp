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

// Command-line front end. Links only the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gadyn/gadyn.h"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUnknown = 2, kDigest = 3, kVerify = 4 };

struct StringDeleter {
    void operator()(char* s) const { gadyn_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ProblemDeleter {
    void operator()(gadyn_problem* p) const { gadyn_problem_free(p); }
};
struct VerdictDeleter {
    void operator()(gadyn_verdict* v) const { gadyn_verdict_free(v); }
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int report(const char* stage, gadyn_status s) {
    std::cerr << "gadyn: " << stage << ": " << gadyn_status_name(s) << ": " << gadyn_last_error() << "\n";
    if (s == GADYN_ERR_UNKNOWN_CLASSIFICATION) return kUnknown;
    if (s == GADYN_ERR_DIGEST_MISMATCH) return kDigest;
    if (s == GADYN_ERR_VERIFY_FAILED) return kVerify;
    return kInvalid;
}

int load_problem(const std::string& path, std::unique_ptr<gadyn_problem, ProblemDeleter>& out) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "gadyn: cannot read problem file " << path << "\n";
        return kInvalid;
    }
    gadyn_problem* p = nullptr;
    if (gadyn_status s = gadyn_problem_parse(text.c_str(), &p); s != GADYN_OK) return report("parse problem", s);
    out.reset(p);
    return kOk;
}

struct ClassifyArgs {
    std::string problem, out;
    unsigned d = 0, D = 0;
    std::size_t M = 0;
    std::uint64_t seed = 1;
    std::uint64_t max_power = 0;
};

int cmd_classify(const ClassifyArgs& a) {
    std::unique_ptr<gadyn_problem, ProblemDeleter> prob;
    if (int rc = load_problem(a.problem, prob)) return rc;
    gadyn_options opt;
    gadyn_options_init(&opt);
    opt.d = a.d;
    opt.density_M = a.M;
    opt.density_D = a.D;
    opt.seed = a.seed;
    if (a.max_power) opt.max_power = a.max_power;
    gadyn_verdict* raw = nullptr;
    if (gadyn_status s = gadyn_classify(prob.get(), &opt, &raw); s != GADYN_OK) return report("classify", s);
    std::unique_ptr<gadyn_verdict, VerdictDeleter> v(raw);
    char* cert = nullptr;
    char* summary = nullptr;
    if (gadyn_status s = gadyn_verdict_certificate(v.get(), &cert); s != GADYN_OK) return report("certificate", s);
    OwnedString cert_owned(cert);
    if (gadyn_status s = gadyn_verdict_summary(v.get(), &summary); s != GADYN_OK) return report("summary", s);
    OwnedString summary_owned(summary);
    if (a.out.empty()) {
        std::cout << cert;
        return kOk;
    }
    std::ofstream f(a.out, std::ios::binary);
    if (!(f << cert)) {
        std::cerr << "gadyn: cannot write " << a.out << "\n";
        return kInvalid;
    }
    std::cout << summary;
    return kOk;
}

int cmd_verify(const std::string& cert_path, const std::string& problem_path) {
    std::unique_ptr<gadyn_problem, ProblemDeleter> prob;
    if (int rc = load_problem(problem_path, prob)) return rc;
    std::string cert;
    if (!read_file(cert_path, cert)) {
        std::cerr << "gadyn: cannot read certificate file " << cert_path << "\n";
        return kInvalid;
    }
    char* rep = nullptr;
    const gadyn_status s = gadyn_verify(prob.get(), cert.c_str(), &rep);
    OwnedString rep_owned(rep);
    if (rep) std::cout << rep;
    return s == GADYN_OK ? kOk : report("verify", s);
}

int cmd_tool(const std::string& name, const std::string& problem_path, const std::vector<std::string>& args) {
    std::unique_ptr<gadyn_problem, ProblemDeleter> prob;
    if (int rc = load_problem(problem_path, prob)) return rc;
    std::string joined;
    for (const auto& a : args) {
        if (a.find('=') == std::string::npos) {
            std::cerr << "gadyn: tool arguments are key=value, got '" << a << "'\n";
            return kInvalid;
        }
        joined += a + "\n";
    }
    char* out = nullptr;
    if (gadyn_status s = gadyn_tool(prob.get(), name.c_str(), joined.c_str(), &out); s != GADYN_OK)
        return report(("tools " + name).c_str(), s);
    OwnedString owned(out);
    std::cout << out;
    return kOk;
}

int cmd_canonical(const std::string& problem_path) {
    std::unique_ptr<gadyn_problem, ProblemDeleter> prob;
    if (int rc = load_problem(problem_path, prob)) return rc;
    char* text = nullptr;
    if (gadyn_status s = gadyn_problem_canonical(prob.get(), &text); s != GADYN_OK) return report("canonical", s);
    OwnedString owned(text);
    std::cout << text;
    return kOk;
}

const char* kToolHelp =
    "Tools (arguments are key=value):\n"
    "  minpoly                          minimal polynomial of A over F_p(s), s = F^ell\n"
    "  tilde                            the matrix of A over F_q(s) in the basis 1, F, ..., F^(ell-1)\n"
    "  split [max_power=N]              splitting data, P, A0 and A1\n"
    "  orbit alpha=[..] [M=5]           lines 'k = [x1, ...]' for k < M\n"
    "  density alpha=[..] [M] [D] [seed] [d]\n"
    "                                   outcome = dense-up-to-D | found-polynomial | inconclusive\n"
    "  lambda-density [index=1] [M=512] [csv=1]\n"
    "                                   first line 'count/M'; csv=1 appends 'm,solvable,tuple' rows\n"
    "                                   with solvable 0 or 1 and tuple space separated\n"
    "  fset [index=1] [B=3] [bound=0] [cap] [zero=1]\n"
    "                                   'count = n' then one point per line\n"
    "  independence gammas=[..] [deltas=[..]] [D=4] [k=2] [seed=1]\n"
    "                                   'independent = yes|no', relation when dependent\n"
    "Exit codes: 0 ok, 1 invalid input, 2 unknown classification, 3 digest mismatch, 4 verification failure.\n";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("gadyn: dense orbits of group endomorphisms of G_a^N (") + gadyn_version() + ")"};
    app.footer(kToolHelp);
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "decide verdict A, B or C and write a certificate");
    classify->add_option("problem", ca.problem, "problem file")->required();
    classify->add_option("--d", ca.d, "transcendence degree d (default: from the problem)");
    classify->add_option("--density-M", ca.M, "orbit points for the density check");
    classify->add_option("--density-D", ca.D, "degree bound for the density check");
    classify->add_option("--seed", ca.seed, "seed for the density trials")->capture_default_str();
    classify->add_option("--bound-power", ca.max_power, "largest eigenvalue period tested exactly");
    classify->add_option("--out", ca.out, "certificate file (default: certificate on stdout)");

    std::string cert_path, verify_problem;
    auto* verify = app.add_subcommand("verify", "re-check a certificate against a problem file");
    verify->add_option("certificate", cert_path, "certificate file")->required();
    verify->add_option("problem", verify_problem, "problem file")->required();

    std::string tool_name, tool_problem;
    std::vector<std::string> tool_args;
    auto* tools = app.add_subcommand("tools", "run a single operation");
    tools->add_option("name", tool_name, "minpoly | tilde | split | orbit | density | lambda-density | fset | independence")
        ->required();
    tools->add_option("problem", tool_problem, "problem file")->required();
    tools->add_option("args", tool_args, "key=value arguments");

    std::string canon_problem;
    auto* canonical = app.add_subcommand("canonical", "print the canonical form of a problem file");
    canonical->add_option("problem", canon_problem, "problem file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    if (*classify) return cmd_classify(ca);
    if (*verify) return cmd_verify(cert_path, verify_problem);
    if (*tools) return cmd_tool(tool_name, tool_problem, tool_args);
    if (*canonical) return cmd_canonical(canon_problem);
    return kInvalid;
}
