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

/**
 * @file text.hpp
 * @brief Text forms: element, Ore-polynomial and rational-function expressions, problem files,
 *        certificate files and the tool commands built on them.
 *
 * Files are sectioned `key = value` text. Lists are bracketed and comma separated; brackets
 * nest, so `[[1,1]*F, F]` is a list of two Ore polynomials over F_4.
 */

#ifndef GADYN_TEXT_HPP
#define GADYN_TEXT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gadyn/classify.hpp"
#include "gadyn/fsets.hpp"

namespace gadyn::text {

/// Integer (reduced mod p) or digit vector `[c0,c1,...]` in the field's power basis.
Elem parse_element(Field f, std::string_view s);
/// Expression in F over F_q with + - * ^ and parentheses, e.g. `[0,1] + 2*F^2`.
OrePoly parse_ore(Field f, std::string_view s);
/// Expression in t (= t1), t1..t6 with + - * / ^ and parentheses.
MRatFun parse_mratfun(Field f, std::string_view s);
/// Polynomial over F_p written as a coefficient list `[c0,c1,...]`.
CPoly parse_cpoly(Field fp, std::string_view s);

/// Top-level items of a bracketed list; the input must start with '[' and end with ']'.
std::vector<std::string> split_list(std::string_view s);
std::uint64_t parse_uint(std::string_view s);

Point parse_point(Field f, std::string_view s);
std::string format_point(const Point& x);
std::string format_elements(Field f, const std::vector<Elem>& v);
OreMatrix parse_ore_rows(Field f, const std::vector<std::string>& rows, std::size_t cols);
std::vector<std::string> format_ore_rows(const OreMatrix& A);

/// One `[name]` block of a sectioned file, keys in file order.
struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;
    std::size_t line = 0;

    const std::string* find(std::string_view key) const;
    const std::string& at(std::string_view key) const;  ///< throws Parse when missing
};

/// Splits text into sections. Blank lines and lines starting with '#' are ignored; duplicate
/// sections or keys are rejected.
std::vector<Section> parse_sections(std::string_view text);

struct Problem {
    Field field = nullptr;
    OreMatrix A;
    unsigned d = 1;
    std::optional<std::size_t> density_M;
    std::optional<unsigned> density_D;
    std::vector<LambdaEqInstance> lambdas;
    std::vector<FSetDescriptor> fsets;
};

/// Parses and validates. Throws Parse for malformed input or unknown keys, ReducibleModulus
/// for a reducible modulus and NotDominant when the minimal polynomial has zero constant term.
Problem parse_problem(std::string_view text);
/// Canonical text: parse_problem(serialize_problem(P)) serializes back to the same bytes.
std::string serialize_problem(const Problem& P);
/// 64-bit FNV-1a of the canonical text as 16 hex digits.
std::string digest(std::string_view canonical);
std::string problem_digest(const Problem& P);


/// Certificate file for a verdict on the given problem.
std::string serialize_certificate(const Problem& P, const Verdict& v, const DensityOptions& density);

struct CertificateFile {
    std::string version;
    std::string digest;
    VerdictKind kind = VerdictKind::A;
    std::string applicable;
    std::vector<std::pair<std::string, std::string>> split;  ///< metadata, informational
    std::optional<CertificateB> B;
    std::optional<CertificateC> C;
    Point alpha;
    unsigned d = 1;
    DensityOptions density;
    std::string outcome;
};

/// Reads a certificate; payload entries are parsed over the problem's field.
CertificateFile parse_certificate(Field f, std::string_view text);

enum class VerifyStatus { Ok = 0, DigestMismatch = 3, Failed = 4 };

struct FileVerification {
    VerifyStatus status = VerifyStatus::Failed;
    std::string report;  ///< the identity checked and its outcome
};

/// Checks the certificate against the problem: digest first, then the recorded identity
/// (B, C) or a rerun of the density check for the recorded witness (A).
FileVerification verify_certificate_file(const Problem& P, std::string_view certificate);

/// Human-readable summary of a verdict.
std::string describe_verdict(const Verdict& v);

/// Runs one of minpoly, tilde, split, orbit, density, lambda-density, fset, independence.
/// Arguments are tool specific `key=value` pairs; output is exact text.
std::string run_tool(const std::string& name, const Problem& P, const std::map<std::string, std::string>& args);

const char* tool_version();

}  // namespace gadyn::text

#endif
