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
#include <cstdio>
#include <sstream>

#include "gadyn/skew.hpp"
#include "gadyn/text.hpp"

namespace gadyn::text {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorCode::Parse, what); }

std::string applicable_list(const Verdict& v) {
    std::string s;
    auto add = [&](bool on, const char* k) {
        if (!on) return;
        if (!s.empty()) s += ",";
        s += k;
    };
    add(v.applicable_A, "A");
    add(v.applicable_B, "B");
    add(v.applicable_C, "C");
    return s.empty() ? "none" : s;
}

std::string uint_pairs(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::string("[") + std::to_string(v[i].first) + "," + std::to_string(v[i].second) + "]";
    return s + "]";
}

std::string uints(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

std::vector<std::pair<std::string, std::string>> split_metadata(const SplitData& sd) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks, jordan;
    for (const auto& b : sd.blocks) blocks.emplace_back(b.n, b.m);
    for (const auto& b : sd.jordan) jordan.emplace_back(b.exponent, b.size);
    std::string factors = "[";
    for (std::size_t i = 0; i < sd.factors.size(); ++i) {
        const auto& f = sd.factors[i];
        factors += (i ? ", " : "") + std::string("(") + f.factor.to_string() + ")^" + std::to_string(f.multiplicity) +
                   " " + factor_kind_name(f.kind);
        if (f.kind == FactorKind::FrobeniusType)
            factors += " n=" + std::to_string(f.n) + " j=" + std::to_string(f.j);
    }
    factors += "]";
    return {
        {"n", std::to_string(sd.n)},
        {"n_before_power_up", std::to_string(sd.n_before_power_up)},
        {"a", std::to_string(sd.a)},
        {"N0", std::to_string(sd.N0())},
        {"N1", std::to_string(sd.N1())},
        {"blocks", uint_pairs(blocks)},
        {"jordan", uint_pairs(jordan)},
        {"r", sd.r.to_string()},
        {"r0", sd.r0.to_string()},
        {"r1", sd.r1.to_string()},
        {"h", sd.h.to_list()},
        {"factors", factors},
    };
}

void write_rows(std::ostringstream& os, const std::string& prefix, const OreMatrix& M) {
    const auto rows = format_ore_rows(M);
    for (std::size_t i = 0; i < rows.size(); ++i) os << prefix << i + 1 << " = " << rows[i] << "\n";
}

OreMatrix read_rows(Field f, const Section& s, const std::string& prefix, std::size_t count, std::size_t cols) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < count; ++i) rows.push_back(s.at(prefix + std::to_string(i + 1)));
    return parse_ore_rows(f, rows, cols);
}

DensityOutcome outcome_from_name(const std::string& s) {
    for (auto o : {DensityOutcome::DenseUpToD, DensityOutcome::FoundPolynomial, DensityOutcome::Inconclusive})
        if (s == density_outcome_name(o)) return o;
    parse_fail("unknown density outcome '" + s + "'");
}

VerdictKind kind_from_name(const std::string& s) {
    if (s == "A") return VerdictKind::A;
    if (s == "B") return VerdictKind::B;
    if (s == "C") return VerdictKind::C;
    parse_fail("unknown verdict '" + s + "'");
}

void check_keys(const Section& s, std::initializer_list<const char*> keys, const char* row_prefix = nullptr) {
    for (const auto& [k, v] : s.entries) {
        const bool known = std::any_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; });
        const bool row = row_prefix && k.rfind(row_prefix, 0) == 0;
        if (!known && !row) parse_fail("unknown key '" + k + "' in [" + s.name + "]");
    }
}

std::string density_summary(const DensityReport& r) {
    std::ostringstream os;
    os << density_outcome_name(r.outcome) << " (M=" << r.M << ", D=" << r.D << ", columns=" << r.columns
       << ", ranks=" << uints(r.trial_ranks) << ", field=" << r.field_order << ")";
    if (!r.polynomial.empty()) os << " polynomial " << r.polynomial;
    if (!r.note.empty()) os << " note: " << r.note;
    return os.str();
}

std::string skew_rows(const SkewMatrix& M) {
    std::ostringstream os;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < M.cols(); ++j) os << (j ? ", " : "") << M(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

std::string arg(const std::map<std::string, std::string>& args, const std::string& key, const std::string& dflt) {
    auto it = args.find(key);
    return it == args.end() ? dflt : it->second;
}

std::string required_arg(const std::map<std::string, std::string>& args, const std::string& key,
                         const std::string& tool) {
    auto it = args.find(key);
    if (it == args.end()) fail(ErrorCode::InvalidArgument, "tool " + tool + " needs " + key + "=...");
    return it->second;
}

void check_args(const std::map<std::string, std::string>& args, std::initializer_list<const char*> keys,
                const std::string& tool) {
    for (const auto& [k, v] : args)
        if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; }))
            fail(ErrorCode::InvalidArgument, "tool " + tool + " does not take '" + k + "'");
}

DensityOptions problem_density(const Problem& P) {
    DensityOptions o;
    if (P.density_M) o.M = *P.density_M;
    if (P.density_D) o.D = *P.density_D;
    return o;
}

std::size_t pick_index(const std::map<std::string, std::string>& args, std::size_t count, const std::string& what) {
    const std::size_t i = parse_uint(arg(args, "index", "1"));
    if (i == 0 || i > count)
        fail(ErrorCode::InvalidArgument, "problem has " + std::to_string(count) + " " + what + " instance(s), index " +
                                             std::to_string(i) + " requested");
    return i - 1;
}

}  // namespace

const char* tool_version() { return "gadyn 0.1.0"; }

std::string serialize_certificate(const Problem& P, const Verdict& v, const DensityOptions& density) {
    std::ostringstream os;
    os << "# gadyn certificate\n";
    os << "[certificate]\n";
    os << "version = " << tool_version() << "\n";
    os << "digest = " << problem_digest(P) << "\n";
    os << "verdict = " << verdict_name(v.kind) << "\n";
    os << "applicable = " << applicable_list(v) << "\n";
    os << "\n[split]\n";
    for (const auto& [k, val] : split_metadata(v.split)) os << k << " = " << val << "\n";
    if (v.cert_B) {
        os << "\n[B]\n";
        os << "n = " << v.cert_B->n << "\n";
        os << "v = " << format_ore_rows(v.cert_B->v).front() << "\n";
    }
    if (v.cert_C) {
        os << "\n[C]\n";
        os << "m = " << v.cert_C->m << "\n";
        os << "r = " << v.cert_C->r << "\n";
        os << "rows = " << v.cert_C->T.rows() << "\n";
        write_rows(os, "T", v.cert_C->T);
    }
    if (v.witness) {
        const auto& w = *v.witness;
        os << "\n[A]\n";
        os << "d = " << v.d << "\n";
        os << "alpha = " << format_point(w.alpha) << "\n";
        os << "M = " << density.M << "\n";
        os << "D = " << density.D << "\n";
        os << "trials = " << density.trials << "\n";
        os << "seed = " << density.seed << "\n";
        os << "min_field_size = " << density.min_field_size << "\n";
        os << "term_cap = " << density.symbolic_term_cap << "\n";
        os << "outcome = " << density_outcome_name(w.report.outcome) << "\n";
        os << "ranks = " << uints(w.report.trial_ranks) << "\n";
        os << "columns = " << w.report.columns << "\n";
        if (!w.report.polynomial.empty()) os << "polynomial = " << w.report.polynomial << "\n";
        os << "sequence_outcome = " << density_outcome_name(w.sequence_report.outcome) << "\n";
    }
    return os.str();
}

CertificateFile parse_certificate(Field f, std::string_view text) {
    CertificateFile c;
    const auto sections = parse_sections(text);
    const Section* head = nullptr;
    for (const auto& s : sections) {
        if (s.name == "certificate") {
            check_keys(s, {"version", "digest", "verdict", "applicable"});
            head = &s;
            c.version = s.at("version");
            c.digest = s.at("digest");
            c.kind = kind_from_name(s.at("verdict"));
            c.applicable = s.at("applicable");
        } else if (s.name == "split") {
            c.split = s.entries;
        } else if (s.name == "B") {
            check_keys(s, {"n", "v"});
            CertificateB b;
            b.n = parse_uint(s.at("n"));
            const auto items = split_list(s.at("v"));
            b.v = read_rows(f, Section{"B", {{"v1", s.at("v")}}, s.line}, "v", 1, items.size());
            c.B = b;
        } else if (s.name == "C") {
            check_keys(s, {"m", "r", "rows"}, "T");
            CertificateC cc;
            cc.m = parse_uint(s.at("m"));
            cc.r = parse_uint(s.at("r"));
            const std::size_t rows = parse_uint(s.at("rows"));
            if (rows == 0) parse_fail("[C] needs at least one row");
            const std::size_t cols = split_list(s.at("T1")).size();
            cc.T = read_rows(f, s, "T", rows, cols);
            if (s.entries.size() != rows + 3) parse_fail("[C] row count does not match 'rows'");
            c.C = cc;
        } else if (s.name == "A") {
            check_keys(s, {"d", "alpha", "M", "D", "trials", "seed", "min_field_size", "term_cap", "outcome", "ranks",
                           "columns", "polynomial", "sequence_outcome"});
            c.d = static_cast<unsigned>(parse_uint(s.at("d")));
            c.alpha = parse_point(f, s.at("alpha"));
            c.density.M = parse_uint(s.at("M"));
            c.density.D = static_cast<unsigned>(parse_uint(s.at("D")));
            c.density.trials = static_cast<unsigned>(parse_uint(s.at("trials")));
            c.density.seed = parse_uint(s.at("seed"));
            c.density.min_field_size = parse_uint(s.at("min_field_size"));
            c.density.symbolic_term_cap = parse_uint(s.at("term_cap"));
            c.outcome = s.at("outcome");
            outcome_from_name(c.outcome);
        } else {
            parse_fail("unknown section [" + s.name + "]");
        }
    }
    if (!head) parse_fail("missing [certificate] section");
    if (c.kind == VerdictKind::A && c.alpha.empty()) parse_fail("verdict A needs an [A] section");
    if (c.kind == VerdictKind::B && !c.B) parse_fail("verdict B needs a [B] section");
    if (c.kind == VerdictKind::C && !c.C) parse_fail("verdict C needs a [C] section");
    return c;
}

FileVerification verify_certificate_file(const Problem& P, std::string_view certificate) {
    FileVerification out;
    const CertificateFile c = parse_certificate(P.field, certificate);
    const std::string expect = problem_digest(P);
    std::ostringstream os;
    if (c.digest != expect) {
        os << "digest mismatch: certificate " << c.digest << ", problem " << expect << "\n";
        out.status = VerifyStatus::DigestMismatch;
        out.report = os.str();
        return out;
    }
    os << "digest " << expect << " matches\n";
    bool ok = true;
    if (c.B) {
        const auto r = verify_certificate(P.A, *c.B);
        os << "B: v*A^" << c.B->n << " = v with v = " << format_ore_rows(c.B->v).front() << ": " << r.reason << "\n";
        ok = ok && r.ok;
    }
    if (c.C) {
        const auto r = verify_certificate(P.A, *c.C);
        os << "C: T*A^" << c.C->m << " = F^" << c.C->r << "*T with T of size " << c.C->T.rows() << "x" << c.C->T.cols()
           << ": " << r.reason << "\n";
        ok = ok && r.ok;
    }
    if (!c.alpha.empty()) {
        if (c.alpha.size() != P.A.rows()) {
            os << "A: witness has " << c.alpha.size() << " coordinates, expected " << P.A.rows() << ": shape mismatch\n";
            ok = false;
        } else {
            const DensityReport r = orbit_density(P.A, c.alpha, c.d, c.density);
            const bool dense = r.outcome == DensityOutcome::DenseUpToD;
            const bool same = c.outcome == density_outcome_name(r.outcome);
            os << "A: no nonzero polynomial of degree <= " << c.density.D << " vanishes on the first " << c.density.M
               << " orbit points of alpha = " << format_point(c.alpha) << ": "
               << (dense && same ? "ok" : "density not confirmed") << " (" << density_summary(r) << ")\n";
            ok = ok && dense && same;
        }
    }
    out.status = ok ? VerifyStatus::Ok : VerifyStatus::Failed;
    os << (ok ? "verified" : "verification failed") << "\n";
    out.report = os.str();
    return out;
}

std::string describe_verdict(const Verdict& v) {
    std::ostringstream os;
    os << "verdict: " << verdict_name(v.kind) << "\n";
    os << "applicable: " << applicable_list(v) << "\n";
    os << "d: " << v.d << "\n";
    for (const auto& [k, val] : split_metadata(v.split)) os << "split." << k << ": " << val << "\n";
    if (v.cert_B) os << "B: v = " << format_ore_rows(v.cert_B->v).front() << ", n = " << v.cert_B->n << "\n";
    if (v.cert_C) {
        os << "C: m = " << v.cert_C->m << ", r = " << v.cert_C->r << ", T =\n";
        for (const auto& row : format_ore_rows(v.cert_C->T)) os << "  " << row << "\n";
    }
    if (v.witness) {
        os << "A: alpha = " << format_point(v.witness->alpha) << "\n";
        os << "A: orbit density " << density_summary(v.witness->report) << "\n";
        os << "A: split sequence density " << density_summary(v.witness->sequence_report) << "\n";
    }
    return os.str();
}

std::string run_tool(const std::string& name, const Problem& P, const std::map<std::string, std::string>& args) {
    std::ostringstream os;
    if (name == "minpoly") {
        check_args(args, {}, name);
        os << min_poly_center(to_skew(P.A)).to_string() << "\n";
    } else if (name == "tilde") {
        check_args(args, {}, name);
        const RatMatrix T = tilde(P.A);
        for (std::size_t i = 0; i < T.rows(); ++i) {
            os << "[";
            for (std::size_t j = 0; j < T.cols(); ++j) os << (j ? ", " : "") << T(i, j).to_string();
            os << "]\n";
        }
    } else if (name == "split") {
        check_args(args, {"max_power"}, name);
        SplitLimits lim;
        lim.max_power = parse_uint(arg(args, "max_power", std::to_string(lim.max_power)));
        const SplitData sd = split_endomorphism(P.A, lim);
        for (const auto& [k, val] : split_metadata(sd)) os << k << " = " << val << "\n";
        os << "P =\n" << skew_rows(sd.P);
        os << "A0 =\n" << skew_rows(sd.A0);
        os << "A1 =\n" << skew_rows(sd.A1);
    } else if (name == "orbit") {
        check_args(args, {"alpha", "M"}, name);
        const Point alpha = parse_point(P.field, required_arg(args, "alpha", name));
        if (alpha.size() != P.A.rows()) fail(ErrorCode::InvalidArgument, "alpha has the wrong number of coordinates");
        const auto pts = orbit(P.A, alpha, parse_uint(arg(args, "M", "5")));
        for (std::size_t k = 0; k < pts.size(); ++k) os << k << " = " << format_point(pts[k]) << "\n";
    } else if (name == "density") {
        check_args(args, {"alpha", "M", "D", "seed", "d"}, name);
        const Point alpha = parse_point(P.field, required_arg(args, "alpha", name));
        if (alpha.size() != P.A.rows()) fail(ErrorCode::InvalidArgument, "alpha has the wrong number of coordinates");
        DensityOptions o = problem_density(P);
        o.M = parse_uint(arg(args, "M", std::to_string(o.M)));
        o.D = static_cast<unsigned>(parse_uint(arg(args, "D", std::to_string(o.D))));
        o.seed = parse_uint(arg(args, "seed", "1"));
        const auto nvars = parse_uint(arg(args, "d", std::to_string(P.d)));
        const DensityReport r = orbit_density(P.A, alpha, nvars, o);
        os << "outcome = " << density_outcome_name(r.outcome) << "\n";
        os << "M = " << r.M << "\n" << "D = " << r.D << "\n" << "columns = " << r.columns << "\n";
        os << "ranks = " << uints(r.trial_ranks) << "\n" << "field_order = " << r.field_order << "\n";
        if (!r.polynomial.empty()) os << "polynomial = " << r.polynomial << "\n";
        if (!r.note.empty()) os << "note = " << r.note << "\n";
    } else if (name == "lambda-density") {
        check_args(args, {"index", "M", "csv"}, name);
        const auto& inst = P.lambdas.at(pick_index(args, P.lambdas.size(), "lambda"));
        const LambdaDensity ld = lambda_density(inst, parse_uint(arg(args, "M", "512")));
        os << ld.solvable.size() << "/" << ld.M << "\n";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", ld.density);
        os << "density = " << buf << "\n";
        os << "solvable = " << uints(std::vector<std::size_t>(ld.solvable.begin(), ld.solvable.end())) << "\n";
        if (arg(args, "csv", "0") == "1") os << ld.csv();
    } else if (name == "fset") {
        check_args(args, {"index", "B", "bound", "cap", "zero"}, name);
        const auto& desc = P.fsets.at(pick_index(args, P.fsets.size(), "fset"));
        FSetLimits lim;
        lim.cap = parse_uint(arg(args, "cap", std::to_string(lim.cap)));
        lim.include_zero = arg(args, "zero", "0") == "1";
        const auto pts = fset_enumerate(desc, parse_uint(arg(args, "B", "3")),
                                        static_cast<unsigned>(parse_uint(arg(args, "bound", "0"))), lim);
        os << "count = " << pts.size() << "\n";
        for (const auto& x : pts) os << format_point(x) << "\n";
    } else if (name == "independence") {
        check_args(args, {"gammas", "deltas", "D", "k", "seed"}, name);
        std::vector<MRatFun> gammas, deltas;
        for (const auto& g : split_list(required_arg(args, "gammas", name))) gammas.push_back(parse_mratfun(P.field, g));
        for (const auto& g : split_list(arg(args, "deltas", "[]"))) deltas.push_back(parse_mratfun(P.field, g));
        const auto res = check_independence(gammas, deltas, static_cast<unsigned>(parse_uint(arg(args, "D", "4"))),
                                            static_cast<unsigned>(parse_uint(arg(args, "k", "2"))),
                                            parse_uint(arg(args, "seed", "1")));
        os << "independent = " << (res.independent ? "yes" : "no") << "\n";
        os << "coefficients = " << res.coeff_field->describe() << "\n";
        if (!res.independent) os << "relation = " << res.relation << "\n";
    } else {
        fail(ErrorCode::InvalidArgument, "unknown tool '" + name +
                                             "' (expected minpoly, tilde, split, orbit, density, lambda-density, fset, "
                                             "independence)");
    }
    return os.str();
}

}  // namespace gadyn::text
