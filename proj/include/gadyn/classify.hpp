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
 * @file classify.hpp
 * @brief Dense-orbit trichotomy: verdicts A/B/C, certificates, witness points, density checks.
 */

#ifndef GADYN_CLASSIFY_HPP
#define GADYN_CLASSIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gadyn/mpoly.hpp"
#include "gadyn/ore.hpp"
#include "gadyn/split.hpp"

namespace gadyn {

using Point = std::vector<MRatFun>;

/// x maps to the finite set {y : [h](y) = B x}; here B = h A with A over the skew field.
struct FiniteToFiniteMap {
    CPoly h;      ///< over F_p, read as an element of F_p[F^l]
    SkewMatrix A;
    /// h A^k as a matrix over F_q[F].
    OreMatrix cleared_power(std::uint64_t k) const;
};

enum class VerdictKind { A, B, C };
const char* verdict_name(VerdictKind k);

struct CertificateB {
    OreMatrix v;  ///< 1 x N
    std::uint64_t n = 1;
};

struct CertificateC {
    OreMatrix T;  ///< N0' x N
    std::uint64_t m = 1;
    std::uint64_t r = 1;
};

struct VerifyResult {
    bool ok = false;
    std::string reason;  ///< "ok", "shape mismatch", "degenerate", "identity fails"
};

VerifyResult verify_certificate(const OreMatrix& A, const CertificateB& cert);
VerifyResult verify_certificate(const OreMatrix& A, const CertificateC& cert);
/// Certificate for the k-th iterate: same T, exponents (k m, k r).
CertificateC iterate_certificate(const CertificateC& cert, std::uint64_t k);

CertificateB build_certificate_B(const SplitData& sd);
CertificateC build_certificate_C(const SplitData& sd, unsigned d);

// ---------------------------------------------------------------- density

enum class DensityOutcome { DenseUpToD, FoundPolynomial, Inconclusive };
const char* density_outcome_name(DensityOutcome o);

struct DensityOptions {
    std::size_t M = 25;
    unsigned D = 3;
    unsigned trials = 3;
    std::uint64_t seed = 1;
    std::uint64_t min_field_size = std::uint64_t{1} << 20;
    std::size_t symbolic_term_cap = 1u << 14;  ///< points larger than this are not expanded exactly
};

struct DensityReport {
    std::size_t M = 0;
    unsigned D = 0;
    DensityOutcome outcome = DensityOutcome::Inconclusive;
    std::size_t columns = 0;                 ///< monomials of degree <= D
    std::vector<std::size_t> trial_ranks;
    std::uint64_t field_order = 0;           ///< specialization field size p^k
    unsigned field_degree = 0;
    std::vector<std::vector<unsigned>> monomials;
    std::vector<Elem> coefficients;          ///< vanishing polynomial over the points' field
    std::string polynomial;
    std::string note;
};

/// Evaluates all M points at a specialization t -> tvals (nullopt if a denominator vanishes).
using PointSpecializer = std::function<std::optional<std::vector<std::vector<Elem>>>(
    const Embedding& emb, const std::vector<Elem>& tvals)>;
/// Exact points, or nullopt when they are too large to expand.
using PointMaterializer = std::function<std::optional<std::vector<Point>>()>;

DensityReport density_check(Field fq, std::size_t N, std::size_t nvars, const PointSpecializer& specialize,
                            const PointMaterializer& materialize, const DensityOptions& opt);
/// Convenience form for explicit points.
DensityReport density_check(const std::vector<Point>& points, std::size_t nvars, const DensityOptions& opt);

std::vector<Point> orbit(const OreMatrix& A, const Point& alpha, std::size_t M);
/// Terms ([h] o (Phi0^k, Phi1^k))(alpha0, alpha1) for k < M.
std::vector<Point> orbit_sequence(const FiniteToFiniteMap& phi0, const FiniteToFiniteMap& phi1,
                                  const Point& alpha0, const Point& alpha1, std::size_t M);

DensityReport orbit_density(const OreMatrix& A, const Point& alpha, std::size_t nvars, const DensityOptions& opt);
DensityReport sequence_density(const FiniteToFiniteMap& phi0, const FiniteToFiniteMap& phi1, const Point& alpha0,
                               const Point& alpha1, std::size_t nvars, const DensityOptions& opt);

// ---------------------------------------------------------------- independence

/// gamma_i = 1/pi_i(t_1) for distinct monic irreducible pi_i over the base field, skipping
/// any pi that divides a numerator or denominator of a delta.
std::vector<MRatFun> construct_independent_points(std::size_t k, const std::vector<MRatFun>& deltas, Field base);

struct IndependenceResult {
    bool independent = true;
    Field coeff_field = nullptr;                 ///< F_{p^k}
    std::vector<std::vector<Elem>> P;            ///< P_i coefficients (index = power of F)
    std::vector<std::vector<Elem>> Q;            ///< Q_j coefficients
    std::string relation;
};

/// Basis of all c over C with sum_u c_u f_u = 0 in every coordinate; exact.
std::vector<std::vector<Elem>> linear_relations(const std::vector<Point>& fs, Field C, std::uint64_t seed = 1);

/// Searches sum P_i(F)(gamma_i) = sum Q_j(F)(delta_j) with deg P_i, Q_j <= D over F_{p^k}.
IndependenceResult check_independence(const std::vector<MRatFun>& gammas, const std::vector<MRatFun>& deltas,
                                      unsigned D, unsigned k, std::uint64_t seed = 1);

// ---------------------------------------------------------------- verdict

struct WitnessA {
    Point alpha;           ///< point of G_a^N
    Point alpha0, alpha1;  ///< split coordinates
    DensityReport report;           ///< plain orbit of alpha
    DensityReport sequence_report;  ///< the split sequence
};

WitnessA witness_A(const OreMatrix& A, const SplitData& sd, unsigned d, const DensityOptions& opt = {});

struct ClassifyOptions {
    SplitLimits split;
    DensityOptions density;
};

struct Verdict {
    VerdictKind kind = VerdictKind::A;
    bool applicable_A = false, applicable_B = false, applicable_C = false;
    unsigned d = 1;
    SplitData split;
    std::optional<CertificateB> cert_B;
    std::optional<CertificateC> cert_C;
    std::optional<WitnessA> witness;
};

Verdict classify(const OreMatrix& A, unsigned d, const ClassifyOptions& opt = {});

}  // namespace gadyn

#endif
