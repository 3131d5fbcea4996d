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


#include "gadyn/skew.hpp"

#include <sstream>

#include "gadyn/error.hpp"

namespace gadyn {

namespace {

bool compound(const std::string& s) { return s.find(' ') != std::string::npos || s.find('/') != std::string::npos; }

RatFun central_s(Field f) { return RatFun::var(f); }

}  // namespace

// ---------------------------------------------------------------- SkewElem

SkewElem::SkewElem(Field f) : f_(f), parts_(f->degree(), RatFun(f)) {}

SkewElem::SkewElem(Field f, std::vector<RatFun> parts) : f_(f), parts_(std::move(parts)) {
    require(parts_.size() == f->degree(), "skew element needs one part per power of F below ell");
}

SkewElem SkewElem::from_ore(const OrePoly& P) {
    Field f = P.field();
    auto cp = center_decompose(P);
    std::vector<RatFun> parts;
    parts.reserve(cp.size());
    for (auto& c : cp) parts.emplace_back(c);
    return SkewElem(f, std::move(parts));
}

SkewElem SkewElem::scalar(Field f, const RatFun& c) {
    SkewElem r(f);
    r.parts_[0] = c.field() == f ? c : c.over(f);
    return r;
}

bool SkewElem::is_zero() const noexcept {
    for (const auto& p : parts_)
        if (!p.is_zero()) return false;
    return true;
}

bool SkewElem::is_one() const noexcept {
    if (parts_.empty() || !parts_[0].is_one()) return false;
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (!parts_[i].is_zero()) return false;
    return true;
}

bool SkewElem::is_ore_polynomial() const noexcept {
    for (const auto& p : parts_)
        if (!p.is_polynomial()) return false;
    return true;
}

OrePoly SkewElem::to_ore() const {
    require(is_ore_polynomial(), "skew element has denominators and is not in F_q[F]");
    std::vector<CPoly> cp;
    cp.reserve(parts_.size());
    for (const auto& p : parts_) cp.push_back(p.num());
    return center_recompose(cp);
}

SkewElem& SkewElem::operator+=(const SkewElem& o) {
    if (!f_) return *this = o;
    if (!o.f_) return *this;
    require(f_ == o.f_, "skew elements over different fields");
    for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] += o.parts_[i];
    return *this;
}

SkewElem& SkewElem::operator-=(const SkewElem& o) {
    if (!o.f_) return *this;
    if (!f_) return *this = -o;
    require(f_ == o.f_, "skew elements over different fields");
    for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] -= o.parts_[i];
    return *this;
}

SkewElem SkewElem::operator-() const {
    SkewElem r = *this;
    for (auto& p : r.parts_) p = -p;
    return r;
}

SkewElem operator*(const SkewElem& a, const SkewElem& b) {
    require(a.f_ && a.f_ == b.f_, "skew elements over different fields");
    Field f = a.f_;
    const std::size_t ell = f->degree();
    SkewElem out(f);
    if (a.is_zero() || b.is_zero()) return out;
    const RatFun s = central_s(f);
    for (std::size_t i = 0; i < ell; ++i) {
        if (a.parts_[i].is_zero()) continue;
        for (std::size_t j = 0; j < ell; ++j) {
            if (b.parts_[j].is_zero()) continue;
            // a_i F^i · b_j F^j = a_i φ^i(b_j) F^{i+j}
            RatFun t = a.parts_[i] * b.parts_[j].frobenius(i);
            std::size_t k = i + j;
            if (k >= ell) {
                t *= s;
                k -= ell;
            }
            out.parts_[k] += t;
        }
    }
    return out;
}

SkewElem SkewElem::scaled_left(const RatFun& c) const {
    SkewElem r = *this;
    const RatFun cc = c.field() == f_ ? c : c.over(f_);
    for (auto& p : r.parts_) p = cc * p;
    return r;
}

std::string SkewElem::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string c = parts_[i].to_string("s");
        if (i == 0) {
            os << c;
            continue;
        }
        if (!parts_[i].is_one()) os << (compound(c) ? "(" + c + ")" : c) << '*';
        os << 'F';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

SkewMatrix skew_zero(Field f, std::size_t r, std::size_t c) { return SkewMatrix(r, c, SkewElem(f)); }

SkewMatrix skew_identity(Field f, std::size_t n) { return SkewMatrix::identity(n, SkewElem(f), SkewElem::one(f)); }

SkewMatrix to_skew(const OreMatrix& A) {
    Field f = A.zero().field();
    SkewMatrix m = skew_zero(f, A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) m(i, j) = SkewElem::from_ore(A(i, j));
    return m;
}

OreMatrix to_ore(const SkewMatrix& A) {
    Field f = A.zero().field();
    OreMatrix m = ore_zero(f, A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) m(i, j) = A(i, j).to_ore();
    return m;
}

SkewMatrix scaled_left(const SkewMatrix& A, const RatFun& c) {
    SkewMatrix m = A;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) m(i, j) = A(i, j).scaled_left(c);
    return m;
}

// ---------------------------------------------------------------- CenterPoly

CenterPoly::CenterPoly(Field prime, std::vector<RatFun> coeffs) : f_(prime), c_(std::move(coeffs)) {
    for (auto& c : c_)
        if (c.field() != f_) c = c.over(f_);
    trim();
}

void CenterPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CenterPoly CenterPoly::constant(const RatFun& c) { return CenterPoly(c.field(), {c}); }

CenterPoly CenterPoly::linear(const RatFun& c) { return CenterPoly(c.field(), {-c, RatFun::constant(c.field(), 1)}); }

bool CenterPoly::has_polynomial_coeffs() const noexcept {
    for (const auto& c : c_)
        if (!c.is_polynomial()) return false;
    return true;
}

CenterPoly& CenterPoly::operator+=(const CenterPoly& o) {
    if (!f_) f_ = o.f_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), RatFun(f_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

CenterPoly& CenterPoly::operator-=(const CenterPoly& o) { return *this += -o; }

CenterPoly CenterPoly::operator-() const {
    CenterPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CenterPoly operator*(const CenterPoly& a, const CenterPoly& b) {
    Field f = a.f_ ? a.f_ : b.f_;
    if (a.is_zero() || b.is_zero()) return CenterPoly(f);
    std::vector<RatFun> r(a.c_.size() + b.c_.size() - 1, RatFun(f));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
    return CenterPoly(f, std::move(r));
}

CenterPoly CenterPoly::scaled(const RatFun& c) const {
    CenterPoly r = *this;
    for (auto& x : r.c_) x *= c;
    r.trim();
    return r;
}

CenterPoly CenterPoly::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return scaled(lead().inv());
}

CenterPoly CenterPoly::derivative() const {
    if (c_.size() <= 1) return CenterPoly(f_);
    std::vector<RatFun> v;
    for (std::size_t i = 1; i < c_.size(); ++i)
        v.push_back(c_[i] * RatFun::constant(f_, f_->from_int(static_cast<std::int64_t>(i % f_->p()))));
    return CenterPoly(f_, std::move(v));
}

std::string CenterPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string c = c_[i].to_string("s");
        if (i == 0) {
            os << c;
            continue;
        }
        if (!c_[i].is_one()) os << (compound(c) ? "(" + c + ")" : c) << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::pair<CenterPoly, CenterPoly> divmod(const CenterPoly& a, const CenterPoly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    Field f = a.field() ? a.field() : b.field();
    if (a.degree() < b.degree()) return {CenterPoly(f), a};
    std::vector<RatFun> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<RatFun> q(r.size() - db, RatFun(f));
    const RatFun linv = b.lead().inv();
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i].is_zero()) continue;
        const RatFun c = r[i] * linv;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            if (!bc[j].is_zero()) r[i - db + j] -= c * bc[j];
    }
    r.resize(db, RatFun(f));
    return {CenterPoly(f, std::move(q)), CenterPoly(f, std::move(r))};
}

CenterPoly gcd(const CenterPoly& a0, const CenterPoly& b0) {
    CenterPoly a = a0, b = b0;
    while (!b.is_zero()) {
        CenterPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

CenterExtGcd ext_gcd(const CenterPoly& a, const CenterPoly& b) {
    Field f = a.field() ? a.field() : b.field();
    const RatFun one = RatFun::constant(f, 1);
    CenterPoly r0 = a, r1 = b, s0 = CenterPoly::constant(one), s1(f), t0(f), t1 = CenterPoly::constant(one);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        CenterPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        CenterPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const RatFun li = r0.lead().inv();
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

SkewMatrix eval(const CenterPoly& r, const SkewMatrix& A) {
    require(A.rows() == A.cols(), "polynomial evaluated at a non-square matrix");
    Field f = A.zero().field();
    const std::size_t n = A.rows();
    auto scalar = [&](const RatFun& c) {
        SkewMatrix m = skew_zero(f, n, n);
        const SkewElem e = SkewElem::scalar(f, c.over(f));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = e;
        return m;
    };
    if (r.is_zero()) return skew_zero(f, n, n);
    SkewMatrix R = scalar(r.lead());
    for (int i = r.degree() - 1; i >= 0; --i) R = R * A + scalar(r.coeffs()[static_cast<std::size_t>(i)]);
    return R;
}

// ---------------------------------------------------------------- tilde and minimal polynomials

RatMatrix tilde(const SkewMatrix& A) {
    require(A.rows() == A.cols(), "tilde of a non-square matrix");
    Field f = A.zero().field();
    const std::size_t n = A.rows(), ell = f->degree();
    RatMatrix T = rat_zero(f, n * ell, n * ell);
    for (std::size_t i = 0; i < ell; ++i) {
        SkewElem Fi(f);
        std::vector<RatFun> parts(ell, RatFun(f));
        parts[i] = RatFun::constant(f, 1);
        Fi = SkewElem(f, parts);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t k = 0; k < n; ++k) {
                if (A(c, k).is_zero()) continue;
                const SkewElem prod = Fi * A(c, k);
                for (std::size_t j = 0; j < ell; ++j) T(i * n + c, j * n + k) = prod.part(j);
            }
    }
    return T;
}

RatMatrix tilde(const OreMatrix& A) { return tilde(to_skew(A)); }

CenterPoly min_poly_center(const SkewMatrix& A) {
    require(A.rows() == A.cols(), "minimal polynomial of a non-square matrix");
    Field fq = A.zero().field();
    Field fp = fq->prime_field();
    const std::size_t n = A.rows(), ell = fq->degree();
    const std::size_t dim = n * n * ell * ell;
    std::vector<std::vector<CPoly>> w;
    std::vector<CPoly> scale;
    SkewMatrix Pw = skew_identity(fq, n);
    for (std::size_t k = 0; k <= n * ell; ++k) {
        if (k > 0) Pw = Pw * A;
        CPoly L = CPoly::constant(fq, 1);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                for (const auto& p : Pw(r, c).parts())
                    if (!p.is_zero() && !p.den().is_one()) L = lcm(L, p.den());
        const CPoly nm = norm(L);
        std::vector<CPoly> col;
        col.reserve(dim);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                for (const auto& p : Pw(r, c).parts()) {
                    const CPoly e = p.is_zero() ? CPoly(fq) : p.num() * (nm / p.den());
                    std::vector<std::vector<Elem>> digit(ell, std::vector<Elem>(e.coeffs().size(), 0));
                    for (std::size_t t = 0; t < e.coeffs().size(); ++t) {
                        const auto d = fq->digits(e.coeffs()[t]);
                        for (std::size_t q = 0; q < ell; ++q) digit[q][t] = d[q];
                    }
                    for (std::size_t q = 0; q < ell; ++q) col.emplace_back(fp, std::move(digit[q]));
                }
        w.push_back(std::move(col));
        scale.push_back(nm.over(fp));
        RatMatrix M = rat_zero(fp, dim, k + 1);
        for (std::size_t j = 0; j <= k; ++j)
            for (std::size_t i = 0; i < dim; ++i)
                if (!w[j][i].is_zero()) M(i, j) = RatFun(w[j][i]);
        auto ker = kernel_basis(M);
        if (ker.empty()) continue;
        std::vector<RatFun> coeffs(k + 1, RatFun(fp));
        for (std::size_t j = 0; j <= k; ++j) coeffs[j] = ker[0][j] * RatFun(scale[j]);
        return CenterPoly(fp, std::move(coeffs)).monic();
    }
    fail(ErrorCode::InvalidArgument, "no dependency among matrix powers within the dimension bound");
}

CentralMultiplier central_multiplier(const OrePoly& P) {
    if (P.is_zero()) fail(ErrorCode::InvalidArgument, "central multiplier of the zero Ore polynomial");
    Field f = P.field();
    const std::size_t ell = f->degree();
    PolyMatrix Pt(ell, ell, CPoly(f));
    for (std::size_t i = 0; i < ell; ++i) {
        const auto parts = center_decompose(OrePoly::frobenius(f, i) * P);
        for (std::size_t j = 0; j < ell; ++j) Pt(i, j) = parts[j];
    }
    // (Q_0, ..., Q_{ell-1}) · P̃ = (det P̃, 0, ..., 0)
    const OrePoly Q1 = center_recompose(adjugate_row(Pt, 0));
    const CPoly alpha = determinant(Pt);
    CPoly Q2 = CPoly::constant(f, 1);
    for (std::size_t i = 1; i < ell; ++i) Q2 = Q2 * alpha.frobenius(i);
    OrePoly Q = OrePoly::from_center(Q2) * Q1;
    CPoly c = Q2 * alpha;
    require(c.in_prime_field(), "norm of the determinant left the prime field");
    const Elem u = f->inv(c.lead());
    return {Q.scaled_left(u), c.scaled(u).over(f->prime_field())};
}

SkewElem skew_inverse(const SkewElem& x) {
    if (x.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in the skew field");
    Field f = x.field();
    CPoly D = CPoly::constant(f, 1);
    for (const auto& p : x.parts())
        if (!p.is_zero() && !p.den().is_one()) D = lcm(D, prime_field_closure(p.den()));
    std::vector<CPoly> cleared;
    for (const auto& p : x.parts()) cleared.push_back(p.is_zero() ? CPoly(f) : p.num() * (D / p.den()));
    const OrePoly P = center_recompose(cleared);
    const auto cm = central_multiplier(P);
    // x = D^{-1} P, so x^{-1} = P^{-1} D = c^{-1} Q D with c, D central
    return SkewElem::from_ore(cm.Q).scaled_left(RatFun(D, cm.c.over(f)));
}

Elimination gauss_eliminate(const SkewMatrix& M) {
    Field f = M.zero().field();
    const std::size_t rows = M.rows(), cols = M.cols();
    Elimination e;
    e.reduced = M;
    e.transform = skew_identity(f, rows);
    auto& R = e.reduced;
    auto& T = e.transform;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t i = r;
        while (i < rows && R(i, c).is_zero()) ++i;
        if (i == rows) continue;
        if (i != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(R(i, j), R(r, j));
            for (std::size_t j = 0; j < rows; ++j) std::swap(T(i, j), T(r, j));
        }
        if (!R(r, c).is_one()) {
            const SkewElem inv = skew_inverse(R(r, c));
            for (std::size_t j = 0; j < cols; ++j)
                if (!R(r, j).is_zero()) R(r, j) = inv * R(r, j);
            for (std::size_t j = 0; j < rows; ++j)
                if (!T(r, j).is_zero()) T(r, j) = inv * T(r, j);
        }
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == r || R(k, c).is_zero()) continue;
            const SkewElem m = R(k, c);
            for (std::size_t j = 0; j < cols; ++j)
                if (!R(r, j).is_zero()) R(k, j) -= m * R(r, j);
            for (std::size_t j = 0; j < rows; ++j)
                if (!T(r, j).is_zero()) T(k, j) -= m * T(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rank = r;
    return e;
}

SkewMatrix matrix_inverse(const SkewMatrix& M) {
    require(M.rows() == M.cols(), "inverse of a non-square matrix");
    auto e = gauss_eliminate(M);
    if (e.rank < M.rows()) fail(ErrorCode::NotInvertible, "matrix is singular over the skew field");
    return e.transform;
}

}  // namespace gadyn
