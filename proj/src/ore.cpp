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


#include "gadyn/ore.hpp"

#include <algorithm>
#include <sstream>

#include "gadyn/error.hpp"

namespace gadyn {

namespace {
Field pick(Field a, Field b) {
    if (!a) return b;
    if (b && a != b) fail(ErrorCode::InvalidArgument, "Ore polynomials over different fields");
    return a;
}
}  // namespace

OrePoly::OrePoly(Field f, std::vector<Elem> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

void OrePoly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

OrePoly OrePoly::monomial(Field f, Elem c, std::size_t k) {
    if (c == 0) return OrePoly(f);
    std::vector<Elem> v(k + 1, 0);
    v[k] = c;
    return OrePoly(f, std::move(v));
}

OrePoly OrePoly::from_center(const CPoly& a) {
    Field f = a.field();
    const std::size_t ell = f->degree();
    std::vector<Elem> v(a.coeffs().empty() ? 0 : (a.coeffs().size() - 1) * ell + 1, 0);
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) v[j * ell] = a.coeffs()[j];
    return OrePoly(f, std::move(v));
}

OrePoly& OrePoly::operator+=(const OrePoly& o) {
    f_ = pick(f_, o.f_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->add(c_[i], o.c_[i]);
    trim();
    return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& o) {
    f_ = pick(f_, o.f_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

OrePoly OrePoly::operator-() const {
    OrePoly r = *this;
    for (auto& c : r.c_) c = f_->neg(c);
    return r;
}

OrePoly operator*(const OrePoly& a, const OrePoly& b) {
    Field f = pick(a.f_, b.f_);
    if (a.is_zero() || b.is_zero()) return OrePoly(f);
    const std::size_t k = f->degree();
    // conjugates of b's coefficients, one row per residue of i mod k
    std::vector<std::vector<Elem>> bf(std::min(k, a.c_.size()));
    for (std::size_t r = 0; r < bf.size(); ++r) {
        bf[r].resize(b.c_.size());
        for (std::size_t j = 0; j < b.c_.size(); ++j) bf[r][j] = f->frob(b.c_[j], r);
    }
    std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        const auto& row = bf[i % k];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j]) out[i + j] = f->add(out[i + j], f->mul(a.c_[i], row[j]));
    }
    return OrePoly(f, std::move(out));
}

OrePoly OrePoly::scaled_left(Elem c) const {
    if (c == 0) return OrePoly(f_);
    OrePoly r = *this;
    for (auto& x : r.c_) x = f_->mul(c, x);
    return r;
}

Elem OrePoly::eval(Elem x) const {
    Elem acc = 0, xp = x;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i]) acc = f_->add(acc, f_->mul(c_[i], xp));
        xp = f_->pow(xp, f_->p());
    }
    return acc;
}

Elem OrePoly::eval(const Embedding& emb, Elem x) const {
    Field E = emb.to();
    Elem acc = 0, xp = x;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i]) acc = E->add(acc, E->mul(emb(c_[i]), xp));
        if (i + 1 < c_.size()) xp = E->frob(xp, 1);
    }
    return acc;
}

MRatFun OrePoly::eval(const MRatFun& x) const {
    MRatFun acc(f_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) acc += x.frobenius_power(i).scaled(c_[i]);
    return acc;
}

std::string OrePoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << f_->to_string(c_[i]);
            continue;
        }
        if (c_[i] != 1) os << f_->to_string(c_[i]) << '*';
        os << 'F';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::pair<OrePoly, OrePoly> divmod_right(const OrePoly& P, const OrePoly& D) {
    if (D.is_zero()) fail(ErrorCode::DivisionByZero, "Ore division by zero");
    Field f = pick(P.field(), D.field());
    std::vector<Elem> q(P.degree() >= D.degree() ? P.degree() - D.degree() + 1 : 0, 0);
    OrePoly R = P;
    const auto m = static_cast<std::size_t>(D.degree());
    while (!R.is_zero() && R.degree() >= D.degree()) {
        const auto k = static_cast<std::size_t>(R.degree()) - m;
        // q F^k · d_m F^m = q d_m^{p^k} F^{k+m}
        const Elem c = f->div(R.lead(), f->frob(D.lead(), k));
        q[k] = c;
        R -= OrePoly::monomial(f, c, k) * D;
    }
    return {OrePoly(f, std::move(q)), R};
}

std::pair<OrePoly, OrePoly> divmod_left(const OrePoly& P, const OrePoly& D) {
    if (D.is_zero()) fail(ErrorCode::DivisionByZero, "Ore division by zero");
    Field f = pick(P.field(), D.field());
    std::vector<Elem> q(P.degree() >= D.degree() ? P.degree() - D.degree() + 1 : 0, 0);
    OrePoly R = P;
    const auto m = static_cast<std::size_t>(D.degree());
    while (!R.is_zero() && R.degree() >= D.degree()) {
        const auto k = static_cast<std::size_t>(R.degree()) - m;
        // d_m F^m · q F^k = d_m q^{p^m} F^{m+k}
        const Elem c = f->frob_inv(f->div(R.lead(), D.lead()), m);
        q[k] = c;
        R -= D * OrePoly::monomial(f, c, k);
    }
    return {OrePoly(f, std::move(q)), R};
}

std::vector<CPoly> center_decompose(const OrePoly& P) {
    Field f = P.field();
    require(f != nullptr, "Ore polynomial without a field");
    const std::size_t ell = f->degree();
    std::vector<std::vector<Elem>> parts(ell);
    const auto& c = P.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        auto& v = parts[k % ell];
        if (v.size() <= k / ell) v.resize(k / ell + 1, 0);
        v[k / ell] = c[k];
    }
    std::vector<CPoly> out;
    out.reserve(ell);
    for (auto& v : parts) out.emplace_back(f, std::move(v));
    return out;
}

OrePoly center_recompose(const std::vector<CPoly>& parts) {
    require(!parts.empty(), "empty center decomposition");
    Field f = parts[0].field();
    const std::size_t ell = f->degree();
    require(parts.size() == ell, "center decomposition has the wrong number of parts");
    std::size_t len = 0;
    for (std::size_t i = 0; i < ell; ++i)
        if (!parts[i].is_zero()) len = std::max(len, parts[i].coeffs().size() * ell);
    std::vector<Elem> v(len, 0);
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = 0; j < parts[i].coeffs().size(); ++j) v[j * ell + i] = parts[i].coeffs()[j];
    return OrePoly(f, std::move(v));
}

bool is_central(const OrePoly& P) {
    if (P.is_zero()) return true;
    const auto parts = center_decompose(P);
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (!parts[i].is_zero()) return false;
    return parts[0].in_prime_field();
}

OreMatrix ore_zero(Field f, std::size_t r, std::size_t c) { return OreMatrix(r, c, OrePoly(f)); }

OreMatrix ore_identity(Field f, std::size_t n) { return OreMatrix::identity(n, OrePoly(f), OrePoly::constant(f, 1)); }

std::vector<MRatFun> apply(const OreMatrix& A, const std::vector<MRatFun>& x) {
    require(A.cols() == x.size(), "point dimension does not match the map");
    std::vector<MRatFun> y(A.rows(), MRatFun(A.zero().field()));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!A(i, j).is_zero()) y[i] += A(i, j).eval(x[j]);
    return y;
}

std::vector<Elem> apply(const OreMatrix& A, const Embedding& emb, const std::vector<Elem>& x) {
    require(A.cols() == x.size(), "point dimension does not match the map");
    Field E = emb.to();
    std::vector<Elem> y(A.rows(), 0);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!A(i, j).is_zero()) y[i] = E->add(y[i], A(i, j).eval(emb, x[j]));
    return y;
}

}  // namespace gadyn
