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

#include "gadyn/cpoly.hpp"

#include <sstream>

#include "gadyn/error.hpp"

namespace gadyn {

namespace {
Field pick(Field a, Field b) {
    if (!a) return b;
    if (b && a != b) fail(ErrorCode::InvalidArgument, "polynomials over different fields");
    return a;
}
}  // namespace

CPoly::CPoly(Field f, std::vector<Elem> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

CPoly CPoly::monomial(Field f, Elem c, std::size_t deg) {
    if (c == 0) return CPoly(f);
    std::vector<Elem> v(deg + 1, 0);
    v[deg] = c;
    return CPoly(f, std::move(v));
}

void CPoly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool CPoly::in_prime_field() const noexcept {
    for (Elem c : c_)
        if (!f_->in_prime_field(c)) return false;
    return true;
}

CPoly& CPoly::operator+=(const CPoly& o) {
    f_ = pick(f_, o.f_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->add(c_[i], o.c_[i]);
    trim();
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    f_ = pick(f_, o.f_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

CPoly CPoly::operator-() const {
    CPoly r = *this;
    for (auto& c : r.c_) c = f_->neg(c);
    return r;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    Field f = pick(a.f_, b.f_);
    if (a.is_zero() || b.is_zero()) return CPoly(f);
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const Elem ai = a.c_[i];
        if (!ai) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j]) r[i + j] = f->add(r[i + j], f->mul(ai, b.c_[j]));
    }
    return CPoly(f, std::move(r));
}

CPoly CPoly::scaled(Elem c) const {
    if (c == 0) return CPoly(f_);
    CPoly r = *this;
    for (auto& x : r.c_) x = f_->mul(x, c);
    return r;
}

CPoly CPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Elem> v(k, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return CPoly(f_, std::move(v));
}

CPoly CPoly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(f_->inv(lead()));
}

CPoly CPoly::derivative() const {
    if (c_.size() <= 1) return CPoly(f_);
    std::vector<Elem> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = f_->mul(c_[i], f_->from_int(static_cast<std::int64_t>(i % f_->p())));
    return CPoly(f_, std::move(v));
}

CPoly CPoly::frobenius(std::uint64_t i) const {
    if (!f_ || i % f_->degree() == 0) return *this;
    CPoly r = *this;
    for (auto& c : r.c_) c = f_->frob(c, i);
    return r;
}

CPoly CPoly::inflate(std::size_t k) const {
    if (k == 1 || c_.size() <= 1) return *this;
    std::vector<Elem> v((c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return CPoly(f_, std::move(v));
}

Elem CPoly::eval(Elem x) const {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
    return r;
}

CPoly CPoly::over(Field g) const {
    if (g == f_) return *this;
    require(!f_ || g->p() == f_->p(), "field change across characteristics");
    for (Elem c : c_)
        if (!g->in_prime_field(c)) fail(ErrorCode::InvalidArgument, "coefficient does not lie in the target field");
    CPoly r(g);
    r.c_ = c_;
    return r;
}

std::string CPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c_[i] == 1;
        if (i == 0 || !unit) os << f_->to_string(c_[i]);
        if (i > 0) {
            if (!unit) os << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::string CPoly::to_list() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << f_->to_string(c_[i]);
    os << ']';
    return os.str();
}

std::pair<CPoly, CPoly> divmod(const CPoly& a, const CPoly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    Field f = a.field() ? a.field() : b.field();
    if (a.degree() < b.degree()) return {CPoly(f), a};
    std::vector<Elem> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Elem> q(r.size() - db, 0);
    const Elem linv = f->inv(b.lead());
    for (std::size_t i = r.size(); i-- > db;) {
        const Elem c = f->mul(r[i], linv);
        if (!c) continue;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            if (bc[j]) r[i - db + j] = f->sub(r[i - db + j], f->mul(c, bc[j]));
    }
    r.resize(db);
    return {CPoly(f, std::move(q)), CPoly(f, std::move(r))};
}

CPoly operator/(const CPoly& a, const CPoly& b) { return divmod(a, b).first; }
CPoly operator%(const CPoly& a, const CPoly& b) { return divmod(a, b).second; }

CPoly gcd(const CPoly& a0, const CPoly& b0) {
    CPoly a = a0, b = b0;
    while (!b.is_zero()) {
        CPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

CPoly lcm(const CPoly& a, const CPoly& b) {
    if (a.is_zero() || b.is_zero()) return CPoly(a.field() ? a.field() : b.field());
    return (a / gcd(a, b) * b).monic();
}

ExtGcd ext_gcd(const CPoly& a, const CPoly& b) {
    Field f = a.field() ? a.field() : b.field();
    CPoly r0 = a, r1 = b;
    CPoly s0 = CPoly::constant(f, 1), s1(f), t0(f), t1 = CPoly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        CPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        CPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Elem li = f->inv(r0.lead());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

CPoly pow(const CPoly& a, std::uint64_t e) {
    CPoly r = CPoly::constant(a.field(), 1), b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

CPoly mulmod(const CPoly& a, const CPoly& b, const CPoly& m) { return (a * b) % m; }

CPoly powmod(const CPoly& a, std::uint64_t e, const CPoly& m) {
    CPoly r = CPoly::constant(m.field(), 1) % m, b = a % m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        e >>= 1;
        if (e) b = mulmod(b, b, m);
    }
    return r;
}

bool is_irreducible(const CPoly& f) {
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    Field F = f.field();
    const std::uint64_t q = F->order();
    const CPoly x = CPoly::var(F);
    std::vector<CPoly> fp(n + 1);
    fp[0] = x % f;
    for (int i = 1; i <= n; ++i) fp[i] = powmod(fp[i - 1], q, f);
    if (fp[n] != fp[0]) return false;
    for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
        if (!gcd(fp[n / r] - x, f).is_one()) return false;
    }
    return true;
}

CPoly prime_field_closure(const CPoly& d) {
    CPoly out = d.monic();
    Field f = d.field();
    for (unsigned i = 1; i < f->degree(); ++i) out = lcm(out, d.frobenius(i));
    return out;
}

CPoly norm(const CPoly& d) {
    CPoly out = d;
    Field f = d.field();
    for (unsigned i = 1; i < f->degree(); ++i) out = out * d.frobenius(i);
    return out;
}

}  // namespace gadyn
