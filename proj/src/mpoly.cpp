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

#include "gadyn/mpoly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "gadyn/error.hpp"

namespace gadyn {

namespace {

constexpr std::uint64_t kDenseGcdLimit = 4096;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
        fail(ErrorCode::Capacity, "exponent overflow in multivariate polynomial");
    return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        fail(ErrorCode::Capacity, "exponent overflow in multivariate polynomial");
    return a + b;
}

Field pick(Field a, Field b) {
    if (!a) return b;
    if (b && a != b) fail(ErrorCode::InvalidArgument, "polynomials over different fields");
    return a;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlex_greater(a, b); }
};

}  // namespace

std::uint64_t Monomial::total() const noexcept {
    std::uint64_t s = 0;
    for (auto x : e) s += x;
    return s;
}

bool Monomial::divides(const Monomial& o) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::var(std::size_t i, std::uint64_t power) {
    require(i < kMaxVars, "variable index out of range");
    Monomial m;
    m.e[i] = power;
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = checked_add(a.e[i], b.e[i]);
    return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = a.e[i] - b.e[i];
    return m;
}

bool grlex_greater(const Monomial& a, const Monomial& b) noexcept {
    const auto ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
    return a.e > b.e;
}

MPoly::MPoly(Field f, std::vector<Term> terms) : f_(f) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return grlex_greater(x.first, y.first); });
    for (auto& t : terms) {
        if (!t_.empty() && t_.back().first == t.first) {
            t_.back().second = f_->add(t_.back().second, t.second);
            if (t_.back().second == 0) t_.pop_back();
        } else if (t.second != 0) {
            t_.push_back(t);
        }
    }
}

MPoly MPoly::constant(Field f, Elem c) {
    MPoly r(f);
    if (c) r.t_.push_back({Monomial{}, c});
    return r;
}

MPoly MPoly::var(Field f, std::size_t i) {
    MPoly r(f);
    r.t_.push_back({Monomial::var(i), 1});
    return r;
}

MPoly MPoly::from_univariate(const CPoly& p, std::size_t var) {
    MPoly r(p.field());
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        if (c[i]) r.t_.push_back({Monomial::var(var, i), c[i]});
    return r;
}

bool MPoly::is_constant() const noexcept { return t_.empty() || (t_.size() == 1 && t_[0].first.total() == 0); }

Elem MPoly::constant_term() const noexcept {
    if (!t_.empty() && t_.back().first.total() == 0) return t_.back().second;
    return 0;
}

std::uint64_t MPoly::total_degree() const noexcept { return t_.empty() ? 0 : t_.front().first.total(); }

int MPoly::sole_variable() const noexcept {
    int v = -1;
    for (const auto& [m, c] : t_)
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (m.e[i]) {
                if (v == -1) v = static_cast<int>(i);
                else if (v != static_cast<int>(i)) return -2;
            }
    return v;
}

std::uint64_t MPoly::max_exponent(std::size_t var) const noexcept {
    std::uint64_t r = 0;
    for (const auto& [m, c] : t_) r = std::max(r, m.e[var]);
    return r;
}

Monomial MPoly::monomial_content() const noexcept {
    Monomial r;
    if (t_.empty()) return r;
    r = t_[0].first;
    for (const auto& [m, c] : t_)
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::min(r.e[i], m.e[i]);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    f_ = pick(f_, o.f_);
    if (o.t_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && grlex_greater(t_[i].first, o.t_[j].first))) {
            out.push_back(t_[i++]);
        } else if (i == t_.size() || grlex_greater(o.t_[j].first, t_[i].first)) {
            out.push_back(o.t_[j++]);
        } else {
            const Elem c = f_->add(t_[i].second, o.t_[j].second);
            if (c) out.push_back({t_[i].first, c});
            ++i;
            ++j;
        }
    }
    t_ = std::move(out);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.t_) t.second = f_->neg(t.second);
    return r;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    Field f = pick(a.f_, b.f_);
    if (a.is_zero() || b.is_zero()) return MPoly(f);
    if (b.t_.size() == 1) return a.times(b.t_[0].first).scaled(b.t_[0].second);
    if (a.t_.size() == 1) return b.times(a.t_[0].first).scaled(a.t_[0].second);
    std::vector<MPoly::Term> prod;
    prod.reserve(a.t_.size() * b.t_.size());
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) prod.push_back({ma * mb, f->mul(ca, cb)});
    return MPoly(f, std::move(prod));
}

MPoly MPoly::scaled(Elem c) const {
    if (c == 0) return MPoly(f_);
    MPoly r = *this;
    if (c != 1)
        for (auto& t : r.t_) t.second = f_->mul(t.second, c);
    return r;
}

MPoly MPoly::times(const Monomial& m) const {
    MPoly r = *this;
    for (auto& t : r.t_) t.first = t.first * m;
    return r;
}

MPoly MPoly::divided(const Monomial& m) const {
    MPoly r = *this;
    for (auto& t : r.t_) t.first = t.first / m;
    return r;
}

MPoly MPoly::frobenius_power(std::uint64_t i) const {
    if (i == 0) return *this;
    std::uint64_t scale = 1;
    for (std::uint64_t k = 0; k < i; ++k) scale = checked_mul(scale, f_->p());
    MPoly r = *this;
    for (auto& t : r.t_) {
        for (auto& x : t.first.e) x = checked_mul(x, scale);
        t.second = f_->frob(t.second, i);
    }
    return r;  // scaling exponents by a common factor preserves grlex order
}

MPoly MPoly::over(Field g) const {
    if (g == f_) return *this;
    for (const auto& t : t_)
        if (!g->in_prime_field(t.second)) fail(ErrorCode::InvalidArgument, "coefficient does not lie in the target field");
    MPoly r = *this;
    r.f_ = g;
    return r;
}

Elem MPoly::eval(const Embedding& emb, const std::vector<Elem>& point) const {
    Field E = emb.to();
    Elem acc = 0;
    for (const auto& [m, c] : t_) {
        Elem v = emb(c);
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (!m.e[i]) continue;
            require(i < point.size(), "evaluation point has too few coordinates");
            v = E->mul(v, E->pow(point[i], m.e[i]));
        }
        acc = E->add(acc, v);
    }
    return acc;
}

CPoly MPoly::to_univariate(std::size_t var) const {
    const int sv = sole_variable();
    require(sv == -1 || sv == static_cast<int>(var), "polynomial is not univariate in the requested variable");
    const std::uint64_t d = max_exponent(var);
    if (d > (1u << 24)) fail(ErrorCode::Capacity, "degree too large for a dense univariate view");
    std::vector<Elem> c(t_.empty() ? 0 : d + 1, 0);
    for (const auto& [m, co] : t_) c[m.e[var]] = co;
    return CPoly(f_, std::move(c));
}

std::string MPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        const bool has_var = m.total() > 0;
        bool wrote = false;
        if (c != 1 || !has_var) {
            os << f_->to_string(c);
            wrote = true;
        }
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (!m.e[i]) continue;
            if (wrote) os << '*';
            os << 't' << (i + 1);
            if (m.e[i] > 1) os << '^' << m.e[i];
            wrote = true;
        }
    }
    return os.str();
}

MPoly pow(const MPoly& a, std::uint64_t e) {
    MPoly r = MPoly::constant(a.field(), 1), b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "multivariate division by zero");
    Field f = a.field() ? a.field() : b.field();
    if (a.is_zero()) return MPoly(f);
    if (b.terms().size() == 1) {
        const auto& [bm, bc] = b.terms()[0];
        for (const auto& t : a.terms())
            if (!bm.divides(t.first)) return std::nullopt;
        return a.divided(bm).scaled(f->inv(bc));
    }
    std::map<Monomial, Elem, GrlexGreater> rem;
    for (const auto& t : a.terms()) rem.emplace(t.first, t.second);
    const auto& [lm, lc] = b.lead();
    const Elem lci = f->inv(lc);
    std::vector<MPoly::Term> q;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lm.divides(it->first)) return std::nullopt;
        // the remainder can only shrink in grlex; a lead below lm means no exact quotient
        const Monomial qm = it->first / lm;
        const Elem qc = f->mul(it->second, lci);
        q.push_back({qm, qc});
        for (const auto& [bm, bc] : b.terms()) {
            const Monomial m = qm * bm;
            const Elem v = f->mul(qc, bc);
            auto [pos, inserted] = rem.emplace(m, f->neg(v));
            if (!inserted) {
                pos->second = f->sub(pos->second, v);
                if (pos->second == 0) rem.erase(pos);
            }
        }
    }
    return MPoly(f, std::move(q));
}

MRatFun::MRatFun(const MPoly& num) : num_(num), den_(MPoly::constant(num.field(), 1)) {}

MRatFun::MRatFun(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    canonicalize();
}

void MRatFun::canonicalize() {
    Field f = den_.field();
    if (num_.is_zero()) {
        den_ = MPoly::constant(f, 1);
        return;
    }
    if (!den_.is_constant()) {
        // common monomial factor
        Monomial cn = num_.monomial_content(), cd = den_.monomial_content(), g;
        bool any = false;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            g.e[i] = std::min(cn.e[i], cd.e[i]);
            any = any || g.e[i];
        }
        if (any) {
            num_ = num_.divided(g);
            den_ = den_.divided(g);
        }
    }
    if (!den_.is_constant()) {
        if (auto q = divide_exact(num_, den_)) {
            num_ = *q;
            den_ = MPoly::constant(f, 1);
        }
    }
    if (!den_.is_constant()) {
        const int vn = num_.sole_variable(), vd = den_.sole_variable();
        if (vd >= 0 && (vn == -1 || vn == vd) && den_.max_exponent(vd) <= kDenseGcdLimit &&
            num_.max_exponent(vd) <= kDenseGcdLimit) {
            const auto var = static_cast<std::size_t>(vd);
            CPoly n = num_.to_univariate(var), d = den_.to_univariate(var);
            CPoly g = gcd(n, d);
            if (!g.is_one()) {
                num_ = MPoly::from_univariate(n / g, var);
                den_ = MPoly::from_univariate(d / g, var);
            }
        }
    }
    const Elem l = den_.lead().second;
    if (l != 1) {
        const Elem li = f->inv(l);
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

MRatFun& MRatFun::operator+=(const MRatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    if (auto q = divide_exact(o.den_, den_)) {
        num_ = num_ * *q + o.num_;
        den_ = o.den_;
    } else if (auto q2 = divide_exact(den_, o.den_)) {
        num_ = num_ + o.num_ * *q2;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

MRatFun MRatFun::operator-() const {
    MRatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

MRatFun& MRatFun::operator-=(const MRatFun& o) { return *this += -o; }

MRatFun& MRatFun::operator*=(const MRatFun& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = MRatFun(field());
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

MRatFun MRatFun::inv() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of the zero rational function");
    return MRatFun(den_, num_);
}

MRatFun& MRatFun::operator/=(const MRatFun& o) { return *this *= o.inv(); }

MRatFun MRatFun::scaled(Elem c) const {
    MRatFun r = *this;
    r.num_ = r.num_.scaled(c);
    if (c == 0) r.den_ = MPoly::constant(field(), 1);
    return r;
}

MRatFun MRatFun::frobenius_power(std::uint64_t i) const {
    MRatFun r;
    r.num_ = num_.frobenius_power(i);
    r.den_ = den_.frobenius_power(i);
    return r;
}

MRatFun MRatFun::over(Field g) const {
    MRatFun r;
    r.num_ = num_.over(g);
    r.den_ = den_.over(g);
    return r;
}

std::optional<Elem> MRatFun::eval(const Embedding& emb, const std::vector<Elem>& point) const {
    const Elem d = den_.eval(emb, point);
    if (d == 0) return std::nullopt;
    return emb.to()->div(num_.eval(emb, point), d);
}

bool operator==(const MRatFun& a, const MRatFun& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string MRatFun::to_string() const {
    if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

MRatFun pow(const MRatFun& a, std::uint64_t e) {
    return MRatFun(pow(a.num(), e), pow(a.den(), e));
}

}  // namespace gadyn
