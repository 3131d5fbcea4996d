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

#include "gadyn/ratfun.hpp"

#include "gadyn/error.hpp"

namespace gadyn {

RatFun::RatFun(const CPoly& num) : num_(num), den_(CPoly::constant(num.field(), 1)) {}

RatFun::RatFun(const CPoly& num, const CPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    canonicalize();
}

void RatFun::canonicalize() {
    Field f = den_.field();
    if (num_.is_zero()) {
        num_ = CPoly(f);
        den_ = CPoly::constant(f, 1);
        return;
    }
    if (!den_.is_constant()) {
        CPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    const Elem l = den_.lead();
    if (l != 1) {
        const Elem li = f->inv(l);
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) canonicalize();
        else if (num_.is_zero()) canonicalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFun(field() ? field() : o.field());
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // cross-cancel before multiplying to limit growth
    CPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    num_ = (num_ / g1) * (o.num_ / g2);
    den_ = (den_ / g2) * (o.den_ / g1);
    canonicalize();
    return *this;
}

RatFun RatFun::inv() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of the zero rational function");
    return RatFun(den_, num_);
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inv(); }

RatFun RatFun::frobenius(std::uint64_t i) const {
    RatFun r;
    r.num_ = num_.frobenius(i);
    r.den_ = den_.frobenius(i);
    return r;
}

RatFun RatFun::over(Field g) const {
    RatFun r;
    r.num_ = num_.over(g);
    r.den_ = den_.over(g);
    return r;
}

std::string RatFun::to_list() const {
    if (den_.is_one()) return num_.to_list();
    return num_.to_list() + " / " + den_.to_list();
}

std::string RatFun::to_string(const char* var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace gadyn
