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

#include "gadyn/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "gadyn/error.hpp"

namespace gadyn {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::DivisionByZero: return "division-by-zero";
        case ErrorCode::ReducibleModulus: return "reducible-modulus";
        case ErrorCode::NotDominant: return "not-dominant";
        case ErrorCode::NotInvertible: return "not-invertible";
        case ErrorCode::Capacity: return "capacity";
        case ErrorCode::UnknownClassification: return "unknown-classification";
        case ErrorCode::Parse: return "parse";
    }
    return "error";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// Dense polynomials over F_p used only for modulus validation.
using FpPoly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_rem(FpPoly a, const FpPoly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t linv = powmod(m.back(), p - 2, p);
    while (a.size() > dm) {
        const std::uint64_t c = mulmod(a.back(), linv, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
        trim(a);
    }
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return fp_rem(std::move(r), m, p);
}

FpPoly fp_pow_p(const FpPoly& a, const FpPoly& m, std::uint64_t p) {
    FpPoly result{1}, base = a;
    std::uint64_t e = p;
    while (e) {
        if (e & 1) result = fp_mulmod(result, base, m, p);
        base = fp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = fp_rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

bool fp_irreducible(const FpPoly& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    FpPoly x{0, 1};
    std::vector<FpPoly> frob_powers(n + 1);  // x^{p^i} mod f
    frob_powers[0] = fp_rem(x, f, p);
    for (std::size_t i = 1; i <= n; ++i) frob_powers[i] = fp_pow_p(frob_powers[i - 1], f, p);
    if (frob_powers[n] != frob_powers[0]) return false;
    for (std::uint64_t r : prime_factors(n)) {
        FpPoly d = frob_powers[n / r];
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        if (fp_gcd(d, f, p).size() != 1) return false;
    }
    return true;
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<std::uint64_t, std::vector<std::uint64_t>>, std::unique_ptr<GF>> fields;
    std::map<std::pair<std::uint64_t, unsigned>, Field> standard;
};

Registry& registry() {
    static Registry r;
    return r;
}

constexpr std::uint64_t kTableLimit = 1u << 20;

}  // namespace

struct GFFactory {
    static GF* make(std::uint64_t p, std::vector<std::uint64_t> m) { return new GF(p, std::move(m)); }
};

GF::GF(std::uint64_t p, std::vector<std::uint64_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    k_ = static_cast<unsigned>(modulus_.size() - 1);
    pw_.resize(k_ + 1);
    pw_[0] = 1;
    for (unsigned i = 1; i <= k_; ++i) pw_[i] = pw_[i - 1] * p_;
    q_ = pw_[k_];
    // primitive element
    if (q_ > 2) {
        const auto fac = prime_factors(q_ - 1);
        for (Elem g = 1; g < q_; ++g) {
            bool ok = true;
            for (auto r : fac)
                if (pow(g, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                gen_ = g;
                break;
            }
        }
    }
    if (q_ <= kTableLimit) build_tables();
}

void GF::build_tables() {
    const std::uint64_t n = q_ - 1;
    std::vector<std::uint32_t> lg(q_, 0), ex(2 * n + 1, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        ex[i] = static_cast<std::uint32_t>(x);
        lg[x] = static_cast<std::uint32_t>(i);
        x = mul_slow(x, gen_);
    }
    for (std::uint64_t i = n; i <= 2 * n; ++i) ex[i] = ex[i - n];
    std::vector<std::uint32_t> fr(q_);
    for (Elem a = 0; a < q_; ++a) fr[a] = static_cast<std::uint32_t>(a == 0 ? 0 : ex[(lg[a] * p_) % n]);
    log_ = std::move(lg);
    exp_ = std::move(ex);
    frob1_ = std::move(fr);
}

Field GF::get(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
    if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
    if (modulus.size() < 2) fail(ErrorCode::InvalidArgument, "modulus must have degree >= 1");
    if (p > (1ull << 31)) fail(ErrorCode::InvalidArgument, "characteristic too large");
    std::vector<std::uint64_t> m = modulus;
    for (auto& c : m) c %= p;
    if (m.back() != 1) fail(ErrorCode::InvalidArgument, "modulus must be monic");
    {
        // overflow guard for the element encoding
        long double size = 1;
        for (std::size_t i = 1; i < m.size(); ++i) size *= static_cast<long double>(p);
        if (size > 9.2e18L) fail(ErrorCode::Capacity, "field too large for 64-bit element encoding");
    }
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(p, m);
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return it->second.get();
    if (!fp_irreducible(m, p)) fail(ErrorCode::ReducibleModulus, "modulus is not irreducible over F_" + std::to_string(p));
    std::unique_ptr<GF> f(GFFactory::make(p, m));
    Field out = f.get();
    reg.fields.emplace(key, std::move(f));
    return out;
}

Field GF::standard(std::uint64_t p, unsigned k) {
    if (k == 0) fail(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
    {
        Registry& reg = registry();
        std::lock_guard<std::mutex> lock(reg.mu);
        auto it = reg.standard.find({p, k});
        if (it != reg.standard.end()) return it->second;
    }
    // enumerate monic polynomials by the integer value of (c_0, ..., c_{k-1})
    std::vector<std::uint64_t> m(k + 1, 0);
    m[k] = 1;
    Field found = nullptr;
    while (true) {
        if (k == 1 || m[0] != 0) {
            if (fp_irreducible(m, p)) {
                found = get(p, m);
                break;
            }
        }
        std::size_t i = 0;
        while (i < k && ++m[i] == p) m[i++] = 0;
        if (i == k) break;
    }
    if (!found) fail(ErrorCode::InvalidArgument, "no irreducible polynomial found");
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    reg.standard[{p, k}] = found;
    return found;
}

Field GF::prime_field() const { return prime(p_); }

Elem GF::add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * pw_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

Elem GF::neg(Elem a) const noexcept {
    if (p_ == 2) return a;
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * pw_[i];
        a /= p_;
    }
    return r;
}

Elem GF::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem GF::mul_slow(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return mulmod(a, b, p_);
    if (p_ == 2) {
        // carry-less multiply then reduce
        unsigned __int128 prod = 0;
        for (unsigned i = 0; i < k_; ++i)
            if ((b >> i) & 1) prod ^= static_cast<unsigned __int128>(a) << i;
        unsigned __int128 mod = 0;
        for (unsigned i = 0; i <= k_; ++i)
            if (modulus_[i]) mod |= static_cast<unsigned __int128>(1) << i;
        for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i)
            if ((prod >> i) & 1) prod ^= mod << (i - k_);
        return static_cast<Elem>(prod);
    }
    std::uint64_t da[64], db[64], r[128];
    for (unsigned i = 0; i < k_; ++i) {
        da[i] = a % p_;
        db[i] = b % p_;
        a /= p_;
        b /= p_;
    }
    for (unsigned i = 0; i < 2 * k_; ++i) r[i] = 0;
    for (unsigned i = 0; i < k_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + mulmod(da[i], db[j], p_)) % p_;
    }
    for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i) {
        const std::uint64_t c = r[i];
        if (!c) continue;
        for (unsigned j = 0; j <= k_; ++j) {
            const unsigned idx = static_cast<unsigned>(i) - k_ + j;
            r[idx] = (r[idx] + p_ - mulmod(c, modulus_[j], p_)) % p_;
        }
    }
    Elem out = 0;
    for (unsigned i = 0; i < k_; ++i) out += r[i] * pw_[i];
    return out;
}

Elem GF::mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
}

Elem GF::inv(Elem a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in " + describe());
    if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

Elem GF::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!log_.empty()) {
        const std::uint64_t n = q_ - 1;
        const auto le = static_cast<std::uint64_t>(static_cast<unsigned __int128>(log_[a]) * (e % n) % n);
        return exp_[le];
    }
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return r;
}

Elem GF::frob(Elem a, std::uint64_t i) const noexcept {
    i %= k_;
    if (i == 0 || a < p_) return a;
    if (!frob1_.empty()) {
        for (std::uint64_t j = 0; j < i; ++j) a = frob1_[a];
        return a;
    }
    for (std::uint64_t j = 0; j < i; ++j) a = pow(a, p_);
    return a;
}

Elem GF::from_int(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<Elem>(r);
}

std::vector<std::uint64_t> GF::digits(Elem a) const {
    std::vector<std::uint64_t> d(k_);
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem GF::from_digits(std::span<const std::uint64_t> d) const {
    if (d.size() > k_) fail(ErrorCode::InvalidArgument, "too many digits for " + describe());
    Elem r = 0;
    for (std::size_t i = 0; i < d.size(); ++i) r += (d[i] % p_) * pw_[i];
    return r;
}

std::string GF::to_string(Elem a) const {
    if (k_ == 1) return std::to_string(a);
    std::ostringstream os;
    os << '[';
    auto d = digits(a);
    for (unsigned i = 0; i < k_; ++i) os << (i ? "," : "") << d[i];
    os << ']';
    return os.str();
}

std::string GF::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (k_ > 1) {
        os << " = F_" << p_ << "[x]/(";
        bool first = true;
        for (int i = static_cast<int>(k_); i >= 0; --i) {
            const auto c = modulus_[i];
            if (!c) continue;
            if (!first) os << '+';
            first = false;
            if (c != 1 || i == 0) os << c;
            if (i >= 1) os << 'x';
            if (i > 1) os << '^' << i;
        }
        os << ')';
    }
    return os.str();
}

Embedding::Embedding(Field from, Field to) : from_(from), to_(to) {
    require(from->p() == to->p(), "embedding between fields of different characteristic");
    require(to->degree() % from->degree() == 0, "embedding requires the degree to divide");
    const unsigned k = from->degree();
    if (k == 1) {
        basis_ = {1};
        return;
    }
    const std::uint64_t qf = from->order();
    const Elem h = to->pow(to->primitive(), (to->order() - 1) / (qf - 1));
    const auto& m = from->modulus();
    Elem c = 1;
    for (std::uint64_t j = 0; j < qf - 1; ++j, c = to->mul(c, h)) {
        Elem v = 0;
        for (int i = static_cast<int>(k); i >= 0; --i) v = to->add(to->mul(v, c), m[i]);
        if (v == 0) {
            basis_.resize(k);
            basis_[0] = 1;
            for (unsigned i = 1; i < k; ++i) basis_[i] = to->mul(basis_[i - 1], c);
            return;
        }
    }
    fail(ErrorCode::InvalidArgument, "no root of the modulus found in the target field");
}

Elem Embedding::operator()(Elem a) const {
    if (a < from_->p()) return a;
    Elem r = 0;
    const auto p = from_->p();
    for (std::size_t i = 0; i < basis_.size() && a; ++i, a /= p) {
        const std::uint64_t d = a % p;
        if (d) r = to_->add(r, to_->mul(d, basis_[i]));
    }
    return r;
}

unsigned extension_degree_for(std::uint64_t p, unsigned multiple_of, std::uint64_t min_size) {
    unsigned k = multiple_of;
    while (true) {
        long double size = 1;
        for (unsigned i = 0; i < k; ++i) size *= static_cast<long double>(p);
        if (size >= static_cast<long double>(min_size)) return k;
        k += multiple_of;
    }
}

}  // namespace gadyn
