#include "tango/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tango {
namespace {

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// --- F_p[x] on raw digit vectors (used for the modulus machinery) ---------

using FpVec = std::vector<uint32_t>;  // ascending coefficients, no trailing 0s

void trim(FpVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

FpVec fpv_mul(const FpVec& a, const FpVec& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>(
                (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

// a mod m, m monic
FpVec fpv_mod(FpVec a, const FpVec& m, uint64_t p) {
    trim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint64_t lead = a.back();
        size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i < m.size(); ++i) {
            uint64_t sub = (lead * m[i]) % p;
            uint64_t cur = a[shift + i];
            a[shift + i] = static_cast<uint32_t>((cur + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

FpVec fpv_mulmod(const FpVec& a, const FpVec& b, const FpVec& m, uint64_t p) {
    return fpv_mod(fpv_mul(a, b, p), m, p);
}

// base^(p^k) mod m via k successive p-th powers
FpVec fpv_pow_p_iter(FpVec base, uint32_t k, const FpVec& m, uint64_t p) {
    for (uint32_t i = 0; i < k; ++i) {
        FpVec acc{1};
        FpVec sq = base;
        uint64_t e = p;
        while (e) {
            if (e & 1) acc = fpv_mulmod(acc, sq, m, p);
            sq = fpv_mulmod(sq, sq, m, p);
            e >>= 1;
        }
        base = acc;
    }
    return base;
}

FpVec fpv_gcd(FpVec a, FpVec b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b with b not necessarily monic: scale
        uint64_t lb = b.back();
        // inverse of lb mod p
        uint64_t inv = 1, base = lb, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        FpVec bm = b;
        for (auto& c : bm) c = static_cast<uint32_t>(c * inv % p);
        a = fpv_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin irreducibility test for monic f of degree n over F_p.
bool fpv_irreducible(const FpVec& f, uint64_t p) {
    const size_t n = f.size() - 1;
    if (n == 1) return true;
    FpVec x{0, 1};
    // x^{p^n} == x mod f
    FpVec xpn = fpv_pow_p_iter(x, static_cast<uint32_t>(n), f, p);
    if (xpn != fpv_mod(x, f, p)) return false;
    // gcd(x^{p^{n/r}} - x, f) == 1 for every prime r | n
    size_t nn = n;
    for (size_t r = 2; r * r <= nn; ++r) {
        if (nn % r) continue;
        while (nn % r == 0) nn /= r;
        FpVec g = fpv_pow_p_iter(x, static_cast<uint32_t>(n / r), f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = static_cast<uint32_t>((g[1] + p - 1) % p);
        trim(g);
        FpVec d = fpv_gcd(g, f, p);
        if (d.size() != 1) return false;
    }
    if (nn > 1) {
        FpVec g = fpv_pow_p_iter(x, static_cast<uint32_t>(n / nn), f, p);
        if (g.size() < 2) g.resize(2, 0);
        g[1] = static_cast<uint32_t>((g[1] + p - 1) % p);
        trim(g);
        FpVec d = fpv_gcd(g, f, p);
        if (d.size() != 1) return false;
    }
    return true;
}

FpVec smallest_irreducible(uint32_t p, uint32_t n) {
    // Scan monic degree-n polynomials in lexicographic order (highest
    // coefficient most significant).  Candidate k has base-p digits
    // (c_{n-1}, ..., c_0) reading from most significant down.
    if (n == 1) return FpVec{0, 1};  // x
    uint64_t total = 1;
    for (uint32_t i = 0; i < n; ++i) total *= p;
    for (uint64_t k = 0; k < total; ++k) {
        FpVec f(n + 1, 0);
        f[n] = 1;
        uint64_t v = k;
        for (uint32_t i = 0; i < n; ++i) {  // c_0 least significant
            f[i] = static_cast<uint32_t>(v % p);
            v /= p;
        }
        if (fpv_irreducible(f, p)) return f;
    }
    throw FieldError("no irreducible polynomial found (unreachable)");
}

}  // namespace

// --- FieldCtx -------------------------------------------------------------

FieldCtxPtr FieldCtx::create(uint32_t p, uint32_t n, uint32_t degree_cap) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw FieldError("characteristic must be an odd prime >= 3, got " +
                         std::to_string(p));
    if (n < 1 || n > degree_cap)
        throw FieldError("extension degree " + std::to_string(n) +
                         " out of range [1, " + std::to_string(degree_cap) +
                         "]");
    unsigned __int128 sz = 1;
    for (uint32_t i = 0; i < n; ++i) {
        sz *= p;
        if (sz > (static_cast<unsigned __int128>(1) << 62))
            throw FieldError("field size p^n too large for this build");
    }
    FpVec mod = smallest_irreducible(p, n);
    return FieldCtxPtr(
        new FieldCtx(p, n, std::move(mod), static_cast<uint64_t>(sz)));
}

FieldElem FieldCtx::zero() const {
    return FieldElem(shared_from_this(), std::vector<uint32_t>(n_, 0));
}

FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::gen() const {
    std::vector<uint32_t> d(n_, 0);
    if (n_ >= 2)
        d[1] = 1;
    else
        return from_digits(fpv_mod({0, 1}, modulus_, p_));  // t = x mod x = 0
    return FieldElem(shared_from_this(), std::move(d));
}

FieldElem FieldCtx::from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    std::vector<uint32_t> d(n_, 0);
    d[0] = static_cast<uint32_t>(r);
    return FieldElem(shared_from_this(), std::move(d));
}

FieldElem FieldCtx::from_digits(std::vector<uint32_t> digits) const {
    if (digits.size() > n_)
        throw FieldError("digit vector longer than extension degree");
    digits.resize(n_, 0);
    for (auto& c : digits) c %= p_;
    return FieldElem(shared_from_this(), std::move(digits));
}

FieldElem FieldCtx::from_index(uint64_t k) const {
    if (k >= size_) throw FieldError("element index out of range");
    std::vector<uint32_t> d(n_, 0);
    for (uint32_t i = 0; i < n_; ++i) {
        d[i] = static_cast<uint32_t>(k % p_);
        k /= p_;
    }
    return FieldElem(shared_from_this(), std::move(d));
}

uint64_t FieldCtx::index_of(const FieldElem& e) const {
    uint64_t k = 0;
    for (uint32_t i = n_; i-- > 0;) k = k * p_ + e.digits()[i];
    return k;
}

// --- FieldElem ------------------------------------------------------------

namespace {
void check_same(const FieldElem& a, const FieldElem& b) {
    if (!a.ctx() || !b.ctx() || !a.ctx()->same_field(*b.ctx()))
        throw FieldError("elements belong to different fields");
}
}  // namespace

bool FieldElem::is_zero() const {
    return std::all_of(rep_.begin(), rep_.end(),
                       [](uint32_t c) { return c == 0; });
}

bool FieldElem::is_one() const {
    if (rep_.empty() || rep_[0] != 1) return false;
    return std::all_of(rep_.begin() + 1, rep_.end(),
                       [](uint32_t c) { return c == 0; });
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(*this, o);
    const uint64_t p = ctx_->characteristic();
    std::vector<uint32_t> r(rep_.size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = static_cast<uint32_t>((rep_[i] + static_cast<uint64_t>(o.rep_[i])) % p);
    return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(*this, o);
    const uint64_t p = ctx_->characteristic();
    std::vector<uint32_t> r(rep_.size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = static_cast<uint32_t>((rep_[i] + p - o.rep_[i]) % p);
    return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator-() const {
    const uint64_t p = ctx_->characteristic();
    std::vector<uint32_t> r(rep_.size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = static_cast<uint32_t>((p - rep_[i]) % p);
    return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(*this, o);
    const uint64_t p = ctx_->characteristic();
    FpVec a(rep_.begin(), rep_.end());
    FpVec b(o.rep_.begin(), o.rep_.end());
    trim(a);
    trim(b);
    FpVec r = fpv_mod(fpv_mul(a, b, p), ctx_->modulus(), p);
    r.resize(ctx_->extension_degree(), 0);
    return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    const uint64_t p = ctx_->characteristic();
    // extended Euclid in F_p[x] against the modulus
    FpVec r0 = ctx_->modulus();
    FpVec r1(rep_.begin(), rep_.end());
    trim(r1);
    FpVec s0{}, s1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        FpVec q;
        FpVec rem = r0;
        trim(rem);
        uint64_t inv_lead = 1;
        {
            uint64_t base = r1.back(), e = p - 2;
            while (e) {
                if (e & 1) inv_lead = inv_lead * base % p;
                base = base * base % p;
                e >>= 1;
            }
        }
        if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            uint64_t c = rem.back() * inv_lead % p;
            size_t shift = rem.size() - r1.size();
            q[shift] = static_cast<uint32_t>(c);
            for (size_t i = 0; i < r1.size(); ++i) {
                uint64_t sub = c * r1[i] % p;
                rem[shift + i] =
                    static_cast<uint32_t>((rem[shift + i] + p - sub) % p);
            }
            trim(rem);
        }
        trim(q);
        // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - q*s1)
        FpVec qs = fpv_mul(q, s1, p);
        FpVec s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (size_t i = 0; i < qs.size(); ++i)
            s2[i] = static_cast<uint32_t>((s2[i] + p - qs[i]) % p);
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant since modulus is irreducible)
    if (r0.size() != 1)
        throw FieldError("modulus is not irreducible (bug)");
    uint64_t inv_g = 1, base = r0[0], e = p - 2;
    while (e) {
        if (e & 1) inv_g = inv_g * base % p;
        base = base * base % p;
        e >>= 1;
    }
    for (auto& c : s0) c = static_cast<uint32_t>(c * inv_g % p);
    s0 = fpv_mod(std::move(s0), ctx_->modulus(), p);
    s0.resize(ctx_->extension_degree(), 0);
    return FieldElem(ctx_, std::move(s0));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    return *this * o.inverse();
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same(*this, o);
    return rep_ == o.rep_;
}

FieldElem FieldElem::pow(uint64_t e) const {
    FieldElem acc = ctx_->one();
    FieldElem sq = *this;
    while (e) {
        if (e & 1) acc = acc * sq;
        sq = sq * sq;
        e >>= 1;
    }
    return acc;
}

bool FieldElem::in_prime_field() const {
    return std::all_of(rep_.begin() + 1, rep_.end(),
                       [](uint32_t c) { return c == 0; });
}

uint64_t FieldElem::prime_value() const {
    if (!in_prime_field())
        throw FieldError("element does not lie in the prime field");
    return rep_[0];
}

std::string FieldElem::to_string() const {
    if (ctx_->extension_degree() == 1) return std::to_string(rep_[0]);
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < rep_.size(); ++i) {
        if (i) os << ' ';
        os << rep_[i];
    }
    os << ']';
    return os.str();
}

FieldElem frobenius(const FieldElem& e) {
    return e.pow(e.ctx()->characteristic());
}

FieldElem inv_frobenius(const FieldElem& e) {
    // x -> x^{p^{n-1}} inverts x -> x^p on F_{p^n}
    uint64_t ex = 1;
    const uint32_t p = e.ctx()->characteristic();
    for (uint32_t i = 1; i < e.ctx()->extension_degree(); ++i) ex *= p;
    return e.pow(ex);
}

FieldElem Embedding::operator()(const FieldElem& e) const {
    if (!e.ctx()->same_field(*src_))
        throw FieldError("embedding applied to element of the wrong field");
    // Horner evaluation of the digit polynomial at the chosen root.
    FieldElem acc = dst_->zero();
    for (size_t i = e.digits().size(); i-- > 0;)
        acc = acc * root_ + dst_->from_int(e.digits()[i]);
    return acc;
}

}  // namespace tango
