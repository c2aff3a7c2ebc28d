#ifndef TANGO_FIELD_HPP
#define TANGO_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tango {

/// Raised when an operation would need a field extension beyond the
/// configured degree cap, or when field parameters are invalid.
struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class FieldElem;
class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

constexpr uint32_t kDefaultDegreeCap = 12;

/// The finite field F_{p^n}, p an odd prime, realized as F_p[t]/(modulus).
///
/// The modulus is the lexicographically smallest monic irreducible of
/// degree n over F_p (most significant coefficient compared first), so a
/// given (p, n) always names the same field and serialized data is
/// reproducible across runs.  Contexts are immutable and shared.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    static FieldCtxPtr create(uint32_t p, uint32_t n,
                              uint32_t degree_cap = kDefaultDegreeCap);

    uint32_t characteristic() const { return p_; }
    uint32_t extension_degree() const { return n_; }
    /// Modulus coefficients, ascending, length n+1, monic.
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    /// p^n; guaranteed to fit in uint64 at construction time.
    uint64_t size() const { return size_; }

    FieldElem zero() const;
    FieldElem one() const;
    /// The residue class of t (equals 0 in a prime field).
    FieldElem gen() const;
    /// Constant embedding of an integer (reduced mod p).
    FieldElem from_int(int64_t v) const;
    /// Element with the given digit vector (little-endian, length <= n,
    /// entries reduced mod p).
    FieldElem from_digits(std::vector<uint32_t> digits) const;
    /// Enumeration order: index k has digits of k base p, little-endian.
    FieldElem from_index(uint64_t k) const;
    uint64_t index_of(const FieldElem& e) const;

    bool same_field(const FieldCtx& other) const {
        return p_ == other.p_ && n_ == other.n_;
    }

private:
    FieldCtx(uint32_t p, uint32_t n, std::vector<uint32_t> modulus,
             uint64_t size)
        : p_(p), n_(n), modulus_(std::move(modulus)), size_(size) {}

    uint32_t p_;
    uint32_t n_;
    std::vector<uint32_t> modulus_;
    uint64_t size_;

    friend class FieldElem;
};

/// An element of F_{p^n}: a coefficient vector of length n over Z/p in the
/// power basis of the modulus.  Immutable value type; all arithmetic is
/// exact and stays inside the owning context.
class FieldElem {
public:
    FieldElem() = default;

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<uint32_t>& digits() const { return rep_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem inverse() const;
    FieldElem pow(uint64_t e) const;

    /// True iff the element lies in the prime field F_p.
    bool in_prime_field() const;
    /// The value as an integer in [0, p); requires in_prime_field().
    uint64_t prime_value() const;

    std::string to_string() const;

private:
    FieldElem(FieldCtxPtr ctx, std::vector<uint32_t> rep)
        : ctx_(std::move(ctx)), rep_(std::move(rep)) {}

    FieldCtxPtr ctx_;
    std::vector<uint32_t> rep_;

    friend class FieldCtx;
    friend FieldElem frobenius(const FieldElem&);
    friend FieldElem inv_frobenius(const FieldElem&);
    friend class Embedding;
};

/// Coefficient Frobenius x -> x^p; a field automorphism fixing F_p.
FieldElem frobenius(const FieldElem& e);
/// The unique p-th root, x -> x^{p^{n-1}}; inverse of frobenius.
FieldElem inv_frobenius(const FieldElem& e);

/// The computed embedding F_{p^m} -> F_{p^M} for m | M: the smaller field's
/// modulus is root-found in the larger field and the root with the smallest
/// enumeration index is fixed, so the map is deterministic (embeddings are
/// direct source-to-target maps, not a compatible tower system).
class Embedding {
public:
    Embedding(FieldCtxPtr source, FieldCtxPtr target);
    FieldElem operator()(const FieldElem& e) const;

    const FieldCtxPtr& source() const { return src_; }
    const FieldCtxPtr& target() const { return dst_; }
    const FieldElem& modulus_root() const { return root_; }

private:
    FieldCtxPtr src_;
    FieldCtxPtr dst_;
    FieldElem root_;
};

/// field_create per the module contract: validates p odd prime and
/// 1 <= n <= cap, then builds the deterministic modulus.
inline FieldCtxPtr field_create(uint32_t p, uint32_t n,
                                uint32_t degree_cap = kDefaultDegreeCap) {
    return FieldCtx::create(p, n, degree_cap);
}

}  // namespace tango

#endif
