#ifndef TANGO_CONNECTION_HPP
#define TANGO_CONNECTION_HPP

#include <vector>

#include "tango/certificate.hpp"
#include "tango/forms.hpp"

namespace tango {

struct MonodromyError : std::domain_error {
    using std::domain_error::domain_error;
};

struct MarkedPoint {
    FieldElem point;
    FieldElem expected_monodromy;  // must lie in the prime field
};

/// A rank-1 logarithmic connection d + omega in the fixed dx-frame of the
/// affine chart, with marked points and their expected frame residues.
/// Frame monodromy at a marked point means exactly the residue of omega
/// there in this frame; no log-frame renormalization is ever applied.
class RankOneLogConn {
public:
    RankOneLogConn(Differential omega, std::vector<MarkedPoint> marked);

    const Differential& omega() const { return omega_; }
    const std::vector<MarkedPoint>& marked() const { return marked_; }
    const FieldCtxPtr& ctx() const { return omega_.ctx(); }

private:
    Differential omega_;
    std::vector<MarkedPoint> marked_;
};

/// psi = f^p + f^{(p-1)} for omega = f dx; zero iff d + omega has vanishing
/// p-curvature.  The closed form is validated against p_curvature_oracle
/// (exact agreement is a test obligation, not an assumption).
RationalFn p_curvature_rank1(const Differential& w);

/// Brute-force oracle: apply g -> g' + f g exactly p times to the constant
/// 1 (this is (d/dx + f)^p acting on 1).  Guarded to p <= 13.
RationalFn p_curvature_oracle(const Differential& w);

/// Residue of omega at the marked point z, asserted to lie in F_p.
/// Errors: z unmarked, or residue outside the prime field.
FieldElem frame_monodromy(const RankOneLogConn& c, const FieldElem& z);

/// The connection d + (f'/f) dx for f = prod (x - z_i), all expected frame
/// monodromies 1.  No congruence constraint on |z|.
RankOneLogConn log_derivative_connection(const std::vector<FieldElem>& z);

/// Same, but enforces |z| = 1 mod p (the pre-Tango point-count shape).
RankOneLogConn pretango_from_points(const std::vector<FieldElem>& z);

/// Pre-Tango certificate for connections of the logarithmic-derivative
/// family.  Steps: (1) vanishing p-curvature, (2) frame monodromies match
/// expectations, (3) the horizontal-kernel generator of the associated
/// residue-2 connection on the 1-form sheaf, dx/f^2, lies in the Cartier
/// kernel.  Both the adopted dx/f^2 reading and the literal dx/f reading
/// are computed and recorded in the step-3 witness.
Certificate certify_pretango(const RankOneLogConn& c,
                             uint64_t seed = kDefaultSeed);

/// Monodromy scaling under a tame degree-R pullback t = s^R: l -> l * R
/// mod p.  Errors when p divides R (wild ramification).
uint64_t pullback_local(uint64_t l, uint64_t ram_index, uint32_t p);

}  // namespace tango

#endif
