#ifndef QDUNKL_MOMENTS_HPP
#define QDUNKL_MOMENTS_HPP

#include <limits>
#include <optional>

#include <qdunkl/operators.hpp>

namespace qdunkl
{

struct MomentBounds {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    std::optional<double> exact;

    bool contains(double v, double slack) const noexcept { return v >= lower - slack && v <= upper + slack; }
};

// Which closed form to use for the moment bounds.
//
// printed:  the polynomial bounds as they are usually stated for T*(t^2), and
//           the lower bound for T*(t^3). The upper bounds for t^3 and t^4 are
//           typographically incomplete in that statement, so these two always
//           come from the composed form.
// composed: T*(t^p) written through the cell integrals as a nonnegative
//           combination of the weighted node sums S_i = sum_k w_k (A_k/[n]_q)^i,
//           each S_i replaced by its lower/upper bound from dunkl_moment_bounds.
enum class BoundForm { printed, composed };

// T*(t; x) = 2qn/((n+b)[2]) x + n/((n+b)[2][n]) + a/(n+b)
double moment_T1(double x, const StancuParams &p);

// T*(t - x; x)
double central_moment_T1(double x, const StancuParams &p);

// Bounds for T*(t^j; x), j = 2, 3, 4. For j = 4 only the upper bound exists.
MomentBounds moment_T_bounds(unsigned j, double x, const KantorovichOperator &op, BoundForm form = BoundForm::printed);

// Upper bound of T*((t-x)^j; x): j = 2 gives phi_n(x); j = 4 the composed bound
//   U4 - 4x L3 + 6x^2 U2 - 4x^3 T1 + x^4.
double central_moment_bound(unsigned j, double x, const KantorovichOperator &op);

// Quadratic bound phi_n(x) >= lambda_n(x) = T*((t-x)^2; x).
double phi_n(double x, const StancuParams &p);

// Bounds for the weighted node sums D(t^j; x) = S_j, j = 0..4:
//   S_0 = 1, S_1 = x exactly;
//   x^2 + q^{2mu}[1-2mu] r1 x/[n]                                  <= S_2 <= x^2 + [1+2mu] x/[n]
//   x^3 + (2q+1)[1-2mu] r1 x^2/[n] + q^{4mu}[1-2mu]^2 r2 x/[n]^2   <= S_3 <= x^3 + 3[1+2mu] x^2/[n] + [1+2mu]^2 x/[n]^2
//   S_4 <= x^4 + 6[1+2mu] x^3/[n] + 7[1+2mu]^2 x^2/[n]^2 + [1+2mu]^3 x/[n]^3
// with r_i = e_{mu,q}(q^i [n] x)/e_{mu,q}([n] x). Valid for mu >= 0.
MomentBounds dunkl_moment_bounds(unsigned j, double x, const KantorovichOperator &op);

} // namespace qdunkl

#endif
