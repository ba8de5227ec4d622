#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "einsp/expr.hpp"
#include "einsp/rational.hpp"

namespace einsp {

// Quaternionic Stiefel manifold Sp(n)/Sp(n-p) fibered over the generalized
// Wallach space Sp(n)/(Sp(k1) x Sp(k2) x Sp(k3)), n = k1+k2+k3, p = k1+k2.
// Metric summands, in order: sp(k1), sp(k2), p12, p13, p23 with scales
// (x1, x2, x12, x13, x23).
struct WallachSpec {
  long k1 = 1, k2 = 1, k3 = 1;
  long n() const { return k1 + k2 + k3; }
  long p() const { return k1 + k2; }
};

// The same Stiefel manifold fibered over the flag manifold
// Sp(n)/(U(p) x Sp(n-p)).  Summands: center of u(p), su(p), and the two
// horizontal modules, with scales (u0, u1, u2, u3).
struct FlagSpec {
  long n = 3, p = 2;
};

using FibrationSpec = std::variant<WallachSpec, FlagSpec>;

// Throws SpecError unless all Wallach k_i >= 1, or 2 <= p < n for the flag
// case (p = 1 collapses the su(p) summand to dimension zero and both Ricci
// forms divide by it; p >= n degenerates the fiber).
void validate_spec(const FibrationSpec& spec);

std::string spec_name(const FibrationSpec& spec);

// Metric coordinate names in summand order.
std::vector<std::string> summand_labels(const FibrationSpec& spec);

// Real dimensions of the summands, in label order.
std::vector<long> summand_dims(const FibrationSpec& spec);

// Nonzero triple products A_{ijk} (sums of squared bracket coefficients over
// (-B)-orthonormal bases), keyed by ascending summand index; fully symmetric.
using TripleKey = std::array<int, 3>;
std::map<TripleKey, BigRational> structure_constants(const FibrationSpec& spec);

// Symmetric lookup helper (any index order).
BigRational triple_value(const std::map<TripleKey, BigRational>& A, int i, int j, int k);

// Ricci components straight from the structure constants:
//   r_k = 1/(2 x_k) + 1/(4 d_k) sum_{j,i} A_{jik} x_k/(x_j x_i)
//                   - 1/(2 d_k) sum_{j,i} A_{kij} x_j/(x_k x_i).
std::vector<BigRational> ricci_general(const std::vector<long>& dims,
                                       const std::map<TripleKey, BigRational>& A,
                                       const std::vector<BigRational>& x);
std::vector<BigRational> ricci_general(const FibrationSpec& spec,
                                       const std::vector<BigRational>& x);

// Closed-form Ricci components as expression trees in the metric variables.
std::vector<ExprPtr> ricci_closed_form(const FibrationSpec& spec);

// Flag closed form with n and p left symbolic (variables "n", "p").
std::vector<ExprPtr> flag_ricci_symbolic();

// Exact evaluation of closed-form components at a positive metric point.
std::vector<BigRational> ricci_closed_at(const FibrationSpec& spec,
                                         const std::vector<BigRational>& x);

}  // namespace einsp
