#pragma once

#include "curvedop/decomposition.hpp"
#include "curvedop/grdg.hpp"

namespace curvedop {

// (Delta o id)Delta = (id o Delta)Delta on every generator with
// arity_label <= max_arity (CCX: k-sum <= max_k), expanded to three-level
// trees and compared coefficientwise, truncated at max_weight.
CheckReport check_coassociativity(Family family, int max_arity, int max_weight, int max_k = 3);

// (id (x) theta^c - theta^c (x) id) . Delta_(1) = 0 on every generator in range.
CheckReport check_curved_cooperad_identity(Family family, int max_arity, int max_weight,
                                           int max_k = 3);

// Counit: both counit projections of delta_full return the generator with
// coefficient 1.
CheckReport check_counit(Family family, int max_arity, int max_weight, int max_k = 3);

// delta1 agrees with the two-vertex component of delta_full.
CheckReport check_delta1_consistency(Family family, int max_arity, int max_k = 3);

// The two printed decomposition formulas for the associative Koszul dual
// intertwine under the basis rescaling mu_n -> (-1)^{(n-1)(n+2)/2} mu_n.
CheckReport convention_transport_check(int max_arity);

// Equivariance of delta1 under the symmetric-group action on generators
// (trivially true for SCLIE keys; CCX keys permute their k-list with the
// restricted-signature sign). CUAS uses the nonsymmetric skeleton and is
// excluded by design.
CheckReport check_equivariance(Family family, int max_arity, int max_k = 2);

}  // namespace curvedop
