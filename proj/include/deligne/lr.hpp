#pragma once

#include <cstdint>
#include <map>

#include "deligne/bipartition_matrix.hpp"
#include "deligne/partitions.hpp"

namespace deligne {

/// Littlewood-Richardson coefficient c^lambda_{mu,kappa}: the multiplicity of
/// s_lambda in s_mu * s_kappa. Counts semistandard fillings of lambda/mu of
/// content kappa whose reverse reading word is a lattice word.
std::int64_t lr_coeff(const Partition& lambda, const Partition& mu, const Partition& kappa);

/// Expands s_mu * s_kappa in `nvars` variables into Schur polynomials, using
/// explicit polynomials built from semistandard tableaux and repeated
/// subtraction of the lexicographically leading term. Independent of
/// lr_coeff. Throws std::invalid_argument if nvars < |mu| + |kappa|.
std::map<Partition, std::int64_t> schur_product_oracle(const Partition& mu, const Partition& kappa, int nvars);

/// B^lambda_mu = sum_kappa LR^{lambda.black}_{mu.black,kappa} LR^{lambda.white}_{mu.white,kappa}.
std::int64_t B_entry(const Bipartition& lambda, const Bipartition& mu);

BipartitionMatrix B_matrix(int max_size);

}  // namespace deligne
