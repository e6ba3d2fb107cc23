#pragma once

// Reference computations that share no code path with the library routines
// they are compared against.

#include <cstddef>
#include <map>
#include <vector>

#include "gstruct/char_forms.hpp"
#include "gstruct/relations.hpp"

namespace gstruct::oracle {

/// a_j = (-1)^j (k-1)! / ((k+j)! (k-1-j)!) with 128-bit integer factorials.
Rational cs_coefficient(int k, int j);

/// Todd components in chat_1..chat_8 from log(x / (1 - e^-x)) through
/// power sums, as partition -> coefficient maps.
std::vector<std::map<Partition, Rational>> todd_components(int max_degree);

/// chat_k as sums of principal minors, each expanded over permutations.
std::vector<GradedPoly> leibniz_chern(const FormMatrix& omega);

/// dim g1 as symmetric tensors in Sym^2 V* (x) V whose slices lie in g,
/// tested against the annihilator of g in gl(V).
std::size_t prolongation_dim(const LieAlgebra& g);

}  // namespace gstruct::oracle
