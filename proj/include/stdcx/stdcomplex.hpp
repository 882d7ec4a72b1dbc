#pragma once

#include <map>

#include "stdcx/core.hpp"
#include "stdcx/matroid.hpp"

namespace stdcx {

// The canonical basis -> face bijection onto the lex standard complex.
struct BijectionTable {
    std::map<FiniteSet, FiniteSet> entries;

    const FiniteSet& at(const FiniteSet& basis) const;
    std::size_t size() const { return entries.size(); }
    FaceSet face_set() const;
};

// Lex standard complex of a 0/1 configuration, by the slice recursion on the
// largest coordinate: S(V) = S(V0) ∪ S(V1) ∪ (n * (S(V0) ∩ S(V1))).
SimplicialComplex lex_standard_complex(const PointConfig& V);

// Lex standard complex of a matroid, by deletion-contraction on the largest
// groundset element.  Agrees with the configuration recursion on the basis
// configuration; |faces| = |bases|.
SimplicialComplex lex_standard_complex(const Matroid& M);

// The unique family of bijections B(M) -> S_lex(M) with Λ(B) ⊆ B that is
// compatible with deletion and contraction at the largest element.
BijectionTable lambda_table(const Matroid& M);

// Single-entry evaluation of the recursion; B must be a basis of M.
FiniteSet lambda_of_basis(const Matroid& M, const FiniteSet& basis);

struct MappingConeParts {
    SimplicialComplex deletion_part;
    SimplicialComplex contraction_part;
    SimplicialComplex intersection;
};

// The three constituents whose assembly (union plus cone over the
// intersection) gives S_lex(M).  Throws "degenerate split" when the largest
// element is a loop or coloop.
MappingConeParts mapping_cone_decomposition(const Matroid& M);

}  // namespace stdcx
