#pragma once

#include <string>
#include <vector>

#include "stdcx/core.hpp"

namespace stdcx {

// A matroid given by an explicit basis list.  Construction validates the
// basis-exchange axiom unless the caller opts out for families known valid
// by construction (uniform, lattice path, minors of validated matroids).
class Matroid {
  public:
    enum class Validation { full, skip };

    static Matroid from_bases(FiniteSet groundset, FaceSet bases,
                              Validation v = Validation::full);

    const FiniteSet& groundset() const { return groundset_; }
    int rank() const { return rank_; }
    const FaceSet& bases() const { return bases_; }
    std::size_t basis_count() const { return bases_.size(); }
    bool is_basis(const FiniteSet& b) const { return bases_.count(b) > 0; }
    // A set is independent iff it is a subset of some basis.
    bool is_independent(const FiniteSet& s) const;

    // "groundset|bases" with canonical face order; keys equal iff matroids equal.
    std::string canonical_key() const;

    void validate() const;  // throws std::invalid_argument with a witness

    friend bool operator==(const Matroid&, const Matroid&) = default;

  private:
    FiniteSet groundset_;
    int rank_ = 0;
    FaceSet bases_;
};

// All r-subsets of {first_label, ..., first_label+n-1}.
Matroid uniform_matroid(int n, int r, int first_label = 1);

// Bases are the maximum-cardinality partial transversals of the set system,
// found by bipartite augmenting-path matching.  An all-empty system gives the
// rank-0 matroid on the groundset.
Matroid transversal_matroid(const FiniteSet& groundset,
                            const std::vector<FiniteSet>& sets);

int max_element(const Matroid& M);  // largest groundset label
bool is_loop(const Matroid& M, int e);
bool is_coloop(const Matroid& M, int e);

// Minors keep the remaining labels unchanged.  Deleting a coloop is defined
// as contraction and contracting a loop as deletion, so both are total.
Matroid deletion(const Matroid& M, int e);
Matroid contraction(const Matroid& M, int e);

Matroid dual(const Matroid& M);

// Inclusion-minimal dependent sets, enumerated by increasing cardinality up
// to rank+1 with supersets of found circuits pruned.
std::vector<FiniteSet> circuits(const Matroid& M);

SimplicialComplex independence_complex(const Matroid& M);

// Characteristic 0/1 vectors of the bases, over coords = groundset.
PointConfig basis_configuration(const Matroid& M);

// Sanity check: x_i^2 - x_i, sum x_i - r and the circuit monomials all
// vanish on the given configuration.  Not an ideal-membership test.
bool verify_vanishing_generators(const PointConfig& config, int rank,
                                 const std::vector<FiniteSet>& circuits);
bool verify_vanishing_generators(const Matroid& M);

}  // namespace stdcx
