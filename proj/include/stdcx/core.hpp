#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace stdcx {

// Thrown when a computation would exceed a configured size cap.  Callers
// surface this as an explicit refusal rather than truncating silently.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sorted set of positive integer labels.  Groundsets, bases, faces and
// squarefree monomial supports are all values of this type.
class FiniteSet {
  public:
    FiniteSet() = default;
    FiniteSet(std::initializer_list<int> labels);
    // Accepts labels in any order; rejects duplicates and labels < 1.
    explicit FiniteSet(std::vector<int> labels);

    // {first, first+1, ..., first+count-1}
    static FiniteSet range(int first, int count);

    bool contains(int label) const;
    bool subset_of(const FiniteSet& other) const;
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    int max() const;  // throws std::domain_error on the empty set
    const std::vector<int>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    FiniteSet with(int label) const;
    FiniteSet without(int label) const;

    // Canonical text form: comma-separated ascending labels in braces.
    std::string to_string() const;

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
    friend auto operator<=>(const FiniteSet&, const FiniteSet&) = default;

  private:
    std::vector<int> elems_;
};

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b);
std::ostream& operator<<(std::ostream& os, const FiniteSet& s);

using FaceSet = std::set<FiniteSet>;

// Squarefree monomials are identified with their supports.
using MonomialKey = FiniteSet;

// 0/1 vector indexed by the coordinate list of its configuration.
using Point = std::vector<std::uint8_t>;

// A duplicate-free family of 0/1 points over an ordered list of coordinate
// labels.  A configuration with zero coordinates holds at most the empty
// point; this is the base case of the lex recursion.
class PointConfig {
  public:
    PointConfig() = default;
    PointConfig(FiniteSet coords, std::set<Point> points);

    const FiniteSet& coords() const { return coords_; }
    const std::set<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    friend bool operator==(const PointConfig&, const PointConfig&) = default;

  private:
    FiniteSet coords_;
    std::set<Point> points_;
};

// Points of V whose bit at the last (largest) coordinate equals `bit`, with
// that coordinate removed.
PointConfig slice(const PointConfig& V, int bit);

// Flips the bit at coordinate `label` in every point.  Involution.
PointConfig reflect(const PointConfig& V, int label);

// A downward-closed family of faces over an explicit vertex label set.  The
// empty family (no faces at all) is distinct from the family {∅}.
//
// Complexes compare equal iff their face sets are equal; vertex labels are
// carried for cone checks and reporting.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;  // empty family
    // Validates downward closure and that every used vertex is a label.
    SimplicialComplex(FiniteSet vertex_labels, FaceSet faces);

    // Downward closure of an arbitrary family; labels are the used vertices.
    static SimplicialComplex closure(FaceSet faces);
    static SimplicialComplex closure(FiniteSet vertex_labels, FaceSet faces);
    // For operations that guarantee closure themselves.
    static SimplicialComplex unchecked(FiniteSet vertex_labels, FaceSet faces);

    const FaceSet& faces() const { return faces_; }
    const FiniteSet& vertex_labels() const { return vertex_labels_; }
    bool contains(const FiniteSet& face) const { return faces_.count(face) > 0; }
    std::size_t size() const { return faces_.size(); }
    bool empty() const { return faces_.empty(); }
    bool is_subcomplex_of(const SimplicialComplex& other) const;
    bool is_downward_closed() const;

    // Entry k = number of faces of cardinality k.  Empty family -> [].
    std::vector<std::size_t> f_vector() const;
    // Faces sorted by (cardinality, then lexicographic label order).
    std::vector<FiniteSet> canonical_faces() const;
    std::string to_string() const;

    SimplicialComplex with_labels(FiniteSet vertex_labels) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.faces_ == b.faces_;
    }

  private:
    FiniteSet vertex_labels_;
    FaceSet faces_;
};

// Downward closure of the input family (the identity on closed families).
SimplicialComplex make_complex(FaceSet faces);

// K ∪ { {apex} ∪ σ : σ ∈ K }.  Throws on apex collision.
SimplicialComplex cone(int apex, const SimplicialComplex& K);

SimplicialComplex complex_union(const SimplicialComplex& A, const SimplicialComplex& B);
SimplicialComplex complex_intersection(const SimplicialComplex& A, const SimplicialComplex& B);

std::ostream& operator<<(std::ostream& os, const SimplicialComplex& K);

}  // namespace stdcx
