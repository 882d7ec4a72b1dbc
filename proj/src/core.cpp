#include "stdcx/core.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace stdcx {

FiniteSet::FiniteSet(std::initializer_list<int> labels)
    : FiniteSet(std::vector<int>(labels)) {}

FiniteSet::FiniteSet(std::vector<int> labels) : elems_(std::move(labels)) {
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1)
            throw std::invalid_argument("FiniteSet: labels must be positive, got " +
                                        std::to_string(elems_[i]));
        if (i > 0 && elems_[i] == elems_[i - 1])
            throw std::invalid_argument("FiniteSet: duplicate label " +
                                        std::to_string(elems_[i]));
    }
}

FiniteSet FiniteSet::range(int first, int count) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) v.push_back(first + i);
    return FiniteSet(std::move(v));
}

bool FiniteSet::contains(int label) const {
    return std::binary_search(elems_.begin(), elems_.end(), label);
}

bool FiniteSet::subset_of(const FiniteSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(),
                         elems_.end());
}

int FiniteSet::max() const {
    if (elems_.empty()) throw std::domain_error("FiniteSet::max on empty set");
    return elems_.back();
}

FiniteSet FiniteSet::with(int label) const {
    if (contains(label)) return *this;
    FiniteSet out = *this;
    out.elems_.insert(std::upper_bound(out.elems_.begin(), out.elems_.end(), label),
                      label);
    return out;
}

FiniteSet FiniteSet::without(int label) const {
    FiniteSet out = *this;
    auto it = std::lower_bound(out.elems_.begin(), out.elems_.end(), label);
    if (it != out.elems_.end() && *it == label) out.elems_.erase(it);
    return out;
}

std::string FiniteSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(elems_[i]);
    }
    s += '}';
    return s;
}

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
    std::vector<int> v;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
    return FiniteSet(std::move(v));
}

FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b) {
    std::vector<int> v;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(v));
    return FiniteSet(std::move(v));
}

FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b) {
    std::vector<int> v;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
    return FiniteSet(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const FiniteSet& s) {
    return os << s.to_string();
}

PointConfig::PointConfig(FiniteSet coords, std::set<Point> points)
    : coords_(std::move(coords)), points_(std::move(points)) {
    for (const Point& p : points_) {
        if (p.size() != coords_.size())
            throw std::invalid_argument("PointConfig: point has " +
                                        std::to_string(p.size()) + " bits, expected " +
                                        std::to_string(coords_.size()));
        for (std::uint8_t b : p)
            if (b > 1) throw std::invalid_argument("PointConfig: entries must be 0/1");
    }
}

PointConfig slice(const PointConfig& V, int bit) {
    if (V.coords().empty())
        throw std::invalid_argument("slice: configuration has no coordinates");
    if (bit != 0 && bit != 1) throw std::invalid_argument("slice: bit must be 0 or 1");
    FiniteSet coords = V.coords().without(V.coords().max());
    std::set<Point> pts;
    for (const Point& p : V.points()) {
        if (p.back() == bit) pts.insert(Point(p.begin(), p.end() - 1));
    }
    return PointConfig(std::move(coords), std::move(pts));
}

PointConfig reflect(const PointConfig& V, int label) {
    const auto& cs = V.coords().elements();
    auto it = std::lower_bound(cs.begin(), cs.end(), label);
    if (it == cs.end() || *it != label)
        throw std::invalid_argument("reflect: " + std::to_string(label) +
                                    " is not a coordinate");
    std::size_t idx = static_cast<std::size_t>(it - cs.begin());
    std::set<Point> pts;
    for (Point p : V.points()) {
        p[idx] ^= 1;
        pts.insert(std::move(p));
    }
    return PointConfig(V.coords(), std::move(pts));
}

namespace {

FiniteSet used_vertices(const FaceSet& faces) {
    std::vector<int> v;
    for (const FiniteSet& f : faces)
        for (int x : f) v.push_back(x);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return FiniteSet(std::move(v));
}

FaceSet close_downward(FaceSet faces) {
    std::vector<FiniteSet> todo(faces.begin(), faces.end());
    while (!todo.empty()) {
        FiniteSet f = std::move(todo.back());
        todo.pop_back();
        for (int x : f) {
            FiniteSet sub = f.without(x);
            if (faces.insert(sub).second) todo.push_back(std::move(sub));
        }
    }
    return faces;
}

}  // namespace

SimplicialComplex::SimplicialComplex(FiniteSet vertex_labels, FaceSet faces)
    : vertex_labels_(std::move(vertex_labels)), faces_(std::move(faces)) {
    for (const FiniteSet& f : faces_) {
        if (!f.subset_of(vertex_labels_))
            throw std::invalid_argument("SimplicialComplex: face " + f.to_string() +
                                        " uses a vertex outside the label set");
    }
    if (!is_downward_closed())
        throw std::invalid_argument("SimplicialComplex: family is not downward-closed");
}

SimplicialComplex SimplicialComplex::closure(FaceSet faces) {
    FaceSet closed = close_downward(std::move(faces));
    FiniteSet labels = used_vertices(closed);
    return unchecked(std::move(labels), std::move(closed));
}

SimplicialComplex SimplicialComplex::closure(FiniteSet vertex_labels, FaceSet faces) {
    FaceSet closed = close_downward(std::move(faces));
    return SimplicialComplex(std::move(vertex_labels), std::move(closed));
}

SimplicialComplex SimplicialComplex::unchecked(FiniteSet vertex_labels, FaceSet faces) {
    SimplicialComplex K;
    K.vertex_labels_ = std::move(vertex_labels);
    K.faces_ = std::move(faces);
    return K;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    return std::includes(other.faces_.begin(), other.faces_.end(), faces_.begin(),
                         faces_.end());
}

bool SimplicialComplex::is_downward_closed() const {
    if (faces_.empty()) return true;
    for (const FiniteSet& f : faces_)
        for (int x : f)
            if (faces_.count(f.without(x)) == 0) return false;
    return true;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> fv;
    for (const FiniteSet& f : faces_) {
        if (f.size() >= fv.size()) fv.resize(f.size() + 1, 0);
        ++fv[f.size()];
    }
    return fv;
}

std::vector<FiniteSet> SimplicialComplex::canonical_faces() const {
    std::vector<FiniteSet> v(faces_.begin(), faces_.end());
    std::stable_sort(v.begin(), v.end(), [](const FiniteSet& a, const FiniteSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return v;
}

std::string SimplicialComplex::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const FiniteSet& f : canonical_faces()) {
        if (!first) os << ", ";
        first = false;
        os << f.to_string();
    }
    os << '}';
    return os.str();
}

SimplicialComplex SimplicialComplex::with_labels(FiniteSet vertex_labels) const {
    return SimplicialComplex(std::move(vertex_labels), faces_);
}

SimplicialComplex make_complex(FaceSet faces) {
    return SimplicialComplex::closure(std::move(faces));
}

SimplicialComplex cone(int apex, const SimplicialComplex& K) {
    if (K.vertex_labels().contains(apex))
        throw std::invalid_argument("cone: apex collision at label " +
                                    std::to_string(apex));
    FaceSet faces = K.faces();
    for (const FiniteSet& f : K.faces()) faces.insert(f.with(apex));
    return SimplicialComplex::unchecked(K.vertex_labels().with(apex), std::move(faces));
}

SimplicialComplex complex_union(const SimplicialComplex& A, const SimplicialComplex& B) {
    FaceSet faces = A.faces();
    faces.insert(B.faces().begin(), B.faces().end());
    return SimplicialComplex::unchecked(set_union(A.vertex_labels(), B.vertex_labels()),
                                        std::move(faces));
}

SimplicialComplex complex_intersection(const SimplicialComplex& A,
                                       const SimplicialComplex& B) {
    FaceSet faces;
    for (const FiniteSet& f : A.faces())
        if (B.contains(f)) faces.insert(f);
    return SimplicialComplex::unchecked(
        set_intersection(A.vertex_labels(), B.vertex_labels()), std::move(faces));
}

std::ostream& operator<<(std::ostream& os, const SimplicialComplex& K) {
    return os << K.to_string();
}

}  // namespace stdcx
