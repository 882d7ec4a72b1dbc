#include "stdcx/matroid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace stdcx {

Matroid Matroid::from_bases(FiniteSet groundset, FaceSet bases, Validation v) {
    if (bases.empty())
        throw std::invalid_argument("Matroid: basis list must be nonempty");
    Matroid M;
    M.groundset_ = std::move(groundset);
    M.rank_ = static_cast<int>(bases.begin()->size());
    M.bases_ = std::move(bases);
    for (const FiniteSet& b : M.bases_) {
        if (static_cast<int>(b.size()) != M.rank_)
            throw std::invalid_argument("Matroid: bases have unequal cardinalities (" +
                                        b.to_string() + " vs rank " +
                                        std::to_string(M.rank_) + ")");
        if (!b.subset_of(M.groundset_))
            throw std::invalid_argument("Matroid: basis " + b.to_string() +
                                        " is not a subset of the groundset");
    }
    if (v == Validation::full) M.validate();
    return M;
}

void Matroid::validate() const {
    for (const FiniteSet& b1 : bases_) {
        for (const FiniteSet& b2 : bases_) {
            for (int x : set_difference(b1, b2)) {
                bool found = false;
                for (int y : set_difference(b2, b1)) {
                    if (bases_.count(b1.without(x).with(y)) > 0) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw std::invalid_argument(
                        "Matroid: exchange axiom fails for B1=" + b1.to_string() +
                        ", B2=" + b2.to_string() + ", x=" + std::to_string(x));
            }
        }
    }
}

bool Matroid::is_independent(const FiniteSet& s) const {
    for (const FiniteSet& b : bases_)
        if (s.subset_of(b)) return true;
    return false;
}

std::string Matroid::canonical_key() const {
    std::string key;
    for (int e : groundset_) {
        key += std::to_string(e);
        key += ',';
    }
    key += '|';
    for (const FiniteSet& b : bases_) {
        for (int e : b) {
            key += std::to_string(e);
            key += ',';
        }
        key += ';';
    }
    return key;
}

namespace {

void subsets_of_size(const std::vector<int>& pool, int k,
                     const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            fn(cur);
            return;
        }
        std::size_t need = static_cast<std::size_t>(k) - cur.size();
        for (std::size_t i = start; i + need <= pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

Matroid uniform_matroid(int n, int r, int first_label) {
    if (n < 0 || r < 0 || r > n)
        throw std::invalid_argument("uniform_matroid: need 0 <= r <= n");
    FiniteSet ground = FiniteSet::range(first_label, n);
    FaceSet bases;
    subsets_of_size(ground.elements(), r, [&](const std::vector<int>& s) {
        bases.insert(FiniteSet(s));
    });
    return Matroid::from_bases(std::move(ground), std::move(bases),
                               Matroid::Validation::skip);
}

namespace {

// Kuhn's augmenting-path matching: can every element of `subset` be matched
// to a distinct system set containing it?
bool has_full_matching(const std::vector<int>& subset,
                       const std::vector<FiniteSet>& sets) {
    if (subset.size() > sets.size()) return false;
    std::vector<int> match_of_set(sets.size(), -1);
    for (std::size_t u = 0; u < subset.size(); ++u) {
        std::vector<char> visited(sets.size(), 0);
        std::function<bool(int)> augment = [&](int elem_idx) -> bool {
            for (std::size_t s = 0; s < sets.size(); ++s) {
                if (visited[s] || !sets[s].contains(subset[elem_idx])) continue;
                visited[s] = 1;
                if (match_of_set[s] < 0 || augment(match_of_set[s])) {
                    match_of_set[s] = elem_idx;
                    return true;
                }
            }
            return false;
        };
        if (!augment(static_cast<int>(u))) return false;
    }
    return true;
}

int max_matching_size(const FiniteSet& groundset, const std::vector<FiniteSet>& sets) {
    std::vector<int> match_of_set(sets.size(), -1);
    int matched = 0;
    const auto& elems = groundset.elements();
    for (std::size_t u = 0; u < elems.size(); ++u) {
        std::vector<char> visited(sets.size(), 0);
        std::function<bool(int)> augment = [&](int elem_idx) -> bool {
            for (std::size_t s = 0; s < sets.size(); ++s) {
                if (visited[s] || !sets[s].contains(elems[elem_idx])) continue;
                visited[s] = 1;
                if (match_of_set[s] < 0 || augment(match_of_set[s])) {
                    match_of_set[s] = elem_idx;
                    return true;
                }
            }
            return false;
        };
        if (augment(static_cast<int>(u))) ++matched;
    }
    return matched;
}

}  // namespace

Matroid transversal_matroid(const FiniteSet& groundset,
                            const std::vector<FiniteSet>& sets) {
    for (const FiniteSet& s : sets)
        if (!s.subset_of(groundset))
            throw std::invalid_argument("transversal_matroid: system set " +
                                        s.to_string() + " leaves the groundset");
    if (groundset.size() > 20)
        throw ResourceLimitError("transversal_matroid: groundset larger than 20");
    int rank = max_matching_size(groundset, sets);
    FaceSet bases;
    subsets_of_size(groundset.elements(), rank, [&](const std::vector<int>& s) {
        if (has_full_matching(s, sets)) bases.insert(FiniteSet(s));
    });
    return Matroid::from_bases(groundset, std::move(bases), Matroid::Validation::skip);
}

int max_element(const Matroid& M) {
    if (M.groundset().empty())
        throw std::domain_error("max_element: empty groundset");
    return M.groundset().max();
}

bool is_loop(const Matroid& M, int e) {
    if (!M.groundset().contains(e))
        throw std::invalid_argument("is_loop: " + std::to_string(e) +
                                    " not in groundset");
    for (const FiniteSet& b : M.bases())
        if (b.contains(e)) return false;
    return true;
}

bool is_coloop(const Matroid& M, int e) {
    if (!M.groundset().contains(e))
        throw std::invalid_argument("is_coloop: " + std::to_string(e) +
                                    " not in groundset");
    for (const FiniteSet& b : M.bases())
        if (!b.contains(e)) return false;
    return true;
}

Matroid deletion(const Matroid& M, int e) {
    if (!M.groundset().contains(e))
        throw std::invalid_argument("deletion: " + std::to_string(e) +
                                    " not in groundset");
    if (is_coloop(M, e)) return contraction(M, e);
    FaceSet bases;
    for (const FiniteSet& b : M.bases())
        if (!b.contains(e)) bases.insert(b);
    return Matroid::from_bases(M.groundset().without(e), std::move(bases),
                               Matroid::Validation::skip);
}

Matroid contraction(const Matroid& M, int e) {
    if (!M.groundset().contains(e))
        throw std::invalid_argument("contraction: " + std::to_string(e) +
                                    " not in groundset");
    if (is_loop(M, e)) {
        FaceSet bases = M.bases();
        return Matroid::from_bases(M.groundset().without(e), std::move(bases),
                                   Matroid::Validation::skip);
    }
    FaceSet bases;
    for (const FiniteSet& b : M.bases())
        if (b.contains(e)) bases.insert(b.without(e));
    return Matroid::from_bases(M.groundset().without(e), std::move(bases),
                               Matroid::Validation::skip);
}

Matroid dual(const Matroid& M) {
    FaceSet bases;
    for (const FiniteSet& b : M.bases()) bases.insert(set_difference(M.groundset(), b));
    return Matroid::from_bases(M.groundset(), std::move(bases),
                               Matroid::Validation::skip);
}

std::vector<FiniteSet> circuits(const Matroid& M) {
    std::vector<FiniteSet> found;
    for (int k = 1; k <= M.rank() + 1; ++k) {
        subsets_of_size(M.groundset().elements(), k, [&](const std::vector<int>& sv) {
            FiniteSet s(sv);
            for (const FiniteSet& c : found)
                if (c.subset_of(s)) return;
            if (!M.is_independent(s)) found.push_back(std::move(s));
        });
    }
    return found;
}

SimplicialComplex independence_complex(const Matroid& M) {
    return SimplicialComplex::closure(M.groundset(), M.bases());
}

PointConfig basis_configuration(const Matroid& M) {
    std::set<Point> pts;
    for (const FiniteSet& b : M.bases()) {
        Point p(M.groundset().size(), 0);
        std::size_t i = 0;
        for (int e : M.groundset()) {
            p[i++] = b.contains(e) ? 1 : 0;
        }
        pts.insert(std::move(p));
    }
    return PointConfig(M.groundset(), std::move(pts));
}

bool verify_vanishing_generators(const PointConfig& config, int rank,
                                 const std::vector<FiniteSet>& circuits) {
    const auto& coords = config.coords().elements();
    for (const Point& p : config.points()) {
        long long sum = 0;
        for (std::uint8_t b : p) {
            if (b > 1) return false;  // x_i^2 - x_i
            sum += b;
        }
        if (sum != rank) return false;  // x_1 + ... + x_n - r
        for (const FiniteSet& c : circuits) {
            bool product_one = true;
            for (int e : c) {
                auto it = std::lower_bound(coords.begin(), coords.end(), e);
                if (it == coords.end() || *it != e || p[it - coords.begin()] == 0) {
                    product_one = false;
                    break;
                }
            }
            if (product_one) return false;  // x^C
        }
    }
    return true;
}

bool verify_vanishing_generators(const Matroid& M) {
    return verify_vanishing_generators(basis_configuration(M), M.rank(), circuits(M));
}

}  // namespace stdcx
