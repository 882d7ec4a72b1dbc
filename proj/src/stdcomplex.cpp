#include "stdcx/stdcomplex.hpp"

#include <unordered_map>

namespace stdcx {

const FiniteSet& BijectionTable::at(const FiniteSet& basis) const {
    auto it = entries.find(basis);
    if (it == entries.end())
        throw std::invalid_argument("BijectionTable: no entry for " + basis.to_string());
    return it->second;
}

FaceSet BijectionTable::face_set() const {
    FaceSet faces;
    for (const auto& [basis, face] : entries) faces.insert(face);
    return faces;
}

SimplicialComplex lex_standard_complex(const PointConfig& V) {
    if (V.empty()) return SimplicialComplex::unchecked(V.coords(), {});
    if (V.size() == 1)
        return SimplicialComplex::unchecked(V.coords(), {FiniteSet{}});
    int n = V.coords().max();
    SimplicialComplex s0 = lex_standard_complex(slice(V, 0));
    SimplicialComplex s1 = lex_standard_complex(slice(V, 1));
    SimplicialComplex out = complex_union(
        complex_union(s0, s1), cone(n, complex_intersection(s0, s1)));
    return out.faces().empty() ? SimplicialComplex::unchecked(V.coords(), {})
                               : SimplicialComplex::unchecked(V.coords(), out.faces());
}

namespace {

// Deletion-contraction engine.  Minors at the successive largest elements
// partition the bases, so each recursion level touches every basis at most
// once; the cache is keyed by the canonical serialized (groundset, bases)
// value and collapses branches that meet in the same minor.
class LexEngine {
  public:
    const SimplicialComplex& complex_of(const Matroid& M) {
        const std::string key = M.canonical_key();
        auto it = complexes_.find(key);
        if (it != complexes_.end()) return it->second;
        SimplicialComplex value = compute_complex(M);
        return complexes_.emplace(key, std::move(value)).first->second;
    }

    const BijectionTable& table_of(const Matroid& M) {
        const std::string key = M.canonical_key();
        auto it = tables_.find(key);
        if (it != tables_.end()) return it->second;
        BijectionTable value = compute_table(M);
        return tables_.emplace(key, std::move(value)).first->second;
    }

  private:
    SimplicialComplex compute_complex(const Matroid& M) {
        if (M.groundset().empty())
            return SimplicialComplex::unchecked({}, {FiniteSet{}});
        int m = max_element(M);
        if (is_loop(M, m) || is_coloop(M, m)) {
            // The two minors coincide; the standard complex is untouched.
            SimplicialComplex inner = complex_of(contraction(M, m));
            return SimplicialComplex::unchecked(M.groundset(), inner.faces());
        }
        const SimplicialComplex& s_del = complex_of(deletion(M, m));
        const SimplicialComplex& s_con = complex_of(contraction(M, m));
        SimplicialComplex out = complex_union(
            complex_union(s_del, s_con),
            cone(m, complex_intersection(s_del, s_con)));
        return SimplicialComplex::unchecked(M.groundset(), out.faces());
    }

    BijectionTable compute_table(const Matroid& M) {
        BijectionTable table;
        if (M.groundset().empty()) {
            table.entries.emplace(FiniteSet{}, FiniteSet{});
            return table;
        }
        int m = max_element(M);
        if (is_loop(M, m)) {
            // Bases are untouched by removing a loop.
            return table_of(contraction(M, m));
        }
        if (is_coloop(M, m)) {
            // No face of S_lex(M) = S_lex(M\m) contains m, so m is never
            // appended: Λ(B) = Λ_{M/m}(B\m).
            const BijectionTable& inner = table_of(contraction(M, m));
            for (const FiniteSet& b : M.bases())
                table.entries.emplace(b, inner.at(b.without(m)));
            return table;
        }
        const BijectionTable& t_del = table_of(deletion(M, m));
        const BijectionTable& t_con = table_of(contraction(M, m));
        const SimplicialComplex& s_del = complex_of(deletion(M, m));
        for (const FiniteSet& b : M.bases()) {
            if (!b.contains(m)) {
                table.entries.emplace(b, t_del.at(b));
            } else {
                const FiniteSet& tau = t_con.at(b.without(m));
                table.entries.emplace(b, s_del.contains(tau) ? tau.with(m) : tau);
            }
        }
        return table;
    }

    std::unordered_map<std::string, SimplicialComplex> complexes_;
    std::unordered_map<std::string, BijectionTable> tables_;
};

FiniteSet lambda_entry(LexEngine& engine, const Matroid& M, const FiniteSet& b) {
    if (M.groundset().empty()) return FiniteSet{};
    int m = max_element(M);
    if (is_loop(M, m) || is_coloop(M, m))
        return lambda_entry(engine, contraction(M, m), b.without(m));
    if (!b.contains(m)) return lambda_entry(engine, deletion(M, m), b);
    FiniteSet tau = lambda_entry(engine, contraction(M, m), b.without(m));
    return engine.complex_of(deletion(M, m)).contains(tau) ? tau.with(m) : tau;
}

}  // namespace

SimplicialComplex lex_standard_complex(const Matroid& M) {
    LexEngine engine;
    return engine.complex_of(M);
}

BijectionTable lambda_table(const Matroid& M) {
    LexEngine engine;
    return engine.table_of(M);
}

FiniteSet lambda_of_basis(const Matroid& M, const FiniteSet& basis) {
    if (!M.is_basis(basis))
        throw std::invalid_argument("lambda_of_basis: " + basis.to_string() +
                                    " is not a basis");
    LexEngine engine;
    return lambda_entry(engine, M, basis);
}

MappingConeParts mapping_cone_decomposition(const Matroid& M) {
    if (M.groundset().empty())
        throw std::invalid_argument("mapping_cone_decomposition: empty groundset");
    int m = max_element(M);
    if (is_loop(M, m) || is_coloop(M, m))
        throw std::invalid_argument("mapping_cone_decomposition: degenerate split at " +
                                    std::to_string(m));
    SimplicialComplex s_del = lex_standard_complex(deletion(M, m));
    SimplicialComplex s_con = lex_standard_complex(contraction(M, m));
    SimplicialComplex inter = complex_intersection(s_del, s_con);
    return MappingConeParts{std::move(s_del), std::move(s_con), std::move(inter)};
}

}  // namespace stdcx
