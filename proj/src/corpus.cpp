#include "stdcx/corpus.hpp"

#include <chrono>
#include <unordered_set>

#include "stdcx/oracle.hpp"
#include "stdcx/stdcomplex.hpp"

namespace stdcx::corpus {

using latpath::LatticePath;

void CheckResult::fail(std::string message) {
    pass = false;
    if (detail.empty()) detail = std::move(message);
}

namespace {

class Stopwatch {
  public:
    double elapsed() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

void subsets_of_size(int n, int k, const std::function<void(const FiniteSet&)>& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            fn(FiniteSet(cur));
            return;
        }
        int need = k - static_cast<int>(cur.size());
        for (int v = start; v + need <= n + 1; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

}  // namespace

void for_each_boundary_pair(
    int n, const std::function<void(const LatticePath&, const LatticePath&)>& fn) {
    for (int d = 0; d <= n; ++d) {
        subsets_of_size(n, d, [&](const FiniteSet& upper_easts) {
            LatticePath upper = LatticePath::from_east_set(upper_easts, n);
            const auto& u = upper_easts.elements();
            std::vector<int> l(u.size());
            std::function<void(std::size_t)> place = [&](std::size_t i) {
                if (i == u.size()) {
                    fn(upper, LatticePath::from_east_set(FiniteSet(l), n));
                    return;
                }
                for (int v = (i ? l[i - 1] + 1 : 1); v <= u[i]; ++v) {
                    l[i] = v;
                    place(i + 1);
                }
            };
            place(0);
        });
    }
}

void for_each_path_between(const LatticePath& upper, const LatticePath& lower,
                           const std::function<void(const LatticePath&)>& fn) {
    const auto& u = upper.east_set().elements();
    const auto& l = lower.east_set().elements();
    const int n = upper.length();
    std::vector<int> z(u.size());
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (i == u.size()) {
            fn(LatticePath::from_east_set(FiniteSet(z), n));
            return;
        }
        for (int v = std::max(l[i], i ? z[i - 1] + 1 : 1); v <= u[i]; ++v) {
            z[i] = v;
            place(i + 1);
        }
    };
    place(0);
}

void for_each_corpus_matroid(const CorpusSpec& spec,
                             const std::function<void(const Matroid&)>& fn) {
    std::unordered_set<std::string> seen;
    auto visit = [&](const Matroid& M) {
        if (seen.insert(M.canonical_key()).second) fn(M);
    };
    auto visit_with_closure = [&](const Matroid& M) {
        visit(M);
        if (spec.include_duals) visit(dual(M));
        if (spec.include_minors) {
            for (int e : M.groundset()) {
                visit(deletion(M, e));
                visit(contraction(M, e));
            }
        }
    };

    for (int n = 0; n <= spec.uniform_max_n; ++n)
        for (int r = 0; r <= n; ++r) visit_with_closure(uniform_matroid(n, r));

    for (int n = 1; n <= spec.lpm_max_n; ++n)
        for_each_boundary_pair(n, [&](const LatticePath& u, const LatticePath& l) {
            visit_with_closure(latpath::lpm(u, l));
        });

    std::mt19937_64 rng(spec.seed);
    for (int i = 0; i < spec.transversal_count; ++i) {
        int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                 spec.transversal_max_n));
        int nsets = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        std::vector<FiniteSet> sets;
        for (int s = 0; s < nsets; ++s) {
            std::vector<int> members;
            for (int e = 1; e <= n; ++e)
                if (rng() & 1) members.push_back(e);
            sets.emplace_back(std::move(members));
        }
        visit(transversal_matroid(FiniteSet::range(1, n), sets));
    }
}

std::vector<PointConfig> random_configs(int coords, int count, std::mt19937_64& rng,
                                        int max_points) {
    std::vector<PointConfig> out;
    const std::uint64_t space = 1ull << coords;
    const std::uint64_t cap =
        std::min<std::uint64_t>(space, static_cast<std::uint64_t>(max_points));
    for (int i = 0; i < count; ++i) {
        std::uint64_t want = rng() % (cap + 1);
        std::set<std::uint64_t> masks;
        while (masks.size() < want) masks.insert(rng() % space);
        std::set<Point> points;
        for (std::uint64_t m : masks) {
            Point p(static_cast<std::size_t>(coords));
            for (int j = 0; j < coords; ++j)
                p[static_cast<std::size_t>(j)] =
                    static_cast<std::uint8_t>((m >> j) & 1);
            points.insert(std::move(p));
        }
        out.emplace_back(FiniteSet::range(1, coords), std::move(points));
    }
    return out;
}

CheckResult check_oracle_equivalence(const CorpusSpec& spec) {
    Stopwatch timer;
    CheckResult result{"oracle equivalence (lex recursion = Buchberger-Moller)"};
    for_each_corpus_matroid(spec, [&](const Matroid& M) {
        ++result.instances;
        if (!result.pass) return;
        SimplicialComplex rec = lex_standard_complex(M);
        SimplicialComplex orc =
            oracle::standard_complex(basis_configuration(M), oracle::TermOrder::lex());
        if (!(rec == orc))
            result.fail("mismatch on " + M.canonical_key() + ": recursion " +
                        rec.to_string() + " vs oracle " + orc.to_string());
    });
    result.seconds = timer.elapsed();
    return result;
}

CheckResult check_cardinality_and_subcomplex(const CorpusSpec& spec) {
    Stopwatch timer;
    CheckResult result{"cardinality |S_lex| = |bases| and S_lex ⊆ I(M)"};
    for_each_corpus_matroid(spec, [&](const Matroid& M) {
        ++result.instances;
        if (!result.pass) return;
        SimplicialComplex s = lex_standard_complex(M);
        if (s.size() != M.basis_count())
            result.fail("face count " + std::to_string(s.size()) + " != basis count " +
                        std::to_string(M.basis_count()) + " on " + M.canonical_key());
        else if (!s.is_subcomplex_of(independence_complex(M)))
            result.fail("S_lex not inside the independence complex on " +
                        M.canonical_key());
    });
    result.seconds = timer.elapsed();
    return result;
}

CheckResult check_duality(const CorpusSpec& spec) {
    Stopwatch timer;
    CheckResult result{"duality S_lex(M) = S_lex(M*)"};
    for_each_corpus_matroid(spec, [&](const Matroid& M) {
        ++result.instances;
        if (!result.pass) return;
        if (!(lex_standard_complex(M) == lex_standard_complex(dual(M))))
            result.fail("duality fails on " + M.canonical_key());
    });
    result.seconds = timer.elapsed();
    return result;
}

CheckResult check_lambda_axioms(const CorpusSpec& spec) {
    Stopwatch timer;
    CheckResult result{"lambda axioms (Λ(B) ⊆ B, bijection, restriction identities)"};
    for_each_corpus_matroid(spec, [&](const Matroid& M) {
        ++result.instances;
        if (!result.pass) return;
        BijectionTable table = lambda_table(M);
        if (table.size() != M.basis_count()) {
            result.fail("table size mismatch on " + M.canonical_key());
            return;
        }
        FaceSet images;
        for (const auto& [basis, face] : table.entries) {
            if (!M.is_basis(basis)) {
                result.fail("table key is not a basis on " + M.canonical_key());
                return;
            }
            if (!face.subset_of(basis)) {
                result.fail("Λ(" + basis.to_string() + ") = " + face.to_string() +
                            " is not contained in the basis");
                return;
            }
            images.insert(face);
        }
        if (images.size() != table.size() ||
            images != lex_standard_complex(M).faces()) {
            result.fail("Λ is not a bijection onto S_lex on " + M.canonical_key());
            return;
        }
        if (M.groundset().empty()) return;
        int m = max_element(M);
        BijectionTable del_table = lambda_table(deletion(M, m));
        BijectionTable con_table = lambda_table(contraction(M, m));
        for (const auto& [basis, face] : table.entries) {
            if (!basis.contains(m)) {
                if (face != del_table.at(basis)) {
                    result.fail("deletion restriction fails at " + basis.to_string() +
                                " on " + M.canonical_key());
                    return;
                }
            } else if (face.without(m) != con_table.at(basis.without(m))) {
                result.fail("contraction restriction fails at " + basis.to_string() +
                            " on " + M.canonical_key());
                return;
            }
        }
    });
    result.seconds = timer.elapsed();
    return result;
}

CheckResult check_mapping_cone(const CorpusSpec& spec) {
    Stopwatch timer;
    CheckResult result{"mapping-cone decomposition reassembles S_lex"};
    for_each_corpus_matroid(spec, [&](const Matroid& M) {
        if (!result.pass || M.groundset().empty()) return;
        int m = max_element(M);
        if (is_loop(M, m) || is_coloop(M, m)) return;
        ++result.instances;
        MappingConeParts parts = mapping_cone_decomposition(M);
        SimplicialComplex assembled = complex_union(
            complex_union(parts.deletion_part, parts.contraction_part),
            cone(m, parts.intersection));
        if (!(assembled == lex_standard_complex(M)))
            result.fail("reassembly fails on " + M.canonical_key());
        else if (deletion(M, m).basis_count() + contraction(M, m).basis_count() !=
                 M.basis_count())
            result.fail("basis counts of the minors do not add up on " +
                        M.canonical_key());
    });
    result.seconds = timer.elapsed();
    return result;
}

CheckResult check_reflection(int max_n, int configs_per_n, std::uint64_t seed) {
    Stopwatch timer;
    CheckResult result{"reflection invariance of the oracle"};
    std::mt19937_64 rng(seed);
    for (int n = 2; n <= max_n; ++n) {
        for (const PointConfig& config : random_configs(n, configs_per_n, rng)) {
            if (!result.pass) break;
            SimplicialComplex base =
                oracle::standard_complex(config, oracle::TermOrder::lex());
            for (int label : config.coords()) {
                ++result.instances;
                SimplicialComplex reflected = oracle::standard_complex(
                    reflect(config, label), oracle::TermOrder::lex());
                if (!(base == reflected)) {
                    result.fail("reflection at coordinate " + std::to_string(label) +
                                " changes the complex (n=" + std::to_string(n) + ")");
                    break;
                }
            }
        }
    }
    result.seconds = timer.elapsed();
    return result;
}

CheckResult check_statistic_equals_lambda(int max_n) {
    Stopwatch timer;
    CheckResult result{"statistic st_L(C) = Λ(E(C)) on all boundary pairs"};
    for (int n = 1; n <= max_n && result.pass; ++n) {
        for_each_boundary_pair(n, [&](const LatticePath& u, const LatticePath& l) {
            if (!result.pass) return;
            BijectionTable table = lambda_table(latpath::lpm(u, l));
            for_each_path_between(u, l, [&](const LatticePath& c) {
                if (!result.pass) return;
                ++result.instances;
                if (latpath::statistic(c, l) != table.at(c.east_set()))
                    result.fail("st mismatch for C=" + c.word() + " in P[" + u.word() +
                                "," + l.word() + "]");
            });
        });
    }
    result.seconds = timer.elapsed();
    return result;
}

CheckResult check_trivial_statistic_triple(int max_n) {
    Stopwatch timer;
    CheckResult result{"scan = hooks = marking statistic at the trivial boundary"};
    for (int n = 1; n <= max_n && result.pass; ++n) {
        for (int d = 0; d <= n; ++d) {
            subsets_of_size(n, d, [&](const FiniteSet& easts) {
                if (!result.pass) return;
                ++result.instances;
                LatticePath c = LatticePath::from_east_set(easts, n);
                FiniteSet scan = latpath::statistic_trivial_scan(c);
                FiniteSet hooks = latpath::hook_placement(c);
                FiniteSet marking =
                    latpath::statistic(c, LatticePath::trivial_lower(n, d));
                if (scan != hooks || scan != marking)
                    result.fail("triple disagreement on " + c.word() + ": scan " +
                                scan.to_string() + ", hooks " + hooks.to_string() +
                                ", marking " + marking.to_string());
            });
        }
    }
    result.seconds = timer.elapsed();
    return result;
}

namespace {

// Uniformly-seeded path weakly below `upper` (componentwise on east sets).
LatticePath random_path_below(const LatticePath& upper, std::mt19937_64& rng) {
    const auto& u = upper.east_set().elements();
    std::vector<int> picked(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        int lo = i ? picked[i - 1] + 1 : 1;
        picked[i] = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                      u[i] - lo + 1));
    }
    return LatticePath::from_east_set(FiniteSet(std::move(picked)), upper.length());
}

}  // namespace

CheckResult check_restriction(int max_n, int triple_count, std::uint64_t seed) {
    Stopwatch timer;
    CheckResult result{"restriction: Λ[U',L] = Λ[U,L] on B[U',L]"};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < triple_count && result.pass; ++i) {
        int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
        int d = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        std::vector<int> easts;
        {
            // random d-subset of [n]
            std::vector<int> pool(static_cast<std::size_t>(n));
            for (int v = 1; v <= n; ++v) pool[static_cast<std::size_t>(v) - 1] = v;
            for (int j = 0; j < d; ++j) {
                std::size_t pick = static_cast<std::size_t>(
                    rng() % static_cast<std::uint64_t>(pool.size()));
                easts.push_back(pool[pick]);
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
            }
        }
        LatticePath upper = LatticePath::from_east_set(FiniteSet(std::move(easts)), n);
        LatticePath mid = random_path_below(upper, rng);
        LatticePath lowerb = random_path_below(mid, rng);
        ++result.instances;

        BijectionTable big = lambda_table(latpath::lpm(upper, lowerb));
        BijectionTable small = lambda_table(latpath::lpm(mid, lowerb));
        for (const auto& [basis, face] : small.entries) {
            if (big.at(basis) != face) {
                result.fail("restriction fails at " + basis.to_string() + " for U=" +
                            upper.word() + " U'=" + mid.word() + " L=" + lowerb.word());
                break;
            }
        }
        if (result.pass) {
            FaceSet small_faces = small.face_set();
            FaceSet big_faces = big.face_set();
            if (!std::includes(big_faces.begin(), big_faces.end(), small_faces.begin(),
                               small_faces.end()))
                result.fail("S_lex[U',L] is not contained in S_lex[U,L] for U=" +
                            upper.word() + " U'=" + mid.word() + " L=" + lowerb.word());
        }
    }
    result.seconds = timer.elapsed();
    return result;
}

CheckResult check_decomposition(int max_n) {
    Stopwatch timer;
    CheckResult result{"statistic decomposition S = S^e ∪ S^n ∪ n*(S^e ∩ S^n)"};
    for (int n = 1; n <= max_n && result.pass; ++n) {
        for_each_boundary_pair(n, [&](const LatticePath& u, const LatticePath& l) {
            if (!result.pass) return;
            ++result.instances;
            FaceSet full;
            for_each_path_between(u, l, [&](const LatticePath& c) {
                full.insert(latpath::statistic(c, l));
            });

            FaceSet east_part, north_part;
            if (u.step(n) == 'e') {
                LatticePath u_trunc = LatticePath::parse(u.word().substr(
                    0, static_cast<std::size_t>(n) - 1));
                LatticePath l_trunc = LatticePath::from_east_set(
                    l.east_set().without(l.east_set().max()), n - 1);
                for_each_path_between(u_trunc, l_trunc, [&](const LatticePath& c) {
                    east_part.insert(latpath::statistic(c, l_trunc));
                });
            }
            if (l.step(n) == 'n') {
                // drop the last north step of U and the last letter of L
                FiniteSet u_easts = u.east_set();
                LatticePath u_trunc = LatticePath::from_east_set(u_easts, n - 1);
                if (u.step(n) == 'e') {
                    // the last north of U sits before position n; removing it
                    // shifts the tail east steps down by one
                    std::vector<int> shifted;
                    int last_north = 0;
                    for (int i = n; i >= 1; --i)
                        if (u.step(i) == 'n') {
                            last_north = i;
                            break;
                        }
                    for (int e : u_easts) shifted.push_back(e > last_north ? e - 1 : e);
                    u_trunc = LatticePath::from_east_set(FiniteSet(shifted), n - 1);
                }
                LatticePath l_trunc = LatticePath::parse(l.word().substr(
                    0, static_cast<std::size_t>(n) - 1));
                for_each_path_between(u_trunc, l_trunc, [&](const LatticePath& c) {
                    north_part.insert(latpath::statistic(c, l_trunc));
                });
            }

            FaceSet assembled = east_part;
            assembled.insert(north_part.begin(), north_part.end());
            for (const FiniteSet& face : east_part)
                if (north_part.count(face)) assembled.insert(face.with(n));
            if (assembled != full)
                result.fail("decomposition fails for U=" + u.word() + " L=" + l.word());
        });
    }
    result.seconds = timer.elapsed();
    return result;
}

std::vector<CheckResult> run_verify_suite(const VerifyOptions& options) {
    CorpusSpec corpus_spec;
    corpus_spec.uniform_max_n = std::min(6, options.max_n);
    corpus_spec.lpm_max_n = std::min(6, options.max_n);
    corpus_spec.transversal_count = 20;
    corpus_spec.transversal_max_n = std::min(8, options.max_n);
    corpus_spec.seed = options.seed;

    std::vector<CheckResult> results;
    results.push_back(check_oracle_equivalence(corpus_spec));
    results.push_back(check_cardinality_and_subcomplex(corpus_spec));
    results.push_back(check_duality(corpus_spec));
    results.push_back(check_lambda_axioms(corpus_spec));
    results.push_back(check_mapping_cone(corpus_spec));
    results.push_back(check_reflection(std::min(8, options.max_n), 25, options.seed));
    results.push_back(check_statistic_equals_lambda(options.max_n));
    results.push_back(check_trivial_statistic_triple(options.max_n));
    results.push_back(check_restriction(options.max_n, 200, options.seed));
    results.push_back(check_decomposition(std::min(options.max_n, 8)));
    return results;
}

}  // namespace stdcx::corpus
