#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "stdcx/core.hpp"

namespace stdcx::oracle {

using BigInt = boost::multiprecision::cpp_int;

enum class TermOrderKind { lex, grlex };

// Variable precedence follows the coordinate labels: the smallest label is
// the ≻-largest variable.  Total on squarefree monomials, 1 minimal.
struct TermOrder {
    TermOrderKind kind = TermOrderKind::lex;
    static TermOrder lex() { return {TermOrderKind::lex}; }
    static TermOrder grlex() { return {TermOrderKind::grlex}; }
};

// -1 if a ≺ b, 0 if equal, +1 if a ≻ b.
int compare(const TermOrder& order, const MonomialKey& a, const MonomialKey& b);

// Row-reduced store of evaluation vectors, exact over the rationals
// (fraction-free integer elimination, rows normalized by content gcd).
class EvalMatrix {
  public:
    explicit EvalMatrix(std::size_t columns) : columns_(columns) {}

    // Inserts the vector if it is linearly independent of the stored rows;
    // returns false (and stores nothing) otherwise.
    bool try_insert(std::vector<BigInt> row);

    std::size_t rank() const { return rows_.size(); }

  private:
    struct Row {
        std::size_t pivot;
        std::vector<BigInt> entries;
    };
    std::size_t columns_;
    std::vector<Row> rows_;  // ascending pivot
};

inline constexpr int kMaxCoords = 24;

// Supports of the standard monomials of I(V), found by scanning squarefree
// monomials in ≻-ascending order and keeping those whose evaluation vector
// on V is independent of the previously kept ones.  Stops after |V| keeps.
// Throws ResourceLimitError when V has more than kMaxCoords coordinates.
std::vector<MonomialKey> standard_monomials(const PointConfig& V,
                                            const TermOrder& order);

// The standard complex: supports of standard_monomials as faces, on the
// coordinate labels of V.
SimplicialComplex standard_complex(const PointConfig& V, const TermOrder& order);

}  // namespace stdcx::oracle
