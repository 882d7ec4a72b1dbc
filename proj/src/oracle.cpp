#include "stdcx/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace stdcx::oracle {

int compare(const TermOrder& order, const MonomialKey& a, const MonomialKey& b) {
    if (order.kind == TermOrderKind::grlex && a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    // Lex with the smallest label dominant: the first label on which the
    // supports differ belongs to the ≻-greater monomial.
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) {
            ++ia;
            ++ib;
            continue;
        }
        return *ia < *ib ? 1 : -1;
    }
    if (ia == a.end() && ib == b.end()) return 0;
    return ia == a.end() ? -1 : 1;
}

namespace {

void normalize_content(std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const BigInt& x : row) {
        if (x != 0) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
        if (g == 1) break;
    }
    if (g > 1)
        for (BigInt& x : row) x /= g;
}

// Yields bitmasks of squarefree monomials in ≻-ascending order.  Bit j of a
// mask stands for the (j+1)-th LARGEST coordinate label, so ascending
// integers agree with ascending lex and, within a fixed popcount, with the
// grlex tie-break.
class MonomialScan {
  public:
    MonomialScan(TermOrderKind kind, int coords) : kind_(kind), coords_(coords) {}

    bool next(std::uint32_t& mask_out) {
        if (kind_ == TermOrderKind::lex) {
            if (exhausted_ || mask_ > last_mask()) return false;
            mask_out = static_cast<std::uint32_t>(mask_);
            advance_plain();
            return true;
        }
        while (degree_ <= coords_) {
            if (!degree_started_) {
                mask_ = (degree_ == 0) ? 0 : ((1ull << degree_) - 1);
                degree_started_ = true;
            } else if (degree_ == 0 || !gosper_advance()) {
                ++degree_;
                degree_started_ = false;
                continue;
            }
            mask_out = static_cast<std::uint32_t>(mask_);
            return true;
        }
        return false;
    }

  private:
    std::uint64_t last_mask() const { return (1ull << coords_) - 1; }

    void advance_plain() {
        if (mask_ == last_mask())
            exhausted_ = true;
        else
            ++mask_;
    }

    bool gosper_advance() {
        std::uint64_t c = mask_ & (~mask_ + 1);
        std::uint64_t r = mask_ + c;
        std::uint64_t next = (((r ^ mask_) >> 2) / c) | r;
        if (next > last_mask()) return false;
        mask_ = next;
        return true;
    }

    TermOrderKind kind_;
    int coords_;
    std::uint64_t mask_ = 0;
    int degree_ = 0;
    bool degree_started_ = false;
    bool exhausted_ = false;
};

MonomialKey support_of(std::uint32_t mask, const std::vector<int>& coords) {
    std::vector<int> labels;
    int k = static_cast<int>(coords.size());
    for (int j = 0; j < k; ++j)
        if (mask & (1u << j)) labels.push_back(coords[k - 1 - j]);
    return MonomialKey(std::move(labels));
}

}  // namespace

bool EvalMatrix::try_insert(std::vector<BigInt> row) {
    for (const Row& r : rows_) {
        const BigInt& factor = row[r.pivot];
        if (factor == 0) continue;
        const BigInt& lead = r.entries[r.pivot];
        for (std::size_t j = 0; j < columns_; ++j)
            row[j] = row[j] * lead - r.entries[j] * factor;
        normalize_content(row);
    }
    std::size_t pivot = columns_;
    for (std::size_t j = 0; j < columns_; ++j) {
        if (row[j] != 0) {
            pivot = j;
            break;
        }
    }
    if (pivot == columns_) return false;
    if (row[pivot] < 0)
        for (BigInt& x : row) x = -x;
    Row entry{pivot, std::move(row)};
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), entry,
                                [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
    rows_.insert(pos, std::move(entry));
    return true;
}

std::vector<MonomialKey> standard_monomials(const PointConfig& V,
                                            const TermOrder& order) {
    const int k = static_cast<int>(V.coords().size());
    if (k > kMaxCoords)
        throw ResourceLimitError("oracle: " + std::to_string(k) +
                                 " coordinates exceeds the cap of " +
                                 std::to_string(kMaxCoords));
    std::vector<MonomialKey> accepted;
    if (V.empty()) return accepted;

    // Bit j of a point mask is the coordinate matching bit j of a monomial
    // mask; a monomial evaluates to 1 at a point iff its mask is covered.
    std::vector<std::uint32_t> point_masks;
    for (const Point& p : V.points()) {
        std::uint32_t m = 0;
        for (int j = 0; j < k; ++j)
            if (p[static_cast<std::size_t>(k - 1 - j)]) m |= (1u << j);
        point_masks.push_back(m);
    }

    EvalMatrix matrix(point_masks.size());
    MonomialScan scan(order.kind, k);
    std::uint32_t mask = 0;
    while (accepted.size() < V.size() && scan.next(mask)) {
        std::vector<BigInt> evals(point_masks.size());
        for (std::size_t c = 0; c < point_masks.size(); ++c)
            evals[c] = ((point_masks[c] & mask) == mask) ? 1 : 0;
        if (matrix.try_insert(std::move(evals)))
            accepted.push_back(support_of(mask, V.coords().elements()));
    }
    if (accepted.size() != V.size())
        throw std::logic_error("oracle: fewer independent monomials than points");
    return accepted;
}

SimplicialComplex standard_complex(const PointConfig& V, const TermOrder& order) {
    FaceSet faces;
    for (MonomialKey& m : standard_monomials(V, order)) faces.insert(std::move(m));
    return SimplicialComplex::unchecked(V.coords(), std::move(faces));
}

}  // namespace stdcx::oracle
