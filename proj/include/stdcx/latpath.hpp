#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stdcx/core.hpp"
#include "stdcx/matroid.hpp"

namespace stdcx::latpath {

// A word over {e, n}: d east steps and length-d north steps from (0,0) to
// (d, length-d).
class LatticePath {
  public:
    LatticePath() = default;
    static LatticePath parse(std::string_view word);  // accepts e/n/E/N
    static LatticePath from_east_set(const FiniteSet& easts, int length);
    // e^d n^(length-d), the trivial lower boundary.
    static LatticePath trivial_lower(int length, int east_count);

    int length() const { return static_cast<int>(word_.size()); }
    int east_count() const;
    int north_count() const { return length() - east_count(); }
    char step(int position) const;  // 1-based, 'e' or 'n'
    FiniteSet east_set() const;
    const std::string& word() const { return word_; }
    bool empty() const { return word_.empty(); }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

  private:
    std::string word_;
};

std::ostream& operator<<(std::ostream& os, const LatticePath& p);

// upper and lower must share length and east count; true iff every east
// position of lower is <= the matching east position of upper.
bool weakly_above(const LatticePath& upper, const LatticePath& lower);

// Generalized comparison used by the marking machinery: c may have fewer
// east steps than lower (same length), and the componentwise condition is
// checked on the first east_count(c) positions.
bool weakly_above_extended(const LatticePath& c, const LatticePath& lower);

// Letters swapped; an involution.
LatticePath dual_path(const LatticePath& p);

// The lattice path matroid M[U, L] on {1, ..., n}: bases are the east sets
// of the paths weakly between the boundaries.
Matroid lpm(const LatticePath& upper, const LatticePath& lower);

enum class Step : char { east = 'e', north = 'n', diag = 'd', skip = '.' };

char to_char(Step s);

// One letter per position of the (extended) C/L pair: the east coordinate of
// L merged with the north coordinate of C.
struct DemarcationPath {
    std::vector<Step> word;
    std::string to_string() const;
};

// Greedy diagonal path squeezed between the demarcation path and C.  Stored
// in the coordinates of the extended pair; `marked` keeps only the east
// positions of the original C that the path realizes.
struct MarkingPath {
    std::vector<Step> word;
    std::vector<std::pair<int, int>> vertices;
    FiniteSet marked;

    bool visits(int x, int y) const;
    std::string to_string() const;
};

DemarcationPath demarcation(const LatticePath& c, const LatticePath& lower);
MarkingPath marking_path(const LatticePath& c, const LatticePath& lower);

using Statistic = FiniteSet;

// Unmarked east positions of c relative to the lower boundary.
Statistic statistic(const LatticePath& c, const LatticePath& lower);

// Left-to-right scan for the trivial lower boundary: an east step is marked
// iff the norths seen so far equal the unmarked easts seen so far.
Statistic statistic_trivial_scan(const LatticePath& c);

// South-east hook placements below c; the columns that receive a corner box
// are the statistic.  Agrees with the scan.
Statistic hook_placement(const LatticePath& c);

// Replaces the last north step starting on the marking path by an east step;
// keeps the statistic and the lower bound.  Requires the marking path not to
// pass through c's endpoint.
LatticePath raise(const LatticePath& c, const LatticePath& lower);

// Inverse of raise: turns the last marked east step into a north step.
// Requires some east step to be marked.
LatticePath lower(const LatticePath& c, const LatticePath& lower);

// The unique path in L(n,d) weakly above `lower` with statistic J, if any.
std::optional<LatticePath> path_from_statistic(const FiniteSet& J, int n, int d,
                                               const LatticePath& lower);

// The unique C' in P[L*, U*] with st_{U*}(C') = st_L(C), obtained through
// the statistic on the dual side.
LatticePath composite_bijection(const LatticePath& upper, const LatticePath& lower,
                                const LatticePath& c);

}  // namespace stdcx::latpath
