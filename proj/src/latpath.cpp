#include "stdcx/latpath.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>

namespace stdcx::latpath {

LatticePath LatticePath::parse(std::string_view word) {
    LatticePath p;
    p.word_.reserve(word.size());
    for (char ch : word) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (c != 'e' && c != 'n')
            throw std::invalid_argument(std::string("LatticePath: illegal character '") +
                                        ch + "'");
        p.word_.push_back(c);
    }
    return p;
}

LatticePath LatticePath::from_east_set(const FiniteSet& easts, int length) {
    if (length < 0) throw std::invalid_argument("LatticePath: negative length");
    if (!easts.empty() && easts.max() > length)
        throw std::invalid_argument("LatticePath: east position " +
                                    std::to_string(easts.max()) + " exceeds length " +
                                    std::to_string(length));
    LatticePath p;
    p.word_.assign(static_cast<std::size_t>(length), 'n');
    for (int pos : easts) p.word_[static_cast<std::size_t>(pos) - 1] = 'e';
    return p;
}

LatticePath LatticePath::trivial_lower(int length, int east_count) {
    if (east_count < 0 || east_count > length)
        throw std::invalid_argument("trivial_lower: need 0 <= east_count <= length");
    LatticePath p;
    p.word_ = std::string(static_cast<std::size_t>(east_count), 'e') +
              std::string(static_cast<std::size_t>(length - east_count), 'n');
    return p;
}

int LatticePath::east_count() const {
    return static_cast<int>(std::count(word_.begin(), word_.end(), 'e'));
}

char LatticePath::step(int position) const {
    if (position < 1 || position > length())
        throw std::out_of_range("LatticePath::step: position " +
                                std::to_string(position));
    return word_[static_cast<std::size_t>(position) - 1];
}

FiniteSet LatticePath::east_set() const {
    std::vector<int> easts;
    for (int i = 0; i < length(); ++i)
        if (word_[static_cast<std::size_t>(i)] == 'e') easts.push_back(i + 1);
    return FiniteSet(std::move(easts));
}

std::ostream& operator<<(std::ostream& os, const LatticePath& p) {
    return os << p.word();
}

bool weakly_above(const LatticePath& upper, const LatticePath& lower) {
    if (upper.length() != lower.length() || upper.east_count() != lower.east_count())
        throw std::invalid_argument("weakly_above: shape mismatch (" + upper.word() +
                                    " vs " + lower.word() + ")");
    const auto u = upper.east_set().elements();
    const auto l = lower.east_set().elements();
    for (std::size_t i = 0; i < u.size(); ++i)
        if (l[i] > u[i]) return false;
    return true;
}

bool weakly_above_extended(const LatticePath& c, const LatticePath& lower) {
    if (c.length() != lower.length())
        throw std::invalid_argument("weakly_above_extended: length mismatch");
    if (c.east_count() > lower.east_count()) return false;
    const auto ce = c.east_set().elements();
    const auto le = lower.east_set().elements();
    for (std::size_t i = 0; i < ce.size(); ++i)
        if (le[i] > ce[i]) return false;
    return true;
}

LatticePath dual_path(const LatticePath& p) {
    std::string w = p.word();
    for (char& c : w) c = (c == 'e') ? 'n' : 'e';
    return LatticePath::parse(w);
}

Matroid lpm(const LatticePath& upper, const LatticePath& lower) {
    if (!weakly_above(upper, lower))
        throw std::invalid_argument("lpm: boundaries are not comparable");
    const int n = upper.length();
    const int d = upper.east_count();
    const auto u = upper.east_set().elements();
    const auto l = lower.east_set().elements();
    FaceSet bases;
    std::vector<int> z(static_cast<std::size_t>(d));
    std::function<void(int)> place = [&](int i) {
        if (i == d) {
            bases.insert(FiniteSet(z));
            return;
        }
        int lo = std::max(l[static_cast<std::size_t>(i)],
                          i > 0 ? z[static_cast<std::size_t>(i) - 1] + 1 : 1);
        for (int v = lo; v <= u[static_cast<std::size_t>(i)]; ++v) {
            z[static_cast<std::size_t>(i)] = v;
            place(i + 1);
        }
    };
    place(0);
    return Matroid::from_bases(FiniteSet::range(1, n), std::move(bases),
                               Matroid::Validation::skip);
}

char to_char(Step s) { return static_cast<char>(s); }

std::string DemarcationPath::to_string() const {
    std::string s;
    for (Step st : word) s.push_back(to_char(st));
    return s;
}

bool MarkingPath::visits(int x, int y) const {
    return std::find(vertices.begin(), vertices.end(), std::make_pair(x, y)) !=
           vertices.end();
}

std::string MarkingPath::to_string() const {
    std::string s;
    for (Step st : word) s.push_back(to_char(st));
    return s;
}

namespace {

// Appends east steps to c and north steps to lower so both have the east
// count of lower.
std::pair<LatticePath, LatticePath> extend_pair(const LatticePath& c,
                                                const LatticePath& lower) {
    int extra = lower.east_count() - c.east_count();
    if (extra == 0) return {c, lower};
    return {LatticePath::parse(c.word() + std::string(static_cast<std::size_t>(extra), 'e')),
            LatticePath::parse(lower.word() +
                               std::string(static_cast<std::size_t>(extra), 'n'))};
}

void require_weakly_above(const LatticePath& c, const LatticePath& lower,
                          const char* who) {
    if (!weakly_above_extended(c, lower))
        throw std::invalid_argument(std::string(who) + ": " + c.word() +
                                    " is not weakly above " + lower.word());
}

// heights[c-1] = number of norths before the c-th east step.
std::vector<int> east_heights(const LatticePath& p) {
    std::vector<int> heights;
    int norths = 0;
    for (int i = 1; i <= p.length(); ++i) {
        if (p.step(i) == 'e')
            heights.push_back(norths);
        else
            ++norths;
    }
    return heights;
}

std::vector<Step> demarcation_word(const LatticePath& ct, const LatticePath& lt) {
    std::vector<Step> word;
    word.reserve(static_cast<std::size_t>(ct.length()));
    for (int i = 1; i <= ct.length(); ++i) {
        bool c_north = ct.step(i) == 'n';
        bool l_north = lt.step(i) == 'n';
        if (c_north && l_north)
            word.push_back(Step::north);
        else if (!c_north && !l_north)
            word.push_back(Step::east);
        else if (c_north && !l_north)
            word.push_back(Step::diag);
        else
            word.push_back(Step::skip);
    }
    return word;
}

// floors[c-1] = height of the demarcation path when it starts its c-th
// horizontal (east or diagonal) step.
std::vector<int> demarcation_floors(const std::vector<Step>& dem) {
    std::vector<int> floors;
    int height = 0;
    for (Step s : dem) {
        switch (s) {
            case Step::north: ++height; break;
            case Step::east: floors.push_back(height); break;
            case Step::diag: floors.push_back(height); ++height; break;
            case Step::skip: break;
        }
    }
    return floors;
}

}  // namespace

DemarcationPath demarcation(const LatticePath& c, const LatticePath& lower) {
    require_weakly_above(c, lower, "demarcation");
    auto [ct, lt] = extend_pair(c, lower);
    return DemarcationPath{demarcation_word(ct, lt)};
}

MarkingPath marking_path(const LatticePath& c, const LatticePath& lower) {
    require_weakly_above(c, lower, "marking_path");
    auto [ct, lt] = extend_pair(c, lower);
    const std::vector<Step> dem = demarcation_word(ct, lt);
    const std::vector<int> top = east_heights(ct);     // stay weakly below C
    const std::vector<int> floor = demarcation_floors(dem);  // stay weakly above dem
    const int d_ext = ct.east_count();
    const int height = ct.length() - d_ext;
    const std::vector<int> east_positions = ct.east_set().elements();

    MarkingPath mar;
    mar.vertices.emplace_back(0, 0);
    std::vector<int> marked;
    int x = 0, y = 0;
    while (x != d_ext || y != height) {
        if (x == d_ext) {
            mar.word.push_back(Step::north);
            mar.vertices.emplace_back(x, ++y);
            continue;
        }
        const std::size_t col = static_cast<std::size_t>(x);
        const bool upper_ok = y + 1 <= top[col];
        const bool lower_ok = y >= floor[col];
        if (upper_ok && lower_ok) {
            mar.word.push_back(Step::diag);
            mar.vertices.emplace_back(++x, ++y);
        } else if (lower_ok) {
            if (y != top[col])
                throw std::logic_error("marking_path: east step off the path C");
            if (east_positions[col] <= c.length()) marked.push_back(east_positions[col]);
            mar.word.push_back(Step::east);
            mar.vertices.emplace_back(++x, y);
        } else if (upper_ok) {
            mar.word.push_back(Step::north);
            mar.vertices.emplace_back(x, ++y);
        } else {
            throw std::logic_error("marking_path: both constraints violated at (" +
                                   std::to_string(x) + "," + std::to_string(y) + ")");
        }
    }
    mar.marked = FiniteSet(std::move(marked));
    return mar;
}

Statistic statistic(const LatticePath& c, const LatticePath& lower) {
    return set_difference(c.east_set(), marking_path(c, lower).marked);
}

Statistic statistic_trivial_scan(const LatticePath& c) {
    std::vector<int> unmarked_positions;
    int norths = 0, unmarked = 0;
    for (int i = 1; i <= c.length(); ++i) {
        if (c.step(i) == 'n') {
            ++norths;
            continue;
        }
        if (norths != unmarked) {
            unmarked_positions.push_back(i);
            ++unmarked;
        }
    }
    return Statistic(std::move(unmarked_positions));
}

Statistic hook_placement(const LatticePath& c) {
    const std::vector<int> heights = east_heights(c);
    const std::vector<int> east_positions = c.east_set().elements();
    std::vector<char> used_row(static_cast<std::size_t>(c.north_count()) + 1, 0);
    std::vector<int> placed;
    for (std::size_t col = 0; col < heights.size(); ++col) {
        for (int r = heights[col]; r >= 1; --r) {
            if (!used_row[static_cast<std::size_t>(r)]) {
                used_row[static_cast<std::size_t>(r)] = 1;
                placed.push_back(east_positions[col]);
                break;
            }
        }
    }
    return Statistic(std::move(placed));
}

LatticePath raise(const LatticePath& c, const LatticePath& lower) {
    MarkingPath mar = marking_path(c, lower);
    const int d = c.east_count();
    if (mar.visits(d, c.length() - d))
        throw std::invalid_argument(
            "raise: marking path passes through the endpoint (statistic-maximal east "
            "count)");
    int flip = -1;
    int x = 0, y = 0;
    for (int i = 1; i <= c.length(); ++i) {
        if (c.step(i) == 'n') {
            if (mar.visits(x, y)) flip = i;
            ++y;
        } else {
            ++x;
        }
    }
    if (flip < 0)
        throw std::logic_error("raise: no north step starts on the marking path");
    std::string w = c.word();
    w[static_cast<std::size_t>(flip) - 1] = 'e';
    return LatticePath::parse(w);
}

LatticePath lower(const LatticePath& c, const LatticePath& lower_boundary) {
    Statistic st = statistic(c, lower_boundary);
    FiniteSet marked = set_difference(c.east_set(), st);
    if (marked.empty())
        throw std::invalid_argument("lower: every east step is unmarked");
    std::string w = c.word();
    w[static_cast<std::size_t>(marked.max()) - 1] = 'n';
    return LatticePath::parse(w);
}

std::optional<LatticePath> path_from_statistic(const FiniteSet& J, int n, int d,
                                               const LatticePath& lower) {
    if (lower.length() != n)
        throw std::invalid_argument("path_from_statistic: lower boundary has length " +
                                    std::to_string(lower.length()) + ", expected " +
                                    std::to_string(n));
    if (!J.empty() && J.max() > n)
        throw std::invalid_argument("path_from_statistic: J is not a subset of [n]");
    const int ell = static_cast<int>(J.size());
    if (d < ell || d > lower.east_count()) return std::nullopt;

    LatticePath e = LatticePath::from_east_set(J, n);
    if (!weakly_above_extended(e, lower)) return std::nullopt;
    if (statistic(e, lower) != J) return std::nullopt;

    // Horizontal reach of the marking path at its final height bounds the
    // east counts realizing J.
    MarkingPath mar = marking_path(e, lower);
    const int top = n - ell;
    int first_top_x = -1;
    for (const auto& [vx, vy] : mar.vertices) {
        if (vy == top && (first_top_x < 0 || vx < first_top_x)) first_top_x = vx;
    }
    if (first_top_x < ell)
        throw std::logic_error("path_from_statistic: marking path tops out early");
    const int k = first_top_x - ell;
    if (d > ell + k) return std::nullopt;

    LatticePath c = e;
    for (int i = ell; i < d; ++i) c = raise(c, lower);
    return c;
}

LatticePath composite_bijection(const LatticePath& upper, const LatticePath& lower,
                                const LatticePath& c) {
    if (!weakly_above(upper, c) || !weakly_above(c, lower))
        throw std::invalid_argument("composite_bijection: path is not between the "
                                    "boundaries");
    const int n = c.length();
    const int d = c.east_count();
    Statistic j = statistic(c, lower);
    std::optional<LatticePath> image = path_from_statistic(j, n, n - d, dual_path(upper));
    if (!image)
        throw std::logic_error("composite_bijection: no dual-side path realizes " +
                               j.to_string());
    return *image;
}

}  // namespace stdcx::latpath
