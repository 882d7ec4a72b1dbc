#include "stdcx/render.hpp"

#include <sstream>
#include <vector>

namespace stdcx::latpath {

namespace {

struct Canvas {
    int rows, cols;
    std::vector<std::string> grid;

    Canvas(int r, int c) : rows(r), cols(c), grid(static_cast<std::size_t>(r)) {
        for (auto& line : grid) line.assign(static_cast<std::size_t>(c), ' ');
    }

    void put(int row, int col, char ch) {
        if (row >= 0 && row < rows && col >= 0 && col < cols)
            grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = ch;
    }

    void text(int row, int col, const std::string& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            put(row, col + static_cast<int>(i), s[i]);
    }
};

// Canvas coordinates of the lattice point (x, y): columns grow east, rows
// grow south, so y is flipped.
int canvas_row(int y, int height) { return 2 * (height - y); }
int canvas_col(int x) { return 4 * x; }

void draw_word(Canvas& canvas, const std::vector<Step>& word, int height, char ch) {
    int x = 0, y = 0;
    for (Step s : word) {
        switch (s) {
            case Step::east: {
                int r = canvas_row(y, height);
                for (int k = 1; k <= 3; ++k) canvas.put(r, canvas_col(x) + k, ch);
                ++x;
                break;
            }
            case Step::north: {
                canvas.put(canvas_row(y, height) - 1, canvas_col(x), ch);
                ++y;
                break;
            }
            case Step::diag: {
                canvas.put(canvas_row(y, height) - 1, canvas_col(x) + 2, ch);
                ++x;
                ++y;
                break;
            }
            case Step::skip: break;
        }
    }
}

std::vector<Step> path_word(const LatticePath& p) {
    std::vector<Step> word;
    for (int i = 1; i <= p.length(); ++i)
        word.push_back(p.step(i) == 'e' ? Step::east : Step::north);
    return word;
}

}  // namespace

std::string render_ascii(const LatticePath& upper, const LatticePath& lower,
                         const LatticePath& c) {
    MarkingPath mar = marking_path(c, lower);
    DemarcationPath dem = demarcation(c, lower);
    Statistic st = statistic(c, lower);

    int extra = lower.east_count() - c.east_count();
    LatticePath ct = extra ? LatticePath::parse(
                                 c.word() + std::string(static_cast<std::size_t>(extra), 'e'))
                           : c;
    const int width = lower.east_count();
    const int height = ct.length() - width;

    Canvas canvas(2 * height + 2, 4 * width + 8);
    for (int y = 0; y <= height; ++y)
        for (int x = 0; x <= width; ++x)
            canvas.put(canvas_row(y, height) , canvas_col(x), '+');

    if (upper.length() == c.length() && upper.east_count() == c.east_count())
        draw_word(canvas, path_word(upper), height, '.');
    draw_word(canvas, path_word(lower), height, '.');
    draw_word(canvas, path_word(ct), height, '*');
    draw_word(canvas, dem.word, height, ':');
    draw_word(canvas, mar.word, height, '@');

    // Labels above the unmarked east steps of C.
    {
        int x = 0, y = 0;
        for (int i = 1; i <= c.length(); ++i) {
            if (c.step(i) == 'e') {
                if (st.contains(i))
                    canvas.text(canvas_row(y, height) - 1, canvas_col(x) + 1,
                                std::to_string(i));
                ++x;
            } else {
                ++y;
            }
        }
    }

    std::ostringstream os;
    os << "C   = " << c.word() << "\n";
    os << "L   = " << lower.word() << "\n";
    os << "dem = " << dem.to_string() << "\n";
    os << "mar = " << mar.to_string() << "\n";
    os << "st  = " << st.to_string() << "  (marked: "
       << set_difference(c.east_set(), st).to_string() << ")\n\n";
    for (const auto& line : canvas.grid) {
        std::string trimmed = line;
        while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
        os << trimmed << "\n";
    }
    os << "\nkey: * path C, . boundaries, : demarcation, @ marking path\n";
    return os.str();
}

namespace {

std::string svg_polyline(const std::vector<std::pair<int, int>>& vertices, int height,
                         int unit, int pad, const std::string& style) {
    std::ostringstream os;
    os << "  <polyline fill=\"none\" " << style << " points=\"";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << ' ';
        os << pad + unit * vertices[i].first << ','
           << pad + unit * (height - vertices[i].second);
    }
    os << "\"/>\n";
    return os.str();
}

std::vector<std::pair<int, int>> vertices_of(const std::vector<Step>& word) {
    std::vector<std::pair<int, int>> v{{0, 0}};
    int x = 0, y = 0;
    for (Step s : word) {
        switch (s) {
            case Step::east: ++x; break;
            case Step::north: ++y; break;
            case Step::diag: ++x; ++y; break;
            case Step::skip: continue;
        }
        v.emplace_back(x, y);
    }
    return v;
}

}  // namespace

std::string render_svg(const LatticePath& upper, const LatticePath& lower,
                       const LatticePath& c) {
    MarkingPath mar = marking_path(c, lower);
    DemarcationPath dem = demarcation(c, lower);
    Statistic st = statistic(c, lower);

    int extra = lower.east_count() - c.east_count();
    LatticePath ct = extra ? LatticePath::parse(
                                 c.word() + std::string(static_cast<std::size_t>(extra), 'e'))
                           : c;
    const int width = lower.east_count();
    const int height = ct.length() - width;
    const int unit = 28, pad = 24;
    const int w = 2 * pad + unit * width, h = 2 * pad + unit * height;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
       << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    for (int x = 0; x <= width; ++x)
        os << "  <line x1=\"" << pad + unit * x << "\" y1=\"" << pad << "\" x2=\""
           << pad + unit * x << "\" y2=\"" << pad + unit * height
           << "\" stroke=\"#ccc\" stroke-dasharray=\"2,3\"/>\n";
    for (int y = 0; y <= height; ++y)
        os << "  <line x1=\"" << pad << "\" y1=\"" << pad + unit * y << "\" x2=\""
           << pad + unit * width << "\" y2=\"" << pad + unit * y
           << "\" stroke=\"#ccc\" stroke-dasharray=\"2,3\"/>\n";

    if (upper.length() == c.length() && upper.east_count() == c.east_count())
        os << svg_polyline(vertices_of(path_word(upper)), height, unit, pad,
                           "stroke=\"#999\" stroke-width=\"2\"");
    os << svg_polyline(vertices_of(path_word(lower)), height, unit, pad,
                       "stroke=\"#bbb\" stroke-width=\"4\"");
    os << svg_polyline(vertices_of(path_word(ct)), height, unit, pad,
                       "stroke=\"black\" stroke-width=\"3\"");
    os << svg_polyline(vertices_of(dem.word), height, unit, pad,
                       "stroke=\"blue\" stroke-width=\"2\" stroke-dasharray=\"4,3\"");
    os << svg_polyline(mar.vertices, height, unit, pad,
                       "stroke=\"red\" stroke-width=\"2\"");

    int x = 0, y = 0;
    for (int i = 1; i <= c.length(); ++i) {
        if (c.step(i) == 'e') {
            if (st.contains(i))
                os << "  <text x=\"" << pad + unit * x + unit / 2 << "\" y=\""
                   << pad + unit * (height - y) - 6
                   << "\" font-size=\"11\" text-anchor=\"middle\">" << i << "</text>\n";
            ++x;
        } else {
            ++y;
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace stdcx::latpath
