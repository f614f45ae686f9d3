// Copyright 2026 The Scriptogen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scriptogen/action_plan.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "scriptogen/errors.hpp"

namespace scriptogen {

namespace detail {
extern const char* const kDefaultGlyphLibraryText;
}

double HexGrid::row_spacing() const { return pitch * std::sqrt(3.0) / 2.0; }

void HexGrid::validate() const {
    if (n_cols <= 0 || n_rows <= 0) throw DomainError("hex grid needs positive dimensions");
    if (!(pitch > 0.0) || !std::isfinite(pitch)) throw DomainError("hex grid needs pitch > 0");
}

Point grid_node_position(const HexGrid& grid, std::size_t index) {
    if (index >= grid.size()) {
        throw IndexError("grid node " + std::to_string(index) + " outside grid of " +
                         std::to_string(grid.size()) + " nodes");
    }
    const auto col = static_cast<double>(index % static_cast<std::size_t>(grid.n_cols));
    const auto row = index / static_cast<std::size_t>(grid.n_cols);
    const double shift = (row % 2 == 1) ? 0.5 * grid.pitch : 0.0;
    return grid.origin + Point(col * grid.pitch + shift, static_cast<double>(row) * grid.row_spacing());
}

std::string_view to_string(GuideTag tag) {
    switch (tag) {
        case GuideTag::upper1: return "upper1";
        case GuideTag::upper2: return "upper2";
        case GuideTag::lower1: return "lower1";
        case GuideTag::lower2: return "lower2";
        case GuideTag::none: break;
    }
    return "none";
}

void GuideLines::validate() const {
    const bool ordered = lower2 < lower1 && lower1 < baseline && baseline < corpus_top &&
                         corpus_top < upper2 && upper2 < upper1;
    if (!ordered) {
        throw FormatError(
            "guide lines must satisfy lower2 < lower1 < baseline < corpus_top < upper2 < upper1");
    }
}

GuideTag GuideLines::tag(double y, double tolerance) const {
    const std::pair<double, GuideTag> lines[] = {
        {upper1, GuideTag::upper1},
        {upper2, GuideTag::upper2},
        {lower1, GuideTag::lower1},
        {lower2, GuideTag::lower2},
    };
    for (const auto& [line, tag] : lines) {
        if (std::abs(y - line) <= tolerance) return tag;
    }
    return GuideTag::none;
}

GuideLines GuideLines::from_rows(const HexGrid& grid, int lower2, int lower1, int baseline,
                                 int corpus_top, int upper2, int upper1) {
    const double h = grid.row_spacing();
    const double y0 = grid.origin.y();
    GuideLines g{y0 + lower2 * h,     y0 + lower1 * h, y0 + baseline * h,
                 y0 + corpus_top * h, y0 + upper2 * h, y0 + upper1 * h};
    g.validate();
    return g;
}

void GlyphPlan::validate(const HexGrid& grid) const {
    const std::string who = std::string("glyph '") + letter + "'";
    if (nodes.size() < 6) throw FormatError(who + " needs at least 6 nodes");
    if (pen_down.size() + 1 != nodes.size())
        throw FormatError(who + " needs one pen flag per node pair");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] >= grid.size())
            throw FormatError(who + " references node " + std::to_string(nodes[i]) +
                              " outside the grid");
        if (i > 0 && pen_down[i - 1] && nodes[i] == nodes[i - 1])
            throw FormatError(who + " repeats node " + std::to_string(nodes[i]) +
                              " on a pen-down link");
    }
}

GlyphLibrary::GlyphLibrary(HexGrid grid, GuideLines guides, std::vector<GlyphPlan> glyphs)
    : grid_(grid), guides_(guides) {
    grid_.validate();
    guides_.validate();
    for (auto& g : glyphs) {
        g.validate(grid_);
        const char letter = g.letter;
        if (!glyphs_.emplace(letter, std::move(g)).second)
            throw FormatError(std::string("duplicate glyph '") + letter + "'");
    }
}

namespace {

constexpr std::string_view kGlyphHeader = "scriptogen-glyphs v1";

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
    throw FormatError("glyph library line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

GlyphLibrary GlyphLibrary::parse(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    // header: first non-blank line
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = strip_comment(line);
        s.erase(0, s.find_first_not_of(" \t\r"));
        s.erase(s.find_last_not_of(" \t\r") + 1);
        if (s.empty()) continue;
        if (s != kGlyphHeader) fail(line_no, "expected header '" + std::string(kGlyphHeader) + "'");
        have_header = true;
        break;
    }
    if (!have_header) throw FormatError("glyph library is empty");

    std::optional<HexGrid> grid;
    std::optional<GuideLines> guides;
    std::vector<GlyphPlan> glyphs;
    std::optional<GlyphPlan> current;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(strip_comment(line));
        std::string key;
        if (!(ss >> key)) continue;

        if (key == "grid") {
            HexGrid g;
            if (!(ss >> g.n_cols >> g.n_rows >> g.pitch)) fail(line_no, "grid needs cols rows pitch");
            double ox = 0.0, oy = 0.0;
            if (ss >> ox) {
                if (!(ss >> oy)) fail(line_no, "grid origin needs x and y");
            }
            g.origin = Point(ox, oy);
            grid = g;
        } else if (key == "guides") {
            GuideLines g;
            if (!(ss >> g.lower2 >> g.lower1 >> g.baseline >> g.corpus_top >> g.upper2 >> g.upper1))
                fail(line_no, "guides needs six values");
            guides = g;
        } else if (key == "glyph") {
            if (current) fail(line_no, "glyph without end");
            std::string letter;
            if (!(ss >> letter) || letter.size() != 1) fail(line_no, "glyph needs one character");
            current = GlyphPlan{letter[0], {}, {}};
        } else if (key == "nodes") {
            if (!current) fail(line_no, "nodes outside glyph");
            long long v = 0;
            while (ss >> v) {
                if (v < 0) fail(line_no, "negative node index");
                current->nodes.push_back(static_cast<std::size_t>(v));
            }
            if (!ss.eof()) fail(line_no, "bad node index");
        } else if (key == "pen") {
            if (!current) fail(line_no, "pen outside glyph");
            int v = 0;
            while (ss >> v) {
                if (v != 0 && v != 1) fail(line_no, "pen flags are 0 or 1");
                current->pen_down.push_back(v == 1);
            }
            if (!ss.eof()) fail(line_no, "bad pen flag");
        } else if (key == "end") {
            if (!current) fail(line_no, "end outside glyph");
            if (current->pen_down.empty() && !current->nodes.empty())
                current->pen_down.assign(current->nodes.size() - 1, true);
            glyphs.push_back(std::move(*current));
            current.reset();
        } else {
            fail(line_no, "unknown directive '" + key + "'");
        }
    }
    if (current) throw FormatError("glyph library ends inside a glyph");
    if (!grid) throw FormatError("glyph library has no grid line");
    if (!guides) throw FormatError("glyph library has no guides line");
    return GlyphLibrary(*grid, *guides, std::move(glyphs));
}

GlyphLibrary GlyphLibrary::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open glyph library");
    return parse(in);
}

void GlyphLibrary::write(std::ostream& out) const {
    out << kGlyphHeader << '\n';
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << "grid " << grid_.n_cols << ' ' << grid_.n_rows << ' ' << grid_.pitch << ' '
        << grid_.origin.x() << ' ' << grid_.origin.y() << '\n';
    out << "guides " << guides_.lower2 << ' ' << guides_.lower1 << ' ' << guides_.baseline << ' '
        << guides_.corpus_top << ' ' << guides_.upper2 << ' ' << guides_.upper1 << '\n';
    for (const auto& [letter, g] : glyphs_) {
        out << "glyph " << letter << "\nnodes";
        for (auto n : g.nodes) out << ' ' << n;
        out << "\npen";
        for (bool p : g.pen_down) out << ' ' << (p ? 1 : 0);
        out << "\nend\n";
    }
}

const GlyphPlan* GlyphLibrary::find(char letter) const {
    const auto it = glyphs_.find(letter);
    return it == glyphs_.end() ? nullptr : &it->second;
}

const GlyphPlan& GlyphLibrary::at(char letter) const {
    const auto* g = find(letter);
    if (!g) throw MissingGlyphError(letter);
    return *g;
}

std::vector<char> GlyphLibrary::letters() const {
    std::vector<char> out;
    out.reserve(glyphs_.size());
    for (const auto& [letter, g] : glyphs_) out.push_back(letter);
    return out;
}

const GlyphLibrary& default_glyph_library() {
    static const GlyphLibrary library = [] {
        std::istringstream in(detail::kDefaultGlyphLibraryText);
        return GlyphLibrary::parse(in);
    }();
    return library;
}

std::pair<std::size_t, std::size_t> TrajectoryPlan::glyph_range(std::size_t g) const {
    const auto lo = std::partition_point(points.begin(), points.end(),
                                         [g](const PlanPoint& p) { return p.glyph < g; });
    const auto hi = std::partition_point(lo, points.end(),
                                         [g](const PlanPoint& p) { return p.glyph <= g; });
    return {static_cast<std::size_t>(lo - points.begin()),
            static_cast<std::size_t>(hi - points.begin())};
}

void TrajectoryPlan::validate() const {
    if (points.size() < 2) throw FormatError("trajectory plan needs at least 2 points");
    if (pen_down.size() + 1 != points.size())
        throw FormatError("trajectory plan needs one pen flag per point pair");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].glyph < points[i - 1].glyph)
            throw FormatError("trajectory plan glyph indices must be non-decreasing");
        if (pen_down[i - 1] && points[i].position == points[i - 1].position)
            throw FormatError("consecutive pen-down plan points coincide at index " +
                              std::to_string(i));
    }
    if (points.back().glyph >= std::max<std::size_t>(letters.size(), 1))
        throw FormatError("trajectory plan glyph index exceeds letter count");
}

std::vector<std::vector<Point>> TrajectoryPlan::pen_down_segments() const {
    std::vector<std::vector<Point>> segments;
    if (points.empty()) return segments;
    std::vector<Point> run{points.front().position};
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (pen_down[i - 1]) {
            run.push_back(points[i].position);
        } else {
            if (run.size() >= 2) segments.push_back(std::move(run));
            run = {points[i].position};
        }
    }
    if (run.size() >= 2) segments.push_back(std::move(run));
    return segments;
}

void tag_guide_points(TrajectoryPlan& plan, const GuideLines& guides, double tolerance) {
    for (auto& p : plan.points) p.tag = guides.tag(p.position.y(), tolerance);
}

TrajectoryPlan build_word_plan(std::string_view word, const GlyphLibrary& glyphs,
                               std::optional<double> letter_advance) {
    if (word.empty()) throw DomainError("cannot build a plan for an empty word");
    const HexGrid& grid = glyphs.grid();

    TrajectoryPlan plan;
    double shift = 0.0;
    double prev_right = 0.0;
    for (std::size_t k = 0; k < word.size(); ++k) {
        const GlyphPlan& glyph = glyphs.at(word[k]);

        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (auto n : glyph.nodes) {
            const double x = grid_node_position(grid, n).x();
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        if (letter_advance) {
            shift = static_cast<double>(k) * *letter_advance;
        } else if (k > 0) {
            shift = prev_right + grid.pitch - lo;
        }
        prev_right = hi + shift;

        if (k > 0) plan.pen_down.push_back(false);
        for (std::size_t i = 0; i < glyph.nodes.size(); ++i) {
            PlanPoint p;
            p.position = grid_node_position(grid, glyph.nodes[i]) + Point(shift, 0.0);
            p.glyph = k;
            plan.points.push_back(p);
            if (i > 0) plan.pen_down.push_back(glyph.pen_down[i - 1]);
        }
        plan.letters.push_back(word[k]);
    }
    tag_guide_points(plan, glyphs.guides(), grid.pitch / 4.0);
    return plan;
}

}  // namespace scriptogen
