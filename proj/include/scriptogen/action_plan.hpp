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

#pragma once

// Effector-independent layer: the hexagonal target grid, per-letter
// trajectory plans and their concatenation into word plans.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace scriptogen {

using Point = Eigen::Vector2d;

/// Offset-hexagonal lattice. Node `i` sits at column `i % n_cols`, row
/// `i / n_cols`; odd rows are shifted right by half a pitch and rows are
/// `pitch * sqrt(3) / 2` apart (y grows upward).
struct HexGrid {
    int n_cols = 12;
    int n_rows = 23;
    double pitch = 1.0;  // mm
    Point origin = Point::Zero();

    std::size_t size() const { return static_cast<std::size_t>(n_cols) * n_rows; }
    double row_spacing() const;
    void validate() const;
};

Point grid_node_position(const HexGrid& grid, std::size_t index);

enum class GuideTag : std::uint8_t { none, upper1, upper2, lower1, lower2 };

std::string_view to_string(GuideTag tag);

/// Worksheet reference lines, in mm. Ordered bottom to top:
/// lower2 < lower1 < baseline < corpus_top < upper2 < upper1.
struct GuideLines {
    double lower2 = 0.0;
    double lower1 = 0.0;
    double baseline = 0.0;
    double corpus_top = 0.0;
    double upper2 = 0.0;
    double upper1 = 0.0;

    void validate() const;

    /// Line within `tolerance` of `y`, if any. Only the four outer worksheet
    /// lines produce a tag.
    GuideTag tag(double y, double tolerance) const;

    /// Guide lines placed on grid rows (row 0 is the bottom row).
    static GuideLines from_rows(const HexGrid& grid, int lower2, int lower1, int baseline,
                                int corpus_top, int upper2, int upper1);
};

struct GlyphPlan {
    char letter = '\0';
    std::vector<std::size_t> nodes;
    std::vector<bool> pen_down;  // one flag per consecutive node pair

    /// Throws FormatError if the plan violates its invariants on `grid`.
    void validate(const HexGrid& grid) const;
};

/// Immutable set of glyph plans sharing one grid and one set of guide lines.
///
/// Text format (`scriptogen-glyphs v1`), one directive per line, `#` starts a
/// comment:
///
///     scriptogen-glyphs v1
///     grid <n_cols> <n_rows> <pitch_mm> [<origin_x_mm> <origin_y_mm>]
///     guides <lower2> <lower1> <baseline> <corpus_top> <upper2> <upper1>
///     glyph <letter>
///     nodes <i0> <i1> ...
///     pen <0|1> ...          (optional, one flag per pair; default all 1)
///     end
class GlyphLibrary {
public:
    GlyphLibrary(HexGrid grid, GuideLines guides, std::vector<GlyphPlan> glyphs);

    static GlyphLibrary parse(std::istream& in);
    static GlyphLibrary load(const std::string& path);
    void write(std::ostream& out) const;

    const HexGrid& grid() const { return grid_; }
    const GuideLines& guides() const { return guides_; }
    const GlyphPlan* find(char letter) const;
    const GlyphPlan& at(char letter) const;  // throws MissingGlyphError
    std::vector<char> letters() const;
    std::size_t size() const { return glyphs_.size(); }

    /// Grid-node spacing, the reference distance of stroke amplitudes.
    double d_ref() const { return grid_.pitch; }

private:
    HexGrid grid_;
    GuideLines guides_;
    std::map<char, GlyphPlan> glyphs_;
};

/// The library shipped with the project (compiled in from data/glyphs.txt).
const GlyphLibrary& default_glyph_library();

struct PlanPoint {
    Point position = Point::Zero();
    GuideTag tag = GuideTag::none;
    std::size_t glyph = 0;  // index of the letter within the word
};

/// Ordered pen targets for a whole word.
struct TrajectoryPlan {
    std::vector<PlanPoint> points;
    std::vector<bool> pen_down;  // size points.size() - 1
    std::string letters;         // letter of each glyph index

    std::size_t n_sl() const { return points.size(); }
    std::size_t glyph_count() const { return letters.size(); }

    /// Half-open [begin, end) point range of glyph `g`.
    std::pair<std::size_t, std::size_t> glyph_range(std::size_t g) const;

    /// Throws FormatError on a violated invariant.
    void validate() const;

    /// Maximal runs of points joined by pen-down links.
    std::vector<std::vector<Point>> pen_down_segments() const;
};

/// Translate and concatenate the glyph plans of `word`. Glyph k is shifted
/// right by k * letter_advance when given; otherwise each glyph starts one
/// pitch right of the previous glyph's bounding box. Letters are joined by
/// pen-up links.
TrajectoryPlan build_word_plan(std::string_view word, const GlyphLibrary& glyphs,
                               std::optional<double> letter_advance = std::nullopt);

/// Recompute guide tags of every point (tolerance pitch/4).
void tag_guide_points(TrajectoryPlan& plan, const GuideLines& guides, double tolerance);

}  // namespace scriptogen
