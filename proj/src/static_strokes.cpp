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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>

#include "scriptogen/evaluation.hpp"

namespace scriptogen {

namespace {

// Zero-padded copy of a raster so every pixel has eight neighbours.
struct PaddedGrid {
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    Eigen::Index stride = 0;
    std::vector<std::uint8_t> on;

    explicit PaddedGrid(const Raster& img)
        : rows(img.rows()), cols(img.cols()), stride(img.cols() + 2),
          on(static_cast<std::size_t>((img.rows() + 2) * (img.cols() + 2)), 0) {
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c) on[index(r, c)] = img.ink(r, c) ? 1 : 0;
    }

    std::size_t index(Eigen::Index r, Eigen::Index c) const {
        return static_cast<std::size_t>((r + 1) * stride + (c + 1));
    }
    Eigen::Index row_of(std::size_t i) const { return static_cast<Eigen::Index>(i) / stride - 1; }
    Eigen::Index col_of(std::size_t i) const { return static_cast<Eigen::Index>(i) % stride - 1; }

    // Clockwise from north: N, NE, E, SE, S, SW, W, NW.
    std::array<std::ptrdiff_t, 8> offsets() const {
        const auto w = static_cast<std::ptrdiff_t>(stride);
        return {-w, -w + 1, 1, w + 1, w, w - 1, -1, -w - 1};
    }
};

int neighbour_count(const PaddedGrid& g, std::size_t i) {
    int n = 0;
    for (auto off : g.offsets()) n += g.on[i + off];
    return n;
}

// Number of 0 -> 1 transitions around the 8-neighbourhood.
int crossing_number(const PaddedGrid& g, std::size_t i) {
    const auto offs = g.offsets();
    int cn = 0;
    for (int k = 0; k < 8; ++k)
        if (!g.on[i + offs[k]] && g.on[i + offs[(k + 1) % 8]]) ++cn;
    return cn;
}

enum class Kind : std::uint8_t { off, path, end, junction, isolated };

Kind classify(const PaddedGrid& g, std::size_t i) {
    if (!g.on[i]) return Kind::off;
    const int n = neighbour_count(g, i);
    if (n == 0) return Kind::isolated;
    const int cn = crossing_number(g, i);
    if (n == 1 || (n == 2 && cn == 1)) return Kind::end;
    if (cn >= 3) return Kind::junction;
    return Kind::path;
}

struct PixelLine {
    std::vector<std::size_t> pixels;
    Kind first = Kind::path;
    Kind last = Kind::path;
    bool closed = false;
    int first_cluster = -1;
    int last_cluster = -1;
};

class Tracer {
public:
    explicit Tracer(const PaddedGrid& g) : g_(g), kind_(g.on.size(), Kind::off), visited_(g.on.size(), 0),
                                           cluster_(g.on.size(), -1) {
        for (std::size_t i = 0; i < g.on.size(); ++i) kind_[i] = classify(g, i);
        label_junction_clusters();
    }

    std::vector<PixelLine> run() {
        std::vector<PixelLine> lines;
        const std::size_t n = g_.on.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (kind_[i] != Kind::end || visited_[i]) continue;
            visited_[i] = 1;
            for (auto off : ordered_offsets()) {
                const std::size_t j = i + off;
                if (!g_.on[j] || (visited_[j] && kind_[j] != Kind::junction)) continue;
                lines.push_back(walk(i, j));
                break;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (kind_[i] != Kind::junction) continue;
            for (auto off : ordered_offsets()) {
                const std::size_t j = i + off;
                if (!g_.on[j] || visited_[j] || kind_[j] == Kind::junction) continue;
                lines.push_back(walk(i, j));
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (kind_[i] == Kind::isolated) {
                lines.push_back(PixelLine{{i}, Kind::isolated, Kind::isolated, false});
            } else if (g_.on[i] && !visited_[i] && kind_[i] != Kind::junction) {
                lines.push_back(walk_cycle(i));
            }
        }
        return lines;
    }

    Kind kind(std::size_t i) const { return kind_[i]; }
    int cluster(std::size_t i) const { return cluster_[i]; }

private:
    std::array<std::ptrdiff_t, 8> ordered_offsets() const {
        const auto o = g_.offsets();
        return {o[0], o[2], o[4], o[6], o[1], o[3], o[5], o[7]};
    }

    void label_junction_clusters() {
        int label = 0;
        for (std::size_t i = 0; i < kind_.size(); ++i) {
            if (kind_[i] != Kind::junction || cluster_[i] >= 0) continue;
            std::vector<std::size_t> stack{i};
            cluster_[i] = label;
            while (!stack.empty()) {
                const std::size_t p = stack.back();
                stack.pop_back();
                for (auto off : g_.offsets()) {
                    const std::size_t q = p + off;
                    if (kind_[q] == Kind::junction && cluster_[q] < 0) {
                        cluster_[q] = label;
                        stack.push_back(q);
                    }
                }
            }
            ++label;
        }
    }

    // Follow the skeleton from node `start` through neighbour `next` until the
    // next node or a dead end.
    PixelLine walk(std::size_t start, std::size_t next) {
        PixelLine line;
        line.first = kind_[start];
        line.pixels = {start, next};
        if (kind_[next] == Kind::junction || kind_[next] == Kind::end) {
            if (kind_[next] == Kind::end) visited_[next] = 1;
            line.last = kind_[next];
            return line;
        }
        visited_[next] = 1;
        const int start_cluster = cluster_[start];
        std::size_t prev = start;
        std::size_t cur = next;
        for (;;) {
            std::size_t stop = 0, step = 0;
            bool have_stop = false, have_step = false;
            for (auto off : ordered_offsets()) {
                const std::size_t q = cur + off;
                if (!g_.on[q] || q == prev) continue;
                if (kind_[q] == Kind::junction) {
                    const bool own = start_cluster >= 0 && cluster_[q] == start_cluster;
                    if (own && line.pixels.size() <= 3) continue;
                    if (!have_stop) stop = q, have_stop = true;
                } else if (!visited_[q]) {
                    if (kind_[q] == Kind::end && !have_stop) {
                        stop = q, have_stop = true;
                    } else if (!have_step) {
                        step = q, have_step = true;
                    }
                }
            }
            if (have_stop) {
                if (kind_[stop] != Kind::junction) visited_[stop] = 1;
                line.pixels.push_back(stop);
                line.last = kind_[stop];
                return line;
            }
            if (!have_step) {
                line.last = Kind::path;
                return line;
            }
            visited_[step] = 1;
            line.pixels.push_back(step);
            prev = cur;
            cur = step;
        }
    }

    PixelLine walk_cycle(std::size_t start) {
        PixelLine line;
        visited_[start] = 1;
        line.pixels = {start};
        std::size_t cur = start;
        for (;;) {
            bool moved = false;
            for (auto off : ordered_offsets()) {
                const std::size_t q = cur + off;
                if (!g_.on[q] || visited_[q] || kind_[q] == Kind::junction) continue;
                visited_[q] = 1;
                line.pixels.push_back(q);
                cur = q;
                moved = true;
                break;
            }
            if (!moved) break;
        }
        if (line.pixels.size() > 2) {
            for (auto off : g_.offsets())
                if (cur + off == start) line.closed = true;
        }
        return line;
    }

    const PaddedGrid& g_;
    std::vector<Kind> kind_;
    std::vector<std::uint8_t> visited_;
    std::vector<int> cluster_;
};

double pixel_line_length(const PaddedGrid& g, const PixelLine& line) {
    double len = 0.0;
    for (std::size_t k = 1; k < line.pixels.size(); ++k) {
        const auto dr = g.row_of(line.pixels[k]) - g.row_of(line.pixels[k - 1]);
        const auto dc = g.col_of(line.pixels[k]) - g.col_of(line.pixels[k - 1]);
        len += std::hypot(static_cast<double>(dr), static_cast<double>(dc));
    }
    return len;
}

}  // namespace

Raster skeletonize(const Raster& image) {
    PaddedGrid g(image);
    const auto offs = g.offsets();
    std::vector<std::size_t> doomed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int pass = 0; pass < 2; ++pass) {
            doomed.clear();
            for (Eigen::Index r = 0; r < g.rows; ++r) {
                for (Eigen::Index c = 0; c < g.cols; ++c) {
                    const std::size_t i = g.index(r, c);
                    if (!g.on[i]) continue;
                    const int b = neighbour_count(g, i);
                    if (b < 2 || b > 6) continue;
                    if (crossing_number(g, i) != 1) continue;
                    const int p2 = g.on[i + offs[0]], p4 = g.on[i + offs[2]];
                    const int p6 = g.on[i + offs[4]], p8 = g.on[i + offs[6]];
                    if (pass == 0 ? (p2 * p4 * p6 != 0 || p4 * p6 * p8 != 0)
                                  : (p2 * p4 * p8 != 0 || p2 * p6 * p8 != 0))
                        continue;
                    doomed.push_back(i);
                }
            }
            for (auto i : doomed) g.on[i] = 0;
            changed = changed || !doomed.empty();
        }
    }
    Raster out = image;
    for (Eigen::Index r = 0; r < g.rows; ++r)
        for (Eigen::Index c = 0; c < g.cols; ++c) out.ink(r, c) = g.on[g.index(r, c)];
    return out;
}

std::vector<SkeletonPolyline> trace_skeleton(const Raster& skeleton) {
    PaddedGrid g(skeleton);
    const double spur_px = kSpurLength * skeleton.resolution;

    std::vector<PixelLine> lines;
    std::vector<int> clusters;
    for (int round = 0; round < 8; ++round) {
        Tracer tracer(g);
        lines = tracer.run();
        clusters.assign(g.on.size(), -1);
        for (std::size_t i = 0; i < g.on.size(); ++i) clusters[i] = tracer.cluster(i);
        bool pruned = false;
        for (const auto& line : lines) {
            const bool spur = (line.first == Kind::end && line.last == Kind::junction) ||
                              (line.first == Kind::junction && line.last == Kind::end);
            if (!spur || pixel_line_length(g, line) >= spur_px) continue;
            for (auto p : line.pixels)
                if (tracer.kind(p) != Kind::junction) g.on[p] = 0;
            pruned = true;
        }
        if (!pruned) break;
    }

    auto final_clusters = [&](std::size_t p) { return clusters[p]; };
    std::vector<SkeletonPolyline> out;
    out.reserve(lines.size());
    for (const auto& line : lines) {
        SkeletonPolyline pl;
        pl.closed = line.closed;
        if (line.first == Kind::junction) pl.start_junction = final_clusters(line.pixels.front());
        if (line.last == Kind::junction) pl.end_junction = final_clusters(line.pixels.back());
        for (auto p : line.pixels) {
            const double x = skeleton.top_left.x() + (static_cast<double>(g.col_of(p)) + 0.5) / skeleton.resolution;
            const double y = skeleton.top_left.y() - (static_cast<double>(g.row_of(p)) + 0.5) / skeleton.resolution;
            pl.points.emplace_back(x, y);
        }
        out.push_back(std::move(pl));
    }
    return out;
}

namespace {

// Point at arc length `s` along the polyline (wrapping when closed).
Point point_at(const SkeletonPolyline& line, const std::vector<double>& arc, double s) {
    const double total = arc.back();
    const auto& pts = line.points;
    if (line.closed) {
        const double loop = total + (pts.front() - pts.back()).norm();
        s = std::fmod(s, loop);
        if (s < 0.0) s += loop;
        if (s > total) {
            const double f = (s - total) / (loop - total);
            return pts.back() + f * (pts.front() - pts.back());
        }
    }
    s = std::clamp(s, 0.0, total);
    const auto it = std::upper_bound(arc.begin(), arc.end(), s);
    const auto k = static_cast<std::size_t>(std::max<std::ptrdiff_t>(1, it - arc.begin()));
    if (k >= pts.size()) return pts.back();
    const double seg = arc[k] - arc[k - 1];
    const double f = seg > 0.0 ? (s - arc[k - 1]) / seg : 0.0;
    return pts[k - 1] + f * (pts[k] - pts[k - 1]);
}

std::vector<double> arc_lengths(const SkeletonPolyline& line) {
    std::vector<double> arc(line.points.size(), 0.0);
    for (std::size_t k = 1; k < line.points.size(); ++k)
        arc[k] = arc[k - 1] + (line.points[k] - line.points[k - 1]).norm();
    return arc;
}

double turning_degrees(const Point& a, const Point& p, const Point& b) {
    const Point u = p - a;
    const Point v = b - p;
    const double nu = u.norm(), nv = v.norm();
    if (nu == 0.0 || nv == 0.0) return 0.0;
    const double c = std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
    return std::acos(c) * 180.0 / std::numbers::pi;
}

// Number of separate runs above `threshold`, treating the sequence as cyclic
// when `closed`.
std::size_t count_runs_above(const std::vector<double>& k, double threshold, bool closed) {
    std::size_t runs = 0;
    bool inside = false;
    for (double v : k) {
        const bool above = !std::isnan(v) && v > threshold;
        if (above && !inside) ++runs;
        inside = above;
    }
    if (closed && runs > 1 && !k.empty()) {
        const bool first = !std::isnan(k.front()) && k.front() > threshold;
        const bool last = !std::isnan(k.back()) && k.back() > threshold;
        if (first && last) --runs;
    }
    return runs;
}

}  // namespace

std::vector<double> polyline_curvature(const SkeletonPolyline& line, double window) {
    const auto n = line.points.size();
    std::vector<double> kappa(n, std::numeric_limits<double>::quiet_NaN());
    if (n < 3) return kappa;
    const auto arc = arc_lengths(line);
    const double total = arc.back();
    for (std::size_t i = 0; i < n; ++i) {
        const double s = arc[i];
        if (!line.closed && (s < window || s > total - window)) continue;
        const Point a = point_at(line, arc, s - window);
        const Point b = point_at(line, arc, s + window);
        kappa[i] = turning_degrees(a, line.points[i], b) / window;
    }
    return kappa;
}

namespace {

// Unit direction in which a polyline leaves its start (or end), measured to
// the point kCurvatureWindow along it or its midpoint if shorter.
Point leaving_direction(const SkeletonPolyline& line, const std::vector<double>& arc, bool at_start) {
    const double total = arc.back();
    const double reach = std::min(kCurvatureWindow, 0.5 * total);
    const Point from = at_start ? line.points.front() : line.points.back();
    const Point to = point_at(line, arc, at_start ? reach : total - reach);
    const Point d = to - from;
    const double n = d.norm();
    return n > 0.0 ? Point(d / n) : Point::Zero();
}

struct DisjointSet {
    std::vector<std::size_t> parent;
    explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

std::size_t estimate_static_strokes(const Raster& image) {
    if (image.empty() || image.ink_count() == 0) return 0;
    const auto lines = trace_skeleton(skeletonize(image));

    std::size_t strokes = 0;
    for (const auto& line : lines) {
        const auto kappa = polyline_curvature(line);
        const std::size_t cuts = count_runs_above(kappa, kStrokeSplitCurvature, line.closed);
        strokes += line.closed ? std::max<std::size_t>(cuts, 1) : cuts + 1;
    }

    // branch ends grouped by junction
    struct End {
        std::size_t line;
        Point dir;
    };
    std::map<int, std::vector<End>> junctions;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const auto& line = lines[k];
        if (line.points.size() < 2) continue;
        const auto arc = arc_lengths(line);
        if (line.start_junction >= 0)
            junctions[line.start_junction].push_back({k, leaving_direction(line, arc, true)});
        if (line.end_junction >= 0)
            junctions[line.end_junction].push_back({k, leaving_direction(line, arc, false)});
    }

    // at each junction pair the branches that pass straightest through it
    DisjointSet joined(lines.size());
    for (auto& [id, ends] : junctions) {
        struct Pair {
            double bend;
            std::size_t a, b;
        };
        std::vector<Pair> pairs;
        for (std::size_t a = 0; a < ends.size(); ++a) {
            for (std::size_t b = a + 1; b < ends.size(); ++b) {
                const double c = std::clamp(-ends[a].dir.dot(ends[b].dir), -1.0, 1.0);
                const double bend = std::acos(c) * 180.0 / std::numbers::pi;
                if (bend < kContinuationAngle) pairs.push_back({bend, a, b});
            }
        }
        std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.bend < y.bend; });
        std::vector<bool> used(ends.size(), false);
        for (const auto& p : pairs) {
            if (used[p.a] || used[p.b]) continue;
            used[p.a] = used[p.b] = true;
            if (joined.unite(ends[p.a].line, ends[p.b].line)) --strokes;
        }
    }
    return strokes;
}

}  // namespace scriptogen
