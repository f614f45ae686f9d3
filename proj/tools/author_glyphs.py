#!/usr/bin/env python3
# Copyright 2026 The Scriptogen Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Trace letter outlines onto the hexagonal grid and emit a glyph library.

Each letter is a pen path drawn as a list of parametric pieces in mm. The path
is sampled at NODES equally spaced arc-length positions and every sample is
snapped to its nearest grid node. Run with --plot to get a PNG preview.

    python3 tools/author_glyphs.py > data/glyphs.txt
"""
import argparse
import math
import sys

import numpy as np

COLS, ROWS, PITCH = 12, 23, 1.0
H = PITCH * math.sqrt(3) / 2
# guide rows, bottom to top: lower2 lower1 baseline corpus_top upper2 upper1
GUIDE_ROWS = (0, 5, 6, 16, 17, 22)
NODES = 25

Y_LO = GUIDE_ROWS[1] * H   # lower1: bottom of the letter body
Y_HI = GUIDE_ROWS[4] * H   # upper2: top of the letter body
Y_MID = 0.5 * (Y_LO + Y_HI)
RY = 0.5 * (Y_HI - Y_LO)


def node_xy(i):
    r, c = divmod(i, COLS)
    return np.array([c * PITCH + (0.5 * PITCH if r % 2 else 0.0), r * H])


NODE_XY = np.array([node_xy(i) for i in range(COLS * ROWS)])


def snap(p):
    return int(np.argmin(((NODE_XY - p) ** 2).sum(axis=1)))


def arc(cx, cy, rx, ry, a0, a1, n=400):
    t = np.radians(np.linspace(a0, a1, n))
    return np.stack([cx + rx * np.cos(t), cy + ry * np.sin(t)], axis=1)


def line(p, q, n=100):
    t = np.linspace(0.0, 1.0, n)[:, None]
    return (1 - t) * np.asarray(p, float) + t * np.asarray(q, float)


def chain(*pieces):
    return np.concatenate(pieces, axis=0)


def letters():
    return {
        # bowl counter-clockwise from the upper right, then the stem and tail
        "a": chain(
            arc(4.2, Y_MID, 3.4, RY, 35, 360),
            line((7.6, Y_MID), (7.6, Y_HI)),
            line((7.6, Y_HI), (7.6, Y_LO + 0.8)),
            arc(8.9, Y_LO + 0.8, 1.3, 0.8, 180, 300),
        ),
        # cross-bar left to right, then counter-clockwise round the loop
        "e": chain(
            line((1.0, Y_MID + 0.2), (8.3, Y_MID + 0.2)),
            arc(4.65, Y_MID + 0.2, 3.65, Y_HI - Y_MID - 0.2, 0, 180),
            arc(4.65, Y_MID + 0.2, 3.65, Y_MID + 0.2 - Y_LO, 180, 325),
        ),
        # entry up-stroke, descent to the baseline, exit hook
        "i": chain(
            arc(4.4, Y_LO + 0.4, 4.0, Y_HI - Y_LO - 0.4, 180, 90),
            line((4.4, Y_HI), (4.4, Y_LO + 1.6)),
            arc(6.0, Y_LO + 1.6, 1.6, 1.6, 180, 270),
            line((6.0, Y_LO), (10.6, Y_MID + 1.0)),
        ),
        # closed ellipse from the top with a short overlap
        "o": arc(4.7, Y_MID, 3.9, RY, 100, 100 + 385),
        # down, round the bottom, up, then the stem back to the baseline
        "u": chain(
            line((1.2, Y_HI), (1.2, Y_MID - 1.0)),
            arc(4.2, Y_MID - 1.0, 3.0, Y_MID - 1.0 - Y_LO, 180, 360),
            line((7.2, Y_MID - 1.0), (7.2, Y_HI)),
            line((7.2, Y_HI), (7.2, Y_LO + 0.6)),
            arc(8.4, Y_LO + 0.6, 1.2, 0.6, 180, 290),
        ),
    }


def trace(path, n):
    seg = np.linalg.norm(np.diff(path, axis=0), axis=1)
    s = np.concatenate([[0.0], np.cumsum(seg)])
    targets = np.linspace(0.0, s[-1], n)
    pts = np.stack([np.interp(targets, s, path[:, 0]), np.interp(targets, s, path[:, 1])], axis=1)
    nodes = [snap(p) for p in pts]
    for a, b in zip(nodes, nodes[1:]):
        if a == b:
            raise SystemExit("consecutive samples snap to the same node; enlarge the letter")
    return nodes


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--plot", help="write a preview PNG")
    args = ap.parse_args()

    glyphs = {k: trace(v, NODES) for k, v in letters().items()}
    out = sys.stdout
    out.write("scriptogen-glyphs v1\n")
    out.write("# Lowercase vowels traced on a %dx%d hexagonal grid, pitch %g mm.\n" % (COLS, ROWS, PITCH))
    out.write("# Regenerate with tools/author_glyphs.py.\n")
    out.write("grid %d %d %g 0 0\n" % (COLS, ROWS, PITCH))
    out.write("guides %s\n" % " ".join("%.9f" % (r * H) for r in GUIDE_ROWS))
    for k, nodes in glyphs.items():
        out.write("glyph %s\nnodes %s\nend\n" % (k, " ".join(map(str, nodes))))

    if args.plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        fig, axes = plt.subplots(1, len(glyphs), figsize=(4 * len(glyphs), 6))
        for ax, (k, nodes) in zip(axes, glyphs.items()):
            ax.scatter(NODE_XY[:, 0], NODE_XY[:, 1], s=3, c="0.8")
            for r in GUIDE_ROWS:
                ax.axhline(r * H, lw=0.5, c="tab:blue")
            xy = NODE_XY[nodes]
            ax.plot(xy[:, 0], xy[:, 1], "-o", ms=3)
            ax.plot(*xy[0], "gs")
            for j, p in enumerate(xy):
                ax.annotate(str(j), p, fontsize=6)
            ax.set_aspect("equal")
            ax.set_title(k)
        fig.savefig(args.plot, dpi=80)


if __name__ == "__main__":
    main()
