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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <vector>

#include <png.h>

#include "scriptogen/errors.hpp"
#include "scriptogen/render.hpp"

namespace scriptogen {

namespace {

constexpr const char* kTrajHeader = "scriptogen-traj v1";

std::string temp_path_for(const std::string& path) { return path + ".partial"; }

}  // namespace

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = temp_path_for(path);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError(path, "cannot open for writing");
        out << contents;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError(path, "write failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError(path, "cannot move temporary file into place");
    }
}

// --- trajectory text -------------------------------------------------------

void write_trajectory(std::ostream& out, const SampledTrajectory& traj) {
    char line[256];
    out << kTrajHeader << '\n';
    std::snprintf(line, sizeof line, "dt %.6f\n", traj.dt);
    out << line;
    out << "samples " << traj.size() << '\n';
    for (Eigen::Index k = 0; k < traj.size(); ++k) {
        std::snprintf(line, sizeof line, "%.6f %.6f %.6f %.6f %.6f %d\n", traj.t(k), traj.x(k),
                      traj.y(k), traj.vx(k), traj.vy(k), traj.pen_down(k) ? 1 : 0);
        out << line;
    }
}

SampledTrajectory read_trajectory(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.substr(0, line.find_last_not_of("\r") + 1) != kTrajHeader)
        throw FormatError(std::string("trajectory file must start with '") + kTrajHeader + "'");

    SampledTrajectory traj;
    std::string key;
    long long n = -1;
    if (!(in >> key >> traj.dt) || key != "dt" || !(traj.dt > 0.0))
        throw FormatError("trajectory file needs a positive 'dt' line");
    if (!(in >> key >> n) || key != "samples" || n < 0)
        throw FormatError("trajectory file needs a 'samples' line");

    traj.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        int pen = 0;
        if (!(in >> traj.t(k) >> traj.x(k) >> traj.y(k) >> traj.vx(k) >> traj.vy(k) >> pen) ||
            (pen != 0 && pen != 1)) {
            throw FormatError("malformed trajectory sample " + std::to_string(k));
        }
        traj.pen_down(k) = pen == 1;
    }
    traj.update_speed();
    return traj;
}

void export_trajectory(const SampledTrajectory& traj, const std::string& path) {
    std::ostringstream out;
    write_trajectory(out, traj);
    write_file_atomic(path, out.str());
}

SampledTrajectory import_trajectory(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open trajectory file");
    return read_trajectory(in);
}

// --- svg -------------------------------------------------------------------

void write_svg(std::ostream& out, const SampledTrajectory& traj, const InkModel& ink) {
    ink.validate();
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
    if (!traj.empty()) {
        const double m = ink.nib_radius;
        x0 = traj.x.minCoeff() - m;
        x1 = traj.x.maxCoeff() + m;
        y0 = traj.y.minCoeff() - m;
        y1 = traj.y.maxCoeff() + m;
    }
    char buf[256];
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.4fmm\" height=\"%.4fmm\" "
                  "viewBox=\"%.4f %.4f %.4f %.4f\">\n",
                  x1 - x0, y1 - y0, x0, -y1, x1 - x0, y1 - y0);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" "
                  "stroke-width=\"%.4f\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n",
                  2.0 * ink.nib_radius);
    out << buf;

    Eigen::Index k = 0;
    while (k < traj.size()) {
        if (!traj.pen_down(k)) {
            ++k;
            continue;
        }
        out << "<polyline points=\"";
        bool first = true;
        for (; k < traj.size() && traj.pen_down(k); ++k) {
            std::snprintf(buf, sizeof buf, "%s%.4f,%.4f", first ? "" : " ", traj.x(k), traj.y(k));
            out << buf;
            first = false;
        }
        out << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
}

void export_svg(const SampledTrajectory& traj, const InkModel& ink, const std::string& path) {
    std::ostringstream out;
    write_svg(out, traj, ink);
    write_file_atomic(path, out.str());
}

// --- png -------------------------------------------------------------------

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngBuffers {
    std::vector<png_byte> data;
    std::vector<png_bytep> rows;
};

}  // namespace

void export_png(const Raster& image, const std::string& path) {
    if (image.empty()) throw DomainError("cannot write an empty raster");
    const auto width = static_cast<png_uint_32>(image.cols());
    const auto height = static_cast<png_uint_32>(image.rows());

    auto buffers = std::make_unique<PngBuffers>();
    buffers->data.resize(static_cast<std::size_t>(width) * height);
    for (png_uint_32 r = 0; r < height; ++r)
        for (png_uint_32 c = 0; c < width; ++c)
            buffers->data[static_cast<std::size_t>(r) * width + c] = image.ink(r, c) ? 0 : 255;
    for (png_uint_32 r = 0; r < height; ++r)
        buffers->rows.push_back(buffers->data.data() + static_cast<std::size_t>(r) * width);

    const std::string tmp = temp_path_for(path);
    FilePtr fp(std::fopen(tmp.c_str(), "wb"));
    if (!fp) throw IoError(path, "cannot open for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw IoError(path, "cannot initialise png writer");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fp.reset();
        std::remove(tmp.c_str());
        throw IoError(path, "png encoding failed");
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, width, height, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    const auto ppm = static_cast<png_uint_32>(std::lround(image.resolution * 1000.0));
    png_set_pHYs(png, info, ppm, ppm, PNG_RESOLUTION_METER);
    png_write_info(png, info);
    png_write_image(png, buffers->rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    if (std::fflush(fp.get()) != 0) {
        fp.reset();
        std::remove(tmp.c_str());
        throw IoError(path, "write failed");
    }
    fp.reset();

    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError(path, "cannot move temporary file into place");
    }
}

Raster import_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError(path, "cannot open png");
    png_byte sig[8];
    if (std::fread(sig, 1, 8, fp.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0)
        throw IoError(path, "not a png file");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError(path, "cannot initialise png reader");
    }
    auto buffers = std::make_unique<PngBuffers>();
    auto result = std::make_unique<Raster>();
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError(path, "png decoding failed");
    }
    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    const int color = png_get_color_type(png, info);
    const int depth = png_get_bit_depth(png, info);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (depth == 16) png_set_strip_16(png);
    if (color == PNG_COLOR_TYPE_RGB || color == PNG_COLOR_TYPE_RGB_ALPHA ||
        color == PNG_COLOR_TYPE_PALETTE)
        png_set_rgb_to_gray_fixed(png, 1, -1, -1);
    if (color & PNG_COLOR_MASK_ALPHA || png_get_valid(png, info, PNG_INFO_tRNS))
        png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const std::size_t stride = png_get_rowbytes(png, info);
    buffers->data.resize(stride * height);
    for (png_uint_32 r = 0; r < height; ++r) buffers->rows.push_back(buffers->data.data() + r * stride);
    png_read_image(png, buffers->rows.data());
    png_read_end(png, nullptr);

    png_uint_32 res_x = 0, res_y = 0;
    int unit = 0;
    const bool have_phys = png_get_pHYs(png, info, &res_x, &res_y, &unit) != 0;
    png_destroy_read_struct(&png, &info, nullptr);

    result->resolution = (have_phys && unit == PNG_RESOLUTION_METER && res_x > 0)
                             ? static_cast<double>(res_x) / 1000.0
                             : kDefaultResolution;
    result->ink.resize(height, width);
    for (png_uint_32 r = 0; r < height; ++r)
        for (png_uint_32 c = 0; c < width; ++c)
            result->ink(r, c) = buffers->data[r * stride + c] < 128 ? 1 : 0;
    return std::move(*result);
}

}  // namespace scriptogen
