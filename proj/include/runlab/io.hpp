#pragma once

#include <cstdint>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "runlab/analysis.hpp"
#include "runlab/image.hpp"

namespace runlab {

/// Decode failure carrying the byte offset of the offending input.
class PbmParseError : public std::runtime_error {
public:
    PbmParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}

    std::size_t byte_offset;
};

namespace io_detail {

// Image dimensions are capped so width*height fits comfortably in 32 bits;
// anything bigger is reported as a dimension overflow rather than an
// allocation failure deep inside the decoder.
inline constexpr std::int64_t max_pixels = std::int64_t{1} << 31;

struct Cursor {
    std::string_view data;
    std::size_t pos = 0;

    bool eof() const { return pos >= data.size(); }
    std::uint8_t peek() const { return static_cast<std::uint8_t>(data[pos]); }
};

inline bool is_space(std::uint8_t ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' ||
           ch == '\v' || ch == '\f';
}

inline void skip_space_and_comments(Cursor& c) {
    while (!c.eof()) {
        if (is_space(c.peek())) {
            ++c.pos;
        } else if (c.peek() == '#') {
            while (!c.eof() && c.peek() != '\n') ++c.pos;
        } else {
            break;
        }
    }
}

inline std::int64_t parse_dimension(Cursor& c, const char* what) {
    skip_space_and_comments(c);
    if (c.eof() || c.peek() < '0' || c.peek() > '9')
        throw PbmParseError(std::string("malformed header: expected ") + what,
                            c.pos);
    std::int64_t value = 0;
    while (!c.eof() && c.peek() >= '0' && c.peek() <= '9') {
        value = value * 10 + (c.peek() - '0');
        if (value > max_pixels)
            throw PbmParseError(std::string(what) + " overflows supported range",
                                c.pos);
        ++c.pos;
    }
    return value;
}

}  // namespace io_detail

/// Decodes a NetPBM bitmap, ASCII (P1) or packed (P4). Comments are allowed
/// anywhere whitespace is. PBM's 1 = black maps to foreground = 1. Packed
/// rows are padded to whole bytes; pad bits are ignored.
inline BinaryImage read_pbm(std::string_view bytes) {
    io_detail::Cursor c{bytes};
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw PbmParseError("not a NetPBM file", 0);
    const char kind = bytes[1];
    if (kind != '1' && kind != '4')
        throw PbmParseError(std::string("unsupported NetPBM format P") + kind,
                            1);
    c.pos = 2;

    const std::int64_t w = io_detail::parse_dimension(c, "width");
    const std::int64_t h = io_detail::parse_dimension(c, "height");
    if (w < 1 || h < 1)
        throw PbmParseError("image dimensions must be at least 1x1", c.pos);
    if (w * h > io_detail::max_pixels)
        throw PbmParseError("pixel count overflows supported range", c.pos);

    BinaryImage img(static_cast<std::int32_t>(w), static_cast<std::int32_t>(h));
    if (kind == '1') {
        for (std::int64_t i = 0; i < w * h; ++i) {
            io_detail::skip_space_and_comments(c);
            if (c.eof()) throw PbmParseError("truncated P1 raster", c.pos);
            const char ch = static_cast<char>(c.peek());
            if (ch != '0' && ch != '1')
                throw PbmParseError("invalid P1 pixel character", c.pos);
            img.pixels[i] = static_cast<std::uint8_t>(ch - '0');
            ++c.pos;
        }
    } else {
        if (c.eof() || !io_detail::is_space(c.peek()))
            throw PbmParseError("malformed header: expected whitespace before raster",
                                c.pos);
        ++c.pos;
        const std::size_t row_bytes = (static_cast<std::size_t>(w) + 7) / 8;
        for (std::int64_t r = 0; r < h; ++r) {
            if (bytes.size() - c.pos < row_bytes)
                throw PbmParseError("truncated P4 raster", bytes.size());
            for (std::int64_t j = 0; j < w; ++j) {
                const std::uint8_t byte =
                    static_cast<std::uint8_t>(bytes[c.pos + j / 8]);
                img.pixels[r * w + j] = (byte >> (7 - j % 8)) & 1;
            }
            c.pos += row_bytes;
        }
    }
    return img;
}

enum class PbmFormat { p1, p4 };

/// Encodes a binary image as PBM. P1 lines are wrapped to stay within the
/// format's 70-character limit.
inline std::string write_pbm(const BinaryImage& img,
                             PbmFormat format = PbmFormat::p4) {
    std::string out = format == PbmFormat::p1 ? "P1\n" : "P4\n";
    out += std::to_string(img.width) + " " + std::to_string(img.height) + "\n";
    if (format == PbmFormat::p1) {
        std::int32_t line = 0;
        for (std::int64_t i = 0; i < img.pixel_count(); ++i) {
            out += static_cast<char>('0' + img.pixels[i]);
            if (++line == 64 || (i + 1) % img.width == 0) {
                out += '\n';
                line = 0;
            }
        }
    } else {
        const std::size_t row_bytes = (static_cast<std::size_t>(img.width) + 7) / 8;
        for (std::int32_t r = 0; r < img.height; ++r) {
            std::string row(row_bytes, '\0');
            for (std::int32_t j = 0; j < img.width; ++j)
                if (img(r, j))
                    row[j / 8] |= static_cast<char>(0x80 >> (j % 8));
            out += row;
        }
    }
    return out;
}

enum class LabelFormat { pgm16, csv };

/// Encodes a label image either as 16-bit big-endian PGM (labels must fit
/// in 65535; densify first or fall back to CSV) or as CSV with one line per
/// image row.
inline std::string write_label_image(const LabelImage& li, LabelFormat format) {
    std::string out;
    if (format == LabelFormat::pgm16) {
        for (const label_t l : li.labels)
            if (l > 65535)
                throw std::overflow_error(
                    "write_label_image: label exceeds 16-bit PGM range; use csv");
        out = "P5\n" + std::to_string(li.width) + " " +
              std::to_string(li.height) + "\n65535\n";
        out.reserve(out.size() + li.labels.size() * 2);
        for (const label_t l : li.labels) {
            out += static_cast<char>(l >> 8);
            out += static_cast<char>(l & 0xff);
        }
    } else {
        for (std::int32_t r = 0; r < li.height; ++r) {
            for (std::int32_t j = 0; j < li.width; ++j) {
                if (j) out += ',';
                out += std::to_string(li(r, j));
            }
            out += '\n';
        }
    }
    return out;
}

/// One CSV row per component, ascending by root. Bounding-box cells are
/// left empty for pixel-less components (an all-foreground image leaves the
/// exterior empty); the parent cell is empty for the exterior. With
/// `with_dense`, a trailing column carries the densified label, which is
/// the record's position.
inline std::string write_features_csv(std::span<const ComponentRecord> records,
                                      bool with_dense = false) {
    std::string out = "root,parity,parent,s,sx,sy,rmin,rmax,cmin,cmax";
    if (with_dense) out += ",dense";
    out += '\n';
    for (std::size_t i = 0; i < records.size(); ++i) {
        const ComponentRecord& rec = records[i];
        out += std::to_string(rec.root);
        out += rec.foreground ? ",FG," : ",BG,";
        if (rec.parent_root != no_label) out += std::to_string(rec.parent_root);
        const FeatureAccumulator& f = rec.features;
        out += ',' + std::to_string(f.s) + ',' + std::to_string(f.sx) + ',' +
               std::to_string(f.sy);
        if (f.empty()) {
            out += ",,,,";
        } else {
            out += ',' + std::to_string(f.row_min) + ',' +
                   std::to_string(f.row_max) + ',' + std::to_string(f.col_min) +
                   ',' + std::to_string(f.col_max);
        }
        if (with_dense) out += ',' + std::to_string(i);
        out += '\n';
    }
    return out;
}

enum class TreeFormat { json, dot };

namespace io_detail {

inline void tree_json_node(const ComponentTree& tree, std::size_t i,
                           std::string& out) {
    const ComponentRecord& rec = tree.nodes[i];
    const FeatureAccumulator& f = rec.features;
    out += "{\"label\":" + std::to_string(rec.root);
    out += std::string(",\"parity\":\"") + (rec.foreground ? "FG" : "BG") + "\"";
    out += ",\"s\":" + std::to_string(f.s);
    out += ",\"sx\":" + std::to_string(f.sx);
    out += ",\"sy\":" + std::to_string(f.sy);
    if (f.empty()) {
        out += ",\"bbox\":null";
    } else {
        out += ",\"bbox\":[" + std::to_string(f.row_min) + ',' +
               std::to_string(f.row_max) + ',' + std::to_string(f.col_min) +
               ',' + std::to_string(f.col_max) + ']';
    }
    out += ",\"children\":[";
    bool first = true;
    for (const std::size_t child : tree.children[i]) {
        if (!first) out += ',';
        first = false;
        tree_json_node(tree, child, out);
    }
    out += "]}";
}

}  // namespace io_detail

/// Serializes the component tree, either as nested JSON or as a DOT digraph
/// with one `child -> parent` edge per surrounding relation. Deterministic:
/// nodes and edges appear in ascending root order.
inline std::string write_tree(const ComponentTree& tree, TreeFormat format) {
    std::string out;
    if (format == TreeFormat::json) {
        io_detail::tree_json_node(tree, 0, out);
        out += '\n';
    } else {
        out = "digraph components {\n";
        for (const ComponentRecord& rec : tree.nodes)
            out += "  " + std::to_string(rec.root) + ";\n";
        for (const ComponentRecord& rec : tree.nodes)
            if (rec.parent_root != no_label)
                out += "  " + std::to_string(rec.root) + " -> " +
                       std::to_string(rec.parent_root) + ";\n";
        out += "}\n";
    }
    return out;
}

/// Slurps and decodes a PBM file.
inline BinaryImage read_pbm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    return read_pbm(bytes);
}

/// Writes bytes to a file, replacing any previous content.
inline void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace runlab
