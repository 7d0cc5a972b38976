// Copyright 2026 the entc authors
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

#include "entc/image_io.hpp"

#include <cstdio>
#include <fstream>

namespace entc {

namespace {

class NetpbmHeaderParser {
 public:
  explicit NetpbmHeaderParser(std::span<const std::uint8_t> bytes)
      : bytes_(bytes) {}

  // Reads the two magic characters verbatim.
  std::string magic() {
    if (bytes_.size() < 2)
      throw Error(Errc::truncated_file, "file too short for a Netpbm header");
    std::string m{static_cast<char>(bytes_[0]), static_cast<char>(bytes_[1])};
    pos_ = 2;
    return m;
  }

  // Next decimal token, skipping whitespace and '#' comments.
  std::uint64_t number() {
    skip_separators();
    if (pos_ >= bytes_.size() || !is_digit(bytes_[pos_]))
      throw Error(Errc::truncated_file, "missing numeric header field");
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && is_digit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 0xFFFFFFFFull)
        throw Error(Errc::unsupported_format, "header field out of range");
      ++pos_;
    }
    return value;
  }

  // Raster bytes start after exactly one whitespace character.
  std::span<const std::uint8_t> raster() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_]))
      throw Error(Errc::truncated_file, "missing raster separator");
    ++pos_;
    return bytes_.subspan(pos_);
  }

 private:
  static bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }
  static bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }

  void skip_separators() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct NetpbmImage {
  std::uint32_t width;
  std::uint32_t height;
  std::span<const std::uint8_t> raster;
};

NetpbmImage parse_netpbm(std::span<const std::uint8_t> bytes,
                         const char* expected_magic, std::size_t channels) {
  NetpbmHeaderParser parser(bytes);
  const std::string magic = parser.magic();
  if (magic != expected_magic)
    throw Error(Errc::unsupported_format,
                "expected " + std::string(expected_magic) + ", got '" + magic + "'");
  const std::uint64_t width = parser.number();
  const std::uint64_t height = parser.number();
  const std::uint64_t maxval = parser.number();
  if (width == 0 || height == 0)
    throw Error(Errc::unsupported_format, "zero image dimension");
  if (width > 65536 || height > 65536)
    throw Error(Errc::unsupported_format, "image dimension too large");
  if (maxval != 255)
    throw Error(Errc::unsupported_depth,
                "only maxval 255 is supported, got " + std::to_string(maxval));
  auto raster = parser.raster();
  const std::uint64_t expected = width * height * channels;
  if (raster.size() < expected)
    throw Error(Errc::truncated_file, "raster shorter than the header claims");
  return NetpbmImage{static_cast<std::uint32_t>(width),
                     static_cast<std::uint32_t>(height),
                     raster.first(static_cast<std::size_t>(expected))};
}

}  // namespace

ImagePlane parse_pgm(std::span<const std::uint8_t> bytes) {
  const NetpbmImage img = parse_netpbm(bytes, "P5", 1);
  return ImagePlane{img.width, img.height,
                    std::vector<std::uint8_t>(img.raster.begin(), img.raster.end())};
}

std::array<ImagePlane, 3> parse_ppm(std::span<const std::uint8_t> bytes) {
  const NetpbmImage img = parse_netpbm(bytes, "P6", 3);
  const std::size_t pixels = static_cast<std::size_t>(img.width) * img.height;
  std::array<ImagePlane, 3> planes;
  for (auto& p : planes) {
    p.width = img.width;
    p.height = img.height;
    p.samples.resize(pixels);
  }
  for (std::size_t i = 0; i < pixels; ++i) {
    planes[0].samples[i] = img.raster[3 * i];
    planes[1].samples[i] = img.raster[3 * i + 1];
    planes[2].samples[i] = img.raster[3 * i + 2];
  }
  return planes;
}

std::vector<std::uint8_t> write_pgm(const ImagePlane& plane) {
  if (plane.width == 0 || plane.height == 0)
    throw Error(Errc::shape_error, "cannot write an empty plane");
  char header[64];
  const int n = std::snprintf(header, sizeof header, "P5\n%u %u\n255\n",
                              plane.width, plane.height);
  std::vector<std::uint8_t> out(header, header + n);
  out.insert(out.end(), plane.samples.begin(), plane.samples.end());
  return out;
}

std::vector<std::uint8_t> write_ppm(const std::array<ImagePlane, 3>& rgb) {
  if (rgb[0].width != rgb[1].width || rgb[0].width != rgb[2].width ||
      rgb[0].height != rgb[1].height || rgb[0].height != rgb[2].height)
    throw Error(Errc::shape_error, "channel planes differ in size");
  if (rgb[0].width == 0 || rgb[0].height == 0)
    throw Error(Errc::shape_error, "cannot write an empty image");
  char header[64];
  const int n = std::snprintf(header, sizeof header, "P6\n%u %u\n255\n",
                              rgb[0].width, rgb[0].height);
  std::vector<std::uint8_t> out(header, header + n);
  const std::size_t pixels = rgb[0].samples.size();
  out.reserve(out.size() + 3 * pixels);
  for (std::size_t i = 0; i < pixels; ++i) {
    out.push_back(rgb[0].samples[i]);
    out.push_back(rgb[1].samples[i]);
    out.push_back(rgb[2].samples[i]);
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::io_error, "cannot read " + path);
  return bytes;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::io_error, "cannot write " + path);
}

}  // namespace entc
