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

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "entc/pipeline.hpp"

namespace entc {

// Binary Netpbm only (P5/P6), maxval 255. Header tokens may be separated by
// any whitespace and '#' comments per the Netpbm convention.
ImagePlane parse_pgm(std::span<const std::uint8_t> bytes);
std::array<ImagePlane, 3> parse_ppm(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> write_pgm(const ImagePlane& plane);
std::vector<std::uint8_t> write_ppm(const std::array<ImagePlane, 3>& rgb);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace entc
