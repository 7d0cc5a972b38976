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

#include <cstdint>
#include <string>
#include <vector>

#include "entc/container.hpp"
#include "entc/pipeline.hpp"
#include "entc/symbol_model.hpp"

namespace entc {

enum class ImageKind { gradient, noise, natural_mix };

const char* to_string(ImageKind kind);

struct BenchConfig {
  std::vector<std::uint32_t> sizes = {128, 256, 512, 1024, 2048};
  std::uint32_t repetitions = 100;
  Source source = Source::raw;
  std::uint64_t seed = 1;
  ImageKind synthetic_kind = ImageKind::natural_mix;
  std::vector<std::string> image_files;  // overrides the synthetic size ladder
  int quality = 50;                      // pipeline-source quantizer quality
};

// One measured (codec, image) cell: x repetitions of the timed encode.
struct BenchRecord {
  std::string image_id;
  std::uint32_t size = 0;
  Codec codec = Codec::huffman;
  double compression_ratio = 0;  // original bits / container bits
  std::vector<double> times_s;
  double time_median_s = 0;
  double time_mean_s = 0;
};

struct ComparisonRow {
  std::string image_id;
  std::uint32_t size = 0;
  double huffman_ratio = 0;
  double arithmetic_ratio = 0;
  double huffman_time = 0;     // median seconds
  double arithmetic_time = 0;  // median seconds
  int compression_pct = 0;
  int time_pct = 0;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<ComparisonRow> rows;
};

// original_bits / compressed_bits as an exact rational.
Rational compression_ratio(std::uint64_t original_bits,
                           std::uint64_t compressed_bits);

// Percentage columns: pct = trunc-toward-zero((A - H) / A * 100), computed
// on the ratio and the median time.
ComparisonRow compare_records(const BenchRecord& huffman,
                              const BenchRecord& arithmetic);

// Deterministic synthetic planes. gradient ramps 0..255 down the rows;
// noise is uniform i.i.d.; natural_mix layers a smooth low-frequency field
// with mild seeded noise, giving the skewed histograms of natural images.
ImagePlane generate_test_image(ImageKind kind, std::uint32_t size,
                               std::uint64_t seed);

// One warmup plus `repetitions` timed encodes per (image, codec) on a
// monotonic clock; the per-image pair yields one ComparisonRow.
BenchResult run_benchmark(const BenchConfig& config);

std::string to_csv(const BenchResult& result);

}  // namespace entc
