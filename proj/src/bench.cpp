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

#include "entc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "entc/codec.hpp"
#include "entc/image_io.hpp"

namespace entc {

const char* to_string(ImageKind kind) {
  switch (kind) {
    case ImageKind::gradient: return "gradient";
    case ImageKind::noise: return "noise";
    case ImageKind::natural_mix: return "natural_mix";
  }
  return "?";
}

Rational compression_ratio(std::uint64_t original_bits,
                           std::uint64_t compressed_bits) {
  if (compressed_bits == 0)
    throw Error(Errc::division_by_zero, "compressed size is zero bits");
  return Rational(original_bits, compressed_bits);
}

namespace {

int pct_trunc_toward_zero(double arithmetic, double huffman) {
  if (arithmetic == 0) return 0;
  return static_cast<int>((arithmetic - huffman) / arithmetic * 100.0);
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0;
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

double mean(const std::vector<double>& values) {
  if (values.empty()) return 0;
  double sum = 0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

// Raw engine draws keep the construction identical across standard
// libraries (mt19937 output is pinned by the standard; distributions
// are not).
double unit_interval(std::mt19937& gen) {
  return static_cast<double>(gen() >> 8) / 16777216.0;
}

struct BenchImage {
  std::string id;
  ImagePlane plane;
};

}  // namespace

ComparisonRow compare_records(const BenchRecord& huffman,
                              const BenchRecord& arithmetic) {
  if (huffman.image_id != arithmetic.image_id || huffman.size != arithmetic.size)
    throw Error(Errc::shape_error, "records describe different images");

  ComparisonRow row;
  row.image_id = huffman.image_id;
  row.size = huffman.size;
  row.huffman_ratio = huffman.compression_ratio;
  row.arithmetic_ratio = arithmetic.compression_ratio;
  row.huffman_time = huffman.time_median_s;
  row.arithmetic_time = arithmetic.time_median_s;
  row.compression_pct =
      pct_trunc_toward_zero(arithmetic.compression_ratio, huffman.compression_ratio);
  row.time_pct =
      pct_trunc_toward_zero(arithmetic.time_median_s, huffman.time_median_s);
  return row;
}

ImagePlane generate_test_image(ImageKind kind, std::uint32_t size,
                               std::uint64_t seed) {
  if (size < 8)
    throw Error(Errc::bad_config, "test images must be at least 8x8");

  ImagePlane plane{size, size,
                   std::vector<std::uint8_t>(static_cast<std::size_t>(size) * size)};
  std::mt19937 gen(static_cast<std::uint32_t>(seed ^ (seed >> 32)));

  switch (kind) {
    case ImageKind::gradient: {
      for (std::uint32_t r = 0; r < size; ++r) {
        const std::uint8_t v = static_cast<std::uint8_t>(
            std::lround(255.0 * r / (size - 1)));
        for (std::uint32_t c = 0; c < size; ++c) plane.at(r, c) = v;
      }
      break;
    }
    case ImageKind::noise: {
      for (auto& s : plane.samples) s = static_cast<std::uint8_t>(gen() & 0xFF);
      break;
    }
    case ImageKind::natural_mix: {
      const double tau = 2.0 * std::numbers::pi;
      const double f1 = 1 + gen() % 3;
      const double f2 = 1 + gen() % 3;
      const double f3 = 1 + gen() % 4;
      const double p1 = unit_interval(gen) * tau;
      const double p2 = unit_interval(gen) * tau;
      const double p3 = unit_interval(gen) * tau;
      const double a1 = 50.0 + unit_interval(gen) * 30.0;
      const double a2 = 20.0 + unit_interval(gen) * 20.0;
      for (std::uint32_t r = 0; r < size; ++r) {
        for (std::uint32_t c = 0; c < size; ++c) {
          const double field =
              a1 * std::sin(tau * f1 * r / size + p1) *
                  std::cos(tau * f2 * c / size + p2) +
              a2 * std::sin(tau * f3 * (r + c) / static_cast<double>(size) + p3);
          const double noise = static_cast<double>(gen() % 9) - 4.0;
          const long v = std::lround(128.0 + field + noise);
          plane.at(r, c) = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
        }
      }
      break;
    }
  }
  return plane;
}

BenchResult run_benchmark(const BenchConfig& config) {
  if (config.repetitions < 1)
    throw Error(Errc::bad_config, "repetitions must be at least 1");
  for (std::uint32_t size : config.sizes)
    if (size == 0) throw Error(Errc::bad_config, "sizes must be positive");

  std::vector<BenchImage> images;
  if (!config.image_files.empty()) {
    for (const std::string& path : config.image_files) {
      const auto bytes = read_file(path);
      ImagePlane plane = parse_pgm(bytes);
      std::string id = path;
      if (const auto slash = id.find_last_of('/'); slash != std::string::npos)
        id = id.substr(slash + 1);
      images.push_back(BenchImage{std::move(id), std::move(plane)});
    }
  } else {
    for (std::uint32_t size : config.sizes) {
      std::ostringstream id;
      id << to_string(config.synthetic_kind) << '-' << size << "-s" << config.seed;
      images.push_back(BenchImage{
          id.str(), generate_test_image(config.synthetic_kind, size, config.seed)});
    }
  }

  const QuantTable qtable = default_quant_table(config.quality);
  BenchResult result;

  for (const BenchImage& image : images) {
    const std::uint32_t size = image.plane.width;
    const std::uint64_t original_bits =
        static_cast<std::uint64_t>(image.plane.width) * image.plane.height * 8;

    // The transform chain runs once per image; the timed unit is the codec
    // path over the prepared symbol vector (counting, model or tree
    // construction, encoding, container assembly).
    std::vector<Symbol> symbols;
    if (config.source == Source::raw) {
      symbols.assign(image.plane.samples.begin(), image.plane.samples.end());
    } else {
      symbols = pipeline_symbols(image.plane, qtable);
    }

    auto encode_once = [&](Codec codec) {
      if (config.source == Source::raw)
        return encode_raw_container(symbols, codec, image.plane.width,
                                    image.plane.height);
      return encode_pipeline_container(symbols, qtable, codec, image.plane.width,
                                       image.plane.height);
    };

    BenchRecord per_codec[2];
    for (Codec codec : {Codec::huffman, Codec::arithmetic}) {
      std::vector<std::uint8_t> warmup = encode_once(codec);
      const std::uint64_t compressed_bits = warmup.size() * 8ull;

      BenchRecord record;
      record.image_id = image.id;
      record.size = size;
      record.codec = codec;
      record.compression_ratio = static_cast<double>(
          compression_ratio(original_bits, compressed_bits));
      record.times_s.reserve(config.repetitions);

      std::size_t sink = 0;
      for (std::uint32_t rep = 0; rep < config.repetitions; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<std::uint8_t> bytes = encode_once(codec);
        const auto t1 = std::chrono::steady_clock::now();
        sink += bytes.size();
        record.times_s.push_back(std::chrono::duration<double>(t1 - t0).count());
      }
      if (sink != static_cast<std::size_t>(config.repetitions) * warmup.size())
        throw Error(Errc::bad_config, "non-deterministic encode detected");

      record.time_median_s = median(record.times_s);
      record.time_mean_s = mean(record.times_s);
      per_codec[static_cast<int>(codec)] = record;
      result.records.push_back(std::move(record));
    }
    result.rows.push_back(compare_records(per_codec[0], per_codec[1]));
  }
  return result;
}

std::string to_csv(const BenchResult& result) {
  std::ostringstream out;
  out << "size,image_id,codec,ratio,time_median_s,time_mean_s,"
         "compression_pct,time_pct\n";
  out.precision(9);
  for (const BenchRecord& record : result.records) {
    const ComparisonRow* row = nullptr;
    for (const ComparisonRow& r : result.rows)
      if (r.image_id == record.image_id && r.size == record.size) row = &r;
    out << record.size << ',' << record.image_id << ','
        << to_string(record.codec) << ',' << record.compression_ratio << ','
        << record.time_median_s << ',' << record.time_mean_s << ',';
    if (row)
      out << row->compression_pct << ',' << row->time_pct;
    else
      out << ",";
    out << '\n';
  }
  return out.str();
}

}  // namespace entc
