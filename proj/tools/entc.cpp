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

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "entc/bench.hpp"
#include "entc/codec.hpp"
#include "entc/image_io.hpp"

namespace {

using namespace entc;

void print_bench_table(const BenchResult& result) {
  std::printf("%-6s %-24s %-10s %10s %14s %14s %8s %8s\n", "size", "image",
              "codec", "ratio", "median_s", "mean_s", "comp%", "time%");
  for (const BenchRecord& record : result.records) {
    const ComparisonRow* row = nullptr;
    for (const ComparisonRow& r : result.rows)
      if (r.image_id == record.image_id && r.size == record.size) row = &r;
    std::printf("%-6u %-24s %-10s %10.4f %14.6f %14.6f %8d %8d\n", record.size,
                record.image_id.c_str(), to_string(record.codec),
                record.compression_ratio, record.time_median_s,
                record.time_mean_s, row ? row->compression_pct : 0,
                row ? row->time_pct : 0);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"entc - Huffman and arithmetic entropy coding toolkit"};
  app.require_subcommand(1);

  const std::map<std::string, Codec> codec_names{{"huffman", Codec::huffman},
                                                 {"arith", Codec::arithmetic}};
  const std::map<std::string, Source> source_names{{"raw", Source::raw},
                                                   {"pipeline", Source::pipeline}};
  const std::map<std::string, ImageKind> kind_names{
      {"gradient", ImageKind::gradient},
      {"noise", ImageKind::noise},
      {"natural_mix", ImageKind::natural_mix}};

  // encode
  auto* encode = app.add_subcommand("encode", "Compress a PGM image");
  Codec enc_codec = Codec::huffman;
  Source enc_source = Source::raw;
  int enc_quality = 50;
  std::string enc_in, enc_out;
  encode->add_option("--codec", enc_codec, "Entropy coder")
      ->transform(CLI::CheckedTransformer(codec_names));
  encode->add_option("--source", enc_source, "Symbol source")
      ->transform(CLI::CheckedTransformer(source_names));
  encode->add_option("--quality", enc_quality, "Pipeline quality 1..100")
      ->check(CLI::Range(1, 100));
  encode->add_option("input", enc_in, "Input .pgm")->required();
  encode->add_option("output", enc_out, "Output .entc")->required();

  // decode
  auto* decode = app.add_subcommand("decode", "Decompress a container");
  std::string dec_in, dec_out;
  decode->add_option("input", dec_in, "Input .entc")->required();
  decode->add_option("output", dec_out, "Output .pgm")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Compare the codecs");
  BenchConfig config;
  std::string csv_path;
  bench->add_option("--sizes", config.sizes, "Synthetic image sizes")
      ->delimiter(',');
  bench->add_option("--reps", config.repetitions, "Timed repetitions")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", config.seed, "Generator seed");
  bench->add_option("--source", config.source, "Symbol source")
      ->transform(CLI::CheckedTransformer(source_names));
  bench->add_option("--kind", config.synthetic_kind, "Synthetic image kind")
      ->transform(CLI::CheckedTransformer(kind_names));
  bench->add_option("--quality", config.quality, "Pipeline quality 1..100")
      ->check(CLI::Range(1, 100));
  bench->add_option("--csv", csv_path, "Write the report to this CSV file");
  bench->add_option("images", config.image_files,
                    "PGM files to benchmark instead of synthetic images");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a synthetic test image");
  ImageKind gen_kind = ImageKind::natural_mix;
  std::uint32_t gen_size = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--kind", gen_kind, "Image kind")
      ->transform(CLI::CheckedTransformer(kind_names));
  gen->add_option("--size", gen_size, "Square dimension (>= 8)")->required();
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("output", gen_out, "Output .pgm")->required();

  CLI11_PARSE(app, argc, argv);

  if (encode->parsed()) {
    const ImagePlane plane = parse_pgm(read_file(enc_in));
    write_file(enc_out, compress_image(plane, enc_codec, enc_source, enc_quality));
    return 0;
  }
  if (decode->parsed()) {
    const ImagePlane plane = decompress_image(read_file(dec_in));
    write_file(dec_out, write_pgm(plane));
    return 0;
  }
  if (bench->parsed()) {
    const BenchResult result = run_benchmark(config);
    print_bench_table(result);
    if (!csv_path.empty()) {
      const std::string csv = to_csv(result);
      write_file(csv_path, std::span<const std::uint8_t>(
                               reinterpret_cast<const std::uint8_t*>(csv.data()),
                               csv.size()));
    }
    return 0;
  }
  if (gen->parsed()) {
    write_file(gen_out, write_pgm(generate_test_image(gen_kind, gen_size, gen_seed)));
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const entc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
