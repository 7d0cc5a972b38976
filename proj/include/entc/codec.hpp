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
#include <span>
#include <vector>

#include "entc/container.hpp"
#include "entc/pipeline.hpp"
#include "entc/symbol_model.hpp"

namespace entc {

struct EncodedStream {
  FrequencyTable table;
  BitSequence bits;
};

// Two-pass static coding: counts the stream, builds the model or tree, and
// encodes with the selected backend.
EncodedStream entropy_encode(std::span<const Symbol> symbols, Codec codec);

std::vector<Symbol> entropy_decode(const BitSequence& bits,
                                   const FrequencyTable& table, Codec codec,
                                   std::uint64_t symbol_count);

// Raw-source container: every pixel is one symbol.
std::vector<std::uint8_t> encode_raw_container(std::span<const Symbol> symbols,
                                               Codec codec, std::uint32_t width,
                                               std::uint32_t height);

std::vector<std::uint8_t> compress_raw(const ImagePlane& plane, Codec codec);

// Front door used by the CLI: dispatches on source kind. quality selects
// the pipeline quantizer table and is ignored for raw.
std::vector<std::uint8_t> compress_image(const ImagePlane& plane, Codec codec,
                                         Source source, int quality);
ImagePlane decompress_image(std::span<const std::uint8_t> bytes);

}  // namespace entc
