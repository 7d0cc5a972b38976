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

#include "entc/error.hpp"

namespace entc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::empty_input: return "EmptyInput";
    case Errc::unknown_symbol: return "UnknownSymbol";
    case Errc::out_of_bits: return "OutOfBits";
    case Errc::truncated_stream: return "TruncatedStream";
    case Errc::trailing_garbage: return "TrailingGarbage";
    case Errc::shape_error: return "ShapeError";
    case Errc::bad_container: return "BadContainer";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::unsupported_depth: return "UnsupportedDepth";
    case Errc::truncated_file: return "TruncatedFile";
    case Errc::bad_config: return "BadConfig";
    case Errc::io_error: return "IoError";
    case Errc::division_by_zero: return "DivisionByZero";
  }
  return "UnknownError";
}

}  // namespace entc
