// Copyright 2026 The diffuse Authors
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

#include "diffuse/error.hpp"

namespace diffuse {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kInvalidSize: return "InvalidSize";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kIntegerOverflow: return "IntegerOverflow";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kNotAStar: return "NotAStar";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kBoundInapplicable: return "BoundInapplicable";
    case ErrorCode::kWindowTooLarge: return "WindowTooLarge";
    case ErrorCode::kEmptyWindow: return "EmptyWindow";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace diffuse
