// Copyright 2026 The lmono Authors
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

#include "lmono/error.hpp"

namespace lmono {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "DomainError";
    case ErrorCode::pole: return "PoleError";
    case ErrorCode::precision: return "PrecisionError";
    case ErrorCode::phase: return "PhaseError";
    case ErrorCode::contour: return "ContourError";
    case ErrorCode::empty_list: return "EmptyListError";
    case ErrorCode::tail: return "TailError";
    case ErrorCode::format: return "FormatError";
    case ErrorCode::convergence: return "ConvergenceError";
    case ErrorCode::overflow: return "OverflowError";
    case ErrorCode::tie: return "TieError";
    case ErrorCode::no_findings: return "NoFindingsError";
    case ErrorCode::dominance: return "DominanceError";
    case ErrorCode::search: return "SearchError";
    case ErrorCode::geometry: return "GeometryError";
    case ErrorCode::io: return "IoError";
  }
  return "Error";
}

}  // namespace lmono
