// Copyright 2026 The tfdcs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "tfdcs/errors.hpp"

namespace tfdcs {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::InvalidCutoff: return "invalid-cutoff";
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::CutoffTooSmall: return "cutoff-too-small";
        case ErrorKind::NonFinite: return "non-finite";
        case ErrorKind::NotHermitian: return "not-hermitian";
        case ErrorKind::Degenerate: return "degenerate-distribution";
        case ErrorKind::QuadratureNotConverged: return "quadrature-not-converged";
    }
    return "unknown";
}

}  // namespace tfdcs
