// SPDX-License-Identifier: Apache-2.0
//
// irspn: phase-noise-aware channel estimation and rate analysis for IRS links
// Copyright (C) 2026 The irspn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irspn/channel.hpp"

#include <stdexcept>

namespace irspn {

CascadedChannel sample_cascaded(Index M, Index N, double beta_cas, RandomStream& rng) {
    if (!(beta_cas > 0.0)) throw std::invalid_argument("beta_cas must be positive");
    CMatrix H(M, N);
    for (Index n = 0; n < N; ++n)
        for (Index m = 0; m < M; ++m) H(m, n) = rng.cscg(beta_cas);
    CVector h = vectorize(H);
    return {std::move(H), std::move(h)};
}

CVector vectorize(const CMatrix& H) {
    // Eigen storage is column-major, so the raw buffer already is vec(H).
    return Eigen::Map<const CVector>(H.data(), H.size());
}

CMatrix reshape(const CVector& h, Index M, Index N) {
    if (h.size() != M * N) throw std::invalid_argument("reshape: size mismatch");
    return Eigen::Map<const CMatrix>(h.data(), M, N);
}

}  // namespace irspn
