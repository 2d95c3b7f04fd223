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

#pragma once

#include "irspn/rng.hpp"
#include "irspn/types.hpp"

namespace irspn {

/// Cascaded BS-IRS-user channel H_cas (M x N) together with h = vec(H_cas).
struct CascadedChannel {
    CMatrix H;
    CVector h;
};

/// Entries i.i.d. CSCG with variance beta_cas, drawn in column-major order.
CascadedChannel sample_cascaded(Index M, Index N, double beta_cas, RandomStream& rng);

/// Column-major stacking: h[n*M + m] = H(m, n).
CVector vectorize(const CMatrix& H);
CMatrix reshape(const CVector& h, Index M, Index N);

}  // namespace irspn
