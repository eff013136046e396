// SPDX-License-Identifier: Apache-2.0
//
// chanest - multipath channel parameter estimation
// Copyright (C) 2026 chanest contributors
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

#ifndef CHANEST_TOLERANCES_HPP
#define CHANEST_TOLERANCES_HPP

namespace chanest::tol {

// Numerical kernel contract. These are part of the public API: outputs of
// the decompositions are guaranteed to satisfy them on finite input.
inline constexpr double svd_orthonormality = 1e-10; // ||U^H U - I||, ||V^H V - I||
inline constexpr double svd_reconstruction = 1e-9;  // ||U S V^H - A|| / max(1, ||A||_F)
inline constexpr double eig_residual = 1e-9;        // ||A v - lambda v|| / ||A||_F
inline constexpr double hermitian_input = 1e-10;    // accepted Hermitian deviation, relative

// Solver defaults.
inline constexpr double solver_tol = 1e-6;    // relative objective decrease + step norm
inline constexpr int solver_max_iters = 5000; // STELA sweeps; BCD uses this times Q
inline constexpr double descent_slack = 1e-12; // tolerated objective increase per iteration

// Recovery defaults.
inline constexpr double support_rel_threshold = 1e-3; // ||G_q||_F relative to the largest block
inline constexpr double rank_ratio = 0.2;             // sigma_2/sigma_1 rank-one cutoff

} // namespace chanest::tol

#endif
