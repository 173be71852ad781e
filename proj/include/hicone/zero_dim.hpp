// Copyright 2026 The hicone Authors.
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

#include <random>
#include <vector>

#include "hicone/grobner.hpp"
#include "hicone/univariate.hpp"

namespace hicone {

/// A Galois orbit of points over F_q: the points are (c_0(theta) : ... :
/// c_N(theta)) for the deg(phi) roots theta of the irreducible phi.
struct PointOrbit {
  UPoly phi;
  std::vector<UPoly> coords;
};

struct ZeroDimOptions {
  GroebnerOptions gb;
  /// Skip factoring the eliminant beyond its linear factors.
  bool rational_only = false;
  /// Refuse systems with more points than this (ResourceExhausted).
  int max_points = 4000;
  /// Random coordinate changes / separating forms tried before giving up.
  int attempts = 4;
  /// Stop once the length is known; orbits and points are left empty.
  bool length_only = false;
};

struct ZeroDimResult {
  /// Number of points counted with multiplicity (length of the quotient).
  int length = 0;
  /// True when the scheme is reduced and a separating form was found, so
  /// the orbits below account for every point.
  bool shape_position = false;
  std::vector<PointOrbit> orbits;
  /// Points rational over F_q, normalized projectively.
  std::vector<std::vector<Fp>> rational_points;
};

/// Points of a zero-dimensional projective scheme V(I) in P^{nvars-1}.
/// Throws DomainError when the projective dimension is not 0, and
/// ResourceExhausted when the GB step cap or max_points is exceeded. An
/// empty scheme yields length 0.
ZeroDimResult solve_zero_dim(const Ideal<Fp>& ideal, std::mt19937_64& rng,
                             const ZeroDimOptions& options = {});

}  // namespace hicone
