// Copyright 2026 The affib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "affib/affine.hpp"
#include "affib/pluecker.hpp"
#include "affib/poly_matrix.hpp"

#include <optional>
#include <vector>

namespace affib {

/// Polynomial map from n-space to n-space. When built from a potential psi
/// the components are the partial derivatives of psi.
class HoloMap {
public:
  /// Gradient map of psi. Throws std::invalid_argument for arity < 2.
  static HoloMap from_potential(Polynomial psi);
  /// Throws ArityMismatch unless there are n components of arity n.
  static HoloMap from_components(std::vector<Polynomial> components);

  std::size_t n() const { return components_.size(); }
  const std::vector<Polynomial> &components() const { return components_; }
  const std::optional<Polynomial> &gradient_source() const { return potential_; }

  /// Entry (j, k) is the derivative of component j in variable k.
  PolyMatrix jacobian() const;

private:
  std::vector<Polynomial> components_;
  std::optional<Polynomial> potential_;
};

bool is_symmetric(const PolyMatrix &m);

struct A1Result {
  std::size_t k = 0;
  bool ok = false;
};

/// Generic rank of the Jacobian; ok iff 1 <= k <= n - 1.
A1Result check_a1(const HoloMap &map);

struct A2Result {
  bool ok = false;
  /// First nonzero component of Gamma(x + t w(x)) - Gamma(x), as a
  /// polynomial in the n coordinates followed by t.
  std::optional<Polynomial> witness;
};

/// Checks that every level set through a maximal-rank point is the affine
/// space x + ker DGamma(x), by the identity Gamma(x + t w(x)) = Gamma(x) for
/// each kernel vector w.
A2Result check_a2(const HoloMap &map, const KernelBasis &kernel);
/// Computes the kernel first. Throws Error when (A1) fails.
A2Result check_a2(const HoloMap &map);

struct FibrationAnalysis {
  HoloMap map;
  PolyMatrix jacobian;
  std::size_t k = 0;
  bool a1_ok = false;
  bool a2_ok = false;
  std::optional<Polynomial> a2_witness{};
  /// Present only when a1_ok.
  std::optional<KernelBasis> kernel{};
  std::optional<PlueckerVector> pluecker{};
  /// Nonzero reduced Plücker coordinates in tuple order. Their common zero
  /// set is the indeterminacy locus of the kernel map.
  std::vector<Polynomial> singular_generators{};
};

FibrationAnalysis analyze(const HoloMap &map);

enum class PointKind { Singular, Extendible, OnMaxRankStratum };

struct PointClassification {
  PointKind kind = PointKind::Singular;
  /// The continuous extension of the kernel map at the point, if any.
  std::optional<GrassmannPoint> value;
};

/// Singular when every reduced Plücker coordinate vanishes at the point.
/// Otherwise the normalized value is the extension there; the kind is
/// OnMaxRankStratum when the Jacobian also has rank k at the point.
PointClassification is_essential_singularity(const FibrationAnalysis &analysis,
                                             std::span<const Rational> point);

/// Polynomial curve t -> sum_j t^j a_j.
class CurveSpec {
public:
  /// Throws std::invalid_argument if the vectors differ in length or the
  /// curve is constant.
  explicit CurveSpec(std::vector<std::vector<Rational>> coefficients);

  std::size_t ambient() const { return coeffs_.front().size(); }
  const std::vector<std::vector<Rational>> &coefficients() const { return coeffs_; }
  const std::vector<Rational> &limit_point() const { return coeffs_.front(); }
  /// Coordinates as polynomials in t (arity 1).
  std::vector<Polynomial> coordinates() const;

private:
  std::vector<std::vector<Rational>> coeffs_;
};

class CurveInsideIndeterminacy : public Error {
public:
  using Error::Error;
};

/// Limit of the kernel map along the curve as t -> 0.
GrassmannPoint limit_along_curve(const FibrationAnalysis &analysis, const CurveSpec &curve);

/// True iff the limiting subspace lies in the direction space of `piece`.
/// Throws std::invalid_argument when dimensions are incompatible.
bool check_tangency(const GrassmannPoint &limit, const AffineSubspace &piece);

/// Generic rank of the Jacobian restricted to the piece.
std::size_t rank_on_affine_set(const HoloMap &map, const AffineSubspace &piece);
std::size_t rank_on_piece(const HoloMap &map, const Piece &piece);

/// max(k - 1, n - k + 1) <= d <= n - 2.
bool check_theorem1_bounds(std::size_t n, std::size_t k, std::size_t d);

/// Certifies that the generators have no common zero: some generator is a
/// nonzero constant, or all are affine-linear and inconsistent.
bool generators_have_no_common_zero(const std::vector<Polynomial> &generators,
                                    std::size_t n);

/// When n <= 3 or k <= 2 the singular set must be empty; returns whether
/// the generators certify that. Vacuously true otherwise.
bool check_corollary(std::size_t n, std::size_t k,
                     const std::vector<Polynomial> &singular_generators);

} // namespace affib
