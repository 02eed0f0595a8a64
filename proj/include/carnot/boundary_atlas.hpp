// Copyright 2026 The Carnot Reach Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CARNOT_BOUNDARY_ATLAS_HPP_
#define CARNOT_BOUNDARY_ATLAS_HPP_

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "carnot/attainability.hpp"
#include "carnot/words.hpp"

namespace carnot {

enum class PatchKind {
  kVertex,
  kCubeEdge,
  kDiagonalEdge,
  kFlatTriangle,
  kQuadric
};

std::string to_string(PatchKind k);

/// Parameter domain of a witness map: dim 0 (a point), dim 1 ([0,1]) or
/// dim 2, either the unit square or the simplex {s, t >= 0, s + t <= 1}.
struct ParamDomain {
  int dim = 2;
  bool simplex = false;

  bool contains(double s, double t) const;
};

/// One stratum of the boundary of B together with a witness-word map.
struct FacePatch {
  PatchKind kind = PatchKind::kQuadric;
  std::string id;
  /// Letter pattern of the witness words (before degenerate arcs drop out).
  std::vector<Letter> pattern;
  ParamDomain domain;
  /// Section word for parameters (s, t); t is ignored for dim < 2.
  std::function<Word(double s, double t)> witness;
  /// Zero on the stratum's defining equation or facet.
  std::function<double(const Vec3&)> residual;
  /// Unit normal pointing away from B (dim 2 only).
  std::function<Vec3(const Vec3&)> outward_normal;

  Vec3 point(double s, double t = 0.0) const;
};

/// Cyclic letter relabeling 1 -> 2 -> 3 -> 1; maps (p, q, r) to (r, p, q).
inline constexpr std::array<Letter, 3> kCyclicRelabel = {2, 3, 1};

struct LabeledVertex {
  std::string label;
  PqrPoint point;
  Word witness;
};

/// The six vertices A1, B2, C1, A2, C2, D1 with their 3-arc witness words.
std::vector<LabeledVertex> vertices();

/// Label of a cube corner that is a vertex of B, or "" otherwise.
std::string vertex_label(const Vec3& x, double tol = 1e-9);

/// Six cube edges (two-letter block plus the third letter) and six facet
/// diagonals (patterns x y z x with durations a, 1, 1, 1 - a).
std::vector<FacePatch> edge_families();

/// Six flat triangles on the cube facets: on {x_k = 0} the triangle where the
/// other two coordinates sum to at least 1, on {x_k = 1} at most 1.
std::vector<FacePatch> flat_triangles();

/// Six full (untrimmed) quadric patches: x_k + x_{k+1} x_{k+2} = 1 from
/// cyclic relabelings of (1,2,3,1,2) and
/// (1 - x_k) + (1 - x_{k+1})(1 - x_{k+2}) = 1 from (2,1,3,2,1).
std::vector<FacePatch> quadric_patches();

/// Defining function f with f = 1 on the quadric; B lies locally on f <= 1.
double quadric_value(int free_index, bool odd, const Vec3& x);

/// Trimmed piece of a quadric: the part where the free coordinate is the
/// smallest one (even family) or the largest one (odd family). Its four sides
/// are the two crossing curves with the neighbouring quadrics and two facet
/// diagonals.
bool in_trimmed_region(int free_index, bool odd, const Vec3& x,
                       double tol = 1e-12);

/// Point of the trimmed piece at Coons parameters (s, t) in [0,1]^2, and its
/// witness word. Corners: (0,0) the golden point, (1,1) a cube vertex.
Word trimmed_quadric_witness(int free_index, bool odd, double s, double t);

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<int> face_group;
  std::vector<std::string> group_names;

  void write_obj(std::ostream& out) const;
};

struct MeshCheck {
  bool closed = false;  ///< every edge used once in each direction
  bool consistent_orientation = false;
  int boundary_edges = 0;
  int nonmanifold_edges = 0;
  int euler_characteristic = 0;
  double volume = 0.0;
  double min_triangle_area = 0.0;
};

MeshCheck check_mesh(const Mesh& mesh);

enum class SampleStatus {
  kBoundary,
  kInterior,
  kExterior,
  kUndecided,
  kFailed
};

std::string to_string(SampleStatus s);

struct AtlasSample {
  std::string patch_id;
  double s = 0.0;
  double t = 0.0;
  Vec3 point = Vec3::Zero();
  Word witness;
  ProbeOutcome outward = ProbeOutcome::kUndecided;
  ProbeOutcome inward = ProbeOutcome::kUndecided;
  SampleStatus status = SampleStatus::kUndecided;
  /// Whether the trimmed atlas predicts this sample on the boundary.
  bool predicted_boundary = false;
  /// False within two probe steps of a trim line, a hypotenuse or the cube
  /// surface, where the probe cannot separate the sides.
  bool scored = true;
  std::string error;
};

struct AtlasOptions {
  double eps = 1e-3;
  int threads = 1;
  /// When false, samples are listed with status undecided and no probing.
  bool probe = true;
};

struct AtlasResult {
  Mesh mesh;
  MeshCheck check;
  std::vector<AtlasSample> samples;
  int agree = 0;
  int disagree = 0;
  int undecided = 0;
  int failed = 0;
};

/// Samples every two-dimensional patch on a resolution x resolution grid,
/// probes both sides of each sample along the outward normal, trims the
/// quadrics along their crossing curves and assembles a closed mesh of the
/// boundary with one group per stratum.
AtlasResult trim_and_mesh(int resolution, const Prober& prober,
                          const AtlasOptions& options = {});

/// CSV rows: label, s, t, p, q, r, witness JSON.
void write_strata_csv(std::ostream& out, const std::vector<FacePatch>& patches,
                      int resolution);

/// CSV rows for probed samples.
void write_samples_csv(std::ostream& out,
                       const std::vector<AtlasSample>& samples);

}  // namespace carnot

#endif  // CARNOT_BOUNDARY_ATLAS_HPP_
