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

#include "carnot/boundary_atlas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <unordered_map>

#include <Eigen/Geometry>

#include "carnot/errors.hpp"
#include "carnot/json_io.hpp"
#include "carnot/parallel.hpp"

namespace carnot {
namespace {

const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

Word cyclic(const Word& w, int times) {
  Word out = w;
  for (int i = 0; i < times; ++i) out = relabel(out, kCyclicRelabel);
  return out;
}

std::vector<Letter> cyclic_pattern(std::vector<Letter> p, int times) {
  for (auto& l : p)
    for (int i = 0; i < times; ++i) l = kCyclicRelabel[l - 1];
  return p;
}

std::vector<Letter> reversed(std::vector<Letter> p) {
  std::reverse(p.begin(), p.end());
  return p;
}

std::string pattern_string(const std::vector<Letter>& p) {
  std::string s;
  for (Letter l : p) s += static_cast<char>('0' + l);
  return s;
}

// (1,a)(2,b)(3,1)(1,1-a)(2,1-b) lands on p + qr = 1 with q = b, r = 1 - a.
Word even_quadric_base(double a, double b) {
  return Word{{1, a}, {2, b}, {3, 1.0}, {1, 1.0 - a}, {2, 1.0 - b}};
}

// (2,b)(1,1)(2,c)(3,1)(2,1-b-c) lands on r = 0 with p = 1 - b, q = b + c.
Word flat_base(double b, double c) {
  const double rest = std::max(0.0, 1.0 - b - c);
  return Word{{2, b}, {1, 1.0}, {2, c}, {3, 1.0}, {2, rest}};
}

Vec3 unit(const Vec3& v) { return v / v.norm(); }

Vec3 quadric_gradient(int k, bool odd, const Vec3& x) {
  const int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
  Vec3 g = Vec3::Zero();
  if (!odd) {
    g[k] = 1.0;
    g[k1] = x[k2];
    g[k2] = x[k1];
  } else {
    g[k] = -1.0;
    g[k1] = -(1.0 - x[k2]);
    g[k2] = -(1.0 - x[k1]);
  }
  return g;
}

// Cube facet {x_k = v}; the triangle keeps the part next to the vertex
// opposite the cap corner.
double facet_residual(int k, int v, const Vec3& x) {
  return std::abs(x[k] - v);
}

// Coons patch over the trimmed (u, w) region of the even quadric with free
// coordinate first: corners golden (0,0), (1,1/2) at (1,0), (1,1) at (1,1)
// and (1/2,1) at (0,1).
Eigen::Vector2d coons(double s, double t) {
  auto c0 = [](double s) {
    const double u = kGolden + s * (1.0 - kGolden);
    return Eigen::Vector2d(u, 1.0 / (1.0 + u));
  };
  auto c1 = [](double s) { return Eigen::Vector2d(0.5 + 0.5 * s, 1.0); };
  auto d0 = [](double t) {
    const double w = kGolden + t * (1.0 - kGolden);
    return Eigen::Vector2d(1.0 / (1.0 + w), w);
  };
  auto d1 = [](double t) { return Eigen::Vector2d(1.0, 0.5 + 0.5 * t); };
  const Eigen::Vector2d p00 = c0(0), p10 = c0(1), p01 = c1(0), p11 = c1(1);
  return (1 - t) * c0(s) + t * c1(s) + (1 - s) * d0(t) + s * d1(t) -
         ((1 - s) * (1 - t) * p00 + s * (1 - t) * p10 + (1 - s) * t * p01 +
          s * t * p11);
}

FacePatch quadric_patch(int k, bool odd) {
  FacePatch f;
  f.kind = PatchKind::kQuadric;
  const char* names[3] = {"p", "q", "r"};
  const std::string a = names[k], b = names[(k + 1) % 3],
                    c = names[(k + 2) % 3];
  f.id = odd ? "quadric:(1-" + a + ")+(1-" + b + ")(1-" + c + ")=1"
             : "quadric:" + a + "+" + b + c + "=1";
  const std::vector<Letter> base = {1, 2, 3, 1, 2};
  f.pattern = cyclic_pattern(base, k);
  if (odd) f.pattern = reversed(f.pattern);
  f.domain = {2, false};
  f.witness = [k, odd](double s, double t) {
    Word w = cyclic(even_quadric_base(s, t), k);
    return canonicalize(odd ? reverse(w) : w);
  };
  f.residual = [k, odd](const Vec3& x) {
    return std::abs(quadric_value(k, odd, x) - 1.0);
  };
  f.outward_normal = [k, odd](const Vec3& x) {
    return unit(quadric_gradient(k, odd, x));
  };
  return f;
}

std::string corner_label(const FacePatch& f, double s, double t) {
  return vertex_label(f.point(s, t));
}

struct EdgeSpec {
  Letter i, j, k;
  bool block_first;
};

struct Dedup {
  double tol;
  std::unordered_map<long long, std::vector<int>> cells;
  std::vector<Vec3>* out;

  long long key(long long a, long long b, long long c) const {
    return (a * 73856093LL) ^ (b * 19349663LL) ^ (c * 83492791LL);
  }

  int add(const Vec3& x) {
    const double cell = 4.0 * tol;
    long long ix = std::llround(std::floor(x[0] / cell));
    long long iy = std::llround(std::floor(x[1] / cell));
    long long iz = std::llround(std::floor(x[2] / cell));
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy)
        for (long long dz = -1; dz <= 1; ++dz) {
          auto it = cells.find(key(ix + dx, iy + dy, iz + dz));
          if (it == cells.end()) continue;
          for (int idx : it->second)
            if (((*out)[idx] - x).cwiseAbs().maxCoeff() <= tol) return idx;
        }
    const int idx = static_cast<int>(out->size());
    out->push_back(x);
    cells[key(ix, iy, iz)].push_back(idx);
    return idx;
  }
};

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

bool on_cube_surface(const Vec3& x, double tol) {
  for (int i = 0; i < 3; ++i)
    if (x[i] <= tol || x[i] >= 1.0 - tol) return true;
  return false;
}

}  // namespace

std::string to_string(PatchKind k) {
  switch (k) {
    case PatchKind::kVertex: return "vertex";
    case PatchKind::kCubeEdge: return "cube-edge";
    case PatchKind::kDiagonalEdge: return "diagonal-edge";
    case PatchKind::kFlatTriangle: return "flat-triangle";
    case PatchKind::kQuadric: return "quadric";
  }
  return "unknown";
}

std::string to_string(SampleStatus s) {
  switch (s) {
    case SampleStatus::kBoundary: return "boundary";
    case SampleStatus::kInterior: return "interior";
    case SampleStatus::kExterior: return "exterior";
    case SampleStatus::kUndecided: return "undecided";
    case SampleStatus::kFailed: return "failed";
  }
  return "unknown";
}

bool ParamDomain::contains(double s, double t) const {
  const double tol = 1e-12;
  if (s < -tol || s > 1 + tol) return false;
  if (dim < 2) return true;
  if (t < -tol || t > 1 + tol) return false;
  return !simplex || s + t <= 1 + tol;
}

Vec3 FacePatch::point(double s, double t) const {
  return pqr(witness(s, t)).vec();
}

std::vector<LabeledVertex> vertices() {
  const std::vector<std::pair<std::string, std::vector<Letter>>> table = {
      {"A1", {1, 3, 2}}, {"B2", {2, 1, 3}}, {"C1", {3, 2, 1}},
      {"A2", {3, 1, 2}}, {"C2", {2, 3, 1}}, {"D1", {1, 2, 3}}};
  std::vector<LabeledVertex> out;
  for (const auto& [label, letters] : table) {
    Word w = Word::from_lists(letters, {1.0, 1.0, 1.0});
    out.push_back({label, pqr(w), w});
  }
  return out;
}

std::string vertex_label(const Vec3& x, double tol) {
  for (const auto& v : vertices())
    if ((v.point.vec() - x).cwiseAbs().maxCoeff() <= tol) return v.label;
  return "";
}

double quadric_value(int k, bool odd, const Vec3& x) {
  const int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
  if (!odd) return x[k] + x[k1] * x[k2];
  return (1.0 - x[k]) + (1.0 - x[k1]) * (1.0 - x[k2]);
}

bool in_trimmed_region(int k, bool odd, const Vec3& x, double tol) {
  const int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
  if (!odd) return x[k] <= x[k1] + tol && x[k] <= x[k2] + tol;
  return x[k] >= x[k1] - tol && x[k] >= x[k2] - tol;
}

Word trimmed_quadric_witness(int k, bool odd, double s, double t) {
  const Eigen::Vector2d uw = coons(s, t);
  const double a = std::clamp(1.0 - uw[1], 0.0, 1.0);
  const double b = std::clamp(uw[0], 0.0, 1.0);
  Word w = cyclic(even_quadric_base(a, b), k);
  return canonicalize(odd ? reverse(w) : w);
}

std::vector<FacePatch> edge_families() {
  std::vector<FacePatch> out;
  // Cube edges: a two-letter block (i, j, i) with durations (s, 1, 1 - s)
  // next to the third letter.
  const EdgeSpec cube[6] = {{1, 2, 3, true}, {2, 3, 1, true},
                            {3, 1, 2, true}, {1, 2, 3, false},
                            {2, 3, 1, false}, {3, 1, 2, false}};
  for (const auto& e : cube) {
    FacePatch f;
    f.kind = PatchKind::kCubeEdge;
    f.domain = {1, false};
    f.pattern = e.block_first ? std::vector<Letter>{e.i, e.j, e.i, e.k}
                              : std::vector<Letter>{e.k, e.i, e.j, e.i};
    f.witness = [e](double s, double) {
      Word block{{e.i, s}, {e.j, 1.0}, {e.i, 1.0 - s}};
      Word third{{e.k, 1.0}};
      return canonicalize(e.block_first ? concat(block, third)
                                        : concat(third, block));
    };
    out.push_back(std::move(f));
  }
  // Facet diagonals: (x, y, z, x) with durations (a, 1, 1, 1 - a).
  const std::vector<Letter> diag[6] = {{1, 2, 3, 1}, {2, 3, 1, 2},
                                       {3, 1, 2, 3}, {1, 3, 2, 1},
                                       {2, 1, 3, 2}, {3, 2, 1, 3}};
  for (const auto& p : diag) {
    FacePatch f;
    f.kind = PatchKind::kDiagonalEdge;
    f.domain = {1, false};
    f.pattern = p;
    f.witness = [p](double a, double) {
      return canonicalize(
          Word::from_lists(p, {a, 1.0, 1.0, 1.0 - a}));
    };
    out.push_back(std::move(f));
  }
  for (auto& f : out) {
    const Vec3 x0 = f.point(0.0), x1 = f.point(1.0);
    f.id = to_string(f.kind) + ":" + vertex_label(x0) + "-" +
           vertex_label(x1) + ":" + pattern_string(f.pattern);
    // The family is a straight segment; distance from that segment.
    f.residual = [x0, x1](const Vec3& x) {
      const Vec3 d = x1 - x0;
      const double s = std::clamp((x - x0).dot(d) / d.squaredNorm(), 0.0, 1.0);
      return (x - (x0 + s * d)).norm();
    };
  }
  return out;
}

std::vector<FacePatch> flat_triangles() {
  std::vector<FacePatch> out;
  const std::vector<Letter> base_pattern = {2, 1, 2, 3, 2};
  for (int rev = 0; rev < 2; ++rev) {
    for (int m = 0; m < 3; ++m) {
      FacePatch f;
      f.kind = PatchKind::kFlatTriangle;
      f.domain = {2, true};
      f.pattern = cyclic_pattern(base_pattern, m);
      if (rev) f.pattern = reversed(f.pattern);
      f.witness = [m, rev](double b, double c) {
        Word w = cyclic(flat_base(b, c), m);
        return canonicalize(rev ? reverse(w) : w);
      };
      const int k = (2 + m) % 3;
      const int v = rev;
      f.residual = [k, v](const Vec3& x) { return facet_residual(k, v, x); };
      f.outward_normal = [k, v](const Vec3&) {
        Vec3 n = Vec3::Zero();
        n[k] = v ? 1.0 : -1.0;
        return n;
      };
      f.id = "flat-triangle:" + corner_label(f, 0, 0) + "-" +
             corner_label(f, 1, 0) + "-" + corner_label(f, 0, 1);
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<FacePatch> quadric_patches() {
  std::vector<FacePatch> out;
  for (int odd = 0; odd < 2; ++odd)
    for (int k = 0; k < 3; ++k) out.push_back(quadric_patch(k, odd));
  return out;
}

void Mesh::write_obj(std::ostream& out) const {
  out << "# boundary of the attainable set B\n";
  for (const auto& v : vertices) {
    out << "v " << format_number(v[0]) << ' ' << format_number(v[1]) << ' '
        << format_number(v[2]) << '\n';
  }
  int current = -1;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (face_group[f] != current) {
      current = face_group[f];
      out << "g " << group_names[current] << '\n';
    }
    out << "f " << faces[f][0] + 1 << ' ' << faces[f][1] + 1 << ' '
        << faces[f][2] + 1 << '\n';
  }
}

MeshCheck check_mesh(const Mesh& mesh) {
  MeshCheck c;
  std::map<std::pair<int, int>, int> directed;
  double volume = 0.0;
  double min_area = std::numeric_limits<double>::infinity();
  for (const auto& f : mesh.faces) {
    for (int e = 0; e < 3; ++e) ++directed[{f[e], f[(e + 1) % 3]}];
    const Vec3& a = mesh.vertices[f[0]];
    const Vec3& b = mesh.vertices[f[1]];
    const Vec3& d = mesh.vertices[f[2]];
    volume += a.dot(b.cross(d)) / 6.0;
    min_area = std::min(min_area, 0.5 * (b - a).cross(d - a).norm());
  }
  int undirected = 0;
  bool orientation_ok = true;
  for (const auto& [e, n] : directed) {
    const auto rev = directed.find({e.second, e.first});
    const int m = rev == directed.end() ? 0 : rev->second;
    if (e.first < e.second || m == 0) ++undirected;
    if (n != 1 || m != 1) {
      if (n + m == 1) {
        ++c.boundary_edges;
      } else {
        ++c.nonmanifold_edges;
      }
      if (n > 1) orientation_ok = false;
    }
  }
  c.closed = c.boundary_edges == 0 && c.nonmanifold_edges == 0;
  c.consistent_orientation = orientation_ok;
  c.euler_characteristic = static_cast<int>(mesh.vertices.size()) -
                           undirected + static_cast<int>(mesh.faces.size());
  c.volume = volume;
  c.min_triangle_area = mesh.faces.empty() ? 0.0 : min_area;
  return c;
}

AtlasResult trim_and_mesh(int resolution, const Prober& prober,
                          const AtlasOptions& options) {
  if (resolution < 2)
    throw DomainError("resolution_at_least_2", "resolution must be >= 2");
  if (!(options.eps > 0.0))
    throw DomainError("probe_step_positive", "eps must be positive");
  AtlasResult result;
  Mesh& mesh = result.mesh;
  Dedup dedup{1e-9, {}, &mesh.vertices};

  auto add_triangle = [&](int group, const Vec3& a, const Vec3& b,
                          const Vec3& c, const Vec3& outward) {
    std::array<int, 3> f = {dedup.add(a), dedup.add(b), dedup.add(c)};
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) return;
    if ((b - a).cross(c - a).dot(outward) < 0) std::swap(f[1], f[2]);
    mesh.faces.push_back(f);
    mesh.face_group.push_back(group);
  };

  // Flat triangles: triangular grid with 2n steps so the hypotenuse shares
  // vertices with the two trimmed quadric pieces meeting it.
  const int n = resolution - 1;
  const int N = 2 * n;
  for (const auto& f : flat_triangles()) {
    const int group = static_cast<int>(mesh.group_names.size());
    std::string name = f.id;
    std::replace(name.begin(), name.end(), ':', '_');
    mesh.group_names.push_back(name);
    auto at = [&](int i, int j) {
      return f.point(static_cast<double>(i) / N, static_cast<double>(j) / N);
    };
    for (int i = 0; i < N; ++i)
      for (int j = 0; i + j < N; ++j) {
        const Vec3 a = at(i, j), b = at(i + 1, j), c = at(i, j + 1);
        add_triangle(group, a, b, c, f.outward_normal(a));
        if (i + j + 2 <= N) {
          const Vec3 d = at(i + 1, j + 1);
          add_triangle(group, b, d, c, f.outward_normal(a));
        }
      }
  }
  // Trimmed quadric pieces on a Coons grid.
  for (int odd = 0; odd < 2; ++odd)
    for (int k = 0; k < 3; ++k) {
      const FacePatch f = quadric_patch(k, odd);
      const int group = static_cast<int>(mesh.group_names.size());
      std::string name = "trimmed-" + f.id;
      std::replace(name.begin(), name.end(), ':', '_');
      mesh.group_names.push_back(name);
      std::vector<Vec3> grid((n + 1) * (n + 1));
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
          grid[i * (n + 1) + j] =
              pqr(trimmed_quadric_witness(k, odd, double(i) / n,
                                          double(j) / n))
                  .vec();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Vec3& a = grid[i * (n + 1) + j];
          const Vec3& b = grid[(i + 1) * (n + 1) + j];
          const Vec3& c = grid[(i + 1) * (n + 1) + j + 1];
          const Vec3& d = grid[i * (n + 1) + j + 1];
          const Vec3 mid = (a + b + c + d) / 4.0;
          const Vec3 nrm = f.outward_normal(mid);
          add_triangle(group, a, b, c, nrm);
          add_triangle(group, a, c, d, nrm);
        }
    }
  result.check = check_mesh(mesh);

  // Probe samples on the full patches.
  struct Job {
    const FacePatch* patch;
    int k;
    bool odd;
    double s, t;
  };
  std::vector<FacePatch> patches = quadric_patches();
  for (auto& f : flat_triangles()) patches.push_back(std::move(f));
  std::vector<Job> jobs;
  for (std::size_t p = 0; p < patches.size(); ++p) {
    const int k = static_cast<int>(p % 3);
    const bool odd = p >= 3 && p < 6;
    for (int i = 0; i < resolution; ++i)
      for (int j = 0; j < resolution; ++j) {
        const double s = double(i) / n, t = double(j) / n;
        if (!patches[p].domain.contains(s, t)) continue;
        jobs.push_back({&patches[p], k, odd, s, t});
      }
  }
  result.samples.resize(jobs.size());
  parallel_for(jobs.size(), options.threads, [&](std::size_t idx) {
    const Job& job = jobs[idx];
    AtlasSample& smp = result.samples[idx];
    smp.patch_id = job.patch->id;
    smp.s = job.s;
    smp.t = job.t;
    try {
      smp.witness = job.patch->witness(job.s, job.t);
      smp.point = pqr(smp.witness).vec();
    } catch (const std::exception& e) {
      smp.status = SampleStatus::kFailed;
      smp.error = e.what();
      return;
    }
    const Vec3& x = smp.point;
    const double margin = 2.0 * options.eps;
    if (job.patch->kind == PatchKind::kQuadric) {
      smp.predicted_boundary = in_trimmed_region(job.k, job.odd, x, 1e-12) ||
                               on_cube_surface(x, 1e-12);
      // Samples within a probe step of a trim line or of the cube surface
      // are reported but not scored.
      const int k1 = (job.k + 1) % 3, k2 = (job.k + 2) % 3;
      const double gap = std::min(std::abs(x[job.k] - x[k1]),
                                  std::abs(x[job.k] - x[k2]));
      smp.scored = !(gap < margin || on_cube_surface(x, margin));
    } else {
      smp.predicted_boundary = true;
      // Distance to the hypotenuse where the caps begin.
      int k = 0;
      for (int i = 0; i < 3; ++i)
        if (std::abs(job.patch->outward_normal(x)[i]) > 0.5) k = i;
      const double sum = x[(k + 1) % 3] + x[(k + 2) % 3];
      smp.scored = !(std::abs(sum - 1.0) < 2.0 * margin);
    }
    if (!options.probe) return;
    const Vec3 nrm = job.patch->outward_normal(x);
    try {
      smp.outward = prober(x, nrm, options.eps);
      smp.inward = prober(x, -nrm, options.eps);
    } catch (const std::exception& e) {
      smp.status = SampleStatus::kFailed;
      smp.error = e.what();
      return;
    }
    using PO = ProbeOutcome;
    if (smp.outward == PO::kUndecided || smp.inward == PO::kUndecided) {
      smp.status = SampleStatus::kUndecided;
    } else if (on_cube_surface(x, 1e-12)) {
      // The sample is attained and B lies inside the cube.
      smp.status = SampleStatus::kBoundary;
    } else if (smp.outward == PO::kUnattainableBeyond) {
      smp.status = smp.inward == PO::kAttainableBeyond
                       ? SampleStatus::kBoundary
                       : SampleStatus::kExterior;
    } else {
      smp.status = smp.inward == PO::kAttainableBeyond
                       ? SampleStatus::kInterior
                       : SampleStatus::kBoundary;
    }
  });
  for (std::size_t i = 0; i < result.samples.size(); ++i) {
    const auto& smp = result.samples[i];
    if (smp.status == SampleStatus::kFailed) {
      ++result.failed;
    } else if (smp.status == SampleStatus::kUndecided) {
      ++result.undecided;
    } else if (smp.scored) {
      const bool boundary = smp.status == SampleStatus::kBoundary;
      (boundary == smp.predicted_boundary ? result.agree : result.disagree)++;
    }
  }
  return result;
}

void write_strata_csv(std::ostream& out, const std::vector<FacePatch>& patches,
                      int resolution) {
  if (resolution < 2)
    throw DomainError("resolution_at_least_2", "resolution must be >= 2");
  out << "label,s,t,p,q,r,witness\n";
  const int n = resolution - 1;
  for (const auto& f : patches) {
    const int jmax = f.domain.dim == 2 ? n : 0;
    const int imax = f.domain.dim >= 1 ? n : 0;
    for (int i = 0; i <= imax; ++i)
      for (int j = 0; j <= jmax; ++j) {
        const double s = double(i) / n, t = double(j) / n;
        if (!f.domain.contains(s, t)) continue;
        const Word w = f.witness(s, t);
        const Vec3 x = pqr(w).vec();
        out << f.id << ',' << format_number(s) << ',' << format_number(t)
            << ',' << format_number(x[0]) << ',' << format_number(x[1]) << ','
            << format_number(x[2]) << ',' << csv_quote(dump(to_json(w)))
            << '\n';
      }
  }
}

void write_samples_csv(std::ostream& out,
                       const std::vector<AtlasSample>& samples) {
  out << "label,s,t,p,q,r,outward,inward,status,predicted,scored,witness,"
         "error\n";
  for (const auto& smp : samples) {
    out << smp.patch_id << ',' << format_number(smp.s) << ','
        << format_number(smp.t) << ',' << format_number(smp.point[0]) << ','
        << format_number(smp.point[1]) << ',' << format_number(smp.point[2])
        << ',' << to_string(smp.outward) << ',' << to_string(smp.inward) << ','
        << to_string(smp.status) << ','
        << (smp.predicted_boundary ? "boundary" : "interior") << ','
        << (smp.scored ? 1 : 0) << ','
        << csv_quote(dump(to_json(smp.witness))) << ',' << csv_quote(smp.error)
        << '\n';
  }
}

}  // namespace carnot
