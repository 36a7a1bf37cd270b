#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scherk/quadrature.hpp"
#include "scherk/surfaces.hpp"

namespace scherk {

struct MeshMeta {
  std::string generator;  // "grid" or "we_patch"
  SurfaceSpec spec;
  std::map<std::string, double> params;
};

struct SurfaceMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<std::int64_t, 3>> faces;  // 0-based vertex indices
  // One flag per generator node; vertices are the true nodes in node order.
  std::vector<bool> mask;
  std::int64_t nx = 0;
  std::int64_t ny = 0;
  // Quadrature error per vertex (we_patch only; empty for grids).
  std::vector<double> vertex_error;
  MeshMeta meta;

  friend bool operator==(const SurfaceMesh&, const SurfaceMesh&) = default;
};

inline bool operator==(const MeshMeta& l, const MeshMeta& r) {
  return l.generator == r.generator && l.spec.a == r.spec.a &&
         l.spec.signature == r.spec.signature && l.params == r.params;
}

// Height on an nx-by-ny lattice over x_range x y_range, node (i, j) at index
// j*nx + i. Nodes failing in_domain(margin) are masked; only cells whose four
// corners survive are triangulated, split along (i,j)-(i+1,j+1). The wick
// signature samples Re of the complex height.
SurfaceMesh sample_grid(const SurfaceSpec& spec, std::pair<double, double> x_range,
                        std::pair<double, double> y_range, std::int64_t nx, std::int64_t ny,
                        double margin = kDefaultDomainMargin);

// Polar lattice in the W-E parameter disc (center plus n_r rings of n_theta
// nodes) pushed through we_integrate.
SurfaceMesh we_patch(const SurfaceSpec& spec, double radius, std::int64_t n_r,
                     std::int64_t n_theta, const QuadratureConfig& cfg = {});

enum class MeshFormat { Obj, Csv, Json };

std::string serialize(const SurfaceMesh& mesh, MeshFormat format);
void export_mesh(const SurfaceMesh& mesh, MeshFormat format, const std::filesystem::path& path);

// Inverse of serialize(mesh, MeshFormat::Json).
SurfaceMesh mesh_from_json(const std::string& text);

std::string to_string(Signature signature);
Signature signature_from_string(const std::string& name);

}  // namespace scherk
