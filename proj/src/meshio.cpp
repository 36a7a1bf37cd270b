#include "scherk/meshio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scherk/error.hpp"
#include "scherk/weierstrass.hpp"

namespace scherk {
namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double surface_value(const SurfaceSpec& spec, double x, double y) {
  if (spec.signature == Signature::BornInfeldWick) return wick_height(spec.a, x, y).value.real();
  return height(spec, x, y);
}

}  // namespace

std::string to_string(Signature signature) {
  switch (signature) {
    case Signature::Euclidean: return "euclidean";
    case Signature::Lorentz: return "lorentz";
    case Signature::BornInfeldWick: return "wick";
  }
  return "euclidean";
}

Signature signature_from_string(const std::string& name) {
  if (name == "euclidean") return Signature::Euclidean;
  if (name == "lorentz") return Signature::Lorentz;
  if (name == "wick") return Signature::BornInfeldWick;
  throw Error(ErrorKind::Domain, "unknown signature '" + name + "'");
}

SurfaceMesh sample_grid(const SurfaceSpec& spec, std::pair<double, double> x_range,
                        std::pair<double, double> y_range, std::int64_t nx, std::int64_t ny,
                        double margin) {
  if (nx < 2 || ny < 2) throw Error(ErrorKind::Domain, "grid needs nx, ny >= 2");
  for (double v : {x_range.first, x_range.second, y_range.first, y_range.second}) {
    if (!std::isfinite(v)) throw Error(ErrorKind::Domain, "grid ranges must be finite");
  }
  SurfaceMesh mesh;
  mesh.nx = nx;
  mesh.ny = ny;
  mesh.mask.assign(static_cast<std::size_t>(nx * ny), false);
  std::vector<std::int64_t> vertex_of(static_cast<std::size_t>(nx * ny), -1);
  const double dx = (x_range.second - x_range.first) / static_cast<double>(nx - 1);
  const double dy = (y_range.second - y_range.first) / static_cast<double>(ny - 1);
  for (std::int64_t j = 0; j < ny; ++j) {
    for (std::int64_t i = 0; i < nx; ++i) {
      const double x = x_range.first + dx * static_cast<double>(i);
      const double y = y_range.first + dy * static_cast<double>(j);
      if (!in_domain(spec, x, y, margin)) continue;
      const auto node = static_cast<std::size_t>(j * nx + i);
      mesh.mask[node] = true;
      vertex_of[node] = static_cast<std::int64_t>(mesh.vertices.size());
      mesh.vertices.push_back({x, y, surface_value(spec, x, y)});
    }
  }
  if (mesh.vertices.empty()) throw Error(ErrorKind::EmptyMesh, "no grid node is in the domain");

  for (std::int64_t j = 0; j + 1 < ny; ++j) {
    for (std::int64_t i = 0; i + 1 < nx; ++i) {
      const auto at = [&](std::int64_t ii, std::int64_t jj) {
        return vertex_of[static_cast<std::size_t>(jj * nx + ii)];
      };
      const std::int64_t v00 = at(i, j), v10 = at(i + 1, j);
      const std::int64_t v01 = at(i, j + 1), v11 = at(i + 1, j + 1);
      if (v00 < 0 || v10 < 0 || v01 < 0 || v11 < 0) continue;
      mesh.faces.push_back({v00, v10, v11});
      mesh.faces.push_back({v00, v11, v01});
    }
  }
  mesh.meta.generator = "grid";
  mesh.meta.spec = spec;
  mesh.meta.params = {{"x_min", x_range.first}, {"x_max", x_range.second},
                      {"y_min", y_range.first}, {"y_max", y_range.second},
                      {"margin", margin}};
  return mesh;
}

SurfaceMesh we_patch(const SurfaceSpec& spec, double radius, std::int64_t n_r,
                     std::int64_t n_theta, const QuadratureConfig& cfg) {
  if (!(radius >= 0.0) || !(radius < 1.0 - cfg.pole_clearance)) {
    throw Error(ErrorKind::Domain, "patch radius must lie in [0, 1 - pole_clearance)");
  }
  if (radius > 0.0 && (n_r < 1 || n_theta < 3)) {
    throw Error(ErrorKind::Domain, "patch needs n_r >= 1 and n_theta >= 3");
  }
  SurfaceMesh mesh;
  mesh.meta.generator = "we_patch";
  mesh.meta.spec = spec;
  mesh.vertices.push_back({0.0, 0.0, 0.0});
  mesh.vertex_error.push_back(0.0);
  const std::int64_t rings = radius > 0.0 ? n_r : 0;
  mesh.nx = rings;
  mesh.ny = rings > 0 ? n_theta : 0;

  double worst = 0.0;
  for (std::int64_t i = 1; i <= rings; ++i) {
    const double r = radius * static_cast<double>(i) / static_cast<double>(rings);
    for (std::int64_t m = 0; m < n_theta; ++m) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) /
                           static_cast<double>(n_theta);
      const WEPoint p = we_integrate(spec, std::polar(r, theta), cfg);
      mesh.vertices.push_back({p.x, p.y, p.phi});
      mesh.vertex_error.push_back(p.est_error);
      worst = std::max(worst, p.est_error);
    }
  }
  mesh.mask.assign(mesh.vertices.size(), true);

  const auto ring_vertex = [&](std::int64_t ring, std::int64_t m) {
    return 1 + (ring - 1) * n_theta + (m % n_theta);
  };
  if (rings > 0) {
    for (std::int64_t m = 0; m < n_theta; ++m) {
      mesh.faces.push_back({0, ring_vertex(1, m), ring_vertex(1, m + 1)});
    }
  }
  for (std::int64_t i = 1; i < rings; ++i) {
    for (std::int64_t m = 0; m < n_theta; ++m) {
      const std::int64_t a = ring_vertex(i, m), b = ring_vertex(i + 1, m);
      const std::int64_t c = ring_vertex(i + 1, m + 1), d = ring_vertex(i, m + 1);
      mesh.faces.push_back({a, b, c});
      mesh.faces.push_back({a, c, d});
    }
  }
  mesh.meta.params = {{"radius", radius},
                      {"n_r", static_cast<double>(n_r)},
                      {"n_theta", static_cast<double>(n_theta)},
                      {"max_quadrature_error", worst}};
  return mesh;
}

std::string serialize(const SurfaceMesh& mesh, MeshFormat format) {
  std::ostringstream out;
  switch (format) {
    case MeshFormat::Obj:
      for (const auto& v : mesh.vertices) {
        out << "v " << format_double(v[0]) << ' ' << format_double(v[1]) << ' '
            << format_double(v[2]) << '\n';
      }
      for (const auto& f : mesh.faces) {
        out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
      }
      break;
    case MeshFormat::Csv: {
      const bool with_err = !mesh.vertex_error.empty();
      out << (with_err ? "x,y,z,err\n" : "x,y,z\n");
      for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const auto& v = mesh.vertices[i];
        out << format_double(v[0]) << ',' << format_double(v[1]) << ',' << format_double(v[2]);
        if (with_err) out << ',' << format_double(mesh.vertex_error[i]);
        out << '\n';
      }
      break;
    }
    case MeshFormat::Json: {
      json doc;
      doc["schema"] = 1;
      doc["vertices"] = mesh.vertices;
      doc["faces"] = mesh.faces;
      doc["mask"] = mesh.mask;
      doc["nx"] = mesh.nx;
      doc["ny"] = mesh.ny;
      doc["vertex_error"] = mesh.vertex_error;
      doc["meta"] = {{"generator", mesh.meta.generator},
                     {"a", mesh.meta.spec.a},
                     {"signature", to_string(mesh.meta.spec.signature)},
                     {"params", mesh.meta.params}};
      out << doc.dump(1) << '\n';
      break;
    }
  }
  return out.str();
}

void export_mesh(const SurfaceMesh& mesh, MeshFormat format, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  file << serialize(mesh, format);
  if (!file.flush()) throw Error(ErrorKind::Io, "write to " + path.string() + " failed");
}

SurfaceMesh mesh_from_json(const std::string& text) {
  SurfaceMesh mesh;
  try {
    const json doc = json::parse(text);
    if (doc.at("schema").get<int>() != 1) throw Error(ErrorKind::Io, "unsupported mesh schema");
    mesh.vertices = doc.at("vertices").get<std::vector<std::array<double, 3>>>();
    mesh.faces = doc.at("faces").get<std::vector<std::array<std::int64_t, 3>>>();
    mesh.mask = doc.at("mask").get<std::vector<bool>>();
    mesh.nx = doc.at("nx").get<std::int64_t>();
    mesh.ny = doc.at("ny").get<std::int64_t>();
    mesh.vertex_error = doc.at("vertex_error").get<std::vector<double>>();
    const json& meta = doc.at("meta");
    mesh.meta.generator = meta.at("generator").get<std::string>();
    mesh.meta.spec.a = meta.at("a").get<double>();
    mesh.meta.spec.signature = signature_from_string(meta.at("signature").get<std::string>());
    mesh.meta.params = meta.at("params").get<std::map<std::string, double>>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Io, std::string("malformed mesh JSON: ") + e.what());
  }
  return mesh;
}

}  // namespace scherk
