#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "scherk/error.hpp"
#include "scherk/meshio.hpp"

using namespace scherk;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected scherk::Error");
  return ErrorKind::Io;
}

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Faces only reference surviving vertices, and the vertex count matches the mask.
void check_mesh_invariants(const SurfaceMesh& m) {
  std::size_t live = 0;
  for (bool b : m.mask) live += b ? 1 : 0;
  CHECK(live == m.vertices.size());
  for (const auto& f : m.faces) {
    for (std::int64_t v : f) {
      CHECK(v >= 0);
      CHECK(v < static_cast<std::int64_t>(m.vertices.size()));
    }
  }
}

}  // namespace

TEST_CASE("3x3 grid") {
  const SurfaceMesh m = sample_grid({0.0, Signature::Euclidean}, {-1, 1}, {-1, 1}, 3, 3);
  CHECK(m.vertices.size() == 9);
  CHECK(m.faces.size() == 8);
  check_mesh_invariants(m);
  // Node (1, 1) is the origin.
  CHECK(m.vertices[4] == std::array{0.0, 0.0, 0.0});
  // First cell split along (0,0)-(1,1).
  CHECK(m.faces[0] == std::array<std::int64_t, 3>{0, 1, 4});
  CHECK(m.faces[1] == std::array<std::int64_t, 3>{0, 4, 3});

  const std::string obj = serialize(m, MeshFormat::Obj);
  CHECK(count_prefix(obj, "v ") == 9);
  CHECK(count_prefix(obj, "f ") == 8);
  CHECK(obj.find("f 1 2 5\n") != std::string::npos);
}

TEST_CASE("masking near the singular lines") {
  const SurfaceMesh e = sample_grid({0.0, Signature::Euclidean}, {-2, 2}, {-2, 2}, 41, 41);
  check_mesh_invariants(e);
  CHECK(e.mask.size() == 41 * 41);
  for (std::int64_t j = 0; j < 41; ++j) {
    for (std::int64_t i = 0; i < 41; ++i) {
      const double x = -2 + 0.1 * static_cast<double>(i);
      const double y = -2 + 0.1 * static_cast<double>(j);
      const bool inside = std::abs(x) < std::numbers::pi / 2 - 1e-3 &&
                          std::abs(y) < std::numbers::pi / 2 - 1e-3;
      CHECK(e.mask[static_cast<std::size_t>(j * 41 + i)] == inside);
    }
  }
  // |x|, |y| <= 1.5 survive: 31 x 31 nodes.
  CHECK(e.vertices.size() == 31 * 31);
  CHECK(e.faces.size() == 2 * 30 * 30);

  const SurfaceMesh l = sample_grid({0.0, Signature::Lorentz}, {-3, 3}, {-3, 3}, 41, 41);
  check_mesh_invariants(l);
  CHECK_FALSE(l.mask.front());
  CHECK_FALSE(l.mask.back());
  CHECK(l.mask[20 * 41 + 20]);
}

TEST_CASE("grid errors") {
  CHECK(kind_of([] { sample_grid({0.0, Signature::Euclidean}, {1.6, 1.7}, {0, 1}, 3, 3); }) ==
        ErrorKind::EmptyMesh);
  CHECK(kind_of([] { sample_grid({0.0, Signature::Euclidean}, {0, 1}, {0, 1}, 1, 3); }) ==
        ErrorKind::Domain);
  CHECK(kind_of([] { sample_grid({0.0, Signature::Euclidean}, {0, INFINITY}, {0, 1}, 3, 3); }) ==
        ErrorKind::Domain);
}

TEST_CASE("wick grid samples the real part") {
  const SurfaceMesh w = sample_grid({0.0, Signature::BornInfeldWick}, {-1, 1}, {-1, 1}, 5, 5);
  CHECK(w.vertices.size() == 25);
  for (const auto& v : w.vertices) {
    CHECK(v[2] == doctest::Approx(std::log(std::cosh(v[1]) / std::cos(v[0]))));
  }
}

TEST_CASE("we_patch") {
  const SurfaceMesh dot = we_patch({0.0, Signature::Euclidean}, 0.0, 10, 32);
  CHECK(dot.vertices.size() == 1);
  CHECK(dot.faces.empty());
  CHECK(dot.vertices[0] == std::array{0.0, 0.0, 0.0});
  const std::string obj = serialize(dot, MeshFormat::Obj);
  CHECK(count_prefix(obj, "v ") == 1);
  CHECK(count_prefix(obj, "f ") == 0);

  const SurfaceSpec e{0.0, Signature::Euclidean};
  const SurfaceMesh p = we_patch(e, 0.6, 10, 32);
  CHECK(p.vertices.size() == 1 + 10 * 32);
  CHECK(p.faces.size() == 32 + 2 * 9 * 32);
  check_mesh_invariants(p);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const auto& v = p.vertices[i];
    const double gap = std::abs(v[2] - height(e, v[0], v[1]));
    CHECK(gap < 1e-6);
    CHECK(gap <= p.vertex_error[i] + 1e-7);
  }

  const SurfaceMesh l = we_patch({1.0, Signature::Lorentz}, 0.5, 8, 24);
  CHECK(l.meta.params.at("max_quadrature_error") < 1e-8);
  for (const auto& v : l.vertices) {
    for (double c : v) CHECK(std::isfinite(c));
  }

  CHECK(kind_of([&] { we_patch(e, 0.995, 4, 8); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { we_patch(e, 0.5, 4, 2); }) == ErrorKind::Domain);
}

TEST_CASE("serialization is deterministic and exact") {
  const SurfaceMesh g = sample_grid({1.5, Signature::Euclidean}, {-1, 1}, {-1, 1}, 7, 9);
  const SurfaceMesh p = we_patch({2.0, Signature::Lorentz}, 0.4, 3, 8);
  for (const SurfaceMesh* m : {&g, &p}) {
    for (MeshFormat f : {MeshFormat::Obj, MeshFormat::Csv, MeshFormat::Json}) {
      CHECK(serialize(*m, f) == serialize(*m, f));
    }
    const SurfaceMesh back = mesh_from_json(serialize(*m, MeshFormat::Json));
    CHECK(back == *m);
  }
  const std::string csv = serialize(p, MeshFormat::Csv);
  CHECK(csv.rfind("x,y,z,err\n", 0) == 0);
  CHECK(serialize(g, MeshFormat::Csv).rfind("x,y,z\n", 0) == 0);
  CHECK(count_prefix(csv, "") == 1 + p.vertices.size());
}

TEST_CASE("export writes byte-identical files") {
  const fs::path dir = fs::temp_directory_path() / "scherk_meshio_test";
  fs::create_directories(dir);
  const SurfaceMesh g = sample_grid({1.0, Signature::Euclidean}, {-1, 1}, {-1, 1}, 11, 11);
  for (auto [f, ext] : {std::pair{MeshFormat::Obj, ".obj"}, std::pair{MeshFormat::Csv, ".csv"},
                        std::pair{MeshFormat::Json, ".json"}}) {
    const fs::path a = dir / (std::string("a") + ext);
    const fs::path b = dir / (std::string("b") + ext);
    export_mesh(g, f, a);
    export_mesh(g, f, b);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) == serialize(g, f));
  }
  CHECK(mesh_from_json(slurp(dir / "a.json")) == g);
  CHECK(kind_of([&] { export_mesh(g, MeshFormat::Obj, dir / "missing" / "x.obj"); }) ==
        ErrorKind::Io);
  fs::remove_all(dir);
}

TEST_CASE("malformed JSON") {
  CHECK(kind_of([] { mesh_from_json("{"); }) == ErrorKind::Io);
  CHECK(kind_of([] { mesh_from_json(R"({"schema": 2})"); }) == ErrorKind::Io);
}

TEST_CASE("signature names") {
  for (Signature s : {Signature::Euclidean, Signature::Lorentz, Signature::BornInfeldWick}) {
    CHECK(signature_from_string(to_string(s)) == s);
  }
  CHECK(kind_of([] { signature_from_string("riemann"); }) == ErrorKind::Domain);
}
