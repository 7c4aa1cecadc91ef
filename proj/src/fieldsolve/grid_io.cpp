#include "vp25/fieldsolve/grid_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "vp25/core/error.hpp"

namespace vp25 {

namespace {

template <typename T>
void put(std::ofstream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw Error("read_snapshot: truncated file");
  return v;
}

}  // namespace

void write_snapshot(const std::string& path, const Grid2D& g) {
  g.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_snapshot: cannot open " + path);
  out.write("VPG2", 4);
  put<std::uint32_t>(out, kGridSnapshotVersion);
  put<std::int32_t>(out, g.nx);
  put<std::int32_t>(out, g.ny);
  put(out, g.h);
  put(out, g.origin.x);
  put(out, g.origin.y);
  for (const auto* v : {&g.rho_plus, &g.rho_minus, &g.rho, &g.U, &g.Ex, &g.Ey})
    out.write(reinterpret_cast<const char*>(v->data()),
              static_cast<std::streamsize>(v->size() * sizeof(double)));
  if (!out) throw Error("write_snapshot: write failed for " + path);
}

Grid2D read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("read_snapshot: cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "VPG2", 4) != 0) throw Error("read_snapshot: bad magic in " + path);
  const auto version = get<std::uint32_t>(in);
  if (version != kGridSnapshotVersion) throw Error("read_snapshot: unsupported version");
  const auto nx = get<std::int32_t>(in);
  const auto ny = get<std::int32_t>(in);
  const auto h = get<double>(in);
  const auto ox = get<double>(in);
  const auto oy = get<double>(in);
  Grid2D g = Grid2D::make(nx, ny, h, {ox, oy});
  for (auto* v : {&g.rho_plus, &g.rho_minus, &g.rho, &g.U, &g.Ex, &g.Ey}) {
    in.read(reinterpret_cast<char*>(v->data()),
            static_cast<std::streamsize>(v->size() * sizeof(double)));
    if (!in) throw Error("read_snapshot: truncated file");
  }
  return g;
}

void write_grid_csv(const std::string& path, const Grid2D& g) {
  g.validate();
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw Error("write_grid_csv: cannot open " + path);
  std::fprintf(f, "x,y,rho,U,Ex,Ey\n");
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      const Vec2 x = g.node(i, j);
      std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", x.x, x.y, g.rho[k], g.U[k],
                   g.Ex[k], g.Ey[k]);
    }
  std::fclose(f);
}

}  // namespace vp25
