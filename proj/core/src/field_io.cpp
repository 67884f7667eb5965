#include "fujita/field_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "fujita/error.hpp"

namespace fujita {

static_assert(std::endian::native == std::endian::little, "field dumps assume a little-endian host");

namespace {

template <class T>
void put(std::ostream& out, T v) {
  static_assert(sizeof(T) == 8);
  char buf[8];
  std::memcpy(buf, &v, 8);
  out.write(buf, 8);
}

template <class T>
bool get(std::istream& in, T& v) {
  char buf[8];
  if (!in.read(buf, 8)) return false;
  std::memcpy(&v, buf, 8);
  return true;
}

}  // namespace

void write_frame(std::ostream& out, const Field& f, double time, double d, double p, double alpha) {
  const GridSpec& g = f.grid();
  put(out, kFieldDumpMagic);
  put(out, static_cast<std::int64_t>(g.dim));
  put(out, static_cast<std::int64_t>(g.points_per_axis));
  put(out, g.half_width);
  put(out, time);
  put(out, d);
  put(out, p);
  put(out, alpha);
  const auto v = f.values();
  out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)));
  if (!out) throw Error(ErrorCode::IoError, "failed to write field frame");
}

std::vector<FieldFrame> read_frames(std::istream& in) {
  std::vector<FieldFrame> frames;
  while (true) {
    std::uint64_t magic = 0;
    if (!get(in, magic)) break;
    if (magic != kFieldDumpMagic) throw Error(ErrorCode::IoError, "bad magic in field dump");
    std::int64_t dim = 0, n = 0;
    double L = 0, time = 0, d = 0, p = 0, alpha = 0;
    if (!get(in, dim) || !get(in, n) || !get(in, L) || !get(in, time) || !get(in, d) || !get(in, p) ||
        !get(in, alpha)) {
      throw Error(ErrorCode::IoError, "truncated field header");
    }
    const GridSpec g = make_grid(static_cast<int>(dim), L, static_cast<std::size_t>(n));
    RealVector v(g.total_points());
    if (!in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)))) {
      throw Error(ErrorCode::IoError, "truncated field data");
    }
    frames.push_back(FieldFrame{time, d, p, alpha, Field(g, std::move(v))});
  }
  return frames;
}

std::vector<FieldFrame> read_frames(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return read_frames(in);
}

}  // namespace fujita
