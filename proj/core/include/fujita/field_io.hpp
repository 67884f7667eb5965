#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fujita/field.hpp"

namespace fujita {

// One frame: a 64-byte little-endian header followed by n^N doubles.
//   u64 magic, i64 dim, i64 n, f64 L, f64 time, f64 d, f64 p, f64 alpha
inline constexpr std::uint64_t kFieldDumpMagic = 0x31304154494A5546ull;  // "FUJITA01"

struct FieldFrame {
  double time = 0.0;
  double d = 0.0;
  double p = 0.0;
  double alpha = 0.0;
  Field field;
};

void write_frame(std::ostream& out, const Field& f, double time, double d, double p, double alpha);
// Appends frames until end of stream; throws IoError on a truncated frame.
std::vector<FieldFrame> read_frames(std::istream& in);
std::vector<FieldFrame> read_frames(const std::string& path);

}  // namespace fujita
