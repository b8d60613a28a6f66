#include "bardina/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <stdexcept>

namespace bardina {
namespace {

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<unsigned char>(v >> (8 * b)));
}

void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<unsigned char>(v >> (8 * b)));
}

class Reader {
 public:
  explicit Reader(const std::vector<unsigned char>& bytes) : bytes_(bytes) {}

  std::uint64_t take(int width) {
    if (pos_ + width > bytes_.size()) throw std::runtime_error("snapshot: truncated file");
    std::uint64_t v = 0;
    for (int b = 0; b < width; ++b) v |= static_cast<std::uint64_t>(bytes_[pos_ + b]) << (8 * b);
    pos_ += width;
    return v;
  }
  std::uint32_t u32() { return static_cast<std::uint32_t>(take(4)); }
  double f64() { return std::bit_cast<double>(take(8)); }
  bool done() const { return pos_ == bytes_.size(); }

 private:
  const std::vector<unsigned char>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<unsigned char> encode_snapshot(const GridSpec& g, const std::vector<const ScalarField*>& comps) {
  std::vector<unsigned char> out{'B', 'A', 'R', 'D'};
  out.reserve(24 + comps.size() * g.points() * 8);
  put_u32(out, kSnapshotVersion);
  put_u32(out, static_cast<std::uint32_t>(g.n));
  put_u64(out, std::bit_cast<std::uint64_t>(g.length));
  put_u32(out, static_cast<std::uint32_t>(comps.size()));
  for (const ScalarField* c : comps) {
    require_same_grid(g, c->grid, "encode_snapshot");
    for (double v : c->values) put_u64(out, std::bit_cast<std::uint64_t>(v));
  }
  return out;
}

Snapshot decode_snapshot(const std::vector<unsigned char>& bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), "BARD", 4) != 0) {
    throw std::runtime_error("snapshot: bad magic");
  }
  Reader r(bytes);
  r.take(4);
  const std::uint32_t version = r.u32();
  if (version != kSnapshotVersion) throw std::runtime_error("snapshot: unsupported version");
  Snapshot s;
  s.grid.n = static_cast<int>(r.u32());
  s.grid.length = r.f64();
  s.grid.validate();
  const std::uint32_t count = r.u32();
  for (std::uint32_t c = 0; c < count; ++c) {
    ScalarField f(s.grid);
    for (double& v : f.values) v = r.f64();
    s.components.push_back(std::move(f));
  }
  if (!r.done()) throw std::runtime_error("snapshot: trailing bytes");
  return s;
}

namespace {

void write_bytes(const std::filesystem::path& path, const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("snapshot: cannot open " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const ScalarField& f) {
  write_bytes(path, encode_snapshot(f.grid, {&f}));
}

void write_snapshot(const std::filesystem::path& path, const VectorField& v) {
  write_bytes(path, encode_snapshot(v.grid(), {&v[0], &v[1], &v[2]}));
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("snapshot: cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_snapshot(bytes);
}

}  // namespace bardina
