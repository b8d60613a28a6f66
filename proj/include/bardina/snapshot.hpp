#pragma once

#include <filesystem>
#include <vector>

#include "bardina/fields.hpp"

namespace bardina {

/// Flat binary field snapshot, little-endian:
///   "BARD" | version u32 | N u32 | L f64 | n_components u32 | components (f64, x fastest)
inline constexpr std::uint32_t kSnapshotVersion = 1;

struct Snapshot {
  GridSpec grid;
  std::vector<ScalarField> components;
};

std::vector<unsigned char> encode_snapshot(const GridSpec& g, const std::vector<const ScalarField*>& comps);
Snapshot decode_snapshot(const std::vector<unsigned char>& bytes);

void write_snapshot(const std::filesystem::path& path, const ScalarField& f);
void write_snapshot(const std::filesystem::path& path, const VectorField& v);
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace bardina
