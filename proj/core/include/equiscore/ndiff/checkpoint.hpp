#pragma once

#include <string>

#include "equiscore/ndiff/net.hpp"

namespace equiscore::ndiff {

// Checkpoint layout: one ASCII header line
//   "equiscore-net <version> <activation> <w0> <w1> ... <wL>\n"
// followed by raw little-endian 64-bit floats, per layer: the weight matrix
// row-major, then the bias vector.
inline constexpr int kCheckpointVersion = 1;

void save_checkpoint(const DenseNet& net, const std::string& path);
DenseNet load_checkpoint(const std::string& path);

}  // namespace equiscore::ndiff
