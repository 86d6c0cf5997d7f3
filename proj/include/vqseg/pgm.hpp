#pragma once

#include <string>
#include <vector>

#include "vqseg/common.hpp"

namespace vqseg {

/// 8-bit greyscale image.
struct Image {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<int> pixels;  // row-major, values in [0, maxval]
};

/// Reads PGM P2 (ASCII) or P5 (binary), 8-bit only.
Image read_pgm(const std::string& path);

/// Writes a P1 bitmap; mask bit 1 marks segment A.
void write_pbm_mask(const std::string& path, int width, int height, const BitVector& mask);

}  // namespace vqseg
