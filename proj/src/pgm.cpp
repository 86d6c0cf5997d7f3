#include "vqseg/pgm.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

namespace vqseg {

namespace {

// Next integer token, skipping whitespace and '#' comment lines.
int next_header_int(std::istream& in, const std::string& path) {
  while (true) {
    const int c = in.peek();
    if (c == EOF) throw std::runtime_error("truncated PGM header: " + path);
    if (std::isspace(c)) {
      in.get();
    } else if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else {
      break;
    }
  }
  int value;
  if (!(in >> value)) throw std::runtime_error("bad PGM header: " + path);
  return value;
}

}  // namespace

Image read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string magic;
  in >> magic;
  if (magic != "P2" && magic != "P5")
    throw std::runtime_error("unsupported image format (want PGM P2 or P5): " + path);

  Image img;
  img.width = next_header_int(in, path);
  img.height = next_header_int(in, path);
  img.maxval = next_header_int(in, path);
  if (img.width < 1 || img.height < 1)
    throw std::runtime_error("bad PGM dimensions: " + path);
  if (img.maxval < 1 || img.maxval > 255)
    throw std::runtime_error("only 8-bit PGM supported: " + path);

  const std::size_t count =
      static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height);
  img.pixels.resize(count);
  if (magic == "P2") {
    for (std::size_t i = 0; i < count; ++i)
      if (!(in >> img.pixels[i])) throw std::runtime_error("truncated P2 data: " + path);
  } else {
    in.get();  // single whitespace after maxval
    std::vector<unsigned char> raw(count);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count)
      throw std::runtime_error("truncated P5 data: " + path);
    for (std::size_t i = 0; i < count; ++i) img.pixels[i] = raw[i];
  }
  for (std::size_t i = 0; i < count; ++i)
    if (img.pixels[i] < 0 || img.pixels[i] > img.maxval)
      throw std::runtime_error("pixel value out of range: " + path);
  return img;
}

void write_pbm_mask(const std::string& path, int width, int height, const BitVector& mask) {
  if (mask.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("write_pbm_mask: mask length does not match dimensions");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "P1\n" << width << " " << height << "\n";
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (c > 0) out << ' ';
      out << int(mask[static_cast<std::size_t>(r) * width + c]);
    }
    out << '\n';
  }
}

}  // namespace vqseg
