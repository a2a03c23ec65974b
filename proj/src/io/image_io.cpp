#include "afb/io/image_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <vector>

namespace afb::io {

namespace {

std::uint8_t to_byte(double v) {
  if (v <= 0.0) return 0;
  if (v >= 1.0) return 255;
  return static_cast<std::uint8_t>(std::lround(v * 255.0));
}

// Reads one whitespace-delimited token, skipping '#' comments.
std::string next_token(std::istream& in, const std::string& path) {
  std::string tok;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  while (c != EOF && !std::isspace(c)) {
    tok.push_back(static_cast<char>(c));
    c = in.get();
  }
  if (tok.empty())
    raise(ErrorCode::UnreadableFile, "truncated netpbm header: " + path);
  return tok;
}

struct PnmHeader {
  std::string magic;
  int width = 0;
  int height = 0;
  int maxval = 0;
};

PnmHeader read_header(std::istream& in, const std::string& path,
                      const std::string& expected_magic) {
  PnmHeader h;
  h.magic = next_token(in, path);
  if (h.magic != expected_magic)
    raise(ErrorCode::UnreadableFile,
          path + ": expected " + expected_magic + " got " + h.magic);
  h.width = std::stoi(next_token(in, path));
  h.height = std::stoi(next_token(in, path));
  h.maxval = std::stoi(next_token(in, path));
  if (h.width <= 0 || h.height <= 0)
    raise(ErrorCode::BadDimensions, path + ": non-positive dimensions");
  if (h.maxval != 255)
    raise(ErrorCode::UnreadableFile, path + ": only maxval 255 supported");
  return h;
}

std::vector<std::uint8_t> read_payload(std::istream& in, std::size_t n,
                                       const std::string& path) {
  std::vector<std::uint8_t> bytes(n);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n)
    raise(ErrorCode::UnreadableFile, path + ": truncated pixel data");
  return bytes;
}

}  // namespace

double quantize8(double v) {
  return static_cast<double>(to_byte(v)) / 255.0;
}

RgbFrame read_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::UnreadableFile, "cannot open " + path);
  const PnmHeader h = read_header(in, path, "P6");
  const std::size_t n = static_cast<std::size_t>(h.width) * h.height;
  const auto bytes = read_payload(in, n * 3, path);
  RgbFrame frame(h.width, h.height);
  for (std::size_t i = 0; i < n; ++i) {
    frame.rdata()[i] = bytes[3 * i] / 255.0;
    frame.gdata()[i] = bytes[3 * i + 1] / 255.0;
    frame.bdata()[i] = bytes[3 * i + 2] / 255.0;
  }
  return frame;
}

void write_ppm(const std::string& path, const RgbFrame& frame) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::IoError, "cannot write " + path);
  out << "P6\n" << frame.width() << " " << frame.height() << "\n255\n";
  const std::size_t n = frame.pixel_count();
  std::vector<std::uint8_t> bytes(n * 3);
  for (std::size_t i = 0; i < n; ++i) {
    bytes[3 * i] = to_byte(frame.rdata()[i]);
    bytes[3 * i + 1] = to_byte(frame.gdata()[i]);
    bytes[3 * i + 2] = to_byte(frame.bdata()[i]);
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) raise(ErrorCode::IoError, "short write: " + path);
}

GrayImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::UnreadableFile, "cannot open " + path);
  const PnmHeader h = read_header(in, path, "P5");
  const std::size_t n = static_cast<std::size_t>(h.width) * h.height;
  const auto bytes = read_payload(in, n, path);
  GrayImage img(h.width, h.height);
  for (std::size_t i = 0; i < n; ++i) img.data()[i] = bytes[i] / 255.0;
  return img;
}

void write_pgm(const std::string& path, const GrayImage& image) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::IoError, "cannot write " + path);
  out << "P5\n" << image.width() << " " << image.height() << "\n255\n";
  std::vector<std::uint8_t> bytes(image.pixel_count());
  for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] = to_byte(image.data()[i]);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) raise(ErrorCode::IoError, "short write: " + path);
}

BinaryMask read_mask_pgm(const std::string& path) {
  const GrayImage img = read_pgm(path);
  BinaryMask mask(img.width(), img.height());
  for (std::size_t i = 0; i < img.pixel_count(); ++i)
    mask.raw()[i] = img.data()[i] >= 0.5 ? 1u : 0u;
  return mask;
}

void write_mask_pgm(const std::string& path, const BinaryMask& mask) {
  GrayImage img(mask.width(), mask.height());
  for (std::size_t i = 0; i < mask.pixel_count(); ++i)
    img.data()[i] = mask.raw()[i] ? 1.0 : 0.0;
  write_pgm(path, img);
}

}  // namespace afb::io
