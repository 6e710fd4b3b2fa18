#include "cpd/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <vector>

namespace cpd {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct Rgb8 {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // interleaved RGB
};

[[noreturn]] void fail(const std::filesystem::path& path, const char* what) {
  throw std::runtime_error(std::string(what) + ": " + path.string());
}

Rgb8 read_png_rgb8(const std::filesystem::path& path) {
  FilePtr file(std::fopen(path.string().c_str(), "rb"));
  if (!file) fail(path, "cannot open file");

  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "png read init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    fail(path, "png read init failed");
  }

  Rgb8 out;
  std::vector<png_bytep> rows;
  // All C++ state lives above this point; the longjmp region below only
  // touches libpng.
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "failed to decode PNG");
  }

  png_init_io(png, file.get());
  png_read_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  const int color_type = png_get_color_type(png, info);

  if (bit_depth > 8) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "unsupported bit depth (expected 8-bit)");
  }

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
    png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color_type == PNG_COLOR_TYPE_GRAY ||
      color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
    png_set_gray_to_rgb(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  out.width = static_cast<int>(width);
  out.height = static_cast<int>(height);
  out.data.resize(static_cast<std::size_t>(width) * height * 3);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y)
    rows[y] = out.data.data() + static_cast<std::size_t>(y) * width * 3;

  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

void write_png(const std::filesystem::path& path, int width, int height,
               int color_type, int channels, const std::uint8_t* data) {
  FilePtr file(std::fopen(path.string().c_str(), "wb"));
  if (!file) fail(path, "cannot open file for writing");

  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "png write init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    fail(path, "png write init failed");
  }

  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y)
    rows[y] = const_cast<std::uint8_t*>(data) +
              static_cast<std::size_t>(y) * width * channels;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(path, "failed to encode PNG");
  }

  png_init_io(png, file.get());
  png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

RasterImage read_image_png(const std::filesystem::path& path) {
  const Rgb8 raw = read_png_rgb8(path);
  RasterImage img(raw.width, raw.height);
  for (std::size_t i = 0; i < raw.data.size(); ++i)
    img.data[i] = static_cast<float>(raw.data[i] / 255.0);
  return img;
}

BinaryMask read_mask_png(const std::filesystem::path& path) {
  const Rgb8 raw = read_png_rgb8(path);
  BinaryMask mask(raw.width, raw.height);
  for (std::size_t p = 0; p < mask.data.size(); ++p) {
    const bool set = raw.data[p * 3] || raw.data[p * 3 + 1] || raw.data[p * 3 + 2];
    mask.data[p] = set ? 1 : 0;
  }
  return mask;
}

void write_image_png(const std::filesystem::path& path, const RasterImage& img) {
  std::vector<std::uint8_t> bytes(img.data.size());
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    const float v = std::min(std::max(img.data[i], 0.0f), 1.0f);
    bytes[i] = static_cast<std::uint8_t>(std::lround(v * 255.0));
  }
  write_png(path, img.width, img.height, PNG_COLOR_TYPE_RGB, 3, bytes.data());
}

void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask) {
  std::vector<std::uint8_t> bytes(mask.data.size());
  for (std::size_t i = 0; i < mask.data.size(); ++i)
    bytes[i] = mask.data[i] ? 255 : 0;
  write_png(path, mask.width, mask.height, PNG_COLOR_TYPE_GRAY, 1, bytes.data());
}

}  // namespace cpd
