#include "stegolab/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

#include "stegolab/error.hpp"

namespace stegolab {

namespace {

static_assert(sizeof(RgbPixel) == 3, "RgbPixel must be a packed RGB triple");

// ---------------------------------------------------------------------------
// Little-endian scalar access for the BMP headers
// ---------------------------------------------------------------------------

std::uint16_t read_u16(const std::uint8_t* p) {
  return std::uint16_t(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const std::uint8_t* p) {
  return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) |
         (std::uint32_t(p[2]) << 16) | (std::uint32_t(p[3]) << 24);
}

std::int32_t read_i32(const std::uint8_t* p) {
  return static_cast<std::int32_t>(read_u32(p));
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(std::uint8_t(v & 0xFF));
  out.push_back(std::uint8_t(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(std::uint8_t(v & 0xFF));
  out.push_back(std::uint8_t((v >> 8) & 0xFF));
  out.push_back(std::uint8_t((v >> 16) & 0xFF));
  out.push_back(std::uint8_t((v >> 24) & 0xFF));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for " + path.string());
  return data;
}

// ---------------------------------------------------------------------------
// BMP: uncompressed 24-bit BI_RGB, bottom-up or top-down
// ---------------------------------------------------------------------------

constexpr std::size_t kBmpFileHeaderSize = 14;
constexpr std::size_t kBmpInfoHeaderSize = 40;

std::size_t bmp_stride(int width) {
  return (static_cast<std::size_t>(width) * 3 + 3) & ~std::size_t(3);
}

RgbImage load_bmp(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> data = read_file(path);
  if (data.size() < kBmpFileHeaderSize + kBmpInfoHeaderSize) {
    throw DecodeError("BMP header truncated in " + path.string());
  }
  if (data[0] != 'B' || data[1] != 'M') {
    throw DecodeError("BMP signature missing in " + path.string());
  }
  const std::uint32_t pixel_offset = read_u32(&data[10]);
  const std::uint32_t info_size = read_u32(&data[14]);
  if (info_size < kBmpInfoHeaderSize) {
    throw DecodeError("BMP info header too small in " + path.string());
  }
  const std::int32_t raw_width = read_i32(&data[18]);
  const std::int32_t raw_height = read_i32(&data[22]);
  const std::uint16_t planes = read_u16(&data[26]);
  const std::uint16_t bit_count = read_u16(&data[28]);
  const std::uint32_t compression = read_u32(&data[30]);

  if (planes != 1) {
    throw DecodeError("BMP plane count must be 1 in " + path.string());
  }
  if (bit_count != 24 || compression != 0) {
    throw UnsupportedFormatError(
        "only uncompressed 24-bit BMP is supported: " + path.string());
  }
  const bool top_down = raw_height < 0;
  const std::int64_t height64 = top_down ? -std::int64_t(raw_height)
                                         : std::int64_t(raw_height);
  if (raw_width < 1 || height64 < 1 || raw_width > (1 << 24) ||
      height64 > (1 << 24)) {
    throw DecodeError("BMP dimensions out of range in " + path.string());
  }
  const int width = raw_width;
  const int height = static_cast<int>(height64);
  const std::size_t stride = bmp_stride(width);
  if (pixel_offset < kBmpFileHeaderSize + info_size ||
      std::size_t(pixel_offset) + stride * std::size_t(height) > data.size()) {
    throw DecodeError("BMP pixel data truncated in " + path.string());
  }

  RgbImage img(width, height);
  for (int row = 0; row < height; ++row) {
    const int src_row = top_down ? row : height - 1 - row;
    const std::uint8_t* src = data.data() + pixel_offset +
                              stride * static_cast<std::size_t>(src_row);
    auto dst = img.row(row);
    for (int col = 0; col < width; ++col) {
      dst[col] = {src[col * 3 + 2], src[col * 3 + 1], src[col * 3 + 0]};
    }
  }
  return img;
}

void save_bmp(const RgbImage& img, const std::filesystem::path& path) {
  const std::size_t stride = bmp_stride(img.width());
  const std::size_t image_size = stride * std::size_t(img.height());
  const std::size_t file_size =
      kBmpFileHeaderSize + kBmpInfoHeaderSize + image_size;

  std::vector<std::uint8_t> out;
  out.reserve(file_size);
  out.push_back('B');
  out.push_back('M');
  put_u32(out, std::uint32_t(file_size));
  put_u16(out, 0);
  put_u16(out, 0);
  put_u32(out, std::uint32_t(kBmpFileHeaderSize + kBmpInfoHeaderSize));

  put_u32(out, std::uint32_t(kBmpInfoHeaderSize));
  put_u32(out, std::uint32_t(img.width()));
  put_u32(out, std::uint32_t(img.height()));  // positive: bottom-up
  put_u16(out, 1);
  put_u16(out, 24);
  put_u32(out, 0);  // BI_RGB
  put_u32(out, std::uint32_t(image_size));
  put_u32(out, 2835);  // 72 dpi
  put_u32(out, 2835);
  put_u32(out, 0);
  put_u32(out, 0);

  for (int row = img.height() - 1; row >= 0; --row) {
    auto src = img.row(row);
    for (int col = 0; col < img.width(); ++col) {
      out.push_back(src[col].b);
      out.push_back(src[col].g);
      out.push_back(src[col].r);
    }
    out.resize(out.size() + (stride - std::size_t(img.width()) * 3), 0);
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot create " + path.string());
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("write failed for " + path.string());
}

// ---------------------------------------------------------------------------
// PNG via libpng
// ---------------------------------------------------------------------------

struct PngMessage {
  std::string text;
};

extern "C" void png_error_handler(png_structp png, png_const_charp msg) {
  auto* state = static_cast<PngMessage*>(png_get_error_ptr(png));
  if (state) state->text = msg ? msg : "libpng error";
  png_longjmp(png, 1);
}

extern "C" void png_warning_handler(png_structp, png_const_charp) {}

struct FileHandle {
  FILE* fp = nullptr;
  explicit FileHandle(const std::filesystem::path& path, const char* mode)
      : fp(std::fopen(path.string().c_str(), mode)) {}
  ~FileHandle() {
    if (fp) std::fclose(fp);
  }
  FileHandle(const FileHandle&) = delete;
  FileHandle& operator=(const FileHandle&) = delete;
};

struct PngReadState {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReadState() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
  }
};

struct PngWriteState {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngWriteState() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
  }
};

RgbImage load_png(const std::filesystem::path& path) {
  FileHandle file(path, "rb");
  if (!file.fp) throw IoError("cannot open " + path.string());

  PngMessage message;
  PngReadState state;
  state.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &message,
                                     png_error_handler, png_warning_handler);
  if (!state.png) throw DecodeError("libpng initialization failed");
  state.info = png_create_info_struct(state.png);
  if (!state.info) throw DecodeError("libpng initialization failed");

  RgbImage img;
  std::vector<png_bytep> row_ptrs;

  if (setjmp(png_jmpbuf(state.png))) {
    throw DecodeError("PNG decode failed for " + path.string() + ": " +
                      message.text);
  }

  png_init_io(state.png, file.fp);
  png_read_info(state.png, state.info);

  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int bit_depth = 0;
  int color_type = 0;
  png_get_IHDR(state.png, state.info, &width, &height, &bit_depth, &color_type,
               nullptr, nullptr, nullptr);

  if (bit_depth == 16) {
    throw UnsupportedFormatError(
        "16-bit-per-channel PNG is not supported: " + path.string());
  }
  if (width < 1 || height < 1) {
    throw DecodeError("PNG dimensions out of range in " + path.string());
  }

  // Normalize everything to 8-bit direct RGB: expand palettes, promote
  // grayscale to R=G=B, and drop any alpha channel without compositing.
  if (color_type == PNG_COLOR_TYPE_PALETTE) {
    png_set_palette_to_rgb(state.png);
  }
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(state.png);
  }
  if (color_type == PNG_COLOR_TYPE_GRAY ||
      color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(state.png);
  }
  png_set_strip_alpha(state.png);
  png_set_interlace_handling(state.png);
  png_read_update_info(state.png, state.info);

  if (png_get_rowbytes(state.png, state.info) !=
      std::size_t(width) * 3) {
    throw DecodeError("unexpected PNG row layout in " + path.string());
  }

  img = RgbImage(static_cast<int>(width), static_cast<int>(height));
  row_ptrs.resize(height);
  for (png_uint_32 r = 0; r < height; ++r) {
    row_ptrs[r] = reinterpret_cast<png_bytep>(img.row(static_cast<int>(r)).data());
  }
  png_read_image(state.png, row_ptrs.data());
  png_read_end(state.png, nullptr);
  return img;
}

void save_png(const RgbImage& img, const std::filesystem::path& path) {
  FileHandle file(path, "wb");
  if (!file.fp) throw IoError("cannot create " + path.string());

  PngMessage message;
  PngWriteState state;
  state.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &message,
                                      png_error_handler, png_warning_handler);
  if (!state.png) throw IoError("libpng initialization failed");
  state.info = png_create_info_struct(state.png);
  if (!state.info) throw IoError("libpng initialization failed");

  std::vector<png_bytep> row_ptrs(img.height());
  for (int r = 0; r < img.height(); ++r) {
    row_ptrs[r] = reinterpret_cast<png_bytep>(
        const_cast<RgbPixel*>(img.row(r).data()));
  }

  if (setjmp(png_jmpbuf(state.png))) {
    throw IoError("PNG encode failed for " + path.string() + ": " +
                  message.text);
  }

  png_init_io(state.png, file.fp);
  png_set_compression_level(state.png, 4);
  png_set_IHDR(state.png, state.info, png_uint_32(img.width()),
               png_uint_32(img.height()), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(state.png, state.info);
  png_write_image(state.png, row_ptrs.data());
  png_write_end(state.png, nullptr);

  if (std::fflush(file.fp) != 0) {
    throw IoError("write failed for " + path.string());
  }
}

constexpr std::array<std::uint8_t, 8> kPngSignature = {0x89, 'P',  'N',  'G',
                                                       0x0D, 0x0A, 0x1A, 0x0A};

}  // namespace

std::string format_name(ImageFormat f) {
  return f == ImageFormat::Bmp ? "bmp" : "png";
}

std::string format_extension(ImageFormat f) {
  return f == ImageFormat::Bmp ? ".bmp" : ".png";
}

ImageFormat parse_format(std::string_view name) {
  if (name == "bmp") return ImageFormat::Bmp;
  if (name == "png") return ImageFormat::Png;
  throw InvalidArgument("unknown image format '" + std::string(name) + "'");
}

ImageFormat sniff_format(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::array<std::uint8_t, 8> magic{};
  in.read(reinterpret_cast<char*>(magic.data()), magic.size());
  const std::streamsize got = in.gcount();

  if (got >= 8 && std::equal(kPngSignature.begin(), kPngSignature.end(),
                             magic.begin())) {
    return ImageFormat::Png;
  }
  if (got >= 2 && magic[0] == 'B' && magic[1] == 'M') {
    return ImageFormat::Bmp;
  }
  if (got >= 3 && magic[0] == 0xFF && magic[1] == 0xD8 && magic[2] == 0xFF) {
    throw UnsupportedFormatError(
        "JPEG input rejected (lossy formats do not preserve LSB payloads): " +
        path.string());
  }
  throw UnsupportedFormatError("unrecognized image format in " +
                               path.string() + " (expected BMP or PNG)");
}

RgbImage load_image(const std::filesystem::path& path) {
  switch (sniff_format(path)) {
    case ImageFormat::Bmp: return load_bmp(path);
    case ImageFormat::Png: return load_png(path);
  }
  throw UnsupportedFormatError("unrecognized image format in " + path.string());
}

void save_image(const RgbImage& img, const std::filesystem::path& path,
                ImageFormat format) {
  if (img.empty()) throw InvalidArgument("cannot save an empty image");
  if (format == ImageFormat::Bmp) {
    save_bmp(img, path);
  } else {
    save_png(img, path);
  }
}

}  // namespace stegolab
