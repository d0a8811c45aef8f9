#pragma once

#include <filesystem>
#include <string>

#include "stegolab/image.hpp"

namespace stegolab {

enum class ImageFormat { Bmp, Png };

std::string format_name(ImageFormat f);       // "bmp" / "png"
std::string format_extension(ImageFormat f);  // ".bmp" / ".png"
ImageFormat parse_format(std::string_view name);

/// Identifies the file's format from its magic bytes. JPEG and anything else
/// that is not BMP or PNG raises UnsupportedFormatError; lossy carriers would
/// not preserve LSB payloads.
ImageFormat sniff_format(const std::filesystem::path& path);

/// Decodes a BMP or PNG file to RGB. BMP: uncompressed 24-bit BI_RGB only.
/// PNG: 8-bit-per-channel; alpha is dropped, palettes are expanded to direct
/// RGB, grayscale is promoted to R=G=B. Decoding is lossless; no colour
/// profile handling.
RgbImage load_image(const std::filesystem::path& path);

/// Encodes img losslessly; load_image(path) afterwards returns a
/// pixel-identical image. BMP is written uncompressed 24-bit bottom-up;
/// PNG as 8-bit RGB.
void save_image(const RgbImage& img, const std::filesystem::path& path,
                ImageFormat format);

}  // namespace stegolab
