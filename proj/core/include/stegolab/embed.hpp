#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "stegolab/image.hpp"
#include "stegolab/image_io.hpp"
#include "stegolab/manifest.hpp"
#include "stegolab/payload.hpp"

namespace stegolab {

/// One cell of the embedding grid: which channels, how many topmost rows,
/// how many low bits per affected channel byte.
struct GridCell {
  ChannelMask channels{Channel::R};
  int rows = 0;
  int bits = 0;

  friend bool operator==(const GridCell&, const GridCell&) = default;
};

struct EmbedParams {
  GridCell cell;
  PayloadSource payload;
};

/// Payload capacity in bits: rows * width * |channels| * bits.
/// Throws InvalidArgument when rows exceeds the image height.
std::int64_t capacity(const RgbImage& img, const GridCell& cell);

/// LSB substitution over the topmost cell.rows rows. Pixels are visited
/// left-to-right, top-to-bottom; within a pixel the selected channels in
/// R,G,B order; the low cell.bits bits of each visited channel byte are
/// replaced by the next payload bits (first bit into the highest replaced
/// position). Everything else is untouched; the cover is not mutated.
RgbImage embed(const RgbImage& cover, const EmbedParams& params);

/// Reads back the low-bit fields in embed's exact visitation order.
/// Returns capacity(stego, cell) bits as 0/1 bytes.
std::vector<std::uint8_t> extract(const RgbImage& stego, const GridCell& cell);

/// "<stem>_<bits>_<rows>_<channels><ext>", e.g. lotus_3_10_RG.png.
std::string stego_filename(std::string_view cover_stem, const GridCell& cell,
                           ImageFormat format);

/// The embedding parameter grid. Defaults enumerate the full
/// 7 channels x 3 row counts x 3 bit counts = 63 cells.
struct GridSpec {
  std::vector<ChannelMask> channel_sets = ChannelMask::all();
  std::vector<int> row_choices = {5, 10, 20};
  std::vector<int> bit_choices = {1, 3, 4};

  std::size_t cell_count() const {
    return channel_sets.size() * row_choices.size() * bit_choices.size();
  }

  /// Cells in deterministic order (channel sets, then rows, then bits).
  /// Throws InvalidArgument on empty lists, duplicates, or out-of-range
  /// row/bit values.
  std::vector<GridCell> cells() const;
};

/// Embeds one stego image per grid cell and writes it to out_dir using the
/// stego_filename convention. Validates every row choice against the cover
/// height before writing anything. Returns the manifest of written files
/// (paths relative to out_dir).
StegoManifest generate_all(const RgbImage& cover, const std::string& cover_name,
                           const GridSpec& grid, const PayloadSource& payload,
                           const std::filesystem::path& out_dir,
                           ImageFormat format,
                           const std::string& category = {});

}  // namespace stegolab
