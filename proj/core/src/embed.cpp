#include "stegolab/embed.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stegolab/error.hpp"

namespace stegolab {

namespace {

void check_cell(const GridCell& cell, int image_height) {
  if (cell.rows < 1) {
    throw InvalidArgument("affected row count must be positive, got " +
                          std::to_string(cell.rows));
  }
  if (cell.rows > image_height) {
    std::ostringstream msg;
    msg << "affected rows (" << cell.rows << ") exceed image height ("
        << image_height << ")";
    throw InvalidArgument(msg.str());
  }
  if (cell.bits < 1 || cell.bits > 8) {
    throw InvalidArgument("bit count must be in 1..8, got " +
                          std::to_string(cell.bits));
  }
}

constexpr std::array<Channel, 3> kChannelOrder = {Channel::R, Channel::G,
                                                  Channel::B};

}  // namespace

std::int64_t capacity(const RgbImage& img, const GridCell& cell) {
  check_cell(cell, img.height());
  return std::int64_t(cell.rows) * img.width() * cell.channels.count() *
         cell.bits;
}

RgbImage embed(const RgbImage& cover, const EmbedParams& params) {
  const GridCell& cell = params.cell;
  check_cell(cell, cover.height());

  RgbImage stego = cover;
  PayloadStream payload = params.payload.stream();
  const std::uint8_t keep = std::uint8_t(0xFFu << cell.bits);

  for (int row = 0; row < cell.rows; ++row) {
    auto pixels = stego.row(row);
    for (int col = 0; col < stego.width(); ++col) {
      for (Channel c : kChannelOrder) {
        if (!cell.channels.has(c)) continue;
        std::uint8_t& byte = channel_ref(pixels[col], c);
        byte = std::uint8_t((byte & keep) |
                            payload.next_bits(cell.bits));
      }
    }
  }
  return stego;
}

std::vector<std::uint8_t> extract(const RgbImage& stego, const GridCell& cell) {
  check_cell(cell, stego.height());

  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(capacity(stego, cell)));
  for (int row = 0; row < cell.rows; ++row) {
    auto pixels = stego.row(row);
    for (int col = 0; col < stego.width(); ++col) {
      for (Channel c : kChannelOrder) {
        if (!cell.channels.has(c)) continue;
        const std::uint8_t byte = channel_value(pixels[col], c);
        for (int k = cell.bits - 1; k >= 0; --k) {
          bits.push_back(std::uint8_t((byte >> k) & 1u));
        }
      }
    }
  }
  return bits;
}

std::string stego_filename(std::string_view cover_stem, const GridCell& cell,
                           ImageFormat format) {
  std::ostringstream name;
  name << cover_stem << '_' << cell.bits << '_' << cell.rows << '_'
       << cell.channels.name() << format_extension(format);
  return name.str();
}

std::vector<GridCell> GridSpec::cells() const {
  if (channel_sets.empty() || row_choices.empty() || bit_choices.empty()) {
    throw InvalidArgument("grid spec must list at least one choice per axis");
  }
  std::set<std::string> channel_names;
  for (const ChannelMask& mask : channel_sets) {
    if (!channel_names.insert(mask.name()).second) {
      throw InvalidArgument("duplicate channel set in grid: " + mask.name());
    }
  }
  auto check_distinct_positive = [](const std::vector<int>& values,
                                    const char* what, int max) {
    std::set<int> seen;
    for (int v : values) {
      if (v < 1 || v > max) {
        throw InvalidArgument(std::string("grid ") + what +
                              " out of range: " + std::to_string(v));
      }
      if (!seen.insert(v).second) {
        throw InvalidArgument(std::string("duplicate grid ") + what + ": " +
                              std::to_string(v));
      }
    }
  };
  check_distinct_positive(row_choices, "row choice", 1 << 24);
  check_distinct_positive(bit_choices, "bit choice", 8);

  std::vector<GridCell> out;
  out.reserve(cell_count());
  for (const ChannelMask& mask : channel_sets) {
    for (int rows : row_choices) {
      for (int bits : bit_choices) {
        out.push_back({mask, rows, bits});
      }
    }
  }
  return out;
}

StegoManifest generate_all(const RgbImage& cover, const std::string& cover_name,
                           const GridSpec& grid, const PayloadSource& payload,
                           const std::filesystem::path& out_dir,
                           ImageFormat format, const std::string& category) {
  if (cover_name.empty()) {
    throw InvalidArgument("cover name must not be empty");
  }
  const std::vector<GridCell> cells = grid.cells();
  // Abort before writing anything if any row choice cannot fit.
  for (const GridCell& cell : cells) check_cell(cell, cover.height());

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + out_dir.string() + ": " +
                  ec.message());
  }

  StegoManifest manifest;
  manifest.set_base_dir(out_dir);
  for (const GridCell& cell : cells) {
    const RgbImage stego = embed(cover, {cell, payload});
    const std::string filename = stego_filename(cover_name, cell, format);
    save_image(stego, out_dir / filename, format);
    manifest.append({filename, cover_name, category, cell.bits, cell.rows,
                     cell.channels, payload.spec(), format});
  }
  manifest.validate();
  return manifest;
}

}  // namespace stegolab
