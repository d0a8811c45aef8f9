#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stegolab {

struct RgbPixel {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const RgbPixel&, const RgbPixel&) = default;
};

enum class Channel : int { R = 0, G = 1, B = 2 };

std::uint8_t& channel_ref(RgbPixel& p, Channel c);
std::uint8_t channel_value(const RgbPixel& p, Channel c);
char channel_letter(Channel c);

/// Rectangular grid of 8-bit RGB pixels, row-major, top row first.
class RgbImage {
 public:
  RgbImage() = default;
  RgbImage(int width, int height, RgbPixel fill = {});

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return pixels_.empty(); }

  RgbPixel& at(int row, int col) {
    assert(row >= 0 && row < height_ && col >= 0 && col < width_);
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }
  const RgbPixel& at(int row, int col) const {
    assert(row >= 0 && row < height_ && col >= 0 && col < width_);
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }

  std::span<RgbPixel> row(int r) {
    assert(r >= 0 && r < height_);
    return {pixels_.data() + static_cast<std::size_t>(r) * width_,
            static_cast<std::size_t>(width_)};
  }
  std::span<const RgbPixel> row(int r) const {
    assert(r >= 0 && r < height_);
    return {pixels_.data() + static_cast<std::size_t>(r) * width_,
            static_cast<std::size_t>(width_)};
  }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<RgbPixel> pixels_;
};

/// Non-empty subset of {R, G, B}. Display order is always R before G before B,
/// giving the seven names R, G, B, RG, RB, GB, RGB.
class ChannelMask {
 public:
  ChannelMask(std::initializer_list<Channel> channels);

  /// Parses a token such as "RG". Letters may appear in any order; duplicates
  /// and letters outside RGB are rejected.
  static ChannelMask parse(std::string_view token);

  /// All seven masks in canonical enumeration order: R, G, B, RG, RB, GB, RGB.
  static const std::vector<ChannelMask>& all();

  bool has(Channel c) const { return (bits_ >> static_cast<int>(c)) & 1u; }
  int count() const;
  std::string name() const;

  friend bool operator==(const ChannelMask&, const ChannelMask&) = default;

 private:
  explicit ChannelMask(std::uint8_t bits);

  std::uint8_t bits_ = 0;  // bit 0 = R, bit 1 = G, bit 2 = B
};

/// One differing channel sample between two equally sized images.
/// delta is b - a, so pixel_diff(cover, stego) reports stego minus cover.
struct PixelDelta {
  int row = 0;
  int col = 0;
  Channel channel = Channel::R;
  int delta = 0;

  friend bool operator==(const PixelDelta&, const PixelDelta&) = default;
};

/// Every coordinate where the two images differ, scanned top-to-bottom,
/// left-to-right, channels in R,G,B order. Throws InvalidArgument on
/// dimension mismatch.
std::vector<PixelDelta> pixel_diff(const RgbImage& a, const RgbImage& b);

}  // namespace stegolab
