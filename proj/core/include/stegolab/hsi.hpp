#pragma once

#include <cassert>
#include <vector>

#include "stegolab/image.hpp"

namespace stegolab {

/// Hue in degrees [0, 360), saturation and intensity in [0, 1].
/// Achromatic pixels (including black) carry the convention value h = 0.
struct HsiPixel {
  double h = 0.0;
  double s = 0.0;
  double i = 0.0;

  friend bool operator==(const HsiPixel&, const HsiPixel&) = default;
};

class HsiImage {
 public:
  HsiImage() = default;
  HsiImage(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }

  HsiPixel& at(int row, int col) {
    assert(row >= 0 && row < height_ && col >= 0 && col < width_);
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }
  const HsiPixel& at(int row, int col) const {
    assert(row >= 0 && row < height_ && col >= 0 && col < width_);
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }

  friend bool operator==(const HsiImage&, const HsiImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<HsiPixel> pixels_;
};

/// Converts one RGB pixel to HSI over channel values normalized by 255.
///
/// I is the mean of the normalized channels. S is 1 - 3*min/(r+g+b), with
/// S = 0 for black. H is the inverse-cosine hue angle, completed to the full
/// circle as 360 - theta when b > g; achromatic input gives h = 0. Total
/// function, never throws.
HsiPixel rgb_to_hsi(RgbPixel p);

/// Per-pixel rgb_to_hsi over the whole image; dimensions preserved.
HsiImage convert_image(const RgbImage& img);

/// False-colour renderings for human inspection.
///   HueMap:    H scaled [0,360) -> [0,255] into a grayscale image.
///   Composite: (H/360, S, I) scaled to bytes into (R, G, B).
///   Panel:     grayscale H, S and I maps concatenated left to right
///              (output width is 3x input width).
enum class RenderMode { Panel, HueMap, Composite };

RenderMode parse_render_mode(std::string_view name);

RgbImage render_hsi(const HsiImage& img, RenderMode mode);

}  // namespace stegolab
