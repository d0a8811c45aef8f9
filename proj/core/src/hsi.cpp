#include "stegolab/hsi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stegolab/error.hpp"

namespace stegolab {

namespace {

std::uint8_t scale_to_byte(double unit) {
  return static_cast<std::uint8_t>(std::lround(unit * 255.0));
}

std::uint8_t hue_to_byte(double h) {
  return static_cast<std::uint8_t>(
      std::min(255L, std::lround(h * 255.0 / 360.0)));
}

}  // namespace

HsiImage::HsiImage(int width, int height) : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw InvalidArgument("HSI image dimensions must be at least 1x1");
  }
  pixels_.assign(static_cast<std::size_t>(width) * height, HsiPixel{});
}

HsiPixel rgb_to_hsi(RgbPixel p) {
  const double r = p.r / 255.0;
  const double g = p.g / 255.0;
  const double b = p.b / 255.0;
  const double sum = r + g + b;
  const double intensity = sum / 3.0;

  // r = g = b makes the hue denominator vanish and forces S to 0; return the
  // achromatic convention directly so both hold exactly.
  if (p.r == p.g && p.g == p.b) {
    return {0.0, 0.0, intensity};
  }

  const double mn = std::min({r, g, b});
  const double saturation = 1.0 - 3.0 * mn / sum;

  const double num = 0.5 * ((r - g) + (r - b));
  const double den = std::sqrt((r - g) * (r - g) + (r - b) * (g - b));
  const double ratio = std::clamp(num / den, -1.0, 1.0);
  const double theta = std::acos(ratio) * (180.0 / std::numbers::pi);
  double hue = (p.b <= p.g) ? theta : 360.0 - theta;
  if (hue >= 360.0) hue = 0.0;

  return {hue, saturation, intensity};
}

HsiImage convert_image(const RgbImage& img) {
  if (img.empty()) throw InvalidArgument("cannot convert an empty image");
  HsiImage out(img.width(), img.height());
  for (int row = 0; row < img.height(); ++row) {
    for (int col = 0; col < img.width(); ++col) {
      out.at(row, col) = rgb_to_hsi(img.at(row, col));
    }
  }
  return out;
}

RenderMode parse_render_mode(std::string_view name) {
  if (name == "panel") return RenderMode::Panel;
  if (name == "hue_map") return RenderMode::HueMap;
  if (name == "composite") return RenderMode::Composite;
  throw InvalidArgument("unknown render mode '" + std::string(name) +
                        "' (expected panel, hue_map or composite)");
}

RgbImage render_hsi(const HsiImage& img, RenderMode mode) {
  if (img.width() < 1 || img.height() < 1) {
    throw InvalidArgument("cannot render an empty HSI image");
  }
  switch (mode) {
    case RenderMode::HueMap: {
      RgbImage out(img.width(), img.height());
      for (int row = 0; row < img.height(); ++row) {
        for (int col = 0; col < img.width(); ++col) {
          const std::uint8_t v = hue_to_byte(img.at(row, col).h);
          out.at(row, col) = {v, v, v};
        }
      }
      return out;
    }
    case RenderMode::Composite: {
      RgbImage out(img.width(), img.height());
      for (int row = 0; row < img.height(); ++row) {
        for (int col = 0; col < img.width(); ++col) {
          const HsiPixel& p = img.at(row, col);
          out.at(row, col) = {hue_to_byte(p.h), scale_to_byte(p.s),
                              scale_to_byte(p.i)};
        }
      }
      return out;
    }
    case RenderMode::Panel: {
      const int w = img.width();
      RgbImage out(3 * w, img.height());
      for (int row = 0; row < img.height(); ++row) {
        for (int col = 0; col < w; ++col) {
          const HsiPixel& p = img.at(row, col);
          const std::uint8_t h = hue_to_byte(p.h);
          const std::uint8_t s = scale_to_byte(p.s);
          const std::uint8_t i = scale_to_byte(p.i);
          out.at(row, col) = {h, h, h};
          out.at(row, col + w) = {s, s, s};
          out.at(row, col + 2 * w) = {i, i, i};
        }
      }
      return out;
    }
  }
  throw InvalidArgument("unknown render mode");
}

}  // namespace stegolab
