#include "stegolab/image.hpp"

#include <sstream>

#include "stegolab/error.hpp"

namespace stegolab {

std::uint8_t& channel_ref(RgbPixel& p, Channel c) {
  switch (c) {
    case Channel::R: return p.r;
    case Channel::G: return p.g;
    default: return p.b;
  }
}

std::uint8_t channel_value(const RgbPixel& p, Channel c) {
  switch (c) {
    case Channel::R: return p.r;
    case Channel::G: return p.g;
    default: return p.b;
  }
}

char channel_letter(Channel c) {
  switch (c) {
    case Channel::R: return 'R';
    case Channel::G: return 'G';
    default: return 'B';
  }
}

RgbImage::RgbImage(int width, int height, RgbPixel fill)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    std::ostringstream msg;
    msg << "image dimensions must be at least 1x1, got " << width << "x"
        << height;
    throw InvalidArgument(msg.str());
  }
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

ChannelMask::ChannelMask(std::uint8_t bits) : bits_(bits) {
  if (bits_ == 0 || bits_ > 0b111) {
    throw InvalidArgument("channel mask must be a non-empty subset of RGB");
  }
}

ChannelMask::ChannelMask(std::initializer_list<Channel> channels)
    : ChannelMask([&] {
        std::uint8_t bits = 0;
        for (Channel c : channels) bits |= std::uint8_t(1u << static_cast<int>(c));
        return bits;
      }()) {}

ChannelMask ChannelMask::parse(std::string_view token) {
  std::uint8_t bits = 0;
  for (char ch : token) {
    int bit;
    switch (ch) {
      case 'R': bit = 0; break;
      case 'G': bit = 1; break;
      case 'B': bit = 2; break;
      default:
        throw InvalidArgument("invalid channel token '" + std::string(token) +
                              "': expected letters from RGB");
    }
    if (bits & (1u << bit)) {
      throw InvalidArgument("invalid channel token '" + std::string(token) +
                            "': duplicate letter");
    }
    bits |= std::uint8_t(1u << bit);
  }
  if (bits == 0) {
    throw InvalidArgument("channel token must name at least one channel");
  }
  return ChannelMask(bits);
}

const std::vector<ChannelMask>& ChannelMask::all() {
  static const std::vector<ChannelMask> masks = {
      ChannelMask{Channel::R},
      ChannelMask{Channel::G},
      ChannelMask{Channel::B},
      ChannelMask{Channel::R, Channel::G},
      ChannelMask{Channel::R, Channel::B},
      ChannelMask{Channel::G, Channel::B},
      ChannelMask{Channel::R, Channel::G, Channel::B},
  };
  return masks;
}

int ChannelMask::count() const {
  return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1);
}

std::string ChannelMask::name() const {
  std::string out;
  for (Channel c : {Channel::R, Channel::G, Channel::B}) {
    if (has(c)) out += channel_letter(c);
  }
  return out;
}

std::vector<PixelDelta> pixel_diff(const RgbImage& a, const RgbImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    std::ostringstream msg;
    msg << "pixel_diff dimension mismatch: " << a.width() << "x" << a.height()
        << " vs " << b.width() << "x" << b.height();
    throw InvalidArgument(msg.str());
  }
  std::vector<PixelDelta> diffs;
  for (int row = 0; row < a.height(); ++row) {
    for (int col = 0; col < a.width(); ++col) {
      const RgbPixel& pa = a.at(row, col);
      const RgbPixel& pb = b.at(row, col);
      for (Channel c : {Channel::R, Channel::G, Channel::B}) {
        const int delta = int(channel_value(pb, c)) - int(channel_value(pa, c));
        if (delta != 0) diffs.push_back({row, col, c, delta});
      }
    }
  }
  return diffs;
}

}  // namespace stegolab
