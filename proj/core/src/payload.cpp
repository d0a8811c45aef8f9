#include "stegolab/payload.hpp"

#include <charconv>

#include "stegolab/error.hpp"

namespace stegolab {

PayloadSource PayloadSource::from_text(std::string bytes) {
  if (bytes.empty()) {
    throw InvalidArgument("text payload must contain at least one byte");
  }
  PayloadSource src;
  src.kind_ = Kind::Text;
  src.text_ = std::move(bytes);
  return src;
}

PayloadSource PayloadSource::from_seed(std::uint64_t seed) {
  PayloadSource src;
  src.kind_ = Kind::Seed;
  src.seed_ = seed;
  return src;
}

PayloadSource PayloadSource::parse(std::string_view spec) {
  constexpr std::string_view text_prefix = "text:";
  constexpr std::string_view seed_prefix = "seed:";
  if (spec.starts_with(text_prefix)) {
    return from_text(std::string(spec.substr(text_prefix.size())));
  }
  if (spec.starts_with(seed_prefix)) {
    const std::string_view digits = spec.substr(seed_prefix.size());
    std::uint64_t seed = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() ||
        digits.empty()) {
      throw InvalidArgument("invalid payload seed '" + std::string(digits) +
                            "'");
    }
    return from_seed(seed);
  }
  throw InvalidArgument("invalid payload spec '" + std::string(spec) +
                        "' (expected text:<bytes> or seed:<number>)");
}

std::string PayloadSource::spec() const {
  if (kind_ == Kind::Text) return "text:" + text_;
  return "seed:" + std::to_string(seed_);
}

PayloadStream PayloadSource::stream() const { return PayloadStream(*this); }

PayloadStream::PayloadStream(const PayloadSource& source)
    : kind_(source.kind_), text_(source.text_), rng_(source.seed_) {}

int PayloadStream::next_bit() {
  if (bits_left_ == 0) {
    if (kind_ == PayloadSource::Kind::Text) {
      word_ = static_cast<std::uint8_t>(text_[byte_pos_]);
      byte_pos_ = (byte_pos_ + 1) % text_.size();
      bits_left_ = 8;
    } else {
      word_ = rng_();
      bits_left_ = 64;
    }
  }
  --bits_left_;
  return static_cast<int>((word_ >> bits_left_) & 1u);
}

std::uint32_t PayloadStream::next_bits(int n) {
  if (n < 1 || n > 32) throw InvalidArgument("bit group size must be 1..32");
  std::uint32_t value = 0;
  for (int k = 0; k < n; ++k) {
    value = (value << 1) | static_cast<std::uint32_t>(next_bit());
  }
  return value;
}

std::vector<std::uint8_t> PayloadStream::take(std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (std::size_t k = 0; k < n; ++k) {
    bits[k] = static_cast<std::uint8_t>(next_bit());
  }
  return bits;
}

}  // namespace stegolab
