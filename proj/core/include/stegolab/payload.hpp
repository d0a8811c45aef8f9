#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace stegolab {

/// Seed used when no payload is specified. Fixed so that generated corpora
/// are reproducible run to run.
inline constexpr std::uint64_t kDefaultPayloadSeed = 0xC0FFEE;

class PayloadStream;

/// Deterministic specification of the bit stream written into a carrier:
/// either an explicit byte sequence repeated cyclically, or a seeded
/// pseudorandom stream. Equal specifications always yield equal bitstreams.
class PayloadSource {
 public:
  static PayloadSource from_text(std::string bytes);
  static PayloadSource from_seed(std::uint64_t seed);

  /// Parses "text:<bytes>" or "seed:<decimal>".
  static PayloadSource parse(std::string_view spec);

  /// Round-trippable form accepted by parse(); recorded in manifests.
  std::string spec() const;

  PayloadStream stream() const;

  friend bool operator==(const PayloadSource&, const PayloadSource&) = default;

 private:
  enum class Kind { Text, Seed };
  Kind kind_ = Kind::Seed;
  std::string text_;
  std::uint64_t seed_ = kDefaultPayloadSeed;

  friend class PayloadStream;
};

/// Endless bit stream over a PayloadSource. Bits come MSB-first out of each
/// payload byte (or each 64-bit generator word for seeded streams).
class PayloadStream {
 public:
  explicit PayloadStream(const PayloadSource& source);

  int next_bit();

  /// Next n bits (1..32) packed into an unsigned value, first bit highest.
  std::uint32_t next_bits(int n);

  /// Next n bits as individual 0/1 bytes.
  std::vector<std::uint8_t> take(std::size_t n);

 private:
  PayloadSource::Kind kind_;
  std::string text_;
  std::size_t byte_pos_ = 0;
  std::mt19937_64 rng_;
  std::uint64_t word_ = 0;
  int bits_left_ = 0;
};

}  // namespace stegolab
