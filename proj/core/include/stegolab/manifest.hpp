#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "stegolab/image.hpp"
#include "stegolab/image_io.hpp"

namespace stegolab {

/// One cover image known to the corpus. cover_id is unique per manifest and
/// doubles as the filename stem of the stego variants generated from it.
struct CoverRecord {
  std::string cover_id;
  std::filesystem::path path;
  std::string category;
  int width = 0;
  int height = 0;

  friend bool operator==(const CoverRecord&, const CoverRecord&) = default;
};

/// Ground-truth record for one generated stego file.
struct StegoRecord {
  std::string stego_path;  // usually relative to the manifest's directory
  std::string cover_id;
  std::string category;
  int bits = 0;
  int rows = 0;
  ChannelMask channels{Channel::R};
  std::string payload_spec;
  ImageFormat format = ImageFormat::Png;

  friend bool operator==(const StegoRecord&, const StegoRecord&) = default;
};

/// Ground truth binding every generated file to its embedding parameters.
/// Persisted as a header-bearing CSV with columns
/// stego_path,cover_id,category,bits,rows,channels,payload_spec,format.
class StegoManifest {
 public:
  std::vector<StegoRecord>& records() { return records_; }
  const std::vector<StegoRecord>& records() const { return records_; }

  const std::filesystem::path& base_dir() const { return base_dir_; }
  void set_base_dir(std::filesystem::path dir) { base_dir_ = std::move(dir); }

  /// Full path of a record's stego file; relative paths resolve against
  /// base_dir().
  std::filesystem::path resolved_path(const StegoRecord& record) const;

  void append(StegoRecord record) { records_.push_back(std::move(record)); }
  void append(const StegoManifest& other);

  /// Enforces the manifest invariants: unique stego paths and one record per
  /// (cover_id, bits, rows, channels) cell. Throws InvalidArgument.
  void validate() const;

  static StegoManifest read_csv(const std::filesystem::path& path);
  void write_csv(const std::filesystem::path& path) const;

  friend bool operator==(const StegoManifest& a, const StegoManifest& b) {
    return a.records_ == b.records_;
  }

 private:
  std::vector<StegoRecord> records_;
  std::filesystem::path base_dir_;
};

}  // namespace stegolab
