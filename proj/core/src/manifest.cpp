#include "stegolab/manifest.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <tuple>

#include "csv.hpp"
#include "stegolab/error.hpp"

namespace stegolab {

namespace detail {

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      if (!current.empty()) {
        throw InvalidArgument("malformed CSV quoting in: " + std::string(line));
      }
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
    ++i;
  }
  if (quoted) {
    throw InvalidArgument("unterminated CSV quote in: " + std::string(line));
  }
  fields.push_back(std::move(current));
  return fields;
}

std::string csv_join(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(fields[i]);
  }
  return line;
}

}  // namespace detail

namespace {

constexpr std::string_view kManifestHeader =
    "stego_path,cover_id,category,bits,rows,channels,payload_spec,format";

int parse_int_field(const std::string& value, const char* what) {
  int out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw InvalidArgument(std::string("invalid ") + what +
                          " in manifest: '" + value + "'");
  }
  return out;
}

}  // namespace

std::filesystem::path StegoManifest::resolved_path(
    const StegoRecord& record) const {
  const std::filesystem::path p(record.stego_path);
  return p.is_absolute() || base_dir_.empty() ? p : base_dir_ / p;
}

void StegoManifest::append(const StegoManifest& other) {
  records_.insert(records_.end(), other.records_.begin(),
                  other.records_.end());
}

void StegoManifest::validate() const {
  std::set<std::string> paths;
  std::set<std::tuple<std::string, int, int, std::string>> cells;
  for (const StegoRecord& r : records_) {
    if (!paths.insert(r.stego_path).second) {
      throw InvalidArgument("duplicate stego path in manifest: " +
                            r.stego_path);
    }
    if (!cells.insert({r.cover_id, r.bits, r.rows, r.channels.name()})
             .second) {
      throw InvalidArgument("duplicate grid cell in manifest for cover " +
                            r.cover_id);
    }
  }
}

StegoManifest StegoManifest::read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());

  std::string line;
  if (!std::getline(in, line)) {
    throw DecodeError("manifest is empty: " + path.string());
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kManifestHeader) {
    throw DecodeError("unexpected manifest header in " + path.string());
  }

  StegoManifest manifest;
  manifest.set_base_dir(path.parent_path());
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = detail::csv_split(line);
    if (f.size() != 8) {
      throw DecodeError("manifest row has " + std::to_string(f.size()) +
                        " fields, expected 8: " + line);
    }
    StegoRecord record;
    record.stego_path = f[0];
    record.cover_id = f[1];
    record.category = f[2];
    record.bits = parse_int_field(f[3], "bits");
    record.rows = parse_int_field(f[4], "rows");
    record.channels = ChannelMask::parse(f[5]);
    record.payload_spec = f[6];
    record.format = parse_format(f[7]);
    manifest.append(std::move(record));
  }
  manifest.validate();
  return manifest;
}

void StegoManifest::write_csv(const std::filesystem::path& path) const {
  validate();
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot create manifest " + path.string());
  out << kManifestHeader << '\n';
  for (const StegoRecord& r : records_) {
    out << detail::csv_join({r.stego_path, r.cover_id, r.category,
                             std::to_string(r.bits), std::to_string(r.rows),
                             r.channels.name(), r.payload_spec,
                             format_name(r.format)})
        << '\n';
  }
  if (!out) throw IoError("write failed for manifest " + path.string());
}

}  // namespace stegolab
