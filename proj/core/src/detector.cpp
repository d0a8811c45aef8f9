#include "stegolab/detector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "stegolab/error.hpp"
#include "stegolab/image_io.hpp"

namespace stegolab {

namespace {

constexpr double kContrastEpsilon = 1e-9;

double circular_hue_distance(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, 360.0 - d);
}

struct SeriesStats {
  double prefix_mean = 0.0;
  double suffix_mean = 0.0;
  double suffix_stddev = 0.0;
};

SeriesStats series_stats(const std::vector<double>& series, int k) {
  SeriesStats out;
  const int n = static_cast<int>(series.size());
  for (int i = 0; i < k; ++i) out.prefix_mean += series[i];
  out.prefix_mean /= k;
  for (int i = k; i < n; ++i) out.suffix_mean += series[i];
  out.suffix_mean /= (n - k);
  double var = 0.0;
  for (int i = k; i < n; ++i) {
    const double d = series[i] - out.suffix_mean;
    var += d * d;
  }
  out.suffix_stddev = std::sqrt(var / (n - k));
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string join_strings(const std::vector<std::string>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i];
  }
  return out;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& value, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double out = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return out;
  } catch (const std::exception&) {
    throw InvalidArgument("invalid value for " + key + ": '" + value + "'");
  }
}

void check_detectable(int width, int height,
                      const std::vector<int>& candidate_rows) {
  if (width < 2) {
    throw InvalidArgument("image too narrow for detection (width " +
                          std::to_string(width) + " < 2)");
  }
  const int max_k =
      *std::max_element(candidate_rows.begin(), candidate_rows.end());
  if (height <= max_k) {
    std::ostringstream msg;
    msg << "image height (" << height
        << ") must exceed the largest candidate prefix (" << max_k << ")";
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

RowProfile row_profile(const HsiImage& img) {
  if (img.width() < 2) {
    throw InvalidArgument("row profile requires width >= 2");
  }
  RowProfile profile;
  profile.hue.resize(img.height());
  profile.saturation.resize(img.height());
  profile.intensity.resize(img.height());

  for (int row = 0; row < img.height(); ++row) {
    double hue_sum = 0.0;
    int hue_pairs = 0;
    double sat_sum = 0.0;
    double int_sum = 0.0;
    for (int col = 0; col + 1 < img.width(); ++col) {
      const HsiPixel& a = img.at(row, col);
      const HsiPixel& b = img.at(row, col + 1);
      // Hue is a convention value on achromatic pixels, not signal.
      if (a.s > 0.0 && b.s > 0.0) {
        hue_sum += circular_hue_distance(a.h, b.h);
        ++hue_pairs;
      }
      sat_sum += std::fabs(a.s - b.s);
      int_sum += std::fabs(a.i - b.i);
    }
    const int pairs = img.width() - 1;
    profile.hue[row] = hue_pairs > 0 ? hue_sum / hue_pairs : 0.0;
    profile.saturation[row] = sat_sum / pairs;
    profile.intensity[row] = int_sum / pairs;
  }
  return profile;
}

void ComponentWeights::validate() const {
  if (hue < 0.0 || saturation < 0.0 || intensity < 0.0) {
    throw InvalidArgument("component weights must be nonnegative");
  }
  const double sum = hue + saturation + intensity;
  if (std::fabs(sum - 1.0) > 1e-6) {
    throw InvalidArgument("component weights must sum to 1, got " +
                          format_double(sum));
  }
}

void CalibrationModel::validate() const {
  if (!std::isfinite(tau) || tau < 0.0) {
    throw InvalidArgument("threshold tau must be finite and >= 0");
  }
  if (!(quantile > 0.0 && quantile < 1.0)) {
    throw InvalidArgument("calibration quantile must lie in (0, 1)");
  }
  weights.validate();
  if (candidate_rows.empty()) {
    throw InvalidArgument("candidate prefix list must not be empty");
  }
  std::set<int> seen;
  for (int k : candidate_rows) {
    if (k < 1) {
      throw InvalidArgument("candidate prefix lengths must be positive");
    }
    if (!seen.insert(k).second) {
      throw InvalidArgument("duplicate candidate prefix length " +
                            std::to_string(k));
    }
  }
}

ProfileContrast profile_contrast(const RowProfile& profile,
                                 const ComponentWeights& weights,
                                 const std::vector<int>& candidate_rows) {
  weights.validate();
  const int height = static_cast<int>(profile.rows());
  ProfileContrast best;
  for (int k : candidate_rows) {
    if (k < 1 || k >= height) continue;
    const SeriesStats h = series_stats(profile.hue, k);
    const SeriesStats s = series_stats(profile.saturation, k);
    const SeriesStats i = series_stats(profile.intensity, k);
    const double score =
        weights.hue * (h.prefix_mean - h.suffix_mean) /
            (h.suffix_stddev + kContrastEpsilon) +
        weights.saturation * (s.prefix_mean - s.suffix_mean) /
            (s.suffix_stddev + kContrastEpsilon) +
        weights.intensity * (i.prefix_mean - i.suffix_mean) /
            (i.suffix_stddev + kContrastEpsilon);
    if (score > best.statistic) {
      best.statistic = score;
      best.rows = k;
    }
  }
  return best;
}

DetectionReport detect(const RgbImage& img, const CalibrationModel& model) {
  model.validate();
  check_detectable(img.width(), img.height(), model.candidate_rows);

  DetectionReport report;
  report.threshold = model.tau;
  report.profile = row_profile(convert_image(img));
  const ProfileContrast best =
      profile_contrast(report.profile, model.weights, model.candidate_rows);
  report.statistic = best.statistic;
  report.verdict =
      report.statistic > model.tau ? Verdict::Stego : Verdict::Cover;
  report.estimated_rows = report.verdict == Verdict::Stego ? best.rows : 0;
  return report;
}

double detect_statistic(const RgbImage& img, const CalibrationModel& model) {
  check_detectable(img.width(), img.height(), model.candidate_rows);
  const RowProfile profile = row_profile(convert_image(img));
  return profile_contrast(profile, model.weights, model.candidate_rows)
      .statistic;
}

double empirical_quantile(std::vector<double> values, double q) {
  if (values.empty()) {
    throw InvalidArgument("cannot take a quantile of no values");
  }
  if (!(q > 0.0 && q < 1.0)) {
    throw InvalidArgument("quantile must lie in (0, 1)");
  }
  std::sort(values.begin(), values.end());
  const double rank = std::ceil(q * static_cast<double>(values.size()));
  const std::size_t index = std::min(
      values.size() - 1,
      static_cast<std::size_t>(std::max(1.0, rank)) - 1);
  return values[index];
}

CalibrationModel calibrate(const std::vector<RgbImage>& covers,
                           const CalibrationOptions& options) {
  if (covers.size() < 10) {
    throw InvalidArgument("calibration requires at least 10 covers, got " +
                          std::to_string(covers.size()));
  }
  if (!options.cover_ids.empty() &&
      options.cover_ids.size() != covers.size()) {
    throw InvalidArgument("cover id list does not match cover count");
  }

  CalibrationModel model;
  model.quantile = options.quantile;
  model.weights = options.weights;
  model.candidate_rows = options.candidate_rows;
  model.calibration_covers = options.cover_ids;
  model.tau = 0.0;
  model.validate();

  std::vector<double> statistics;
  statistics.reserve(covers.size());
  for (const RgbImage& cover : covers) {
    statistics.push_back(detect_statistic(cover, model));
  }
  model.tau = empirical_quantile(std::move(statistics), options.quantile);
  return model;
}

std::string verdict_name(Verdict v) {
  return v == Verdict::Stego ? "stego" : "cover";
}

// ---------------------------------------------------------------------------
// Model file: one key = value per line, '#' comments
// ---------------------------------------------------------------------------

void CalibrationModel::save(const std::filesystem::path& path) const {
  validate();
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot create model file " + path.string());
  out << "# stegolab calibration model\n";
  out << "tau = " << format_double(tau) << '\n';
  out << "quantile = " << format_double(quantile) << '\n';
  out << "weight_hue = " << format_double(weights.hue) << '\n';
  out << "weight_saturation = " << format_double(weights.saturation) << '\n';
  out << "weight_intensity = " << format_double(weights.intensity) << '\n';
  out << "candidate_rows = " << join_ints(candidate_rows) << '\n';
  if (!calibration_covers.empty()) {
    out << "calibration_covers = " << join_strings(calibration_covers) << '\n';
  }
  if (!out) throw IoError("write failed for model file " + path.string());
}

CalibrationModel CalibrationModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file " + path.string());

  CalibrationModel model;
  model.candidate_rows.clear();
  bool have_tau = false;

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto first = s.find_first_not_of(" \t");
      if (first == std::string::npos) return std::string();
      const auto last = s.find_last_not_of(" \t");
      return s.substr(first, last - first + 1);
    };
    if (trim(line).empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw DecodeError("malformed model line in " + path.string() + ": " +
                        line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "tau") {
      model.tau = parse_double(value, key);
      have_tau = true;
    } else if (key == "quantile") {
      model.quantile = parse_double(value, key);
    } else if (key == "weight_hue") {
      model.weights.hue = parse_double(value, key);
    } else if (key == "weight_saturation") {
      model.weights.saturation = parse_double(value, key);
    } else if (key == "weight_intensity") {
      model.weights.intensity = parse_double(value, key);
    } else if (key == "candidate_rows") {
      for (const std::string& item : split_list(value)) {
        model.candidate_rows.push_back(
            static_cast<int>(parse_double(item, key)));
      }
    } else if (key == "calibration_covers") {
      model.calibration_covers = split_list(value);
    } else {
      throw DecodeError("unknown model key '" + key + "' in " + path.string());
    }
  }
  if (!have_tau) {
    throw DecodeError("model file missing tau: " + path.string());
  }
  if (model.candidate_rows.empty()) {
    model.candidate_rows = kDefaultCandidateRows;
  }
  model.validate();
  return model;
}

std::vector<std::filesystem::path> inspect(const RgbImage& img,
                                           const std::filesystem::path& out_dir,
                                           const std::string& stem) {
  if (stem.empty()) throw InvalidArgument("inspect stem must not be empty");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + out_dir.string() + ": " +
                  ec.message());
  }

  const HsiImage hsi = convert_image(img);
  const std::vector<std::pair<std::string, RgbImage>> outputs = {
      {stem + "_rgb.png", img},
      {stem + "_hue_map.png", render_hsi(hsi, RenderMode::HueMap)},
      {stem + "_composite.png", render_hsi(hsi, RenderMode::Composite)},
      {stem + "_panel.png", render_hsi(hsi, RenderMode::Panel)},
  };

  std::vector<std::filesystem::path> paths;
  paths.reserve(outputs.size());
  for (const auto& [name, image] : outputs) {
    const std::filesystem::path path = out_dir / name;
    save_image(image, path, ImageFormat::Png);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace stegolab
