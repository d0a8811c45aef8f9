#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "stegolab/hsi.hpp"
#include "stegolab/image.hpp"

namespace stegolab {

/// Per-row roughness of an HSI image. For each row: the mean absolute
/// circular hue difference between horizontally adjacent pixels (degrees,
/// pairs with an achromatic endpoint excluded), and the mean absolute
/// adjacent difference of S and of I.
struct RowProfile {
  std::vector<double> hue;
  std::vector<double> saturation;
  std::vector<double> intensity;

  std::size_t rows() const { return hue.size(); }
};

/// Requires width >= 2. Entries are >= 0; hue roughness is <= 180.
RowProfile row_profile(const HsiImage& img);

/// Relative contribution of the H, S and I roughness contrasts to the
/// decision statistic. Nonnegative, summing to 1.
struct ComponentWeights {
  double hue = 0.6;
  double saturation = 0.2;
  double intensity = 0.2;

  void validate() const;

  friend bool operator==(const ComponentWeights&,
                         const ComponentWeights&) = default;
};

inline const std::vector<int> kDefaultCandidateRows = {1, 2, 5, 10, 20, 40};

/// Calibrated decision model: verdict is stego when the prefix-contrast
/// statistic exceeds tau. Serializes to a key = value text file.
struct CalibrationModel {
  double tau = 0.0;
  double quantile = 0.99;
  ComponentWeights weights;
  std::vector<int> candidate_rows = kDefaultCandidateRows;
  std::vector<std::string> calibration_covers;  // optional, for split checks

  void validate() const;

  static CalibrationModel load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  friend bool operator==(const CalibrationModel&,
                         const CalibrationModel&) = default;
};

enum class Verdict { Cover, Stego };

std::string verdict_name(Verdict v);

struct DetectionReport {
  Verdict verdict = Verdict::Cover;
  double statistic = 0.0;
  double threshold = 0.0;
  int estimated_rows = 0;  // 0 when verdict is Cover
  RowProfile profile;
};

/// Best prefix/suffix roughness contrast over the candidate prefix lengths.
/// For each candidate k < height, each component's contrast is
/// (mean roughness of rows [0,k) - mean of rows [k,h)) / (stddev of rows
/// [k,h) + epsilon); the weighted sum is the candidate's score. statistic is
/// the best positive score (0 when none is positive) and rows the k that
/// achieved it (0 when statistic is 0).
struct ProfileContrast {
  double statistic = 0.0;
  int rows = 0;
};

ProfileContrast profile_contrast(const RowProfile& profile,
                                 const ComponentWeights& weights,
                                 const std::vector<int>& candidate_rows);

/// Converts to HSI, profiles the rows, and scores the prefix contrast.
/// Verdict is Stego exactly when statistic > model.tau. Requires width >= 2
/// and height greater than the largest candidate prefix.
DetectionReport detect(const RgbImage& img, const CalibrationModel& model);

/// detect's statistic without a threshold; used for calibration.
double detect_statistic(const RgbImage& img, const CalibrationModel& model);

struct CalibrationOptions {
  double quantile = 0.99;
  ComponentWeights weights;
  std::vector<int> candidate_rows = kDefaultCandidateRows;
  std::vector<std::string> cover_ids;  // recorded in the model when given
};

/// Scores every cover and sets tau to the empirical quantile of the scores.
/// Requires at least 10 covers and 0 < quantile < 1.
CalibrationModel calibrate(const std::vector<RgbImage>& covers,
                           const CalibrationOptions& options = {});

/// Sorted-order empirical quantile: the ceil(q*n)-th smallest value.
double empirical_quantile(std::vector<double> values, double q);

/// Writes the RGB original plus the three HSI renders of img into out_dir
/// as <stem>_rgb.png, <stem>_hue_map.png, <stem>_composite.png and
/// <stem>_panel.png for side-by-side visual inspection. Returns the paths.
std::vector<std::filesystem::path> inspect(const RgbImage& img,
                                           const std::filesystem::path& out_dir,
                                           const std::string& stem);

}  // namespace stegolab
