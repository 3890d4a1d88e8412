#pragma once

#include <span>
#include <string_view>

namespace gclab::cli {

/// Bumped whenever a preset row changes.
inline constexpr int kFigurePresetVersion = 1;

/// One plotted curve, in config-file syntax. Curves are numbered in the order
/// the figure legend lists them.
struct CurvePreset {
  int figure;
  int curve;
  std::string_view style;
  std::string_view state;
  std::string_view bath1;
  std::string_view bath2;
  /// Metric the figure plots; informational, every CSV carries all columns.
  std::string_view quantity;
};

std::span<const CurvePreset> figure_presets() noexcept;

inline constexpr double kFigureTmax = 3.0;
inline constexpr int kFigurePoints = 301;

}  // namespace gclab::cli
