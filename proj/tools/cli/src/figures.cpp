#include "gclab/cli/figures.hpp"

#include <array>

namespace gclab::cli {
namespace {

// Published curve parameters. The mu1 = 4 curves of figures 3 and 4 and the a = 1
// state of figure 6 are printed as given; they fail validation and get skipped.
constexpr std::array kPresets{
    CurvePreset{1, 1, "solid", "sf 2 1 1 -1", "mu 1/2 0 0", "mu 1/2 0 0", "log_negativity"},
    CurvePreset{1, 2, "dashed", "sf 2 1 1 -1", "mu 1/2 0 0", "mu 1/6 0 0", "log_negativity"},
    CurvePreset{1, 3, "dot-dashed", "sf 2 1 1 -1", "mu 1/6 0 0", "mu 1/2 0 0", "log_negativity"},
    CurvePreset{1, 4, "dotted", "sf 2 1 1 -1", "mu 1/2 1 0", "mu 1/2 1 0", "log_negativity"},

    CurvePreset{2, 1, "solid", "sf 1.5 1.5 1.2 -1.4", "mu 1/2 0 0", "mu 1/2 0 0", "log_negativity"},
    CurvePreset{2, 2, "dashed", "sf 1.5 1.5 1.2 -1.4", "mu 1/4 0 0", "mu 1/4 0 0", "log_negativity"},
    CurvePreset{2, 3, "dot-dashed", "sf 1.5 1.5 1.2 -1.4", "mu 1/2 1 0", "mu 1/2 1 0", "log_negativity"},
    CurvePreset{2, 4, "dotted", "sf 1.5 1.5 1.2 -1.4", "mu 1/2 0 0", "mu 1/2 1.5 0", "log_negativity"},

    CurvePreset{3, 1, "solid", "sqth 1 1", "mu 1/2 0 0", "mu 1/2 0 0", "log_negativity"},
    CurvePreset{3, 2, "dashed", "sqth 1 1", "mu 4 0 0", "mu 1 0 0", "log_negativity"},
    CurvePreset{3, 3, "dot-dashed", "sqth 1 1", "mu 1/2 1 0", "mu 1/2 1 0", "log_negativity"},
    CurvePreset{3, 4, "dotted", "sqth 1 1", "mu 1/2 1 0", "mu 1/2 1 pi/4", "log_negativity"},

    CurvePreset{4, 1, "solid", "sqth 1/9 1", "mu 1/2 0 0", "mu 1/2 0 0", "log_negativity"},
    CurvePreset{4, 2, "dashed", "sqth 1/9 1", "mu 4 0 0", "mu 1 0 0", "log_negativity"},
    CurvePreset{4, 3, "dot-dashed", "sqth 1/9 1", "mu 1/2 1 0", "mu 1/2 1 0", "log_negativity"},
    CurvePreset{4, 4, "dotted", "sqth 1/9 1", "mu 1/2 1 0", "mu 1/2 1 pi/4", "log_negativity"},

    CurvePreset{5, 1, "solid", "sqth 1 1", "mu 1/2 0 0", "mu 1/2 0 0", "purity"},
    CurvePreset{5, 2, "dashed", "sqth 1 1", "mu 1/2 1 0", "mu 1/2 1 0", "purity"},
    CurvePreset{5, 3, "dot-dashed", "sqth 1/9 1", "mu 1/2 0 0", "mu 1/2 0 0", "purity"},
    CurvePreset{5, 4, "dotted", "sqth 1/9 1", "mu 1/2 1 0", "mu 1/2 1 0", "purity"},

    CurvePreset{6, 1, "solid", "sf 1 1 1 -1", "mu 1/3 0 0", "mu 1/3 0 0", "von_neumann_entropy"},
    CurvePreset{6, 2, "dashed", "sqth 1 1", "mu 1/3 0 0", "mu 1/3 0 0", "von_neumann_entropy"},
    CurvePreset{6, 3, "dot-dashed", "sqth 1/16 1", "mu 1/3 0 0", "mu 1/3 0 0", "von_neumann_entropy"},
    CurvePreset{6, 4, "dotted", "sf 2 2 1.5 -1.5", "mu 1/3 0 0", "mu 1/3 0 0", "von_neumann_entropy"},

    CurvePreset{7, 1, "solid", "sqth 1 1", "mu 1/3 0 0", "mu 1/3 0 0", "mutual_information"},
    CurvePreset{7, 2, "dotted", "sqth 1 1", "mu 1/3 1 0", "mu 1/3 1 0", "mutual_information"},
    CurvePreset{7, 3, "dashed", "sqth 1/16 1", "mu 1/3 0 0", "mu 1/3 0 0", "mutual_information"},
    CurvePreset{7, 4, "dot-dashed", "sqth 1/16 1", "mu 1/3 1 0", "mu 1/3 1 0", "mutual_information"},

    CurvePreset{8, 1, "solid", "sf 2 1 1 -1", "mu 1/3 0 0", "mu 1/3 0 0", "mutual_information"},
    CurvePreset{8, 2, "dotted", "sf 2 1 1 -1", "mu 1/3 1 0", "mu 1/3 1 0", "mutual_information"},
    CurvePreset{8, 3, "dashed", "sf 2 2 1.5 -1.5", "mu 1/3 0 0", "mu 1/3 0 0", "mutual_information"},
    CurvePreset{8, 4, "dot-dashed", "sf 2 2 1.5 -1.5", "mu 1/3 1 0", "mu 1/3 1 0", "mutual_information"},
};

}  // namespace

std::span<const CurvePreset> figure_presets() noexcept { return kPresets; }

}  // namespace gclab::cli
