// MovieLens 100k adapter: loads u.user / u.item / u.data and applies the
// preprocessing used throughout the experiments (single-genre collapse,
// release year or decade, binary rating relation).
#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "gram/discretize.hpp"
#include "gram/model.hpp"

namespace gram {

enum class YearMode { decade, raw_year };
enum class AgeMode { manual_grouplens, automatic };

struct MovieLensOptions {
    std::filesystem::path data_dir;  // containing u.user, u.item, u.data
    AgeMode age_mode = AgeMode::automatic;
    YearMode year_mode = YearMode::raw_year;
};

struct MovieLensLoad {
    Mmer mmer;
    std::size_t excluded_movies = 0;    // missing/unparsable release date
    std::size_t excluded_pairs = 0;     // ratings referencing excluded movies
    std::size_t duplicate_pairs = 0;    // repeated (user, movie) rating lines
    std::size_t raw_rating_lines = 0;
    double max_age = 0.0;               // observed, for the manual age chain
    std::vector<std::string> warnings;
};

// User system: age (numeric), gender, occupation. Movie system: releaseYear
// (numeric) or decade (nominal) plus a single collapsed genre. Relation: the
// set of (user, movie) rating pairs, magnitudes discarded.
MovieLensLoad load_movielens(const MovieLensOptions& options);

// Genre flag columns of u.item, in file order.
inline constexpr std::size_t kGenreFlagCount = 19;
extern const std::array<const char*, kGenreFlagCount> kGenreLabels;

// The single highest-priority genre among the set flags; "Unknown" when none
// are set. Genres missing from the priority list rank below every listed one.
std::string collapse_genre(const std::array<bool, kGenreFlagCount>& flags);

// Manual age boundaries {0, 18, 25, 30, 35, 45, 56, max_age}; max_age stands
// in for the open-ended last bin and must exceed 56.
BoundaryChain grouplens_age_chain(double max_age);

// Year 1993 -> "1990s".
std::string decade_label(int year);

}  // namespace gram
