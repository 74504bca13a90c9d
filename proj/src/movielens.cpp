// MovieLens 100k adapter. Reads the raw u.user / u.item / u.data files and
// builds the two-table system used by the experiments: users with age,
// gender and occupation; movies with a release year (or decade) and a single
// collapsed genre; the rating pairs as a binary relation.
#include "gram/movielens.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gram/errors.hpp"

namespace gram {

namespace {

std::string location(const std::filesystem::path& path, std::size_t line) {
    return path.filename().string() + ":" + std::to_string(line);
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delim, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

// Calls fn(fields, line_no) for every non-empty line. These files have no
// header row.
template <typename Fn>
void for_each_row(const std::filesystem::path& path, char delim, std::size_t field_count, Fn fn) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split(line, delim);
        if (fields.size() != field_count)
            throw DataError(location(path, line_no) + ": expected " +
                            std::to_string(field_count) + " fields, got " +
                            std::to_string(fields.size()));
        fn(fields, line_no);
    }
}

double parse_number(std::string_view token, const std::string& where) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = first + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw DataError(where + ": bad number '" + std::string(token) + "'");
    return value;
}

// "01-Jan-1995" -> 1995; empty or malformed dates return 0 (movie excluded).
int release_year(std::string_view date) {
    if (date.empty()) return 0;
    const std::size_t dash = date.rfind('-');
    const std::string_view tail = dash == std::string_view::npos ? date : date.substr(dash + 1);
    if (tail.size() != 4) return 0;
    int year = 0;
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), year);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || year <= 0) return 0;
    return year;
}

// Priority rank per u.item flag position; lower wins. Genres absent from the
// priority list sit in a block after every listed genre; the unknown flag is
// last and only wins when nothing else is set.
constexpr std::array<int, kGenreFlagCount> kGenreRank = {
    99,  // unknown
    1,   // Action
    4,   // Adventure
    13,  // Animation
    5,   // Children
    0,   // Comedy
    6,   // Crime
    12,  // Documentary
    50,  // Drama (unlisted)
    16,  // Fantasy
    15,  // Film-Noir
    8,   // Horror
    11,  // Musical
    10,  // Mystery
    3,   // Romance
    7,   // Sci-Fi
    2,   // Thriller
    9,   // War
    14,  // Western
};

}  // namespace

const std::array<const char*, kGenreFlagCount> kGenreLabels = {
    "Unknown", "Action",    "Adventure", "Animation", "Children", "Comedy",   "Crime",
    "Documentary", "Drama", "Fantasy",   "Film-Noir", "Horror",   "Musical",  "Mystery",
    "Romance", "Sci-Fi",    "Thriller",  "War",       "Western"};

std::string collapse_genre(const std::array<bool, kGenreFlagCount>& flags) {
    std::size_t best = kGenreFlagCount;
    for (std::size_t i = 0; i < kGenreFlagCount; ++i) {
        if (!flags[i]) continue;
        if (best == kGenreFlagCount || kGenreRank[i] < kGenreRank[best]) best = i;
    }
    return best == kGenreFlagCount ? "Unknown" : kGenreLabels[best];
}

BoundaryChain grouplens_age_chain(double max_age) {
    if (!(max_age > 56)) throw ParamError("maximum age must exceed 56");
    return BoundaryChain{{0, 18, 25, 30, 35, 45, 56, max_age}};
}

std::string decade_label(int year) {
    return std::to_string(year / 10 * 10) + "s";
}

MovieLensLoad load_movielens(const MovieLensOptions& options) {
    std::vector<std::string> user_ids;
    std::vector<AttributeValue> ages, genders, occupations;
    std::map<std::string, std::size_t> user_index;
    for_each_row(options.data_dir / "u.user", '|', 5,
                 [&](const std::vector<std::string>& f, std::size_t line_no) {
                     const std::string where = location(options.data_dir / "u.user", line_no);
                     if (!user_index.emplace(f[0], user_ids.size()).second)
                         throw DataError(where + ": duplicate user id '" + f[0] + "'");
                     user_ids.push_back(f[0]);
                     ages.emplace_back(Numeric{parse_number(f[1], where)});
                     genders.emplace_back(Nominal{f[2]});
                     occupations.emplace_back(Nominal{f[3]});
                 });

    std::vector<std::string> movie_ids;
    std::vector<int> years;
    std::vector<AttributeValue> genres;
    std::map<std::string, std::size_t> movie_index;
    std::size_t excluded_movies = 0;
    std::vector<std::string> excluded_ids;
    for_each_row(options.data_dir / "u.item", '|', 5 + kGenreFlagCount,
                 [&](const std::vector<std::string>& f, std::size_t line_no) {
                     const std::string where = location(options.data_dir / "u.item", line_no);
                     if (movie_index.count(f[0]) || std::find(excluded_ids.begin(),
                                                              excluded_ids.end(),
                                                              f[0]) != excluded_ids.end())
                         throw DataError(where + ": duplicate movie id '" + f[0] + "'");
                     const int year = release_year(f[2]);
                     if (year == 0) {
                         ++excluded_movies;
                         excluded_ids.push_back(f[0]);
                         return;
                     }
                     std::array<bool, kGenreFlagCount> flags{};
                     for (std::size_t g = 0; g < kGenreFlagCount; ++g) {
                         const std::string& flag = f[5 + g];
                         if (flag != "0" && flag != "1")
                             throw DataError(where + ": bad genre flag '" + flag + "'");
                         flags[g] = flag == "1";
                     }
                     movie_index.emplace(f[0], movie_ids.size());
                     movie_ids.push_back(f[0]);
                     years.push_back(year);
                     genres.emplace_back(Nominal{collapse_genre(flags)});
                 });

    MovieLensLoad load{
        Mmer{InformationSystem({}, {}, {}), InformationSystem({}, {}, {}),
             BinaryRelation(0, 0, {})},
        excluded_movies, 0, 0, 0, 0.0, {}};

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for_each_row(options.data_dir / "u.data", '\t', 4,
                 [&](const std::vector<std::string>& f, std::size_t line_no) {
                     const std::string where = location(options.data_dir / "u.data", line_no);
                     ++load.raw_rating_lines;
                     const auto user = user_index.find(f[0]);
                     if (user == user_index.end())
                         throw DataError(where + ": unknown user id '" + f[0] + "'");
                     const auto movie = movie_index.find(f[1]);
                     if (movie == movie_index.end()) {
                         if (std::find(excluded_ids.begin(), excluded_ids.end(), f[1]) !=
                             excluded_ids.end()) {
                             ++load.excluded_pairs;
                             return;
                         }
                         throw DataError(where + ": unknown movie id '" + f[1] + "'");
                     }
                     pairs.emplace_back(user->second, movie->second);
                 });

    for (const AttributeValue& v : ages)
        load.max_age = std::max(load.max_age, std::get<Numeric>(v).value);

    InformationSystem users(std::move(user_ids),
                            {Attribute{"age", AttrKind::numeric},
                             Attribute{"gender", AttrKind::nominal},
                             Attribute{"occupation", AttrKind::nominal}},
                            {std::move(ages), std::move(genders), std::move(occupations)});
    if (options.age_mode == AgeMode::manual_grouplens) {
        DiscretizerSpec spec;
        spec.entries["age"] =
            DiscretizerEntry{DiscretizeMethod::manual, 0, grouplens_age_chain(load.max_age)};
        users = discretize_system(users, spec).first;
    }

    std::vector<AttributeValue> year_column;
    year_column.reserve(years.size());
    Attribute year_attribute{"releaseYear", AttrKind::numeric};
    if (options.year_mode == YearMode::decade) {
        year_attribute = Attribute{"decade", AttrKind::nominal};
        for (int y : years) year_column.emplace_back(Nominal{decade_label(y)});
    } else {
        for (int y : years) year_column.emplace_back(Numeric{static_cast<double>(y)});
    }
    InformationSystem movies(std::move(movie_ids),
                             {year_attribute, Attribute{"genre", AttrKind::nominal}},
                             {std::move(year_column), std::move(genres)});

    BinaryRelation relation(users.object_count(), movies.object_count(), pairs);
    load.duplicate_pairs = pairs.size() - relation.pair_count();

    if (load.excluded_movies > 0)
        load.warnings.push_back("excluded " + std::to_string(load.excluded_movies) +
                                " movies without a parsable release date (" +
                                std::to_string(load.excluded_pairs) + " ratings dropped)");
    if (load.duplicate_pairs > 0)
        load.warnings.push_back("collapsed " + std::to_string(load.duplicate_pairs) +
                                " duplicate rating lines");

    load.mmer = Mmer(std::move(users), std::move(movies), std::move(relation));
    return load;
}

}  // namespace gram
