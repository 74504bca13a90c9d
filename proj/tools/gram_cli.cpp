// Command line front end: discretize, mine, sweep and stats over a generic
// two-table dataset or the MovieLens 100k directory.
//
// Exit codes: 0 success, 1 bad parameters or usage, 2 schema/data problems,
// 3 anything else. Errors are emitted as a single JSON line on stderr.
#include <algorithm>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "gram/dataio.hpp"
#include "gram/discretize.hpp"
#include "gram/errors.hpp"
#include "gram/measures.hpp"
#include "gram/miner.hpp"
#include "gram/movielens.hpp"
#include "gram/serialize.hpp"

namespace {

using gram::Json;

struct CliOptions {
    std::string schema;
    std::string ml_dir;
    std::string out;
    std::string spec_json;
    std::string ms, mt, mc, tc;
    std::string method;
    unsigned k = 0, k1 = 0, k2 = 0;
    std::vector<std::string> methods;
    std::string k1_range, k2_range;
    int threads = 0;
    unsigned long long seed = 0;
};

struct LoadedData {
    gram::Mmer mmer;
    Json inputs;
    std::vector<std::string> warnings;
    std::optional<gram::SchemaConfig> schema;
    bool from_movielens;
    std::size_t excluded_movies;
    std::size_t excluded_pairs;
    std::size_t duplicate_pairs;
    std::size_t raw_rating_lines;
    double max_age;
};

Json input_entry(const std::filesystem::path& path) {
    return Json{{"path", path.generic_string()}, {"fingerprint", gram::file_fingerprint(path)}};
}

LoadedData load_input(const CliOptions& opt, bool movielens_manual) {
    if (opt.schema.empty() == opt.ml_dir.empty())
        throw gram::ParamError("exactly one of --schema and --movielens-dir is required");
    if (!opt.schema.empty()) {
        gram::SchemaConfig config = gram::SchemaConfig::load(opt.schema);
        gram::Mmer mmer = gram::load_mmer(config);
        Json inputs = Json::array();
        inputs.push_back(input_entry(opt.schema));
        inputs.push_back(input_entry(config.source.path));
        inputs.push_back(input_entry(config.target.path));
        inputs.push_back(input_entry(config.relation.path));
        return LoadedData{std::move(mmer), std::move(inputs), {}, std::move(config),
                          false,           0,                 0,  0,
                          0,               0.0};
    }
    gram::MovieLensOptions ml;
    ml.data_dir = opt.ml_dir;
    ml.age_mode = movielens_manual ? gram::AgeMode::manual_grouplens : gram::AgeMode::automatic;
    ml.year_mode = movielens_manual ? gram::YearMode::decade : gram::YearMode::raw_year;
    gram::MovieLensLoad load = gram::load_movielens(ml);
    Json inputs = Json::array();
    for (const char* name : {"u.user", "u.item", "u.data"})
        inputs.push_back(input_entry(std::filesystem::path(opt.ml_dir) / name));
    return LoadedData{std::move(load.mmer),  std::move(inputs),  std::move(load.warnings),
                      std::nullopt,          true,               load.excluded_movies,
                      load.excluded_pairs,   load.duplicate_pairs, load.raw_rating_lines,
                      load.max_age};
}

struct DiscretizationOutcome {
    gram::InformationSystem source;
    gram::InformationSystem target;
    Json chains;  // array of fitted-chain records with a "side" field
    std::vector<std::string> warnings;
};

Json chain_record(const gram::FittedAttribute& fitted, const char* side) {
    Json j = gram::chain_to_json(fitted);
    j["side"] = side;
    return j;
}

std::pair<gram::DiscretizerSpec, gram::DiscretizerSpec> parse_spec_json(
    const std::filesystem::path& path) {
    const Json j = gram::read_json_file(path);
    const auto side = [&](const char* key) {
        gram::DiscretizerSpec spec;
        if (!j.contains(key)) return spec;
        try {
            for (const auto& [name, e] : j.at(key).items()) {
                gram::DiscretizerEntry entry;
                entry.method = gram::method_from_name(e.at("method").get<std::string>());
                if (entry.method == gram::DiscretizeMethod::manual)
                    entry.manual_chain =
                        gram::BoundaryChain::manual(e.at("boundaries").get<std::vector<double>>());
                else
                    entry.k = e.at("k").get<std::size_t>();
                spec.entries[name] = std::move(entry);
            }
        } catch (const Json::exception& e) {
            throw gram::DataError(path.string() + ": " + e.what());
        }
        return spec;
    };
    return {side("source"), side("target")};
}

// Spec for every numeric attribute of one system, all with the same method/k.
gram::DiscretizerSpec uniform_spec(const gram::InformationSystem& is, gram::DiscretizeMethod method,
                                   unsigned k, const char* k_flag) {
    gram::DiscretizerSpec spec;
    for (std::size_t j = 0; j < is.attribute_count(); ++j) {
        if (is.column_cell_kind(j) != gram::CellKind::numeric) continue;
        if (k == 0)
            throw gram::ParamError(std::string(k_flag) + " is required to discretize " +
                                   is.attribute(j).name);
        spec.entries[is.attribute(j).name] = gram::DiscretizerEntry{method, k, std::nullopt};
    }
    return spec;
}

DiscretizationOutcome apply_discretization(const LoadedData& data, const std::string& method,
                                           unsigned k1, unsigned k2,
                                           const std::string& spec_json) {
    DiscretizationOutcome outcome{data.mmer.source, data.mmer.target, Json::array(), {}};
    const auto apply_side = [&](gram::InformationSystem& is, const gram::DiscretizerSpec& spec,
                                const char* side) {
        auto [discretized, report] = gram::discretize_system(is, spec);
        is = std::move(discretized);
        for (const gram::FittedAttribute& fitted : report.fitted) {
            outcome.chains.push_back(chain_record(fitted, side));
            for (const std::string& w : fitted.warnings)
                outcome.warnings.push_back(fitted.attribute + ": " + w);
        }
    };

    if (!spec_json.empty()) {
        if (!method.empty())
            throw gram::ParamError("--method and --spec-json cannot be combined");
        const auto [source_spec, target_spec] = parse_spec_json(spec_json);
        apply_side(outcome.source, source_spec, "source");
        apply_side(outcome.target, target_spec, "target");
        return outcome;
    }
    if (method.empty() || method == "none") {
        outcome.source = gram::drop_numeric_attributes(outcome.source);
        outcome.target = gram::drop_numeric_attributes(outcome.target);
        return outcome;
    }
    if (method == "manual") {
        if (!data.from_movielens)
            throw gram::ParamError("--method manual is built in only for --movielens-dir; "
                                   "use --spec-json with manual boundaries instead");
        // Applied during loading: age over the fixed chain, decades as labels.
        gram::FittedAttribute age{"age", gram::DiscretizeMethod::manual, 0,
                                  gram::grouplens_age_chain(data.max_age), {}};
        outcome.chains.push_back(chain_record(age, "source"));
        return outcome;
    }
    const gram::DiscretizeMethod m = gram::method_from_name(method);
    apply_side(outcome.source, uniform_spec(outcome.source, m, k1, "--k1"), "source");
    apply_side(outcome.target, uniform_spec(outcome.target, m, k2, "--k2"), "target");
    return outcome;
}

gram::Thresholds parse_thresholds(const CliOptions& opt) {
    return gram::Thresholds::checked(
        gram::Fraction::from_decimal(opt.ms), gram::Fraction::from_decimal(opt.mt),
        gram::Fraction::from_decimal(opt.mc), gram::Fraction::from_decimal(opt.tc));
}

std::pair<unsigned, unsigned> parse_range(const std::string& text, const char* flag) {
    const auto bad = [&] {
        return gram::ParamError(std::string(flag) + ": expected K or LO:HI, got '" + text + "'");
    };
    if (text.empty()) throw bad();
    const std::size_t colon = text.find(':');
    try {
        const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, colon)));
        const unsigned hi = colon == std::string::npos
                                ? lo
                                : static_cast<unsigned>(std::stoul(text.substr(colon + 1)));
        if (lo == 0 || hi < lo) throw bad();
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw bad();
    }
}

std::filesystem::path prepare_out_dir(const std::string& out) {
    const std::filesystem::path dir(out);
    std::filesystem::create_directories(dir);
    return dir;
}

Json threshold_options(const gram::Thresholds& t) {
    return Json{{"ms", t.ms.to_string()},
                {"mt", t.mt.to_string()},
                {"mc", t.mc.to_string()},
                {"tc", t.tc.to_string()}};
}

Json count_block(const LoadedData& data) {
    Json j{{"source_objects", data.mmer.source.object_count()},
           {"target_objects", data.mmer.target.object_count()},
           {"relation_pairs", data.mmer.relation.pair_count()}};
    if (data.from_movielens) {
        j["excluded_movies"] = data.excluded_movies;
        j["excluded_pairs"] = data.excluded_pairs;
        j["duplicate_pairs"] = data.duplicate_pairs;
        j["raw_rating_lines"] = data.raw_rating_lines;
    }
    return j;
}

gram::SchemaConfig movielens_layout() {
    gram::SchemaConfig layout;
    layout.source = gram::TableConfig{"users.tsv", '\t', {gram::ColumnSpec{"userId", gram::ColumnRole::id}}};
    layout.target = gram::TableConfig{"movies.tsv", '\t', {gram::ColumnSpec{"movieId", gram::ColumnRole::id}}};
    layout.relation = gram::RelationConfig{"ratings.tsv", '\t', "userId", "movieId"};
    return layout;
}

int run_discretize(const CliOptions& opt) {
    const bool manual_ml = opt.method == "manual" && !opt.ml_dir.empty();
    const LoadedData data = load_input(opt, manual_ml);
    const unsigned k1 = opt.k1 ? opt.k1 : opt.k;
    const unsigned k2 = opt.k2 ? opt.k2 : opt.k;
    DiscretizationOutcome outcome = apply_discretization(data, opt.method, k1, k2, opt.spec_json);

    const std::filesystem::path dir = prepare_out_dir(opt.out);
    const gram::SchemaConfig like = data.schema ? *data.schema
                                    : data.from_movielens ? movielens_layout()
                                                          : gram::default_schema_layout();
    const std::filesystem::path schema_path = gram::write_mmer(
        gram::Mmer(outcome.source, outcome.target, data.mmer.relation), dir, like);

    std::vector<std::string> warnings = data.warnings;
    warnings.insert(warnings.end(), outcome.warnings.begin(), outcome.warnings.end());
    Json warn = Json::array();
    for (const std::string& w : warnings) warn.push_back(w);

    Json report{{"command", "discretize"},
                {"inputs", data.inputs},
                {"options", Json{{"method", opt.method.empty() ? "none" : opt.method},
                                 {"k1", k1},
                                 {"k2", k2},
                                 {"spec_json", opt.spec_json}}},
                {"discretization", outcome.chains},
                {"counts", count_block(data)},
                {"warnings", std::move(warn)},
                {"schema", schema_path.generic_string()}};
    gram::write_json_file(dir / "report.json", report);
    std::cout << "fitted " << outcome.chains.size() << " chains -> " << schema_path.generic_string()
              << "\n";
    return 0;
}

int run_mine(const CliOptions& opt) {
    const bool manual_ml = opt.method == "manual" && !opt.ml_dir.empty();
    const LoadedData data = load_input(opt, manual_ml);
    const unsigned k1 = opt.k1 ? opt.k1 : opt.k;
    const unsigned k2 = opt.k2 ? opt.k2 : opt.k;
    DiscretizationOutcome outcome = apply_discretization(data, opt.method, k1, k2, opt.spec_json);
    const gram::Thresholds thresholds = parse_thresholds(opt);

    const auto t0 = std::chrono::steady_clock::now();
    const gram::MiningResult result =
        gram::mine(gram::Mmer(outcome.source, outcome.target, data.mmer.relation), thresholds,
                   opt.threads);
    const auto t1 = std::chrono::steady_clock::now();
    const double wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    const std::filesystem::path dir = prepare_out_dir(opt.out);
    gram::write_rules_jsonl(dir / "rules.jsonl", result, outcome.source, outcome.target);

    std::vector<std::string> warnings = data.warnings;
    warnings.insert(warnings.end(), outcome.warnings.begin(), outcome.warnings.end());
    Json warn = Json::array();
    for (const std::string& w : warnings) warn.push_back(w);

    const gram::CountSummary summary = gram::count_summary(result);
    Json counts = count_block(data);
    counts["source_candidates"] = summary.source_candidates;
    counts["target_candidates"] = summary.target_candidates;
    counts["evaluated_pairs"] = summary.evaluated_pairs;
    counts["rules"] = summary.rules;
    counts["rank_clamps"] = result.rank_clamp_count;

    Json options = threshold_options(thresholds);
    options["method"] = opt.method.empty() ? "none" : opt.method;
    options["k1"] = k1;
    options["k2"] = k2;
    options["spec_json"] = opt.spec_json;
    options["threads"] = opt.threads;
    options["seed"] = opt.seed;  // reserved, no randomized stage uses it yet

    Json report{{"command", "mine"},
                {"inputs", data.inputs},
                {"options", std::move(options)},
                {"discretization", outcome.chains},
                {"counts", std::move(counts)},
                {"warnings", std::move(warn)},
                {"rules_file", (dir / "rules.jsonl").generic_string()},
                {"wall_ms", wall_ms}};
    gram::write_json_file(dir / "report.json", report);
    std::cout << summary.rules << " rules from " << summary.source_candidates << " x "
              << summary.target_candidates << " candidates -> "
              << (dir / "rules.jsonl").generic_string() << "\n";
    return 0;
}

struct SweepRow {
    std::string method;
    unsigned k1 = 0, k2 = 0;
    bool has_k = false;
    gram::CountSummary counts{0, 0, 0, 0};
};

int run_sweep(const CliOptions& opt) {
    if (opt.methods.empty()) throw gram::ParamError("--method is required");
    std::vector<std::string> methods = opt.methods;
    std::sort(methods.begin(), methods.end());
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
    for (const std::string& m : methods)
        if (m != "manual") gram::method_from_name(m);  // validate early

    const gram::Thresholds thresholds = parse_thresholds(opt);
    const auto [k1_lo, k1_hi] = parse_range(opt.k1_range.empty() ? "1" : opt.k1_range, "--k1");
    const auto [k2_lo, k2_hi] = parse_range(opt.k2_range.empty() ? "1" : opt.k2_range, "--k2");

    std::optional<LoadedData> plain, manual;
    const auto data_for = [&](bool wants_manual) -> const LoadedData& {
        auto& slot = wants_manual && !opt.ml_dir.empty() ? manual : plain;
        if (!slot) slot = load_input(opt, wants_manual && !opt.ml_dir.empty());
        return *slot;
    };

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<SweepRow> rows;
    for (const std::string& method : methods) {
        if (method == "manual") {
            const LoadedData& data = data_for(true);
            DiscretizationOutcome outcome = apply_discretization(data, method, 0, 0, "");
            const gram::MiningResult result =
                gram::mine(gram::Mmer(outcome.source, outcome.target, data.mmer.relation),
                           thresholds, opt.threads);
            rows.push_back(SweepRow{method, 0, 0, false, gram::count_summary(result)});
            continue;
        }
        const LoadedData& data = data_for(false);
        for (unsigned k1 = k1_lo; k1 <= k1_hi; ++k1)
            for (unsigned k2 = k2_lo; k2 <= k2_hi; ++k2) {
                DiscretizationOutcome outcome = apply_discretization(data, method, k1, k2, "");
                const gram::MiningResult result =
                    gram::mine(gram::Mmer(outcome.source, outcome.target, data.mmer.relation),
                               thresholds, opt.threads);
                rows.push_back(SweepRow{method, k1, k2, true, gram::count_summary(result)});
            }
    }
    const auto t1 = std::chrono::steady_clock::now();

    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.method != b.method) return a.method < b.method;
        if (a.k1 != b.k1) return a.k1 < b.k1;
        return a.k2 < b.k2;
    });

    const std::filesystem::path dir = prepare_out_dir(opt.out);
    {
        std::ofstream grid(dir / "grid.tsv");
        if (!grid) throw gram::DataError("cannot write " + (dir / "grid.tsv").string());
        grid << "method\tk1\tk2\tsource_candidates\ttarget_candidates\trules\n";
        for (const SweepRow& row : rows) {
            grid << row.method << '\t';
            if (row.has_k)
                grid << row.k1 << '\t' << row.k2;
            else
                grid << "-\t-";
            grid << '\t' << row.counts.source_candidates << '\t' << row.counts.target_candidates
                 << '\t' << row.counts.rules << '\n';
        }
        if (!grid) throw gram::DataError("cannot write " + (dir / "grid.tsv").string());
    }

    const LoadedData& reported = plain ? *plain : *manual;
    Json method_list = Json::array();
    for (const std::string& m : methods) method_list.push_back(m);
    Json options = threshold_options(thresholds);
    options["methods"] = std::move(method_list);
    options["k1"] = opt.k1_range;
    options["k2"] = opt.k2_range;
    options["threads"] = opt.threads;
    options["seed"] = opt.seed;
    Json warn = Json::array();
    for (const std::string& w : reported.warnings) warn.push_back(w);

    Json report{{"command", "sweep"},
                {"inputs", reported.inputs},
                {"options", std::move(options)},
                {"counts", Json{{"rows", rows.size()}}},
                {"warnings", std::move(warn)},
                {"grid_file", (dir / "grid.tsv").generic_string()},
                {"wall_ms", std::chrono::duration<double, std::milli>(t1 - t0).count()}};
    gram::write_json_file(dir / "report.json", report);
    std::cout << rows.size() << " grid rows -> " << (dir / "grid.tsv").generic_string() << "\n";
    return 0;
}

std::size_t distinct_count(const gram::InformationSystem& is, std::size_t attr) {
    std::vector<const gram::AttributeValue*> seen;
    for (const gram::AttributeValue& v : is.column(attr)) {
        bool found = false;
        for (const gram::AttributeValue* s : seen)
            if (gram::value_equal(*s, v)) {
                found = true;
                break;
            }
        if (!found) seen.push_back(&v);
    }
    return seen.size();
}

Json system_stats(const gram::InformationSystem& is) {
    Json attrs = Json::array();
    for (std::size_t j = 0; j < is.attribute_count(); ++j) {
        const char* kind = "nominal";
        switch (is.column_cell_kind(j)) {
            case gram::CellKind::nominal: kind = "nominal"; break;
            case gram::CellKind::numeric: kind = "numeric"; break;
            case gram::CellKind::interval: kind = "interval"; break;
        }
        attrs.push_back(Json{{"name", is.attribute(j).name},
                             {"kind", kind},
                             {"distinct", distinct_count(is, j)}});
    }
    return Json{{"objects", is.object_count()}, {"attributes", std::move(attrs)}};
}

int run_stats(const CliOptions& opt) {
    const LoadedData data = load_input(opt, false);
    Json warn = Json::array();
    for (const std::string& w : data.warnings) warn.push_back(w);
    Json report{{"command", "stats"},
                {"inputs", data.inputs},
                {"source", system_stats(data.mmer.source)},
                {"target", system_stats(data.mmer.target)},
                {"counts", count_block(data)},
                {"warnings", std::move(warn)}};
    std::cout << report.dump(2) << "\n";
    return 0;
}

void error_record(const char* type, const std::string& message) {
    std::cerr << Json{{"error", type}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"granular association rule miner for two-table data"};
    app.require_subcommand(1);
    CliOptions opt;

    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--schema", opt.schema, "schema.json describing a two-table dataset");
        cmd->add_option("--movielens-dir", opt.ml_dir,
                        "directory with the MovieLens 100k u.user/u.item/u.data files");
    };
    const auto add_disc = [&](CLI::App* cmd) {
        cmd->add_option("--method", opt.method,
                        "none|width|frequency|manual (default none: drop numeric columns)");
        cmd->add_option("--k", opt.k, "interval count for both sides");
        cmd->add_option("--k1", opt.k1, "interval count for source attributes");
        cmd->add_option("--k2", opt.k2, "interval count for target attributes");
        cmd->add_option("--spec-json", opt.spec_json, "per-attribute discretization plan");
    };
    const auto add_thresholds = [&](CLI::App* cmd) {
        cmd->add_option("--ms", opt.ms, "minimal source coverage")->required();
        cmd->add_option("--mt", opt.mt, "minimal target coverage")->required();
        cmd->add_option("--mc", opt.mc, "minimal source confidence")->required();
        cmd->add_option("--tc", opt.tc, "minimal target confidence")->required();
    };
    const auto add_run = [&](CLI::App* cmd) {
        cmd->add_option("--threads", opt.threads, "worker threads (0 = library default)");
        cmd->add_option("--seed", opt.seed, "reserved for randomized stages");
    };

    CLI::App* discretize = app.add_subcommand("discretize", "fit chains and write the dataset");
    add_input(discretize);
    add_disc(discretize);
    discretize->add_option("--out", opt.out, "output directory")->required();

    CLI::App* mine = app.add_subcommand("mine", "mine granular rules");
    add_input(mine);
    add_disc(mine);
    add_thresholds(mine);
    add_run(mine);
    mine->add_option("--out", opt.out, "output directory")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "mine across a grid of interval counts");
    add_input(sweep);
    sweep->add_option("--method", opt.methods, "methods to sweep (repeatable)");
    sweep->add_option("--k1", opt.k1_range, "source interval count, K or LO:HI");
    sweep->add_option("--k2", opt.k2_range, "target interval count, K or LO:HI");
    add_thresholds(sweep);
    add_run(sweep);
    sweep->add_option("--out", opt.out, "output directory")->required();

    CLI::App* stats = app.add_subcommand("stats", "dataset summary as JSON on stdout");
    add_input(stats);

    try {
        app.parse(argc, argv);
        if (*discretize) return run_discretize(opt);
        if (*mine) return run_mine(opt);
        if (*sweep) return run_sweep(opt);
        if (*stats) return run_stats(opt);
        return 1;
    } catch (const CLI::Error& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        error_record("param", e.what());
        return 1;
    } catch (const gram::ParamError& e) {
        error_record("param", e.what());
        return 1;
    } catch (const gram::DataError& e) {
        error_record("data", e.what());
        return 2;
    } catch (const gram::SchemaError& e) {
        error_record("schema", e.what());
        return 2;
    } catch (const std::exception& e) {
        error_record("internal", e.what());
        return 3;
    }
}
