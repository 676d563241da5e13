#include "trp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace trp {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("write failed for " + path.string());
}

namespace {

json parse_json_file(const fs::path& path) {
    try {
        return json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

fs::path resolve_relative(const fs::path& base_file, const std::string& ref) {
    fs::path p(ref);
    if (p.is_absolute()) return p;
    return base_file.parent_path() / p;
}

char single_char(const std::string& s, const std::string& what) {
    if (s.size() != 1) throw ConfigError(what + " must be a single character, got '" + s + "'");
    return s[0];
}

}  // namespace

std::shared_ptr<const TokenAlphabet> load_alphabet(const fs::path& path) {
    const json doc = parse_json_file(path);
    if (!doc.is_object() || doc.empty()) {
        throw ConfigError(path.string() + ": alphabet must be a non-empty object");
    }
    std::vector<Token> tokens;
    char empty = '\0';
    for (const auto& [key, value] : doc.items()) {
        Token t;
        t.symbol = single_char(key, "alphabet symbol");
        for (const auto& cat : value) {
            t.add(category_from_name(cat.get<std::string>()));
        }
        if (t.has(TokenCategory::Empty)) empty = t.symbol;
        tokens.push_back(t);
    }
    return std::make_shared<TokenAlphabet>(std::move(tokens), empty);
}

std::shared_ptr<const Domain> load_domain(const fs::path& path) {
    const json doc = parse_json_file(path);
    auto domain = std::make_shared<Domain>();
    try {
        domain->name = doc.at("name").get<std::string>();
        const std::string kind = doc.at("kind").get<std::string>();
        if (kind == "dungeon") {
            domain->kind = DomainKind::Dungeon;
        } else if (kind == "platformer") {
            domain->kind = DomainKind::Platformer;
        } else {
            throw ConfigError("unknown domain kind '" + kind + "'");
        }
        domain->alphabet = load_alphabet(resolve_relative(path, doc.at("alphabet")));

        for (const auto& g : doc.at("goals")) {
            GoalPredicate p;
            const std::string type = g.at("type").get<std::string>();
            if (type == "reach") {
                p.kind = GoalKind::Reach;
            } else if (type == "reach-column") {
                p.kind = GoalKind::ReachColumn;
            } else if (type == "collect") {
                p.kind = GoalKind::Collect;
            } else {
                throw ConfigError("unknown goal type '" + type + "'");
            }
            p.token = single_char(g.at("token"), "goal token");
            domain->goals.push_back(p);
        }
        if (domain->goals.empty()) throw ConfigError("domain needs at least one goal");

        if (doc.contains("failures")) {
            domain->failures.threat_contact = doc["failures"].value("threat_contact", true);
            domain->failures.below_screen = doc["failures"].value("below_screen", false);
        }
        for (const auto& t : doc.at("threats")) {
            domain->threat_tokens.push_back(single_char(t, "threat token"));
        }
        if (doc.contains("rules")) {
            const json& rules = doc["rules"];
            if (rules.contains("enemy_periods")) {
                for (const auto& [sym, period] : rules["enemy_periods"].items()) {
                    domain->dungeon.enemy_periods[single_char(sym, "enemy symbol")] =
                        period.get<int>();
                }
            }
            domain->platformer.jump_height = rules.value("jump_height", 3);
        }
        domain->swap_bottom_pits = doc.value("preprocess_pits", false);
        if (doc.contains("defaults")) {
            domain->default_iterations_per_move =
                doc["defaults"].value("iterations_per_move", 200);
            domain->default_max_moves = doc["defaults"].value("max_moves", 500);
        }

        for (char t : domain->threat_tokens) {
            if (!domain->alphabet->is(t, TokenCategory::Threat)) {
                throw ConfigError("threat token '" + std::string(1, t) +
                                  "' is not threat-categorized");
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return domain;
}

KitFile load_kit(const fs::path& path) {
    const json doc = parse_json_file(path);
    KitFile out;
    try {
        out.kit.domain = load_domain(resolve_relative(path, doc.at("domain")));
        out.kit.c = doc.value("c", 0.25);
        out.kit.max_rollout_depth = doc.value("max_rollout_depth", 0);
        if (doc.contains("fixed")) {
            out.kit.t = doc["fixed"].value("t", 1);
            out.kit.s = doc["fixed"].value("s", 2);
            out.kit.e = doc["fixed"].value("e", 0.25);
        }
        if (doc.contains("ranges")) {
            out.ranges.t_choices = doc["ranges"].at("t").get<std::vector<int>>();
            out.ranges.s_choices = doc["ranges"].at("s").get<std::vector<int>>();
            out.ranges.e_choices = doc["ranges"].at("e").get<std::vector<double>>();
        }
    } catch (const json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    if (out.kit.e < 0.0 || out.kit.e > 1.0) throw ConfigError("kit e must lie in [0, 1]");
    if (out.kit.t < 1 || out.kit.s < 1) throw ConfigError("kit t and s must be >= 1");
    for (double e : out.ranges.e_choices) {
        if (e < 0.0 || e > 1.0) throw ConfigError("ranges.e values must lie in [0, 1]");
    }
    for (int t : out.ranges.t_choices) {
        if (t < 1) throw ConfigError("ranges.t values must be >= 1");
    }
    for (int s : out.ranges.s_choices) {
        if (s < 1) throw ConfigError("ranges.s values must be >= 1");
    }
    return out;
}

Level load_level(const fs::path& path, std::shared_ptr<const TokenAlphabet> alphabet) {
    return parse_level(read_text_file(path), std::move(alphabet));
}

void save_level(const Level& level, const fs::path& path) {
    write_text_file(path, serialize_level(level));
}

ExperimentConfig load_config(const fs::path& path) {
    const json doc = parse_json_file(path);
    ExperimentConfig cfg;
    try {
        cfg.kit_path = resolve_relative(path, doc.at("kit"));
        for (const auto& src : doc.at("sources")) {
            cfg.sources.push_back(resolve_relative(path, src.get<std::string>()));
        }
        if (doc.contains("budget")) {
            cfg.budget.iterations_per_move = doc["budget"].value("iterations_per_move", 0);
            cfg.budget.max_moves = doc["budget"].value("max_moves", 500);
            cfg.budget_from_config = true;
        }
        cfg.population = doc.value("population", 50);
        cfg.base_seed = doc.value("base_seed", std::uint64_t{1});
        cfg.mode = doc.value("mode", std::string("fixed"));
        if (doc.contains("out_dir")) {
            cfg.out_dir = resolve_relative(path, doc["out_dir"].get<std::string>());
        }
    } catch (const json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    if (cfg.sources.empty()) throw ConfigError("config needs at least one source level");
    if (cfg.population < 1) throw ConfigError("population must be >= 1");
    if (cfg.mode != "fixed" && cfg.mode != "variety") {
        throw ConfigError("mode must be 'fixed' or 'variety'");
    }
    for (const auto& p : cfg.sources) {
        if (!fs::exists(p)) throw ConfigError("source level not found: " + p.string());
    }
    if (!fs::exists(cfg.kit_path)) throw ConfigError("kit not found: " + cfg.kit_path.string());
    return cfg;
}

namespace {

json position_json(const Position& p) {
    return json{{"col", p.col}, {"row", p.row}};
}

}  // namespace

std::string trace_to_json(const PlaythroughRecord& record) {
    json doc;
    doc["success"] = record.success;
    doc["executed_path"] = json::array();
    for (const Position& p : record.executed_path) doc["executed_path"].push_back(position_json(p));
    doc["visited_positions"] = json::array();
    for (const Position& p : record.visited) doc["visited_positions"].push_back(position_json(p));
    doc["failure_events"] = json::array();
    for (const auto& [event, count] : record.failures) {
        json e = position_json(event.position);
        e["cause"] = std::string(1, event.cause);
        e["count"] = count;
        doc["failure_events"].push_back(e);
    }
    return doc.dump(2) + "\n";
}

void save_trace(const PlaythroughRecord& record, const fs::path& path) {
    write_text_file(path, trace_to_json(record));
}

std::string model_to_json(const MarkovModel& model) {
    json doc;
    doc["contexts"] = json::array();
    for (const auto& [ctx, dist] : model.table()) {
        json entry;
        entry["bottom_left"] = std::string(1, ctx.bottom_left);
        entry["bottom_right"] = std::string(1, ctx.bottom_right);
        entry["top_left"] = std::string(1, ctx.top_left);
        json outcomes = json::object();
        for (const auto& [symbol, prob] : dist) outcomes[std::string(1, symbol)] = prob;
        entry["top_right"] = outcomes;
        doc["contexts"].push_back(entry);
    }
    return doc.dump(2) + "\n";
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

std::string report_csv_header(bool with_label) {
    std::string head = "playable,plagiarism_mean,plagiarism_std,selfsim_mean,selfsim_std,n\n";
    return with_label ? "approach," + head : head;
}

std::string report_csv_row(const MetricsReport& r, const std::string& label) {
    std::string row;
    if (!label.empty()) row += label + ",";
    row += fmt(r.playable_fraction) + "," + fmt(r.plagiarism_mean) + "," +
           fmt(r.plagiarism_stdev) + "," + fmt(r.self_similarity_mean) + "," +
           fmt(r.self_similarity_stdev) + "," + std::to_string(r.population_size) + "\n";
    return row;
}

std::string report_pretty(const MetricsReport& r, const std::string& label) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-14s %6.1f%%   %6.2f +/- %-5.2f   %6.2f +/- %-5.2f   %4d",
                  label.c_str(), 100.0 * r.playable_fraction, r.plagiarism_mean,
                  r.plagiarism_stdev, r.self_similarity_mean, r.self_similarity_stdev,
                  r.population_size);
    std::string line(buf);
    if (r.source_count > 1) {
        line += "   (plagiarism = max over " + std::to_string(r.source_count) + " sources)";
    }
    return line;
}

}  // namespace trp
