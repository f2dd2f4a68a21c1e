#include "evoparam/records.hpp"

#include "evoparam/errors.hpp"

namespace evoparam {

nlohmann::json params_to_json(const ParameterSet& p) {
    return {{"pop_size", p.pop_size},
            {"generations", p.generations},
            {"crossover_rate", p.crossover_rate},
            {"mutation_rate", p.mutation_rate},
            {"tournament_size", p.tournament_size}};
}

ParameterSet params_from_json(const nlohmann::json& j) {
    ParameterSet p;
    p.pop_size = j.at("pop_size").get<int>();
    p.generations = j.at("generations").get<int>();
    p.crossover_rate = j.at("crossover_rate").get<double>();
    p.mutation_rate = j.at("mutation_rate").get<double>();
    p.tournament_size = j.at("tournament_size").get<int>();
    return p;
}

nlohmann::json ranges_to_json(const ParameterRanges& r) {
    return {{"pop_size", {r.pop_size.lo, r.pop_size.hi}},
            {"generations", {r.generations.lo, r.generations.hi}},
            {"crossover_rate", {r.crossover_rate.lo, r.crossover_rate.hi}},
            {"mutation_rate", {r.mutation_rate.lo, r.mutation_rate.hi}},
            {"tournament_size", {r.tournament_size.lo, r.tournament_size.hi}}};
}

ParameterRanges ranges_from_json(const nlohmann::json& j) {
    ParameterRanges r;
    auto int_range = [&](const char* key, IntRange& out) {
        if (!j.contains(key)) return;
        out.lo = j.at(key).at(0).get<int>();
        out.hi = j.at(key).at(1).get<int>();
    };
    auto real_range = [&](const char* key, RealRange& out) {
        if (!j.contains(key)) return;
        out.lo = j.at(key).at(0).get<double>();
        out.hi = j.at(key).at(1).get<double>();
    };
    int_range("pop_size", r.pop_size);
    int_range("generations", r.generations);
    real_range("crossover_rate", r.crossover_rate);
    real_range("mutation_rate", r.mutation_rate);
    int_range("tournament_size", r.tournament_size);
    r.validate();
    return r;
}

nlohmann::json campaign_record_to_json(const CampaignRecord& rec) {
    nlohmann::json j{{"type", "trial"},
                     {"trial", rec.trial},
                     {"params", params_to_json(rec.params)},
                     {"fitness", rec.per_problem_fitness},
                     {"seeds", rec.seeds},
                     {"success", rec.success}};
    if (!rec.error.empty()) j["error"] = rec.error;
    return j;
}

CampaignRecord campaign_record_from_json(const nlohmann::json& j) {
    CampaignRecord rec;
    rec.trial = j.at("trial").get<int>();
    rec.params = params_from_json(j.at("params"));
    rec.per_problem_fitness = j.at("fitness").get<std::map<std::string, double>>();
    rec.seeds = j.at("seeds").get<std::map<std::string, std::uint64_t>>();
    rec.success = j.at("success").get<bool>();
    if (j.contains("error")) rec.error = j.at("error").get<std::string>();
    return rec;
}

const nlohmann::json& ResultsFile::config() const {
    return header.at("config");
}

std::string ResultsFile::mode() const {
    return header.at("config").at("mode").get<std::string>();
}

ResultsFile ResultsFile::load(const std::filesystem::path& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw ingest_error("cannot open results file '" + path.string() + "'");
    ResultsFile rf;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("type") ||
            !j.at("type").is_string()) {
            if (strict)
                throw ingest_error("'" + path.string() + "': corrupt record at line " +
                                   std::to_string(line_no));
            ++rf.corrupt_lines;
            continue;
        }
        const std::string type = j.at("type").get<std::string>();
        if (type == "header") {
            if (have_header) throw ingest_error("'" + path.string() + "': duplicate header");
            if (j.value("schema", "") != kRecordSchema)
                throw ingest_error("'" + path.string() + "': unsupported schema '" +
                                   j.value("schema", "") + "'");
            rf.header = std::move(j);
            have_header = true;
        } else if (type == "summary") {
            rf.summary = std::move(j);
        } else {
            rf.records.push_back(std::move(j));
        }
    }
    if (!have_header)
        throw ingest_error("'" + path.string() + "': missing header line");
    return rf;
}

RecordWriter::RecordWriter(const std::filesystem::path& path, bool append)
    : out_(path, append ? std::ios::app : std::ios::trunc) {
    if (!out_) throw ingest_error("cannot open '" + path.string() + "' for writing");
}

void RecordWriter::write(const nlohmann::json& j) {
    out_ << j.dump() << '\n';
    out_.flush();
    if (!out_) throw ingest_error("write to results file failed");
}

} // namespace evoparam
