#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "evoparam/meta_tuner.hpp"
#include "evoparam/params.hpp"
#include "evoparam/random_tuner.hpp"

namespace evoparam {

inline constexpr std::string_view kRecordSchema = "evoparam/1";

nlohmann::json params_to_json(const ParameterSet& p);
ParameterSet params_from_json(const nlohmann::json& j);

nlohmann::json ranges_to_json(const ParameterRanges& r);
ParameterRanges ranges_from_json(const nlohmann::json& j);

nlohmann::json campaign_record_to_json(const CampaignRecord& rec);
CampaignRecord campaign_record_from_json(const nlohmann::json& j);

// A parsed line-delimited results file: header first, then typed records,
// then at most one summary. Every line is an independent JSON object, so a
// crash at any point leaves a loadable prefix.
struct ResultsFile {
    nlohmann::json header;
    std::vector<nlohmann::json> records; // in file order, header/summary excluded
    std::optional<nlohmann::json> summary;
    int corrupt_lines = 0;

    const nlohmann::json& config() const;
    std::string mode() const;

    // strict=true fails on any unparseable line; otherwise such lines are
    // counted and skipped.
    static ResultsFile load(const std::filesystem::path& path, bool strict = true);
};

// Append-only line writer; each record is flushed as one complete line.
class RecordWriter {
public:
    RecordWriter(const std::filesystem::path& path, bool append);
    void write(const nlohmann::json& j);

private:
    std::ofstream out_;
};

} // namespace evoparam
