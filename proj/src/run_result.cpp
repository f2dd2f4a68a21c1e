#include "evoparam/run_result.hpp"

#include <nlohmann/json.hpp>

namespace evoparam {

std::string RunResult::canonical() const {
    nlohmann::json j;
    j["best_fitness"] = best_fitness;
    j["best_genotype"] = best_genotype;
    j["evaluations"] = evaluations;
    j["seed"] = seed;
    return j.dump();
}

} // namespace evoparam
