#include "evoparam/params.hpp"

#include <string>

#include "evoparam/errors.hpp"

namespace evoparam {

bool ParameterRanges::contains(const ParameterSet& p) const {
    return p.pop_size >= pop_size.lo && p.pop_size <= pop_size.hi &&
           p.generations >= generations.lo && p.generations <= generations.hi &&
           p.crossover_rate >= crossover_rate.lo && p.crossover_rate <= crossover_rate.hi &&
           p.mutation_rate >= mutation_rate.lo && p.mutation_rate <= mutation_rate.hi &&
           p.tournament_size >= tournament_size.lo && p.tournament_size <= tournament_size.hi;
}

void ParameterRanges::validate() const {
    auto check_int = [](const IntRange& r, int floor, const char* name) {
        if (r.lo > r.hi)
            throw config_error(std::string(name) + " range has lo > hi");
        if (r.lo < floor)
            throw config_error(std::string(name) + " range below " + std::to_string(floor));
    };
    check_int(pop_size, 2, "pop_size");
    check_int(generations, 1, "generations");
    check_int(tournament_size, 1, "tournament_size");
    auto check_rate = [](const RealRange& r, const char* name) {
        if (r.lo > r.hi)
            throw config_error(std::string(name) + " range has lo > hi");
        if (r.lo < 0.0 || r.hi > 1.0)
            throw config_error(std::string(name) + " range outside [0,1]");
    };
    check_rate(crossover_rate, "crossover_rate");
    check_rate(mutation_rate, "mutation_rate");
}

void validate_params(const ParameterSet& p) {
    if (p.pop_size < 2)
        throw config_error("pop_size must be >= 2");
    if (p.generations < 1)
        throw config_error("generations must be >= 1");
    if (p.crossover_rate < 0.0 || p.crossover_rate > 1.0)
        throw config_error("crossover_rate outside [0,1]");
    if (p.mutation_rate < 0.0 || p.mutation_rate > 1.0)
        throw config_error("mutation_rate outside [0,1]");
    if (p.tournament_size < 1)
        throw config_error("tournament_size must be >= 1");
}

ParameterSet sample_parameter_set(const ParameterRanges& ranges, Rng& rng) {
    ranges.validate();
    ParameterSet p;
    p.pop_size = uniform_int(rng, ranges.pop_size.lo, ranges.pop_size.hi);
    p.generations = uniform_int(rng, ranges.generations.lo, ranges.generations.hi);
    p.crossover_rate = uniform_real(rng, ranges.crossover_rate.lo, ranges.crossover_rate.hi);
    p.mutation_rate = uniform_real(rng, ranges.mutation_rate.lo, ranges.mutation_rate.hi);
    p.tournament_size = uniform_int(rng, ranges.tournament_size.lo, ranges.tournament_size.hi);
    return p;
}

} // namespace evoparam
