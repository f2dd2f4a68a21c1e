#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evoparam/rng.hpp"

namespace evoparam {

inline constexpr std::size_t kMaxProgramLen = 64;
inline constexpr std::size_t kInitProgramLenLo = 4;
inline constexpr std::size_t kInitProgramLenHi = 16;

struct Instruction {
    enum class Op : std::uint8_t { PushFeature, PushConst, Add, Sub, Mul, Div };
    Op op = Op::PushFeature;
    std::uint16_t feature = 0; // PushFeature payload
    double value = 0.0;        // PushConst payload

    bool operator==(const Instruction&) const = default;
};

// Linear program executed on a value stack; produces a fixed-width output
// vector for nearest-centroid classification.
struct StackProgram {
    std::vector<Instruction> code;

    std::size_t length() const { return code.size(); }
    bool operator==(const StackProgram&) const = default;
};

// Left-to-right execution. Binary ops pop two and push one; ops on an
// insufficient stack are skipped, so execution is total. The final stack,
// bottom to top, is truncated or zero-padded to output_dim.
std::vector<double> execute_stack(const StackProgram& prog, std::span<const double> features,
                                  std::size_t output_dim);

// Whitespace-separated opcode text, e.g. `x0 x3 add c:1.5 mul`.
std::string to_text(const StackProgram& prog);
StackProgram parse_program(std::string_view text);

// Throws config_error on empty/oversized programs or out-of-range features.
void validate_program(const StackProgram& prog, std::size_t n_features);

Instruction random_instruction(std::size_t n_features, Rng& rng);
// Generation-zero sampler: uniform length in [4,16].
StackProgram random_program(std::size_t n_features, Rng& rng);

// One-point linear crossover; children keep length in [1, kMaxProgramLen].
std::pair<StackProgram, StackProgram> crossover_programs(const StackProgram& a,
                                                         const StackProgram& b, Rng& rng);
// Replaces one uniformly chosen instruction with a fresh random one.
StackProgram point_mutate(const StackProgram& a, std::size_t n_features, Rng& rng);

} // namespace evoparam
