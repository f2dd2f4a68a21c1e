#include "evoparam/stack_program.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "evoparam/errors.hpp"

namespace evoparam {

std::vector<double> execute_stack(const StackProgram& prog, std::span<const double> features,
                                  std::size_t output_dim) {
    std::vector<double> stack;
    stack.reserve(prog.code.size());
    for (const auto& ins : prog.code) {
        switch (ins.op) {
        case Instruction::Op::PushFeature:
            if (ins.feature >= features.size())
                throw eval_error("feature index " + std::to_string(ins.feature) + " out of range");
            stack.push_back(features[ins.feature]);
            break;
        case Instruction::Op::PushConst:
            stack.push_back(ins.value);
            break;
        default: {
            if (stack.size() < 2) break; // skip on insufficient stack
            const double b = stack.back();
            stack.pop_back();
            const double a = stack.back();
            stack.pop_back();
            double r = 0.0;
            switch (ins.op) {
            case Instruction::Op::Add: r = a + b; break;
            case Instruction::Op::Sub: r = a - b; break;
            case Instruction::Op::Mul: r = a * b; break;
            default: r = (b == 0.0) ? 1.0 : a / b; break;
            }
            stack.push_back(r);
        }
        }
    }
    stack.resize(output_dim, 0.0);
    return stack;
}

namespace {

std::string format_value(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

} // namespace

std::string to_text(const StackProgram& prog) {
    std::string out;
    for (const auto& ins : prog.code) {
        if (!out.empty()) out += ' ';
        switch (ins.op) {
        case Instruction::Op::PushFeature: out += 'x' + std::to_string(ins.feature); break;
        case Instruction::Op::PushConst: out += "c:" + format_value(ins.value); break;
        case Instruction::Op::Add: out += "add"; break;
        case Instruction::Op::Sub: out += "sub"; break;
        case Instruction::Op::Mul: out += "mul"; break;
        case Instruction::Op::Div: out += "div"; break;
        }
    }
    return out;
}

StackProgram parse_program(std::string_view text) {
    StackProgram prog;
    std::stringstream ss{std::string(text)};
    std::string tok;
    while (ss >> tok) {
        Instruction ins;
        if (tok == "add") {
            ins.op = Instruction::Op::Add;
        } else if (tok == "sub") {
            ins.op = Instruction::Op::Sub;
        } else if (tok == "mul") {
            ins.op = Instruction::Op::Mul;
        } else if (tok == "div") {
            ins.op = Instruction::Op::Div;
        } else if (tok.size() > 1 && tok[0] == 'x') {
            int idx = 0;
            auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), idx);
            if (ec != std::errc{} || ptr != tok.data() + tok.size() || idx < 0)
                throw config_error("bad feature token '" + tok + "'");
            ins.op = Instruction::Op::PushFeature;
            ins.feature = static_cast<std::uint16_t>(idx);
        } else if (tok.rfind("c:", 0) == 0) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(tok.data() + 2, tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw config_error("bad constant token '" + tok + "'");
            ins.op = Instruction::Op::PushConst;
            ins.value = v;
        } else {
            throw config_error("unknown opcode '" + tok + "'");
        }
        prog.code.push_back(ins);
    }
    if (prog.code.empty()) throw config_error("empty stack program");
    return prog;
}

void validate_program(const StackProgram& prog, std::size_t n_features) {
    if (prog.code.empty()) throw config_error("stack program is empty");
    if (prog.code.size() > kMaxProgramLen)
        throw config_error("stack program longer than " + std::to_string(kMaxProgramLen));
    for (const auto& ins : prog.code)
        if (ins.op == Instruction::Op::PushFeature && ins.feature >= n_features)
            throw config_error("feature index " + std::to_string(ins.feature) + " out of range");
}

Instruction random_instruction(std::size_t n_features, Rng& rng) {
    // Pushes get half the mass so random programs keep usable stack depth.
    const double r = uniform_real(rng, 0.0, 1.0);
    Instruction ins;
    if (r < 0.35) {
        ins.op = Instruction::Op::PushFeature;
        ins.feature = static_cast<std::uint16_t>(uniform_int(rng, 0, static_cast<int>(n_features) - 1));
    } else if (r < 0.5) {
        ins.op = Instruction::Op::PushConst;
        ins.value = uniform_real(rng, -1.0, 1.0);
    } else if (r < 0.625) {
        ins.op = Instruction::Op::Add;
    } else if (r < 0.75) {
        ins.op = Instruction::Op::Sub;
    } else if (r < 0.875) {
        ins.op = Instruction::Op::Mul;
    } else {
        ins.op = Instruction::Op::Div;
    }
    return ins;
}

StackProgram random_program(std::size_t n_features, Rng& rng) {
    if (n_features == 0) throw config_error("stack programs need >= 1 feature");
    const int len = uniform_int(rng, static_cast<int>(kInitProgramLenLo),
                                static_cast<int>(kInitProgramLenHi));
    StackProgram prog;
    prog.code.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) prog.code.push_back(random_instruction(n_features, rng));
    return prog;
}

std::pair<StackProgram, StackProgram> crossover_programs(const StackProgram& a,
                                                         const StackProgram& b, Rng& rng) {
    // Cut points in [1, len] keep every child non-empty.
    const auto ca = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(a.length())));
    const auto cb = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(b.length())));
    StackProgram c1, c2;
    c1.code.assign(a.code.begin(), a.code.begin() + static_cast<std::ptrdiff_t>(ca));
    c1.code.insert(c1.code.end(), b.code.begin() + static_cast<std::ptrdiff_t>(cb), b.code.end());
    c2.code.assign(b.code.begin(), b.code.begin() + static_cast<std::ptrdiff_t>(cb));
    c2.code.insert(c2.code.end(), a.code.begin() + static_cast<std::ptrdiff_t>(ca), a.code.end());
    if (c1.code.size() > kMaxProgramLen) c1.code.resize(kMaxProgramLen);
    if (c2.code.size() > kMaxProgramLen) c2.code.resize(kMaxProgramLen);
    return {std::move(c1), std::move(c2)};
}

StackProgram point_mutate(const StackProgram& a, std::size_t n_features, Rng& rng) {
    StackProgram child = a;
    const auto idx =
        static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(a.length()) - 1));
    child.code[idx] = random_instruction(n_features, rng);
    return child;
}

} // namespace evoparam
