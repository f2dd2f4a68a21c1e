#include "evoparam/psets.hpp"

#include "evoparam/errors.hpp"

namespace evoparam::psets {

namespace {

double op_add(const double* a) { return a[0] + a[1]; }
double op_sub(const double* a) { return a[0] - a[1]; }
double op_mul(const double* a) { return a[0] * a[1]; }
double op_div(const double* a) { return a[1] == 0.0 ? 1.0 : a[0] / a[1]; }

bool truthy(double v) { return v != 0.0; }

double op_and(const double* a) { return truthy(a[0]) && truthy(a[1]) ? 1.0 : 0.0; }
double op_or(const double* a) { return truthy(a[0]) || truthy(a[1]) ? 1.0 : 0.0; }
double op_xor(const double* a) { return truthy(a[0]) != truthy(a[1]) ? 1.0 : 0.0; }
double op_not(const double* a) { return truthy(a[0]) ? 0.0 : 1.0; }
double op_if(const double* a) { return truthy(a[0]) ? a[1] : a[2]; }

// 64 rows per word; identical truth tables to the scalar forms above
std::uint64_t bit_and(const std::uint64_t* a) { return a[0] & a[1]; }
std::uint64_t bit_or(const std::uint64_t* a) { return a[0] | a[1]; }
std::uint64_t bit_xor(const std::uint64_t* a) { return a[0] ^ a[1]; }
std::uint64_t bit_not(const std::uint64_t* a) { return ~a[0]; }
std::uint64_t bit_if(const std::uint64_t* a) { return (a[0] & a[1]) | (~a[0] & a[2]); }

} // namespace

PrimitiveSet arithmetic(const std::vector<std::string>& variables, bool with_erc) {
    PrimitiveSet p;
    p.add_function("add", 2, op_add)
        .add_function("sub", 2, op_sub)
        .add_function("mul", 2, op_mul)
        .add_function("div", 2, op_div);
    for (const auto& v : variables) p.add_variable(v);
    if (with_erc) p.set_erc(-1.0, 1.0);
    p.validate();
    return p;
}

PrimitiveSet parity(int n_bits) {
    if (n_bits < 1) throw config_error("parity primitive set needs >= 1 bit");
    PrimitiveSet p;
    p.add_function("and", 2, op_and, bit_and)
        .add_function("or", 2, op_or, bit_or)
        .add_function("xor", 2, op_xor, bit_xor)
        .add_function("not", 1, op_not, bit_not);
    for (int i = 0; i < n_bits; ++i) p.add_variable("b" + std::to_string(i));
    p.validate();
    return p;
}

PrimitiveSet multiplexer(int addr_bits) {
    if (addr_bits < 1) throw config_error("multiplexer primitive set needs >= 1 address bit");
    PrimitiveSet p;
    p.add_function("and", 2, op_and, bit_and)
        .add_function("or", 2, op_or, bit_or)
        .add_function("not", 1, op_not, bit_not)
        .add_function("if", 3, op_if, bit_if);
    for (int i = 0; i < addr_bits; ++i) p.add_variable("a" + std::to_string(i));
    for (int i = 0; i < (1 << addr_bits); ++i) p.add_variable("d" + std::to_string(i));
    p.validate();
    return p;
}

PrimitiveSet ant() {
    PrimitiveSet p;
    p.add_function("if-food-ahead", 2, nullptr)
        .add_function("prog2", 2, nullptr)
        .add_function("prog3", 3, nullptr);
    p.add_variable("move").add_variable("turn-left").add_variable("turn-right");
    p.validate();
    return p;
}

} // namespace evoparam::psets
