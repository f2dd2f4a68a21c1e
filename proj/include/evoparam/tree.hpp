#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evoparam {

inline constexpr int kMaxArity = 4;
inline constexpr int kMaxTreeDepth = 17; // depth of a lone terminal is 1

// One function primitive. `eval` may be null for primitives that only make
// sense under a dedicated interpreter (the ant controller set). Boolean
// primitives may additionally carry `bit_eval`, the same semantics applied
// to 64 rows at once packed into a word; engines use it to score exhaustive
// truth tables a block at a time.
struct FunctionSpec {
    std::string name;
    int arity = 0;
    double (*eval)(const double* args) = nullptr;
    std::uint64_t (*bit_eval)(const std::uint64_t* args) = nullptr;
};

struct ErcSpec {
    double lo = -1.0;
    double hi = 1.0;
};

// Functions plus terminals a tree may be built from. Terminals are named
// variables (bound to inputs by position) and, optionally, ephemeral random
// constants drawn once at node creation and frozen thereafter.
class PrimitiveSet {
public:
    PrimitiveSet& add_function(std::string name, int arity, double (*eval)(const double*),
                               std::uint64_t (*bit_eval)(const std::uint64_t*) = nullptr);
    PrimitiveSet& add_variable(std::string name);
    PrimitiveSet& set_erc(double lo, double hi);

    // True when every function carries bit-parallel semantics and terminals
    // are plain variables (no constants).
    bool bit_evaluable() const;

    const std::vector<FunctionSpec>& functions() const { return functions_; }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::optional<ErcSpec>& erc() const { return erc_; }

    const FunctionSpec& function(std::size_t i) const { return functions_[i]; }
    std::size_t function_count() const { return functions_.size(); }
    std::size_t variable_count() const { return variables_.size(); }
    std::size_t terminal_count() const { return variables_.size() + (erc_ ? 1 : 0); }

    // -1 when absent
    int function_index(std::string_view name) const;
    int variable_index(std::string_view name) const;

    void validate() const; // unique names, arity in [1,kMaxArity], >= 1 terminal

private:
    std::vector<FunctionSpec> functions_;
    std::vector<std::string> variables_;
    std::optional<ErcSpec> erc_;
};

enum class NodeKind : std::uint8_t { Function, Variable, Constant };

struct TreeNode {
    NodeKind kind = NodeKind::Variable;
    std::uint16_t index = 0; // function or variable index within the primitive set
    double value = 0.0;      // constant payload
    std::vector<TreeNode> children;

    int depth() const;
    int size() const;
};

struct ProgramTree {
    TreeNode root;

    int depth() const { return root.depth(); }
    int size() const { return root.size(); }
};

// Preorder node addressing; used for uniform node selection.
const TreeNode& node_at(const TreeNode& root, int preorder_index);
TreeNode& node_at(TreeNode& root, int preorder_index);

// Arity and depth checks against the set; throws config_error on violation.
void validate_tree(const ProgramTree& tree, const PrimitiveSet& pset);

// Inputs are bound to variables by declaration order in the primitive set.
double evaluate_tree(const ProgramTree& tree, const PrimitiveSet& pset,
                     std::span<const double> inputs);
// Name-bound variant; throws eval_error naming any unbound terminal.
double evaluate_tree(const ProgramTree& tree, const PrimitiveSet& pset,
                     const std::map<std::string, double>& binding);

// Bit-parallel variant over 64 rows at once: inputs[v] holds variable v's
// values across the rows, one bit each. Requires pset.bit_evaluable().
std::uint64_t evaluate_tree_bits(const ProgramTree& tree, const PrimitiveSet& pset,
                                 std::span<const std::uint64_t> inputs);

// Prefix s-expression text, e.g. `(add x (mul x x))`. Constants are printed
// with shortest round-trip formatting, so parse(print(t)) == t.
std::string to_sexpr(const ProgramTree& tree, const PrimitiveSet& pset);
ProgramTree parse_sexpr(std::string_view text, const PrimitiveSet& pset);

} // namespace evoparam
