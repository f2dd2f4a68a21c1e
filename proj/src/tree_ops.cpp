#include "evoparam/tree_ops.hpp"

#include "evoparam/errors.hpp"

namespace evoparam {

namespace {

TreeNode random_terminal(const PrimitiveSet& pset, Rng& rng) {
    const int n_vars = static_cast<int>(pset.variable_count());
    const int n_term = static_cast<int>(pset.terminal_count());
    const int slot = uniform_int(rng, 0, n_term - 1);
    TreeNode n;
    if (slot < n_vars) {
        n.kind = NodeKind::Variable;
        n.index = static_cast<std::uint16_t>(slot);
    } else {
        const auto& erc = *pset.erc();
        n.kind = NodeKind::Constant;
        n.value = uniform_real(rng, erc.lo, erc.hi);
    }
    return n;
}

// depth is the 1-based depth of the node being built; target the drawn depth.
TreeNode build(const PrimitiveSet& pset, int depth, int min_depth, int target, GrowMethod method,
               Rng& rng) {
    const std::size_t n_funcs = pset.function_count();
    bool terminal = false;
    if (depth == target || n_funcs == 0) {
        terminal = true;
    } else if (method == GrowMethod::Grow && depth >= min_depth) {
        const double term_ratio = static_cast<double>(pset.terminal_count()) /
                                  static_cast<double>(pset.terminal_count() + n_funcs);
        terminal = chance(rng, term_ratio);
    }
    if (terminal) return random_terminal(pset, rng);

    TreeNode n;
    n.kind = NodeKind::Function;
    n.index = static_cast<std::uint16_t>(uniform_int(rng, 0, static_cast<int>(n_funcs) - 1));
    const int arity = pset.function(n.index).arity;
    n.children.reserve(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i)
        n.children.push_back(build(pset, depth + 1, min_depth, target, method, rng));
    return n;
}

} // namespace

ProgramTree generate_random_tree(const PrimitiveSet& pset, int min_depth, int max_depth,
                                 GrowMethod method, Rng& rng) {
    pset.validate();
    if (min_depth < 1 || min_depth > max_depth || max_depth > kMaxTreeDepth)
        throw config_error("tree depths must satisfy 1 <= min <= max <= " +
                           std::to_string(kMaxTreeDepth));
    const int target = uniform_int(rng, min_depth, max_depth);
    return ProgramTree{build(pset, 1, min_depth, target, method, rng)};
}

ProgramTree ramped_half_and_half(const PrimitiveSet& pset, Rng& rng, int min_depth,
                                 int max_depth) {
    const GrowMethod method = chance(rng, 0.5) ? GrowMethod::Grow : GrowMethod::Full;
    return generate_random_tree(pset, min_depth, max_depth, method, rng);
}

std::pair<ProgramTree, ProgramTree> subtree_crossover(const ProgramTree& a, const ProgramTree& b,
                                                      Rng& rng) {
    // One preorder index, valid in both trees, picks the subtree swapped in
    // each; crossing a tree with itself therefore returns the tree unchanged.
    const int span = std::min(a.size(), b.size());
    const int idx = uniform_int(rng, 0, span - 1);
    ProgramTree child1 = a;
    ProgramTree child2 = b;
    std::swap(node_at(child1.root, idx), node_at(child2.root, idx));
    if (child1.depth() > kMaxTreeDepth) child1 = a;
    if (child2.depth() > kMaxTreeDepth) child2 = b;
    return {std::move(child1), std::move(child2)};
}

ProgramTree subtree_mutate(const ProgramTree& a, const PrimitiveSet& pset, Rng& rng) {
    const int idx = uniform_int(rng, 0, a.size() - 1);
    ProgramTree fresh = generate_random_tree(pset, 1, 2, GrowMethod::Grow, rng);
    ProgramTree child = a;
    node_at(child.root, idx) = std::move(fresh.root);
    if (child.depth() > kMaxTreeDepth) return a;
    return child;
}

} // namespace evoparam
