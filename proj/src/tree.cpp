#include "evoparam/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

#include "evoparam/errors.hpp"

namespace evoparam {

PrimitiveSet& PrimitiveSet::add_function(std::string name, int arity, double (*eval)(const double*),
                                         std::uint64_t (*bit_eval)(const std::uint64_t*)) {
    functions_.push_back({std::move(name), arity, eval, bit_eval});
    return *this;
}

bool PrimitiveSet::bit_evaluable() const {
    if (erc_) return false;
    for (const auto& f : functions_)
        if (!f.bit_eval) return false;
    return true;
}

PrimitiveSet& PrimitiveSet::add_variable(std::string name) {
    variables_.push_back(std::move(name));
    return *this;
}

PrimitiveSet& PrimitiveSet::set_erc(double lo, double hi) {
    if (lo > hi) throw config_error("ERC range has lo > hi");
    erc_ = ErcSpec{lo, hi};
    return *this;
}

int PrimitiveSet::function_index(std::string_view name) const {
    for (std::size_t i = 0; i < functions_.size(); ++i)
        if (functions_[i].name == name) return static_cast<int>(i);
    return -1;
}

int PrimitiveSet::variable_index(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name) return static_cast<int>(i);
    return -1;
}

void PrimitiveSet::validate() const {
    if (terminal_count() == 0)
        throw config_error("primitive set has no terminals");
    std::set<std::string> names;
    for (const auto& f : functions_) {
        if (f.arity < 1 || f.arity > kMaxArity)
            throw config_error("function '" + f.name + "' has arity outside [1," +
                               std::to_string(kMaxArity) + "]");
        if (!names.insert(f.name).second)
            throw config_error("duplicate primitive name '" + f.name + "'");
    }
    for (const auto& v : variables_)
        if (!names.insert(v).second)
            throw config_error("duplicate primitive name '" + v + "'");
}

int TreeNode::depth() const {
    int d = 0;
    for (const auto& c : children) d = std::max(d, c.depth());
    return d + 1;
}

int TreeNode::size() const {
    int n = 1;
    for (const auto& c : children) n += c.size();
    return n;
}

namespace {

TreeNode* find_preorder(TreeNode& node, int& remaining) {
    if (remaining == 0) return &node;
    --remaining;
    for (auto& c : node.children)
        if (TreeNode* hit = find_preorder(c, remaining)) return hit;
    return nullptr;
}

} // namespace

TreeNode& node_at(TreeNode& root, int preorder_index) {
    int remaining = preorder_index;
    TreeNode* hit = find_preorder(root, remaining);
    if (!hit) throw config_error("preorder index out of range");
    return *hit;
}

const TreeNode& node_at(const TreeNode& root, int preorder_index) {
    return node_at(const_cast<TreeNode&>(root), preorder_index);
}

namespace {

void validate_node(const TreeNode& n, const PrimitiveSet& pset) {
    switch (n.kind) {
    case NodeKind::Function: {
        if (n.index >= pset.function_count())
            throw config_error("function index out of range");
        const auto& f = pset.function(n.index);
        if (static_cast<int>(n.children.size()) != f.arity)
            throw config_error("node '" + f.name + "' has " + std::to_string(n.children.size()) +
                               " children, arity is " + std::to_string(f.arity));
        for (const auto& c : n.children) validate_node(c, pset);
        break;
    }
    case NodeKind::Variable:
        if (n.index >= pset.variable_count())
            throw config_error("variable index out of range");
        if (!n.children.empty())
            throw config_error("terminal node has children");
        break;
    case NodeKind::Constant:
        if (!n.children.empty())
            throw config_error("terminal node has children");
        break;
    }
}

} // namespace

void validate_tree(const ProgramTree& tree, const PrimitiveSet& pset) {
    validate_node(tree.root, pset);
    if (tree.depth() > kMaxTreeDepth)
        throw config_error("tree depth " + std::to_string(tree.depth()) + " exceeds " +
                           std::to_string(kMaxTreeDepth));
}

namespace {

double eval_node(const TreeNode& n, const PrimitiveSet& pset, std::span<const double> inputs) {
    switch (n.kind) {
    case NodeKind::Constant:
        return n.value;
    case NodeKind::Variable:
        if (n.index >= inputs.size())
            throw eval_error("terminal '" +
                             (n.index < pset.variable_count() ? pset.variables()[n.index]
                                                              : std::string("?")) +
                             "' is not bound");
        return inputs[n.index];
    case NodeKind::Function: {
        const auto& f = pset.function(n.index);
        if (!f.eval)
            throw eval_error("primitive '" + f.name + "' is not value-evaluable");
        double args[kMaxArity];
        for (int i = 0; i < f.arity; ++i)
            args[i] = eval_node(n.children[static_cast<std::size_t>(i)], pset, inputs);
        return f.eval(args);
    }
    }
    throw eval_error("corrupt node kind");
}

} // namespace

double evaluate_tree(const ProgramTree& tree, const PrimitiveSet& pset,
                     std::span<const double> inputs) {
    return eval_node(tree.root, pset, inputs);
}

namespace {

std::uint64_t eval_node_bits(const TreeNode& n, const PrimitiveSet& pset,
                             std::span<const std::uint64_t> inputs) {
    switch (n.kind) {
    case NodeKind::Variable:
        if (n.index >= inputs.size()) throw eval_error("terminal is not bound");
        return inputs[n.index];
    case NodeKind::Function: {
        const auto& f = pset.function(n.index);
        if (!f.bit_eval)
            throw eval_error("primitive '" + f.name + "' has no bit-parallel semantics");
        std::uint64_t args[kMaxArity];
        for (int i = 0; i < f.arity; ++i)
            args[i] = eval_node_bits(n.children[static_cast<std::size_t>(i)], pset, inputs);
        return f.bit_eval(args);
    }
    case NodeKind::Constant:
    default:
        throw eval_error("constants have no bit-parallel semantics");
    }
}

} // namespace

std::uint64_t evaluate_tree_bits(const ProgramTree& tree, const PrimitiveSet& pset,
                                 std::span<const std::uint64_t> inputs) {
    return eval_node_bits(tree.root, pset, inputs);
}

double evaluate_tree(const ProgramTree& tree, const PrimitiveSet& pset,
                     const std::map<std::string, double>& binding) {
    std::vector<double> inputs(pset.variable_count());
    std::vector<bool> bound(pset.variable_count(), false);
    for (const auto& [name, value] : binding) {
        int idx = pset.variable_index(name);
        if (idx < 0) throw eval_error("binding names unknown terminal '" + name + "'");
        inputs[static_cast<std::size_t>(idx)] = value;
        bound[static_cast<std::size_t>(idx)] = true;
    }
    // Report the first unbound variable actually used by the tree.
    struct Checker {
        const PrimitiveSet& pset;
        const std::vector<bool>& bound;
        void walk(const TreeNode& n) const {
            if (n.kind == NodeKind::Variable && !bound[n.index])
                throw eval_error("terminal '" + pset.variables()[n.index] + "' is not bound");
            for (const auto& c : n.children) walk(c);
        }
    };
    Checker{pset, bound}.walk(tree.root);
    return evaluate_tree(tree, pset, std::span<const double>(inputs));
}

namespace {

std::string format_constant(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void print_node(const TreeNode& n, const PrimitiveSet& pset, std::string& out) {
    switch (n.kind) {
    case NodeKind::Function: {
        out += '(';
        out += pset.function(n.index).name;
        for (const auto& c : n.children) {
            out += ' ';
            print_node(c, pset, out);
        }
        out += ')';
        break;
    }
    case NodeKind::Variable:
        out += pset.variables()[n.index];
        break;
    case NodeKind::Constant:
        out += format_constant(n.value);
        break;
    }
}

struct SexprParser {
    std::string_view text;
    std::size_t pos = 0;
    const PrimitiveSet& pset;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::string_view token() {
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        if (pos == start) throw config_error("s-expression: expected token at offset " +
                                             std::to_string(pos));
        return text.substr(start, pos - start);
    }

    TreeNode atom(std::string_view tok) {
        int vi = pset.variable_index(tok);
        if (vi >= 0) {
            TreeNode n;
            n.kind = NodeKind::Variable;
            n.index = static_cast<std::uint16_t>(vi);
            return n;
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec == std::errc{} && ptr == tok.data() + tok.size()) {
            TreeNode n;
            n.kind = NodeKind::Constant;
            n.value = value;
            return n;
        }
        throw config_error("s-expression: unknown terminal '" + std::string(tok) + "'");
    }

    TreeNode parse(int depth = 1) {
        if (depth > kMaxTreeDepth)
            throw config_error("s-expression: nesting exceeds depth " +
                               std::to_string(kMaxTreeDepth));
        skip_ws();
        if (pos >= text.size()) throw config_error("s-expression: unexpected end of input");
        if (text[pos] != '(') return atom(token());
        ++pos; // '('
        skip_ws();
        std::string_view head = token();
        int fi = pset.function_index(head);
        if (fi < 0) throw config_error("s-expression: unknown function '" + std::string(head) + "'");
        TreeNode n;
        n.kind = NodeKind::Function;
        n.index = static_cast<std::uint16_t>(fi);
        const int arity = pset.function(static_cast<std::size_t>(fi)).arity;
        for (int i = 0; i < arity; ++i) n.children.push_back(parse(depth + 1));
        skip_ws();
        if (pos >= text.size() || text[pos] != ')')
            throw config_error("s-expression: missing ')' for '" + std::string(head) + "'");
        ++pos;
        return n;
    }
};

} // namespace

std::string to_sexpr(const ProgramTree& tree, const PrimitiveSet& pset) {
    std::string out;
    print_node(tree.root, pset, out);
    return out;
}

ProgramTree parse_sexpr(std::string_view text, const PrimitiveSet& pset) {
    SexprParser parser{text, 0, pset};
    ProgramTree tree{parser.parse()};
    parser.skip_ws();
    if (parser.pos != text.size())
        throw config_error("s-expression: trailing input at offset " + std::to_string(parser.pos));
    validate_tree(tree, pset);
    return tree;
}

} // namespace evoparam
