#include "evoparam/ant.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "evoparam/errors.hpp"

namespace evoparam {

AntTrail AntTrail::parse(std::string_view text, int step_budget) {
    if (step_budget < 1) throw config_error("ant step budget must be > 0");
    AntTrail t;
    t.step_budget = step_budget;

    std::vector<std::string> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string row(text.substr(start, end - start));
        if (!row.empty() && row.back() == '\r') row.pop_back();
        if (!row.empty()) rows.push_back(std::move(row));
        if (end == text.size()) break;
        start = end + 1;
    }
    if (rows.empty()) throw ingest_error("ant trail is empty");

    t.height = static_cast<int>(rows.size());
    t.width = static_cast<int>(rows[0].size());
    t.food.assign(static_cast<std::size_t>(t.width) * static_cast<std::size_t>(t.height), 0);

    bool have_start = false;
    for (int r = 0; r < t.height; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != t.width)
            throw ingest_error("ant trail row " + std::to_string(r + 1) + " has width " +
                               std::to_string(rows[static_cast<std::size_t>(r)].size()) +
                               ", expected " + std::to_string(t.width));
        for (int c = 0; c < t.width; ++c) {
            const char ch = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            switch (ch) {
            case '#':
                t.food[static_cast<std::size_t>(r) * static_cast<std::size_t>(t.width) +
                       static_cast<std::size_t>(c)] = 1;
                ++t.food_total;
                break;
            case '.':
                break;
            case 'S':
                if (have_start) throw ingest_error("ant trail has multiple start cells");
                have_start = true;
                t.start_row = r;
                t.start_col = c;
                break;
            default:
                throw ingest_error(std::string("ant trail has unknown cell '") + ch + "'");
            }
        }
    }
    if (!have_start) throw ingest_error("ant trail has no start cell");
    return t;
}

AntTrail AntTrail::load(const std::filesystem::path& path, int step_budget) {
    std::ifstream in(path);
    if (!in) throw ingest_error("cannot open '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), step_budget);
}

namespace {

enum class AntOp : std::uint8_t { IfFoodAhead, Prog2, Prog3, Move, TurnLeft, TurnRight };

struct AntOps {
    std::array<AntOp, 16> function_op{};
    std::array<AntOp, 16> terminal_op{};
};

AntOps resolve_ops(const PrimitiveSet& pset) {
    AntOps ops;
    if (pset.function_count() > ops.function_op.size() ||
        pset.variable_count() > ops.terminal_op.size() || pset.erc())
        throw config_error("controller primitive set is not the ant set");
    for (std::size_t i = 0; i < pset.function_count(); ++i) {
        const auto& f = pset.function(i);
        if (f.name == "if-food-ahead" && f.arity == 2)
            ops.function_op[i] = AntOp::IfFoodAhead;
        else if (f.name == "prog2" && f.arity == 2)
            ops.function_op[i] = AntOp::Prog2;
        else if (f.name == "prog3" && f.arity == 3)
            ops.function_op[i] = AntOp::Prog3;
        else
            throw config_error("controller uses non-ant primitive '" + f.name + "'");
    }
    for (std::size_t i = 0; i < pset.variable_count(); ++i) {
        const auto& v = pset.variables()[i];
        if (v == "move")
            ops.terminal_op[i] = AntOp::Move;
        else if (v == "turn-left")
            ops.terminal_op[i] = AntOp::TurnLeft;
        else if (v == "turn-right")
            ops.terminal_op[i] = AntOp::TurnRight;
        else
            throw config_error("controller uses non-ant primitive '" + v + "'");
    }
    return ops;
}

// Headings: 0 east, 1 south, 2 west, 3 north.
struct Sim {
    const AntTrail& trail;
    std::vector<std::uint8_t> food;
    int row, col, heading;
    int steps = 0;
    int eaten = 0;

    explicit Sim(const AntTrail& t)
        : trail(t), food(t.food), row(t.start_row), col(t.start_col), heading(0) {}

    void ahead(int& r, int& c) const {
        static constexpr int dr[4] = {0, 1, 0, -1};
        static constexpr int dc[4] = {1, 0, -1, 0};
        r = (row + dr[heading] + trail.height) % trail.height;
        c = (col + dc[heading] + trail.width) % trail.width;
    }

    bool food_ahead() const {
        int r, c;
        ahead(r, c);
        return food[static_cast<std::size_t>(r) * static_cast<std::size_t>(trail.width) +
                    static_cast<std::size_t>(c)] != 0;
    }

    void move() {
        ++steps;
        ahead(row, col);
        auto& cell = food[static_cast<std::size_t>(row) * static_cast<std::size_t>(trail.width) +
                          static_cast<std::size_t>(col)];
        if (cell) {
            cell = 0;
            ++eaten;
        }
    }

    void run(const TreeNode& n, const AntOps& ops) {
        if (steps >= trail.step_budget) return;
        if (n.kind != NodeKind::Function) {
            switch (ops.terminal_op[n.index]) {
            case AntOp::Move: move(); break;
            case AntOp::TurnLeft:
                ++steps;
                heading = (heading + 3) % 4;
                break;
            case AntOp::TurnRight:
                ++steps;
                heading = (heading + 1) % 4;
                break;
            default: break;
            }
            return;
        }
        switch (ops.function_op[n.index]) {
        case AntOp::IfFoodAhead: run(n.children[food_ahead() ? 0 : 1], ops); break;
        case AntOp::Prog3:
            run(n.children[0], ops);
            run(n.children[1], ops);
            run(n.children[2], ops);
            break;
        case AntOp::Prog2:
        default:
            run(n.children[0], ops);
            run(n.children[1], ops);
            break;
        }
    }
};

} // namespace

int ant_simulate(const ProgramTree& controller, const PrimitiveSet& pset, const AntTrail& trail) {
    const AntOps ops = resolve_ops(pset);
    validate_tree(controller, pset);
    Sim sim(trail);
    // Every leaf is an action, so each pass consumes at least one step.
    while (sim.steps < trail.step_budget && sim.eaten < trail.food_total)
        sim.run(controller.root, ops);
    return sim.eaten;
}

} // namespace evoparam
