#include <doctest.h>

#include <cmath>

#include "evoparam/engine.hpp"
#include "evoparam/errors.hpp"
#include "evoparam/selection.hpp"

using namespace evoparam;

namespace {

ParameterSet small_params() {
    ParameterSet p;
    p.pop_size = 60;
    p.generations = 15;
    p.crossover_rate = 0.8;
    p.mutation_rate = 0.2;
    p.tournament_size = 3;
    return p;
}

} // namespace

TEST_CASE("run_evolution is deterministic for a fixed seed") {
    const Problem quartic = make_quartic_problem(20, -1.0, 1.0);
    const RunResult a = run_evolution(quartic, small_params(), 424242);
    const RunResult b = run_evolution(quartic, small_params(), 424242);
    CHECK(a.canonical() == b.canonical());
    CHECK(a.best_trace == b.best_trace);

    const RunResult c = run_evolution(quartic, small_params(), 424243);
    CHECK(c.seed != a.seed); // different stream recorded
}

TEST_CASE("run_evolution respects the evaluation budget and fitness range") {
    const Problem parity = make_parity_problem(4);
    ParameterSet p = small_params();
    RunOptions opts;
    opts.stop_when_perfect = false; // exercise the full budget
    const RunResult r = run_evolution(parity, p, 7, opts);
    CHECK(r.best_fitness >= 0.0);
    CHECK(r.best_fitness <= 1.0);
    CHECK(r.evaluations == static_cast<std::int64_t>(p.pop_size) * (p.generations + 1));
    CHECK(r.best_trace.size() == static_cast<std::size_t>(p.generations) + 1);
}

TEST_CASE("run_evolution: parity-5 at pop 500, gen 200 stays within budget") {
    const Problem parity = make_parity_problem(5);
    ParameterSet p;
    p.pop_size = 500;
    p.generations = 200;
    p.crossover_rate = 0.8;
    p.mutation_rate = 0.2;
    p.tournament_size = 7;
    const RunResult r = run_evolution(parity, p, 12345);
    CHECK(r.best_fitness >= 0.0);
    CHECK(r.best_fitness <= 1.0);
    CHECK(r.evaluations <= std::int64_t{500} * 201);
}

TEST_CASE("best-ever fitness trace is monotone non-decreasing") {
    const Problem quartic = make_quartic_problem(20, -1.0, 1.0);
    RunOptions opts;
    opts.stop_when_perfect = false;
    const RunResult r = run_evolution(quartic, small_params(), 99, opts);
    for (std::size_t i = 1; i < r.best_trace.size(); ++i)
        CHECK(r.best_trace[i] >= r.best_trace[i - 1]);
}

TEST_CASE("parallel evaluation produces the same RunResult as serial") {
    const Problem mux = make_multiplexer_problem(2);
    RunOptions serial, parallel;
    serial.eval_threads = 1;
    parallel.eval_threads = 4;
    const RunResult a = run_evolution(mux, small_params(), 1001, serial);
    const RunResult b = run_evolution(mux, small_params(), 1001, parallel);
    CHECK(a.canonical() == b.canonical());
    CHECK(a.best_trace == b.best_trace);
}

TEST_CASE("structural invariants hold in every generation") {
    const Problem quartic = make_quartic_problem(10, -1.0, 1.0);
    RunOptions opts;
    opts.validate = true; // throws on an arity or depth violation
    ParameterSet p = small_params();
    p.mutation_rate = 0.9;
    p.crossover_rate = 0.9;
    CHECK_NOTHROW(run_evolution(quartic, p, 55, opts));
}

TEST_CASE("the exact quartic tree scores normalized fitness 1.0") {
    const Problem quartic = make_quartic_problem(20, -1.0, 1.0);
    const ProgramTree exact = parse_sexpr(
        "(add (add (mul (mul x x) (mul x x)) (mul (mul x x) x)) (add (mul x x) x))",
        quartic.pset);
    CHECK(quartic.tree_fitness(exact) == doctest::Approx(1.0));
}

TEST_CASE("the serialized best genotype reproduces its recorded fitness") {
    for (const Problem& problem :
         {make_quartic_problem(15, -1.0, 1.0), make_parity_problem(4),
          make_multiplexer_problem(2)}) {
        const RunResult r = run_evolution(problem, small_params(), 31337);
        const ProgramTree parsed = parse_sexpr(r.best_genotype, problem.pset);
        CHECK(problem.tree_fitness(parsed) == r.best_fitness);
    }
}

TEST_CASE("engine rejects invalid configurations") {
    const Problem quartic = make_quartic_problem(10, -1.0, 1.0);
    ParameterSet p = small_params();
    p.tournament_size = p.pop_size + 1;
    CHECK_THROWS_AS(run_evolution(quartic, p, 1), config_error);

    const Dataset mux = multiplexer_dataset(2);
    const Problem stack_problem = make_classification_problem(mux, EngineKind::Stack);
    CHECK_THROWS_AS(run_evolution(stack_problem, small_params(), 1), config_error);
}

TEST_CASE("selection pressure: k = n reproduces the with-replacement analytic rate") {
    const int n = 10;
    std::vector<double> fit(n);
    for (int i = 0; i < n; ++i) fit[static_cast<std::size_t>(i)] = 0.01 * (i + 1);
    Rng rng = make_rng(31);
    const int trials = 20000;
    int wins = 0;
    for (int t = 0; t < trials; ++t)
        if (tournament_select(fit, n, rng) == static_cast<std::size_t>(n - 1)) ++wins;
    const double p = 1.0 - std::pow((n - 1.0) / n, n);
    const double sigma = std::sqrt(p * (1.0 - p) / trials);
    CHECK(std::abs(static_cast<double>(wins) / trials - p) < 3.0 * sigma);
}

TEST_CASE("stop_when_perfect only truncates the loop, never the result") {
    // parity-2 is solved almost immediately; the early-stopped run must
    // report the same best fitness with fewer evaluations.
    const Problem parity = make_parity_problem(2);
    ParameterSet p = small_params();
    p.generations = 40;
    RunOptions stop, full;
    stop.stop_when_perfect = true;
    full.stop_when_perfect = false;
    const RunResult a = run_evolution(parity, p, 2024, stop);
    const RunResult b = run_evolution(parity, p, 2024, full);
    REQUIRE(a.best_fitness == doctest::Approx(1.0));
    CHECK(b.best_fitness == doctest::Approx(1.0));
    CHECK(a.evaluations <= b.evaluations);
}
