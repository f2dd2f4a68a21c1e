#include <doctest.h>

#include <random>

#include "evoparam/centroid.hpp"
#include "evoparam/engine.hpp"
#include "evoparam/errors.hpp"
#include "evoparam/stack_program.hpp"
#include "oracles.hpp"

using namespace evoparam;

namespace {

Instruction push_feature(int i) {
    Instruction ins;
    ins.op = Instruction::Op::PushFeature;
    ins.feature = static_cast<std::uint16_t>(i);
    return ins;
}

Instruction push_const(double v) {
    Instruction ins;
    ins.op = Instruction::Op::PushConst;
    ins.value = v;
    return ins;
}

Instruction op(Instruction::Op o) {
    Instruction ins;
    ins.op = o;
    return ins;
}

} // namespace

TEST_CASE("execute_stack: pushes, skips and zero padding") {
    const std::vector<double> features{3.5, -1.0};

    StackProgram p1{{push_feature(0)}};
    CHECK(execute_stack(p1, features, 1) == std::vector<double>{3.5});

    StackProgram p2{{op(Instruction::Op::Add)}}; // skipped on the empty stack
    CHECK(execute_stack(p2, features, 1) == std::vector<double>{0.0});

    StackProgram p3{{push_const(2.0), push_const(3.0), op(Instruction::Op::Mul)}};
    CHECK(execute_stack(p3, features, 1) == std::vector<double>{6.0});

    // bottom-to-top truncation keeps the bottom of the stack
    StackProgram p4{{push_const(1.0), push_const(2.0), push_const(3.0)}};
    CHECK(execute_stack(p4, features, 2) == std::vector<double>{1.0, 2.0});

    StackProgram p5{{push_const(4.0), push_const(0.0), op(Instruction::Op::Div)}};
    CHECK(execute_stack(p5, features, 1) == std::vector<double>{1.0}); // protected division
}

TEST_CASE("execute_stack is total over random programs") {
    Rng rng = make_rng(17);
    for (int i = 0; i < 2000; ++i) {
        const StackProgram prog = random_program(5, rng);
        const std::vector<double> features{0.1, -2.0, 3.0, 0.0, 7.5};
        const auto out = execute_stack(prog, features, 3);
        CHECK(out.size() == 3);
    }
}

TEST_CASE("stack program text round trip") {
    StackProgram p{{push_feature(0), push_feature(3), op(Instruction::Op::Add), push_const(1.5),
                    op(Instruction::Op::Mul)}};
    CHECK(to_text(p) == "x0 x3 add c:1.5 mul");
    CHECK(parse_program("x0 x3 add c:1.5 mul") == p);

    Rng rng = make_rng(18);
    for (int i = 0; i < 200; ++i) {
        const StackProgram prog = random_program(8, rng);
        CHECK(parse_program(to_text(prog)) == prog);
    }
    CHECK_THROWS_AS(parse_program(""), config_error);
    CHECK_THROWS_AS(parse_program("x0 nope"), config_error);
}

TEST_CASE("fit_centroids: class means") {
    const std::vector<std::vector<double>> outputs{{0.0}, {2.0}};
    const std::vector<int> labels{0, 0};
    const CentroidModel m = fit_centroids(outputs, labels, 1);
    CHECK(m.centroids[0][0] == doctest::Approx(1.0));

    const std::vector<std::vector<double>> one_each{{1.0, 2.0}, {5.0, -1.0}};
    const std::vector<int> two_labels{0, 1};
    const CentroidModel m2 = fit_centroids(one_each, two_labels, 2);
    CHECK(m2.centroids[0] == std::vector<double>{1.0, 2.0});
    CHECK(m2.centroids[1] == std::vector<double>{5.0, -1.0});

    CHECK_THROWS_AS(fit_centroids(one_each, std::vector<int>{0, 0}, 2), eval_error);
}

TEST_CASE("fit_centroids matches brute-force means on a random 3-class set") {
    std::mt19937 gen(100);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::vector<std::vector<double>> outputs;
    std::vector<int> labels;
    for (int i = 0; i < 100; ++i) {
        outputs.push_back({u(gen), u(gen), u(gen)});
        labels.push_back(i % 3);
    }
    const CentroidModel m = fit_centroids(outputs, labels, 3);
    for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
            double sum = 0.0;
            int count = 0;
            for (std::size_t i = 0; i < outputs.size(); ++i) {
                if (labels[i] != c) continue;
                sum += outputs[i][static_cast<std::size_t>(d)];
                ++count;
            }
            CHECK(m.centroids[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] ==
                  doctest::Approx(sum / count).epsilon(1e-12));
        }
    }
}

TEST_CASE("classify: nearest centroid with label-order ties") {
    CentroidModel m;
    m.output_dim = 1;
    m.centroids = {{0.0}, {10.0}};
    CHECK(classify(m, std::vector<double>{1.0}) == 0);
    CHECK(classify(m, std::vector<double>{9.0}) == 1);
    CHECK(classify(m, std::vector<double>{5.0}) == 0); // equidistant -> class order
}

TEST_CASE("classify agrees with the exhaustive oracle on 1000 random points") {
    std::mt19937 gen(321);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    CentroidModel m;
    m.output_dim = 4;
    for (int c = 0; c < 5; ++c) m.centroids.push_back({u(gen), u(gen), u(gen), u(gen)});
    for (int i = 0; i < 1000; ++i) {
        const std::vector<double> point{u(gen), u(gen), u(gen), u(gen)};
        CHECK(classify(m, point) == oracles::nearest_centroid(m.centroids, point));
    }
}

TEST_CASE("crossover and mutation keep stack programs valid") {
    Rng rng = make_rng(19);
    StackProgram a = random_program(6, rng);
    StackProgram b = random_program(6, rng);
    for (int i = 0; i < 1000; ++i) {
        auto [c1, c2] = crossover_programs(a, b, rng);
        validate_program(c1, 6);
        validate_program(c2, 6);
        c1 = point_mutate(c1, 6, rng);
        validate_program(c1, 6);
        a = std::move(c1);
        b = std::move(c2);
    }
}

TEST_CASE("point_mutate replaces exactly one instruction") {
    Rng rng = make_rng(20);
    const StackProgram a = random_program(6, rng);
    for (int i = 0; i < 100; ++i) {
        const StackProgram m = point_mutate(a, 6, rng);
        REQUIRE(m.length() == a.length());
        int diffs = 0;
        for (std::size_t k = 0; k < a.length(); ++k)
            if (!(m.code[k] == a.code[k])) ++diffs;
        CHECK(diffs <= 1); // the fresh instruction may equal the old one
    }
}

TEST_CASE("run_evolution_stack: determinism and fitness range on mux6") {
    const Dataset mux6 = multiplexer_dataset(2);
    ParameterSet p;
    p.pop_size = 40;
    p.generations = 10;
    p.crossover_rate = 0.7;
    p.mutation_rate = 0.3;
    p.tournament_size = 3;
    const RunResult a = run_evolution_stack(mux6, p, 77);
    const RunResult b = run_evolution_stack(mux6, p, 77);
    CHECK(a.canonical() == b.canonical());
    CHECK(a.best_fitness >= 0.0);
    CHECK(a.best_fitness <= 1.0);
    CHECK(a.evaluations <= static_cast<std::int64_t>(p.pop_size) * (p.generations + 1));
}

TEST_CASE("the serialized best stack program reproduces its recorded fitness") {
    const Dataset mux6 = multiplexer_dataset(2);
    const Problem problem = make_classification_problem(mux6, EngineKind::Stack);
    ParameterSet p;
    p.pop_size = 50;
    p.generations = 12;
    p.crossover_rate = 0.7;
    p.mutation_rate = 0.3;
    p.tournament_size = 4;
    const RunResult r = run_evolution_stack(mux6, p, 271828);
    const StackProgram parsed = parse_program(r.best_genotype);
    CHECK(problem.stack_fitness(parsed) == r.best_fitness);
}

TEST_CASE("a constant program on a balanced two-class set scores 0.5") {
    // All outputs identical: both centroids coincide, every sample resolves
    // to the first class, and per-class recalls are (1.0 + 0.0) / 2.
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    for (int i = 0; i < 50; ++i) {
        rows.push_back({static_cast<double>(i), 1.0});
        labels.push_back(i % 2 == 0 ? "neg" : "pos");
    }
    const Dataset d = make_dataset("toy", {"f0", "f1"}, rows, labels);
    const Problem p = make_classification_problem(d, EngineKind::Stack);
    const StackProgram constant{{push_const(1.0)}};
    CHECK(p.stack_fitness(constant) == doctest::Approx(0.5));
}

TEST_CASE("holdout split: off by default, deterministic per-class tail when on") {
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    for (int i = 0; i < 20; ++i) {
        rows.push_back({static_cast<double>(i)});
        labels.push_back(i % 2 == 0 ? "a" : "b");
    }
    const Dataset d = make_dataset("ho", {"f0"}, rows, labels);

    const Problem full = make_classification_problem(d, EngineKind::Stack);
    CHECK(full.in_train.empty());
    CHECK_THROWS_AS(full.stack_holdout_fitness(StackProgram{{push_feature(0)}}), config_error);

    const Problem held = make_classification_problem(d, EngineKind::Stack, 0.97, 0.25);
    REQUIRE(held.in_train.size() == 20);
    int train = 0, holdout = 0;
    for (auto m : held.in_train) (m ? train : holdout)++;
    CHECK(holdout == 4); // floor(0.25 * 10) per class, 2 classes
    CHECK(train == 16);

    // identical construction gives the identical split
    const Problem again = make_classification_problem(d, EngineKind::Stack, 0.97, 0.25);
    CHECK(again.in_train == held.in_train);

    // both fitness paths work and score real subsets
    const StackProgram prog{{push_feature(0)}};
    CHECK(held.stack_fitness(prog) >= 0.0);
    CHECK(held.stack_fitness(prog) <= 1.0);
    CHECK(held.stack_holdout_fitness(prog) >= 0.0);
    CHECK(held.stack_holdout_fitness(prog) <= 1.0);

    CHECK_THROWS_AS(make_classification_problem(d, EngineKind::Stack, 0.97, 1.0), config_error);
}

TEST_CASE("run_evolution_stack rejects a single-class dataset") {
    std::vector<std::vector<double>> rows{{1.0}, {2.0}};
    const std::vector<std::string> labels{"a", "a"};
    const Dataset d = make_dataset("mono", {"f0"}, rows, labels);
    ParameterSet p;
    p.pop_size = 10;
    p.generations = 2;
    p.tournament_size = 3;
    CHECK_THROWS_AS(run_evolution_stack(d, p, 1), config_error);
}
