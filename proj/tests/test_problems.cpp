#include <doctest.h>

#include <bit>
#include <filesystem>
#include <fstream>

#include "evoparam/errors.hpp"
#include "evoparam/metrics.hpp"
#include "evoparam/problems.hpp"
#include "evoparam/tree_ops.hpp"

using namespace evoparam;

namespace {

std::filesystem::path data_dir() { return EVOPARAM_DATA_DIR; }

std::filesystem::path write_temp_csv(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("quartic dataset: polynomial values and spacing") {
    const auto pts = quartic_dataset(21, -1.0, 1.0);
    REQUIRE(pts.size() == 21);
    CHECK(pts.front().first == doctest::Approx(-1.0));
    CHECK(pts.back().first == doctest::Approx(1.0));
    CHECK(pts.front().second == doctest::Approx(0.0));  // x=-1: 1-1+1-1
    CHECK(pts[10].second == doctest::Approx(0.0));      // x=0
    CHECK(pts.back().second == doctest::Approx(4.0));   // x=1: 1+1+1+1
    for (std::size_t i = 1; i < pts.size(); ++i)
        CHECK(pts[i].first - pts[i - 1].first == doctest::Approx(0.1));
    CHECK_THROWS_AS(quartic_dataset(1, -1.0, 1.0), config_error);
    CHECK_THROWS_AS(quartic_dataset(5, 1.0, 1.0), config_error);
}

TEST_CASE("parity dataset: exhaustive rows with even-parity labels") {
    const Dataset d = parity_dataset(8);
    REQUIRE(d.n_samples() == 256);
    REQUIRE(d.n_features == 8);
    REQUIRE(d.n_classes() == 2);

    // all-zeros row is even; a lone 1-bit is odd
    int even_count = 0;
    for (std::size_t i = 0; i < d.n_samples(); ++i) {
        unsigned bits = 0;
        for (std::size_t b = 0; b < 8; ++b)
            if (d.row(i)[b] != 0.0) bits |= 1u << b;
        const bool even = std::popcount(bits) % 2 == 0; // independent recount
        CHECK(d.class_names[static_cast<std::size_t>(d.labels[i])] == (even ? "1" : "0"));
        if (even) ++even_count;
        if (bits == 0) CHECK(d.class_names[static_cast<std::size_t>(d.labels[i])] == "1");
    }
    CHECK(even_count == 128);

    CHECK_THROWS_AS(parity_dataset(1), config_error);
    CHECK_THROWS_AS(parity_dataset(11), config_error);
}

TEST_CASE("parity dataset generation is deterministic") {
    const Dataset a = parity_dataset(5);
    const Dataset b = parity_dataset(5);
    CHECK(a.values == b.values);
    CHECK(a.labels == b.labels);
}

TEST_CASE("multiplexer dataset: selection semantics against a brute-force oracle") {
    const Dataset d = multiplexer_dataset(2);
    REQUIRE(d.n_samples() == 64);
    REQUIRE(d.n_features == 6);
    for (std::size_t i = 0; i < d.n_samples(); ++i) {
        const auto row = d.row(i);
        const int address = static_cast<int>(row[0]) + 2 * static_cast<int>(row[1]);
        const double selected = row[static_cast<std::size_t>(2 + address)];
        CHECK(d.class_names[static_cast<std::size_t>(d.labels[i])] ==
              (selected != 0.0 ? "1" : "0"));
    }
    // addr bits 00 with data line 0 high selects line 0
    for (std::size_t i = 0; i < d.n_samples(); ++i) {
        const auto row = d.row(i);
        if (row[0] == 0.0 && row[1] == 0.0 && row[2] == 1.0)
            CHECK(d.class_names[static_cast<std::size_t>(d.labels[i])] == "1");
    }

    CHECK(multiplexer_dataset(3).n_samples() == 2048);
    CHECK_THROWS_AS(multiplexer_dataset(1), config_error);
    CHECK_THROWS_AS(multiplexer_dataset(4), config_error);
}

TEST_CASE("load_csv_dataset: toy file") {
    const auto path = write_temp_csv("evoparam_toy.csv", "f0,f1,label\n1,2,a\n3,4,b\n");
    const Dataset d = load_csv_dataset(path, "label");
    CHECK(d.n_samples() == 2);
    CHECK(d.n_features == 2);
    CHECK(d.n_classes() == 2);
    CHECK(d.row(1)[0] == doctest::Approx(3.0));
    std::filesystem::remove(path);
}

TEST_CASE("load_csv_dataset: label column by index") {
    const auto path = write_temp_csv("evoparam_idx.csv", "y,f0\nx,1\ny,2\n");
    const Dataset d = load_csv_dataset(path, "0");
    CHECK(d.n_features == 1);
    CHECK(d.n_classes() == 2);
    std::filesystem::remove(path);
}

TEST_CASE("load_csv_dataset: ragged row names the offending row") {
    std::string content = "f0,f1,label\n";
    for (int i = 1; i <= 6; ++i) content += "1,2,a\n";
    content += "1,2\n"; // data row 7 is ragged
    content += "3,4,b\n";
    const auto path = write_temp_csv("evoparam_ragged.csv", content);
    try {
        load_csv_dataset(path, "label");
        FAIL("expected ingest_error");
    } catch (const ingest_error& e) {
        CHECK(std::string(e.what()).find("row 7") != std::string::npos);
    }
    std::filesystem::remove(path);
}

TEST_CASE("load_csv_dataset: non-numeric feature names the row") {
    const auto path =
        write_temp_csv("evoparam_nan.csv", "f0,label\n1,a\noops,b\n2,a\n");
    try {
        load_csv_dataset(path, "label");
        FAIL("expected ingest_error");
    } catch (const ingest_error& e) {
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    }
    std::filesystem::remove(path);
}

TEST_CASE("load_csv_dataset: missing file and single class are errors") {
    CHECK_THROWS_AS(load_csv_dataset("/nonexistent/never.csv", "label"), ingest_error);
    const auto path = write_temp_csv("evoparam_mono.csv", "f0,label\n1,a\n2,a\n");
    CHECK_THROWS_AS(load_csv_dataset(path, "label"), ingest_error);
    std::filesystem::remove(path);
}

TEST_CASE("bundled mux6 CSV: 128 samples, 6 features, 2 classes") {
    const Dataset d = load_csv_dataset(data_dir() / "mux6.csv", "label");
    CHECK(d.n_samples() == 128);
    CHECK(d.n_features == 6);
    CHECK(d.n_classes() == 2);
}

TEST_CASE("bit-parallel table scoring equals the per-row scalar path") {
    // tree_fitness walks 64-row blocks for parity/mux; recompute per row with
    // the public scalar evaluator and balanced_accuracy as the oracle
    for (const Problem& p : {make_parity_problem(4), make_parity_problem(7),
                             make_multiplexer_problem(2), make_multiplexer_problem(3)}) {
        REQUIRE(p.pset.bit_evaluable());
        Rng rng = make_rng(0xb17 + p.data.n_features);
        for (int i = 0; i < 200; ++i) {
            const ProgramTree tree = ramped_half_and_half(p.pset, rng, 1, 6);
            std::vector<int> pred, truth;
            for (std::size_t s = 0; s < p.data.n_samples(); ++s) {
                pred.push_back(evaluate_tree(tree, p.pset, p.data.row(s)) != 0.0 ? 1 : 0);
                truth.push_back(p.data.labels[s]);
            }
            const double want = balanced_accuracy(pred, truth, 2);
            CHECK(p.tree_fitness(tree) == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("normalized_fitness maps raw outcomes onto [0,1]") {
    const Problem reg = make_quartic_problem(10, -1.0, 1.0);
    CHECK(normalized_fitness(reg, 0.0) == doctest::Approx(1.0)); // exact fit
    CHECK(normalized_fitness(reg, 1.0) == doctest::Approx(0.5));
    CHECK(normalized_fitness(reg, 0.5) > normalized_fitness(reg, 0.6)); // monotone

    const Problem par = make_parity_problem(3);
    CHECK(normalized_fitness(par, 1.0) == doctest::Approx(1.0)); // perfect classifier
    CHECK(normalized_fitness(par, 0.25) == doctest::Approx(0.25));

    const Problem ant = make_ant_problem(AntTrail::load(data_dir() / "santafe_trail.txt"));
    CHECK(normalized_fitness(ant, static_cast<double>(ant.trail.food_total)) ==
          doctest::Approx(1.0)); // all food eaten
    CHECK(normalized_fitness(ant, 0.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(normalized_fitness(ant, -1.0), config_error);
}

TEST_CASE("problem construction guards") {
    CHECK_THROWS_AS(make_quartic_problem(10, -1.0, 1.0, 1.5), config_error);
    std::vector<std::vector<double>> rows{{1.0}, {2.0}, {3.0}};
    const Dataset d3 = make_dataset("tri", {"f0"}, rows, {"a", "b", "c"});
    CHECK_THROWS_AS(make_classification_problem(d3, EngineKind::Tree), config_error);
    CHECK_NOTHROW(make_classification_problem(d3, EngineKind::Stack));
    CHECK(make_classification_problem(d3, EngineKind::Stack).output_dim() == 3);
}
