#pragma once

#include <stdexcept>
#include <string>

namespace evoparam {

// Invalid configuration or violated call precondition.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Failure while evaluating a genotype (unbound terminal, non-evaluable primitive).
struct eval_error : std::runtime_error {
    explicit eval_error(const std::string& what) : std::runtime_error(what) {}
};

// Failure while reading external data (CSV, trail files, result files).
struct ingest_error : std::runtime_error {
    explicit ingest_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace evoparam
