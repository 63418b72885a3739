#pragma once

#include <stdexcept>
#include <string>

namespace langshift {

/// Broad failure classes. Each maps to a distinct CLI exit code.
enum class ErrorKind { config, data, numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Pipeline stage that raised the error; empty outside of run_pipeline.
    const std::string& stage() const noexcept { return stage_; }
    void set_stage(std::string stage) { stage_ = std::move(stage); }

private:
    ErrorKind kind_;
    std::string stage_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(ErrorKind::data, what) {}
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error(ErrorKind::numeric, what) {}
};

} // namespace langshift
