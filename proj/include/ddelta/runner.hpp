#pragma once

// Config-driven batch runner behind the command-line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddelta/budget.hpp"
#include "ddelta/cech.hpp"
#include "ddelta/error.hpp"
#include "ddelta/polyring.hpp"

namespace ddelta::runner {

inline constexpr int kSchemaVersion = 1;

/// Malformed or inconsistent configuration. `location()` is a JSON pointer or a
/// "line:column" position.
class ConfigError : public Error {
public:
    ConfigError(const std::string& message, std::string location)
        : Error(location.empty() ? message : location + ": " + message), location_(std::move(location))
    {
    }
    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

struct CheckSpec {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
};

struct RunConfig {
    std::uint64_t p = 2;
    std::vector<std::string> vars;
    TermOrder order = TermOrder::degrevlex;
    std::vector<std::string> sequence;
    std::vector<CheckSpec> checks;
    Budget budget;
    std::uint64_t seed = 0;
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

enum class Status { pass, fail, bound_exceeded, budget_exceeded };
std::string to_string(Status status);

struct CheckRecord {
    std::string check;
    std::string instance;
    nlohmann::json params;
    Status status = Status::pass;
    nlohmann::json details;
    double wall_time = 0.0;
    std::size_t order_key = 0;  // position in the deterministic task list
};

struct Report {
    std::string instance;
    std::vector<CheckRecord> records;
    /// Set when the run was rejected as invalid input; records are then empty.
    std::optional<nlohmann::json> error;

    /// 0 all pass, 1 any fail, 2 bound or budget exceeded without failures, 3 invalid input.
    int exit_code() const;
    nlohmann::json to_json(bool include_wall_time = true) const;
};

struct RunOptions {
    unsigned jobs = 1;
    std::optional<std::string> dot_dir;
};

/// Executes every requested check. Invalid input (unparsable sequence, unknown check,
/// bad parameters, non-permutable sequence) yields a report with `error` set and exit code 3.
Report run(const RunConfig& config, const RunOptions& options = {});

struct CheckInfo {
    std::string name;
    std::string params;
    std::string statement;
};

const std::vector<CheckInfo>& check_catalog();
std::string list_checks_text();

nlohmann::json cech_to_json(const CechClass& xi);

}  // namespace ddelta::runner
