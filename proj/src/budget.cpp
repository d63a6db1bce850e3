#include "ddelta/budget.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "ddelta/error.hpp"

namespace ddelta {

namespace {

std::atomic<std::uint64_t> g_max_degree{Budget{}.max_degree};
std::atomic<std::uint64_t> g_max_pairs{Budget{}.max_pairs};

std::uint64_t env_value(const char* name, std::uint64_t fallback)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0')
        return fallback;
    try {
        std::size_t used = 0;
        auto v = std::stoull(raw, &used);
        if (used != std::string(raw).size())
            throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw DomainError(std::string("environment variable ") + name + " is not a natural number");
    }
}

}  // namespace

Budget current_budget()
{
    return {g_max_degree.load(std::memory_order_relaxed), g_max_pairs.load(std::memory_order_relaxed)};
}

void set_budget(const Budget& budget)
{
    g_max_degree.store(budget.max_degree, std::memory_order_relaxed);
    g_max_pairs.store(budget.max_pairs, std::memory_order_relaxed);
}

Budget budget_from_environment(Budget base)
{
    base.max_degree = env_value("DDELTA_MAX_DEGREE", base.max_degree);
    base.max_pairs = env_value("DDELTA_MAX_PAIRS", base.max_pairs);
    return base;
}

}  // namespace ddelta
