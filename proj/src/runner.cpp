#include "ddelta/runner.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "ddelta/ddelta_complex.hpp"
#include "ddelta/verify.hpp"

namespace ddelta::runner {

using nlohmann::json;

std::string to_string(Status status)
{
    switch (status) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::bound_exceeded:
        return "bound_exceeded";
    case Status::budget_exceeded:
        return "budget_exceeded";
    }
    return "fail";
}

json cech_to_json(const CechClass& xi)
{
    return {{"numerator", xi.numerator().to_string()}, {"level", xi.level()}};
}

// ---------------------------------------------------------------------------
// Catalog

const std::vector<CheckInfo>& check_catalog()
{
    static const std::vector<CheckInfo> catalog{
        {"colon_identities", "{max: int = 6}",
         "(f^[b] : f^(b-a)) = f^[a] and (f^[b] : f^[a]) = (f^(b-a)) + f^[b] for all 1 <= a < b <= max, "
         "as equal reduced Groebner bases."},
        {"complex_wellformed", "{levels: [int] = [1, 2, p+1, p^2+1]}",
         "The level-a Delta-Delta complex has well-defined differentials with d o d = 0, its unsigned cofaces "
         "satisfy d_k d_j = d_j d_(k-1) for j < k with d = sum (-1)^k d_k, and the annihilator embeddings into "
         "R/f^[a] commute with the differentials up to sign."},
        {"frobenius_stability", "{levels: [int] = [1, 2, p+1, p^2+1]}",
         "r -> f_S^(p-1) r^p on summand S is a semilinear chain map L_a -> L_(ap) commuting exactly with the "
         "differentials and the transition a -> a+1, and the annihilator embeddings carry it to "
         "f_fed = f^(p-1) F_nat."},
        {"quotient_kernel_complexes", "{levels: [int] = [1, 2]}",
         "For 1 <= n <= c the sequence 0 -> K_n -> Q_n -> Q_(n-1) -> 0 of label-filtered complexes is termwise "
         "split exact, Q_n is the complex of f_[n] over R/f_([c]-[n]) and K_n is the complex of f_[n-1] over "
         "R/(f_([c]-[n]), f_n^a) shifted by one."},
        {"verify_vanishing", "{levels: [int] = [2, 3], degrees: [int] = [0..c-1], bound: int = a*p^2}",
         "Every class of H^i(L_a), i < c, maps into the coboundaries of L_b for some b <= bound, so "
         "H^i of the Delta-Delta complex vanishes in the limit; reports the minimal such b per generator."},
        {"top_class_persistence", "{levels: [int] = [2, 3], up_to: int = a*p}",
         "For a >= 2 the class of 1 in the top term R/f^[a] survives every transition a -> b <= up_to, "
         "so the top cohomology H^c is nonzero."},
        {"verify_augmentation", "{max_level: int = 5}",
         "(f^[a] : f) = sum_j (f^[a] : f_j) for 1 <= a <= max_level, and this ideal is the image of the last "
         "differential in R/f^[a]: the kernel of multiplication by f."},
        {"verify_structure_kernels", "{exponents: [int] = [1, 2]}",
         "(f^[q+p] : f^(p-1)) = f^[q+1] for q = p^e, identifying the kernel of the structure morphism of the "
         "Fedder action at level q."},
        {"verify_codim2_V", "{exponents: [int] = [1, 2]}",
         "For c = 2 with (f, g) = (f_1, f_2) and q = p^e: ((fg)^q, f^(q+p), g^(q+1)) : f^(q+1) = (f^(p-1), g^q), "
         "the same with f and g exchanged, and (f^(q+1)) meet (g^(q+1)) lies in ((fg)^q, f^(q+p), g^(q+p)); "
         "the two summands of V have R-spans meeting in 0."},
        {"cech_fedder_algebra", "{samples: int = 100, max_e: int = 3}",
         "On classes {{r/f^a}}: f_fed fixes the image of R/f, f_fed^e({{1/f^2}}) = {{1/f^(p^e+1)}}, "
         "f f_fed(xi) = f_nat(f xi), both actions are p-semilinear, annihilator embeddings are injective, "
         "Fedder-stable and split by their section, and transitions are injective."},
    };
    return catalog;
}

std::string list_checks_text()
{
    std::ostringstream out;
    for (const auto& c : check_catalog())
        out << c.name << "\n  params: " << c.params << "\n  " << c.statement << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Config

namespace {

const std::set<std::string>& known_checks()
{
    static const std::set<std::string> names = [] {
        std::set<std::string> out;
        for (const auto& c : check_catalog())
            out.insert(c.name);
        return out;
    }();
    return names;
}

std::uint64_t require_uint(const json& v, const std::string& where)
{
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw ConfigError("expected a nonnegative integer", where);
    return v.get<std::uint64_t>();
}

}  // namespace

RunConfig parse_config(const json& doc)
{
    if (!doc.is_object())
        throw ConfigError("config must be a JSON object", "/");
    static const std::set<std::string> keys{"p", "vars", "order", "sequence", "checks", "budget", "seed", "description"};
    for (const auto& [key, _] : doc.items())
        if (!keys.count(key))
            throw ConfigError("unknown key '" + key + "'", "/" + key);

    RunConfig cfg;
    if (!doc.contains("p"))
        throw ConfigError("missing characteristic", "/p");
    cfg.p = require_uint(doc["p"], "/p");

    if (!doc.contains("vars") || !doc["vars"].is_array() || doc["vars"].empty())
        throw ConfigError("expected a nonempty list of variable names", "/vars");
    for (std::size_t k = 0; k < doc["vars"].size(); ++k) {
        if (!doc["vars"][k].is_string())
            throw ConfigError("expected a string", "/vars/" + std::to_string(k));
        cfg.vars.push_back(doc["vars"][k].get<std::string>());
    }
    if (doc.contains("order")) {
        if (!doc["order"].is_string())
            throw ConfigError("expected a term order name", "/order");
        try {
            cfg.order = term_order_from_string(doc["order"].get<std::string>());
        } catch (const Error& e) {
            throw ConfigError(e.what(), "/order");
        }
    }

    if (!doc.contains("sequence") || !doc["sequence"].is_array() || doc["sequence"].empty())
        throw ConfigError("expected a nonempty list of polynomials", "/sequence");
    for (std::size_t k = 0; k < doc["sequence"].size(); ++k) {
        if (!doc["sequence"][k].is_string())
            throw ConfigError("expected a polynomial string", "/sequence/" + std::to_string(k));
        cfg.sequence.push_back(doc["sequence"][k].get<std::string>());
    }

    if (!doc.contains("checks") || !doc["checks"].is_array())
        throw ConfigError("expected a list of checks", "/checks");
    for (std::size_t k = 0; k < doc["checks"].size(); ++k) {
        const auto& c = doc["checks"][k];
        const auto where = "/checks/" + std::to_string(k);
        CheckSpec spec;
        if (c.is_string()) {
            spec.name = c.get<std::string>();
        } else if (c.is_object()) {
            for (const auto& [key, _] : c.items())
                if (key != "name" && key != "params")
                    throw ConfigError("unknown key '" + key + "'", where + "/" + key);
            if (!c.contains("name") || !c["name"].is_string())
                throw ConfigError("check needs a name", where + "/name");
            spec.name = c["name"].get<std::string>();
            if (c.contains("params")) {
                if (!c["params"].is_object())
                    throw ConfigError("params must be an object", where + "/params");
                spec.params = c["params"];
            }
        } else {
            throw ConfigError("expected a check name or object", where);
        }
        if (!known_checks().count(spec.name))
            throw ConfigError("unknown check '" + spec.name + "'", where + "/name");
        cfg.checks.push_back(std::move(spec));
    }

    if (doc.contains("budget")) {
        const auto& b = doc["budget"];
        if (!b.is_object())
            throw ConfigError("budget must be an object", "/budget");
        for (const auto& [key, value] : b.items()) {
            if (key == "max_degree")
                cfg.budget.max_degree = require_uint(value, "/budget/max_degree");
            else if (key == "max_pairs")
                cfg.budget.max_pairs = require_uint(value, "/budget/max_pairs");
            else
                throw ConfigError("unknown key '" + key + "'", "/budget/" + key);
        }
    }
    if (doc.contains("seed"))
        cfg.seed = require_uint(doc["seed"], "/seed");
    return cfg;
}

RunConfig parse_config_text(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into line:column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ConfigError(std::string("invalid JSON: ") + e.what(), std::to_string(line) + ":" + std::to_string(col));
    }
    return parse_config(doc);
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file", path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

// ---------------------------------------------------------------------------
// Tasks

namespace {

struct Outcome {
    Status status = Status::pass;
    json details = json::object();
};

struct Task {
    std::string check;
    json params;
    std::function<Outcome()> work;
};

class Params {
public:
    Params(const json& params, std::string where) : params_(params), where_(std::move(where)) {}

    std::uint64_t get(const std::string& key, std::uint64_t fallback, std::uint64_t lo, std::uint64_t hi)
    {
        used_.insert(key);
        if (!params_.contains(key))
            return fallback;
        auto v = require_uint(params_[key], where_ + "/" + key);
        if (v < lo || v > hi)
            throw ConfigError("must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", where_ + "/" + key);
        return v;
    }

    std::optional<std::uint64_t> optional(const std::string& key)
    {
        used_.insert(key);
        if (!params_.contains(key))
            return std::nullopt;
        return require_uint(params_[key], where_ + "/" + key);
    }

    std::vector<std::uint64_t> list(const std::string& key, std::vector<std::uint64_t> fallback, std::uint64_t lo,
                                    std::uint64_t hi)
    {
        used_.insert(key);
        if (!params_.contains(key))
            return fallback;
        const auto& v = params_[key];
        if (!v.is_array() || v.empty())
            throw ConfigError("expected a nonempty list of integers", where_ + "/" + key);
        std::vector<std::uint64_t> out;
        for (std::size_t k = 0; k < v.size(); ++k) {
            auto x = require_uint(v[k], where_ + "/" + key + "/" + std::to_string(k));
            if (x < lo || x > hi)
                throw ConfigError("must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                                  where_ + "/" + key + "/" + std::to_string(k));
            out.push_back(x);
        }
        return out;
    }

    void finish() const
    {
        for (const auto& [key, _] : params_.items())
            if (!used_.count(key))
                throw ConfigError("unknown parameter '" + key + "'", where_ + "/" + key);
    }

private:
    const json& params_;
    std::string where_;
    std::set<std::string> used_;
};

json suite_details(const SuiteReport& rep)
{
    json assertions = json::array();
    for (const auto& a : rep.assertions) {
        json item{{"label", a.label}, {"pass", a.pass}};
        if (!a.pass)
            item["witness"] = a.witness;
        assertions.push_back(std::move(item));
    }
    json out{{"assertions", assertions}};
    if (const auto* f = rep.first_failure())
        out["witness"] = f->label + ": " + f->witness;
    return out;
}

Outcome from_suite(const SuiteReport& rep)
{
    return {rep.pass() ? Status::pass : Status::fail, suite_details(rep)};
}

std::uint64_t checked_power(std::uint64_t p, unsigned e)
{
    std::uint64_t out = 1;
    for (unsigned k = 0; k < e; ++k) {
        if (out > (1ULL << 40) / p)
            throw ConfigError("Frobenius exponent too large", "");
        out *= p;
    }
    return out;
}

std::vector<Task> expand(const RunConfig& cfg, const RegSeqPtr& rs)
{
    const auto p = cfg.p;
    const unsigned c = rs->length();
    const std::uint64_t max_level = 1ULL << 20;
    const std::vector<std::uint64_t> default_levels = [&] {
        std::vector<std::uint64_t> out{1, 2, p + 1, p * p + 1};
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }();

    std::vector<Task> tasks;
    for (std::size_t k = 0; k < cfg.checks.size(); ++k) {
        const auto& spec = cfg.checks[k];
        Params params(spec.params, "/checks/" + std::to_string(k) + "/params");
        const auto& name = spec.name;

        if (name == "colon_identities") {
            auto max = params.get("max", 6, 2, 64);
            tasks.push_back({name, {{"max", max}}, [rs, max] { return from_suite(check_colon_identities(*rs, max)); }});
        } else if (name == "complex_wellformed") {
            for (auto a : params.list("levels", default_levels, 1, max_level))
                tasks.push_back({name, {{"level", a}}, [rs, a] { return from_suite(check_complex_wellformed(build_level(rs, a))); }});
        } else if (name == "frobenius_stability") {
            for (auto a : params.list("levels", default_levels, 1, max_level))
                tasks.push_back({name, {{"level", a}}, [rs, a] { return from_suite(check_frobenius_stability(rs, a)); }});
        } else if (name == "quotient_kernel_complexes") {
            for (auto a : params.list("levels", {1, 2}, 1, max_level))
                tasks.push_back({name, {{"level", a}}, [rs, a] { return from_suite(check_filtration(build_level(rs, a))); }});
        } else if (name == "verify_vanishing") {
            std::vector<std::uint64_t> all_degrees;
            for (unsigned i = 0; i < c; ++i)
                all_degrees.push_back(i);
            auto levels = params.list("levels", {2, 3}, 1, max_level);
            auto degrees = params.list("degrees", all_degrees, 0, c - 1);
            auto bound = params.optional("bound");
            for (auto a : levels)
                for (auto i : degrees) {
                    auto b = bound.value_or(a * p * p);
                    tasks.push_back({name, {{"level", a}, {"degree", i}, {"bound", b}}, [rs, a, i, b] {
                                         auto rep = verify_vanishing(rs, static_cast<unsigned>(i), a, b);
                                         json gens = json::array();
                                         for (const auto& g : rep.generators)
                                             gens.push_back({{"generator", vector_to_string(g.generator)},
                                                             {"death_level", g.death_level ? json(*g.death_level) : json(nullptr)}});
                                         json details{{"cohomology_zero", rep.cohomology_zero},
                                                      {"generators", gens},
                                                      {"levels_tested", rep.levels_tested}};
                                         auto worst = rep.max_death_level();
                                         details["max_death_level"] = worst ? json(*worst) : json(nullptr);
                                         if (!rep.all_died()) {
                                             details["witness"] = "a generator survives to level " + std::to_string(b);
                                             return Outcome{Status::bound_exceeded, details};
                                         }
                                         return Outcome{Status::pass, details};
                                     }});
                }
        } else if (name == "top_class_persistence") {
            auto levels = params.list("levels", {2, 3}, 2, max_level);
            auto up_to = params.optional("up_to");
            for (auto a : levels) {
                auto b = up_to.value_or(a * p);
                if (b < a)
                    throw ConfigError("up_to must be at least every level", "/checks/" + std::to_string(k) + "/params/up_to");
                tasks.push_back({name, {{"level", a}, {"up_to", b}}, [rs, a, b] {
                                     bool ok = top_class_persists(rs, a, b);
                                     json details{{"class", cech_to_json(CechClass(rs, Polynomial::constant(rs->ring_ptr(), 1), a))}};
                                     if (!ok)
                                         details["witness"] = "the class of 1 at level " + std::to_string(a) + " dies by level " +
                                                              std::to_string(b);
                                     return Outcome{ok ? Status::pass : Status::fail, details};
                                 }});
            }
        } else if (name == "verify_augmentation") {
            auto max = params.get("max_level", 5, 1, 64);
            for (std::uint64_t a = 1; a <= max; ++a)
                tasks.push_back({name, {{"level", a}}, [rs, a] {
                                     auto rep = verify_augmentation(rs, a);
                                     json details{{"colon_by_product", rep.colon_by_product.to_string()},
                                                  {"sum_of_colons", rep.sum_of_colons.to_string()},
                                                  {"boundary_image", rep.boundary_image.to_string()},
                                                  {"colon_equal", rep.colon_equal},
                                                  {"image_equal", rep.image_equal}};
                                     if (!rep.pass())
                                         details["witness"] = rep.witness;
                                     return Outcome{rep.pass() ? Status::pass : Status::fail, details};
                                 }});
        } else if (name == "verify_structure_kernels") {
            for (auto e : params.list("exponents", {1, 2}, 1, 8)) {
                checked_power(p, static_cast<unsigned>(e));
                tasks.push_back({name, {{"exponent", e}}, [rs, e] {
                                     auto rep = verify_structure_kernels(rs, static_cast<unsigned>(e));
                                     json details{{"q", rep.q},
                                                  {"colon", rep.colon.to_string()},
                                                  {"expected", rep.expected.to_string()},
                                                  {"k0", {{"numerator", rep.k0_numerator.to_string()},
                                                          {"denominator", rep.k0_denominator.to_string()}}},
                                                  {"v", {{"numerator", rep.v_numerator.to_string()},
                                                         {"denominator", rep.v_denominator.to_string()}}}};
                                     if (!rep.pass())
                                         details["witness"] = rep.witness;
                                     return Outcome{rep.pass() ? Status::pass : Status::fail, details};
                                 }});
            }
        } else if (name == "verify_codim2_V") {
            if (c != 2)
                throw ConfigError("verify_codim2_V needs a sequence of length 2", "/checks/" + std::to_string(k) + "/name");
            for (auto e : params.list("exponents", {1, 2}, 1, 8)) {
                checked_power(p, static_cast<unsigned>(e));
                tasks.push_back({name, {{"exponent", e}}, [rs, e] {
                                     auto rep = verify_codim2_V(rs, static_cast<unsigned>(e));
                                     json details{{"q", rep.q},
                                                  {"colon_f", rep.colon_f.to_string()},
                                                  {"expected_f", rep.expected_f.to_string()},
                                                  {"colon_g", rep.colon_g.to_string()},
                                                  {"expected_g", rep.expected_g.to_string()},
                                                  {"intersection", rep.intersection.to_string()},
                                                  {"container", rep.container.to_string()},
                                                  {"colon_f_equal", rep.colon_f_equal},
                                                  {"colon_g_equal", rep.colon_g_equal},
                                                  {"intersection_contained", rep.intersection_contained}};
                                     if (!rep.pass())
                                         details["witness"] = rep.witness;
                                     return Outcome{rep.pass() ? Status::pass : Status::fail, details};
                                 }});
            }
        } else if (name == "cech_fedder_algebra") {
            auto samples = params.get("samples", 100, 0, 100000);
            auto max_e = params.get("max_e", 3, 0, 6);
            checked_power(p, static_cast<unsigned>(max_e));
            auto seed = cfg.seed;
            tasks.push_back({name, {{"samples", samples}, {"max_e", max_e}, {"seed", seed}}, [rs, samples, max_e, seed] {
                                 auto rep = check_cech_fedder_algebra(rs, seed, static_cast<unsigned>(samples),
                                                                      static_cast<unsigned>(max_e));
                                 auto out = from_suite(rep);
                                 json gens = json::array();
                                 CechClass xi(rs, Polynomial::constant(rs->ring_ptr(), 1), 2);
                                 for (std::uint64_t e = 1; e <= max_e; ++e) {
                                     xi = f_fed(xi);
                                     gens.push_back({{"e", e}, {"class", cech_to_json(xi)}});
                                 }
                                 out.details["fedder_orbit_of_inverse_square"] = gens;
                                 return out;
                             }});
        }
        params.finish();
    }
    return tasks;
}

Outcome execute(const Task& task)
{
    try {
        return task.work();
    } catch (const BudgetExceeded& e) {
        return {Status::budget_exceeded, {{"message", e.what()}}};
    } catch (const OverflowError& e) {
        return {Status::budget_exceeded, {{"message", e.what()}}};
    } catch (const std::exception& e) {
        return {Status::fail, {{"message", e.what()}, {"witness", std::string("internal error: ") + e.what()}}};
    }
}

std::string describe_instance(const RunConfig& cfg)
{
    std::string vars;
    for (const auto& v : cfg.vars)
        vars += (vars.empty() ? "" : ",") + v;
    std::string seq;
    for (const auto& s : cfg.sequence)
        seq += (seq.empty() ? "" : ", ") + s;
    return "F_" + std::to_string(cfg.p) + "[" + vars + "] (" + std::string(to_string(cfg.order)) + "): (" + seq + ")";
}

Report invalid(Report rep, const std::string& kind, const std::string& message, json extra = json::object())
{
    json err{{"kind", kind}, {"message", message}};
    for (auto& [k, v] : extra.items())
        err[k] = v;
    rep.error = std::move(err);
    return rep;
}

}  // namespace

// ---------------------------------------------------------------------------

int Report::exit_code() const
{
    if (error)
        return 3;
    bool exceeded = false;
    for (const auto& r : records) {
        if (r.status == Status::fail)
            return 1;
        if (r.status != Status::pass)
            exceeded = true;
    }
    return exceeded ? 2 : 0;
}

json Report::to_json(bool include_wall_time) const
{
    json out{{"schema_version", kSchemaVersion}, {"instance", instance}};
    json summary{{"pass", 0}, {"fail", 0}, {"bound_exceeded", 0}, {"budget_exceeded", 0}};
    json recs = json::array();
    for (const auto& r : records) {
        summary[to_string(r.status)] = summary[to_string(r.status)].get<int>() + 1;
        json item{{"check", r.check},
                  {"instance", r.instance},
                  {"params", r.params},
                  {"status", to_string(r.status)},
                  {"details", r.details}};
        if (include_wall_time)
            item["wall_time"] = r.wall_time;
        recs.push_back(std::move(item));
    }
    summary["exit_code"] = exit_code();
    out["summary"] = summary;
    out["records"] = recs;
    if (error)
        out["error"] = *error;
    return out;
}

Report run(const RunConfig& cfg, const RunOptions& options)
{
    Report rep;
    rep.instance = describe_instance(cfg);

    RingPtr ring;
    try {
        ring = make_ring(cfg.p, cfg.vars, cfg.order);
    } catch (const Error& e) {
        return invalid(std::move(rep), "ring", e.what());
    }
    std::vector<Polynomial> f;
    for (std::size_t k = 0; k < cfg.sequence.size(); ++k) {
        try {
            f.push_back(parse_polynomial(cfg.sequence[k], ring));
        } catch (const ParseError& e) {
            return invalid(std::move(rep), "parse", e.what(),
                           {{"location", "/sequence/" + std::to_string(k)}, {"offset", e.offset()}});
        } catch (const Error& e) {
            return invalid(std::move(rep), "parse", e.what(), {{"location", "/sequence/" + std::to_string(k)}});
        }
    }

    set_budget(budget_from_environment(cfg.budget));

    RegSeqPtr rs;
    try {
        rs = RegularSequence::create(ring, f);
    } catch (const NotPermutable& e) {
        json failures = json::array();
        for (const auto& fl : e.certificate().failures)
            failures.push_back({{"T", fl.t.to_string()}, {"j", fl.j}});
        return invalid(std::move(rep), "not_permutable", e.what(), {{"certificate", failures}});
    } catch (const BudgetExceeded& e) {
        rep.records.push_back({"permutability", rep.instance, json::object(), Status::budget_exceeded,
                               {{"message", e.what()}}, 0.0, 0});
        return rep;
    }

    std::vector<Task> tasks;
    try {
        tasks = expand(cfg, rs);
    } catch (const ConfigError& e) {
        return invalid(std::move(rep), "config", e.what(), {{"location", e.location()}});
    }

    if (options.dot_dir) {
        std::filesystem::create_directories(*options.dot_dir);
        std::set<std::uint64_t> levels;
        for (const auto& t : tasks)
            if (t.check == "complex_wellformed" || t.check == "quotient_kernel_complexes")
                levels.insert(t.params["level"].get<std::uint64_t>());
        if (levels.empty())
            levels = {1, 2};
        for (auto a : levels) {
            std::ofstream out(std::filesystem::path(*options.dot_dir) / ("level_" + std::to_string(a) + ".dot"));
            out << to_dot(build_level(rs, a));
        }
    }

    rep.records.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
            auto start = std::chrono::steady_clock::now();
            auto outcome = execute(tasks[k]);
            auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            rep.records[k] = {tasks[k].check, rep.instance, tasks[k].params, outcome.status, std::move(outcome.details),
                              secs, k};
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    std::sort(rep.records.begin(), rep.records.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.order_key < b.order_key; });
    return rep;
}

}  // namespace ddelta::runner
