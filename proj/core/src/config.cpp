#include "oscidyn/config.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "oscidyn/errors.hpp"

namespace oscidyn {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ConfigError("config field '" + field + "': " + why);
}

const json& require(const json& obj, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(key, "missing");
    return *it;
}

double number(const json& obj, const std::string& key) {
    const json& v = require(obj, key);
    if (!v.is_number()) fail(key, "must be a number");
    return v.get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number()) fail(key, "must be a number");
    return it->get<double>();
}

int integer(const json& obj, const std::string& key) {
    const json& v = require(obj, key);
    if (!v.is_number_integer()) fail(key, "must be an integer");
    return v.get<int>();
}

int integer_or(const json& obj, const std::string& key, int fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number_integer()) fail(key, "must be an integer");
    return it->get<int>();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) fail(where + it.key(), "unknown key");
}

cplx parse_z0(const json& v) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    fail("z0", "must be a number or [re, im]");
}

}  // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config file: " + path);

    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
    reject_unknown(doc, {"model", "z0", "tau_max", "dt", "n_out"}, "");

    const json& model = require(doc, "model");
    if (!model.is_object()) fail("model", "must be an object");
    const json& type = require(model, "type");
    if (!type.is_string()) fail("model.type", "must be a string");

    RunConfig cfg;
    const std::string kind = type.get<std::string>();
    if (kind == "scaled") {
        reject_unknown(model, {"type", "l", "Gamma", "delta_bar", "n_d", "N", "g_l"}, "model.");
        cfg.model.l = integer(model, "l");
        cfg.model.Gamma = number_or(model, "Gamma", 0.0);
        cfg.model.delta_bar = number_or(model, "delta_bar", 0.0);
        cfg.model.n_d = number_or(model, "n_d", 0.0);
        cfg.model.N = number_or(model, "N", 1.0);
        cfg.model.g_l = number_or(model, "g_l", 1.0);
    } else if (kind == "physical") {
        reject_unknown(model, {"type", "l", "lambda", "N", "Delta", "gamma", "n_d"}, "model.");
        PhysicalParams p;
        p.l = integer(model, "l");
        p.lambda = number(model, "lambda");
        p.N = number(model, "N");
        p.Delta = number_or(model, "Delta", 0.0);
        p.gamma = number_or(model, "gamma", 0.0);
        p.n_d = number_or(model, "n_d", 0.0);
        cfg.physical = p;
        cfg.model = scale_parameters(p);
    } else {
        fail("model.type", "must be \"scaled\" or \"physical\"");
    }
    validate(cfg.model);

    if (auto it = doc.find("z0"); it != doc.end()) cfg.z0 = parse_z0(*it);
    cfg.tau_max = number(doc, "tau_max");
    if (!(cfg.tau_max >= 0)) fail("tau_max", "must be >= 0");
    cfg.dt = number_or(doc, "dt", 1e-3);
    if (!(cfg.dt > 0)) fail("dt", "must be > 0");
    cfg.n_out = integer_or(doc, "n_out", 40);
    if (cfg.n_out < 1) fail("n_out", "must be >= 1");

    return cfg;
}

}  // namespace oscidyn
