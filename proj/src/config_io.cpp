#include "districtpv/config_io.hpp"

#include <fstream>

#include <json.hpp>

#include "districtpv/errors.hpp"

namespace districtpv {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), 0);
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

double require_number(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ValidationError("missing numeric field '" + std::string(key) + "' in " + path);
    return j.at(key).get<double>();
}

} // namespace

ScenarioSpec load_scenario(const std::string& path) {
    const json j = read_json(path);
    ScenarioSpec s;
    s.name = j.value("name", std::string("unnamed"));
    s.site_area_m2 = require_number(j, "site_area_m2", path);
    s.pv_area_coefficient_m2_per_kw = j.value("pv_area_coefficient_m2_per_kw", 7.0);
    if (!j.contains("buildings") || !j.at("buildings").is_array())
        throw ValidationError("scenario file lacks a buildings array: " + path);
    for (const auto& jb : j.at("buildings")) {
        BuildingSpec b;
        b.id = jb.value("id", std::string("b") + std::to_string(s.buildings.size() + 1));
        b.footprint_area_m2 = require_number(jb, "footprint_area_m2", path);
        b.height_m = require_number(jb, "height_m", path);
        b.floor_height_m = jb.value("floor_height_m", 3.0);
        if (jb.contains("perimeter_m")) b.perimeter_m = jb.at("perimeter_m").get<double>();
        s.buildings.push_back(std::move(b));
    }
    return s;
}

std::string scenario_to_json(const ScenarioSpec& s) {
    json j;
    j["schema_version"] = 1;
    j["name"] = s.name;
    j["site_area_m2"] = s.site_area_m2;
    j["pv_area_coefficient_m2_per_kw"] = s.pv_area_coefficient_m2_per_kw;
    j["buildings"] = json::array();
    for (const auto& b : s.buildings) {
        json jb;
        jb["id"] = b.id;
        jb["footprint_area_m2"] = b.footprint_area_m2;
        jb["height_m"] = b.height_m;
        jb["floor_height_m"] = b.floor_height_m;
        if (b.perimeter_m) jb["perimeter_m"] = *b.perimeter_m;
        j["buildings"].push_back(jb);
    }
    return j.dump(2) + "\n";
}

DemandParams load_demand_params(const std::string& path) {
    const json j = read_json(path);
    DemandParams p;
    p.lighting_intensity_kwh_m2 = require_number(j, "lighting_intensity_kwh_m2", path);
    p.equipment_intensity_kwh_m2 = require_number(j, "equipment_intensity_kwh_m2", path);
    p.heating_envelope_w_m2k = require_number(j, "heating_envelope_w_m2k", path);
    p.cooling_gain_w_m2k = require_number(j, "cooling_gain_w_m2k", path);
    p.heating_cop = j.value("heating_cop", 2.27);
    p.cooling_cop = j.value("cooling_cop", 2.51);
    p.heating_base_c = j.value("heating_base_c", 18.0);
    p.cooling_base_c = j.value("cooling_base_c", 24.0);
    if (j.contains("weekly_schedule")) {
        const auto& sched = j.at("weekly_schedule");
        if (!sched.is_array() || sched.size() != 168)
            throw ValidationError("weekly_schedule must hold 168 values: " + path);
        for (std::size_t i = 0; i < 168; ++i) p.weekly_schedule[i] = sched[i].get<double>();
    }
    p.validate();
    return p;
}

std::string demand_params_to_json(const DemandParams& p) {
    json j;
    j["schema_version"] = 1;
    j["lighting_intensity_kwh_m2"] = p.lighting_intensity_kwh_m2;
    j["equipment_intensity_kwh_m2"] = p.equipment_intensity_kwh_m2;
    j["heating_envelope_w_m2k"] = p.heating_envelope_w_m2k;
    j["cooling_gain_w_m2k"] = p.cooling_gain_w_m2k;
    j["heating_cop"] = p.heating_cop;
    j["cooling_cop"] = p.cooling_cop;
    j["heating_base_c"] = p.heating_base_c;
    j["cooling_base_c"] = p.cooling_base_c;
    j["weekly_schedule"] = p.weekly_schedule;
    return j.dump(2) + "\n";
}

void save_demand_params(const DemandParams& p, const std::string& path) {
    write_text(path, demand_params_to_json(p));
}

DemandTargets load_demand_targets(const std::string& path) {
    const json j = read_json(path);
    DemandTargets t;
    t.lighting_kwh = require_number(j, "lighting_kwh", path);
    t.equipment_kwh = require_number(j, "equipment_kwh", path);
    t.heating_kwh = require_number(j, "heating_kwh", path);
    t.cooling_kwh = require_number(j, "cooling_kwh", path);
    return t;
}

FinanceParams load_finance_params(const std::string& path) {
    const json j = read_json(path);
    FinanceParams p;
    p.project_years = static_cast<int>(j.value("project_years", 25));
    p.discount_rate = j.value("discount_rate", 0.03);
    p.capital_cost_per_w = require_number(j, "capital_cost_per_w", path);
    p.maintenance_per_kw_yr = j.value("maintenance_per_kw_yr", 31.4);
    p.buy_price_per_kwh = j.value("buy_price_per_kwh", 0.15);
    p.sell_price_per_kwh = j.value("sell_price_per_kwh", 0.08);
    p.emission_factor_kg_per_kwh = j.value("emission_factor_kg_per_kwh", 0.455);
    p.currency_note = j.value("currency_note", std::string("110 JPY/USD"));
    p.validate();
    return p;
}

FinanceParams finance_preset(const std::string& name) {
    if (name == "2018") return FinanceParams::preset_2018();
    if (name == "2030") return FinanceParams::preset_2030();
    throw UsageError("unknown finance preset '" + name + "' (expected 2018 or 2030)");
}

} // namespace districtpv
