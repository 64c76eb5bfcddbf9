// SPDX-License-Identifier: Apache-2.0

#include "risbeam/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "risbeam/angles.hpp"
#include "risbeam/error.hpp"

namespace risbeam {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path);
    out << text;
    if (!out)
        throw IoError("write failed for " + path);
}

json parse_json(const std::string& text, const std::string& what)
{
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ValidationError("malformed JSON in " + what);
    return doc;
}

// Fail fast on unexpected keys so typos do not silently change a run.
void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where)
{
    if (!obj.is_object())
        throw ValidationError(where + ": expected a JSON object");
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* key : allowed)
            if (item.key() == key)
                ok = true;
        if (!ok)
            throw ValidationError(where + ": unknown key '" + item.key() + "'");
    }
}

double require_number(const json& obj, const char* key, const std::string& where)
{
    if (!obj.contains(key))
        throw ValidationError(where + ": missing key '" + key + "'");
    if (!obj[key].is_number())
        throw ValidationError(where + ": key '" + std::string(key) + "' must be a number");
    return obj[key].get<double>();
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_full(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RadioNode parse_radio_node(const json& obj, const std::string& where)
{
    check_keys(obj,
               {"position_m", "height_m", "tx_power_dbm", "tx_gain_dbi", "rx_gain_dbi",
                "frequency_hz", "bandwidth_hz"},
               where);
    RadioNode node;
    if (!obj.contains("position_m") || !obj["position_m"].is_array() ||
        obj["position_m"].size() != 2)
        throw ValidationError(where + ": position_m must be [x, y]");
    node.position.x_m = obj["position_m"][0].get<double>();
    node.position.y_m = obj["position_m"][1].get<double>();
    node.position.height_m = require_number(obj, "height_m", where);
    node.tx_power_dbm = require_number(obj, "tx_power_dbm", where);
    node.tx_gain_dbi = require_number(obj, "tx_gain_dbi", where);
    if (obj.contains("rx_gain_dbi"))
        node.rx_gain_dbi = require_number(obj, "rx_gain_dbi", where);
    node.frequency_hz = require_number(obj, "frequency_hz", where);
    node.bandwidth_hz = require_number(obj, "bandwidth_hz", where);
    return node;
}

json radio_node_to_json(const RadioNode& node)
{
    return json{{"position_m", {node.position.x_m, node.position.y_m}},
                {"height_m", node.position.height_m},
                {"tx_power_dbm", node.tx_power_dbm},
                {"tx_gain_dbi", node.tx_gain_dbi},
                {"rx_gain_dbi", node.rx_gain_dbi},
                {"frequency_hz", node.frequency_hz},
                {"bandwidth_hz", node.bandwidth_hz}};
}

} // namespace

std::vector<BeamTarget> parse_targets_json(const std::string& text)
{
    json doc = parse_json(text, "target list");
    if (!doc.is_array() || doc.empty())
        throw ValidationError("target list must be a non-empty JSON array");
    std::vector<BeamTarget> targets;
    targets.reserve(doc.size());
    for (const auto& item : doc) {
        check_keys(item, {"theta_deg", "phi_deg"}, "target");
        const double theta = require_number(item, "theta_deg", "target");
        const double phi = require_number(item, "phi_deg", "target");
        targets.emplace_back(deg_to_rad(theta), wrap_two_pi(deg_to_rad(phi)));
    }
    return targets;
}

std::vector<BeamTarget> load_targets_json(const std::string& path)
{
    return parse_targets_json(read_file(path));
}

Scenario parse_scenario_json(const std::string& text)
{
    json doc = parse_json(text, "scenario");
    check_keys(doc,
               {"schema_version", "kind", "bs", "mcbs", "ris", "ues", "pathloss_exponents",
                "bandwidth_mode", "direct_path_blocked", "noise_figure_db", "ricean_k_db"},
               "scenario");
    if (!doc.contains("schema_version"))
        throw ValidationError("scenario: schema_version is required");
    if (doc["schema_version"].get<int>() != kSchemaVersion)
        throw ValidationError("scenario: unsupported schema_version");

    const std::string kind = doc.value("kind", "");
    Scenario s = (kind == "indoor") ? build_indoor() : (kind == "umi") ? build_umi()
        : throw ValidationError("scenario: kind must be 'indoor' or 'umi'");

    s.bs = parse_radio_node(doc.at("bs"), "scenario.bs");
    if (doc.contains("mcbs")) {
        if (kind == "indoor")
            throw ValidationError("scenario: indoor carries no macro cell");
        s.mcbs = parse_radio_node(doc["mcbs"], "scenario.mcbs");
    } else if (kind == "umi") {
        throw ValidationError("scenario: UMi requires a macro cell");
    }

    const json& ris = doc.at("ris");
    check_keys(ris,
               {"position_m", "height_m", "m_count", "n_count", "cell_size_wavelengths",
                "n_states", "efficiency"},
               "scenario.ris");
    s.ris.position.x_m = ris.at("position_m").at(0).get<double>();
    s.ris.position.y_m = ris.at("position_m").at(1).get<double>();
    s.ris.position.height_m = require_number(ris, "height_m", "scenario.ris");
    const int m = static_cast<int>(require_number(ris, "m_count", "scenario.ris"));
    const int n = static_cast<int>(require_number(ris, "n_count", "scenario.ris"));
    const double du = require_number(ris, "cell_size_wavelengths", "scenario.ris");
    s.ris.grid = build_grid(m, n, du, s.bs.frequency_hz);
    s.ris.codebook =
        canonical_codebook(static_cast<int>(require_number(ris, "n_states", "scenario.ris")));
    s.ris.efficiency = require_number(ris, "efficiency", "scenario.ris");

    const json& ues = doc.at("ues");
    check_keys(ues, {"distances_m", "rx_gain_dbi", "azimuth_span_deg"}, "scenario.ues");
    if (!ues.contains("distances_m") || !ues["distances_m"].is_array() ||
        ues["distances_m"].empty())
        throw ValidationError("scenario.ues: distances_m must be a non-empty array");
    s.ues.distances_m = ues["distances_m"].get<std::vector<double>>();
    s.ues.rx_gain_dbi = require_number(ues, "rx_gain_dbi", "scenario.ues");
    s.ues.azimuth_span_deg = require_number(ues, "azimuth_span_deg", "scenario.ues");

    const json& pl = doc.at("pathloss_exponents");
    if (kind == "indoor") {
        check_keys(pl, {"bs_los", "bs_nlos"}, "scenario.pathloss_exponents");
        s.sc_exponents.los = require_number(pl, "bs_los", "pathloss_exponents");
        s.sc_exponents.nlos = require_number(pl, "bs_nlos", "pathloss_exponents");
    } else {
        check_keys(pl, {"scbs_los", "scbs_nlos", "mcbs_los", "mcbs_nlos"},
                   "scenario.pathloss_exponents");
        s.sc_exponents.los = require_number(pl, "scbs_los", "pathloss_exponents");
        s.sc_exponents.nlos = require_number(pl, "scbs_nlos", "pathloss_exponents");
        s.mcbs_exponents = LinkExponents{require_number(pl, "mcbs_los", "pathloss_exponents"),
                                         require_number(pl, "mcbs_nlos", "pathloss_exponents")};
    }

    const std::string mode = doc.value("bandwidth_mode", "full");
    if (mode == "full")
        s.bandwidth_mode = BandwidthMode::full;
    else if (mode == "equal_split")
        s.bandwidth_mode = BandwidthMode::equal_split;
    else
        throw ValidationError("scenario: bandwidth_mode must be 'full' or 'equal_split'");
    s.direct_path_blocked = doc.value("direct_path_blocked", true);
    s.noise_figure_db = doc.value("noise_figure_db", 0.0);
    s.ricean_k_db = doc.value("ricean_k_db", 10.0);

    s.validate();
    return s;
}

Scenario load_scenario_json(const std::string& path)
{
    return parse_scenario_json(read_file(path));
}

std::string scenario_to_json(const Scenario& scenario)
{
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = (scenario.kind == ScenarioKind::indoor) ? "indoor" : "umi";
    doc["bs"] = radio_node_to_json(scenario.bs);
    if (scenario.mcbs)
        doc["mcbs"] = radio_node_to_json(*scenario.mcbs);
    doc["ris"] = json{
        {"position_m", {scenario.ris.position.x_m, scenario.ris.position.y_m}},
        {"height_m", scenario.ris.position.height_m},
        {"m_count", scenario.ris.grid.m_count},
        {"n_count", scenario.ris.grid.n_count},
        {"cell_size_wavelengths",
         scenario.ris.grid.cell_size_m / scenario.ris.grid.wavelength_m},
        {"n_states", scenario.ris.codebook.state_count},
        {"efficiency", scenario.ris.efficiency}};
    doc["ues"] = json{{"distances_m", scenario.ues.distances_m},
                      {"rx_gain_dbi", scenario.ues.rx_gain_dbi},
                      {"azimuth_span_deg", scenario.ues.azimuth_span_deg}};
    if (scenario.kind == ScenarioKind::indoor) {
        doc["pathloss_exponents"] = json{{"bs_los", scenario.sc_exponents.los},
                                         {"bs_nlos", scenario.sc_exponents.nlos}};
    } else {
        doc["pathloss_exponents"] = json{{"scbs_los", scenario.sc_exponents.los},
                                         {"scbs_nlos", scenario.sc_exponents.nlos},
                                         {"mcbs_los", scenario.mcbs_exponents->los},
                                         {"mcbs_nlos", scenario.mcbs_exponents->nlos}};
    }
    doc["bandwidth_mode"] =
        (scenario.bandwidth_mode == BandwidthMode::full) ? "full" : "equal_split";
    doc["direct_path_blocked"] = scenario.direct_path_blocked;
    doc["noise_figure_db"] = scenario.noise_figure_db;
    doc["ricean_k_db"] = scenario.ricean_k_db;
    return doc.dump(2) + "\n";
}

void write_state_matrix_csv(const std::string& path, const Mat<int>& states)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < states.rows(); ++i) {
        for (std::size_t j = 0; j < states.cols(); ++j) {
            if (j)
                out << ',';
            out << states(i, j);
        }
        out << '\n';
    }
    write_file(path, out.str());
}

void write_state_matrix_json(const std::string& path, const Mat<int>& states, int n_states)
{
    json doc;
    doc["m_count"] = states.rows();
    doc["n_count"] = states.cols();
    doc["n_states"] = n_states;
    json rows = json::array();
    for (std::size_t i = 0; i < states.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < states.cols(); ++j)
            row.push_back(states(i, j));
        rows.push_back(std::move(row));
    }
    doc["states"] = std::move(rows);
    write_file(path, doc.dump(2) + "\n");
}

void write_phase_profile_csv(const std::string& path, const PhaseProfile& profile)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < profile.phase.rows(); ++i) {
        for (std::size_t j = 0; j < profile.phase.cols(); ++j) {
            if (j)
                out << ',';
            out << fmt_full(profile.phase(i, j));
        }
        out << '\n';
    }
    write_file(path, out.str());
}

PhaseProfile load_phase_profile_csv(const std::string& path, const UnitCellGrid& grid)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    Mat<double> phase(grid.m_count, grid.n_count);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (row >= phase.rows())
            throw ValidationError("profile CSV has more rows than the grid");
        std::stringstream ls(line);
        std::string cell;
        std::size_t col = 0;
        while (std::getline(ls, cell, ',')) {
            if (col >= phase.cols())
                throw ValidationError("profile CSV has more columns than the grid");
            try {
                phase(row, col) = std::stod(cell);
            } catch (const std::exception&) {
                throw ValidationError("profile CSV: bad number '" + cell + "'");
            }
            ++col;
        }
        if (col != phase.cols())
            throw ValidationError("profile CSV row has too few columns");
        ++row;
    }
    if (row != phase.rows())
        throw ValidationError("profile CSV has too few rows");
    return PhaseProfile(grid, std::move(phase));
}

void write_pattern_csv(const std::string& path, const Pattern& pattern)
{
    double mx = 0.0;
    for (const auto& e : pattern.field.storage())
        mx = std::max(mx, std::abs(e));
    std::ostringstream out;
    out << "theta_deg,phi_deg,re,im,magnitude_db\n";
    for (std::size_t i = 0; i < pattern.angles.theta_rad.size(); ++i) {
        for (std::size_t j = 0; j < pattern.angles.phi_rad.size(); ++j) {
            const auto e = pattern.field(i, j);
            const double mag = std::abs(e);
            const double db =
                (mag > 0.0 && mx > 0.0) ? std::max(20.0 * std::log10(mag / mx), -120.0) : -120.0;
            out << fmt(rad_to_deg(pattern.angles.theta_rad[i])) << ','
                << fmt(rad_to_deg(pattern.angles.phi_rad[j])) << ',' << fmt(e.real()) << ','
                << fmt(e.imag()) << ',' << fmt(db) << '\n';
        }
    }
    write_file(path, out.str());
}

std::string metrics_to_json(const PatternMetrics& metrics)
{
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["directivity_dbi"] = metrics.directivity_dbi;
    doc["realized_gain_dbi"] = metrics.realized_gain_dbi;
    doc["sidelobe_level_db"] = metrics.sidelobe_level_db;
    doc["specular_level_db"] = metrics.specular_level_db;
    json peaks = json::array();
    for (const auto& p : metrics.peak_list) {
        peaks.push_back(json{{"theta_deg", rad_to_deg(p.theta_rad)},
                             {"phi_deg", rad_to_deg(p.phi_rad)},
                             {"level_db", p.level_db}});
    }
    doc["peaks"] = std::move(peaks);
    return doc.dump(2) + "\n";
}

void write_metrics_json(const std::string& path, const PatternMetrics& metrics)
{
    write_file(path, metrics_to_json(metrics));
}

std::string report_to_csv(const std::vector<ThroughputReport>& reports)
{
    if (reports.empty())
        throw ValidationError("report_to_csv: no reports");
    const ReportMeta& meta = reports.front().meta;
    std::ostringstream out;
    out << "# schema_version=" << kSchemaVersion << '\n';
    out << "# bandwidth_mode="
        << ((meta.bandwidth_mode == BandwidthMode::full) ? "full" : "equal_split") << '\n';
    out << "# bs_bandwidth_hz=" << fmt(meta.bs_bandwidth_hz) << '\n';
    if (meta.mcbs_bandwidth_hz > 0.0)
        out << "# mcbs_bandwidth_hz=" << fmt(meta.mcbs_bandwidth_hz) << '\n';
    out << "# seed=" << meta.seed << '\n';
    out << "# fading_drops=" << meta.fading_drops << '\n';
    if (!meta.calibration.empty())
        out << "# calibration=" << meta.calibration << '\n';
    out << "method,K,offset_m,ue_index,snr_db,throughput_bps\n";
    for (const auto& report : reports) {
        const std::string prefix = to_string(report.method) + ',' +
                                   std::to_string(report.ue_count) + ',' +
                                   fmt(report.offset_m) + ',';
        for (const auto& ue : report.ues) {
            out << prefix << ue.index << ',' << fmt(ue.ris_link.snr_db) << ','
                << fmt(ue.throughput_bps) << '\n';
        }
        out << prefix << "total,," << fmt(report.total_throughput_bps) << '\n';
    }
    return out.str();
}

void write_report_csv(const std::string& path, const std::vector<ThroughputReport>& reports)
{
    write_file(path, report_to_csv(reports));
}

} // namespace risbeam
