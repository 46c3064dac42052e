#include "kicked_top/io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "kicked_top/kappa.hpp"

namespace kt::io {

namespace {

std::string optional_int(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("none");
}

std::string optional_double(const std::optional<double>& v) {
    return v ? format17(*v) : std::string("none");
}

} // namespace

std::string format17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::string out = "j,class,kappa,period,phase\n";
    for (const auto& row : rows) {
        out += spin_label(row.spin);
        out += ',';
        out += kappa_class_token(row.kappa_class);
        out += ',';
        out += format17(row.kappa);
        out += ',';
        out += optional_int(row.period);
        out += ',';
        out += optional_double(row.phase);
        out += '\n';
    }
    return out;
}

std::string search_csv(const std::vector<SearchRow>& rows) {
    std::string out = "r,s,j,period,min_entropy\n";
    for (const auto& row : rows) {
        out += std::to_string(row.r);
        out += ',';
        out += std::to_string(row.s);
        out += ',';
        out += spin_label(row.spin);
        out += ',';
        out += optional_int(row.period);
        out += ',';
        out += format17(row.min_entropy);
        out += '\n';
    }
    return out;
}

std::string husimi_csv(const HusimiField& field) {
    std::string out = "theta,phi,q\n";
    for (int i = 0; i < field.theta_count; ++i) {
        for (int l = 0; l < field.phi_count; ++l) {
            out += format17(field.thetas[i]);
            out += ',';
            out += format17(field.phis[l]);
            out += ',';
            out += format17(field.values(i, l));
            out += '\n';
        }
    }
    return out;
}

std::string entropy_csv(const std::vector<double>& values) {
    std::string out = "kick,entropy\n";
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += format17(values[k]);
        out += '\n';
    }
    return out;
}

std::string error_series_csv(const RecurrenceReport& report) {
    std::string out = "k,error\n";
    for (std::size_t i = 0; i < report.error_series.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += format17(report.error_series[i]);
        out += '\n';
    }
    return out;
}

std::string classical_csv(const std::vector<std::vector<SphereAngles>>& trajectories) {
    std::string out = "traj_id,kick,theta,phi\n";
    for (std::size_t t = 0; t < trajectories.size(); ++t) {
        for (std::size_t k = 0; k < trajectories[t].size(); ++k) {
            out += std::to_string(t);
            out += ',';
            out += std::to_string(k);
            out += ',';
            out += format17(trajectories[t][k].theta);
            out += ',';
            out += format17(trajectories[t][k].phi);
            out += '\n';
        }
    }
    return out;
}

std::string landscape_csv(const EntropyLandscape& landscape) {
    std::string out = "theta,phi,avg_entropy\n";
    for (std::size_t i = 0; i < landscape.thetas.size(); ++i) {
        for (std::size_t l = 0; l < landscape.phis.size(); ++l) {
            out += format17(landscape.thetas[i]);
            out += ',';
            out += format17(landscape.phis[l]);
            out += ',';
            out += format17(landscape.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)));
            out += '\n';
        }
    }
    return out;
}

std::string recurrence_report_json(const RecurrenceReport& report) {
    nlohmann::json j;
    j["period"] = report.period ? nlohmann::json(*report.period) : nlohmann::json(nullptr);
    j["phase"] = report.phase ? nlohmann::json(*report.phase) : nlohmann::json(nullptr);
    j["tolerance"] = report.tolerance;
    j["n_max"] = report.n_max;
    j["error_series"] = report.error_series;
    return j.dump(2) + "\n";
}

std::string identity_report_json(const std::vector<IdentityResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json item;
        item["name"] = r.name;
        item["j"] = r.spin.j();
        item["max_deviation"] = r.max_deviation;
        item["tolerance"] = r.tolerance;
        item["pass"] = r.pass;
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

std::string timestamp_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace kt::io
