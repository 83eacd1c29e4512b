#include "csineq/report.hpp"

#include <cstdio>
#include <sstream>

namespace csineq {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json params_to_json(const GridPoint& pt)
{
    json p = json::object();
    for (const auto& [k, v] : pt.values) p[k] = v;
    if (!pt.fn.empty()) p["fn"] = pt.fn;
    return p;
}

std::string exact(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

json config_to_json(const TrialConfig& c)
{
    json norms = json::array();
    for (const auto& ns : c.norm_specs) norms.push_back(ns.str());
    json ab = json::array();
    for (const auto& [a, b] : c.grid.alpha_beta) ab.push_back({a, b});
    return {
        {"suites", c.suites},
        {"n", {c.n_min, c.n_max}},
        {"r", c.r_values},
        {"norms", norms},
        {"grid", {{"mu", c.grid.mu}, {"st", c.grid.st}, {"p", c.grid.p}, {"alpha_beta", ab}, {"alpha", c.grid.alpha}}},
        {"trials", c.trials},
        {"seed", c.master_seed},
        {"tol", c.tol.rel},
        {"omega_tol", c.tol.omega},
        {"quad_tol", c.tol.quad},
        {"pd_floor", c.pd_floor},
        {"curve_grid", c.curve_grid},
        {"surface_grid", c.surface_grid},
    };
}

json verdict_to_json(const InequalityVerdict& v)
{
    json links = json::array();
    for (const auto& l : v.links) links.push_back({{"label", l.label}, {"value", l.value}});
    char fp[17];
    std::snprintf(fp, sizeof fp, "%016llx", static_cast<unsigned long long>(v.instance_fingerprint));
    return {{"suite_id", v.suite_id}, {"links", links},   {"slacks", v.slacks},
            {"tol_used", v.tol_used}, {"abs_tol", v.abs_tol}, {"pass", v.pass},
            {"instance_hash", fp},    {"notes", v.notes}};
}

json to_json(const RunReport& report, bool include_timing)
{
    json suites = json::array();
    for (const auto& s : report.suites) {
        json failures = json::array();
        for (const auto& rec : s.records) {
            if (rec.pass) continue;
            json f = {{"fingerprint", rec.fingerprint}, {"params", params_to_json(rec.point)}};
            if (rec.verdict) {
                json links = json::array();
                for (const auto& l : rec.verdict->links) links.push_back({{"label", l.label}, {"value", l.value}});
                f["links"] = links;
                f["slacks"] = rec.verdict->slacks;
                f["min_slack"] = rec.verdict->min_slack();
                f["notes"] = rec.verdict->notes;
            } else {
                f["links"] = json::array();
                f["min_slack"] = nullptr;
                f["error"] = rec.error;
            }
            failures.push_back(std::move(f));
        }
        suites.push_back({{"id", s.id},
                          {"trials", s.trials},
                          {"grid_size", s.grid_size},
                          {"evaluations", s.records.size()},
                          {"passes", s.passes},
                          {"failures", failures},
                          {"min_slack", optional_number(s.min_slack)},
                          {"min_scaled_slack", optional_number(s.min_scaled_slack)},
                          {"notes", s.notes}});
    }
    json body = {{"config", config_to_json(report.config)}, {"suites", suites}};
    if (include_timing) body["timing"] = {{"wall_time_s", report.wall_time_s}};
    return body;
}

std::string to_csv(const RunReport& report)
{
    static const char* params[] = {"mu", "s", "t", "alpha", "beta", "p", "delta"};
    std::ostringstream os;
    os << "suite_id,fingerprint,trial,n,r,norm";
    for (const char* p : params) os << ',' << p;
    os << ",fn,links,min_slack,pass\n";
    for (const auto& s : report.suites) {
        for (const auto& rec : s.records) {
            os << rec.suite_id << ',' << csv_escape(rec.fingerprint) << ',' << rec.trial << ',' << rec.n << ','
               << exact(rec.r) << ',' << rec.norm;
            for (const char* p : params) {
                os << ',';
                if (auto v = rec.point.get(p)) os << exact(*v);
            }
            os << ',' << csv_escape(rec.point.fn) << ',';
            if (rec.verdict) {
                std::string links;
                for (const auto& l : rec.verdict->links) {
                    if (!links.empty()) links += ';';
                    links += exact(l.value);
                }
                os << links << ',' << exact(rec.verdict->min_slack());
            } else {
                os << ',';
            }
            os << ',' << (rec.pass ? "true" : "false") << '\n';
        }
    }
    return os.str();
}

} // namespace csineq
