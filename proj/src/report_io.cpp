#include "lca/report_io.hpp"

#include <json.hpp>
#include <sstream>

namespace lca {

using nlohmann::json;

static const char *status_str(CheckLine::Status s) {
    switch (s) {
        case CheckLine::Status::Pass: return "pass";
        case CheckLine::Status::Fail: return "fail";
        default: return "skipped";
    }
}

static CheckLine::Status status_of(const std::string &s) {
    if (s == "pass") return CheckLine::Status::Pass;
    if (s == "fail") return CheckLine::Status::Fail;
    if (s == "skipped") return CheckLine::Status::Skipped;
    throw BadReportFile("unknown status '" + s + "'");
}

static json lines_json(const std::vector<CheckLine> &lines) {
    json arr = json::array();
    for (const auto &l : lines)
        arr.push_back({{"name", l.name},
                       {"status", status_str(l.status)},
                       {"residual", l.residual}});
    return arr;
}

std::string lines_to_json(const std::vector<CheckLine> &lines) {
    bool pass = true;
    double worst = 0;
    for (const auto &l : lines) {
        if (l.status == CheckLine::Status::Fail) pass = false;
        worst = std::max(worst, l.residual);
    }
    json j{{"pass", pass}, {"max_residual", worst}, {"lines", lines_json(lines)}};
    return j.dump(2);
}

std::vector<CheckLine> lines_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw BadReportFile(e.what());
    }
    if (!j.contains("lines") || !j["lines"].is_array())
        throw BadReportFile("missing 'lines' array");
    std::vector<CheckLine> out;
    for (const auto &e : j["lines"]) {
        CheckLine l;
        l.name = e.at("name").get<std::string>();
        l.status = status_of(e.at("status").get<std::string>());
        l.residual = e.at("residual").get<double>();
        out.push_back(std::move(l));
    }
    return out;
}

bool lines_equal(const std::vector<CheckLine> &a, const std::vector<CheckLine> &b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].name != b[i].name || a[i].status != b[i].status ||
            a[i].residual != b[i].residual)
            return false;
    return true;
}

std::string decomposition_to_json(const DecompositionReport &d) {
    json j{{"mult", d.mult},
           {"ranks", d.ranks},
           {"residual", d.residual},
           {"consistent", d.consistent}};
    return j.dump(2);
}

DecompositionReport decomposition_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw BadReportFile(e.what());
    }
    DecompositionReport d;
    try {
        d.mult = j.at("mult").get<std::vector<std::vector<int>>>();
        d.ranks = j.at("ranks").get<std::vector<std::vector<int>>>();
        d.residual = j.at("residual").get<double>();
        d.consistent = j.at("consistent").get<bool>();
    } catch (const json::exception &e) {
        throw BadReportFile(e.what());
    }
    return d;
}

std::string matrix_to_csv(const Op &m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ",";
            out << "\"" << m.at(i, j).str() << "\"";
        }
        out << "\n";
    }
    return out.str();
}

std::string mult_table_to_csv(const std::vector<std::vector<int>> &t) {
    std::ostringstream out;
    for (const auto &row : t) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out << ",";
            out << row[j];
        }
        out << "\n";
    }
    return out.str();
}

std::string modular_tables_to_json(const ModularData &md) {
    const HopfAlgebra &h = *md.algebra;
    int k = (int)h.irreps.size();
    json qd = json::array(), tt = json::array(), labels = json::array();
    for (int I = 0; I < k; ++I) {
        labels.push_back(h.irreps[I].label);
        qd.push_back(md.qdim[I].str());
        tt.push_back(md.t_diag[I].str());
    }
    json s = json::array();
    for (int i = 0; i < k; ++i) {
        json row = json::array();
        for (int j = 0; j < k; ++j) row.push_back(md.s.at(i, j).str());
        s.push_back(row);
    }
    json j{{"labels", labels}, {"qdim", qd},      {"t", tt},
           {"s", s},           {"fusion", md.fusion}, {"modular", md.modular},
           {"conjugate", md.conjugate}};
    return j.dump(2);
}

GroupTable group_table_from_json(const std::string &text, const std::string &name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw InvalidGroupTable(e.what());
    }
    if (j.is_object() && j.contains("table")) j = j["table"];
    if (!j.is_array()) throw InvalidGroupTable("expected a list of rows");
    GroupTable g;
    for (const auto &row : j) {
        if (!row.is_array()) throw InvalidGroupTable("expected a list of rows");
        g.table.push_back(row.get<std::vector<int>>());
    }
    for (size_t i = 0; i < g.table.size(); ++i)
        g.names.push_back(name + "_g" + std::to_string(i));
    g.validate();
    return g;
}

}  // namespace lca
