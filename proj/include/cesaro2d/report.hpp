#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cesaro2d {

/// Doubles are serialized with 17 significant digits, enough to round-trip
/// exactly.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Tabular experiment output: '#' metadata lines (config echo, verdicts),
/// a mandatory header row, then numeric rows. Wall time is kept out of the
/// serialized form so a rerun with the same config is byte-identical.
struct ExperimentReport {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::pair<std::string, bool>> verdicts;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    double wall_seconds = 0;

    bool all_pass() const {
        for (const auto& [name, ok] : verdicts)
            if (!ok) return false;
        return true;
    }

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw std::out_of_range("ExperimentReport: no column named " + name);
    }

    void add_row(std::vector<double> r) {
        if (r.size() != columns.size())
            throw std::invalid_argument("ExperimentReport: row width mismatch");
        rows.push_back(std::move(r));
    }

    void write_csv(std::ostream& os) const {
        for (const auto& [k, v] : metadata) os << "# " << k << '=' << v << '\n';
        for (const auto& [k, ok] : verdicts)
            os << "# verdict:" << k << '=' << (ok ? "pass" : "fail") << '\n';
        for (std::size_t i = 0; i < columns.size(); ++i)
            os << columns[i] << (i + 1 < columns.size() ? ',' : '\n');
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i)
                os << format_g17(r[i]) << (i + 1 < r.size() ? ',' : '\n');
        }
    }

    std::string to_csv() const {
        std::ostringstream os;
        write_csv(os);
        return os.str();
    }

    /// Parse a serialized report. When value/reference/abs_error columns are
    /// all present, abs_error is recomputed from the other two rather than
    /// trusted.
    static ExperimentReport read_csv(std::istream& is) {
        ExperimentReport rep;
        std::string line;
        bool have_header = false;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            if (line[0] == '#') {
                std::string body = line.substr(1);
                if (!body.empty() && body[0] == ' ') body.erase(0, 1);
                const auto eq = body.find('=');
                if (eq == std::string::npos) continue;
                std::string key = body.substr(0, eq), val = body.substr(eq + 1);
                if (key.rfind("verdict:", 0) == 0)
                    rep.verdicts.emplace_back(key.substr(8), val == "pass");
                else
                    rep.metadata.emplace_back(key, val);
                continue;
            }
            std::vector<std::string> fields = split(line);
            if (!have_header) {
                rep.columns = std::move(fields);
                have_header = true;
                continue;
            }
            std::vector<double> row(fields.size());
            for (std::size_t i = 0; i < fields.size(); ++i) row[i] = std::stod(fields[i]);
            rep.rows.push_back(std::move(row));
        }
        if (!have_header) throw std::runtime_error("ExperimentReport: missing header row");
        recompute_errors(rep);
        return rep;
    }

  private:
    static std::vector<std::string> split(const std::string& line) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                out.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        out.push_back(cur);
        return out;
    }

    static void recompute_errors(ExperimentReport& rep) {
        std::size_t iv = rep.columns.size(), ir = iv, ie = iv;
        for (std::size_t i = 0; i < rep.columns.size(); ++i) {
            if (rep.columns[i] == "value") iv = i;
            if (rep.columns[i] == "reference") ir = i;
            if (rep.columns[i] == "abs_error") ie = i;
        }
        if (iv == rep.columns.size() || ir == rep.columns.size() || ie == rep.columns.size())
            return;
        for (auto& r : rep.rows) r[ie] = std::fabs(r[iv] - r[ir]);
    }
};

}  // namespace cesaro2d
