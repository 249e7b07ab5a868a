#include "eigensteps/io.hpp"

#include "eigensteps/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace eigensteps {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw UsageError(std::string(what) + ": malformed JSON");
    return j;
}

std::vector<double> number_array(const json& j, const char* what) {
    if (!j.is_array())
        throw UsageError(std::string(what) + ": expected a JSON array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number())
            throw UsageError(std::string(what) + ": expected a JSON array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

char first_nonspace(const std::string& text) {
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') return c;
    return '\0';
}

double parse_number(const std::string& token, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(token, &pos);
        while (pos < token.size() &&
               (token[pos] == ' ' || token[pos] == '\t' || token[pos] == '\r'))
            ++pos;
        if (pos != token.size())
            throw UsageError(std::string(what) + ": trailing characters after number '" + token +
                             "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + ": cannot parse number '" + token + "'");
    } catch (const std::out_of_range&) {
        throw UsageError(std::string(what) + ": number out of range '" + token + "'");
    }
}

struct TableParts {
    int n = 0;
    int m = 0;
    std::vector<double> lam;
    std::vector<double> mu;
    std::vector<std::vector<double>> rows;
};

TableParts parse_table_parts(const std::string& text, const char* what) {
    const json j = parse_json(text, what);
    if (!j.is_object() || !j.contains("N") || !j.contains("M") || !j.contains("lam") ||
        !j.contains("mu") || !j.contains("rows"))
        throw UsageError(std::string(what) +
                         ": expected an object with keys N, M, lam, mu, rows");
    TableParts p;
    if (!j["N"].is_number_integer() || !j["M"].is_number_integer())
        throw UsageError(std::string(what) + ": N and M must be integers");
    p.n = j["N"].get<int>();
    p.m = j["M"].get<int>();
    p.lam = number_array(j["lam"], what);
    p.mu = number_array(j["mu"], what);
    if (!j["rows"].is_array())
        throw UsageError(std::string(what) + ": rows must be an array of arrays");
    for (const auto& r : j["rows"]) p.rows.push_back(number_array(r, what));
    return p;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_json(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += format_double(values[i]);
    }
    out += "]";
    return out;
}

std::string to_json(const VerificationReport& report) {
    std::string out = "{\"holds\":";
    out += report.holds() ? "true" : "false";
    out += ",\"checks\":[";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const CheckResult& c = report.checks[i];
        if (i > 0) out += ",";
        out += "{\"name\":\"" + c.name + "\",\"residual\":" + format_double(c.residual) +
               ",\"threshold\":" + format_double(c.threshold) +
               ",\"pass\":" + (c.pass ? "true" : "false") + "}";
    }
    out += "]}";
    return out;
}

std::string to_json(const MajorizationReport& report) {
    std::string out = "{\"holds\":";
    out += report.holds ? "true" : "false";
    out += ",\"worst_partial_slack\":" + format_double(report.worst_partial_slack);
    out += ",\"trace_gap\":" + format_double(report.trace_gap) + "}";
    return out;
}

namespace {

std::string table_json(int n, int m, const std::vector<double>& lam,
                       const std::vector<double>& mu,
                       const std::vector<std::vector<double>>& rows) {
    std::string out = "{\"N\":" + std::to_string(n) + ",\"M\":" + std::to_string(m);
    out += ",\"lam\":" + to_json(lam);
    out += ",\"mu\":" + to_json(mu);
    out += ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) out += ",";
        out += to_json(rows[i]);
    }
    out += "]}";
    return out;
}

} // namespace

std::string to_json(const InnerEigenstepTable& table) {
    return table_json(table.size(), table.size(), table.lam().values(), table.mu().values(),
                      table.rows());
}

std::string to_json(const OuterEigenstepTable& table) {
    return table_json(table.size(), table.dim(), table.lam().values(), table.mu().values(),
                      table.rows());
}

std::string matrix_to_json(const Eigen::MatrixXd& m) {
    std::string out = "{\"M\":" + std::to_string(m.rows()) +
                      ",\"N\":" + std::to_string(m.cols()) + ",\"entries\":[";
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (r != 0 || c != 0) out += ",";
            out += format_double(m(r, c));
        }
    out += "]}";
    return out;
}

std::string matrix_to_csv(const Eigen::MatrixXd& m) {
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ",";
            out += format_double(m(r, c));
        }
        out += "\n";
    }
    return out;
}

std::vector<double> parse_sequence(const std::string& text) {
    const char head = first_nonspace(text);
    if (head == '\0')
        throw UsageError("sequence: input is empty");
    if (head == '[')
        return number_array(parse_json(text, "sequence"), "sequence");
    if (head == '{')
        throw UsageError("sequence: expected a JSON array or one decimal per line");

    std::vector<double> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        out.push_back(parse_number(line.substr(begin, end - begin + 1), "sequence"));
    }
    if (out.empty())
        throw UsageError("sequence: input is empty");
    return out;
}

InnerEigenstepTable parse_inner_table(const std::string& text, const Tolerances& tol) {
    const TableParts p = parse_table_parts(text, "inner table");
    if (p.n < 1 || p.rows.size() != static_cast<std::size_t>(p.n))
        throw UsageError("inner table: expected N rows");
    for (int n = 1; n <= p.n; ++n)
        if (p.rows[static_cast<std::size_t>(n - 1)].size() != static_cast<std::size_t>(n))
            throw UsageError("inner table: row n must have n entries");
    return InnerEigenstepTable(p.rows, Spectrum(p.lam, tol), LengthSequence(p.mu, tol));
}

OuterEigenstepTable parse_outer_table(const std::string& text, const Tolerances& tol) {
    const TableParts p = parse_table_parts(text, "outer table");
    if (p.n < 1 || p.m < 1 || p.rows.size() != static_cast<std::size_t>(p.n + 1))
        throw UsageError("outer table: expected N+1 rows");
    for (const auto& r : p.rows)
        if (r.size() != static_cast<std::size_t>(p.m))
            throw UsageError("outer table: every row must have M entries");
    return OuterEigenstepTable(p.rows, Spectrum(p.lam, tol), LengthSequence(p.mu, tol));
}

Eigen::MatrixXd parse_matrix(const std::string& text) {
    const char head = first_nonspace(text);
    if (head == '{') {
        const json j = parse_json(text, "matrix");
        if (!j.is_object() || !j.contains("M") || !j.contains("N") || !j.contains("entries"))
            throw UsageError("matrix: expected an object with keys M, N, entries");
        if (!j["M"].is_number_integer() || !j["N"].is_number_integer())
            throw UsageError("matrix: M and N must be integers");
        const int rows = j["M"].get<int>();
        const int cols = j["N"].get<int>();
        if (rows < 1 || cols < 1)
            throw UsageError("matrix: M and N must be positive");
        const std::vector<double> entries = number_array(j["entries"], "matrix");
        if (entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
            throw UsageError("matrix: entries must hold M*N numbers in row major order");
        Eigen::MatrixXd m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                m(r, c) = entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                                  static_cast<std::size_t>(c)];
        return m;
    }
    if (head == '[')
        throw UsageError("matrix: expected a JSON object or CSV rows");

    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(parse_number(cell, "matrix"));
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw UsageError("matrix: input is empty");
    for (const auto& r : rows)
        if (r.size() != rows[0].size())
            throw UsageError("matrix: CSV rows must have equal length");
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows[0].size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw UsageError("cannot write file: " + path);
    out << content;
    if (!out)
        throw UsageError("failed while writing file: " + path);
}

} // namespace eigensteps
