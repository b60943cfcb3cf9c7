#include "xyn/tables.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace xyn {

TableLoadError::TableLoadError(std::size_t line_, const std::string& what)
    : std::runtime_error("tables: line " + std::to_string(line_) + ": " + what), line(line_) {}

namespace {

constexpr const char* kHeader = "table,n,alpha,beta,gamma,z,a,b,c,x,y";

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(cell);
    return out;
}

unsigned parse_small(const std::string& s, std::size_t line, const char* what) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw TableLoadError(line, std::string("bad ") + what + " value '" + s + "'");
    return v;
}

mpz_class parse_big(const std::string& s, std::size_t line, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw TableLoadError(line, std::string("bad ") + what + " value '" + s + "'");
    return mpz_class(s);
}

}  // namespace

std::vector<TableRow> ingest_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TableLoadError(0, "cannot open " + path);

    std::string line;
    std::size_t lineno = 0;
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != kHeader) throw TableLoadError(1, "unexpected header '" + line + "'");
            continue;
        }
        auto cells = split_csv(line);
        if (cells.size() != 11)
            throw TableLoadError(lineno,
                                 "expected 11 columns, got " + std::to_string(cells.size()));
        TableRow row;
        row.table_id = parse_small(cells[0], lineno, "table");
        row.n = parse_small(cells[1], lineno, "n");
        row.alpha = parse_small(cells[2], lineno, "alpha");
        row.beta = parse_small(cells[3], lineno, "beta");
        row.gamma = parse_small(cells[4], lineno, "gamma");
        row.z_claimed = parse_big(cells[5], lineno, "z");
        row.exp = SUnitExponents{parse_small(cells[6], lineno, "a"),
                                 parse_small(cells[7], lineno, "b"),
                                 parse_small(cells[8], lineno, "c")};
        row.x = parse_big(cells[9], lineno, "x");
        row.y = parse_big(cells[10], lineno, "y");
        if (row.table_id < 1 || row.table_id > 6)
            throw TableLoadError(lineno, "table id out of range");

        const CheckResult check = check_solution(row.solution());
        if (check.status == CheckStatus::equation_fails)
            throw TableLoadError(lineno, "row violates the equation, residual = " +
                                             check.witness.get_str());
        if (check.status == CheckStatus::not_coprime)
            throw TableLoadError(lineno, "row is not coprime, gcd = " + check.witness.get_str());
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw TableLoadError(lineno, "no rows");
    return rows;
}

std::vector<TableRow> rows_for_table(const std::vector<TableRow>& rows, unsigned table_id) {
    std::vector<TableRow> out;
    for (const auto& r : rows)
        if (r.table_id == table_id) out.push_back(r);
    return out;
}

std::vector<TableRow> rows_for_n(const std::vector<TableRow>& rows, unsigned n) {
    std::vector<TableRow> out;
    for (const auto& r : rows)
        if (r.n == n && r.table_id <= 3) out.push_back(r);  // tables 4-6 duplicate 1-3
    return out;
}

mpz_class recompute_z(const TableRow& row) {
    const unsigned k = row.n == 3 ? 6 : 4;
    return s_unit_value(SUnitExponents{row.exp.a / k, row.exp.b / k, row.exp.c / k});
}

}  // namespace xyn
