#pragma once

#include <string>
#include <vector>

#include "xyn/equation.hpp"

namespace xyn {

// One row of the solution tables, CSV schema
// table,n,alpha,beta,gamma,z,a,b,c,x,y. z is stored verbatim but always
// recomputed from (a,b,c) before use; the shipped file carries the
// source's own z values, typos included.
struct TableRow {
    unsigned table_id = 1;
    unsigned n = 3;
    unsigned alpha = 0, beta = 0, gamma = 0;
    mpz_class z_claimed;
    SUnitExponents exp;
    mpz_class x;
    mpz_class y;

    Solution solution() const { return Solution{x, y, exp, n}; }
};

struct TableLoadError : std::runtime_error {
    TableLoadError(std::size_t line, const std::string& what);
    std::size_t line;
};

// Parses and verifies every row (check_solution must return valid);
// throws TableLoadError with the exact witness otherwise.
std::vector<TableRow> ingest_tables(const std::string& path);

std::vector<TableRow> rows_for_table(const std::vector<TableRow>& rows, unsigned table_id);
std::vector<TableRow> rows_for_n(const std::vector<TableRow>& rows, unsigned n);

// Recomputed denominator scale 2^(a/k) 3^(b/k) 11^(c/k), k = 6 or 4 by n.
mpz_class recompute_z(const TableRow& row);

}  // namespace xyn
