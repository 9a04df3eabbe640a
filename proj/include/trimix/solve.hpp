#ifndef TRIMIX_SOLVE_HPP
#define TRIMIX_SOLVE_HPP

#include <trimix/basis.hpp>
#include <trimix/qseries.hpp>

#include <optional>
#include <string>
#include <vector>

namespace trimix
{

struct coefficient_vector {
    space_id space;
    basis_convention convention = basis_convention::catalog;
    std::vector<rational> values;
    // Number of leading q-coefficients checked against the target.
    long verified_through = 0;
};

// Number of q-coefficients used when solving and verifying in s:
// at least the Sturm bound and dimension + 5.
long default_rows(const space_id &s, basis_convention c = basis_convention::catalog);

/*
 * Solves sum t_i f_i = target on every integer coefficient the target knows.
 * Pivot rows are picked greedily from the top; the solution is then checked
 * on all rows. Needs at least sturm_bound(s) known coefficients.
 */
coefficient_vector express_in_basis(const series24 &target, const space_id &s,
                                    basis_convention c = basis_convention::catalog);

// sum t_i f_i through prec24.
series24 combine(const std::vector<rational> &t, const space_id &s, basis_convention c, long prec24);

std::vector<formula_term> formula_terms(const coefficient_vector &v);
std::string formula_as_divisor_sums(const coefficient_vector &v);

// Exact rank of a rational matrix (rows of equal length).
std::size_t rank(std::vector<std::vector<rational>> m);

struct table_row {
    std::string table;
    int row = 0;
    std::string form;
    space_id space;
    basis_convention convention = basis_convention::catalog;
    long printed_shift = -1;
    std::vector<rational> t;
};

struct row_result {
    table_row row;
    bool matched = false;
    std::vector<rational> solved;
    // Positions where solved and printed vectors differ.
    std::vector<std::size_t> diff;
    // First q-exponent where the printed vector fails to reproduce the target.
    std::optional<long> paper_residual_index;
    std::string paper_residual;
    std::string error;
    long verified_through = 0;
};

struct table_report {
    std::vector<row_result> rows;

    std::size_t matched() const;
};

std::vector<table_row> load_fixture(const std::string &path);
void save_fixture(const std::string &path, const std::vector<table_row> &rows);

// Rows are solved on up to `threads` workers; results keep row order.
table_report reproduce_table(const std::vector<table_row> &rows, unsigned threads = 1);

} // namespace trimix

#endif
