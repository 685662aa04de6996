#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qstable/rational.hpp"

namespace qstab {

// A small exact linear-programming kernel. Everything downstream that claims
// "certificate" leans on this: coordinates come back as exact rationals, so a
// verifier can recheck each constraint with integer arithmetic and no epsilon.
//
// The solver is a dense two-phase simplex with Bland's anti-cycling rule.
// Problem sizes here are tiny (tens of variables), so clarity beats speed.

enum class Relation { eq, le, ge };

struct LinearConstraint {
    std::vector<Rational> coeffs;  // padded with zeros up to num_vars
    Relation rel = Relation::eq;
    Rational rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpProblem {
    int num_vars = 0;
    std::vector<LinearConstraint> constraints;
    // Variables are nonnegative unless marked free here (vector may be short;
    // missing entries mean nonnegative).
    std::vector<bool> is_free;
    // Maximized. Empty means pure feasibility, reported as status optimal.
    std::vector<Rational> objective;
};

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> values;   // one per original variable when solved
    Rational objective_value = 0;
};

namespace detail {

class SimplexTableau {
public:
    explicit SimplexTableau(const LpProblem& problem) {
        const int n = problem.num_vars;
        num_original_ = n;
        column_of_var_.resize(n);
        neg_column_of_var_.assign(n, -1);

        int cols = 0;
        for (int j = 0; j < n; ++j) {
            column_of_var_[j] = cols++;
            if (j < static_cast<int>(problem.is_free.size()) && problem.is_free[j]) {
                neg_column_of_var_[j] = cols++;
            }
        }
        int slack_cols = 0;
        for (const auto& c : problem.constraints) {
            if (c.rel != Relation::eq) ++slack_cols;
        }
        first_slack_ = cols;
        cols += slack_cols;
        first_artificial_ = cols;
        const int m = static_cast<int>(problem.constraints.size());
        cols += m;
        num_columns_ = cols;

        rows_.assign(m, std::vector<Rational>(num_columns_ + 1, Rational(0)));
        basis_.assign(m, -1);

        int next_slack = first_slack_;
        for (int i = 0; i < m; ++i) {
            const auto& c = problem.constraints[i];
            if (static_cast<int>(c.coeffs.size()) > n) {
                throw std::invalid_argument("constraint has more coefficients than variables");
            }
            auto& row = rows_[i];
            for (int j = 0; j < static_cast<int>(c.coeffs.size()); ++j) {
                row[column_of_var_[j]] = c.coeffs[j];
                if (neg_column_of_var_[j] >= 0) row[neg_column_of_var_[j]] = -c.coeffs[j];
            }
            row[num_columns_] = c.rhs;
            if (c.rel == Relation::le) {
                row[next_slack++] = 1;
            } else if (c.rel == Relation::ge) {
                row[next_slack++] = -1;
            }
            if (row[num_columns_] < 0) {
                for (auto& entry : row) entry = -entry;
            }
            const int art = first_artificial_ + i;
            row[art] = 1;
            basis_[i] = art;
        }
    }

    // Minimizes the sum of artificial variables. Returns true when it reaches
    // zero, i.e. the original constraints are satisfiable.
    bool run_phase_one() {
        std::vector<Rational> cost(num_columns_, Rational(0));
        for (int j = first_artificial_; j < num_columns_; ++j) cost[j] = 1;
        run_phase(cost, num_columns_);
        if (current_cost(cost) != 0) return false;
        expel_artificials();
        return true;
    }

    // Maximizes the caller's objective (given per original variable) over the
    // structural columns. Returns false when the objective is unbounded.
    bool run_phase_two(const std::vector<Rational>& objective) {
        std::vector<Rational> cost(num_columns_, Rational(0));
        for (int j = 0; j < static_cast<int>(objective.size()); ++j) {
            cost[column_of_var_[j]] = -objective[j];
            if (neg_column_of_var_[j] >= 0) cost[neg_column_of_var_[j]] = objective[j];
        }
        if (!run_phase(cost, first_artificial_)) return false;
        objective_value_ = -current_cost(cost);
        return true;
    }

    Rational objective_value() const { return objective_value_; }

    std::vector<Rational> original_values() const {
        std::vector<Rational> column_value(num_columns_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            column_value[basis_[i]] = rows_[i][num_columns_];
        }
        std::vector<Rational> out(num_original_);
        for (int j = 0; j < num_original_; ++j) {
            out[j] = column_value[column_of_var_[j]];
            if (neg_column_of_var_[j] >= 0) out[j] -= column_value[neg_column_of_var_[j]];
        }
        return out;
    }

private:
    Rational current_cost(const std::vector<Rational>& cost) const {
        Rational total = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            total += cost[basis_[i]] * rows_[i][num_columns_];
        }
        return total;
    }

    void pivot(std::size_t row, int col) {
        auto& pivot_row = rows_[row];
        const Rational inv = Rational(1) / pivot_row[col];
        for (auto& entry : pivot_row) entry *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row) continue;
            const Rational factor = rows_[i][col];
            if (factor == 0) continue;
            for (int j = 0; j <= num_columns_; ++j) {
                rows_[i][j] -= factor * pivot_row[j];
            }
        }
        basis_[row] = col;
    }

    // Bland's rule on both the entering and the leaving choice, so the walk
    // terminates even on the degenerate tableaux these searches produce.
    bool run_phase(const std::vector<Rational>& cost, int column_limit) {
        for (;;) {
            std::vector<Rational> reduced(cost.begin(), cost.begin() + column_limit);
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational basic_cost = cost[basis_[i]];
                if (basic_cost == 0) continue;
                for (int j = 0; j < column_limit; ++j) {
                    reduced[j] -= basic_cost * rows_[i][j];
                }
            }

            int entering = -1;
            for (int j = 0; j < column_limit; ++j) {
                if (reduced[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) return true;

            int leaving = -1;
            Rational best_ratio = 0;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& coeff = rows_[i][entering];
                if (coeff <= 0) continue;
                const Rational ratio = rows_[i][num_columns_] / coeff;
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) return false;
            pivot(static_cast<std::size_t>(leaving), entering);
        }
    }

    // After phase one any artificial still in the basis sits at value zero.
    // Pivot it out where possible; a row with no structural entry is a
    // redundant constraint and is dropped outright.
    void expel_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < first_artificial_) {
                ++i;
                continue;
            }
            int col = -1;
            for (int j = 0; j < first_artificial_; ++j) {
                if (rows_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) {
                pivot(i, col);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    int num_original_ = 0;
    int num_columns_ = 0;
    int first_slack_ = 0;
    int first_artificial_ = 0;
    std::vector<int> column_of_var_;
    std::vector<int> neg_column_of_var_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> basis_;
    Rational objective_value_ = 0;
};

}  // namespace detail

inline LpSolution solve_lp(const LpProblem& problem) {
    if (static_cast<int>(problem.objective.size()) > problem.num_vars) {
        throw std::invalid_argument("objective has more coefficients than variables");
    }
    detail::SimplexTableau tableau(problem);
    LpSolution result;
    if (!tableau.run_phase_one()) {
        result.status = LpStatus::infeasible;
        return result;
    }
    if (!problem.objective.empty() && !tableau.run_phase_two(problem.objective)) {
        result.status = LpStatus::unbounded;
        return result;
    }
    result.status = LpStatus::optimal;
    result.values = tableau.original_values();
    result.objective_value = tableau.objective_value();
    return result;
}

}  // namespace qstab
