#include "bandgraph/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace bandgraph {

namespace {

struct ExactField {
    using Value = Scalar;
    static Value zero() { return Scalar(0); }
    static Value one() { return Scalar(1); }
    static bool is_zero(const Value& x) { return x.is_zero(); }
    static bool is_pos(const Value& x) { return x.sign() > 0; }
    static bool is_neg(const Value& x) { return x.sign() < 0; }
    static Value from_scalar(const Scalar& x) { return x; }
};

struct FloatField {
    using Value = double;
    static constexpr double eps = 1e-9;
    static Value zero() { return 0.0; }
    static Value one() { return 1.0; }
    static bool is_zero(Value x) { return std::fabs(x) <= eps; }
    static bool is_pos(Value x) { return x > eps; }
    static bool is_neg(Value x) { return x < -eps; }
    static Value from_scalar(const Scalar& x) { return x.approx(); }
};

// Dense tableau simplex. Columns: the split variables u_0, w_0, ..., u_{N-1},
// w_{N-1} (x_j = u_j - w_j), then one slack per row, then at most one
// artificial column for the phase-one start. Objective row holds reduced
// costs zeta_j = c_B B^-1 A_j - c_j; optimality is zeta >= 0.
template <class F>
class Tableau {
public:
    using V = typename F::Value;

    explicit Tableau(const LinearProgram& lp)
        : n_vars_(int(lp.vars.size())), m_(int(lp.rows.size())) {
        n_cols_ = 2 * n_vars_ + m_;
        rows_.assign(m_, std::vector<V>(n_cols_ + 1, F::zero()));  // +1 artificial slot
        rhs_.reserve(m_);
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            const auto& row = lp.rows[i];
            for (int j = 0; j < n_vars_; ++j) {
                V v = F::from_scalar(row.coeffs[j]);
                rows_[i][2 * j] = v;
                rows_[i][2 * j + 1] = -v;
            }
            rows_[i][2 * n_vars_ + i] = F::one();
            rhs_.push_back(F::from_scalar(row.rhs));
            basis_[i] = 2 * n_vars_ + i;
        }
        obj_.assign(n_cols_ + 1, F::zero());
        obj_val_ = F::zero();
    }

    // max x_objective: c has +1 on u_obj and -1 on w_obj
    bool solve(int objective_var, int pivot_budget, int& pivots_used) {
        bool ok = true;
        if (needs_phase_one()) ok = phase_one(pivot_budget, pivots_used);
        if (!ok) return false;  // infeasible; farkas_ filled
        std::vector<V> cost(n_cols_ + 1, F::zero());
        cost[2 * objective_var] = F::one();
        cost[2 * objective_var + 1] = -F::one();
        restore_objective(cost);
        run_simplex(pivot_budget, pivots_used);
        return true;
    }

    V objective_value() const { return obj_val_; }

    V primal_value(int var) const {
        return basic_value(2 * var) - basic_value(2 * var + 1);
    }

    // dual multiplier of row i = reduced cost of its slack column
    V dual_value(int i) const { return obj_[2 * n_vars_ + i]; }

    const std::vector<V>& farkas() const { return farkas_; }

private:
    bool needs_phase_one() const {
        for (const V& b : rhs_)
            if (F::is_neg(b)) return true;
        return false;
    }

    V basic_value(int col) const {
        for (int i = 0; i < m_; ++i)
            if (basis_[i] == col) return rhs_[i];
        return F::zero();
    }

    void pivot(int r, int c) {
        V p = rows_[r][c];
        for (V& v : rows_[r]) v = v / p;
        rhs_[r] = rhs_[r] / p;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            V f = rows_[i][c];
            if (F::is_zero(f)) continue;
            for (int j = 0; j <= n_cols_; ++j) {
                if (F::is_zero(rows_[r][j])) continue;
                rows_[i][j] = rows_[i][j] - f * rows_[r][j];
            }
            rhs_[i] = rhs_[i] - f * rhs_[r];
        }
        V f = obj_[c];
        if (!F::is_zero(f)) {
            // the z-row [zeta | value] eliminates like any other row
            for (int j = 0; j <= n_cols_; ++j) {
                if (F::is_zero(rows_[r][j])) continue;
                obj_[j] = obj_[j] - f * rows_[r][j];
            }
            obj_val_ = obj_val_ - f * rhs_[r];
        }
        basis_[r] = c;
    }

    // Bland: entering = lowest eligible column, leaving = min ratio with the
    // lowest basic column index breaking ties.
    void run_simplex(int pivot_budget, int& pivots_used) {
        int active = artificial_active_ ? n_cols_ + 1 : n_cols_;
        for (;;) {
            int enter = -1;
            for (int j = 0; j < active; ++j) {
                if (j == barred_col_) continue;
                if (F::is_neg(obj_[j])) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return;  // optimal
            int leave = -1;
            V best_ratio = F::zero();
            for (int i = 0; i < m_; ++i) {
                if (!F::is_pos(rows_[i][enter])) continue;
                V ratio = rhs_[i] / rows_[i][enter];
                if (leave < 0 || F::is_neg(ratio - best_ratio) ||
                    (F::is_zero(ratio - best_ratio) && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw std::runtime_error("simplex: unbounded program");
            if (++pivots_used > pivot_budget)
                throw std::runtime_error("simplex: pivot budget exhausted");
            pivot(leave, enter);
        }
    }

    // Single-artificial phase one: column a0 = -1 in every row; max -a0.
    bool phase_one(int pivot_budget, int& pivots_used) {
        artificial_active_ = true;
        int a0 = n_cols_;
        for (int i = 0; i < m_; ++i) rows_[i][a0] = -F::one();
        // cost: -1 on a0, so zeta starts as +1 there
        obj_.assign(n_cols_ + 1, F::zero());
        obj_[a0] = F::one();
        obj_val_ = F::zero();
        // special first pivot: a0 enters, most negative rhs leaves
        int worst = 0;
        for (int i = 1; i < m_; ++i)
            if (F::is_neg(rhs_[i] - rhs_[worst])) worst = i;
        ++pivots_used;
        pivot(worst, a0);
        run_simplex(pivot_budget, pivots_used);

        if (F::is_neg(obj_val_)) {  // max -a0 < 0: infeasible
            farkas_.resize(m_);
            for (int i = 0; i < m_; ++i) farkas_[i] = dual_value(i);
            return false;
        }
        // a0 is zero; drive it out of the basis if it still sits there
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] != a0) continue;
            int c = -1;
            for (int j = 0; j < n_cols_ && c < 0; ++j)
                if (!F::is_zero(rows_[r][j])) c = j;
            if (c >= 0) {
                ++pivots_used;
                pivot(r, c);
            } else {
                // redundant all-zero row; harmless to keep, a0 stays pinned at 0
                barred_row_ = r;
            }
        }
        barred_col_ = a0;
        return true;
    }

    void restore_objective(const std::vector<V>& cost) {
        for (int j = 0; j <= n_cols_; ++j) obj_[j] = -cost[j];
        obj_val_ = F::zero();
        for (int i = 0; i < m_; ++i) {
            const V& cb = cost[basis_[i]];
            if (F::is_zero(cb)) continue;
            for (int j = 0; j <= n_cols_; ++j) {
                if (F::is_zero(rows_[i][j])) continue;
                obj_[j] = obj_[j] + cb * rows_[i][j];
            }
            obj_val_ = obj_val_ + cb * rhs_[i];
        }
    }

    int n_vars_, m_, n_cols_;
    std::vector<std::vector<V>> rows_;
    std::vector<V> rhs_;
    std::vector<V> obj_;
    V obj_val_;
    std::vector<int> basis_;
    std::vector<V> farkas_;
    bool artificial_active_ = false;
    int barred_col_ = -1;
    int barred_row_ = -1;
};

constexpr int kPivotBudget = 300000;

}  // namespace

LpOutcome simplex_solve(const LinearProgram& lp) {
    if (lp.objective < 0 || lp.objective >= int(lp.vars.size()))
        throw std::invalid_argument("simplex: bad objective variable");
    LpOutcome out;
    Tableau<ExactField> t(lp);
    if (!t.solve(lp.objective, kPivotBudget, out.pivots)) {
        out.status = LpStatus::Infeasible;
        out.farkas = t.farkas();
        return out;
    }
    out.status = LpStatus::Optimal;
    out.objective = t.objective_value();
    out.primal.reserve(lp.vars.size());
    for (size_t j = 0; j < lp.vars.size(); ++j) out.primal.push_back(t.primal_value(int(j)));
    out.dual.reserve(lp.rows.size());
    for (size_t i = 0; i < lp.rows.size(); ++i) out.dual.push_back(t.dual_value(int(i)));
    return out;
}

FloatOutcome simplex_solve_float(const LinearProgram& lp) {
    if (lp.objective < 0 || lp.objective >= int(lp.vars.size()))
        throw std::invalid_argument("simplex: bad objective variable");
    FloatOutcome out;
    Tableau<FloatField> t(lp);
    if (!t.solve(lp.objective, kPivotBudget, out.pivots)) {
        out.feasible = false;
        return out;
    }
    out.feasible = true;
    out.objective = t.objective_value();
    return out;
}

}  // namespace bandgraph
