//! Dense linear programming with warm restarts.
//!
//! Solves `max c·x  s.t.  A_eq x = b_eq, A_ineq x ≤ b_ineq` with free
//! structural variables. The solver is a two-phase revised simplex that keeps
//! an explicit basis inverse, so re-optimizing the same feasible set for a new
//! objective continues from the previous basis instead of starting over. That
//! restart path is what makes the directional search in the projection loop
//! cheap: successive search directions change little and typically need a
//! handful of pivots each.
//!
//! Pivoting is deterministic: Dantzig pricing with smallest-index tie breaks,
//! falling back to Bland's rule after a run of degenerate steps so the solver
//! cannot cycle. Two runs on identical inputs produce bit-identical results.

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

/// Constraint-satisfaction tolerance for accepted solutions.
pub const FEASIBILITY_TOL: f64 = 1e-8;
/// Reduced-cost threshold below which a column is considered optimal.
pub const OPTIMALITY_TOL: f64 = 1e-9;
/// Smallest pivot magnitude accepted during basis changes.
const PIVOT_TOL: f64 = 1e-10;
/// Consecutive degenerate pivots before switching to Bland's rule.
const BLAND_TRIGGER: usize = 25;
/// Pivots between defensive refactorizations of the basis inverse.
const REFACTOR_INTERVAL: usize = 500;

/// `max c·x` subject to `a_eq x = b_eq` and `a_ineq x ≤ b_ineq`, `x` free.
#[derive(Clone, Debug)]
pub struct Problem {
    pub num_vars: usize,
    pub a_eq: DMatrix<f64>,
    pub b_eq: DVector<f64>,
    pub a_ineq: DMatrix<f64>,
    pub b_ineq: DVector<f64>,
}

impl Problem {
    pub fn num_rows(&self) -> usize {
        self.a_eq.nrows() + self.a_ineq.nrows()
    }

    /// Maximum violation of any constraint at `x`.
    pub fn violation(&self, x: &DVector<f64>) -> f64 {
        let mut worst: f64 = 0.0;
        let eq = &self.a_eq * x - &self.b_eq;
        for v in eq.iter() {
            worst = worst.max(v.abs());
        }
        let ineq = &self.a_ineq * x - &self.b_ineq;
        for v in ineq.iter() {
            worst = worst.max(*v);
        }
        worst
    }
}

/// Outcome classification of a solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum VarKind {
    Structural,
    Slack,
    Artificial,
}

/// Every nonbasic variable rests at zero: slacks and artificials at their
/// lower bound, free structural variables at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum VarState {
    Basic,
    Nonbasic,
}

/// Opaque snapshot of a simplex basis, sufficient to warm-start a solve on
/// the same problem with a different objective.
#[derive(Clone, Debug)]
pub struct Basis {
    states: Vec<VarState>,
    basic: Vec<usize>,
}

/// Result of one directional solve.
#[derive(Clone, Debug)]
pub struct Solution {
    pub status: Status,
    /// Structural variable values (all zeros unless `status == Optimal`).
    pub x: DVector<f64>,
    pub objective: f64,
    pub basis: Basis,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("pivot limit exceeded ({0} pivots); problem is likely ill-conditioned")]
    PivotLimit(usize),
    #[error("objective length {got} does not match problem variables {want}")]
    ObjectiveSize { got: usize, want: usize },
}

/// Revised simplex with persistent state across objective changes.
pub struct SimplexSolver {
    m: usize,
    n_struct: usize,
    n_total: usize,
    /// Sparse columns for structural, slack and artificial variables.
    cols: Vec<Vec<(usize, f64)>>,
    kind: Vec<VarKind>,
    b: Vec<f64>,
    state: Vec<VarState>,
    basic: Vec<usize>,
    /// Row-major m×m explicit basis inverse.
    binv: Vec<f64>,
    /// Current values of the basic variables.
    xb: Vec<f64>,
    phase1_done: bool,
    infeasible: bool,
    pivots_since_refactor: usize,
    // scratch buffers
    w: Vec<f64>,
    y: Vec<f64>,
}

impl SimplexSolver {
    pub fn new(problem: &Problem) -> Self {
        let m_eq = problem.a_eq.nrows();
        let m_ineq = problem.a_ineq.nrows();
        let m = m_eq + m_ineq;
        let n_struct = problem.num_vars;
        assert!(m_eq == 0 || problem.a_eq.ncols() == n_struct);
        assert!(m_ineq == 0 || problem.a_ineq.ncols() == n_struct);

        let mut cols: Vec<Vec<(usize, f64)>> = Vec::with_capacity(n_struct + m_ineq + m_eq);
        let mut kind = Vec::with_capacity(n_struct + m_ineq + m_eq);
        for j in 0..n_struct {
            let mut col = Vec::new();
            for i in 0..m_eq {
                let v = problem.a_eq[(i, j)];
                if v != 0.0 {
                    col.push((i, v));
                }
            }
            for i in 0..m_ineq {
                let v = problem.a_ineq[(i, j)];
                if v != 0.0 {
                    col.push((m_eq + i, v));
                }
            }
            cols.push(col);
            kind.push(VarKind::Structural);
        }
        for i in 0..m_ineq {
            cols.push(vec![(m_eq + i, 1.0)]);
            kind.push(VarKind::Slack);
        }

        let mut b = Vec::with_capacity(m);
        b.extend(problem.b_eq.iter());
        b.extend(problem.b_ineq.iter());

        let mut solver = SimplexSolver {
            m,
            n_struct,
            n_total: n_struct + m_ineq,
            cols,
            kind,
            b,
            state: Vec::new(),
            basic: Vec::new(),
            binv: Vec::new(),
            xb: Vec::new(),
            phase1_done: false,
            infeasible: false,
            pivots_since_refactor: 0,
            w: vec![0.0; m],
            y: vec![0.0; m],
        };
        solver.install_initial_basis();
        solver
    }

    /// Slacks cover inequality rows with nonnegative right-hand sides;
    /// artificials cover equality rows and the remaining inequality rows.
    fn install_initial_basis(&mut self) {
        let m = self.m;
        let m_eq = m - self.slack_count();
        self.cols.truncate(self.n_struct + self.slack_count());
        self.kind.truncate(self.n_struct + self.slack_count());
        self.state = vec![VarState::Nonbasic; self.cols.len()];
        self.basic = vec![usize::MAX; m];
        self.binv = vec![0.0; m * m];
        self.xb = vec![0.0; m];
        self.n_total = self.cols.len();

        for i in 0..m {
            let is_eq = i < m_eq;
            let slack_idx = if is_eq {
                None
            } else {
                Some(self.n_struct + (i - m_eq))
            };
            if let (Some(j), true) = (slack_idx, self.b[i] >= 0.0) {
                self.basic[i] = j;
                self.state[j] = VarState::Basic;
                self.binv[i * m + i] = 1.0;
                self.xb[i] = self.b[i];
            } else {
                let sign = if self.b[i] >= 0.0 { 1.0 } else { -1.0 };
                let j = self.cols.len();
                self.cols.push(vec![(i, sign)]);
                self.kind.push(VarKind::Artificial);
                self.state.push(VarState::Basic);
                self.basic[i] = j;
                self.binv[i * m + i] = sign;
                self.xb[i] = self.b[i].abs();
                self.n_total += 1;
            }
        }
        self.phase1_done = false;
        self.infeasible = false;
        self.pivots_since_refactor = 0;
        self.w = vec![0.0; m];
        self.y = vec![0.0; m];
    }

    fn slack_count(&self) -> usize {
        self.kind.iter().filter(|k| **k == VarKind::Slack).count()
    }

    /// y = c_B · B⁻¹, exploiting that most basic costs are zero.
    fn price(&mut self, costs: &[f64]) {
        let m = self.m;
        self.y.iter_mut().for_each(|v| *v = 0.0);
        for i in 0..m {
            let cb = costs[self.basic[i]];
            if cb != 0.0 {
                let row = &self.binv[i * m..(i + 1) * m];
                for (yk, rk) in self.y.iter_mut().zip(row) {
                    *yk += cb * rk;
                }
            }
        }
    }

    fn reduced_cost(&self, costs: &[f64], j: usize) -> f64 {
        let mut r = costs[j];
        for &(row, v) in &self.cols[j] {
            r -= self.y[row] * v;
        }
        r
    }

    /// w = B⁻¹ · a_j.
    fn ftran(&mut self, j: usize) {
        let m = self.m;
        self.w.iter_mut().for_each(|v| *v = 0.0);
        for &(row, v) in &self.cols[j] {
            for i in 0..m {
                self.w[i] += v * self.binv[i * m + row];
            }
        }
    }

    /// Entering column: positive reduced cost for slacks (which can only
    /// increase), either sign for free structural variables. Artificials
    /// never re-enter.
    fn choose_entering(&self, costs: &[f64], bland: bool) -> Option<(usize, f64)> {
        let mut best: Option<(usize, f64, f64)> = None;
        for j in 0..self.n_total {
            if self.state[j] == VarState::Basic || self.kind[j] == VarKind::Artificial {
                continue;
            }
            let r = self.reduced_cost(costs, j);
            let dir = match self.kind[j] {
                VarKind::Structural => {
                    if r > OPTIMALITY_TOL {
                        1.0
                    } else if r < -OPTIMALITY_TOL {
                        -1.0
                    } else {
                        continue;
                    }
                }
                VarKind::Slack => {
                    if r > OPTIMALITY_TOL {
                        1.0
                    } else {
                        continue;
                    }
                }
                VarKind::Artificial => unreachable!(),
            };
            if bland {
                return Some((j, dir));
            }
            let score = r.abs();
            match best {
                Some((_, _, s)) if s >= score => {}
                _ => best = Some((j, dir, score)),
            }
        }
        best.map(|(j, d, _)| (j, d))
    }

    /// Leaving row for an entering step of direction `dir`. Structural basics
    /// are free and never block; slacks block at zero from above; artificials
    /// pinned at zero after phase 1 block any movement.
    fn choose_leaving(&self, dir: f64, phase1: bool, bland: bool) -> Option<(usize, f64)> {
        let mut t_min = f64::INFINITY;
        let mut pick: Option<(usize, f64)> = None; // (row, |pivot|)
        for i in 0..self.m {
            let bi = self.basic[i];
            let delta = dir * self.w[i]; // basic value decreases by delta * t
            let blocks = match self.kind[bi] {
                VarKind::Structural => false,
                VarKind::Slack => delta > PIVOT_TOL,
                VarKind::Artificial => {
                    if phase1 {
                        delta > PIVOT_TOL
                    } else {
                        delta.abs() > PIVOT_TOL
                    }
                }
            };
            if !blocks {
                continue;
            }
            let avail = if delta > 0.0 { self.xb[i].max(0.0) } else { 0.0 };
            let t = avail / delta.abs();
            let better = if t < t_min - 1e-12 {
                true
            } else if t <= t_min + 1e-12 {
                match pick {
                    Some((r, mag)) => {
                        if bland {
                            self.basic[i] < self.basic[r]
                        } else {
                            self.w[i].abs() > mag + 1e-15
                                || (self.w[i].abs() >= mag - 1e-15 && self.basic[i] < self.basic[r])
                        }
                    }
                    None => true,
                }
            } else {
                false
            };
            if better {
                t_min = t.min(t_min);
                pick = Some((i, self.w[i].abs()));
            }
        }
        pick.map(|(r, _)| (r, t_min))
    }

    fn pivot(&mut self, entering: usize, row: usize, value: f64) {
        let m = self.m;
        let wr = self.w[row];
        debug_assert!(wr.abs() > PIVOT_TOL / 10.0);
        // basic value updates
        for i in 0..m {
            if i != row {
                self.xb[i] -= self.w[i] * value;
            }
        }
        let leaving = self.basic[row];
        self.state[leaving] = VarState::Nonbasic;
        self.basic[row] = entering;
        self.state[entering] = VarState::Basic;
        self.xb[row] = value;

        // B⁻¹ row elimination
        let inv_wr = 1.0 / wr;
        {
            let r = &mut self.binv[row * m..(row + 1) * m];
            for v in r.iter_mut() {
                *v *= inv_wr;
            }
        }
        for i in 0..m {
            if i == row {
                continue;
            }
            let factor = self.w[i];
            if factor == 0.0 {
                continue;
            }
            let (head, tail) = self.binv.split_at_mut(row.max(i) * m);
            let (pivot_row, other_row) = if i > row {
                (&head[row * m..row * m + m], &mut tail[..m])
            } else {
                (&tail[..m], &mut head[i * m..i * m + m])
            };
            for (o, p) in other_row.iter_mut().zip(pivot_row) {
                *o -= factor * p;
            }
        }
        self.pivots_since_refactor += 1;
    }

    /// Rebuild B⁻¹ and the basic values from the recorded basis by
    /// Gauss-Jordan elimination with partial pivoting.
    fn refactor(&mut self) -> bool {
        let m = self.m;
        let mut dense = vec![0.0; m * m];
        for (col, &bi) in self.basic.iter().enumerate() {
            for &(row, v) in &self.cols[bi] {
                dense[row * m + col] = v;
            }
        }
        let mut inv = vec![0.0; m * m];
        for i in 0..m {
            inv[i * m + i] = 1.0;
        }
        for col in 0..m {
            let mut pivot_row = col;
            let mut best = dense[col * m + col].abs();
            for r in col + 1..m {
                let v = dense[r * m + col].abs();
                if v > best {
                    best = v;
                    pivot_row = r;
                }
            }
            if best < 1e-12 {
                return false;
            }
            if pivot_row != col {
                for k in 0..m {
                    dense.swap(col * m + k, pivot_row * m + k);
                    inv.swap(col * m + k, pivot_row * m + k);
                }
            }
            let p = dense[col * m + col];
            let ip = 1.0 / p;
            for k in 0..m {
                dense[col * m + k] *= ip;
                inv[col * m + k] *= ip;
            }
            for r in 0..m {
                if r == col {
                    continue;
                }
                let f = dense[r * m + col];
                if f == 0.0 {
                    continue;
                }
                for k in 0..m {
                    dense[r * m + k] -= f * dense[col * m + k];
                    inv[r * m + k] -= f * inv[col * m + k];
                }
            }
        }
        self.binv = inv;
        // xb = B⁻¹ b
        for i in 0..m {
            let mut acc = 0.0;
            for k in 0..m {
                acc += self.binv[i * m + k] * self.b[k];
            }
            self.xb[i] = acc;
        }
        self.pivots_since_refactor = 0;
        true
    }

    fn run(&mut self, costs: &[f64], phase1: bool) -> Result<Status, SolveError> {
        let limit = 20_000 + 200 * (self.m + self.n_total);
        let mut degenerate_streak = 0usize;
        for iter in 0..limit {
            if self.pivots_since_refactor >= REFACTOR_INTERVAL {
                self.refactor();
            }
            let bland = degenerate_streak >= BLAND_TRIGGER;
            self.price(costs);
            let Some((j, dir)) = self.choose_entering(costs, bland) else {
                return Ok(Status::Optimal);
            };
            self.ftran(j);
            let Some((row, t)) = self.choose_leaving(dir, phase1, bland) else {
                return Ok(Status::Unbounded);
            };
            if t <= 1e-12 {
                degenerate_streak += 1;
            } else {
                degenerate_streak = 0;
            }
            self.pivot(j, row, dir * t);
            let _ = iter;
        }
        Err(SolveError::PivotLimit(limit))
    }

    fn phase1(&mut self) -> Result<(), SolveError> {
        let mut costs = vec![0.0; self.n_total];
        for j in 0..self.n_total {
            if self.kind[j] == VarKind::Artificial {
                costs[j] = -1.0;
            }
        }
        let status = self.run(&costs, true)?;
        debug_assert!(status != Status::Unbounded, "phase-1 objective is bounded");
        let infeas: f64 = (0..self.m)
            .filter(|&i| self.kind[self.basic[i]] == VarKind::Artificial)
            .map(|i| self.xb[i].max(0.0))
            .sum();
        if infeas > FEASIBILITY_TOL {
            self.infeasible = true;
        } else {
            self.drive_out_artificials();
        }
        self.phase1_done = true;
        Ok(())
    }

    /// Pivot basic artificials (all at zero now) out of the basis where a
    /// usable pivot exists; rows without one are redundant and keep their
    /// artificial pinned at zero.
    fn drive_out_artificials(&mut self) {
        for row in 0..self.m {
            if self.kind[self.basic[row]] != VarKind::Artificial {
                continue;
            }
            let mut entering = None;
            for j in 0..self.n_total {
                if self.state[j] == VarState::Basic || self.kind[j] == VarKind::Artificial {
                    continue;
                }
                let m = self.m;
                let mut alpha = 0.0;
                for &(r, v) in &self.cols[j] {
                    alpha += self.binv[row * m + r] * v;
                }
                if alpha.abs() > 1e-7 {
                    entering = Some(j);
                    break;
                }
            }
            if let Some(j) = entering {
                self.ftran(j);
                let value = self.xb[row] / self.w[row];
                self.pivot(j, row, value);
            }
        }
    }

    /// Maximize `objective` (length `num_vars`) over the problem, reusing the
    /// current basis when one is installed.
    pub fn maximize(&mut self, objective: &DVector<f64>) -> Result<Solution, SolveError> {
        if objective.len() != self.n_struct {
            return Err(SolveError::ObjectiveSize {
                got: objective.len(),
                want: self.n_struct,
            });
        }
        if !self.phase1_done {
            self.phase1()?;
        }
        if self.infeasible {
            return Ok(Solution {
                status: Status::Infeasible,
                x: DVector::zeros(self.n_struct),
                objective: 0.0,
                basis: self.snapshot(),
            });
        }
        let mut costs = vec![0.0; self.n_total];
        costs[..self.n_struct].copy_from_slice(objective.as_slice());
        let status = self.run(&costs, false)?;
        let x = self.extract_x();
        if status == Status::Optimal && self.residual(&x) > FEASIBILITY_TOL {
            // numerical drift; rebuild the inverse and polish once
            if self.refactor() {
                let status = self.run(&costs, false)?;
                let x = self.extract_x();
                return Ok(self.finish(status, x, objective));
            }
        }
        Ok(self.finish(status, x, objective))
    }

    fn finish(&self, status: Status, x: DVector<f64>, objective: &DVector<f64>) -> Solution {
        let value = objective.dot(&x);
        Solution {
            status,
            objective: if status == Status::Optimal { value } else { 0.0 },
            x: if status == Status::Optimal {
                x
            } else {
                DVector::zeros(self.n_struct)
            },
            basis: self.snapshot(),
        }
    }

    fn extract_x(&self) -> DVector<f64> {
        let mut x = DVector::zeros(self.n_struct);
        for (i, &bi) in self.basic.iter().enumerate() {
            if bi < self.n_struct {
                x[bi] = self.xb[i];
            }
        }
        x
    }

    fn residual(&self, x: &DVector<f64>) -> f64 {
        let mut worst: f64 = 0.0;
        // only equality rows can drift both ways; inequality rows are covered
        // by their basic slacks going negative
        for i in 0..self.m {
            let bi = self.basic[i];
            if self.kind[bi] != VarKind::Structural && self.xb[i] < -FEASIBILITY_TOL {
                worst = worst.max(-self.xb[i]);
            }
        }
        let _ = x;
        worst
    }

    fn snapshot(&self) -> Basis {
        Basis {
            states: self.state.clone(),
            basic: self.basic.clone(),
        }
    }

    /// Install a previously captured basis. Falls back to a cold start when
    /// the snapshot does not fit the problem or produces an infeasible point.
    pub fn restore(&mut self, basis: &Basis) -> bool {
        if basis.states.len() != self.n_total || basis.basic.len() != self.m {
            return false;
        }
        if basis
            .basic
            .iter()
            .any(|&j| j >= self.n_total || basis.states[j] != VarState::Basic)
        {
            return false;
        }
        let saved_state = std::mem::replace(&mut self.state, basis.states.clone());
        let saved_basic = std::mem::replace(&mut self.basic, basis.basic.clone());
        if !self.refactor() {
            self.state = saved_state;
            self.basic = saved_basic;
            return false;
        }
        let feasible = (0..self.m).all(|i| {
            self.kind[self.basic[i]] == VarKind::Structural || self.xb[i] >= -FEASIBILITY_TOL
        });
        if !feasible {
            self.state = saved_state;
            self.basic = saved_basic;
            let _ = self.refactor();
            return false;
        }
        self.phase1_done = true;
        self.infeasible = false;
        true
    }
}

/// One-shot solve of `max d·x`.
pub fn solve_max(problem: &Problem, objective: &DVector<f64>) -> Result<Solution, SolveError> {
    SimplexSolver::new(problem).maximize(objective)
}

/// One-shot solve seeded from a previous solution's basis. The result
/// contract matches [`solve_max`]; the hint only changes the starting point.
pub fn solve_max_warm(
    problem: &Problem,
    objective: &DVector<f64>,
    hint: &Basis,
) -> Result<Solution, SolveError> {
    let mut solver = SimplexSolver::new(problem);
    if !solver.restore(hint) {
        solver = SimplexSolver::new(problem);
    }
    solver.maximize(objective)
}

/// Feasibility of the problem with no objective.
pub fn feasible(problem: &Problem) -> Result<bool, SolveError> {
    let objective = DVector::zeros(problem.num_vars);
    Ok(solve_max(problem, &objective)?.status == Status::Optimal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn box_problem() -> Problem {
        // -1 ≤ x ≤ 2, -3 ≤ y ≤ 5 via inequality rows only
        let a_ineq = DMatrix::from_row_slice(4, 2, &[1.0, 0.0, -1.0, 0.0, 0.0, 1.0, 0.0, -1.0]);
        let b_ineq = DVector::from_vec(vec![2.0, 1.0, 5.0, 3.0]);
        Problem {
            num_vars: 2,
            a_eq: DMatrix::zeros(0, 2),
            b_eq: DVector::zeros(0),
            a_ineq,
            b_ineq,
        }
    }

    #[test]
    fn maximizes_over_a_box() {
        let p = box_problem();
        let sol = solve_max(&p, &DVector::from_vec(vec![1.0, 1.0])).unwrap();
        assert_eq!(sol.status, Status::Optimal);
        assert_relative_eq!(sol.x[0], 2.0, epsilon = 1e-9);
        assert_relative_eq!(sol.x[1], 5.0, epsilon = 1e-9);
        assert_relative_eq!(sol.objective, 7.0, epsilon = 1e-9);

        let sol = solve_max(&p, &DVector::from_vec(vec![-1.0, -2.0])).unwrap();
        assert_relative_eq!(sol.x[0], -1.0, epsilon = 1e-9);
        assert_relative_eq!(sol.x[1], -3.0, epsilon = 1e-9);
    }

    #[test]
    fn equality_rows_bind() {
        // max x + y s.t. x + y + z = 1, 0 ≤ each coordinate ≤ 1 (via rows)
        let a_eq = DMatrix::from_row_slice(1, 3, &[1.0, 1.0, 1.0]);
        let b_eq = DVector::from_vec(vec![1.0]);
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..3 {
            let mut up = [0.0; 3];
            up[j] = 1.0;
            rows.extend_from_slice(&up);
            rhs.push(1.0);
            let mut dn = [0.0; 3];
            dn[j] = -1.0;
            rows.extend_from_slice(&dn);
            rhs.push(0.0);
        }
        let p = Problem {
            num_vars: 3,
            a_eq,
            b_eq,
            a_ineq: DMatrix::from_row_slice(6, 3, &rows),
            b_ineq: DVector::from_vec(rhs),
        };
        let sol = solve_max(&p, &DVector::from_vec(vec![1.0, 1.0, 0.0])).unwrap();
        assert_eq!(sol.status, Status::Optimal);
        assert_relative_eq!(sol.objective, 1.0, epsilon = 1e-9);
        assert!(p.violation(&sol.x) < FEASIBILITY_TOL);
    }

    #[test]
    fn detects_infeasible() {
        // x ≤ -1 and x ≥ 1
        let p = Problem {
            num_vars: 1,
            a_eq: DMatrix::zeros(0, 1),
            b_eq: DVector::zeros(0),
            a_ineq: DMatrix::from_row_slice(2, 1, &[1.0, -1.0]),
            b_ineq: DVector::from_vec(vec![-1.0, -1.0]),
        };
        let sol = solve_max(&p, &DVector::from_vec(vec![1.0])).unwrap();
        assert_eq!(sol.status, Status::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        let p = Problem {
            num_vars: 2,
            a_eq: DMatrix::zeros(0, 2),
            b_eq: DVector::zeros(0),
            a_ineq: DMatrix::from_row_slice(1, 2, &[1.0, 0.0]),
            b_ineq: DVector::from_vec(vec![1.0]),
        };
        let sol = solve_max(&p, &DVector::from_vec(vec![0.0, 1.0])).unwrap();
        assert_eq!(sol.status, Status::Unbounded);
    }

    #[test]
    fn negative_rhs_rows_need_phase1() {
        // x ≥ 2 encoded as -x ≤ -2, maximize -x → x* = 2
        let p = Problem {
            num_vars: 1,
            a_eq: DMatrix::zeros(0, 1),
            b_eq: DVector::zeros(0),
            a_ineq: DMatrix::from_row_slice(2, 1, &[-1.0, 1.0]),
            b_ineq: DVector::from_vec(vec![-2.0, 10.0]),
        };
        let sol = solve_max(&p, &DVector::from_vec(vec![-1.0])).unwrap();
        assert_eq!(sol.status, Status::Optimal);
        assert_relative_eq!(sol.x[0], 2.0, epsilon = 1e-9);
    }

    #[test]
    fn warm_restart_matches_cold() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            // random bounded polytope around the origin: rows d·x ≤ 1 with
            // directions covering all orthants, plus a random affine equality
            let n = 4;
            let rows = 24;
            let mut a = Vec::with_capacity(rows * n);
            for _ in 0..rows {
                for _ in 0..n {
                    a.push(rng.gen_range(-1.0..1.0));
                }
            }
            // force boundedness with axis bounds
            let mut a_rows = DMatrix::from_row_slice(rows, n, &a);
            for j in 0..n {
                let mut up = DMatrix::zeros(1, n);
                up[(0, j)] = 1.0;
                a_rows = a_rows.insert_rows(a_rows.nrows(), 1, 0.0);
                let last = a_rows.nrows() - 1;
                a_rows.set_row(last, &up.row(0));
                let mut dn = DMatrix::zeros(1, n);
                dn[(0, j)] = -1.0;
                a_rows = a_rows.insert_rows(a_rows.nrows(), 1, 0.0);
                let last = a_rows.nrows() - 1;
                a_rows.set_row(last, &dn.row(0));
            }
            let mut b = vec![1.0; rows];
            b.extend(std::iter::repeat(3.0).take(2 * n));
            let p = Problem {
                num_vars: n,
                a_eq: DMatrix::zeros(0, n),
                b_eq: DVector::zeros(0),
                a_ineq: a_rows,
                b_ineq: DVector::from_vec(b),
            };
            let d1 = DVector::from_fn(n, |_, _| rng.gen_range(-1.0..1.0));
            let d2 = DVector::from_fn(n, |_, _| rng.gen_range(-1.0..1.0));
            let cold1 = solve_max(&p, &d1).unwrap();
            let cold2 = solve_max(&p, &d2).unwrap();
            let warm2 = solve_max_warm(&p, &d2, &cold1.basis).unwrap();
            assert_eq!(cold2.status, Status::Optimal);
            assert_eq!(warm2.status, Status::Optimal);
            assert_relative_eq!(cold2.objective, warm2.objective, epsilon = 1e-7);
            for j in 0..n {
                assert_relative_eq!(cold2.x[j], warm2.x[j], epsilon = 1e-7);
            }
        }
    }

    #[test]
    fn persistent_solver_reoptimizes() {
        let p = box_problem();
        let mut solver = SimplexSolver::new(&p);
        let s1 = solver.maximize(&DVector::from_vec(vec![1.0, 0.0])).unwrap();
        assert_relative_eq!(s1.x[0], 2.0, epsilon = 1e-9);
        let s2 = solver.maximize(&DVector::from_vec(vec![-1.0, 0.0])).unwrap();
        assert_relative_eq!(s2.x[0], -1.0, epsilon = 1e-9);
        let s3 = solver.maximize(&DVector::from_vec(vec![0.0, 1.0])).unwrap();
        assert_relative_eq!(s3.x[1], 5.0, epsilon = 1e-9);
    }

    #[test]
    fn determinism_bitwise() {
        let p = box_problem();
        let d = DVector::from_vec(vec![0.3, 0.7]);
        let a = solve_max(&p, &d).unwrap();
        let b = solve_max(&p, &d).unwrap();
        assert_eq!(a.x.as_slice(), b.x.as_slice());
        assert_eq!(a.objective.to_bits(), b.objective.to_bits());
    }

    #[test]
    fn objective_scaling_keeps_argmax() {
        let p = box_problem();
        let d = DVector::from_vec(vec![0.4, 1.3]);
        let s1 = solve_max(&p, &d).unwrap();
        let s2 = solve_max(&p, &(2.5 * &d)).unwrap();
        assert_eq!(s1.x.as_slice(), s2.x.as_slice());
        assert_relative_eq!(s2.objective, 2.5 * s1.objective, epsilon = 1e-9);
    }
}
