//! Exact rational simplex with Bland's rule.
//!
//! Dense two-phase tableau over `Rational`. Bland's pivoting rule (lowest
//! eligible index for both entering and leaving variables) guarantees
//! termination on degenerate instances. Infeasibility and unboundedness
//! come with certificates that are verified exactly before being returned.

use num_traits::{Signed, Zero};

use crate::exact::{rat_i, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rel: Relation,
    pub rhs: Rational,
}

/// maximize `objective · x` subject to the constraints and `x ≥ 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplexOutcome {
    Optimal {
        value: Rational,
        solution: Vec<Rational>,
    },
    /// Row multipliers y with y_i ≤ 0 on ≤-rows, y_i ≥ 0 on ≥-rows,
    /// Σ y_i aᵢ ≤ 0 componentwise and Σ y_i bᵢ > 0: no feasible x ≥ 0
    /// exists. (Rows are taken after rhs sign normalization.)
    Infeasible { farkas: Vec<Rational> },
    /// A direction d ≥ 0 on the original variables with objective·d > 0
    /// along which every constraint stays satisfied.
    Unbounded { ray: Vec<Rational> },
}

struct Tableau {
    /// rows[i]: coefficients over all columns, then the rhs.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    n_cols: usize,
}

enum RunOutcome {
    Optimal,
    Unbounded { column: usize },
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.n_cols]
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        (0..self.n_cols)
            .map(|j| {
                let mut z = rat_i(0);
                for (r, row) in self.rows.iter().enumerate() {
                    if !cost[self.basis[r]].is_zero() {
                        z += &cost[self.basis[r]] * &row[j];
                    }
                }
                z - &cost[j]
            })
            .collect()
    }

    fn objective_value(&self, cost: &[Rational]) -> Rational {
        self.rows
            .iter()
            .enumerate()
            .map(|(r, row)| &cost[self.basis[r]] * &row[self.n_cols])
            .sum()
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = rat_i(1) / &self.rows[row][col];
        for x in self.rows[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let f = self.rows[r][col].clone();
            for j in 0..=self.n_cols {
                let sub = &f * &self.rows[row][j];
                let v = &self.rows[r][j] - sub;
                self.rows[r][j] = v;
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule; `allowed` masks the columns that may enter.
    fn run(&mut self, cost: &[Rational], allowed: &[bool]) -> RunOutcome {
        loop {
            let reduced = self.reduced_costs(cost);
            let entering = (0..self.n_cols).find(|&j| allowed[j] && reduced[j].is_negative());
            let Some(col) = entering else {
                return RunOutcome::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if a.is_positive() {
                    let ratio = self.rhs(r) / a;
                    let better = match &leave {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < *lratio || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            match leave {
                Some((row, _)) => self.pivot(row, col),
                None => return RunOutcome::Unbounded { column: col },
            }
        }
    }
}

pub fn simplex_solve(lp: &LinearProgram) -> SimplexOutcome {
    let n = lp.objective.len();
    assert!(
        lp.constraints.iter().all(|c| c.coeffs.len() == n),
        "constraint width mismatch"
    );

    // normalize rhs ≥ 0
    let mut norm: Vec<Constraint> = lp.constraints.to_vec();
    for c in &mut norm {
        if c.rhs.is_negative() {
            for a in &mut c.coeffs {
                *a = -&*a;
            }
            c.rhs = -&c.rhs;
            c.rel = match c.rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }

    let n_slack = norm
        .iter()
        .filter(|c| matches!(c.rel, Relation::Le | Relation::Ge))
        .count();
    let n_art = norm
        .iter()
        .filter(|c| matches!(c.rel, Relation::Ge | Relation::Eq))
        .count();
    let n_cols = n + n_slack + n_art;

    // column bookkeeping per row: slack column and artificial column
    let mut slack_of: Vec<Option<usize>> = vec![None; norm.len()];
    let mut art_of: Vec<Option<usize>> = vec![None; norm.len()];
    let mut rows = Vec::with_capacity(norm.len());
    let mut basis = Vec::with_capacity(norm.len());
    let mut next_slack = n;
    let mut next_art = n + n_slack;
    for (i, c) in norm.iter().enumerate() {
        let mut row = vec![rat_i(0); n_cols + 1];
        row[..n].clone_from_slice(&c.coeffs);
        row[n_cols] = c.rhs.clone();
        match c.rel {
            Relation::Le => {
                row[next_slack] = rat_i(1);
                slack_of[i] = Some(next_slack);
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = rat_i(-1);
                slack_of[i] = Some(next_slack);
                next_slack += 1;
                row[next_art] = rat_i(1);
                art_of[i] = Some(next_art);
                basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = rat_i(1);
                art_of[i] = Some(next_art);
                basis.push(next_art);
                next_art += 1;
            }
        }
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis,
        n_cols,
    };
    let is_artificial = |j: usize| j >= n + n_slack;

    // phase 1: maximize -(sum of artificials)
    if n_art > 0 {
        let mut cost = vec![rat_i(0); n_cols];
        for j in n + n_slack..n_cols {
            cost[j] = rat_i(-1);
        }
        let allowed = vec![true; n_cols];
        match t.run(&cost, &allowed) {
            RunOutcome::Optimal => {}
            RunOutcome::Unbounded { .. } => {
                unreachable!("phase-1 objective is bounded above by zero")
            }
        }
        if t.objective_value(&cost).is_negative() {
            // infeasible: read off y = c_B B^{-1} from the reduced costs
            let reduced = t.reduced_costs(&cost);
            let mut y = Vec::with_capacity(norm.len());
            for i in 0..norm.len() {
                let y_hat = match (art_of[i], slack_of[i], norm[i].rel) {
                    (Some(a), _, _) => &reduced[a] + rat_i(-1),
                    (None, Some(s), Relation::Le) => reduced[s].clone(),
                    _ => unreachable!("every row has a slack or an artificial"),
                };
                y.push(-y_hat);
            }
            assert!(
                verify_farkas(&norm, n, &y),
                "internal error: invalid infeasibility certificate"
            );
            return SimplexOutcome::Infeasible { farkas: y };
        }
        // drive basic artificials out; drop rows that are fully redundant
        let mut r = 0;
        while r < t.rows.len() {
            if is_artificial(t.basis[r]) {
                debug_assert!(t.rhs(r).is_zero());
                match (0..n + n_slack).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(j) => t.pivot(r, j),
                    None => {
                        t.rows.remove(r);
                        t.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    // phase 2: artificial columns may not re-enter
    let mut cost = vec![rat_i(0); n_cols];
    cost[..n].clone_from_slice(&lp.objective);
    let allowed: Vec<bool> = (0..n_cols).map(|j| !is_artificial(j)).collect();
    match t.run(&cost, &allowed) {
        RunOutcome::Optimal => {
            let mut solution = vec![rat_i(0); n];
            for (r, &b) in t.basis.iter().enumerate() {
                if b < n {
                    solution[b] = t.rhs(r).clone();
                }
            }
            let value = t.objective_value(&cost);
            assert!(
                verify_feasible(lp, &solution),
                "internal error: optimal point violates a constraint"
            );
            SimplexOutcome::Optimal { value, solution }
        }
        RunOutcome::Unbounded { column } => {
            let mut ray = vec![rat_i(0); n];
            if column < n {
                ray[column] = rat_i(1);
            }
            for (r, &b) in t.basis.iter().enumerate() {
                if b < n {
                    ray[b] = -&t.rows[r][column];
                }
            }
            assert!(
                verify_ray(lp, &ray),
                "internal error: invalid unbounded direction"
            );
            SimplexOutcome::Unbounded { ray }
        }
    }
}

/// Exact feasibility of a point for the original program.
pub fn verify_feasible(lp: &LinearProgram, x: &[Rational]) -> bool {
    if x.len() != lp.objective.len() || x.iter().any(Signed::is_negative) {
        return false;
    }
    lp.constraints.iter().all(|c| {
        let lhs: Rational = c.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
        match c.rel {
            Relation::Le => lhs <= c.rhs,
            Relation::Eq => lhs == c.rhs,
            Relation::Ge => lhs >= c.rhs,
        }
    })
}

fn verify_ray(lp: &LinearProgram, d: &[Rational]) -> bool {
    if d.iter().any(Signed::is_negative) {
        return false;
    }
    let gain: Rational = lp.objective.iter().zip(d).map(|(c, v)| c * v).sum();
    if !gain.is_positive() {
        return false;
    }
    lp.constraints.iter().all(|c| {
        let lhs: Rational = c.coeffs.iter().zip(d).map(|(a, v)| a * v).sum();
        match c.rel {
            Relation::Le => !lhs.is_positive(),
            Relation::Eq => lhs.is_zero(),
            Relation::Ge => !lhs.is_negative(),
        }
    })
}

fn verify_farkas(norm: &[Constraint], n: usize, y: &[Rational]) -> bool {
    for (c, yi) in norm.iter().zip(y) {
        let ok = match c.rel {
            Relation::Le => !yi.is_positive(),
            Relation::Ge => !yi.is_negative(),
            Relation::Eq => true,
        };
        if !ok {
            return false;
        }
    }
    for j in 0..n {
        let col: Rational = norm.iter().zip(y).map(|(c, yi)| &c.coeffs[j] * yi).sum();
        if col.is_positive() {
            return false;
        }
    }
    let rhs: Rational = norm.iter().zip(y).map(|(c, yi)| &c.rhs * yi).sum();
    rhs.is_positive()
}
