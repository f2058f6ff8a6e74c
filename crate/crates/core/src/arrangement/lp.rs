//! Exact rational feasibility for systems of linear equalities, weak and
//! strict inequalities. Two-phase dense simplex with Bland's rule; strict
//! rows share one slack `t` which is maximised (capped at 1) and must end
//! up positive.

use num_traits::{One, Signed, Zero};

use crate::rational::{QVector, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Relation {
    Eq,
    Ge,
    Gt,
}

/// `⟨coeffs, x⟩ (relation) rhs`.
#[derive(Clone, Debug)]
pub(crate) struct Constraint {
    pub coeffs: QVector,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: QVector, relation: Relation, rhs: Rational) -> Self {
        Constraint { coeffs, relation, rhs }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    cols: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        self.rhs[r] *= &inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (v, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        self.basis[r] = c;
    }

    /// Maximise `objective · x` over columns `< allowed`.
    fn maximize(&mut self, objective: &[Rational], allowed: usize) -> Outcome {
        loop {
            // reduced cost r_j = c_j − Σ_i c_{B(i)} T_ij
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut r = objective[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !objective[b].is_zero() && !self.rows[i][j].is_zero() {
                        r -= &objective[b] * &self.rows[i][j];
                    }
                }
                r.is_positive()
            });
            let Some(c) = entering else {
                return Outcome::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if a.is_positive() {
                    let ratio = &self.rhs[i] / a;
                    let better = match &leave {
                        None => true,
                        Some((l, best)) => {
                            ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return Outcome::Unbounded,
            }
        }
    }

    fn value_of(&self, col: usize) -> Rational {
        self.basis
            .iter()
            .position(|&b| b == col)
            .map_or_else(Rational::zero, |i| self.rhs[i].clone())
    }
}

/// A point satisfying every constraint, or `None` if there is none.
pub(crate) fn find_point(n: usize, constraints: &[Constraint]) -> Option<QVector> {
    let strict = constraints.iter().any(|c| c.relation == Relation::Gt);
    let surplus_rows: Vec<usize> = (0..constraints.len())
        .filter(|&i| constraints[i].relation != Relation::Eq)
        .collect();
    // columns: x+ (n), x- (n), [t, u], surplus per inequality
    let t_col = 2 * n;
    let first_surplus = if strict { 2 * n + 2 } else { 2 * n };
    let structural = first_surplus + surplus_rows.len();

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for (i, c) in constraints.iter().enumerate() {
        debug_assert_eq!(c.coeffs.len(), n);
        let mut row = vec![Rational::zero(); structural];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = a.clone();
            row[n + j] = -a.clone();
        }
        if c.relation == Relation::Gt {
            row[t_col] = -Rational::one();
        }
        if let Some(k) = surplus_rows.iter().position(|&r| r == i) {
            row[first_surplus + k] = -Rational::one();
        }
        rows.push(row);
        rhs.push(c.rhs.clone());
    }
    if strict {
        let mut row = vec![Rational::zero(); structural];
        row[t_col] = Rational::one();
        row[t_col + 1] = Rational::one();
        rows.push(row);
        rhs.push(Rational::one());
    }
    for (row, b) in rows.iter_mut().zip(rhs.iter_mut()) {
        if b.is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            *b = -b.clone();
        }
    }
    // artificials
    let m = rows.len();
    let cols = structural + m;
    for (i, row) in rows.iter_mut().enumerate() {
        row.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
    }
    let mut tab = Tableau { rows, rhs, basis: (structural..cols).collect(), cols };

    let mut phase1 = vec![Rational::zero(); cols];
    for v in phase1.iter_mut().skip(structural) {
        *v = -Rational::one();
    }
    tab.maximize(&phase1, cols);
    let infeasibility: Rational = (structural..cols).map(|c| tab.value_of(c)).sum();
    if !infeasibility.is_zero() {
        return None;
    }
    // drive remaining (zero-valued) artificials out of the basis
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] >= structural {
            match (0..structural).find(|&j| !tab.rows[r][j].is_zero()) {
                Some(j) => tab.pivot(r, j),
                None => {
                    tab.rows.remove(r);
                    tab.rhs.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    debug_assert!(tab.cols == cols);

    if strict {
        let mut objective = vec![Rational::zero(); cols];
        objective[t_col] = Rational::one();
        tab.maximize(&objective, structural);
        if !tab.value_of(t_col).is_positive() {
            return None;
        }
    }
    Some((0..n).map(|j| tab.value_of(j) - tab.value_of(n + j)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{dot, int, ints};

    fn satisfied(x: &[Rational], cs: &[Constraint]) -> bool {
        cs.iter().all(|c| {
            let v = dot(&c.coeffs, x);
            match c.relation {
                Relation::Eq => v == c.rhs,
                Relation::Ge => v >= c.rhs,
                Relation::Gt => v > c.rhs,
            }
        })
    }

    #[test]
    fn open_triangle_has_interior_point() {
        // x > 0, y > 0, -(x + y - 1) > 0
        let cs = vec![
            Constraint::new(ints(&[1, 0]), Relation::Gt, int(0)),
            Constraint::new(ints(&[0, 1]), Relation::Gt, int(0)),
            Constraint::new(ints(&[-1, -1]), Relation::Gt, int(-1)),
        ];
        let x = find_point(2, &cs).unwrap();
        assert!(satisfied(&x, &cs));
    }

    #[test]
    fn empty_open_set() {
        // x < 0, y < 0, x + y - 1 > 0
        let cs = vec![
            Constraint::new(ints(&[-1, 0]), Relation::Gt, int(0)),
            Constraint::new(ints(&[0, -1]), Relation::Gt, int(0)),
            Constraint::new(ints(&[1, 1]), Relation::Gt, int(1)),
        ];
        assert!(find_point(2, &cs).is_none());
    }

    #[test]
    fn strictness_matters() {
        // x >= 0 and -x >= 0 is the point 0; x > 0 and -x >= 0 is empty
        let weak = vec![
            Constraint::new(ints(&[1]), Relation::Ge, int(0)),
            Constraint::new(ints(&[-1]), Relation::Ge, int(0)),
        ];
        assert_eq!(find_point(1, &weak), Some(ints(&[0])));
        let strict = vec![
            Constraint::new(ints(&[1]), Relation::Gt, int(0)),
            Constraint::new(ints(&[-1]), Relation::Ge, int(0)),
        ];
        assert!(find_point(1, &strict).is_none());
    }

    #[test]
    fn equalities_and_redundancy() {
        let cs = vec![
            Constraint::new(ints(&[1, 1]), Relation::Eq, int(2)),
            Constraint::new(ints(&[2, 2]), Relation::Eq, int(4)),
            Constraint::new(ints(&[1, -1]), Relation::Gt, int(0)),
        ];
        let x = find_point(2, &cs).unwrap();
        assert!(satisfied(&x, &cs));
        let bad = vec![
            Constraint::new(ints(&[1, 1]), Relation::Eq, int(2)),
            Constraint::new(ints(&[1, 1]), Relation::Eq, int(3)),
        ];
        assert!(find_point(2, &bad).is_none());
    }
}
