//! Exact rational linear feasibility.
//!
//! Decides whether `A x = b, x >= 0` has a solution, by a Phase-I simplex
//! with Bland's rule over exact rationals. On infeasibility it returns a
//! Farkas certificate `y` with `y^T A <= 0` componentwise and `y^T b > 0`,
//! which downstream becomes a destabilizing one-parameter subgroup.
//!
//! Dense tableau, no scaling tricks; problem sizes here are a handful of
//! rows and columns.

use crate::rational::Rational;

/// Outcome of the feasibility question for `A x = b, x >= 0`.
#[derive(Debug, Clone)]
pub enum Feasibility {
    /// A feasible point, one value per column of `A`.
    Feasible(Vec<Rational>),
    /// Farkas certificate: `y^T A <= 0` and `y^T b > 0`.
    Infeasible(Vec<Rational>),
}

/// Solves the feasibility problem. `matrix` is row-major with `rows * cols`
/// entries; `rhs` has `rows` entries. Panics on shape mismatch.
pub fn feasible_nonnegative(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Feasibility {
    let rows = matrix.len();
    assert_eq!(rows, rhs.len(), "rhs length");
    let cols = if rows == 0 { 0 } else { matrix[0].len() };

    // normalize to b >= 0, remembering row flips for the certificate
    let mut flipped = vec![false; rows];
    // tableau[r] = [ A | I ] row, then rhs at the end
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(rows);
    for r in 0..rows {
        assert_eq!(matrix[r].len(), cols, "matrix row length");
        let flip = rhs[r].is_negative();
        flipped[r] = flip;
        let mut row: Vec<Rational> = Vec::with_capacity(cols + rows + 1);
        for v in &matrix[r] {
            row.push(if flip { -v } else { v.clone() });
        }
        for k in 0..rows {
            row.push(if k == r {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        row.push(if flip { -&rhs[r] } else { rhs[r].clone() });
        tab.push(row);
    }

    // Phase-I objective: minimize the sum of artificials. Reduced-cost row
    // starts as -(sum of constraint rows) on original columns, 0 on
    // artificials; objective value = -(sum of rhs).
    let width = cols + rows + 1;
    let mut obj: Vec<Rational> = vec![Rational::zero(); width];
    for row in &tab {
        for (j, v) in row.iter().enumerate() {
            obj[j] -= v;
        }
    }
    for j in cols..cols + rows {
        obj[j] = Rational::zero();
    }

    let mut basis: Vec<usize> = (cols..cols + rows).collect();

    loop {
        // Bland: entering column = lowest index with negative reduced cost
        let Some(enter) = (0..cols + rows).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // Bland: leaving row = min ratio, ties by lowest basis variable
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for r in 0..rows {
            let pivot = &tab[r][enter];
            if pivot.is_positive() {
                let ratio = &tab[r][width - 1] / pivot;
                let better = match &best {
                    None => true,
                    Some(b) => ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let Some(leave) = leave else {
            // Phase-I objective is bounded below by 0, so a ray cannot occur
            unreachable!("phase-I simplex is always bounded");
        };
        pivot(&mut tab, &mut obj, leave, enter, width);
        basis[leave] = enter;
    }

    // objective value = -obj[width-1]; feasible iff it is zero
    let optimum = -&obj[width - 1];
    if optimum.is_zero() {
        // drive any artificial variables out of a degenerate basis
        for r in 0..rows {
            if basis[r] >= cols {
                if let Some(enter) = (0..cols).find(|&j| !tab[r][j].is_zero()) {
                    pivot(&mut tab, &mut obj, r, enter, width);
                    basis[r] = enter;
                }
                // a fully zero structural row is redundant; its artificial
                // stays basic at value zero, harmless for the solution
            }
        }
        let mut x = vec![Rational::zero(); cols];
        for r in 0..rows {
            if basis[r] < cols {
                x[basis[r]] = tab[r][width - 1].clone();
            }
        }
        Feasibility::Feasible(x)
    } else {
        // y_k = 1 - reduced cost of artificial k, then undo row flips
        let mut y = Vec::with_capacity(rows);
        for k in 0..rows {
            let yk = Rational::one() - &obj[cols + k];
            y.push(if flipped[k] { -yk } else { yk });
        }
        Feasibility::Infeasible(y)
    }
}

fn pivot(tab: &mut [Vec<Rational>], obj: &mut [Rational], leave: usize, enter: usize, width: usize) {
    let inv = tab[leave][enter].recip();
    for v in tab[leave].iter_mut() {
        *v *= &inv;
    }
    let pivot_row = tab[leave].clone();
    for (r, row) in tab.iter_mut().enumerate() {
        if r == leave {
            continue;
        }
        let factor = row[enter].clone();
        if factor.is_zero() {
            continue;
        }
        for j in 0..width {
            let t = &factor * &pivot_row[j];
            row[j] = &row[j] - &t;
        }
    }
    let factor = obj[enter].clone();
    if !factor.is_zero() {
        for j in 0..width {
            let t = &factor * &pivot_row[j];
            obj[j] = &obj[j] - &t;
        }
    }
}
