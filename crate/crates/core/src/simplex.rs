//! Dense tableau simplex over a generic scalar.
//!
//! Solves `max cᵀx  s.t.  A x ≤ b, x ≥ 0` in the condensed (Tucker) layout:
//! row `i` reads `x_B(i) = b_i − Σ_j a_ij x_N(j)` and the objective reads
//! `z = v + Σ_j c_j x_N(j)`. Variable ids `0..k` are the structural columns,
//! `k..k+m` the row slacks.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Arithmetic the tableau needs. Sign tests go through [`Scalar::sign`] so a
/// floating implementation can apply a tolerance.
pub trait Scalar: Clone + Debug {
    /// Arithmetic is exact; ratio-test ties follow variable order.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn sign(&self) -> Ordering;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn over(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    /// `self -= f * x`.
    fn sub_mul(&mut self, f: &Self, x: &Self) {
        *self = self.minus(&f.times(x));
    }

    /// Total order used for ratio tests; must agree with `sign` on differences.
    fn compare(&self, other: &Self) -> Ordering {
        self.minus(other).sign()
    }

    /// `|self| > |other|`; only consulted by inexact scalars.
    fn larger_magnitude(&self, _other: &Self) -> bool {
        false
    }

    /// Slack allowed in the ratio test; zero for exact scalars.
    fn tolerance() -> Self {
        Self::zero()
    }

    fn is_zero(&self) -> bool {
        self.sign() == Ordering::Equal
    }
    /// Structural zero, used to skip work; no tolerance.
    fn is_null(&self) -> bool {
        self.is_zero()
    }
    fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }
    fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn sign(&self) -> Ordering {
        if Zero::is_zero(self) {
            Ordering::Equal
        } else if Signed::is_positive(self) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn over(&self, other: &Self) -> Self {
        self / other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn sub_mul(&mut self, f: &Self, x: &Self) {
        *self -= f * x;
    }
    fn compare(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}

/// Absolute tolerance of the floating backend.
pub const FLOAT_TOL: f64 = 1e-9;

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn sign(&self) -> Ordering {
        if *self > FLOAT_TOL {
            Ordering::Greater
        } else if *self < -FLOAT_TOL {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn over(&self, other: &Self) -> Self {
        self / other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn sub_mul(&mut self, f: &Self, x: &Self) {
        *self -= f * x;
        if self.abs() < 1e-13 {
            *self = 0.0;
        }
    }
    fn larger_magnitude(&self, other: &Self) -> bool {
        self.abs() > other.abs()
    }
    fn is_null(&self) -> bool {
        *self == 0.0
    }
    fn tolerance() -> Self {
        FLOAT_TOL
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Consecutive degenerate pivots tolerated under the largest-coefficient
/// rule before switching to Bland's rule until the objective moves.
const DEGENERATE_STREAK: usize = 64;

#[derive(Debug, Clone)]
pub struct Tableau<T> {
    a: Vec<Vec<T>>,
    b: Vec<T>,
    obj: Vec<T>,
    v: T,
    basis: Vec<usize>,
    nonbasis: Vec<usize>,
    structural: usize,
    pivots: usize,
}

impl<T: Scalar> Tableau<T> {
    /// `a` is row-major with `m` rows of `k` entries.
    pub fn new(a: Vec<Vec<T>>, b: Vec<T>, c: Vec<T>) -> Self {
        let m = a.len();
        let k = c.len();
        assert_eq!(b.len(), m, "rhs length");
        assert!(
            a.iter().all(|row| row.len() == k),
            "ragged constraint matrix"
        );
        Tableau {
            a,
            b,
            obj: c,
            v: T::zero(),
            basis: (k..k + m).collect(),
            nonbasis: (0..k).collect(),
            structural: k,
            pivots: 0,
        }
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn pivots(&self) -> usize {
        self.pivots
    }

    pub fn objective(&self) -> &T {
        &self.v
    }

    /// Runs phase 1 if the slack basis is infeasible, then phase 2.
    pub fn solve(&mut self) -> Status {
        if self.b.iter().any(Scalar::is_negative) && !self.phase_one() {
            return Status::Infeasible;
        }
        self.optimize()
    }

    /// Phase 2 from the current (feasible) basis.
    pub fn optimize(&mut self) -> Status {
        let mut streak = 0usize;
        let mut bland = false;
        loop {
            let Some(e) = self.entering(bland) else {
                return Status::Optimal;
            };
            let leaving = if T::EXACT || bland {
                self.leaving(e)
            } else {
                self.leaving_harris(e)
            };
            let Some(l) = leaving else {
                return Status::Unbounded;
            };
            let degenerate = self.b[l].is_zero();
            self.pivot(l, e);
            if degenerate {
                streak += 1;
                if streak >= DEGENERATE_STREAK {
                    bland = true;
                }
            } else {
                streak = 0;
                bland = false;
            }
        }
    }

    /// Replaces the objective by `c` (indexed by structural variable) and
    /// re-expresses it in the current basis. The basis stays primal feasible.
    pub fn set_objective(&mut self, c: &[T]) {
        assert_eq!(c.len(), self.structural);
        let cost = |var: usize| -> T {
            if var < self.structural {
                c[var].clone()
            } else {
                T::zero()
            }
        };
        let mut obj: Vec<T> = self.nonbasis.iter().map(|&var| cost(var)).collect();
        let mut v = T::zero();
        for (i, &var) in self.basis.iter().enumerate() {
            let cb = cost(var);
            if cb.is_zero() {
                continue;
            }
            v = v.plus(&cb.times(&self.b[i]));
            for (j, a_ij) in self.a[i].iter().enumerate() {
                if !a_ij.is_zero() {
                    obj[j].sub_mul(&cb, a_ij);
                }
            }
        }
        self.obj = obj;
        self.v = v;
    }

    /// Values of the structural variables at the current basis.
    pub fn primal(&self) -> Vec<T> {
        let mut x = vec![T::zero(); self.structural];
        for (i, &var) in self.basis.iter().enumerate() {
            if var < self.structural {
                x[var] = self.b[i].clone();
            }
        }
        x
    }

    /// Row multipliers read off the objective row: `y_r = −c̄` of slack `r`
    /// when nonbasic, else zero. At an optimum `y ≥ 0`, `Aᵀy ≥ c`, `bᵀy = v`.
    pub fn dual(&self) -> Vec<T> {
        let mut y = vec![T::zero(); self.rows()];
        for (j, &var) in self.nonbasis.iter().enumerate() {
            if var >= self.structural && var < self.structural + self.rows() {
                y[var - self.structural] = self.obj[j].negated();
            }
        }
        y
    }

    fn entering(&self, bland: bool) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (j, c) in self.obj.iter().enumerate() {
            if !c.is_positive() {
                continue;
            }
            best = match best {
                None => Some(j),
                Some(cur) if bland => {
                    if self.nonbasis[j] < self.nonbasis[cur] {
                        Some(j)
                    } else {
                        Some(cur)
                    }
                }
                Some(cur) => match c.compare(&self.obj[cur]) {
                    Ordering::Greater => Some(j),
                    Ordering::Equal if self.nonbasis[j] < self.nonbasis[cur] => Some(j),
                    _ => Some(cur),
                },
            };
        }
        best
    }

    fn leaving(&self, e: usize) -> Option<usize> {
        let mut best: Option<(usize, T)> = None;
        for (i, row) in self.a.iter().enumerate() {
            if !row[e].is_positive() {
                continue;
            }
            let ratio = self.b[i].over(&row[e]);
            let better = match &best {
                None => true,
                Some((cur, r)) => match ratio.compare(r) {
                    Ordering::Less => true,
                    Ordering::Equal => self.basis[i] < self.basis[*cur],
                    Ordering::Greater => false,
                },
            };
            if better {
                best = Some((i, ratio));
            }
        }
        best.map(|(i, _)| i)
    }

    /// Two-pass ratio test: find the smallest ratio with `b` relaxed by the
    /// tolerance, then pivot on the largest entry among rows within it.
    fn leaving_harris(&self, e: usize) -> Option<usize> {
        let clipped = |i: usize| {
            if self.b[i].is_negative() {
                T::zero()
            } else {
                self.b[i].clone()
            }
        };
        let candidates = || (0..self.rows()).filter(|&i| self.a[i][e].is_positive());
        let bound = candidates()
            .map(|i| clipped(i).plus(&T::tolerance()).over(&self.a[i][e]))
            .min_by(|x, y| x.compare(y))?;
        candidates()
            .filter(|&i| clipped(i).over(&self.a[i][e]).compare(&bound) != Ordering::Greater)
            .reduce(|best, i| {
                let (a_i, a_best) = (&self.a[i][e], &self.a[best][e]);
                if a_i.larger_magnitude(a_best) {
                    i
                } else {
                    best
                }
            })
    }

    fn pivot(&mut self, l: usize, e: usize) {
        self.pivots += 1;
        let piv = self.a[l][e].clone();
        let inv = T::one().over(&piv);
        {
            let row = &mut self.a[l];
            for (j, entry) in row.iter_mut().enumerate() {
                if j != e && !entry.is_null() {
                    *entry = entry.over(&piv);
                }
            }
            row[e] = inv.clone();
            self.b[l] = self.b[l].over(&piv);
        }
        let pivot_row = std::mem::take(&mut self.a[l]);
        let support: Vec<usize> = (0..pivot_row.len())
            .filter(|&j| j != e && !pivot_row[j].is_null())
            .collect();
        let b_l = self.b[l].clone();
        for (i, row) in self.a.iter_mut().enumerate() {
            if i == l || row[e].is_null() {
                continue;
            }
            let f = row[e].clone();
            for &j in &support {
                row[j].sub_mul(&f, &pivot_row[j]);
            }
            row[e] = f.times(&inv).negated();
            self.b[i].sub_mul(&f, &b_l);
        }
        let f = self.obj[e].clone();
        if !f.is_null() {
            for &j in &support {
                self.obj[j].sub_mul(&f, &pivot_row[j]);
            }
            self.obj[e] = f.times(&inv).negated();
            self.v = self.v.plus(&f.times(&b_l));
        }
        self.a[l] = pivot_row;
        std::mem::swap(&mut self.basis[l], &mut self.nonbasis[e]);
    }

    /// Auxiliary-variable phase 1. Returns false when infeasible. On success
    /// the auxiliary column is gone and the original objective is restored.
    fn phase_one(&mut self) -> bool {
        let original: Vec<T> = {
            let mut c = vec![T::zero(); self.structural];
            for (j, &var) in self.nonbasis.iter().enumerate() {
                c[var] = self.obj[j].clone();
            }
            c
        };
        debug_assert!(self.nonbasis.iter().all(|&v| v < self.structural));
        let aux = self.structural + self.rows();
        for row in &mut self.a {
            row.push(T::one().negated());
        }
        self.nonbasis.push(aux);
        let e = self.nonbasis.len() - 1;
        self.obj = vec![T::zero(); self.nonbasis.len()];
        self.obj[e] = T::one().negated();
        self.v = T::zero();

        let l = (0..self.rows())
            .min_by(|&p, &q| self.b[p].compare(&self.b[q]).then(p.cmp(&q)))
            .expect("phase 1 needs a row");
        self.pivot(l, e);
        let status = self.optimize();
        debug_assert_eq!(status, Status::Optimal);
        if !self.v.is_zero() {
            return false;
        }
        if let Some(i) = self.basis.iter().position(|&var| var == aux) {
            // degenerate: swap aux out against any nonzero entry
            let j = (0..self.nonbasis.len())
                .find(|&j| !self.a[i][j].is_zero())
                .expect("auxiliary row cannot be empty");
            self.pivot(i, j);
        }
        let col = self
            .nonbasis
            .iter()
            .position(|&var| var == aux)
            .expect("auxiliary variable is nonbasic");
        for row in &mut self.a {
            row.remove(col);
        }
        self.nonbasis.remove(col);
        self.obj.remove(col);
        self.set_objective(&original);
        true
    }
}
