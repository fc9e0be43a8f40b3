//! The LambdaPrime metric LP relaxation and its solver backends.
//!
//! Variables are the pairs `i < j` in lexicographic order. Rows are stored as
//! `A x ≥ b`: three triangle rows `x_ik + x_jk − x_ij ≥ 0` per triple (one per
//! choice of long side, triples in lexicographic order), then one bound row
//! `−x_ij ≥ −1` per pair. The objective is `min cᵀx + K` with
//! `c_ij = 1 − λ` on edges, `−λ` on non-edges, and `K = λ·C(n, 2)`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{pair_index, pairs, Graph};
use crate::objectives::{fractional_line, CostLine};
use crate::rational::{choose2, serde_q, snap_f64, to_f64, Rational};
use crate::simplex::{Status, Tableau};

#[derive(Debug, Clone)]
pub struct LpProblem {
    pub n: usize,
    pub lambda: Rational,
    /// Sparse rows of `A` as `(variable, coefficient)`.
    pub rows: Vec<Vec<(usize, i8)>>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
    pub constant: Rational,
    edge: Vec<bool>,
}

impl LpProblem {
    pub fn num_vars(&self) -> usize {
        self.c.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn triangle_rows(&self) -> usize {
        self.rows.len() - self.c.len()
    }

    pub fn is_edge(&self, var: usize) -> bool {
        self.edge[var]
    }

    /// `A x` row by row.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&(v, a)| scaled(&x[v], a)).sum())
            .collect()
    }

    /// `Aᵀ y`.
    pub fn apply_transpose(&self, y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.num_vars()];
        for (row, y_r) in self.rows.iter().zip(y) {
            if y_r.is_zero() {
                continue;
            }
            for &(v, a) in row {
                out[v] += scaled(y_r, a);
            }
        }
        out
    }

    /// Objective value `cᵀx + K`.
    pub fn value(&self, x: &[Rational]) -> Rational {
        dot(&self.c, x) + &self.constant
    }

    /// Checks `A x ≥ b` and `x ≥ 0`.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars()
            && x.iter().all(|v| !v.is_negative())
            && self.apply(x).iter().zip(&self.b).all(|(ax, b)| ax >= b)
    }

    /// Checks that `y` certifies optimality of `x`: `y ≥ 0`, `Aᵀy ≤ c` and
    /// `bᵀy = cᵀx`.
    pub fn certifies(&self, x: &[Rational], y: &[Rational]) -> bool {
        y.len() == self.num_rows()
            && y.iter().all(|v| !v.is_negative())
            && self
                .apply_transpose(y)
                .iter()
                .zip(&self.c)
                .all(|(aty, c)| aty <= c)
            && dot(&self.b, y) == dot(&self.c, x)
    }
}

fn scaled(v: &Rational, a: i8) -> Rational {
    match a {
        1 => v.clone(),
        -1 => -v,
        a => v * Rational::from_integer((a as i64).into()),
    }
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(p, q)| !p.is_zero() && !q.is_zero())
        .map(|(p, q)| p * q)
        .sum()
}

/// Cost vector at `λ`: `1 − λ` on edges, `−λ` elsewhere.
pub fn cost_vector(g: &Graph, lambda: &Rational) -> Vec<Rational> {
    let on_edge = Rational::one() - lambda;
    let off_edge = -lambda;
    pairs(g.n())
        .map(|(i, j)| {
            if g.has_edge(i, j) {
                on_edge.clone()
            } else {
                off_edge.clone()
            }
        })
        .collect()
}

pub fn build_lp(g: &Graph, lambda: &Rational) -> Result<LpProblem> {
    if !lambda.is_positive() || *lambda >= Rational::one() {
        return Err(Error::precondition(format!("λ = {lambda} outside (0, 1)")));
    }
    let n = g.n();
    let mut rows = Vec::with_capacity(3 * n * n * n / 6 + n * n / 2);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (ij, ik, jk) = (
                    pair_index(n, i, j),
                    pair_index(n, i, k),
                    pair_index(n, j, k),
                );
                rows.push(vec![(ik, 1), (jk, 1), (ij, -1)]);
                rows.push(vec![(ij, 1), (jk, 1), (ik, -1)]);
                rows.push(vec![(ij, 1), (ik, 1), (jk, -1)]);
            }
        }
    }
    let triangles = rows.len();
    let vars = n * (n - 1) / 2;
    rows.extend((0..vars).map(|v| vec![(v, -1)]));
    let mut b = vec![Rational::zero(); triangles];
    b.extend(std::iter::repeat_n(-Rational::one(), vars));
    Ok(LpProblem {
        n,
        lambda: lambda.clone(),
        rows,
        b,
        c: cost_vector(g, lambda),
        constant: lambda * choose2(n),
        edge: pairs(n).map(|(i, j)| g.has_edge(i, j)).collect(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub lambda: Rational,
    /// One entry per pair in lexicographic order.
    pub x: Vec<Rational>,
    /// LambdaPrime LP value `P + λN`.
    pub value: Rational,
    pub line: CostLine,
    /// Row multipliers proving optimality, when the backend produced them.
    pub dual: Option<Vec<Rational>>,
    /// True when `dual` has been checked against `x` in exact arithmetic.
    pub certified: bool,
}

impl LpSolution {
    pub fn from_x(g: &Graph, lambda: Rational, x: Vec<Rational>) -> Result<Self> {
        let line = fractional_line(&x, g)?;
        Ok(LpSolution {
            value: line.at(&lambda),
            lambda,
            x,
            line,
            dual: None,
            certified: false,
        })
    }

    pub fn to_json(&self) -> String {
        let record = SolutionRecord {
            lambda: self.lambda.clone(),
            value: self.value.clone(),
            p: self.line.p.clone(),
            n: self.line.n.clone(),
            x: self
                .x
                .iter()
                .map(crate::rational::format_rational)
                .collect(),
        };
        serde_json::to_string_pretty(&record).expect("solution serializes")
    }

    /// Reads `{lambda, value, P, N, x}` and recomputes the line from `x`.
    pub fn from_json(text: &str, g: &Graph) -> Result<Self> {
        let record: SolutionRecord = serde_json::from_str(text)?;
        let x = record
            .x
            .iter()
            .map(|t| crate::rational::parse_rational(t))
            .collect::<Result<Vec<_>>>()?;
        let sol = LpSolution::from_x(g, record.lambda, x)?;
        if sol.line.p != record.p || sol.line.n != record.n || sol.value != record.value {
            return Err(Error::parse("stored P, N or value disagree with x"));
        }
        Ok(sol)
    }

    /// Value of this fixed `x` at another parameter.
    pub fn value_at(&self, lambda: &Rational) -> Rational {
        self.line.at(lambda)
    }
}

#[derive(Serialize, Deserialize)]
struct SolutionRecord {
    #[serde(with = "serde_q")]
    lambda: Rational,
    #[serde(with = "serde_q")]
    value: Rational,
    #[serde(rename = "P", with = "serde_q")]
    p: Rational,
    #[serde(rename = "N", with = "serde_q")]
    n: Rational,
    x: Vec<String>,
}

/// `P + λ'·N` of `x`'s line.
pub fn lp_value_at(x: &LpSolution, lambda: &Rational) -> Rational {
    x.value_at(lambda)
}

/// A way of solving [`LpProblem`]s, selected by name at runtime.
pub trait LpBackend: Send + Sync {
    fn name(&self) -> &'static str;
    fn solve(&self, p: &LpProblem, g: &Graph) -> Result<LpSolution>;
}

/// Exact rational simplex; every solution carries a checked dual.
pub struct ExactBackend;

/// Double-precision simplex; the primal and dual are snapped to nearby
/// rationals and `certified` reports whether the snapped pair checks out.
pub struct FloatBackend;

pub fn backends() -> Vec<Box<dyn LpBackend>> {
    vec![Box::new(ExactBackend), Box::new(FloatBackend)]
}

pub fn backend(name: &str) -> Result<Box<dyn LpBackend>> {
    backends()
        .into_iter()
        .find(|b| b.name() == name)
        .ok_or_else(|| {
            Error::parse(format!(
                "unknown LP backend {name:?} (expected exact or float)"
            ))
        })
}

/// Maximization tableau for `max (−c)ᵀx  s.t. (−A) x ≤ −b`. Its slack basis
/// is feasible because `b ≤ 0`.
fn tableau<T: crate::simplex::Scalar>(p: &LpProblem, conv: impl Fn(&Rational) -> T) -> Tableau<T> {
    let k = p.num_vars();
    let a = p
        .rows
        .iter()
        .map(|row| {
            let mut dense = vec![T::zero(); k];
            for &(v, coef) in row {
                dense[v] = conv(&Rational::from_integer((-(coef as i64)).into()));
            }
            dense
        })
        .collect();
    let b = p.b.iter().map(|v| conv(&-v)).collect();
    let c = p.c.iter().map(|v| conv(&-v)).collect();
    Tableau::new(a, b, c)
}

fn expect_optimal(status: Status) -> Result<()> {
    match status {
        Status::Optimal => Ok(()),
        other => Err(Error::internal(format!("metric LP reported {other:?}"))),
    }
}

impl LpBackend for ExactBackend {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn solve(&self, p: &LpProblem, g: &Graph) -> Result<LpSolution> {
        if p.num_vars() == 0 {
            return LpSolution::from_x(g, p.lambda.clone(), Vec::new());
        }
        let mut t = tableau(p, Rational::clone);
        expect_optimal(t.solve())?;
        finish_exact(p, g, t.primal(), t.dual())
    }
}

fn finish_exact(
    p: &LpProblem,
    g: &Graph,
    x: Vec<Rational>,
    y: Vec<Rational>,
) -> Result<LpSolution> {
    if !p.is_feasible(&x) || !p.certifies(&x, &y) {
        return Err(Error::internal("simplex returned an uncertified optimum"));
    }
    let mut sol = LpSolution::from_x(g, p.lambda.clone(), x)?;
    debug_assert_eq!(sol.value, p.value(&sol.x));
    sol.dual = Some(y);
    sol.certified = true;
    Ok(sol)
}

/// Largest denominator tried when snapping float output.
const SNAP_DENOMINATOR: u64 = 1 << 20;

impl LpBackend for FloatBackend {
    fn name(&self) -> &'static str {
        "float"
    }

    fn solve(&self, p: &LpProblem, g: &Graph) -> Result<LpSolution> {
        if p.num_vars() == 0 {
            return LpSolution::from_x(g, p.lambda.clone(), Vec::new());
        }
        let mut t = tableau(p, to_f64);
        expect_optimal(t.solve())?;
        let snap = |v: &f64| snap_f64(*v, SNAP_DENOMINATOR).unwrap_or_else(Rational::zero);
        let x: Vec<Rational> = t
            .primal()
            .iter()
            .map(|v| snap(v).clamp(Rational::zero(), Rational::one()))
            .collect();
        let y: Vec<Rational> = t
            .dual()
            .iter()
            .map(|v| snap(v).max(Rational::zero()))
            .collect();
        let feasible = p.is_feasible(&x);
        let certified = feasible && p.certifies(&x, &y);
        let mut sol = LpSolution::from_x(g, p.lambda.clone(), x)?;
        sol.certified = certified;
        sol.dual = certified.then_some(y);
        Ok(sol)
    }
}

/// Solves with the exact backend.
pub fn solve_lp(p: &LpProblem, g: &Graph) -> Result<LpSolution> {
    ExactBackend.solve(p, g)
}

/// Convenience: build and solve exactly at `λ`.
pub fn solve_at(g: &Graph, lambda: &Rational) -> Result<LpSolution> {
    solve_lp(&build_lp(g, lambda)?, g)
}

/// Warm-started exact solver for one graph. Each call reuses the previous
/// optimal basis and only swaps the cost vector, so sweeping `λ` in order
/// costs a handful of pivots per point. Values are exact; the returned `x`
/// may differ from a cold solve at degenerate optima.
pub struct LpSession<'g> {
    g: &'g Graph,
    tableau: Option<Tableau<Rational>>,
}

impl<'g> LpSession<'g> {
    pub fn new(g: &'g Graph) -> Self {
        LpSession { g, tableau: None }
    }

    pub fn solve(&mut self, lambda: &Rational) -> Result<LpSolution> {
        let p = build_lp(self.g, lambda)?;
        if p.num_vars() == 0 {
            return LpSolution::from_x(self.g, lambda.clone(), Vec::new());
        }
        let neg_c: Vec<Rational> = p.c.iter().map(|v| -v).collect();
        let t = match self.tableau.as_mut() {
            Some(t) => {
                t.set_objective(&neg_c);
                expect_optimal(t.optimize())?;
                t
            }
            None => {
                let mut t = tableau(&p, Rational::clone);
                expect_optimal(t.solve())?;
                self.tableau.insert(t)
            }
        };
        let (x, y) = (t.primal(), t.dual());
        finish_exact(&p, self.g, x, y)
    }

    pub fn value(&mut self, lambda: &Rational) -> Result<Rational> {
        Ok(self.solve(lambda)?.value)
    }
}
