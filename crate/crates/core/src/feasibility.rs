//! Exact feasibility of small linear systems with strict and non-strict
//! inequalities.
//!
//! Equalities are eliminated first by Gauss-Jordan reduction, then the
//! remaining free parameters are projected out one at a time with
//! Fourier-Motzkin elimination. Strictness propagates through every
//! combination, so open halfspace conditions are honored exactly. Witnesses
//! are rebuilt by back-substitution through the stored projections.

use crate::error::{Error, Result};
use crate::linear::{dot, rank, solve_linear, LinearSystem, Solution};
use crate::scalar::{Rational, Scalar};
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `row . x <= rhs`
    Le,
    /// `row . x < rhs`
    Lt,
    /// `row . x = rhs`
    Eq,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn holds_at(&self, x: &[Rational]) -> bool {
        let lhs = dot(&self.coeffs, x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Lt => lhs < self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// Caps that turn runaway eliminations into explicit errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FeasibilityLimits {
    pub max_unknowns: usize,
    pub max_rows: usize,
}

impl Default for FeasibilityLimits {
    fn default() -> Self {
        FeasibilityLimits { max_unknowns: 64, max_rows: 20_000 }
    }
}

#[derive(Clone, Debug, Default)]
pub struct FeasibilityProblem {
    pub unknowns: usize,
    pub constraints: Vec<Constraint>,
    pub limits: FeasibilityLimits,
}

impl FeasibilityProblem {
    pub fn new(unknowns: usize) -> Self {
        FeasibilityProblem { unknowns, constraints: Vec::new(), limits: FeasibilityLimits::default() }
    }

    pub fn with_limits(mut self, limits: FeasibilityLimits) -> Self {
        self.limits = limits;
        self
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.unknowns, "constraint width");
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    pub fn eq(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.push(coeffs, Relation::Eq, rhs);
    }

    pub fn le(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.push(coeffs, Relation::Le, rhs);
    }

    pub fn lt(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.push(coeffs, Relation::Lt, rhs);
    }

    pub fn ge(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.push(negate(&coeffs), Relation::Le, -rhs);
    }

    pub fn gt(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.push(negate(&coeffs), Relation::Lt, -rhs);
    }

    pub fn extend(&mut self, other: &FeasibilityProblem) {
        assert_eq!(self.unknowns, other.unknowns);
        self.constraints.extend(other.constraints.iter().cloned());
    }

    pub fn satisfied_by(&self, x: &Vector<Rational>) -> bool {
        x.dim() == self.unknowns && self.constraints.iter().all(|c| c.holds_at(x.coords()))
    }
}

fn negate(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|c| -c.clone()).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    Empty,
    Feasible {
        witness: Vector<Rational>,
        /// Affine dimension of the feasible set.
        dimension: usize,
    },
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible { .. })
    }

    pub fn witness(&self) -> Option<&Vector<Rational>> {
        match self {
            Feasibility::Feasible { witness, .. } => Some(witness),
            Feasibility::Empty => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Optimum {
    Infeasible,
    Unbounded,
    /// Supremum approached but excluded by a strict inequality.
    Supremum(Rational),
    Attained {
        value: Rational,
        point: Vector<Rational>,
    },
}

/// Inequality `coeffs . y (< | <=) rhs` over the free parameters.
#[derive(Clone, Debug, PartialEq)]
struct Row {
    coeffs: Vec<Rational>,
    rhs: Rational,
    strict: bool,
}

impl Row {
    /// Positive scaling so the last nonzero coefficient has absolute value 1.
    fn normalized(mut self) -> Row {
        if let Some(lead) = self.coeffs.iter().rev().find(|c| !Scalar::is_zero(*c)).cloned() {
            let s = Scalar::abs(&lead);
            for c in self.coeffs.iter_mut() {
                *c = c.clone() / &s;
            }
            self.rhs = self.rhs.clone() / &s;
        }
        self
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// For a row without variables: does `0 (<|<=) rhs` hold?
    fn constant_ok(&self) -> bool {
        if self.strict {
            Scalar::is_positive(&self.rhs)
        } else {
            !Scalar::is_negative(&self.rhs)
        }
    }
}

/// Affine parametrization `x = base + basis * y` of the equality solutions,
/// together with the inequalities rewritten in `y`.
struct Reduced {
    base: Vector<Rational>,
    basis: Vec<Vector<Rational>>,
    rows: Vec<Row>,
}

fn reduce(problem: &FeasibilityProblem) -> Result<Option<Reduced>> {
    if problem.unknowns > problem.limits.max_unknowns {
        return Err(Error::ResourceLimit {
            what: "feasibility unknowns",
            found: problem.unknowns,
            limit: problem.limits.max_unknowns,
        });
    }
    let n = problem.unknowns;
    let mut eqs = LinearSystem::new(n);
    for c in problem.constraints.iter().filter(|c| c.relation == Relation::Eq) {
        eqs.push(c.coeffs.clone(), c.rhs.clone())?;
    }
    let (base, basis) = match solve_linear(&eqs) {
        Solution::Infeasible => return Ok(None),
        Solution::Unique(p) => (p, Vec::new()),
        Solution::Affine { particular, basis } => (particular, basis),
    };
    let mut rows = Vec::new();
    for c in problem.constraints.iter().filter(|c| c.relation != Relation::Eq) {
        let coeffs: Vec<Rational> = basis.iter().map(|b| dot(&c.coeffs, b.coords())).collect();
        let rhs = c.rhs.clone() - dot(&c.coeffs, base.coords());
        rows.push(Row { coeffs, rhs, strict: c.relation == Relation::Lt });
    }
    Ok(Some(Reduced { base, basis, rows }))
}

/// Drops trivial rows (returning `None` if one is violated) and keeps only the
/// tightest row per coefficient vector.
fn clean(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut out: Vec<Row> = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.normalized();
        if row.is_trivial() {
            if !row.constant_ok() {
                return None;
            }
            continue;
        }
        if let Some(existing) = out.iter_mut().find(|r| r.coeffs == row.coeffs) {
            if row.rhs < existing.rhs || (row.rhs == existing.rhs && row.strict) {
                *existing = row;
            }
        } else {
            out.push(row);
        }
    }
    Some(out)
}

fn eliminate(rows: &[Row], var: usize, limits: &FeasibilityLimits) -> Result<Option<Vec<Row>>> {
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    let mut keep = Vec::new();
    for r in rows {
        match Scalar::sign(&r.coeffs[var]) {
            1 => upper.push(r),
            -1 => lower.push(r),
            _ => keep.push(r.clone()),
        }
    }
    let produced = keep.len() + upper.len() * lower.len();
    if produced > limits.max_rows {
        return Err(Error::ResourceLimit { what: "Fourier-Motzkin rows", found: produced, limit: limits.max_rows });
    }
    for u in &upper {
        for l in &lower {
            // u: a y + cu*v <= bu (cu > 0); l: a' y + cl*v <= bl (cl < 0)
            let cu = u.coeffs[var].clone();
            let cl = -l.coeffs[var].clone();
            let coeffs: Vec<Rational> =
                u.coeffs.iter().zip(&l.coeffs).map(|(a, b)| a.clone() * &cl + b.clone() * &cu).collect();
            let rhs = u.rhs.clone() * &cl + l.rhs.clone() * &cu;
            let mut row = Row { coeffs, rhs, strict: u.strict || l.strict };
            row.coeffs[var] = Rational::zero();
            keep.push(row);
        }
    }
    Ok(clean(keep))
}

/// `stages[s]` holds rows over variables `0..s` only.
fn project(rows: Vec<Row>, vars: usize, limits: &FeasibilityLimits) -> Result<Option<Vec<Vec<Row>>>> {
    let Some(top) = clean(rows) else { return Ok(None) };
    let mut stages = vec![Vec::new(); vars + 1];
    stages[vars] = top;
    for s in (1..=vars).rev() {
        match eliminate(&stages[s], s - 1, limits)? {
            Some(next) => stages[s - 1] = next,
            None => return Ok(None),
        }
    }
    if stages[0].iter().all(Row::constant_ok) {
        Ok(Some(stages))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Debug)]
struct Bound {
    value: Rational,
    strict: bool,
}

fn bounds_for(rows: &[Row], var: usize, fixed: &[Rational]) -> (Option<Bound>, Option<Bound>) {
    let mut lo: Option<Bound> = None;
    let mut hi: Option<Bound> = None;
    for r in rows {
        let c = &r.coeffs[var];
        if Scalar::is_zero(c) {
            continue;
        }
        let rest = r.coeffs[..var].iter().zip(fixed).fold(Rational::zero(), |acc, (a, y)| acc + a.clone() * y);
        let value = (r.rhs.clone() - rest) / c;
        let b = Bound { value, strict: r.strict };
        if Scalar::is_positive(c) {
            let tighter = match &hi {
                None => true,
                Some(h) => b.value < h.value || (b.value == h.value && b.strict),
            };
            if tighter {
                hi = Some(b);
            }
        } else {
            let tighter = match &lo {
                None => true,
                Some(l) => b.value > l.value || (b.value == l.value && b.strict),
            };
            if tighter {
                lo = Some(b);
            }
        }
    }
    (lo, hi)
}

fn admits(lo: &Option<Bound>, hi: &Option<Bound>, x: &Rational) -> bool {
    let above = match lo {
        None => true,
        Some(b) => {
            if b.strict {
                *x > b.value
            } else {
                *x >= b.value
            }
        }
    };
    let below = match hi {
        None => true,
        Some(b) => {
            if b.strict {
                *x < b.value
            } else {
                *x <= b.value
            }
        }
    };
    above && below
}

fn choose(lo: Option<Bound>, hi: Option<Bound>) -> Rational {
    let zero = Rational::zero();
    if admits(&lo, &hi, &zero) {
        return zero;
    }
    match (lo, hi) {
        (Some(l), Some(h)) => {
            if l.value == h.value {
                l.value
            } else {
                (l.value + h.value).half()
            }
        }
        (Some(l), None) => {
            if l.strict {
                l.value + Rational::one()
            } else {
                l.value
            }
        }
        (None, Some(h)) => {
            if h.strict {
                h.value - Rational::one()
            } else {
                h.value
            }
        }
        (None, None) => zero,
    }
}

fn back_substitute(stages: &[Vec<Row>], mut fixed: Vec<Rational>) -> Vec<Rational> {
    let vars = stages.len() - 1;
    for s in (fixed.len() + 1)..=vars {
        let (lo, hi) = bounds_for(&stages[s], s - 1, &fixed);
        fixed.push(choose(lo, hi));
    }
    fixed
}

fn lift(reduced: &Reduced, y: &[Rational]) -> Vector<Rational> {
    reduced.basis.iter().zip(y).fold(reduced.base.clone(), |acc, (b, c)| acc.add_scaled(c, b))
}

/// A witness point, or `None` when the system is empty.
pub fn find_witness(problem: &FeasibilityProblem) -> Result<Option<Vector<Rational>>> {
    let Some(reduced) = reduce(problem)? else { return Ok(None) };
    let vars = reduced.basis.len();
    let Some(stages) = project(reduced.rows.clone(), vars, &problem.limits)? else {
        return Ok(None);
    };
    let y = back_substitute(&stages, Vec::new());
    Ok(Some(lift(&reduced, &y)))
}

/// Exact feasibility decision, with a witness and the affine dimension of the
/// feasible set.
pub fn feasible(problem: &FeasibilityProblem) -> Result<Feasibility> {
    let Some(witness) = find_witness(problem)? else {
        return Ok(Feasibility::Empty);
    };
    let dimension = feasible_dimension(problem)?;
    Ok(Feasibility::Feasible { witness, dimension })
}

/// Affine dimension of a feasible set (implicit equalities detected by
/// strictifying each non-strict row in turn).
fn feasible_dimension(problem: &FeasibilityProblem) -> Result<usize> {
    let mut eq_rows: Vec<Vector<Rational>> = problem
        .constraints
        .iter()
        .filter(|c| c.relation == Relation::Eq)
        .map(|c| Vector::new(c.coeffs.clone()))
        .collect();
    for (i, c) in problem.constraints.iter().enumerate() {
        if c.relation != Relation::Le {
            continue;
        }
        let mut strict = problem.clone();
        strict.constraints[i].relation = Relation::Lt;
        if find_witness(&strict)?.is_none() {
            eq_rows.push(Vector::new(c.coeffs.clone()));
        }
    }
    Ok(problem.unknowns - rank(&eq_rows))
}

/// Maximizes `objective . x` over the feasible set.
pub fn maximize(problem: &FeasibilityProblem, objective: &[Rational]) -> Result<Optimum> {
    assert_eq!(objective.len(), problem.unknowns);
    let Some(reduced) = reduce(problem)? else { return Ok(Optimum::Infeasible) };
    let vars = reduced.basis.len();
    // Prepend t = objective . x as variable 0.
    let obj_y: Vec<Rational> = reduced.basis.iter().map(|b| dot(objective, b.coords())).collect();
    let obj_0 = dot(objective, reduced.base.coords());
    let mut rows: Vec<Row> = reduced
        .rows
        .iter()
        .map(|r| {
            let mut coeffs = vec![Rational::zero()];
            coeffs.extend(r.coeffs.iter().cloned());
            Row { coeffs, rhs: r.rhs.clone(), strict: r.strict }
        })
        .collect();
    // t - obj_y . y = obj_0, as two inequalities.
    let mut up = vec![Rational::one()];
    up.extend(obj_y.iter().map(|c| -c.clone()));
    let down: Vec<Rational> = up.iter().map(|c| -c.clone()).collect();
    rows.push(Row { coeffs: up, rhs: obj_0.clone(), strict: false });
    rows.push(Row { coeffs: down, rhs: -obj_0, strict: false });
    let Some(stages) = project(rows, vars + 1, &problem.limits)? else {
        return Ok(Optimum::Infeasible);
    };
    let (_, hi) = bounds_for(&stages[1], 0, &[]);
    let Some(hi) = hi else { return Ok(Optimum::Unbounded) };
    if hi.strict {
        return Ok(Optimum::Supremum(hi.value));
    }
    let full = back_substitute(&stages, vec![hi.value.clone()]);
    let point = lift(&reduced, &full[1..]);
    Ok(Optimum::Attained { value: hi.value, point })
}

/// `{x : inner} ⊆ {x : outer}`, decided row by row on `outer`.
pub fn contains(outer: &FeasibilityProblem, inner: &FeasibilityProblem) -> Result<bool> {
    assert_eq!(outer.unknowns, inner.unknowns);
    for c in &outer.constraints {
        let violations: Vec<(Relation, Vec<Rational>, Rational)> = match c.relation {
            // violate a.x <= b  by a.x > b
            Relation::Le => vec![(Relation::Lt, negate(&c.coeffs), -c.rhs.clone())],
            Relation::Lt => vec![(Relation::Le, negate(&c.coeffs), -c.rhs.clone())],
            Relation::Eq => {
                vec![(Relation::Lt, negate(&c.coeffs), -c.rhs.clone()), (Relation::Lt, c.coeffs.clone(), c.rhs.clone())]
            }
        };
        for (rel, coeffs, rhs) in violations {
            let mut probe = inner.clone();
            probe.push(coeffs, rel, rhs);
            if find_witness(&probe)?.is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Set equality by two-sided containment.
pub fn same_set(a: &FeasibilityProblem, b: &FeasibilityProblem) -> Result<bool> {
    Ok(contains(a, b)? && contains(b, a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn r(n: i64) -> Rational {
        rat(n, 1)
    }

    #[test]
    fn unit_interval_is_one_dimensional() {
        let mut p = FeasibilityProblem::new(1);
        p.ge(vec![r(1)], r(0));
        p.le(vec![r(1)], r(1));
        match feasible(&p).unwrap() {
            Feasibility::Feasible { witness, dimension } => {
                assert_eq!(witness, Vector::new(vec![r(0)]));
                assert_eq!(dimension, 1);
            }
            Feasibility::Empty => panic!("should be feasible"),
        }
    }

    #[test]
    fn opposite_strict_inequalities_are_empty() {
        let mut p = FeasibilityProblem::new(1);
        p.gt(vec![r(1)], r(0));
        p.lt(vec![r(1)], r(0));
        assert_eq!(feasible(&p).unwrap(), Feasibility::Empty);
    }

    #[test]
    fn strictness_is_exact() {
        // x <= 0, x >= 0 is a point; making one strict empties it.
        let mut p = FeasibilityProblem::new(1);
        p.le(vec![r(1)], r(0));
        p.ge(vec![r(1)], r(0));
        assert_eq!(feasible(&p).unwrap(), Feasibility::Feasible { witness: Vector::new(vec![r(0)]), dimension: 0 });
        let mut q = FeasibilityProblem::new(1);
        q.lt(vec![r(1)], r(0));
        q.ge(vec![r(1)], r(0));
        assert_eq!(feasible(&q).unwrap(), Feasibility::Empty);
    }

    #[test]
    fn equalities_reduce_dimension() {
        // x + y + z = 1, x, y, z > 0: open triangle, dimension 2.
        let mut p = FeasibilityProblem::new(3);
        p.eq(vec![r(1), r(1), r(1)], r(1));
        for i in 0..3 {
            let mut e = vec![r(0); 3];
            e[i] = r(1);
            p.gt(e, r(0));
        }
        let f = feasible(&p).unwrap();
        let Feasibility::Feasible { witness, dimension } = f else { panic!() };
        assert_eq!(dimension, 2);
        assert!(p.satisfied_by(&witness));
    }

    #[test]
    fn implicit_equalities_found() {
        // x <= y, y <= x, 0 <= x <= 2: a segment.
        let mut p = FeasibilityProblem::new(2);
        p.le(vec![r(1), r(-1)], r(0));
        p.le(vec![r(-1), r(1)], r(0));
        p.ge(vec![r(1), r(0)], r(0));
        p.le(vec![r(1), r(0)], r(2));
        let Feasibility::Feasible { dimension, .. } = feasible(&p).unwrap() else { panic!() };
        assert_eq!(dimension, 1);
    }

    #[test]
    fn maximize_simple_lp() {
        // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0  -> (8/5, 6/5), 14/5
        let mut p = FeasibilityProblem::new(2);
        p.le(vec![r(1), r(2)], r(4));
        p.le(vec![r(3), r(1)], r(6));
        p.ge(vec![r(1), r(0)], r(0));
        p.ge(vec![r(0), r(1)], r(0));
        match maximize(&p, &[r(1), r(1)]).unwrap() {
            Optimum::Attained { value, point } => {
                assert_eq!(value, rat(14, 5));
                assert_eq!(point, Vector::new(vec![rat(8, 5), rat(6, 5)]));
            }
            other => panic!("{other:?}"),
        }
        let mut open = FeasibilityProblem::new(1);
        open.lt(vec![r(1)], r(3));
        assert_eq!(maximize(&open, &[r(1)]).unwrap(), Optimum::Supremum(r(3)));
        let mut ray = FeasibilityProblem::new(1);
        ray.ge(vec![r(1)], r(3));
        assert_eq!(maximize(&ray, &[r(1)]).unwrap(), Optimum::Unbounded);
    }

    #[test]
    fn containment() {
        let mut big = FeasibilityProblem::new(1);
        big.ge(vec![r(1)], r(0));
        big.le(vec![r(1)], r(3));
        let mut small = FeasibilityProblem::new(1);
        small.gt(vec![r(1)], r(1));
        small.lt(vec![r(1)], r(2));
        assert!(contains(&big, &small).unwrap());
        assert!(!contains(&small, &big).unwrap());
        assert!(same_set(&big, &big.clone()).unwrap());
    }

    #[test]
    fn unknown_cap_is_enforced() {
        let p = FeasibilityProblem::new(100);
        assert!(matches!(find_witness(&p), Err(Error::ResourceLimit { .. })));
    }
}
