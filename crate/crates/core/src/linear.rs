//! Small dense linear algebra: determinants, rank, linear solves and affine
//! hulls. Exact in rational mode; partial pivoting with tolerances in float
//! mode.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, EPS_REL};
use crate::vector::{Hyperplane, Point, Vector};

/// Equality system `rows[i] . x = rhs[i]` in `unknowns` variables.
#[derive(Clone, Debug)]
pub struct LinearSystem<F: Scalar> {
    pub unknowns: usize,
    pub rows: Vec<Vec<F>>,
    pub rhs: Vec<F>,
}

impl<F: Scalar> LinearSystem<F> {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem { unknowns, rows: Vec::new(), rhs: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<F>, rhs: F) -> Result<()> {
        if row.len() != self.unknowns {
            return Err(Error::DimensionMismatch { expected: self.unknowns, found: row.len() });
        }
        self.rows.push(row);
        self.rhs.push(rhs);
        Ok(())
    }

    pub fn with_row(mut self, row: Vec<F>, rhs: F) -> Result<Self> {
        self.push(row, rhs)?;
        Ok(self)
    }

    /// `row . x - rhs` for each row.
    pub fn residuals(&self, x: &[F]) -> Vec<F> {
        self.rows.iter().zip(&self.rhs).map(|(row, b)| dot(row, x) - b).collect()
    }
}

/// Result of [`solve_linear`].
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<F: Scalar> {
    Unique(Vector<F>),
    /// `particular + span(basis)`; the basis is linearly independent.
    Affine {
        particular: Vector<F>,
        basis: Vec<Vector<F>>,
    },
    Infeasible,
}

impl<F: Scalar> Solution<F> {
    /// Dimension of the solution set, `None` when infeasible.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            Solution::Unique(_) => Some(0),
            Solution::Affine { basis, .. } => Some(basis.len()),
            Solution::Infeasible => None,
        }
    }

    pub fn point(&self) -> Option<&Vector<F>> {
        match self {
            Solution::Unique(p) => Some(p),
            Solution::Affine { particular, .. } => Some(particular),
            Solution::Infeasible => None,
        }
    }
}

pub(crate) fn dot<F: Scalar>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (x, y)| acc + x.clone() * y)
}

fn row_scale<F: Scalar>(row: &[F]) -> f64 {
    row.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
}

/// Reduced row echelon form in place over the first `cols` columns. Returns
/// the pivot column of each pivot row.
fn rref<F: Scalar>(m: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    let scale: f64 = m.iter().map(|row| row_scale(row)).fold(0.0, f64::max).max(1.0);
    for c in 0..cols {
        if r >= m.len() {
            break;
        }
        let pick = if F::is_exact() {
            (r..m.len()).find(|&i| !m[i][c].is_zero())
        } else {
            (r..m.len())
                .filter(|&i| m[i][c].to_f64().abs() > EPS_REL * scale)
                .max_by(|&i, &j| m[i][c].to_f64().abs().partial_cmp(&m[j][c].to_f64().abs()).unwrap())
        };
        let Some(p) = pick else { continue };
        m.swap(r, p);
        let inv = F::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = x.clone() * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (pivot_row, row) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                    *x = x.clone() - f.clone() * p;
                }
                row[c] = F::zero();
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves an equality system by Gauss-Jordan elimination.
pub fn solve_linear<F: Scalar>(system: &LinearSystem<F>) -> Solution<F> {
    let n = system.unknowns;
    let mut m: Vec<Vec<F>> = system
        .rows
        .iter()
        .zip(&system.rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, n);
    let rank = pivots.len();
    let rhs_scale = system.rhs.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max).max(1.0);
    for row in m.iter().skip(rank) {
        let inconsistent =
            if F::is_exact() { !row[n].is_zero() } else { row[n].to_f64().abs() > EPS_REL * rhs_scale * 10.0 };
        if inconsistent {
            return Solution::Infeasible;
        }
    }
    let mut particular = vec![F::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = m[r][n].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return Solution::Unique(Vector::new(particular));
    }
    let basis = free
        .iter()
        .map(|&fc| {
            let mut v = vec![F::zero(); n];
            v[fc] = F::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][fc].clone();
            }
            Vector::new(v)
        })
        .collect();
    Solution::Affine { particular: Vector::new(particular), basis }
}

/// Determinant of a square matrix.
pub fn determinant<F: Scalar>(matrix: &[Vec<F>]) -> F {
    let n = matrix.len();
    let mut m: Vec<Vec<F>> = matrix.to_vec();
    let mut det = F::one();
    for c in 0..n {
        let pick = if F::is_exact() {
            (c..n).find(|&i| !m[i][c].is_zero())
        } else {
            (c..n)
                .filter(|&i| m[i][c].to_f64() != 0.0)
                .max_by(|&i, &j| m[i][c].to_f64().abs().partial_cmp(&m[j][c].to_f64().abs()).unwrap())
        };
        let Some(p) = pick else { return F::zero() };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det = det * &pivot;
        for i in (c + 1)..n {
            if m[i][c].is_zero() && F::is_exact() {
                continue;
            }
            let f = m[i][c].clone() / &pivot;
            let (top, bottom) = m.split_at_mut(i);
            for (x, p) in bottom[0].iter_mut().zip(top[c].iter()).skip(c) {
                *x = x.clone() - f.clone() * p;
            }
        }
    }
    det
}

/// Rank of a list of row vectors.
pub fn rank<F: Scalar>(rows: &[Vector<F>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].dim();
    let mut m: Vec<Vec<F>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    rref(&mut m, cols).len()
}

/// Dimension of the affine hull of a nonempty point set.
pub fn affine_dimension<F: Scalar>(points: &[Point<F>]) -> usize {
    let Some(first) = points.first() else { return 0 };
    let diffs: Vec<Vector<F>> = points[1..].iter().map(|p| p - first).collect();
    rank(&diffs)
}

/// `true` iff the `d + 1` points are affinely independent in `R^d`.
///
/// Exact mode tests the homogenized determinant against zero; float mode
/// requires it to exceed `EPS_REL` times the Hadamard bound of the rows.
pub fn general_position<F: Scalar>(points: &[Point<F>]) -> Result<bool> {
    let d = points.first().map(|p| p.dim()).unwrap_or(0);
    if points.len() != d + 1 {
        return Err(Error::WrongCount { expected: d + 1, found: points.len() });
    }
    for p in points {
        p.check_dim(d)?;
    }
    let rows: Vec<Vec<F>> = points
        .iter()
        .map(|p| {
            let mut r = p.coords().to_vec();
            r.push(F::one());
            r
        })
        .collect();
    let det = determinant(&rows);
    if F::is_exact() {
        Ok(!det.is_zero())
    } else {
        let bound: f64 = rows.iter().map(|r| r.iter().map(|c| c.to_f64().powi(2)).sum::<f64>().sqrt()).product();
        Ok(det.to_f64().abs() > EPS_REL * bound)
    }
}

/// Hyperplane through `d` affinely independent points of `R^d`, with the
/// normal obtained by cofactor expansion of the edge matrix.
pub fn hyperplane_through<F: Scalar>(points: &[Point<F>]) -> Result<Hyperplane<F>> {
    let d = points.first().map(|p| p.dim()).unwrap_or(0);
    if points.len() != d || d == 0 {
        return Err(Error::WrongCount { expected: d, found: points.len() });
    }
    let base = &points[0];
    let edges: Vec<Vector<F>> = points[1..].iter().map(|p| p - base).collect();
    let normal = cofactor_normal(&edges, d);
    let normal = match normal {
        Some(n) => n,
        None => return Err(Error::Degenerate("points do not span a hyperplane".into())),
    };
    let offset = normal.dot(base);
    Hyperplane::new(normal, offset)
}

/// Normal to the span of `d - 1` vectors in `R^d` (generalized cross product).
pub fn cofactor_normal<F: Scalar>(edges: &[Vector<F>], d: usize) -> Option<Vector<F>> {
    debug_assert_eq!(edges.len() + 1, d);
    let coords: Vec<F> = (0..d)
        .map(|skip| {
            let minor: Vec<Vec<F>> = edges
                .iter()
                .map(|e| e.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, c)| c.clone()).collect())
                .collect();
            let det = if minor.is_empty() { F::one() } else { determinant(&minor) };
            if skip % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect();
    let n = Vector::new(coords);
    if F::is_exact() {
        (!n.is_zero()).then_some(n)
    } else {
        let scale: f64 = edges.iter().map(|e| e.to_f64().norm_sq().sqrt()).product::<f64>().max(f64::MIN_POSITIVE);
        (n.to_f64().norm_sq().sqrt() > EPS_REL * scale).then_some(n)
    }
}

/// Affinely independent basis of `span(vectors) ∩ normal^⊥`, each vector
/// projected along `normal` with the Euclidean inner product.
pub fn orthogonal_complement_in<F: Scalar>(vectors: &[Vector<F>], normal: &Vector<F>) -> Vec<Vector<F>> {
    let nn = normal.norm_sq();
    let mut out: Vec<Vector<F>> = Vec::new();
    for v in vectors {
        let p = v.add_scaled(&(-(v.dot(normal) / &nn)), normal);
        let mut trial = out.clone();
        trial.push(p.clone());
        if rank(&trial) == trial.len() {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn r(n: i64) -> Rational {
        rat(n, 1)
    }

    #[test]
    fn unique_two_by_two() {
        let sys =
            LinearSystem::new(2).with_row(vec![r(1), r(1)], r(2)).unwrap().with_row(vec![r(1), r(-1)], r(0)).unwrap();
        assert_eq!(solve_linear(&sys), Solution::Unique(Vector::from_i64s(&[1, 1])));
    }

    #[test]
    fn underdetermined_line() {
        let sys = LinearSystem::new(2).with_row(vec![r(1), r(1)], r(1)).unwrap();
        match solve_linear(&sys) {
            Solution::Affine { particular, basis } => {
                assert_eq!(particular, Vector::from_i64s(&[1, 0]));
                assert_eq!(basis, vec![Vector::from_i64s(&[-1, 1])]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn contradiction_is_infeasible() {
        let sys = LinearSystem::new(1).with_row(vec![r(1)], r(0)).unwrap().with_row(vec![r(1)], r(1)).unwrap();
        assert_eq!(solve_linear(&sys), Solution::Infeasible);
    }

    #[test]
    fn row_length_checked() {
        assert!(LinearSystem::<Rational>::new(2).with_row(vec![r(1)], r(0)).is_err());
    }

    #[test]
    fn general_position_examples() {
        let tri = [Vector::from_i64s(&[0, 0]), Vector::from_i64s(&[1, 0]), Vector::from_i64s(&[0, 1])];
        assert!(general_position::<Rational>(&tri).unwrap());
        let line = [Vector::from_i64s(&[0, 0]), Vector::from_i64s(&[1, 1]), Vector::from_i64s(&[2, 2])];
        assert!(!general_position::<Rational>(&line).unwrap());
        let tet = [
            Vector::from_i64s(&[1, 0, 0]),
            Vector::from_i64s(&[0, 1, 0]),
            Vector::from_i64s(&[0, 0, 1]),
            Vector::from_i64s(&[0, 0, 0]),
        ];
        assert!(general_position::<Rational>(&tet).unwrap());
        assert!(general_position::<Rational>(&tet[..3]).is_err());
    }

    #[test]
    fn float_general_position_uses_relative_tolerance() {
        let nearly = [Vector::new(vec![0.0, 0.0]), Vector::new(vec![1.0, 1.0]), Vector::new(vec![2.0, 2.0 + 1e-14])];
        assert!(!general_position::<f64>(&nearly).unwrap());
        let ok = [Vector::new(vec![0.0, 0.0]), Vector::new(vec![1.0, 0.0]), Vector::new(vec![0.0, 1.0])];
        assert!(general_position::<f64>(&ok).unwrap());
    }

    #[test]
    fn determinant_matches_expansion() {
        let m = vec![vec![r(2), r(-1), r(0)], vec![r(1), r(3), r(4)], vec![r(0), r(5), r(-2)]];
        // 2(3*-2 - 4*5) - (-1)(1*-2 - 0) + 0 = -52 - 2
        assert_eq!(determinant(&m), r(-54));
    }

    #[test]
    fn hyperplane_through_points() {
        let h = hyperplane_through::<Rational>(&[Vector::from_i64s(&[2, 0]), Vector::from_i64s(&[0, 2])]).unwrap();
        assert_eq!(h, Hyperplane::new(Vector::from_i64s(&[1, 1]), r(2)).unwrap());
        let plane = hyperplane_through::<Rational>(&[
            Vector::from_i64s(&[1, 0, 0]),
            Vector::from_i64s(&[0, 1, 0]),
            Vector::from_i64s(&[0, 0, 1]),
        ])
        .unwrap();
        assert_eq!(plane, Hyperplane::new(Vector::from_i64s(&[1, 1, 1]), r(1)).unwrap());
        assert!(hyperplane_through::<Rational>(&[Vector::from_i64s(&[1, 1]), Vector::from_i64s(&[1, 1])]).is_err());
    }
}
