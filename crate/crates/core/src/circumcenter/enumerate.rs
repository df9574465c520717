use super::{Circumcenter, CircumcenterSet, Classification};
use crate::error::{Error, Result};
use crate::feasibility::{contains, feasible, find_witness, maximize, Feasibility, FeasibilityProblem, Optimum};
use crate::limits::Limits;
use crate::norm::{Norm, PolytopeBall};
use crate::scalar::{Rational, Scalar};
use crate::simplex::Simplex;
use crate::vector::{Hyperplane, Point, Vector};

/// The circumcenters obtained from one vertex-to-facet assignment: vertex
/// `i` lies on the translate of ball facet `assignment[i]`.
///
/// `problem` is a system in `(M_1, ..., M_d, r)`.
#[derive(Clone, Debug)]
pub struct CircumcenterPiece {
    pub assignment: Vec<usize>,
    pub problem: FeasibilityProblem,
    pub center: Point<Rational>,
    pub radius: Rational,
    /// Affine dimension of the piece.
    pub dimension: usize,
}

fn split(x: &Vector<Rational>) -> (Point<Rational>, Rational) {
    let d = x.dim() - 1;
    (Vector::new(x.coords()[..d].to_vec()), x[d].clone())
}

impl PartialEq for CircumcenterPiece {
    fn eq(&self, other: &Self) -> bool {
        self.assignment == other.assignment
            && self.problem.constraints == other.problem.constraints
            && self.center == other.center
            && self.radius == other.radius
            && self.dimension == other.dimension
    }
}

impl CircumcenterPiece {
    /// A member of the piece strictly inside every halfspace `<a, M> < b`.
    pub fn point_in_open(&self, halfspaces: &[Hyperplane<Rational>]) -> Result<Option<(Point<Rational>, Rational)>> {
        let mut p = self.problem.clone();
        for h in halfspaces {
            let mut row = h.normal.coords().to_vec();
            row.push(Rational::zero());
            p.lt(row, h.offset.clone());
        }
        Ok(find_witness(&p)?.map(|x| split(&x)))
    }

    /// The members minimizing and maximizing `<direction, M>`, when attained.
    pub fn extremes_along(&self, direction: &Vector<Rational>) -> Result<Vec<Circumcenter<Rational>>> {
        let mut out = Vec::new();
        for sign in [-1i64, 1] {
            let mut obj: Vec<Rational> =
                direction.iter().map(|c| c.clone() * <Rational as Scalar>::from_i64(sign)).collect();
            obj.push(Rational::zero());
            if let Optimum::Attained { point, .. } = maximize(&self.problem, &obj)? {
                let (center, radius) = split(&point);
                out.push(Circumcenter { center, radius });
            }
        }
        Ok(out)
    }

    pub fn contains(&self, m: &Point<Rational>, r: &Rational) -> bool {
        let mut x = m.coords().to_vec();
        x.push(r.clone());
        self.problem.satisfied_by(&Vector::new(x))
    }
}

fn push_vertex(p: &mut FeasibilityProblem, ball: &PolytopeBall, a: &Point<Rational>, facet: usize) {
    // <n, A - M> = r   and   <n_k, A - M> <= r for ridge neighbours k.
    let row = |n: &Vector<Rational>| -> Vec<Rational> {
        let mut r: Vec<Rational> = n.iter().map(|c| -c.clone()).collect();
        r.push(-Rational::one());
        r
    };
    let n = &ball.normals()[facet];
    p.eq(row(n), -n.dot(a));
    for &k in ball.adjacent_facets(facet) {
        let nk = &ball.normals()[k];
        p.le(row(nk), -nk.dot(a));
    }
}

struct Search<'a> {
    t: &'a Simplex<Rational>,
    ball: &'a PolytopeBall,
    limits: &'a Limits,
    nodes: usize,
    leaves: Vec<CircumcenterPiece>,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize, problem: &FeasibilityProblem, assignment: &mut Vec<usize>) -> Result<()> {
        let d = self.t.dim();
        for j in 0..self.ball.facet_count() {
            self.nodes += 1;
            if self.nodes > self.limits.max_assignment_nodes {
                return Err(Error::ResourceLimit {
                    what: "circumcenter assignments",
                    found: self.nodes,
                    limit: self.limits.max_assignment_nodes,
                });
            }
            let mut p = problem.clone();
            push_vertex(&mut p, self.ball, self.t.vertex(depth), j);
            assignment.push(j);
            if depth == d {
                if let Feasibility::Feasible { witness, dimension } = feasible(&p)? {
                    let (center, radius) = split(&witness);
                    self.leaves.push(CircumcenterPiece {
                        assignment: assignment.clone(),
                        problem: p,
                        center,
                        radius,
                        dimension,
                    });
                }
            } else if find_witness(&p)?.is_some() {
                self.descend(depth + 1, &p, assignment)?;
            }
            assignment.pop();
        }
        Ok(())
    }
}

/// Keeps the pieces not contained in another piece, in assignment order.
fn maximal_pieces(leaves: Vec<CircumcenterPiece>) -> Result<Vec<CircumcenterPiece>> {
    let mut kept: Vec<CircumcenterPiece> = Vec::new();
    for piece in leaves {
        let mut covered = false;
        for q in &kept {
            if q.contains(&piece.center, &piece.radius) && contains(&q.problem, &piece.problem)? {
                covered = true;
                break;
            }
        }
        if covered {
            continue;
        }
        let mut survivors = Vec::with_capacity(kept.len());
        for q in kept {
            let swallowed = piece.contains(&q.center, &q.radius) && contains(&piece.problem, &q.problem)?;
            if !swallowed {
                survivors.push(q);
            }
        }
        kept = survivors;
        kept.push(piece);
    }
    Ok(kept)
}

pub(super) fn enumerate(
    t: &Simplex<Rational>,
    ball: &PolytopeBall,
    limits: &Limits,
) -> Result<CircumcenterSet<Rational>> {
    let d = t.dim();
    if ball.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: ball.dim() });
    }
    limits.check_dim(d)?;
    limits.check_facets(ball.facet_count())?;
    let mut root = FeasibilityProblem::new(d + 1);
    let mut r_row = vec![Rational::zero(); d + 1];
    r_row[d] = Rational::one();
    root.gt(r_row, Rational::zero());
    let mut search = Search { t, ball, limits, nodes: 0, leaves: Vec::new() };
    search.descend(0, &root, &mut Vec::with_capacity(d + 1))?;
    let pieces = maximal_pieces(search.leaves)?;
    let classification = match pieces.as_slice() {
        [] => Classification::Empty,
        [only] if only.dimension == 0 => Classification::Singleton,
        _ => Classification::Multiple,
    };
    let witnesses =
        pieces.iter().map(|p| Circumcenter { center: p.center.clone(), radius: p.radius.clone() }).collect();
    Ok(CircumcenterSet { witnesses, pieces, classification, failed_starts: 0 })
}

/// Exact cone test as a feasibility problem in `(y, μ)`:
/// `y = A + μ (M - A)`, `<a, y> = b`, `gauge(y - M) <= r`, `μ >= 0`.
pub(super) fn cone_member_exact(
    t: &Simplex<Rational>,
    ball: &PolytopeBall,
    i: usize,
    m: &Point<Rational>,
    r: &Rational,
) -> Result<bool> {
    let d = t.dim();
    let a = t.vertex(i);
    let f = t.facet(i);
    let dir = m - a;
    let mut p = FeasibilityProblem::new(d + 1);
    for k in 0..d {
        let mut row = vec![Rational::zero(); d + 1];
        row[k] = Rational::one();
        row[d] = -dir[k].clone();
        p.eq(row, a[k].clone());
    }
    let mut row = f.normal.coords().to_vec();
    row.push(Rational::zero());
    p.eq(row, f.offset.clone());
    for n in ball.normals() {
        let mut row = n.coords().to_vec();
        row.push(Rational::zero());
        p.le(row, r.clone() + n.dot(m));
    }
    let mut mu = vec![Rational::zero(); d + 1];
    mu[d] = Rational::one();
    p.ge(mu, Rational::zero());
    Ok(find_witness(&p)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circumcenter::{circumcenters, is_circumcenter};
    use crate::scalar::rat;

    fn v(c: &[i64]) -> Vector<Rational> {
        Vector::from_i64s(c)
    }

    #[test]
    fn max_norm_right_triangle() {
        // Max-norm circumcenters include the ray {(s, s) : s >= 1/2}, r = s.
        let t = Simplex::new(vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1])]).unwrap();
        let sq = PolytopeBall::square();
        let set = circumcenters(&t, &sq).unwrap();
        assert!(!set.is_empty());
        for w in &set.witnesses {
            assert!(is_circumcenter(&t, &sq, &w.center, &w.radius));
        }
        let half = Vector::new(vec![rat(1, 2), rat(1, 2)]);
        assert!(is_circumcenter(&t, &sq, &half, &rat(1, 2)));
        assert!(set.pieces.iter().any(|p| p.contains(&half, &rat(1, 2))));
        assert!(set.pieces.iter().any(|p| p.contains(&v(&[3, 3]), &rat(3, 1))));
        assert_eq!(set.classification, Classification::Multiple);
    }

    #[test]
    fn cube_fixture_has_a_segment() {
        let (t, cube) = crate::circumcenter::example_2_2_fixture();
        let set = circumcenters(&t, &cube).unwrap();
        assert_eq!(set.classification, Classification::Multiple);
        let cd = t.vertex(3) - t.vertex(2);
        let o = Vector::zeros(3);
        assert!(set.pieces.iter().any(|p| p.contains(&o, &rat(1, 1))));
        let ext: Vec<_> = set.pieces.iter().flat_map(|p| p.extremes_along(&cd).unwrap()).collect();
        assert!(ext.iter().any(|c| c.center != o));
    }
}
