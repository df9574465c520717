//! Points, vectors and hyperplanes in `R^d` with a runtime dimension.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A coordinate tuple. Points and vectors share this type; the origin is the
/// distinguished point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector<F>(Vec<F>);

/// Points are vectors from the origin.
pub type Point<F> = Vector<F>;

impl<F: Scalar> Vector<F> {
    pub fn new(coords: Vec<F>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![F::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = F::one();
        v
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[F] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<F> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, F> {
        self.0.iter()
    }

    pub fn dot(&self, other: &Self) -> F {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b)
    }

    pub fn scale(&self, s: &F) -> Self {
        Vector(self.0.iter().map(|c| c.clone() * s).collect())
    }

    pub fn div_scalar(&self, s: &F) -> Self {
        Vector(self.0.iter().map(|c| c.clone() / s).collect())
    }

    /// `self + s * other`
    pub fn add_scaled(&self, s: &F, other: &Self) -> Self {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() + s.clone() * b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Coordinate-wise equality with the mode's tolerance.
    pub fn tol_eq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a.tol_eq(b))
    }

    pub fn near(&self, other: &Self, rel: f64) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a.near(b, rel))
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        (self + other).div_scalar(&F::from_i64(2))
    }

    /// Affine average of a nonempty list of points.
    pub fn centroid<'a, I>(points: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        F: 'a,
    {
        let mut iter = points.into_iter();
        let first = iter.next().expect("centroid of an empty set").clone();
        let (sum, n) = iter.fold((first, 1i64), |(s, n), p| (&s + p, n + 1));
        sum.div_scalar(&F::from_i64(n))
    }

    pub fn to_f64(&self) -> Vector<f64> {
        Vector(self.0.iter().map(Scalar::to_f64).collect())
    }

    pub fn norm_sq(&self) -> F {
        self.dot(self)
    }

    /// Sum of absolute coordinates.
    pub fn l1(&self) -> F {
        self.0.iter().fold(F::zero(), |acc, c| acc + c.abs())
    }

    /// Largest absolute coordinate.
    pub fn linf(&self) -> F {
        self.0.iter().fold(F::zero(), |acc, c| F::max_of(acc, c.abs()))
    }

    pub fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found: self.dim() })
        }
    }

    /// Quarter turn `(x, y) -> (-y, x)`; planar vectors only.
    pub fn rotate_quarter(&self) -> Self {
        debug_assert_eq!(self.dim(), 2);
        Vector(vec![-self.0[1].clone(), self.0[0].clone()])
    }

    /// Lexicographic comparison using raw ordering.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.partial_cmp(b) {
                Some(std::cmp::Ordering::Equal) | None => continue,
                Some(o) => return o,
            }
        }
        self.dim().cmp(&other.dim())
    }
}

impl<F: Scalar> Index<usize> for Vector<F> {
    type Output = F;
    fn index(&self, i: usize) -> &F {
        &self.0[i]
    }
}

impl<F: Scalar> Add for &Vector<F> {
    type Output = Vector<F>;
    fn add(self, rhs: &Vector<F>) -> Vector<F> {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a.clone() + b).collect())
    }
}

impl<F: Scalar> Sub for &Vector<F> {
    type Output = Vector<F>;
    fn sub(self, rhs: &Vector<F>) -> Vector<F> {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a.clone() - b).collect())
    }
}

impl<F: Scalar> Add for Vector<F> {
    type Output = Vector<F>;
    fn add(self, rhs: Vector<F>) -> Vector<F> {
        &self + &rhs
    }
}

impl<F: Scalar> Sub for Vector<F> {
    type Output = Vector<F>;
    fn sub(self, rhs: Vector<F>) -> Vector<F> {
        &self - &rhs
    }
}

impl<F: Scalar> Neg for &Vector<F> {
    type Output = Vector<F>;
    fn neg(self) -> Vector<F> {
        Vector(self.0.iter().map(|c| -c.clone()).collect())
    }
}

impl<F: Scalar> Neg for Vector<F> {
    type Output = Vector<F>;
    fn neg(self) -> Vector<F> {
        -&self
    }
}

impl<F: fmt::Display> fmt::Display for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl<F: fmt::Display> fmt::Debug for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The hyperplane `{x : <normal, x> = offset}`.
///
/// Equality is set equality: `(a, b)` and `(λa, λb)` describe the same
/// hyperplane for every `λ != 0`. Use [`Hyperplane::same_orientation`] when the
/// sign of the normal matters.
#[derive(Clone, Debug)]
pub struct Hyperplane<F: Scalar> {
    pub normal: Vector<F>,
    pub offset: F,
}

impl<F: Scalar> Hyperplane<F> {
    pub fn new(normal: Vector<F>, offset: F) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// `<normal, p> - offset`
    pub fn eval(&self, p: &Vector<F>) -> F {
        self.normal.dot(p) - &self.offset
    }

    pub fn contains(&self, p: &Vector<F>) -> bool {
        let scale = F::max_of(self.normal.dot(p).abs(), self.offset.abs());
        let v = self.eval(p);
        if F::is_exact() {
            v.is_zero()
        } else {
            v.abs().to_f64() <= crate::scalar::EPS_REL * scale.to_f64().max(1.0)
        }
    }

    pub fn flipped(&self) -> Self {
        Hyperplane { normal: -&self.normal, offset: -self.offset.clone() }
    }

    /// Scaled so that the first nonzero normal coordinate is one.
    pub fn canonical(&self) -> Self {
        let lead = self.normal.iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(F::one);
        Hyperplane { normal: self.normal.div_scalar(&lead), offset: self.offset.clone() / &lead }
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        let a = self.canonical();
        let b = other.canonical();
        a.normal.tol_eq(&b.normal)
    }

    /// Same hyperplane with normals pointing the same way.
    pub fn same_orientation(&self, other: &Self) -> bool {
        self == other && {
            let lead_a = self.normal.iter().find(|c| !c.is_zero());
            let idx = self.normal.iter().position(|c| !c.is_zero()).unwrap_or(0);
            lead_a.map(|a| a.sign() == other.normal[idx].sign()).unwrap_or(true)
        }
    }

    /// Set equality with a caller-chosen relative tolerance (float mode).
    pub fn near(&self, other: &Self, rel: f64) -> bool {
        let a = self.canonical();
        let b = other.canonical();
        a.normal.near(&b.normal, rel) && a.offset.near(&b.offset, rel)
    }
}

impl<F: Scalar> PartialEq for Hyperplane<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let a = self.canonical();
        let b = other.canonical();
        a.normal.tol_eq(&b.normal) && a.offset.tol_eq(&b.offset)
    }
}

impl<F: Scalar> fmt::Display for Hyperplane<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, x> = {}", self.normal, self.offset)
    }
}
