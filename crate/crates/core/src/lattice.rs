//! The Néron–Severi lattice of a surface as a free `Z`-module with an integral
//! intersection form.
//!
//! Only the image of `c1: Pic(X) -> H^2(X, Q)` is modelled, so the lattice is
//! free and torsion never appears. Divisibility questions (`r·δ = v`) therefore
//! have at most one answer.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{from_int, rational_sign, to_integer, Rational};

/// Anything that can be read as a coordinate vector in the lattice basis.
pub trait LatticeVector {
    fn dim(&self) -> usize;
    fn coord(&self, i: usize) -> Rational;
}

/// An integral lattice element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NSVector(pub Vec<BigInt>);

/// A lattice element with rational coordinates, i.e. an element of `NS(X) ⊗ Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QNSVector(pub Vec<Rational>);

impl NSVector {
    pub fn zero(rank: usize) -> Self {
        NSVector(vec![BigInt::zero(); rank])
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        NSVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        NSVector(self.0.iter().map(|c| c * k).collect())
    }

    pub fn to_q(&self) -> QNSVector {
        QNSVector(self.0.iter().map(from_int).collect())
    }
}

impl QNSVector {
    pub fn zero(rank: usize) -> Self {
        QNSVector(vec![Rational::zero(); rank])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QNSVector(self.0.iter().map(|c| c * k).collect())
    }

    /// The integral vector with these coordinates, if every coordinate is an integer.
    pub fn to_integral(&self) -> Option<NSVector> {
        self.0.iter().map(to_integer).collect::<Option<Vec<_>>>().map(NSVector)
    }
}

impl From<&NSVector> for QNSVector {
    fn from(v: &NSVector) -> Self {
        v.to_q()
    }
}

impl From<NSVector> for QNSVector {
    fn from(v: NSVector) -> Self {
        v.to_q()
    }
}

impl LatticeVector for NSVector {
    fn dim(&self) -> usize {
        self.0.len()
    }
    fn coord(&self, i: usize) -> Rational {
        from_int(&self.0[i])
    }
}

impl LatticeVector for QNSVector {
    fn dim(&self) -> usize {
        self.0.len()
    }
    fn coord(&self, i: usize) -> Rational {
        self.0[i].clone()
    }
}

macro_rules! vector_ops {
    ($ty:ident) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                assert_eq!(self.0.len(), rhs.0.len(), "lattice vector length mismatch");
                $ty(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }
        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                assert_eq!(self.0.len(), rhs.0.len(), "lattice vector length mismatch");
                $ty(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty(self.0.iter().map(|a| -a).collect())
            }
        }
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}

vector_ops!(NSVector);
vector_ops!(QNSVector);

impl fmt::Display for NSVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Free Néron–Severi lattice with a validated hyperbolic intersection form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NSLattice {
    gram: Vec<Vec<BigInt>>,
    labels: Option<Vec<String>>,
}

impl NSLattice {
    /// Builds a lattice, checking symmetry, nondegeneracy and signature `(1, ρ-1)`.
    pub fn new(gram: Vec<Vec<BigInt>>, labels: Option<Vec<String>>) -> Result<Self> {
        let rank = gram.len();
        if rank == 0 {
            return Err(Error::validation("rank", "the lattice must have positive rank"));
        }
        if let Some(row) = gram.iter().position(|row| row.len() != rank) {
            return Err(Error::validation(
                "square",
                format!("row {row} has length {} but the rank is {rank}", gram[row].len()),
            ));
        }
        for i in 0..rank {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::validation(
                        "symmetric",
                        format!("gram[{i}][{j}] = {} differs from gram[{j}][{i}] = {}", gram[i][j], gram[j][i]),
                    ));
                }
            }
        }
        if let Some(labels) = &labels {
            if labels.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, found: labels.len() });
            }
        }
        let (pos, neg) = signature(&gram)?;
        if pos != 1 || neg != rank - 1 {
            return Err(Error::validation(
                "hodge-index signature",
                format!("signature is ({pos}, {neg}), expected (1, {})", rank - 1),
            ));
        }
        Ok(NSLattice { gram, labels })
    }

    pub fn from_i64s(gram: &[&[i64]]) -> Result<Self> {
        let gram = gram.iter().map(|row| row.iter().map(|&c| BigInt::from(c)).collect()).collect();
        NSLattice::new(gram, None)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<BigInt>] {
        &self.gram
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn signature(&self) -> (usize, usize) {
        (1, self.rank() - 1)
    }

    pub fn check_dim<V: LatticeVector + ?Sized>(&self, v: &V) -> Result<()> {
        if v.dim() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rank(), found: v.dim() })
        }
    }

    /// The intersection number `vᵀ · gram · w`.
    pub fn pair<V, W>(&self, v: &V, w: &W) -> Result<Rational>
    where
        V: LatticeVector + ?Sized,
        W: LatticeVector + ?Sized,
    {
        self.check_dim(v)?;
        self.check_dim(w)?;
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            let vi = v.coord(i);
            if vi.is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for j in 0..n {
                if !self.gram[i][j].is_zero() {
                    row += w.coord(j) * from_int(&self.gram[i][j]);
                }
            }
            acc += vi * row;
        }
        Ok(acc)
    }

    /// Integral pairing of integral vectors.
    pub fn pair_int(&self, v: &NSVector, w: &NSVector) -> Result<BigInt> {
        self.check_dim(v)?;
        self.check_dim(w)?;
        let mut acc = BigInt::zero();
        for (i, vi) in v.0.iter().enumerate() {
            for (j, wj) in w.0.iter().enumerate() {
                acc += vi * &self.gram[i][j] * wj;
            }
        }
        Ok(acc)
    }

    /// Solves `r·δ = v` for integral `δ`; `Ok(None)` when `v` is not divisible by `r`.
    pub fn divide(&self, v: &QNSVector, r: u32) -> Result<Option<NSVector>> {
        if r == 0 {
            return Err(Error::Input("divisor r must be at least 1".into()));
        }
        self.check_dim(v)?;
        let r = Rational::from_integer(BigInt::from(r));
        Ok(v.scale(&(Rational::one() / r)).to_integral())
    }
}

/// Exact inertia `(positive, negative)` of a symmetric integer matrix.
///
/// Symmetric Gaussian elimination over `Q`: pivot on the first nonzero diagonal
/// entry; when the whole diagonal vanishes but some `a_ij ≠ 0`, replace `e_i` by
/// `e_i + e_j`, which puts `2·a_ij` on the diagonal. Both steps are congruences,
/// so inertia is preserved. A zero block left over means the form is degenerate.
pub fn signature(gram: &[Vec<BigInt>]) -> Result<(usize, usize)> {
    let n = gram.len();
    if gram.iter().any(|row| row.len() != n) {
        return Err(Error::validation("square", "gram matrix is not square"));
    }
    for i in 0..n {
        for j in 0..i {
            if gram[i][j] != gram[j][i] {
                return Err(Error::validation("symmetric", format!("gram[{i}][{j}] != gram[{j}][{i}]")));
            }
        }
    }
    let mut a: Vec<Vec<Rational>> = gram.iter().map(|row| row.iter().map(from_int).collect()).collect();
    let (mut pos, mut neg) = (0, 0);
    while !a.is_empty() {
        let m = a.len();
        let pivot = match (0..m).find(|&k| !a[k][k].is_zero()) {
            Some(k) => k,
            None => {
                let off = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
                let Some((i, j)) = off else {
                    return Err(Error::validation(
                        "nondegenerate",
                        format!("intersection form has a {m}-dimensional radical"),
                    ));
                };
                // e_i <- e_i + e_j: add row j to row i, then column j to column i.
                for c in 0..m {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for rrow in a.iter_mut() {
                    let v = rrow[j].clone();
                    rrow[i] += v;
                }
                i
            }
        };
        let d = a[pivot][pivot].clone();
        match rational_sign(&d) {
            1 => pos += 1,
            _ => neg += 1,
        }
        let rest: Vec<usize> = (0..m).filter(|&k| k != pivot).collect();
        a = rest
            .iter()
            .map(|&i| rest.iter().map(|&j| &a[i][j] - &a[i][pivot] * &a[pivot][j] / &d).collect())
            .collect();
    }
    Ok((pos, neg))
}
