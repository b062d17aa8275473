//! Existence criterion for generic Hitchin fibers and the regime split around
//! the threshold `c₂^{g.bun}`.
//!
//! For numerical data `(r, c₁, c₂)` the generic fiber is nonempty exactly when
//!
//! ```text
//! r·δ = c₁ + r(r-1)/2 · c₁(L)                                   (δ ∈ NS(X))
//! (r-1)c₁² - 2r·c₂ = r²(r²-1)/12 · c₁(L)² - 2r·#𝔇              (#𝔇 ≥ 0)
//! ```
//!
//! and `#𝔇 = c₂ - c₂^{g.bun}` with
//! `c₂^{g.bun} = (r-1)/(2r)·c₁² - r(r²-1)/24·c₁(L)²`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{from_int, q, to_integer, Rational};
use crate::lattice::NSVector;
use crate::surface::{HiggsNumerics, SurfaceGeometry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regime {
    /// `r·δ = c₁ + r(r-1)/2·c₁(L)` has no integral solution: generic fibers are empty.
    /// Emptiness of the whole moduli space is not decided in this case.
    NoDeltaSolution,
    /// `c₂ < c₂^{g.bun}`: the moduli space is empty.
    Empty,
    /// `c₂ = c₂^{g.bun}`: every semistable Higgs sheaf is locally free of HN type `(1, …, 1)`.
    Boundary,
    /// `c₂ > c₂^{g.bun}`: generic fibers are nonempty.
    Generic,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::NoDeltaSolution => "NoDeltaSolution",
            Regime::Empty => "Empty",
            Regime::Boundary => "Boundary",
            Regime::Generic => "Generic",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberWitness {
    pub delta: NSVector,
    pub n_points: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threshold {
    pub value: Rational,
    pub integral: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegimeReport {
    pub regime: Regime,
    pub c2_gbun: Threshold,
    pub witness: Option<FiberWitness>,
    /// At the boundary: `c₁(E_i) = δ - (i-1)·c₁(L)` of the rank-one graded pieces
    /// `E_i ≅ E_1 ⊗ L^{-(i-1)}`.
    pub boundary_graded_c1: Option<Vec<NSVector>>,
}

/// `r(r-1)/2 · c₁(L)`, always integral.
fn delta_shift(x: &SurfaceGeometry, r: u32) -> NSVector {
    let r = BigInt::from(r);
    x.polarization().scale(&(&r * (&r - 1) / 2))
}

/// Unique `δ` with `r·δ = c₁ + r(r-1)/2 · c₁(L)`, or `None`.
pub fn solve_delta(x: &SurfaceGeometry, h: &HiggsNumerics) -> Result<Option<NSVector>> {
    x.lattice().check_dim(&h.c1)?;
    let rhs = &h.c1 + &delta_shift(x, h.rank);
    x.lattice().divide(&rhs.to_q(), h.rank)
}

/// `c₂^{g.bun} = (r-1)/(2r)·c₁² - r(r²-1)/24·c₁(L)²` with its integrality flag.
pub fn c2_gbun(x: &SurfaceGeometry, h: &HiggsNumerics) -> Result<Threshold> {
    let r = q(h.rank as i64);
    let c1_sq = x.lattice().pair(&h.c1, &h.c1)?;
    let l_sq = from_int(&x.l_squared());
    let value = (&r - q(1)) / (q(2) * &r) * c1_sq - &r * (&r * &r - q(1)) / q(24) * l_sq;
    let integral = value.is_integer();
    Ok(Threshold { value, integral })
}

/// `#𝔇` solved from `(r-1)c₁² - 2r·c₂ = r²(r²-1)/12·c₁(L)² - 2r·#𝔇`.
pub fn n_points(x: &SurfaceGeometry, h: &HiggsNumerics) -> Result<Rational> {
    let r = q(h.rank as i64);
    let c1_sq = x.lattice().pair(&h.c1, &h.c1)?;
    let l_sq = from_int(&x.l_squared());
    let two_r = q(2) * &r;
    let lhs = (&r * &r) * (&r * &r - q(1)) / q(12) * l_sq - (&r - q(1)) * c1_sq + &two_r * from_int(&h.c2);
    Ok(lhs / two_r)
}

pub fn classify(x: &SurfaceGeometry, h: &HiggsNumerics) -> Result<RegimeReport> {
    let threshold = c2_gbun(x, h)?;
    let Some(delta) = solve_delta(x, h)? else {
        return Ok(RegimeReport {
            regime: Regime::NoDeltaSolution,
            c2_gbun: threshold,
            witness: None,
            boundary_graded_c1: None,
        });
    };
    let gap = from_int(&h.c2) - &threshold.value;
    if gap.is_negative() {
        return Ok(RegimeReport { regime: Regime::Empty, c2_gbun: threshold, witness: None, boundary_graded_c1: None });
    }
    let n = to_integer(&gap).ok_or_else(|| {
        Error::Precondition(format!(
            "δ solves the divisibility equation but c₂ - c₂^g.bun = {gap} is not an integer"
        ))
    })?;
    let boundary = gap == q(0);
    let graded = boundary.then(|| {
        (0..h.rank)
            .map(|i| &delta - &x.polarization().scale(&BigInt::from(i)))
            .collect::<Vec<_>>()
    });
    Ok(RegimeReport {
        regime: if boundary { Regime::Boundary } else { Regime::Generic },
        c2_gbun: threshold,
        witness: Some(FiberWitness { delta, n_points: n }),
        boundary_graded_c1: graded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    fn quintic() -> SurfaceGeometry {
        SurfaceGeometry::hypersurface(5).unwrap()
    }

    fn h(r: u32, c1: i64, c2: i64) -> HiggsNumerics {
        HiggsNumerics::new(r, NSVector::from_i64s(&[c1]), c2).unwrap()
    }

    #[test]
    fn solve_delta_examples() {
        let x = quintic();
        assert_eq!(solve_delta(&x, &h(2, 1, 0)).unwrap(), Some(NSVector::from_i64s(&[1])));
        assert_eq!(solve_delta(&x, &h(2, 0, 0)).unwrap(), None);
        assert_eq!(solve_delta(&x, &h(3, 0, 0)).unwrap(), Some(NSVector::from_i64s(&[1])));
        // rank 2 with c₁ = 5H as a class: 2δ = 5H + H
        assert_eq!(solve_delta(&x, &h(2, 5, 0)).unwrap(), Some(NSVector::from_i64s(&[3])));
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(c2_gbun(&quintic(), &h(2, 1, 0)).unwrap(), Threshold { value: q(0), integral: true });
        let k3 = SurfaceGeometry::hypersurface(4).unwrap();
        assert_eq!(c2_gbun(&k3, &h(2, 1, 0)).unwrap(), Threshold { value: q(0), integral: true });
        assert_eq!(c2_gbun(&quintic(), &h(2, 0, 0)).unwrap(), Threshold { value: frac(-5, 4), integral: false });
    }

    #[test]
    fn n_points_examples() {
        let x = quintic();
        assert_eq!(n_points(&x, &h(2, 1, 3)).unwrap(), q(3));
        assert_eq!(n_points(&x, &h(2, 1, 0)).unwrap(), q(0));
        assert_eq!(c2_gbun(&x, &h(3, 0, 0)).unwrap().value, q(-5));
        assert_eq!(n_points(&x, &h(3, 0, -5)).unwrap(), q(0));
    }

    #[test]
    fn classify_examples() {
        let x = quintic();
        assert_eq!(classify(&x, &h(2, 1, -1)).unwrap().regime, Regime::Empty);
        let b = classify(&x, &h(2, 1, 0)).unwrap();
        assert_eq!(b.regime, Regime::Boundary);
        assert_eq!(
            b.boundary_graded_c1,
            Some(vec![NSVector::from_i64s(&[1]), NSVector::from_i64s(&[0])])
        );
        let g = classify(&x, &h(2, 1, 3)).unwrap();
        assert_eq!(g.regime, Regime::Generic);
        assert_eq!(g.witness, Some(FiberWitness { delta: NSVector::from_i64s(&[1]), n_points: BigInt::from(3) }));
        let n = classify(&x, &h(2, 0, 100)).unwrap();
        assert_eq!(n.regime, Regime::NoDeltaSolution);
        assert!(n.witness.is_none());
    }

    #[test]
    fn rank_one_degenerates() {
        let x = SurfaceGeometry::p1_times_p1();
        let hn = HiggsNumerics::new(1, NSVector::from_i64s(&[3, -2]), 4).unwrap();
        assert_eq!(solve_delta(&x, &hn).unwrap(), Some(hn.c1.clone()));
        assert_eq!(c2_gbun(&x, &hn).unwrap().value, q(0));
        assert_eq!(n_points(&x, &hn).unwrap(), q(4));
    }
}
