//! Polarized surfaces and their degree-truncated rational Chow ring.
//!
//! A class is stored as `(deg0, deg1, deg2)` with `deg1 ∈ NS(X) ⊗ Q` and `deg2`
//! the multiple of the point class, so `∫_X` of a class is just its `deg2`.

use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{from_int, q, Rational};
use crate::lattice::{NSLattice, NSVector, QNSVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    pub deg0: Rational,
    pub deg1: QNSVector,
    pub deg2: Rational,
}

impl ChowClass {
    pub fn new(deg0: Rational, deg1: QNSVector, deg2: Rational) -> Self {
        ChowClass { deg0, deg1, deg2 }
    }

    pub fn zero(rank: usize) -> Self {
        ChowClass::new(Rational::zero(), QNSVector::zero(rank), Rational::zero())
    }

    pub fn one(rank: usize) -> Self {
        ChowClass::scalar(rank, Rational::one())
    }

    pub fn scalar(rank: usize, c: Rational) -> Self {
        ChowClass::new(c, QNSVector::zero(rank), Rational::zero())
    }

    pub fn divisor(d: impl Into<QNSVector>) -> Self {
        ChowClass::new(Rational::zero(), d.into(), Rational::zero())
    }

    pub fn point(rank: usize, degree: Rational) -> Self {
        ChowClass::new(Rational::zero(), QNSVector::zero(rank), degree)
    }

    pub fn rank(&self) -> usize {
        self.deg1.0.len()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        ChowClass::new(&self.deg0 * k, self.deg1.scale(k), &self.deg2 * k)
    }

    pub fn is_zero(&self) -> bool {
        self.deg0.is_zero() && self.deg1.is_zero() && self.deg2.is_zero()
    }
}

impl Add for &ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: &ChowClass) -> ChowClass {
        ChowClass::new(&self.deg0 + &rhs.deg0, &self.deg1 + &rhs.deg1, &self.deg2 + &rhs.deg2)
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: &ChowClass) -> ChowClass {
        ChowClass::new(&self.deg0 - &rhs.deg0, &self.deg1 - &rhs.deg1, &self.deg2 - &rhs.deg2)
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        ChowClass::new(-&self.deg0, -&self.deg1, -&self.deg2)
    }
}

impl Add for ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: ChowClass) -> ChowClass {
        &self + &rhs
    }
}

impl Sub for ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: ChowClass) -> ChowClass {
        &self - &rhs
    }
}

/// Rank, first and second Chern class of a (Higgs) sheaf on the base surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HiggsNumerics {
    pub rank: u32,
    pub c1: NSVector,
    pub c2: BigInt,
}

impl HiggsNumerics {
    pub fn new(rank: u32, c1: NSVector, c2: impl Into<BigInt>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Input("rank must be at least 1".into()));
        }
        Ok(HiggsNumerics { rank, c1, c2: c2.into() })
    }
}

/// Numerical data of a smooth polarized surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceGeometry {
    name: String,
    lattice: NSLattice,
    canonical: NSVector,
    polarization: NSVector,
    c2_top: BigInt,
    chi_o: BigInt,
}

impl SurfaceGeometry {
    /// Validates `L² > 0` and Noether integrality `K² + c₂ ≡ 0 (mod 12)`.
    pub fn new(
        name: impl Into<String>,
        lattice: NSLattice,
        canonical: NSVector,
        polarization: NSVector,
        c2_top: impl Into<BigInt>,
    ) -> Result<Self> {
        lattice.check_dim(&canonical)?;
        lattice.check_dim(&polarization)?;
        let c2_top = c2_top.into();
        let l2 = lattice.pair_int(&polarization, &polarization)?;
        if l2 <= BigInt::zero() {
            return Err(Error::validation("polarization positive", format!("L² = {l2} is not positive")));
        }
        let k2 = lattice.pair_int(&canonical, &canonical)?;
        let (chi_o, rem) = (&k2 + &c2_top).div_rem(&BigInt::from(12));
        if !rem.is_zero() {
            return Err(Error::validation(
                "noether integrality",
                format!("K² + c₂ = {} is not divisible by 12", &k2 + &c2_top),
            ));
        }
        Ok(SurfaceGeometry { name: name.into(), lattice, canonical, polarization, c2_top, chi_o })
    }

    /// `P²` with hyperplane class `H`, `K = -3H`, `L = H`.
    pub fn projective_plane() -> Self {
        let lattice = NSLattice::from_i64s(&[&[1]]).expect("valid lattice");
        SurfaceGeometry::new("p2", lattice, NSVector::from_i64s(&[-3]), NSVector::from_i64s(&[1]), 3)
            .expect("valid preset")
    }

    /// A smooth degree-`d` hypersurface in `P³` polarized by its hyperplane class.
    pub fn hypersurface(d: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::Input(format!("hypersurface degree must be at least 1, got {d}")));
        }
        let lattice = NSLattice::from_i64s(&[&[d]])?;
        let c2 = d * d * d - 4 * d * d + 6 * d;
        SurfaceGeometry::new(
            format!("hypersurface:{d}"),
            lattice,
            NSVector::from_i64s(&[d - 4]),
            NSVector::from_i64s(&[1]),
            c2,
        )
    }

    /// `P¹ × P¹` with the two rulings as basis, polarized by `O(1, 1)`.
    pub fn p1_times_p1() -> Self {
        let lattice = NSLattice::new(
            vec![vec![BigInt::zero(), BigInt::one()], vec![BigInt::one(), BigInt::zero()]],
            Some(vec!["f1".into(), "f2".into()]),
        )
        .expect("hyperbolic plane");
        SurfaceGeometry::new("p1xp1", lattice, NSVector::from_i64s(&[-2, -2]), NSVector::from_i64s(&[1, 1]), 4)
            .expect("valid preset")
    }

    /// Looks up `p2`, `p1xp1` or `hypersurface:d`.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "p2" => Ok(SurfaceGeometry::projective_plane()),
            "p1xp1" => Ok(SurfaceGeometry::p1_times_p1()),
            _ => {
                let Some(d) = name.strip_prefix("hypersurface:") else {
                    return Err(Error::Input(format!("unknown preset {name:?}")));
                };
                let d: i64 = d.parse().map_err(|_| Error::Input(format!("bad hypersurface degree in {name:?}")))?;
                SurfaceGeometry::hypersurface(d)
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lattice(&self) -> &NSLattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    /// `K`, the class of `ω_X`.
    pub fn canonical(&self) -> &NSVector {
        &self.canonical
    }

    /// `c₁(L)`.
    pub fn polarization(&self) -> &NSVector {
        &self.polarization
    }

    pub fn c2_top(&self) -> &BigInt {
        &self.c2_top
    }

    /// `χ(O_X) = (K² + c₂)/12`.
    pub fn chi_o(&self) -> &BigInt {
        &self.chi_o
    }

    /// `c₁(L)²`.
    pub fn l_squared(&self) -> BigInt {
        self.lattice.pair_int(&self.polarization, &self.polarization).expect("validated")
    }

    pub fn k_squared(&self) -> BigInt {
        self.lattice.pair_int(&self.canonical, &self.canonical).expect("validated")
    }

    pub fn k_dot_l(&self) -> BigInt {
        self.lattice.pair_int(&self.canonical, &self.polarization).expect("validated")
    }

    fn check_class(&self, a: &ChowClass) -> Result<()> {
        self.lattice.check_dim(&a.deg1)
    }

    /// Cup product truncated above degree 4.
    pub fn chow_mul(&self, a: &ChowClass, b: &ChowClass) -> Result<ChowClass> {
        self.check_class(a)?;
        self.check_class(b)?;
        let deg0 = &a.deg0 * &b.deg0;
        let deg1 = &a.deg1.scale(&b.deg0) + &b.deg1.scale(&a.deg0);
        let deg2 = &a.deg0 * &b.deg2 + &b.deg0 * &a.deg2 + self.lattice.pair(&a.deg1, &b.deg1)?;
        Ok(ChowClass::new(deg0, deg1, deg2))
    }

    /// Inverse in the truncated ring; exists iff `deg0 ≠ 0`.
    pub fn chow_inverse(&self, a: &ChowClass) -> Result<ChowClass> {
        self.check_class(a)?;
        if a.deg0.is_zero() {
            return Err(Error::Input("class with zero rank is not invertible".into()));
        }
        // a = c(1 + n) with n nilpotent, so a⁻¹ = c⁻¹(1 - n + n²).
        let c_inv = Rational::one() / &a.deg0;
        let n1 = a.deg1.scale(&c_inv);
        let n2 = &a.deg2 * &c_inv;
        let n1_sq = self.lattice.pair(&n1, &n1)?;
        Ok(ChowClass::new(Rational::one(), -&n1, n1_sq - n2).scale(&c_inv))
    }

    /// `ch(O(D)) = 1 + D + D²/2`.
    pub fn line_bundle_ch(&self, d: &QNSVector) -> Result<ChowClass> {
        let d2 = self.lattice.pair(d, d)?;
        Ok(ChowClass::new(Rational::one(), d.clone(), d2 / q(2)))
    }

    /// `Td(X) = 1 - K/2 + χ(O_X)·[pt]`.
    pub fn todd_surface(&self) -> ChowClass {
        ChowClass::new(Rational::one(), self.canonical.to_q().scale(&Rational::new((-1).into(), 2.into())), from_int(&self.chi_o))
    }

    /// Hirzebruch–Riemann–Roch: `∫_X ch · Td(X)`. May be non-integral for
    /// classes that are not Chern characters of sheaves.
    pub fn chi(&self, ch: &ChowClass) -> Result<Rational> {
        Ok(self.chow_mul(ch, &self.todd_surface())?.deg2)
    }

    /// `χ(F ⊗ L^n)` for a sheaf with Chern character `ch`.
    pub fn hilbert_polynomial(&self, ch: &ChowClass, n: i64) -> Result<Rational> {
        let twist = self.line_bundle_ch(&self.polarization.scale(&BigInt::from(n)).to_q())?;
        self.chi(&self.chow_mul(ch, &twist)?)
    }

    /// Coefficients `[a₀, a₁, a₂]` of the Hilbert polynomial `a₂n² + a₁n + a₀`:
    /// `a₂ = r·L²/2`, `a₁ = (ch₁ - (r/2)K)·L`, `a₀ = χ(ch)`.
    pub fn hilbert_coefficients(&self, ch: &ChowClass) -> Result<[Rational; 3]> {
        let l = self.polarization.to_q();
        let a2 = &ch.deg0 * from_int(&self.l_squared()) / q(2);
        let shifted = &ch.deg1 - &self.canonical.to_q().scale(&(&ch.deg0 / q(2)));
        let a1 = self.lattice.pair(&shifted, &l)?;
        Ok([self.chi(ch)?, a1, a2])
    }

    /// `Δ = 2r·c₂ - (r-1)·c₁²`.
    pub fn discriminant(&self, h: &HiggsNumerics) -> Result<BigInt> {
        let c1_sq = self.lattice.pair_int(&h.c1, &h.c1)?;
        let r = BigInt::from(h.rank);
        Ok(BigInt::from(2) * &r * &h.c2 - (r - 1) * c1_sq)
    }

    /// `ch(M ⊗ I_Z)` for a line bundle `M` and a length-`n` zero-dimensional `Z`.
    pub fn ideal_twist_ch(&self, m: &QNSVector, n: u64) -> Result<ChowClass> {
        let mut ch = self.line_bundle_ch(m)?;
        ch.deg2 -= Rational::from_integer(BigInt::from(n));
        Ok(ch)
    }

    /// The Chern character `(r, c₁, c₁²/2 - c₂)` of numerical data.
    pub fn chern_character(&self, h: &HiggsNumerics) -> Result<ChowClass> {
        let c1_sq = self.lattice.pair(&h.c1, &h.c1)?;
        Ok(ChowClass::new(q(h.rank as i64), h.c1.to_q(), c1_sq / q(2) - from_int(&h.c2)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    fn hv(x: i64) -> QNSVector {
        NSVector::from_i64s(&[x]).to_q()
    }

    fn quintic() -> SurfaceGeometry {
        SurfaceGeometry::hypersurface(5).unwrap()
    }

    #[test]
    fn preset_chi_values() {
        assert_eq!(SurfaceGeometry::projective_plane().chi_o(), &BigInt::from(1));
        assert_eq!(SurfaceGeometry::hypersurface(4).unwrap().chi_o(), &BigInt::from(2));
        assert_eq!(quintic().chi_o(), &BigInt::from(5));
        assert_eq!(SurfaceGeometry::hypersurface(1).unwrap().chi_o(), &BigInt::from(1));
        assert_eq!(SurfaceGeometry::p1_times_p1().chi_o(), &BigInt::from(1));
    }

    #[test]
    fn noether_and_polarization_are_enforced() {
        let lat = NSLattice::from_i64s(&[&[5]]).unwrap();
        let bad = SurfaceGeometry::new("x", lat.clone(), NSVector::from_i64s(&[1]), NSVector::from_i64s(&[1]), 54);
        assert!(matches!(bad, Err(Error::Validation { invariant: "noether integrality", .. })));
        let bad = SurfaceGeometry::new("x", lat, NSVector::from_i64s(&[1]), NSVector::from_i64s(&[0]), 55);
        assert!(matches!(bad, Err(Error::Validation { invariant: "polarization positive", .. })));
        assert!(SurfaceGeometry::preset("k3").is_err());
        assert!(SurfaceGeometry::preset("hypersurface:0").is_err());
    }

    #[test]
    fn chow_mul_examples() {
        let x = quintic();
        let a = ChowClass::new(q(1), hv(1), q(0));
        assert_eq!(x.chow_mul(&a, &a).unwrap(), ChowClass::new(q(1), hv(2), q(5)));
        let p = ChowClass::point(1, q(3));
        assert!(x.chow_mul(&p, &ChowClass::divisor(hv(1))).unwrap().is_zero());
        let b = ChowClass::new(frac(2, 3), hv(-4), frac(7, 5));
        assert_eq!(x.chow_mul(&ChowClass::one(1), &b).unwrap(), b);
        assert!(matches!(
            x.chow_mul(&ChowClass::one(2), &b),
            Err(Error::DimensionMismatch { expected: 1, found: 2 })
        ));
    }

    #[test]
    fn line_bundle_examples() {
        let x = quintic();
        assert_eq!(x.line_bundle_ch(&hv(1)).unwrap(), ChowClass::new(q(1), hv(1), frac(5, 2)));
        assert_eq!(x.line_bundle_ch(&hv(0)).unwrap(), ChowClass::one(1));
        assert_eq!(x.line_bundle_ch(&hv(-1)).unwrap(), ChowClass::new(q(1), hv(-1), frac(5, 2)));
    }

    #[test]
    fn todd_examples() {
        let p2 = SurfaceGeometry::projective_plane();
        assert_eq!(p2.todd_surface(), ChowClass::new(q(1), QNSVector(vec![frac(3, 2)]), q(1)));
        let k3 = SurfaceGeometry::hypersurface(4).unwrap();
        assert_eq!(k3.todd_surface(), ChowClass::new(q(1), hv(0), q(2)));
        assert_eq!(quintic().todd_surface(), ChowClass::new(q(1), QNSVector(vec![frac(-1, 2)]), q(5)));
    }

    #[test]
    fn chi_examples() {
        let p2 = SurfaceGeometry::projective_plane();
        assert_eq!(p2.chi(&p2.line_bundle_ch(&hv(1)).unwrap()).unwrap(), q(3));
        let x = quintic();
        assert_eq!(x.chi(&ChowClass::one(1)).unwrap(), q(5));
        assert_eq!(x.chi(&ChowClass::zero(1)).unwrap(), q(0));
    }

    #[test]
    fn hilbert_polynomial_examples() {
        let x = quintic();
        let o = ChowClass::one(1);
        assert_eq!(x.hilbert_polynomial(&o, 1).unwrap(), q(5));
        assert_eq!(x.hilbert_polynomial(&o, -1).unwrap(), q(10));
        let ch = ChowClass::new(q(3), hv(2), frac(-7, 2));
        assert_eq!(x.hilbert_polynomial(&ch, 0).unwrap(), x.chi(&ch).unwrap());
    }

    #[test]
    fn discriminant_examples() {
        let x = quintic();
        let h = |r, c1, c2: i64| HiggsNumerics::new(r, NSVector::from_i64s(&[c1]), c2).unwrap();
        assert_eq!(x.discriminant(&h(2, 1, 0)).unwrap(), BigInt::from(-5));
        assert_eq!(x.discriminant(&h(1, 7, 4)).unwrap(), BigInt::from(8));
        assert_eq!(x.discriminant(&h(2, 5, 30)).unwrap(), BigInt::from(-5));
        assert!(HiggsNumerics::new(0, NSVector::zero(1), 0).is_err());
    }

    #[test]
    fn ideal_twist_examples() {
        let x = quintic();
        assert_eq!(x.ideal_twist_ch(&hv(1), 3).unwrap(), ChowClass::new(q(1), hv(1), frac(-1, 2)));
        assert_eq!(x.ideal_twist_ch(&hv(2), 0).unwrap(), x.line_bundle_ch(&hv(2)).unwrap());
        assert_eq!(x.ideal_twist_ch(&hv(0), 1).unwrap(), ChowClass::new(q(1), hv(0), q(-1)));
    }

    #[test]
    fn inverse_of_todd() {
        let x = quintic();
        let td = x.todd_surface();
        let inv = x.chow_inverse(&td).unwrap();
        assert_eq!(x.chow_mul(&td, &inv).unwrap(), ChowClass::one(1));
        assert!(x.chow_inverse(&ChowClass::divisor(hv(1))).is_err());
    }
}
