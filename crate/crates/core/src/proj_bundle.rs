//! Chow ring of the projective completion `Y = P(L^∨ ⊕ O) → X`.
//!
//! Every class is written `π*α + π*β · η` with `η = c₁(π*L ⊗ O_{Y/X}(1))`,
//! subject to `η² = π*c₁(L) · η`. With this generator
//!
//! * a spectral surface has class `[X_s] = r·η`,
//! * the divisor at infinity is `[D_∞] = η - π*c₁(L)`, and `η · [D_∞] = 0`,
//! * `∫_Y η³ = c₁(L)²`.
//!
//! The tautological class `ξ` only appears as `η - π*c₁(L)`.

use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::surface::{ChowClass, SurfaceGeometry};

#[derive(Debug, Clone)]
pub struct YClass {
    alpha: ChowClass,
    beta: ChowClass,
    base: Arc<SurfaceGeometry>,
}

impl PartialEq for YClass {
    fn eq(&self, other: &Self) -> bool {
        self.alpha == other.alpha && self.beta == other.beta && same_base(&self.base, &other.base)
    }
}

fn same_base(a: &Arc<SurfaceGeometry>, b: &Arc<SurfaceGeometry>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl YClass {
    pub fn new(base: Arc<SurfaceGeometry>, alpha: ChowClass, beta: ChowClass) -> Result<Self> {
        base.lattice().check_dim(&alpha.deg1)?;
        base.lattice().check_dim(&beta.deg1)?;
        Ok(YClass { alpha, beta, base })
    }

    pub fn zero(base: &Arc<SurfaceGeometry>) -> Self {
        let rank = base.rank();
        YClass { alpha: ChowClass::zero(rank), beta: ChowClass::zero(rank), base: base.clone() }
    }

    pub fn one(base: &Arc<SurfaceGeometry>) -> Self {
        YClass::pullback(base, &ChowClass::one(base.rank()))
    }

    /// `π*α`.
    pub fn pullback(base: &Arc<SurfaceGeometry>, alpha: &ChowClass) -> Self {
        YClass { alpha: alpha.clone(), beta: ChowClass::zero(base.rank()), base: base.clone() }
    }

    /// `η = c₁(π*L ⊗ O_{Y/X}(1))`.
    pub fn eta(base: &Arc<SurfaceGeometry>) -> Self {
        let rank = base.rank();
        YClass { alpha: ChowClass::zero(rank), beta: ChowClass::one(rank), base: base.clone() }
    }

    /// Pullback part, the coefficient of `1`.
    pub fn alpha(&self) -> &ChowClass {
        &self.alpha
    }

    /// Coefficient of `η`.
    pub fn beta(&self) -> &ChowClass {
        &self.beta
    }

    pub fn base(&self) -> &Arc<SurfaceGeometry> {
        &self.base
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        YClass { alpha: self.alpha.scale(k), beta: self.beta.scale(k), base: self.base.clone() }
    }

    fn check_base(&self, other: &YClass) -> Result<()> {
        if same_base(&self.base, &other.base) {
            Ok(())
        } else {
            Err(Error::BaseMismatch)
        }
    }

    pub fn try_add(&self, other: &YClass) -> Result<YClass> {
        self.check_base(other)?;
        Ok(YClass { alpha: &self.alpha + &other.alpha, beta: &self.beta + &other.beta, base: self.base.clone() })
    }

    /// Product, reduced with `η² = π*c₁(L)·η`.
    pub fn mul(&self, other: &YClass) -> Result<YClass> {
        self.check_base(other)?;
        let x = &*self.base;
        let l = ChowClass::divisor(x.polarization());
        let alpha = x.chow_mul(&self.alpha, &other.alpha)?;
        let cross = &x.chow_mul(&self.alpha, &other.beta)? + &x.chow_mul(&self.beta, &other.alpha)?;
        let eta_sq = x.chow_mul(&x.chow_mul(&self.beta, &other.beta)?, &l)?;
        Ok(YClass { alpha, beta: &cross + &eta_sq, base: self.base.clone() })
    }

    pub fn pow(&self, n: u32) -> Result<YClass> {
        let mut acc = YClass::one(&self.base);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `π_*`: kills pullbacks and sends `π*β·η` to `β`.
    pub fn pushforward(&self) -> ChowClass {
        self.beta.clone()
    }

    /// `∫_Y` of the class.
    pub fn degree(&self) -> Rational {
        self.beta.deg2.clone()
    }

    /// The class `b` on `X` with `i_s^*(self) = π_s^*(b)` on a degree-`r` spectral
    /// surface. `ξ` restricts to zero there, so `η` restricts to `π_s^*c₁(L)`.
    /// The restriction does not depend on `r` beyond `r ≥ 1`.
    pub fn restrict_to_spectral(&self, r: u32) -> Result<ChowClass> {
        if r == 0 {
            return Err(Error::Input("spectral degree r must be at least 1".into()));
        }
        let x = &*self.base;
        let l = ChowClass::divisor(x.polarization());
        Ok(&self.alpha + &x.chow_mul(&self.beta, &l)?)
    }
}

impl Add for &YClass {
    type Output = YClass;
    fn add(self, rhs: &YClass) -> YClass {
        self.try_add(rhs).expect("classes over the same base")
    }
}

impl Sub for &YClass {
    type Output = YClass;
    fn sub(self, rhs: &YClass) -> YClass {
        self.try_add(&-rhs).expect("classes over the same base")
    }
}

impl Neg for &YClass {
    type Output = YClass;
    fn neg(self) -> YClass {
        YClass { alpha: -&self.alpha, beta: -&self.beta, base: self.base.clone() }
    }
}

/// `[X_s] = r·η`, the class of `|π*L^r ⊗ O(r)|`.
pub fn spectral_divisor_class(base: &Arc<SurfaceGeometry>, r: u32) -> Result<YClass> {
    if r == 0 {
        return Err(Error::Input("spectral degree r must be at least 1".into()));
    }
    Ok(YClass::eta(base).scale(&Rational::from_integer(BigInt::from(r))))
}

/// `[D_∞] = η - π*c₁(L)`.
pub fn dinfty_class(base: &Arc<SurfaceGeometry>) -> YClass {
    &YClass::eta(base) - &YClass::pullback(base, &ChowClass::divisor(base.polarization()))
}

/// `ξ = c₁(O_{Y/X}(1)) = η - π*c₁(L)`; numerically equal to `[D_∞]`.
pub fn tautological_class(base: &Arc<SurfaceGeometry>) -> YClass {
    dinfty_class(base)
}

/// `c₁(ω_Y) = π*(K - L) - 2ξ = π*(K + L) - 2η`.
pub fn canonical_y(base: &Arc<SurfaceGeometry>) -> YClass {
    let k_plus_l = base.canonical() + base.polarization();
    let two = Rational::from_integer(BigInt::from(2));
    &YClass::pullback(base, &ChowClass::divisor(k_plus_l)) - &YClass::eta(base).scale(&two)
}

/// `∫_Y η³`, which equals `c₁(L)²`.
pub fn eta_cubed_degree(base: &Arc<SurfaceGeometry>) -> Result<Rational> {
    Ok(YClass::eta(base).pow(3)?.degree())
}
