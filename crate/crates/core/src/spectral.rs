//! Numerical invariants of a smooth spectral surface `π_s: X_s → X` of degree `r`
//! and Grothendieck–Riemann–Roch transport between `X_s` and `X`.
//!
//! Classes on `X_s` are modelled as pullbacks `π_s^*β` plus a zero-cycle degree.
//! This is exact when `Pic(X_s) = π_s^*Pic(X)`, which holds for very general
//! spectral data; extra classes on special spectral surfaces are not representable.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{from_int, frac, q, Rational};
use crate::lattice::{NSVector, QNSVector};
use crate::surface::{ChowClass, SurfaceGeometry};

/// A class `π_s^*β + p·[pt]` on a spectral surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralClass {
    pub pullback: ChowClass,
    /// Degree of the extra zero-cycle; `≥ 0` for effective cycles such as `[𝔇]`.
    pub points: Rational,
}

impl SpectralClass {
    pub fn from_pullback(pullback: ChowClass) -> Self {
        SpectralClass { pullback, points: Rational::zero() }
    }

    pub fn is_effective_points(&self) -> bool {
        self.points >= Rational::zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralCover {
    base: SurfaceGeometry,
    r: u32,
}

impl SpectralCover {
    pub fn new(base: SurfaceGeometry, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::Input("cover degree r must be at least 1".into()));
        }
        Ok(SpectralCover { base, r })
    }

    pub fn base(&self) -> &SurfaceGeometry {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    fn r_q(&self) -> Rational {
        q(self.r as i64)
    }

    fn r_minus_one(&self) -> BigInt {
        BigInt::from(self.r) - 1
    }

    /// Product on `X_s`. Pullback is a ring map and a zero-cycle only survives
    /// multiplication by degree-zero parts.
    pub fn mul(&self, a: &SpectralClass, b: &SpectralClass) -> Result<SpectralClass> {
        let pullback = self.base.chow_mul(&a.pullback, &b.pullback)?;
        let points = &a.pullback.deg0 * &b.points + &b.pullback.deg0 * &a.points;
        Ok(SpectralClass { pullback, points })
    }

    /// `∫_{X_s}`: a pulled-back point class has degree `r`.
    pub fn integrate(&self, a: &SpectralClass) -> Rational {
        self.r_q() * &a.pullback.deg2 + &a.points
    }

    /// `π_{s*}`: `π_{s*}π_s^* = r·id` and zero-cycles keep their degree.
    pub fn pushforward(&self, a: &SpectralClass) -> ChowClass {
        let mut out = a.pullback.scale(&self.r_q());
        out.deg2 += &a.points;
        out
    }

    /// `b` with `K_{X_s} = π_s^*b`, namely `K + (r-1)·c₁(L)`.
    pub fn spectral_canonical(&self) -> NSVector {
        self.base.canonical() + &self.base.polarization().scale(&self.r_minus_one())
    }

    /// `ch(Ω¹_{X_s}) = π_s^*(ch(Ω¹_X) + ch(L^∨) - ch(L^∨)^r)`, returned as the class on `X`.
    pub fn spectral_cotangent_ch(&self) -> Result<ChowClass> {
        let x = &self.base;
        let k = x.canonical().to_q();
        let k2 = from_int(&x.k_squared());
        let c2 = from_int(x.c2_top());
        let omega = ChowClass::new(q(2), k, (k2 - q(2) * c2) / q(2));
        let dual = x.line_bundle_ch(&(-x.polarization()).to_q())?;
        let mut power = ChowClass::one(x.rank());
        for _ in 0..self.r {
            power = x.chow_mul(&power, &dual)?;
        }
        Ok(&(&omega + &dual) - &power)
    }

    /// Coefficient of `π_s^*[pt]` in `c₂(T X_s)`:
    /// `r(r-1)L² + (r-1)K·L + c₂(TX)`.
    pub fn spectral_c2_tangent(&self) -> Rational {
        let r = BigInt::from(self.r);
        let rm1 = self.r_minus_one();
        let x = &self.base;
        from_int(&(&r * &rm1 * x.l_squared() + &rm1 * x.k_dot_l() + x.c2_top()))
    }

    /// Topological Euler characteristic `e(X_s) = r · spectral_c2_tangent`.
    pub fn euler_number(&self) -> Rational {
        self.r_q() * self.spectral_c2_tangent()
    }

    /// `K_{X_s}²` computed on `X_s`, i.e. `r · (K + (r-1)L)²`.
    pub fn canonical_squared(&self) -> Result<Rational> {
        let ks = self.spectral_canonical();
        Ok(self.r_q() * self.base.lattice().pair(&ks, &ks)?)
    }

    /// `Td(X_s) = 1 - ½π_s^*(K + (r-1)L)
    ///   + (1/12)π_s^*(K² + (2r-1)(r-1)L² + 3(r-1)K·L + c₂(TX))`.
    pub fn spectral_todd(&self) -> ChowClass {
        let x = &self.base;
        let r = BigInt::from(self.r);
        let rm1 = self.r_minus_one();
        let deg1 = self.spectral_canonical().to_q().scale(&frac(-1, 2));
        let top = x.k_squared() + (BigInt::from(2) * &r - 1) * &rm1 * x.l_squared() + BigInt::from(3) * &rm1 * x.k_dot_l()
            + x.c2_top();
        ChowClass::new(Rational::one(), deg1, from_int(&top) / q(12))
    }

    /// `χ(O_{X_s}) = ∫_{X_s} Td(X_s)`.
    pub fn chi_structure_sheaf(&self) -> Rational {
        self.integrate(&SpectralClass::from_pullback(self.spectral_todd()))
    }

    /// `χ(O_{X_s})` from Noether's formula on `X_s`.
    pub fn noether_chi(&self) -> Result<Rational> {
        Ok((self.canonical_squared()? + self.euler_number()) / q(12))
    }

    /// `ch(π_{s*}O_{X_s}) = Σ_{i<r} ch(L^{-i})`.
    pub fn pushforward_structure_ch(&self) -> Result<ChowClass> {
        let x = &self.base;
        let mut acc = ChowClass::zero(x.rank());
        for i in 0..self.r {
            let d = x.polarization().scale(&-BigInt::from(i));
            acc = &acc + &x.line_bundle_ch(&d.to_q())?;
        }
        Ok(acc)
    }

    /// `ch(M ⊗ I_𝔇)` on `X_s` for `M = O(π_s^*δ)` and `#𝔇 = n_points`.
    pub fn twisted_ideal_class(&self, delta: &NSVector, n_points: u64) -> Result<SpectralClass> {
        Ok(SpectralClass {
            pullback: self.base.line_bundle_ch(&delta.to_q())?,
            points: -q(n_points as i64),
        })
    }

    /// `ch(E)` for `E = π_{s*}(O(π_s^*δ) ⊗ I_𝔇)`, via
    /// `ch(E)·Td(X) = π_{s*}(ch(M ⊗ I_𝔇)·Td(X_s))`.
    pub fn grr_pushforward(&self, delta: &NSVector, n_points: u64) -> Result<ChowClass> {
        let x = &self.base;
        x.lattice().check_dim(delta)?;
        let integrand = self.mul(
            &self.twisted_ideal_class(delta, n_points)?,
            &SpectralClass::from_pullback(self.spectral_todd()),
        )?;
        let pushed = self.pushforward(&integrand);
        x.chow_mul(&pushed, &x.chow_inverse(&x.todd_surface())?)
    }

    /// `(χ(X_s, M ⊗ I_𝔇), χ(X, E))`; the two entries always agree.
    pub fn chi_two_ways(&self, delta: &NSVector, n_points: u64) -> Result<(Rational, Rational)> {
        let upstairs = self.integrate(&self.mul(
            &self.twisted_ideal_class(delta, n_points)?,
            &SpectralClass::from_pullback(self.spectral_todd()),
        )?);
        let downstairs = self.base.chi(&self.grr_pushforward(delta, n_points)?)?;
        Ok((upstairs, downstairs))
    }

    /// Expected `ch₁` of the pushforward: `r·δ - r(r-1)/2 · c₁(L)`.
    pub fn expected_pushforward_c1(&self, delta: &NSVector) -> QNSVector {
        let r = self.r_q();
        let shift = &r * (&r - q(1)) / q(2);
        &delta.to_q().scale(&r) - &self.base.polarization().to_q().scale(&shift)
    }
}
