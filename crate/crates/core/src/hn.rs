//! Harder–Narasimhan arithmetic for Higgs sheaves and the combinatorics of
//! monopole branches (nested Hilbert schemes of points).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::criterion::{classify, Regime};
use crate::error::{Error, Result};
use crate::exact::{from_int, q, Rational};
use crate::lattice::NSVector;
use crate::surface::{HiggsNumerics, SurfaceGeometry};

/// Refuse to materialize more nested components than this.
pub const MAX_ENUMERATED_COMPONENTS: u64 = 2_000_000;

/// Largest rank accepted by [`olympic_verify`].
pub const OLYMPIC_MAX_RANK: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HNFactor {
    pub rank: u32,
    pub c1: NSVector,
    pub c2: BigInt,
}

impl HNFactor {
    pub fn new(rank: u32, c1: NSVector, c2: impl Into<BigInt>) -> Self {
        HNFactor { rank, c1, c2: c2.into() }
    }
}

/// Graded pieces of a filtration, in filtration order.
///
/// Slope ordering is not enforced on construction: the discriminant identity
/// holds for arbitrary filtrations. Use [`HNType::check_slopes`] for genuine
/// Harder–Narasimhan data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HNType {
    factors: Vec<HNFactor>,
}

impl HNType {
    pub fn new(factors: Vec<HNFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Input("an HN type needs at least one factor".into()));
        }
        if factors.iter().any(|f| f.rank == 0) {
            return Err(Error::Input("graded pieces must have positive rank".into()));
        }
        Ok(HNType { factors })
    }

    pub fn factors(&self) -> &[HNFactor] {
        &self.factors
    }

    pub fn total_rank(&self) -> u32 {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn total_c1(&self) -> NSVector {
        let mut it = self.factors.iter();
        let first = it.next().expect("nonempty").c1.clone();
        it.fold(first, |acc, f| &acc + &f.c1)
    }

    /// `c₂(E) = Σ c₂(E_i) + Σ_{i<j} c₁(E_i)·c₁(E_j)`.
    pub fn total_c2(&self, x: &SurfaceGeometry) -> Result<BigInt> {
        let mut c2 = BigInt::zero();
        for (i, fi) in self.factors.iter().enumerate() {
            c2 += &fi.c2;
            for fj in &self.factors[i + 1..] {
                c2 += x.lattice().pair_int(&fi.c1, &fj.c1)?;
            }
        }
        Ok(c2)
    }

    pub fn total(&self, x: &SurfaceGeometry) -> Result<HiggsNumerics> {
        HiggsNumerics::new(self.total_rank(), self.total_c1(), self.total_c2(x)?)
    }

    /// `μ_i = c₁(E_i)·c₁(L) / r_i`.
    pub fn slopes(&self, x: &SurfaceGeometry) -> Result<Vec<Rational>> {
        self.factors
            .iter()
            .map(|f| Ok(x.lattice().pair(&f.c1, x.polarization())? / q(f.rank as i64)))
            .collect()
    }

    /// Checks that slopes strictly decrease.
    pub fn check_slopes(&self, x: &SurfaceGeometry) -> Result<()> {
        let slopes = self.slopes(x)?;
        match slopes.windows(2).position(|w| w[0] <= w[1]) {
            None => Ok(()),
            Some(i) => Err(Error::validation(
                "decreasing slopes",
                format!("μ_{} = {} is not greater than μ_{} = {}", i + 1, slopes[i], i + 2, slopes[i + 1]),
            )),
        }
    }
}

fn pair_diff_sq(x: &SurfaceGeometry, fi: &HNFactor, fj: &HNFactor) -> Result<Rational> {
    // (c₁_i/r_i - c₁_j/r_j)²
    let d = &fi.c1.to_q().scale(&(q(1) / q(fi.rank as i64))) - &fj.c1.to_q().scale(&(q(1) / q(fj.rank as i64)));
    x.lattice().pair(&d, &d)
}

/// Both sides of
/// `Δ(E)/r = Σ Δ(E_i)/r_i - Σ_{i<j} (r_i r_j / r)(c₁_i/r_i - c₁_j/r_j)²`.
pub fn discriminant_identity(x: &SurfaceGeometry, t: &HNType) -> Result<(Rational, Rational)> {
    let total = t.total(x)?;
    let r = q(total.rank as i64);
    let lhs = from_int(&x.discriminant(&total)?) / &r;

    let mut rhs = Rational::zero();
    for f in t.factors() {
        let piece = HiggsNumerics::new(f.rank, f.c1.clone(), f.c2.clone())?;
        rhs += from_int(&x.discriminant(&piece)?) / q(f.rank as i64);
    }
    let fs = t.factors();
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            let w = q(fs[i].rank as i64) * q(fs[j].rank as i64) / &r;
            rhs -= w * pair_diff_sq(x, &fs[i], &fs[j])?;
        }
    }
    Ok((lhs, rhs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeGaps {
    pub gaps: Vec<Rational>,
    /// Every gap lies in `(0, c₁(L)²]`.
    pub valid: bool,
}

/// Consecutive slope gaps `μ_i - μ_{i+1}` and whether each lies in `(0, c₁(L)²]`,
/// as forced by a nonzero induced Higgs map `HN_i → (E / HN_i) ⊗ L`.
pub fn slope_gaps(x: &SurfaceGeometry, t: &HNType) -> Result<SlopeGaps> {
    let slopes = t.slopes(x)?;
    let l_sq = from_int(&x.l_squared());
    let gaps: Vec<Rational> = slopes.windows(2).map(|w| &w[0] - &w[1]).collect();
    let valid = gaps.iter().all(|g| *g > Rational::zero() && *g <= l_sq);
    Ok(SlopeGaps { gaps, valid })
}

/// The three quantities of the Hodge-index bound on an HN type, which satisfy
/// `projected ≤ slope` always (Hodge index) and `slope ≤ olympic` when the slope
/// gaps are valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeChain {
    /// `Σ_{i<j} (r_i r_j/r)(c₁_i/r_i - c₁_j/r_j)² · c₁(L)²`
    pub projected: Rational,
    /// `Σ_{i<j} (r_i r_j/r)(μ_i - μ_j)²`
    pub slope: Rational,
    /// `Σ_{i<j} (r_i r_j/r)(j-i)² (c₁(L)²)²`
    pub olympic: Rational,
}

pub fn hodge_chain(x: &SurfaceGeometry, t: &HNType) -> Result<HodgeChain> {
    let fs = t.factors();
    let r = q(t.total_rank() as i64);
    let l_sq = from_int(&x.l_squared());
    let slopes = t.slopes(x)?;
    let mut chain = HodgeChain { projected: Rational::zero(), slope: Rational::zero(), olympic: Rational::zero() };
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            let w = q(fs[i].rank as i64) * q(fs[j].rank as i64) / &r;
            chain.projected += &w * pair_diff_sq(x, &fs[i], &fs[j])? * &l_sq;
            let ds = &slopes[i] - &slopes[j];
            chain.slope += &w * &ds * &ds;
            let k = q((j - i) as i64);
            chain.olympic += &w * &k * &k * &l_sq * &l_sq;
        }
    }
    Ok(chain)
}

/// `Σ_{i<j} r_i r_j (j-i)²` for an ordered composition of the rank.
pub fn olympic_sum(comp: &[u32]) -> Result<u64> {
    if comp.is_empty() {
        return Err(Error::Input("composition must be nonempty".into()));
    }
    if comp.contains(&0) {
        return Err(Error::Input("composition parts must be positive".into()));
    }
    let mut total = 0u64;
    for i in 0..comp.len() {
        for j in i + 1..comp.len() {
            let d = (j - i) as u64;
            total += comp[i] as u64 * comp[j] as u64 * d * d;
        }
    }
    Ok(total)
}

/// `r²(r²-1)/12`.
pub fn olympic_bound(r: u32) -> u64 {
    let r = r as u64;
    r * r * (r * r - 1) / 12
}

/// All `2^{r-1}` ordered compositions of `r`; bit `k` of the mask cuts after position `k+1`.
pub fn compositions(r: u32) -> impl Iterator<Item = Vec<u32>> {
    let cuts = r.saturating_sub(1);
    (0..(1u64 << cuts)).map(move |mask| {
        let mut parts = Vec::new();
        let mut run = 1u32;
        for k in 0..cuts {
            if mask >> k & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        parts
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OlympicRow {
    pub rank: u32,
    pub compositions: u64,
    pub max: u64,
    pub bound: u64,
    pub argmax: Vec<Vec<u32>>,
    /// `max == bound` and the maximum is attained only at `(1, …, 1)`.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OlympicReport {
    pub rows: Vec<OlympicRow>,
}

impl OlympicReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|row| row.holds)
    }
}

/// Exhaustive check of `Σ r_i r_j (j-i)² ≤ r²(r²-1)/12`, with equality only for
/// `(1, …, 1)`, over every ordered composition of every `r ≤ r_max`.
pub fn olympic_verify(r_max: u32) -> Result<OlympicReport> {
    if r_max == 0 || r_max > OLYMPIC_MAX_RANK {
        return Err(Error::Input(format!("r_max must lie in 1..={OLYMPIC_MAX_RANK}, got {r_max}")));
    }
    let mut rows = Vec::new();
    for r in 1..=r_max {
        let mut max = 0u64;
        let mut argmax = Vec::new();
        let mut count = 0u64;
        for comp in compositions(r) {
            count += 1;
            let s = olympic_sum(&comp)?;
            if s > max || argmax.is_empty() {
                max = s;
                argmax.clear();
            }
            if s == max {
                argmax.push(comp);
            }
        }
        let bound = olympic_bound(r);
        let all_ones = vec![1u32; r as usize];
        let holds = max == bound && argmax == [all_ones];
        rows.push(OlympicRow { rank: r, compositions: count, max, bound, argmax, holds });
    }
    Ok(OlympicReport { rows })
}

/// Number of partitions of `n` into at most `k` parts, from the coefficients of
/// `∏_{i=1}^{k} 1/(1 - x^i)`.
pub fn partition_count(n: u64, k: u32) -> BigInt {
    let n = n as usize;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = BigInt::from(1);
    for part in 1..=(k as usize).min(n.max(1)) {
        for m in part..=n {
            let prev = coeffs[m - part].clone();
            coeffs[m] += prev;
        }
    }
    coeffs.swap_remove(n)
}

/// Partitions of `n` into at most `k` parts, zero-padded to length `k`, in
/// lexicographically decreasing order.
pub fn partitions_at_most(n: u64, k: u32) -> Vec<Vec<u64>> {
    fn walk(remaining: u64, max_part: u64, slots: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let hi = remaining.min(max_part);
        let lo = remaining.div_ceil(slots as u64);
        for part in (lo..=hi).rev() {
            current.push(part);
            walk(remaining - part, part, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    walk(n, n, k as usize, &mut Vec::with_capacity(k as usize), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonopoleBranches {
    pub regime: Regime,
    pub delta: NSVector,
    /// `β_i = δ - (i-1)·c₁(L)`.
    pub betas: Vec<NSVector>,
    /// `Σ n_i = c₂ - c₂^{g.bun}`.
    pub total_points: u64,
    /// Nonincreasing length vectors `n₁ ≥ … ≥ n_r ≥ 0`, lexicographically decreasing.
    pub components: Vec<Vec<u64>>,
}

impl MonopoleBranches {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

/// Numerical candidates for the monopole branches `X_β^{[n]}` of the torus-fixed
/// locus. Whether each candidate is realized by an actual Higgs sheaf is not decided.
pub fn monopole_components(x: &SurfaceGeometry, h: &HiggsNumerics) -> Result<MonopoleBranches> {
    let report = classify(x, h)?;
    let Some(witness) = report.witness else {
        return Err(Error::WrongRegime { regime: report.regime });
    };
    let total_points = witness
        .n_points
        .to_u64()
        .ok_or_else(|| Error::Input(format!("{} points is too many to enumerate", witness.n_points)))?;
    let count = partition_count(total_points, h.rank);
    if count > BigInt::from(MAX_ENUMERATED_COMPONENTS) {
        return Err(Error::Input(format!(
            "{count} components exceed the enumeration limit of {MAX_ENUMERATED_COMPONENTS}"
        )));
    }
    let betas = (0..h.rank).map(|i| &witness.delta - &x.polarization().scale(&BigInt::from(i))).collect();
    Ok(MonopoleBranches {
        regime: report.regime,
        delta: witness.delta,
        betas,
        total_points,
        components: partitions_at_most(total_points, h.rank),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank2Report {
    pub c2: BigInt,
    pub regime: Regime,
    /// `Δ = 4c₂ - c₁(L)²`.
    pub discriminant: BigInt,
    /// The zero-Higgs-field branch of stable rank-2 sheaves is numerically allowed
    /// (Bogomolov: `Δ ≥ 0`).
    pub instanton_candidate: bool,
    /// `(#D₁, #D₂)` with `D₂ ⊂ D₁` for fixed points `(L ⊗ I_{D₁} ⊕ I_{D₂}, θ₁)`.
    pub components: Vec<(u64, u64)>,
}

impl Rank2Report {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

/// Torus-fixed components for rank 2 with `c₁ = c₁(L)`: the instanton branch
/// marker and the type-`(1,1)` nested components `X^{[n₁, n₂]}`, `n₁ + n₂ = c₂`.
pub fn rank2_fixed_components(x: &SurfaceGeometry, c2: i64) -> Result<Rank2Report> {
    let h = HiggsNumerics::new(2, x.polarization().clone(), c2)?;
    let regime = classify(x, &h)?.regime;
    let discriminant = x.discriminant(&h)?;
    let instanton_candidate = regime != Regime::Empty && discriminant >= BigInt::zero();
    let components = if c2 < 0 {
        Vec::new()
    } else {
        let c2 = c2 as u64;
        (c2.div_ceil(2)..=c2).rev().map(|n1| (n1, c2 - n1)).collect()
    };
    Ok(Rank2Report { c2: h.c2, regime, discriminant, instanton_candidate, components })
}
