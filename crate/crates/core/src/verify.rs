//! Seeded self-verification suites.
//!
//! Each suite checks exact identities on random or exhaustive inputs, using
//! independent routes where one exists (closed forms against ring arithmetic,
//! a partition recurrence against the enumerator, brute force against the bound).

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::criterion::{c2_gbun, classify, n_points, solve_delta, Regime};
use crate::error::Result;
use crate::exact::{frac, from_int, q, Rational};
use crate::hn::{
    discriminant_identity, hodge_chain, monopole_components, olympic_verify, rank2_fixed_components, slope_gaps,
    HNFactor, HNType,
};
use crate::lattice::{NSVector, QNSVector};
use crate::proj_bundle::{canonical_y, eta_cubed_degree, spectral_divisor_class, YClass};
use crate::spectral::SpectralCover;
use crate::surface::{ChowClass, HiggsNumerics, SurfaceGeometry};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Ring,
    Chi,
    Adjunction,
    Olympic,
    Discriminant,
    Partition,
    Hodge,
    Criterion,
    Hilbert,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Ring,
        Suite::Chi,
        Suite::Adjunction,
        Suite::Olympic,
        Suite::Discriminant,
        Suite::Partition,
        Suite::Hodge,
        Suite::Criterion,
        Suite::Hilbert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ring => "ring",
            Suite::Chi => "chi",
            Suite::Adjunction => "adjunction",
            Suite::Olympic => "olympic",
            Suite::Discriminant => "discriminant",
            Suite::Partition => "partition",
            Suite::Hodge => "hodge",
            Suite::Criterion => "criterion",
            Suite::Hilbert => "hilbert",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Tally {
    checks: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        // keep reports bounded
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }
}

/// Surfaces exercised by the random suites.
pub fn verification_presets() -> Vec<SurfaceGeometry> {
    ["p2", "p1xp1", "hypersurface:4", "hypersurface:5", "hypersurface:6"]
        .into_iter()
        .map(|name| SurfaceGeometry::preset(name).expect("built-in preset"))
        .collect()
}

pub fn random_vector(rng: &mut impl Rng, rank: usize, bound: i64) -> NSVector {
    NSVector((0..rank).map(|_| BigInt::from(rng.random_range(-bound..=bound))).collect())
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    frac(rng.random_range(-12..=12), rng.random_range(1..=6))
}

pub fn random_chow(rng: &mut impl Rng, rank: usize) -> ChowClass {
    ChowClass::new(
        random_rational(rng),
        QNSVector((0..rank).map(|_| random_rational(rng)).collect()),
        random_rational(rng),
    )
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new();
    match suite {
        Suite::Ring => ring(&mut rng, &mut t)?,
        Suite::Chi => chi(&mut rng, &mut t)?,
        Suite::Adjunction => adjunction(&mut t)?,
        Suite::Olympic => olympic(&mut t)?,
        Suite::Discriminant => discriminant(&mut rng, &mut t)?,
        Suite::Partition => partition(&mut t)?,
        Suite::Hodge => hodge(&mut rng, &mut t)?,
        Suite::Criterion => criterion(&mut rng, &mut t)?,
        Suite::Hilbert => hilbert(&mut rng, &mut t)?,
    }
    Ok(SuiteReport { suite, seed, checks: t.checks, failures: t.failures })
}

/// Runs suites on separate threads; reports come back in the order requested.
pub fn run_suites(suites: &[Suite], seed: u64) -> Result<Vec<SuiteReport>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run_suite(s, seed))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    })
}

fn ring(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    for x in verification_presets() {
        let n = x.rank();
        let base = Arc::new(x.clone());
        for _ in 0..200 {
            let (a, b, c) = (random_chow(rng, n), random_chow(rng, n), random_chow(rng, n));
            let ab = x.chow_mul(&a, &b)?;
            t.check(ab == x.chow_mul(&b, &a)?, || format!("{}: chow_mul not commutative", x.name()));
            let lhs = x.chow_mul(&ab, &c)?;
            let rhs = x.chow_mul(&a, &x.chow_mul(&b, &c)?)?;
            t.check(lhs == rhs, || format!("{}: chow_mul not associative", x.name()));
            let dist = x.chow_mul(&a, &(&b + &c))?;
            t.check(dist == &ab + &x.chow_mul(&a, &c)?, || format!("{}: not distributive", x.name()));
            t.check(x.chow_mul(&ChowClass::one(n), &a)? == a, || format!("{}: unit fails", x.name()));

            let d1 = random_vector(rng, n, 5).to_q();
            let d2 = random_vector(rng, n, 5).to_q();
            let exp = x.line_bundle_ch(&(&d1 + &d2))?;
            let prod = x.chow_mul(&x.line_bundle_ch(&d1)?, &x.line_bundle_ch(&d2)?)?;
            t.check(exp == prod, || format!("{}: exponential property fails", x.name()));

            let ya = YClass::new(base.clone(), a.clone(), b.clone())?;
            let yb = YClass::new(base.clone(), c.clone(), random_chow(rng, n))?;
            let yc = YClass::new(base.clone(), random_chow(rng, n), random_chow(rng, n))?;
            t.check(ya.mul(&yb)? == yb.mul(&ya)?, || format!("{}: y_mul not commutative", x.name()));
            t.check(
                ya.mul(&yb)?.mul(&yc)? == ya.mul(&yb.mul(&yc)?)?,
                || format!("{}: y_mul not associative", x.name()),
            );
            t.check(YClass::one(&base).mul(&ya)? == ya, || format!("{}: y unit fails", x.name()));
            // projection formula
            let pulled = YClass::pullback(&base, &c);
            t.check(
                pulled.mul(&ya)?.pushforward() == x.chow_mul(&c, &ya.pushforward())?,
                || format!("{}: projection formula fails", x.name()),
            );
            let r = rng.random_range(1..=8u32);
            let cover = spectral_divisor_class(&base, r)?.mul(&pulled)?.pushforward();
            t.check(cover == c.scale(&q(r as i64)), || format!("{}: degree-{r} cover pushforward", x.name()));
        }
    }
    Ok(())
}

fn chi(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let presets = verification_presets();
    for x in &presets {
        for r in 1..=8u32 {
            let s = SpectralCover::new(x.clone(), r)?;
            let via_todd = s.chi_structure_sheaf();
            let via_noether = s.noether_chi()?;
            let mut via_sum = Rational::from_integer(0.into());
            for i in 0..r {
                let d = x.polarization().scale(&-BigInt::from(i));
                via_sum += x.chi(&x.line_bundle_ch(&d.to_q())?)?;
            }
            t.check(via_todd == via_noether && via_noether == via_sum, || {
                format!("{} r={r}: χ(O_Xs) routes disagree: {via_todd}, {via_noether}, {via_sum}", x.name())
            });
        }
    }
    for _ in 0..500 {
        let x = &presets[rng.random_range(0..presets.len())];
        let r = rng.random_range(1..=6u32);
        let s = SpectralCover::new(x.clone(), r)?;
        let delta = random_vector(rng, x.rank(), 5);
        let n = rng.random_range(0..=20u64);
        let (up, down) = s.chi_two_ways(&delta, n)?;
        t.check(up == down, || format!("{} r={r} δ={delta} n={n}: χ {up} != {down}", x.name()));
        let ch = s.grr_pushforward(&delta, n)?;
        t.check(
            ch.deg1 == s.expected_pushforward_c1(&delta) && ch.deg0 == q(r as i64),
            || format!("{} r={r} δ={delta}: pushforward rank/c₁ mismatch", x.name()),
        );
    }
    Ok(())
}

fn adjunction(t: &mut Tally) -> Result<()> {
    for x in verification_presets() {
        let base = Arc::new(x.clone());
        let l2 = from_int(&x.l_squared());
        let big = eta_cubed_degree(&base)?;
        t.check(big == l2 && big > q(0), || format!("{}: ∫η³ = {big}, L² = {l2}", x.name()));
        for r in 1..=8u32 {
            let class = &canonical_y(&base) + &spectral_divisor_class(&base, r)?;
            let restricted = class.restrict_to_spectral(r)?;
            let expected = SpectralCover::new(x.clone(), r)?.spectral_canonical();
            t.check(
                restricted == ChowClass::divisor(&expected),
                || format!("{} r={r}: adjunction gives {restricted:?}", x.name()),
            );
        }
    }
    Ok(())
}

fn olympic(t: &mut Tally) -> Result<()> {
    let report = olympic_verify(12)?;
    for row in &report.rows {
        t.check(row.holds, || format!("r={}: max {} vs bound {} at {:?}", row.rank, row.max, row.bound, row.argmax));
    }
    Ok(())
}

fn random_hn_type(rng: &mut ChaCha8Rng, rank: usize) -> Result<HNType> {
    let m = rng.random_range(1..=5usize);
    let factors = (0..m)
        .map(|_| HNFactor::new(rng.random_range(1..=4u32), random_vector(rng, rank, 5), rng.random_range(-5..=5i64)))
        .collect();
    HNType::new(factors)
}

fn discriminant(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    for x in verification_presets() {
        for _ in 0..1000 {
            let ty = random_hn_type(rng, x.rank())?;
            let (lhs, rhs) = discriminant_identity(&x, &ty)?;
            t.check(lhs == rhs, || format!("{}: Δ identity {lhs} != {rhs} for {ty:?}", x.name()));
            let chain = hodge_chain(&x, &ty)?;
            t.check(chain.projected <= chain.slope, || format!("{}: Hodge step fails for {ty:?}", x.name()));
            if ty.check_slopes(&x).is_ok() && slope_gaps(&x, &ty)?.valid {
                t.check(chain.slope <= chain.olympic, || format!("{}: gap bound fails for {ty:?}", x.name()));
            }
        }
        // slope-valid types of generic rank one pieces, built directly
        for _ in 0..200 {
            let m = rng.random_range(2..=5usize);
            let mut c1 = random_vector(rng, x.rank(), 5);
            let mut factors = vec![HNFactor::new(1, c1.clone(), 0)];
            for _ in 1..m {
                c1 = &c1 - x.polarization();
                factors.push(HNFactor::new(1, c1.clone(), rng.random_range(0..=5i64)));
            }
            let ty = HNType::new(factors)?;
            let chain = hodge_chain(&x, &ty)?;
            t.check(slope_gaps(&x, &ty)?.valid, || format!("{}: L-step type not slope-valid", x.name()));
            t.check(
                chain.projected <= chain.slope && chain.slope <= chain.olympic,
                || format!("{}: Hodge chain fails for {ty:?}", x.name()),
            );
        }
    }
    Ok(())
}

/// `p(n, ≤k) = p(n-k, ≤k) + p(n, ≤k-1)`.
pub fn partition_recurrence(n: u64, k: u64, memo: &mut HashMap<(u64, u64), BigInt>) -> BigInt {
    if n == 0 {
        return BigInt::from(1);
    }
    if k == 0 {
        return BigInt::from(0);
    }
    if let Some(v) = memo.get(&(n, k)) {
        return v.clone();
    }
    let with_k = if n >= k { partition_recurrence(n - k, k, memo) } else { BigInt::from(0) };
    let v = with_k + partition_recurrence(n, k - 1, memo);
    memo.insert((n, k), v.clone());
    v
}

fn partition(t: &mut Tally) -> Result<()> {
    let x = SurfaceGeometry::hypersurface(5)?;
    let mut memo = HashMap::new();
    for r in 1..=6u32 {
        // c₁ = -r(r-1)/2 · c₁(L) solves the divisibility equation with δ = 0.
        let shift: BigInt = BigInt::from(r) * (BigInt::from(r) - 1) / 2;
        let c1 = x.polarization().scale(&-shift);
        let gbun = c2_gbun(&x, &HiggsNumerics::new(r, c1.clone(), 0)?)?.value.to_integer();
        for big_n in 0..=40u64 {
            let h = HiggsNumerics::new(r, c1.clone(), &gbun + BigInt::from(big_n))?;
            let m = monopole_components(&x, &h)?;
            let oracle = partition_recurrence(big_n, r as u64, &mut memo);
            t.check(BigInt::from(m.count()) == oracle, || format!("r={r} N={big_n}: {} vs {oracle}", m.count()));
            let nonincreasing = m.components.iter().all(|c| c.windows(2).all(|w| w[0] >= w[1]));
            let sums = m.components.iter().all(|c| c.iter().sum::<u64>() == big_n);
            t.check(nonincreasing && sums, || format!("r={r} N={big_n}: malformed component"));
        }
    }
    for d in 5..=8 {
        let x = SurfaceGeometry::hypersurface(d)?;
        for c2 in 0..=30i64 {
            let report = rank2_fixed_components(&x, c2)?;
            let m = monopole_components(&x, &HiggsNumerics::new(2, x.polarization().clone(), c2)?)?;
            t.check(
                report.count() as i64 == c2 / 2 + 1 && report.count() == m.count(),
                || format!("d={d} c2={c2}: rank-2 count {} vs {}", report.count(), m.count()),
            );
        }
    }
    Ok(())
}

fn hodge(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    for x in verification_presets() {
        let lat = x.lattice();
        let mut tested = 0;
        while tested < 1000 {
            let d = random_vector(rng, x.rank(), 10);
            let l = random_vector(rng, x.rank(), 10);
            let ll = lat.pair_int(&l, &l)?;
            if ll <= BigInt::from(0) {
                continue;
            }
            tested += 1;
            let dl = lat.pair_int(&d, &l)?;
            let dd = lat.pair_int(&d, &d)?;
            t.check(&dl * &dl >= &dd * &ll, || format!("{}: Hodge index fails for D={d}, L={l}", x.name()));
        }
    }
    Ok(())
}

fn criterion(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let presets = verification_presets();
    let mut defined = 0;
    while defined < 1000 {
        let x = &presets[rng.random_range(0..presets.len())];
        let r = rng.random_range(1..=6u32);
        let h = HiggsNumerics::new(r, random_vector(rng, x.rank(), 10), rng.random_range(-60..=60i64))?;
        if solve_delta(x, &h)?.is_none() {
            continue;
        }
        defined += 1;
        let gbun = c2_gbun(x, &h)?;
        let n = n_points(x, &h)?;
        t.check(gbun.integral, || format!("{}: c2_gbun {} not integral for {h:?}", x.name(), gbun.value));
        t.check(n == from_int(&h.c2) - &gbun.value, || format!("{}: #𝔇 identity fails for {h:?}", x.name()));
    }
    // regimes never go backwards as c₂ grows
    for x in &presets {
        for _ in 0..50 {
            let r = rng.random_range(1..=6u32);
            let c1 = random_vector(rng, x.rank(), 6);
            let mut last = Regime::NoDeltaSolution;
            for c2 in -80..=80i64 {
                let regime = classify(x, &HiggsNumerics::new(r, c1.clone(), c2)?)?.regime;
                t.check(regime >= last, || format!("{}: regime went from {last} to {regime}", x.name()));
                last = regime;
            }
        }
    }
    for d in 5..=8 {
        let x = SurfaceGeometry::hypersurface(d)?;
        for c2 in -5..=30i64 {
            let h = HiggsNumerics::new(2, x.polarization().clone(), c2)?;
            let report = classify(&x, &h)?;
            let ok = if c2 < 0 {
                report.regime == Regime::Empty
            } else {
                report.c2_gbun.value == q(0) && n_points(&x, &h)? == q(c2)
            };
            t.check(ok, || format!("d={d} c2={c2}: rank-2 specialization fails"));
        }
    }
    Ok(())
}

fn hilbert(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    for x in verification_presets() {
        for _ in 0..50 {
            let ch = random_chow(rng, x.rank());
            let [a0, a1, a2] = x.hilbert_coefficients(&ch)?;
            for n in -10..=10i64 {
                let closed = &a2 * q(n * n) + &a1 * q(n) + &a0;
                let hrr = x.hilbert_polynomial(&ch, n)?;
                t.check(closed == hrr, || format!("{}: P({n}) {hrr} != {closed}", x.name()));
            }
        }
    }
    Ok(())
}
