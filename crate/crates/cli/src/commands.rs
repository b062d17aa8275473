use std::sync::Arc;

use higgs_core::criterion::{c2_gbun, classify};
use higgs_core::hn::{monopole_components, rank2_fixed_components};
use higgs_core::proj_bundle::{canonical_y, dinfty_class, eta_cubed_degree, spectral_divisor_class, YClass};
use higgs_core::verify::{run_suites, Suite, DEFAULT_SEED};
use higgs_core::{load_surface, Error, HiggsNumerics, NSVector, Result, SpectralCover, SurfaceFile, SurfaceGeometry};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::json::{chow, int, qvector, rat, vector, yclass};
use crate::Command;

pub struct Outcome {
    pub input: Value,
    pub payload: Value,
    /// False only when a verification suite reports failures.
    pub success: bool,
}

impl Outcome {
    fn ok(input: Value, payload: Value) -> Self {
        Outcome { input, payload, success: true }
    }
}

pub fn run(command: &Command) -> (&'static str, Result<Outcome>) {
    match command {
        Command::Surface(s) => ("surface", surface(&s.surface)),
        Command::Ybundle { surface, rank } => ("ybundle", ybundle(&surface.surface, *rank)),
        Command::Spectral { surface, rank } => ("spectral", spectral(&surface.surface, *rank)),
        Command::Criterion(args) => ("criterion", criterion(&args.surface.surface, args.rank, &args.c1, args.c2)),
        Command::Branches { surface, rank, c1, c2, rank2 } => {
            ("branches", branches(&surface.surface, *rank, c1.as_deref(), *c2, *rank2))
        }
        Command::Grr { surface, rank, delta, points } => ("grr", grr(&surface.surface, *rank, delta, *points)),
        Command::Verify { suite, seed } => ("verify", verify(suite, *seed)),
    }
}

/// Parses `a,b,...` into a lattice vector of the surface's rank.
pub fn parse_vector(text: &str, x: &SurfaceGeometry) -> Result<NSVector> {
    let coords = text
        .split(',')
        .map(|part| part.trim().parse::<BigInt>().map_err(|_| Error::Input(format!("bad lattice coordinate {part:?}"))))
        .collect::<Result<Vec<_>>>()?;
    let v = NSVector(coords);
    x.lattice().check_dim(&v)?;
    Ok(v)
}

fn surface_input(spec: &str) -> Value {
    json!({ "surface": spec })
}

fn surface(spec: &str) -> Result<Outcome> {
    let x = load_surface(spec)?;
    let file = SurfaceFile::from_geometry(&x)?;
    let (pos, neg) = x.lattice().signature();
    let payload = json!({
        "name": file.name,
        "ns_rank": file.ns_rank,
        "gram": file.gram,
        "canonical": file.canonical,
        "polarization": file.polarization,
        "c2_top": file.c2_top,
        "k_squared": int(&x.k_squared()),
        "k_dot_l": int(&x.k_dot_l()),
        "l_squared": int(&x.l_squared()),
        "chi_o": int(x.chi_o()),
        "signature": [pos, neg],
        "todd": chow(&x.todd_surface()),
    });
    Ok(Outcome::ok(surface_input(spec), payload))
}

fn ybundle(spec: &str, r: u32) -> Result<Outcome> {
    let base = Arc::new(load_surface(spec)?);
    let eta = YClass::eta(&base);
    let dinf = dinfty_class(&base);
    let xs = spectral_divisor_class(&base, r)?;
    let omega = canonical_y(&base);
    let adjunction = (&omega + &xs).restrict_to_spectral(r)?;
    let expected = SpectralCover::new((*base).clone(), r)?.spectral_canonical();
    let payload = json!({
        "eta": yclass(&eta),
        "dinfty": yclass(&dinf),
        "spectral_class": yclass(&xs),
        "canonical": yclass(&omega),
        "eta_cubed_degree": rat(&eta_cubed_degree(&base)?),
        "l_squared": int(&base.l_squared()),
        "eta_dot_dinfty_zero": eta.mul(&dinf)?.is_zero(),
        "spectral_dot_dinfty_zero": xs.mul(&dinf)?.is_zero(),
        "adjunction_restriction": chow(&adjunction),
        "adjunction_holds": adjunction == higgs_core::ChowClass::divisor(&expected),
    });
    Ok(Outcome::ok(json!({ "surface": spec, "r": r }), payload))
}

fn spectral(spec: &str, r: u32) -> Result<Outcome> {
    let s = SpectralCover::new(load_surface(spec)?, r)?;
    let payload = json!({
        "canonical_class": vector(&s.spectral_canonical()),
        "canonical_squared": rat(&s.canonical_squared()?),
        "c2_tangent": rat(&s.spectral_c2_tangent()),
        "euler_number": rat(&s.euler_number()),
        "cotangent_ch": chow(&s.spectral_cotangent_ch()?),
        "todd": chow(&s.spectral_todd()),
        "chi_structure_sheaf": rat(&s.chi_structure_sheaf()),
        "chi_noether": rat(&s.noether_chi()?),
        "pushforward_structure_ch": chow(&s.pushforward_structure_ch()?),
    });
    Ok(Outcome::ok(json!({ "surface": spec, "r": r }), payload))
}

fn numerics_input(spec: &str, r: u32, c1: &NSVector, c2: i64) -> Value {
    json!({ "surface": spec, "r": r, "c1": vector(c1), "c2": c2 })
}

fn criterion(spec: &str, r: u32, c1: &str, c2: i64) -> Result<Outcome> {
    let x = load_surface(spec)?;
    let c1 = parse_vector(c1, &x)?;
    let h = HiggsNumerics::new(r, c1.clone(), c2)?;
    let report = classify(&x, &h)?;
    let witness = report.witness.as_ref();
    let payload = json!({
        "regime": report.regime.as_str(),
        "c2_gbun": rat(&report.c2_gbun.value),
        "c2_gbun_integral": report.c2_gbun.integral,
        "delta": witness.map(|w| vector(&w.delta)),
        "n_points": witness.map(|w| int(&w.n_points)),
        "discriminant": int(&x.discriminant(&h)?),
        "boundary_graded_c1": report.boundary_graded_c1.as_ref().map(|v| v.iter().map(vector).collect::<Vec<_>>()),
    });
    Ok(Outcome::ok(numerics_input(spec, r, &c1, c2), payload))
}

fn branches(spec: &str, r: Option<u32>, c1: Option<&str>, c2: i64, rank2: bool) -> Result<Outcome> {
    let x = load_surface(spec)?;
    if rank2 {
        let report = rank2_fixed_components(&x, c2)?;
        let payload = json!({
            "regime": report.regime.as_str(),
            "discriminant": int(&report.discriminant),
            "instanton_candidate": report.instanton_candidate,
            "components": report.components.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "count": report.count(),
        });
        return Ok(Outcome::ok(json!({ "surface": spec, "rank2": true, "c2": c2 }), payload));
    }
    let (Some(r), Some(c1)) = (r, c1) else {
        return Err(Error::Input("branches needs -r and --c1 unless --rank2 is given".into()));
    };
    let c1 = parse_vector(c1, &x)?;
    let h = HiggsNumerics::new(r, c1.clone(), c2)?;
    let input = numerics_input(spec, r, &c1, c2);
    let m = match monopole_components(&x, &h) {
        Ok(m) => m,
        Err(Error::WrongRegime { regime }) => {
            let payload = json!({
                "regime": regime.as_str(),
                "c2_gbun": rat(&c2_gbun(&x, &h)?.value),
                "components": [],
                "count": 0,
            });
            return Ok(Outcome::ok(input, payload));
        }
        Err(e) => return Err(e),
    };
    let payload = json!({
        "regime": m.regime.as_str(),
        "c2_gbun": rat(&c2_gbun(&x, &h)?.value),
        "delta": vector(&m.delta),
        "betas": m.betas.iter().map(vector).collect::<Vec<_>>(),
        "total_points": m.total_points,
        "components": m.components,
        "count": m.count(),
    });
    Ok(Outcome::ok(input, payload))
}

fn grr(spec: &str, r: u32, delta: &str, points: u64) -> Result<Outcome> {
    let x = load_surface(spec)?;
    let delta = parse_vector(delta, &x)?;
    let s = SpectralCover::new(x, r)?;
    let ch = s.grr_pushforward(&delta, points)?;
    let lat = s.base().lattice();
    let c2 = lat.pair(&ch.deg1, &ch.deg1)? / higgs_core::exact::q(2) - &ch.deg2;
    let (up, down) = s.chi_two_ways(&delta, points)?;
    let payload = json!({
        "ch": chow(&ch),
        "rank": rat(&ch.deg0),
        "c1": qvector(&ch.deg1),
        "c2": rat(&c2),
        "chi_spectral": rat(&up),
        "chi_base": rat(&down),
        "chi_agree": up == down,
    });
    Ok(Outcome::ok(json!({ "surface": spec, "r": r, "delta": vector(&delta), "points": points }), payload))
}

fn verify(which: &str, seed: Option<u64>) -> Result<Outcome> {
    let seed = match seed {
        Some(s) => s,
        None => match std::env::var("HIGGS_SEED") {
            Ok(v) => v.trim().parse().map_err(|_| Error::Input(format!("HIGGS_SEED={v:?} is not an integer")))?,
            Err(_) => DEFAULT_SEED,
        },
    };
    let suites: Vec<Suite> = if which == "all" {
        Suite::ALL.to_vec()
    } else {
        which
            .split(',')
            .map(|name| Suite::parse(name.trim()).ok_or_else(|| Error::Input(format!("unknown suite {name:?}"))))
            .collect::<Result<_>>()?
    };
    let reports = run_suites(&suites, seed)?;
    let all_passed = reports.iter().all(|r| r.passed());
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "suite": r.suite.name(),
                "seed": r.seed,
                "checks": r.checks,
                "passed": r.passed(),
                "failures": r.failures,
            })
        })
        .collect();
    let payload = json!({ "seed": seed, "suites": rows, "all_passed": all_passed });
    Ok(Outcome { input: json!({ "suite": which, "seed": seed }), payload, success: all_passed })
}
