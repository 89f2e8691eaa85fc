//! Verification suites behind `aztec verify`.
//!
//! Each check compares an expected exact value against a computed one. Checks
//! whose size exceeds a configured cutoff are reported as skipped, never as
//! failures. Report order is fixed by suite and parameter order.

use std::collections::HashSet;
use std::fmt;
use std::time::Instant;

use aztec_core::aztec::{count_tilings, enumerate_tilings, paths_to_tiling, tiling_to_paths, CountMethod};
use aztec_core::hankel::{closed_form, reconstruct_sequence, HankelKind, HankelMatrix};
use aztec_core::lgv::{
    enumerate_family, phi, phi_inverse, rho, rho_inverse, signed_count, swap_site, tail_swap, AnchorScheme,
    ConfigurationSpace, SchemeKind, SignedConfiguration,
};
use aztec_core::schroeder::{large_schroeder_sequence, small_schroeder_sequence};
use aztec_core::{pow2, BigCount, Result};
use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Hankel,
    Bijections,
    Involution,
    Tilings,
}

pub const RANDOM_CONFIGURATIONS: usize = 1000;

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_enum_n: usize,
    pub max_family_n: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub params: String,
    #[serde(with = "aztec_core::decimal")]
    pub expected: BigCount,
    #[serde(with = "aztec_core::decimal")]
    pub actual: BigCount,
    pub pass: bool,
    pub elapsed_us: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Skipped {
    pub name: String,
    pub params: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub skipped: Vec<Skipped>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    fn run(&mut self, name: &str, params: String, body: impl FnOnce() -> Result<(BigCount, BigCount)>) {
        let started = Instant::now();
        let (expected, actual, error) = match body() {
            Ok((e, a)) => (e, a, None),
            Err(e) => (BigCount::from(0), BigCount::from(0), Some(e.to_string())),
        };
        let pass = error.is_none() && expected == actual;
        self.checks.push(Check {
            name: name.into(),
            params,
            expected,
            actual,
            pass,
            elapsed_us: started.elapsed().as_micros(),
            error,
        });
    }

    fn skip(&mut self, name: &str, params: String, reason: String) {
        self.skipped.push(Skipped {
            name: name.into(),
            params,
            reason,
        });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<28} {:<14} {:>24} {:>24} {:<6} {:>12}",
            "check", "params", "expected", "actual", "status", "elapsed_us"
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<28} {:<14} {:>24} {:>24} {:<6} {:>12}",
                c.name,
                c.params,
                c.expected,
                c.actual,
                if c.pass { "PASS" } else { "FAIL" },
                c.elapsed_us
            )?;
            if let Some(e) = &c.error {
                writeln!(f, "    error: {e}")?;
            }
        }
        for s in &self.skipped {
            writeln!(f, "{:<28} {:<14} SKIPPED: {}", s.name, s.params, s.reason)?;
        }
        writeln!(
            f,
            "{} checks, {} passed, {} failed, {} skipped",
            self.checks.len(),
            self.checks.len() - self.failures(),
            self.failures(),
            self.skipped.len()
        )
    }
}

fn big(v: usize) -> BigCount {
    BigCount::from(v)
}

pub fn run_suite(suite: Suite, max_n: usize, limits: Limits) -> VerificationReport {
    let mut report = VerificationReport::default();
    let suites: &[Suite] = match suite {
        Suite::All => &[Suite::Hankel, Suite::Tilings, Suite::Bijections, Suite::Involution],
        Suite::Hankel => &[Suite::Hankel],
        Suite::Tilings => &[Suite::Tilings],
        Suite::Bijections => &[Suite::Bijections],
        Suite::Involution => &[Suite::Involution],
    };
    for s in suites {
        match s {
            Suite::Hankel => hankel_suite(&mut report, max_n),
            Suite::Tilings => tiling_suite(&mut report, max_n, limits),
            Suite::Bijections => bijection_suite(&mut report, max_n, limits),
            Suite::Involution => involution_suite(&mut report, max_n, limits),
            Suite::All => unreachable!(),
        }
    }
    report
}

fn hankel_suite(report: &mut VerificationReport, max_n: usize) {
    for kind in HankelKind::ALL {
        for n in 1..=max_n {
            report.run(&format!("det-{kind}"), format!("n={n}"), || {
                Ok((closed_form(kind, n), HankelMatrix::of_kind(kind, n)?.determinant()))
            });
        }
    }
    for n in 1..=max_n {
        report.run("det-h1-vs-2^n-det-g1", format!("n={n}"), || {
            let h = HankelMatrix::of_kind(HankelKind::H1, n)?.determinant();
            let g = HankelMatrix::of_kind(HankelKind::G1, n)?.determinant();
            Ok((h, g * pow2(n as u64)))
        });
    }
    let len = 2 * max_n;
    let profile = |kind| (1..=max_n).map(|n| closed_form(kind, n)).collect::<Vec<_>>();
    report.run("reconstruct-large", format!("len={len}"), || {
        let got = reconstruct_sequence(&profile(HankelKind::H0), &profile(HankelKind::H1), len)?;
        let want = large_schroeder_sequence(len);
        Ok((big(len), big(got.iter().zip(&want).filter(|(a, b)| a == b).count())))
    });
    report.run("reconstruct-small", format!("len={len}"), || {
        let got = reconstruct_sequence(&profile(HankelKind::G0), &profile(HankelKind::G1), len)?;
        let want = small_schroeder_sequence(len);
        Ok((big(len), big(got.iter().zip(&want).filter(|(a, b)| a == b).count())))
    });
}

fn tiling_suite(report: &mut VerificationReport, max_n: usize, limits: Limits) {
    for n in 1..=max_n {
        if n > limits.max_enum_n {
            report.skip(
                "tilings-enumeration",
                format!("n={n}"),
                format!("exceeds --max-enum-n {}", limits.max_enum_n),
            );
            continue;
        }
        report.run("tilings-enumeration", format!("n={n}"), || {
            Ok((
                count_tilings(n, CountMethod::Formula, limits.max_enum_n)?,
                count_tilings(n, CountMethod::Enumeration, limits.max_enum_n)?,
            ))
        });
    }
    for n in 1..=max_n {
        report.run("tilings-determinant", format!("n={n}"), || {
            Ok((
                count_tilings(n, CountMethod::Formula, 0)?,
                count_tilings(n, CountMethod::Determinant, 0)?,
            ))
        });
    }
    let a = |n: usize| count_tilings(n, CountMethod::Determinant, 0);
    for n in 2..=max_n {
        report.run("recurrence-2^n", format!("n={n}"), || {
            Ok((a(n)?, pow2(n as u64) * a(n - 1)?))
        });
    }
    for n in 3..=max_n {
        report.run("recurrence-condensation", format!("n={n}"), || {
            let prev = a(n - 1)?;
            Ok((a(n)? * a(n - 2)?, &prev * &prev * 2))
        });
    }
}

fn bijection_suite(report: &mut VerificationReport, max_n: usize, limits: Limits) {
    for n in 1..=max_n {
        if n > limits.max_enum_n {
            report.skip(
                "psi-round-trip",
                format!("n={n}"),
                format!("exceeds --max-enum-n {}", limits.max_enum_n),
            );
            continue;
        }
        report.run("psi-round-trip", format!("n={n}"), || {
            let tilings = enumerate_tilings(n, limits.max_enum_n)?;
            let mut images = HashSet::new();
            let mut good = 0usize;
            for t in &tilings {
                let f = tiling_to_paths(t)?;
                if f.is_nonintersecting() && &paths_to_tiling(&f)? == t && images.insert(f) {
                    good += 1;
                }
            }
            Ok((big(tilings.len()), big(good)))
        });
    }
    for n in 2..=max_n {
        if n > limits.max_family_n {
            let reason = format!("exceeds --max-family-n {}", limits.max_family_n);
            report.skip("phi-image", format!("n={n}"), reason.clone());
            report.skip("rho-image", format!("n={n}"), reason);
            continue;
        }
        report.run("phi-image", format!("n={n}"), || {
            framing_check(n, SchemeKind::Omega, limits.max_family_n, phi, phi_inverse)
        });
        report.run("rho-image", format!("n={n}"), || {
            framing_check(n, SchemeKind::PiStar, limits.max_family_n, rho, rho_inverse)
        });
    }
}

/// Expected: size of the target family set. Actual: number of domain
/// families whose image is new, lies in the target set and maps back.
fn framing_check(
    n: usize,
    target: SchemeKind,
    cutoff: usize,
    forward: fn(&aztec_core::lgv::PathFamily) -> Result<aztec_core::lgv::PathFamily>,
    backward: fn(&aztec_core::lgv::PathFamily) -> Result<aztec_core::lgv::PathFamily>,
) -> Result<(BigCount, BigCount)> {
    let domain = enumerate_family(AnchorScheme::new(SchemeKind::Pi, n - 1), cutoff)?;
    let codomain: HashSet<_> = enumerate_family(AnchorScheme::new(target, n), cutoff)?
        .into_iter()
        .collect();
    let mut seen = HashSet::new();
    let mut good = 0usize;
    for f in &domain {
        let g = forward(f)?;
        if codomain.contains(&g) && &backward(&g)? == f && seen.insert(g) {
            good += 1;
        }
    }
    Ok((big(codomain.len()), big(good)))
}

fn involution_holds(c: &SignedConfiguration) -> bool {
    let out = tail_swap(c);
    if &tail_swap(&out) != c {
        return false;
    }
    let disjoint_identity = c.sigma().is_identity() && c.is_nonintersecting();
    if &out == c {
        disjoint_identity
    } else {
        !disjoint_identity && out.sign() == -c.sign() && swap_site(&out) == swap_site(c)
    }
}

fn involution_suite(report: &mut VerificationReport, max_n: usize, limits: Limits) {
    for n in 1..=max_n {
        if n > limits.max_family_n {
            let reason = format!("exceeds --max-family-n {}", limits.max_family_n);
            report.skip("signed-count-pi", format!("n={n}"), reason.clone());
            report.skip("signed-count-omega", format!("n={n}"), reason.clone());
            report.skip("tail-swap-involution", format!("n={n}"), reason);
            continue;
        }
        report.run("signed-count-pi", format!("n={n}"), || {
            Ok((
                HankelMatrix::of_kind(HankelKind::H1, n)?.determinant(),
                signed_count(SchemeKind::Pi, n, limits.max_family_n)?,
            ))
        });
        report.run("signed-count-omega", format!("n={n}"), || {
            Ok((
                HankelMatrix::of_kind(HankelKind::G1, n)?.determinant(),
                signed_count(SchemeKind::Omega, n, limits.max_family_n)?,
            ))
        });
        if n <= 2 {
            report.run("tail-swap-involution", format!("n={n} all"), || {
                let space = ConfigurationSpace::new(AnchorScheme::new(SchemeKind::Pi, n), limits.max_family_n)?;
                let (mut total, mut good) = (0usize, 0usize);
                space.for_each(|c| {
                    total += 1;
                    good += usize::from(involution_holds(c));
                });
                Ok((big(total), big(good)))
            });
        } else {
            report.run("tail-swap-involution", format!("n={n} random"), || {
                let space = ConfigurationSpace::new(AnchorScheme::new(SchemeKind::Pi, n), limits.max_family_n)?;
                let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
                let good = (0..RANDOM_CONFIGURATIONS)
                    .filter(|_| involution_holds(&space.sample(&mut rng)))
                    .count();
                Ok((big(RANDOM_CONFIGURATIONS), big(good)))
            });
        }
    }
}
