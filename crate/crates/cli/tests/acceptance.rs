//! The acceptance criteria, one PASS/FAIL line each.

mod common;
#[path = "../../core/tests/common/mod.rs"]
mod oracle;

use std::sync::Arc;
use std::time::{Duration, Instant};

use semidual_core::battery::{run_property, Property, OUT_OF_SCOPE};
use semidual_core::corpus::{corpus_rings, sample_modules};
use semidual_core::relhom::{
    bass_membership, check_semidualizing, rel_ext_range, ExtMode, Semidualizing,
    SemidualizingFailure,
};
use semidual_core::resolve::ext_dims;
use semidual_core::{Algebra, Module};

const BOUND: usize = 5;
const SAMPLES: usize = 20;
const SEED: u64 = 7;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn certified(ring: &Arc<Algebra>) -> Vec<(&'static str, Semidualizing)> {
    vec![
        (
            "R",
            Semidualizing::certify(&Module::regular(ring.clone()), BOUND).unwrap(),
        ),
        (
            "D",
            Semidualizing::certify(&Module::dualizing(ring.clone()), BOUND).unwrap(),
        ),
    ]
}

fn certificates() -> Verdict {
    let start = Instant::now();
    let ring = semidual_core::corpus::r1();
    let cert = |m: &Module| check_semidualizing(m, BOUND).unwrap();
    let r = Module::regular(ring.clone());
    let d = Module::dualizing(ring.clone());
    let k = Module::residue_field(ring.clone()).unwrap();
    let m = Module::maximal_ideal(ring.clone()).unwrap();
    let dr = Module::direct_sum(&[d.clone(), r.clone()]).unwrap();
    let passes = cert(&r).passes() && cert(&d).passes();
    let not_inj = |m: &Module| {
        matches!(
            cert(m).failure,
            Some(SemidualizingFailure::HomothetyNotInjective { .. })
        )
    };
    let not_surj = matches!(
        cert(&dr).failure,
        Some(SemidualizingFailure::HomothetyNotSurjective { .. })
    );
    let elapsed = start.elapsed();
    verdict(
        passes && not_inj(&k) && not_inj(&m) && not_surj && elapsed < Duration::from_secs(5),
        format!("R, D pass; k, m not injective; D⊕R not surjective; {elapsed:.2?}"),
    )
}

fn dual_path() -> Verdict {
    let start = Instant::now();
    let (mut checked, mut failed) = (0, 0);
    for (name, ring) in corpus_rings() {
        let modules = sample_modules(&ring, SEED, 2 * SAMPLES, 6);
        for (cname, sd) in certified(&ring) {
            for pair in modules.chunks(2) {
                checked += 1;
                let good = match rel_ext_range(4, &sd, &pair[0], &pair[1], ExtMode::Both) {
                    Ok(rs) => rs.iter().all(|r| {
                        r.agree
                            && r.dim_via_proper == r.dim_via_formula
                            && r.comparison.as_ref().is_some_and(|c| c.bijective)
                    }),
                    Err(_) => false,
                };
                if !good {
                    failed += 1;
                    eprintln!(
                        "  dual path fails on {name}, C={cname}, ({}, {})",
                        pair[0].label(),
                        pair[1].label()
                    );
                }
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        failed == 0 && elapsed < Duration::from_secs(120),
        format!("{checked} pairs, {failed} disagreements, {elapsed:.2?}"),
    )
}

fn goldens() -> Verdict {
    // Frozen from the brute-force oracle: Hom(D, k) = k² over R1, so the
    // relative side is 4·β_i(k), and β_i(k) = 2^i.
    const REL: [usize; 5] = [4, 8, 16, 32, 64];
    const ABS: [usize; 5] = [1, 2, 4, 8, 16];
    let o = oracle::r1();
    let (ok, od) = (o.residue(), o.dual(&o.regular()));
    let h = o.hom(&od, &ok).n;
    let betti = o.betti(&ok, 4);
    let oracle_agrees = betti == ABS && betti.iter().map(|b| h * h * b).eq(REL);

    let ring = semidual_core::corpus::r1();
    let k = Module::residue_field(ring.clone()).unwrap();
    let sd = Semidualizing::certify(&Module::dualizing(ring), BOUND).unwrap();
    let rel = rel_ext_range(4, &sd, &k, &k, ExtMode::Both).unwrap();
    let proper: Vec<usize> = rel.iter().map(|r| r.dim_via_proper.unwrap()).collect();
    let formula: Vec<usize> = rel.iter().map(|r| r.dim_via_formula.unwrap()).collect();
    let abs = ext_dims(4, &k, &k).unwrap();
    verdict(
        oracle_agrees && proper == REL && formula == REL && abs == ABS,
        format!("Ext_P_D(k,k) = {proper:?}, Ext(k,k) = {abs:?}"),
    )
}

/// Runs `props` for every ring and C ∈ {R, D} on 20 random modules plus C
/// and C ⊕ C.
fn battery(props: &[Property], min_checked: usize) -> Verdict {
    let mut checked = vec![0; props.len()];
    let mut failures = Vec::new();
    for (name, ring) in corpus_rings() {
        let modules = sample_modules(&ring, SEED, SAMPLES, 6);
        for (cname, sd) in certified(&ring) {
            let sample = semidual_core::battery::augmented_sample(&sd, &modules);
            for (j, &p) in props.iter().enumerate() {
                let out = run_property(p, &sd, &sample, BOUND).unwrap();
                checked[j] += out.checked;
                failures.extend(
                    out.failures
                        .iter()
                        .map(|f| format!("{name}, C={cname}: {}: {f}", p.name())),
                );
            }
        }
    }
    for f in &failures {
        eprintln!("  {f}");
    }
    let summary: Vec<String> = props
        .iter()
        .zip(&checked)
        .map(|(p, c)| format!("{} ×{c}", p.name()))
        .collect();
    verdict(
        failures.is_empty() && checked.iter().all(|&c| c >= min_checked),
        format!("{}; {} failures", summary.join(", "), failures.len()),
    )
}

fn relative_equals_absolute_on_bass_members() -> Verdict {
    let (mut checked, mut failures) = (0, Vec::new());
    for (name, ring) in corpus_rings() {
        let d = Module::dualizing(ring.clone());
        for (cname, sd) in certified(&ring) {
            let c = sd.module().clone();
            let members = [c.clone(), c.power(2), d.clone(), d.power(2)];
            if !members
                .iter()
                .all(|m| bass_membership(&sd, m, BOUND).unwrap().member())
            {
                failures.push(format!("{name}, C={cname}: candidate outside B_C"));
                continue;
            }
            for m in &members {
                for n in &members {
                    let rel = rel_ext_range(4, &sd, m, n, ExtMode::Proper).unwrap();
                    let abs = ext_dims(4, m, n).unwrap();
                    for (i, r) in rel.iter().enumerate() {
                        checked += 1;
                        if r.dim_via_proper != Some(abs[i]) {
                            failures.push(format!("{name}, C={cname}, degree {i}"));
                        }
                    }
                }
            }
        }
    }
    for f in &failures {
        eprintln!("  {f}");
    }
    verdict(
        failures.is_empty(),
        format!("{checked} comparisons, {} failures", failures.len()),
    )
}

fn cli() -> Verdict {
    let bad = common::check_goldens();
    for b in &bad {
        eprintln!("  {b}");
    }
    let usage = common::semidual(&["pd", "@r1", "--module", "nope"]).code == 2
        && common::semidual(&["pd", "@r1"]).code == 2
        && common::semidual(&["check-semidualizing", "@r1", "--module", "k"]).code == 1;
    let dir = std::env::temp_dir().join(format!("semidual-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.toml");
    std::fs::write(
        &path,
        "field = 2\n\n[ring]\nvars = [\"x\"]\nrelations = [\"x + 1\"]\n",
    )
    .unwrap();
    let parse = common::semidual(&["check-ring", path.to_str().unwrap()]);
    let located = parse.code == 2 && parse.stderr.contains("line 5, column 14");
    let _ = std::fs::remove_dir_all(&dir);
    verdict(
        bad.is_empty() && usage && located,
        format!(
            "{} golden cases, {} mismatches; exit codes {}; parse error located: {located}",
            common::CASES.len(),
            bad.len(),
            if usage { "ok" } else { "wrong" }
        ),
    )
}

fn out_of_scope_listed() -> Verdict {
    let r = common::semidual(&["verify-all", "@r2", "--samples", "2", "--bound", "2"]);
    let listed = OUT_OF_SCOPE.iter().all(|item| {
        r.stdout
            .contains(&format!("not applicable (Artinian model): {item}"))
    });
    verdict(
        r.code == 0 && listed,
        format!("{} items listed", OUT_OF_SCOPE.len()),
    )
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("semidualizing certificates over R1", certificates),
        ("dual-path relative Ext", dual_path),
        ("golden relative Ext over R1", goldens),
        ("dimension equalities", || {
            battery(&[Property::DimensionEqualities], 20)
        }),
        ("class transfer and finite P_C-pd in B_C", || {
            battery(
                &[Property::ClassTransfer, Property::FiniteDimensionInBass],
                1,
            )
        }),
        ("evaluation/coevaluation identities", || {
            battery(&[Property::CompositionIdentities], 100)
        }),
        ("exactness profiles", || {
            battery(&[Property::ExactnessProfiles], 20)
        }),
        ("functional test, padding, shifting, two-of-three", || {
            battery(
                &[
                    Property::FunctionalCProjectivity,
                    Property::PaddingInvariance,
                    Property::DimensionShifting,
                    Property::TwoOfThree,
                ],
                20,
            )
        }),
        (
            "relative = absolute Ext on Bass members",
            relative_equals_absolute_on_bass_members,
        ),
        ("command line", cli),
        ("out-of-scope results listed", out_of_scope_listed),
    ];
    let mut failed = Vec::new();
    for (n, (name, run)) in criteria.into_iter().enumerate() {
        let v = run();
        println!(
            "{} criterion {:>2}: {name}: {}",
            if v.ok { "PASS" } else { "FAIL" },
            n + 1,
            v.detail
        );
        if !v.ok {
            failed.push(n + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
