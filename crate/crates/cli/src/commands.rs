use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use semidual_core::battery::{run_battery, OUT_OF_SCOPE};
use semidual_core::corpus::sample_modules;
use semidual_core::module::hom_module;
use semidual_core::relhom::{
    auslander_membership, bass_membership, check_semidualizing, describe_membership,
    foxby_transport, ic_id, pc_pd, proper_ic_resolution, proper_pc_resolution, rel_ext_ic_range,
    rel_ext_range, ExtMode, FoxbyDirection, RelExtResult, Semidualizing, DEFAULT_BOUND,
};
use semidual_core::resolve::{
    bass_numbers, betti_numbers, describe, ext_dims, id_exact, minimal_free_resolution,
    minimal_injective_resolution, pd_exact, tor_dims, AugmentedComplex,
};
use semidual_core::{Error, Module};

use crate::report::Report;
use crate::session::{parse_session, Context};

#[derive(Debug, Parser)]
#[command(
    name = "semidual",
    version,
    about = "Relative homological algebra over finite local algebras"
)]
pub struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Vanishing of Ext and Tor is verified in degrees 1..=BOUND.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND, value_parser = parse_bound)]
    pub bound: usize,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_bound(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(b) if (1..=64).contains(&b) => Ok(b),
        _ => Err(format!("expected an integer in 1..=64, got '{s}'")),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Proper,
    Formula,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Tensor,
    Hom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ResolutionKind {
    Free,
    Injective,
    ProperProjective,
    ProperInjective,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ring invariants: locality, socle, Gorenstein, Loewy length.
    CheckRing { session: PathBuf },
    /// Certify a module as semidualizing.
    CheckSemidualizing {
        session: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// Dimensions of Ext^i(FROM, TO).
    Ext {
        session: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// A single degree; all degrees up to the bound otherwise.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Dimensions of Tor_i(LEFT, RIGHT).
    Tor {
        session: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Ext^i relative to C-projectives.
    Relext {
        session: PathBuf,
        #[arg(long)]
        c: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t = Via::Both)]
        via: Via,
    },
    /// Ext^i relative to C-injectives.
    RelextIc {
        session: PathBuf,
        #[arg(long)]
        c: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t = Via::Both)]
        via: Via,
    },
    /// Projective dimension.
    Pd {
        session: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// Injective dimension.
    Id {
        session: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// P_C-projective dimension.
    Cpd {
        session: PathBuf,
        #[arg(long)]
        c: String,
        #[arg(long)]
        module: String,
    },
    /// I_C-injective dimension.
    Cid {
        session: PathBuf,
        #[arg(long)]
        c: String,
        #[arg(long)]
        module: String,
    },
    /// Membership in the Auslander and Bass classes of C.
    Classify {
        session: PathBuf,
        #[arg(long)]
        c: String,
        #[arg(long)]
        module: String,
    },
    /// Apply C ⊗ - or Hom(C, -) and check the round trip.
    Foxby {
        session: PathBuf,
        #[arg(long)]
        c: String,
        #[arg(long)]
        module: String,
        #[arg(long, value_enum)]
        direction: Direction,
    },
    /// A resolution up to the bound.
    Resolve {
        session: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long, value_enum, default_value_t = ResolutionKind::Free)]
        kind: ResolutionKind,
        /// The semidualizing module for proper resolutions.
        #[arg(long)]
        c: Option<String>,
    },
    /// Run the full property battery.
    VerifyAll {
        session: PathBuf,
        /// Semidualizing modules to use (default R and D).
        #[arg(long)]
        c: Vec<String>,
        /// Random modules per C, in addition to the session's modules.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

impl Command {
    fn session(&self) -> &PathBuf {
        match self {
            Command::CheckRing { session }
            | Command::CheckSemidualizing { session, .. }
            | Command::Ext { session, .. }
            | Command::Tor { session, .. }
            | Command::Relext { session, .. }
            | Command::RelextIc { session, .. }
            | Command::Pd { session, .. }
            | Command::Id { session, .. }
            | Command::Cpd { session, .. }
            | Command::Cid { session, .. }
            | Command::Classify { session, .. }
            | Command::Foxby { session, .. }
            | Command::Resolve { session, .. }
            | Command::VerifyAll { session, .. } => session,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input: unreadable file, parse error, unknown module.
    #[error("{0}")]
    Input(String),
    /// A computation failed in a way that is not the user's input.
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::InvalidField(_)
            | Error::NonMonomialRelation(_)
            | Error::NotCofinite(_)
            | Error::UnitIdeal
            | Error::UnknownVariable(_)
            | Error::RingMismatch
            | Error::NotLocal
            | Error::NotShortExact(_) => CliError::Input(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

/// What a run produced: the rendered output and the exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Outcome {
    let mut stderr = String::new();
    let result = load(cli.command.session(), &mut stderr).and_then(|ctx| {
        let start = Instant::now();
        let mut report = dispatch(&cli.command, &ctx, cli.bound)?;
        report.millis = start.elapsed().as_millis();
        Ok(report)
    });
    match result {
        Ok(report) => Outcome {
            stdout: if cli.json {
                report.json()
            } else {
                report.text()
            },
            stderr,
            code: if report.passed { 0 } else { 1 },
        },
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            Outcome {
                stdout: String::new(),
                stderr,
                code: e.exit_code(),
            }
        }
    }
}

fn load(path: &PathBuf, stderr: &mut String) -> Result<Context, CliError> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let parsed =
        parse_session(&src).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    for w in &parsed.warnings {
        stderr.push_str(&format!("{}: {w}\n", path.display()));
    }
    parsed
        .session
        .build()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn module<'a>(ctx: &'a Context, name: &str) -> Result<&'a Module, CliError> {
    ctx.modules.get(name).ok_or_else(|| {
        let known: Vec<&str> = ctx.modules.keys().map(String::as_str).collect();
        CliError::Input(format!(
            "unknown module '{name}' (known: {})",
            known.join(", ")
        ))
    })
}

/// Certifies C, or marks the report as refused.
fn certify(
    ctx: &Context,
    name: &str,
    bound: usize,
    report: &mut Report,
) -> Result<Option<Semidualizing>, CliError> {
    let c = module(ctx, name)?;
    let cert = check_semidualizing(c, bound)?;
    match &cert.failure {
        None => Ok(Some(Semidualizing::certify(c, bound)?)),
        Some(f) => {
            report.passed = false;
            report.verdict = format!("refused: C = {name} is not semidualizing");
            report.witness(f.to_string());
            Ok(None)
        }
    }
}

fn degrees(i: Option<usize>, bound: usize) -> Vec<usize> {
    match i {
        Some(i) => vec![i],
        None => (0..=bound).collect(),
    }
}

fn vanishing_verdict(name: &str, sep: &str, dims: &[(usize, usize)]) -> String {
    match dims {
        [(i, d)] => format!("dim {name}{sep}{i} = {d}"),
        _ => {
            let nonzero: Vec<String> = dims
                .iter()
                .filter(|(i, d)| *i > 0 && *d > 0)
                .map(|(i, _)| i.to_string())
                .collect();
            if nonzero.is_empty() {
                format!("{name}{sep}i vanishes for 1 ≤ i ≤ {}", dims.len() - 1)
            } else {
                format!("{name}{sep}i nonzero in degrees {}", nonzero.join(", "))
            }
        }
    }
}

fn dispatch(cmd: &Command, ctx: &Context, bound: usize) -> Result<Report, CliError> {
    let ring_name = ctx.session.ring_name();
    let new = |echo: String| Report::new(echo, ring_name.clone(), bound);
    match cmd {
        Command::CheckRing { .. } => {
            let mut r = new("check-ring".into());
            let rep = ctx.ring.ring_report();
            r.dim("dim_k R", rep.dim);
            r.dim("embedding dimension", rep.embedding_dim);
            r.dim("socle dimension", rep.socle_dim);
            r.dim("Loewy length", rep.loewy_length);
            r.passed = rep.is_local;
            r.verdict = match (rep.is_local, rep.is_gorenstein) {
                (false, _) => "not local".into(),
                (true, true) => "local, Gorenstein".into(),
                (true, false) => format!("local, not Gorenstein (type {})", rep.socle_dim),
            };
            let radical: Vec<String> = (0..rep.radical_basis.cols())
                .map(|j| ctx.ring.format_element(&rep.radical_basis.column(j)))
                .collect();
            r.witness(format!("radical spanned by {}", radical.join(", ")));
            Ok(r)
        }
        Command::CheckSemidualizing { module: name, .. } => {
            let mut r = new(format!("check-semidualizing --module {name}"));
            let c = module(ctx, name)?;
            let cert = check_semidualizing(c, bound)?;
            r.dim("dim_k Hom(C,C)", hom_module(c, c)?.dim());
            r.dim("dim_k R", ctx.ring.dim());
            if cert.homothety_bijective {
                let ext = ext_dims(bound, c, c)?;
                for (i, d) in ext.iter().enumerate().skip(1) {
                    r.dim(format!("Ext^{i}(C,C)"), *d);
                }
            }
            r.passed = cert.passes();
            r.verdict = if cert.passes() {
                format!(
                    "semidualizing (homothety bijective, Ext vanishing verified to degree {bound})"
                )
            } else {
                "not semidualizing".into()
            };
            if let Some(f) = &cert.failure {
                r.witness(f.to_string());
            }
            Ok(r)
        }
        Command::Ext { from, to, i, .. } => {
            let echo = match i {
                Some(i) => format!("ext --from {from} --to {to} --i {i}"),
                None => format!("ext --from {from} --to {to}"),
            };
            let mut r = new(echo);
            let (m, n) = (module(ctx, from)?, module(ctx, to)?);
            let ds = degrees(*i, bound);
            let all = ext_dims(*ds.last().unwrap(), m, n)?;
            let dims: Vec<(usize, usize)> = ds.iter().map(|&i| (i, all[i])).collect();
            for &(i, d) in &dims {
                r.dim(format!("Ext^{i}({from},{to})"), d);
            }
            r.verdict = vanishing_verdict("Ext", "^", &dims);
            Ok(r)
        }
        Command::Tor { left, right, i, .. } => {
            let echo = match i {
                Some(i) => format!("tor --left {left} --right {right} --i {i}"),
                None => format!("tor --left {left} --right {right}"),
            };
            let mut r = new(echo);
            let (m, n) = (module(ctx, left)?, module(ctx, right)?);
            let ds = degrees(*i, bound);
            let all = tor_dims(*ds.last().unwrap(), m, n)?;
            let dims: Vec<(usize, usize)> = ds.iter().map(|&i| (i, all[i])).collect();
            for &(i, d) in &dims {
                r.dim(format!("Tor_{i}({left},{right})"), d);
            }
            r.verdict = vanishing_verdict("Tor", "_", &dims);
            Ok(r)
        }
        Command::Relext {
            c,
            i,
            from,
            to,
            via,
            ..
        }
        | Command::RelextIc {
            c,
            i,
            from,
            to,
            via,
            ..
        } => {
            let injective = matches!(cmd, Command::RelextIc { .. });
            let (name, class) = if injective {
                ("relext-ic", "I_C")
            } else {
                ("relext", "P_C")
            };
            let via_name = format!("{via:?}").to_lowercase();
            let mut r = new(format!(
                "{name} --c {c} --i {i} --from {from} --to {to} --via {via_name}"
            ));
            let Some(sd) = certify(ctx, c, bound, &mut r)? else {
                return Ok(r);
            };
            let (m, n) = (module(ctx, from)?, module(ctx, to)?);
            let mode = match via {
                Via::Proper => ExtMode::Proper,
                Via::Formula => ExtMode::Formula,
                Via::Both => ExtMode::Both,
            };
            let result = if injective {
                rel_ext_ic_range(*i, &sd, m, n, mode)
            } else {
                rel_ext_range(*i, &sd, m, n, mode)
            };
            match result {
                Ok(mut all) => relext_report(&mut r, all.swap_remove(*i), class, injective),
                Err(Error::TheoremViolation(msg)) => {
                    r.passed = false;
                    r.verdict = "the two computations disagree".into();
                    r.witness(msg);
                }
                Err(e) => return Err(e.into()),
            }
            Ok(r)
        }
        Command::Pd { module: name, .. } | Command::Id { module: name, .. } => {
            let proj = matches!(cmd, Command::Pd { .. });
            let mut r = new(format!(
                "{} --module {name}",
                if proj { "pd" } else { "id" }
            ));
            let m = module(ctx, name)?;
            let (label, value, numbers, kind) = if proj {
                ("pd", pd_exact(m)?, betti_numbers(m, bound)?, "Betti")
            } else {
                ("id", id_exact(m)?, bass_numbers(m, bound)?, "Bass")
            };
            r.dim_value(label, value);
            for (j, b) in numbers.iter().enumerate() {
                r.dim(format!("{kind} number {j}"), *b);
            }
            r.verdict = format!("{label}({name}) = {value}");
            if !value.is_finite() {
                let what = if proj { "not free" } else { "not injective" };
                r.witness(format!(
                    "{name} is {what}; over an Artinian local ring a finite {label} is 0"
                ));
            }
            Ok(r)
        }
        Command::Cpd {
            c, module: name, ..
        }
        | Command::Cid {
            c, module: name, ..
        } => {
            let proj = matches!(cmd, Command::Cpd { .. });
            let mut r = new(format!(
                "{} --c {c} --module {name}",
                if proj { "cpd" } else { "cid" }
            ));
            let Some(sd) = certify(ctx, c, bound, &mut r)? else {
                return Ok(r);
            };
            let m = module(ctx, name)?;
            let (label, rep) = if proj {
                ("P_C-pd", pc_pd(&sd, m)?)
            } else {
                ("I_C-id", ic_id(&sd, m)?)
            };
            r.dim_value(label, rep.value);
            r.verdict = format!("{label} = {}", rep.value);
            if let Some(w) = rep.witness {
                r.witness(w.to_string());
            }
            Ok(r)
        }
        Command::Classify {
            c, module: name, ..
        } => {
            let mut r = new(format!("classify --c {c} --module {name}"));
            let Some(sd) = certify(ctx, c, bound, &mut r)? else {
                return Ok(r);
            };
            let m = module(ctx, name)?;
            let a = auslander_membership(&sd, m, bound)?;
            let b = bass_membership(&sd, m, bound)?;
            r.dim("μ_M bijective", a.structural_map_bijective);
            r.dim("ν_M bijective", b.structural_map_bijective);
            let sign = |x: bool| if x { "∈" } else { "∉" };
            r.verdict = format!(
                "{name} {} A_C, {name} {} B_C",
                sign(a.member()),
                sign(b.member())
            );
            r.witness(describe_membership(&a));
            r.witness(describe_membership(&b));
            Ok(r)
        }
        Command::Foxby {
            c,
            module: name,
            direction,
            ..
        } => {
            let dir_name = format!("{direction:?}").to_lowercase();
            let mut r = new(format!(
                "foxby --c {c} --module {name} --direction {dir_name}"
            ));
            let Some(sd) = certify(ctx, c, bound, &mut r)? else {
                return Ok(r);
            };
            let m = module(ctx, name)?;
            let dir = match direction {
                Direction::Tensor => FoxbyDirection::Tensor,
                Direction::Hom => FoxbyDirection::Hom,
            };
            let (image, round) = foxby_transport(&sd, m, dir)?;
            let (img_name, map_name) = match dir {
                FoxbyDirection::Tensor => ("C⊗M", "μ_M: M → Hom(C,C⊗M)"),
                FoxbyDirection::Hom => ("Hom(C,M)", "ν_M: C⊗Hom(C,M) → M"),
            };
            r.dim(format!("dim_k {img_name}"), image.dim());
            r.dim(format!("rank {map_name}"), round.rank());
            r.verdict = format!(
                "round trip {} {}",
                map_name.split(':').next().unwrap_or(map_name),
                if round.is_bijective() {
                    "bijective"
                } else {
                    "not bijective"
                }
            );
            if !round.is_bijective() {
                r.witness(format!(
                    "{map_name} has source dim {}, target dim {}, rank {}",
                    round.src.dim(),
                    round.dst.dim(),
                    round.rank()
                ));
            }
            Ok(r)
        }
        Command::Resolve {
            module: name,
            kind,
            c,
            ..
        } => {
            let kind_name = format!("{kind:?}")
                .chars()
                .flat_map(|ch| {
                    if ch.is_uppercase() {
                        vec!['-', ch.to_ascii_lowercase()]
                    } else {
                        vec![ch]
                    }
                })
                .skip(1)
                .collect::<String>();
            let echo = match c {
                Some(c) => format!("resolve --module {name} --kind {kind_name} --c {c}"),
                None => format!("resolve --module {name} --kind {kind_name}"),
            };
            let mut r = new(echo);
            let m = module(ctx, name)?;
            let complex = match kind {
                ResolutionKind::Free => minimal_free_resolution(m, bound)?,
                ResolutionKind::Injective => minimal_injective_resolution(m, bound)?,
                ResolutionKind::ProperProjective | ResolutionKind::ProperInjective => {
                    let Some(c) = c else {
                        return Err(CliError::Input("proper resolutions need --c".into()));
                    };
                    let Some(sd) = certify(ctx, c, bound, &mut r)? else {
                        return Ok(r);
                    };
                    if *kind == ResolutionKind::ProperProjective {
                        let x = proper_pc_resolution(&sd, m, bound)?;
                        let h = x.hom_from_c(sd.module())?;
                        r.dim(
                            "Hom(C,X⁺) exact",
                            h.homology_dims(bound as isize - 1).iter().all(|&d| d == 0),
                        );
                        x.complex
                    } else {
                        proper_ic_resolution(&sd, m, bound)?.complex
                    }
                }
            };
            resolution_report(&mut r, &complex, bound);
            Ok(r)
        }
        Command::VerifyAll {
            c, samples, seed, ..
        } => {
            let cs: Vec<String> = if c.is_empty() {
                vec!["R".into(), "D".into()]
            } else {
                c.clone()
            };
            let mut r = new(format!(
                "verify-all --c {} --samples {samples} --seed {seed}",
                cs.join(",")
            ));
            let mut failing = 0;
            for cname in &cs {
                let Some(sd) = certify(ctx, cname, bound, &mut r)? else {
                    return Ok(r);
                };
                let mut sample: Vec<Module> = ctx
                    .session
                    .modules
                    .keys()
                    .map(|n| ctx.modules[n].clone())
                    .filter(|m| !m.is_zero())
                    .collect();
                sample.extend(sample_modules(&ctx.ring, *seed, *samples, 6));
                for outcome in run_battery(&sd, &sample, bound)? {
                    let name = outcome.property.name();
                    r.dim(
                        format!("C={cname}: {name}"),
                        format!(
                            "{}/{} passed, {} vacuous",
                            outcome.passed, outcome.checked, outcome.vacuous
                        ),
                    );
                    if !outcome.holds() {
                        failing += 1;
                    }
                    for f in &outcome.failures {
                        r.witness(format!("C={cname}: {name}: {f}"));
                    }
                }
            }
            for item in OUT_OF_SCOPE {
                r.witness(format!("not applicable (Artinian model): {item}"));
            }
            r.passed = failing == 0;
            r.verdict = if failing == 0 {
                "all properties hold on the sample".into()
            } else {
                format!("{failing} properties fail")
            };
            Ok(r)
        }
    }
}

fn relext_report(r: &mut Report, res: RelExtResult, class: &str, injective: bool) {
    let i = res.i;
    let (proper_src, formula_src) = if injective {
        (
            "Hom(M, Y) for the proper I_C-resolution Y of N",
            "Ext(C⊗M, C⊗N)",
        )
    } else {
        (
            "Hom(X, N) for the proper P_C-resolution X of M",
            "Ext(Hom(C,M), Hom(C,N))",
        )
    };
    if let Some(d) = res.dim_via_proper {
        r.dim(format!("Ext^{i}_{class}(M,N) via {proper_src}"), d);
    }
    if let Some(d) = res.dim_via_formula {
        r.dim(format!("Ext^{i}_{class}(M,N) via {formula_src}"), d);
    }
    if let Some(d) = res.dim_via_injective {
        r.dim(
            format!("Ext^{i}(C⊗M,C⊗N) via an injective resolution of C⊗N"),
            d,
        );
    }
    let dim = res.dim_via_proper.or(res.dim_via_formula).unwrap_or(0);
    r.verdict = match &res.comparison {
        Some(_) => format!("dim Ext^{i}_{class}(M,N) = {dim}, paths agree"),
        None => format!("dim Ext^{i}_{class}(M,N) = {dim}"),
    };
    if let Some(cmp) = &res.comparison {
        let what = if injective {
            "Hom(M,Hom(C,D)) → Hom(C⊗M,D)"
        } else {
            "Hom(C,N) → Hom(C⊗R,N)"
        };
        r.witness(format!(
            "comparison map {what}: {}×{} matrix, {}, {}",
            cmp.map.dst.dim(),
            cmp.map.src.dim(),
            if cmp.bijective {
                "bijective"
            } else {
                "not bijective"
            },
            if cmp.intertwines {
                "commutes with the differentials"
            } else {
                "does not commute with the differentials"
            }
        ));
    }
}

fn resolution_report(r: &mut Report, x: &AugmentedComplex, bound: usize) {
    let cohom = matches!(
        x.orientation,
        semidual_core::resolve::Orientation::Cohomological
    );
    for (j, b) in x.ranks.iter().enumerate() {
        let name = if cohom {
            format!("rank X^{j}")
        } else {
            format!("rank X_{j}")
        };
        r.dim(name, *b);
    }
    r.dim("coefficient dim", x.coefficient.dim());
    let top = (x.ranks.len() as isize - 2).max(-1).min(bound as isize - 1);
    let h = x.homology_dims(top);
    for (j, d) in h.iter().enumerate() {
        r.dim(format!("H_{}", j as isize - 1), *d);
    }
    let nonzero: Vec<String> = h
        .iter()
        .enumerate()
        .filter(|(_, d)| **d > 0)
        .map(|(j, _)| (j as isize - 1).to_string())
        .collect();
    r.verdict = if nonzero.is_empty() {
        format!(
            "exact through degree {top}{}",
            if x.complete {
                " (resolution complete)"
            } else {
                ""
            }
        )
    } else {
        format!("homology in degrees {}", nonzero.join(", "))
    };
    let text = describe(x);
    for line in text.lines().take(3) {
        if line.len() <= 200 {
            r.witness(line.to_string());
        }
    }
}
