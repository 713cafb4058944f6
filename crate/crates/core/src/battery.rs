//! The property battery: every relative-homological identity the engine
//! implements, evaluated over a sample of modules for one semidualizing C.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::module::{tensor_module, Module, ModuleHom};
use crate::relhom::{
    acabs_check, auslander_membership, bass_membership, bcabs_check, charcproj_test,
    composition_identities, dimension_shift_check, dimension_vanishing_check,
    exactness_equivalence_check, ic_id, pc_pd, proper_ic_resolution, proper_pc_resolution,
    rel_ext_ic_range, rel_ext_range, remove_check, syzygy_cproj_invariance, two_of_three_check,
    BcAbsOutcome, ExtMode, Semidualizing,
};
use crate::resolve::{id_exact, pd_exact};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Property {
    DualPathExt,
    DimensionEqualities,
    ClassTransfer,
    CompositionIdentities,
    ExactnessProfiles,
    FunctionalCProjectivity,
    PaddingInvariance,
    RelativeEqualsAbsolute,
    DimensionShifting,
    FiniteDimensionInBass,
    TwoOfThree,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::DualPathExt,
        Property::DimensionEqualities,
        Property::ClassTransfer,
        Property::CompositionIdentities,
        Property::ExactnessProfiles,
        Property::FunctionalCProjectivity,
        Property::PaddingInvariance,
        Property::RelativeEqualsAbsolute,
        Property::DimensionShifting,
        Property::FiniteDimensionInBass,
        Property::TwoOfThree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::DualPathExt => "dual-path relative Ext",
            Property::DimensionEqualities => "dimension equalities",
            Property::ClassTransfer => "Auslander/Bass class transfer",
            Property::CompositionIdentities => "evaluation/coevaluation identities",
            Property::ExactnessProfiles => "proper resolution exactness",
            Property::FunctionalCProjectivity => "functional C-projectivity",
            Property::PaddingInvariance => "syzygy padding invariance",
            Property::RelativeEqualsAbsolute => "relative = absolute Ext on classes",
            Property::DimensionShifting => "dimension shifting",
            Property::FiniteDimensionInBass => "finite P_C-pd lies in B_C",
            Property::TwoOfThree => "two-of-three",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Property::DualPathExt => {
                "Ext_{P_C}(M,N) ≅ Ext(Hom(C,M),Hom(C,N)) and Ext_{I_C}(M,N) ≅ Ext(C⊗M,C⊗N) via explicit bijections"
            }
            Property::DimensionEqualities => "pd(M) = P_C-pd(C⊗M) and I_C-id(M) = id(C⊗M)",
            Property::ClassTransfer => "M ∈ B_C ⇔ Hom(C,M) ∈ A_C and M ∈ A_C ⇔ C⊗M ∈ B_C",
            Property::CompositionIdentities => "Hom(C,ν)∘μ = id, ν∘(C⊗μ) = id, and the conditional inverses",
            Property::ExactnessProfiles => {
                "proper resolutions are exact below n iff ν (μ) is bijective and Tor (Ext) vanishes below n; class members resolve exactly"
            }
            Property::FunctionalCProjectivity => "Ext¹_{P_C}(M,K₀) = 0 iff M is C-projective; P_C-pd agrees with relative Ext vanishing",
            Property::PaddingInvariance => "C-projectivity of Ωₙ does not depend on the proper resolution",
            Property::RelativeEqualsAbsolute => "on B_C (A_C) relative Ext over P_C (I_C) equals absolute Ext",
            Property::DimensionShifting => "Ext^i_{P_C}(M,N) ≅ Ext^{i-n}_{P_C}(Ωₙ,N)",
            Property::FiniteDimensionInBass => "finite P_C-pd forces membership in B_C",
            Property::TwoOfThree => {
                "in a short exact sequence, finite P_C-pd, finite I_C-id, A_C and B_C pass from two terms to the third"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub property: Property,
    pub checked: usize,
    pub passed: usize,
    /// Instances skipped because a hypothesis did not hold.
    pub vacuous: usize,
    pub failures: Vec<String>,
}

impl PropertyOutcome {
    fn new(property: Property) -> PropertyOutcome {
        PropertyOutcome {
            property,
            checked: 0,
            passed: 0,
            vacuous: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The sample extended by C and C ⊕ C, so that every property sees
/// C-projective inputs.
pub fn augmented_sample(sd: &Semidualizing, modules: &[Module]) -> Vec<Module> {
    let mut out = modules.to_vec();
    out.push(sd.module().clone().with_label("C"));
    out.push(sd.module().power(2).with_label("C⊕C"));
    out
}

fn pairs(modules: &[Module]) -> impl Iterator<Item = (&Module, &Module)> {
    let n = modules.len();
    (0..n).map(move |j| (&modules[j], &modules[(j + 1) % n]))
}

fn violated<T>(r: Result<T, Error>) -> Result<Option<T>, Error> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::TheoremViolation(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Runs one property over `modules` (not augmented) with vanishing bound
/// `bound`; relative Ext is compared in degrees `0..bound`.
pub fn run_property(
    property: Property,
    sd: &Semidualizing,
    modules: &[Module],
    bound: usize,
) -> Result<PropertyOutcome, Error> {
    let mut out = PropertyOutcome::new(property);
    let top = bound.saturating_sub(1).max(1);
    match property {
        Property::DualPathExt => {
            for (m, n) in pairs(modules) {
                let p = violated(rel_ext_range(top, sd, m, n, ExtMode::Both))?;
                out.record(p.is_some(), || {
                    format!("P_C side disagrees for ({}, {})", m.label(), n.label())
                });
                let i = violated(rel_ext_ic_range(top, sd, m, n, ExtMode::Both))?;
                out.record(i.is_some(), || {
                    format!("I_C side disagrees for ({}, {})", m.label(), n.label())
                });
            }
        }
        Property::DimensionEqualities => {
            for m in modules {
                let t = tensor_module(sd.module(), m)?.module;
                let (a, b) = (pd_exact(m)?, pc_pd(sd, &t)?.value);
                out.record(a == b, || {
                    format!("{}: pd {a} vs P_C-pd(C⊗M) {b}", m.label())
                });
                let (a, b) = (ic_id(sd, m)?.value, id_exact(&t)?);
                out.record(a == b, || {
                    format!("{}: I_C-id {a} vs id(C⊗M) {b}", m.label())
                });
            }
        }
        Property::ClassTransfer => {
            for m in modules {
                let ok = remove_check(sd, m, bound)?.holds();
                out.record(ok, || format!("{}: class transfer fails", m.label()));
            }
        }
        Property::CompositionIdentities => {
            for m in modules {
                let r = composition_identities(sd, m)?;
                out.record(r.hold(), || format!("{}: {r:?}", m.label()));
            }
        }
        Property::ExactnessProfiles => {
            for m in modules {
                let ok = exactness_equivalence_check(sd, m, bound)?;
                out.record(ok, || {
                    format!(
                        "{}: exactness does not match ν/μ characterization",
                        m.label()
                    )
                });
                if bass_membership(sd, m, bound)?.member() {
                    let x = proper_pc_resolution(sd, m, bound)?;
                    let exact = x
                        .complex
                        .homology_dims(bound as isize - 1)
                        .iter()
                        .all(|&h| h == 0);
                    out.record(exact, || {
                        format!("{}: Bass member with inexact proper resolution", m.label())
                    });
                } else {
                    out.vacuous += 1;
                }
                if auslander_membership(sd, m, bound)?.member() {
                    let y = proper_ic_resolution(sd, m, bound)?;
                    let exact = y
                        .complex
                        .homology_dims(bound as isize - 1)
                        .iter()
                        .all(|&h| h == 0);
                    out.record(exact, || {
                        format!(
                            "{}: Auslander member with inexact proper resolution",
                            m.label()
                        )
                    });
                } else {
                    out.vacuous += 1;
                }
            }
        }
        Property::FunctionalCProjectivity => {
            for m in modules {
                out.record(charcproj_test(sd, m)?, || {
                    format!("{}: Ext¹(M,K₀) test disagrees", m.label())
                });
                let ok = dimension_vanishing_check(sd, m, modules)?;
                out.record(ok, || {
                    format!(
                        "{}: P_C-pd disagrees with relative Ext vanishing",
                        m.label()
                    )
                });
            }
        }
        Property::PaddingInvariance => {
            for (idx, m) in modules.iter().enumerate() {
                for n in 1..=3 {
                    let pad_degree = 1 + (idx + n) % 3;
                    let pad_rank = idx % 3;
                    let ok = syzygy_cproj_invariance(sd, m, n, pad_degree, pad_rank)?;
                    out.record(ok, || {
                        format!("{}: Ω_{n} changes under padding at {pad_degree}", m.label())
                    });
                }
            }
        }
        Property::RelativeEqualsAbsolute => {
            for (m, n) in pairs(modules) {
                for i in 0..=top {
                    for (side, r) in [
                        ("B_C", bcabs_check(i, sd, m, n)?),
                        ("A_C", acabs_check(i, sd, m, n)?),
                    ] {
                        match r {
                            BcAbsOutcome::Vacuous => out.vacuous += 1,
                            r => out.record(r == BcAbsOutcome::Holds, || {
                                format!(
                                    "{side}, degree {i}: ({}, {}) relative ≠ absolute",
                                    m.label(),
                                    n.label()
                                )
                            }),
                        }
                    }
                }
            }
        }
        Property::DimensionShifting => {
            for (idx, (m, n)) in pairs(modules).enumerate() {
                let i = 2 + idx % top.clamp(2, 3);
                for shift in 1..i {
                    let ok = dimension_shift_check(sd, m, n, i, shift)?;
                    out.record(ok, || {
                        format!(
                            "({}, {}): degree {i} shifted by {shift}",
                            m.label(),
                            n.label()
                        )
                    });
                }
            }
        }
        Property::FiniteDimensionInBass => {
            for m in modules {
                if pc_pd(sd, m)?.value.is_finite() {
                    let ok = bass_membership(sd, m, bound)?.member();
                    out.record(ok, || format!("{}: finite P_C-pd outside B_C", m.label()));
                } else {
                    out.vacuous += 1;
                }
            }
        }
        Property::TwoOfThree => {
            for (m, n) in pairs(modules) {
                for (f, g) in sample_sequences(m, n)? {
                    let r = two_of_three_check(sd, &f, &g, bound)?;
                    out.record(r.holds(), || {
                        format!("({}, {}): {r:?}", m.label(), n.label())
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Short exact sequences built from M and N: the split one
/// `0 -> M -> M ⊕ N -> N -> 0` and `0 -> rad M -> M -> M / rad M -> 0`.
pub fn sample_sequences(m: &Module, n: &Module) -> Result<Vec<(ModuleHom, ModuleHom)>, Error> {
    let f = m.field();
    let sum = Module::direct_sum(&[m.clone(), n.clone()])?;
    let (a, b) = (m.dim(), n.dim());
    let mut incl = crate::exactlin::Mat::zeros(f, a + b, a);
    let mut proj = crate::exactlin::Mat::zeros(f, b, a + b);
    for i in 0..a {
        incl.set(i, i, 1);
    }
    for i in 0..b {
        proj.set(i, a + i, 1);
    }
    let split = (
        ModuleHom::new(m.clone(), sum.clone(), incl)?,
        ModuleHom::new(sum, n.clone(), proj)?,
    );
    let rad = m.radical_submodule();
    let (sub, inc) = m.submodule(&rad);
    let (quo, pr) = m.quotient(&rad);
    let top = (
        ModuleHom::new(sub, m.clone(), inc)?,
        ModuleHom::new(m.clone(), quo, pr)?,
    );
    Ok(alloc::vec![split, top])
}

/// Runs the whole battery on the augmented sample.
pub fn run_battery(
    sd: &Semidualizing,
    modules: &[Module],
    bound: usize,
) -> Result<Vec<PropertyOutcome>, Error> {
    let sample = augmented_sample(sd, modules);
    Property::ALL
        .iter()
        .map(|&p| run_property(p, sd, &sample, bound))
        .collect()
}

/// Results that need positive Krull dimension, regularity, infinite direct
/// sums or depth, none of which exist in finite-dimensional local algebras.
pub const OUT_OF_SCOPE: [&str; 4] = [
    "finite P_C-pd of every module, or of k alone, characterizes regular local rings",
    "New Intersection Theorem for bounded complexes of C-projectives (length bounded below by Krull dimension)",
    "R is noetherian iff the class of C-injectives is closed under arbitrary direct sums",
    "whether a module of finite depth with finite P_C-pd and finite I_C-id forces R Gorenstein",
];
