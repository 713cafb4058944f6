use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra engine.
///
/// Mathematical outcomes (a module failing to be semidualizing, a class
/// membership failing) are reported in result types, never as errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The modulus is not a prime in `[2, 2^31 - 1]`.
    InvalidField(u64),
    DimensionMismatch(&'static str),
    /// A relation of a monomial quotient has more than one term.
    NonMonomialRelation(usize),
    /// The monomial ideal contains no pure power of this variable.
    NotCofinite(String),
    UnitIdeal,
    /// Structure constants violate a commutative unital algebra axiom.
    AlgebraAxiom(&'static str),
    /// Action matrices do not define a unital representation.
    ModuleAxiom(&'static str),
    /// A matrix is not R-linear between the given modules.
    NotLinear,
    RingMismatch,
    UnknownVariable(String),
    /// The operation needs a local ring with residue field GF(p).
    NotLocal,
    /// `C` failed its semidualizing certificate; relative constructions refuse it.
    NotSemidualizing(String),
    DegreeOutOfRange {
        degree: usize,
        max: usize,
    },
    /// The sequence handed to a two-of-three check is not short exact.
    NotShortExact(&'static str),
    /// Two computations that a theorem equates disagreed.
    TheoremViolation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidField(p) => write!(f, "{p} is not a prime in [2, 2^31-1]"),
            Error::DimensionMismatch(what) => write!(f, "dimension mismatch: {what}"),
            Error::NonMonomialRelation(i) => {
                write!(f, "relations must be monomials (relation {i})")
            }
            Error::NotCofinite(v) => write!(f, "not cofinite: {v}"),
            Error::UnitIdeal => f.write_str("relations generate the unit ideal"),
            Error::AlgebraAxiom(what) => write!(f, "structure constants violate {what}"),
            Error::ModuleAxiom(what) => write!(f, "action matrices violate {what}"),
            Error::NotLinear => f.write_str("map is not R-linear"),
            Error::RingMismatch => f.write_str("modules live over different rings"),
            Error::UnknownVariable(v) => write!(f, "unknown variable: {v}"),
            Error::NotLocal => f.write_str("ring is not local with residue field GF(p)"),
            Error::NotSemidualizing(why) => write!(f, "C is not semidualizing: {why}"),
            Error::DegreeOutOfRange { degree, max } => {
                write!(f, "degree {degree} out of range (max {max})")
            }
            Error::NotShortExact(why) => write!(f, "sequence is not short exact: {why}"),
            Error::TheoremViolation(what) => write!(f, "theorem violation: {what}"),
        }
    }
}

impl core::error::Error for Error {}
