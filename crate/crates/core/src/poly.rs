//! Polynomials with integer coefficients over named variables: the input
//! form for relations and presentation matrices.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A monomial as a sorted map from variable name to positive exponent.
pub type Monomial = BTreeMap<String, u32>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    /// Terms in input order; like terms are not merged.
    pub terms: Vec<(i64, Monomial)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: i64) -> Poly {
        Poly {
            terms: alloc::vec![(c, Monomial::new())],
        }
    }

    /// The monomial `var^exp` with coefficient one.
    pub fn var(name: &str, exp: u32) -> Poly {
        let mut m = Monomial::new();
        if exp > 0 {
            m.insert(name.into(), exp);
        }
        Poly {
            terms: alloc::vec![(1, m)],
        }
    }

    /// Merges like terms and drops those whose coefficient vanishes mod `p`.
    /// Coefficients of the result lie in `[0, p)`.
    pub fn normalized(&self, p: u32) -> Poly {
        let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
        for (c, m) in &self.terms {
            let e = acc.entry(m.clone()).or_insert(0);
            *e = (*e + c.rem_euclid(p as i64)) % p as i64;
        }
        Poly {
            terms: acc
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(m, c)| (c, m))
                .collect(),
        }
    }

    /// True when some coefficient is nonzero as an integer but zero mod `p`.
    pub fn has_vanishing_coefficient(&self, p: u32) -> bool {
        self.terms
            .iter()
            .any(|(c, _)| *c != 0 && c.rem_euclid(p as i64) == 0)
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.terms
            .iter()
            .flat_map(|(_, m)| m.keys().map(String::as_str))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mono: Vec<String> = m
                .iter()
                .map(|(v, &e)| {
                    if e == 1 {
                        v.clone()
                    } else {
                        alloc::format!("{v}^{e}")
                    }
                })
                .collect();
            match (c, mono.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{}", mono.join("*"))?,
                _ => write!(f, "{c}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}
