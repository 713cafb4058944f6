//! Exact relative homological algebra over finite-dimensional commutative
//! local algebras over prime fields.
//!
//! Layers, bottom up: [`exactlin`] (dense GF(p) linear algebra), [`ring`]
//! (algebras by structure constants), [`module`] (modules as action matrices,
//! Hom, tensor, natural maps), [`resolve`] (resolutions, Ext, Tor) and
//! [`relhom`] (semidualizing modules, proper resolutions, relative Ext,
//! Auslander and Bass classes). [`corpus`] holds the curated rings and the
//! seeded random-module generator.

#![no_std]

extern crate alloc;

pub mod battery;
pub mod corpus;
pub mod error;
pub mod exactlin;
pub mod module;
pub mod poly;
pub mod relhom;
pub mod resolve;
pub mod ring;

pub use error::Error;
pub use exactlin::{Field, Mat, Subspace};
pub use module::{Module, ModuleHom};
pub use poly::Poly;
pub use ring::{Algebra, RingReport};
