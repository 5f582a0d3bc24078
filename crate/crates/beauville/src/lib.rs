//! Construction and verification of Beauville structures on finite groups,
//! together with the permutation-group machinery the computations need.
//!
//! A Beauville structure on a finite group `G` is a pair of generating
//! triples whose conjugacy-power footprints intersect trivially; the mixed
//! and strongly real variants add an index-2 overgroup or an inverting
//! automorphism.  This crate provides:
//!
//! * [`perm`] / [`group`] / [`classes`] — permutations, stabilizer-chain
//!   groups with exact orders, conjugacy classes and conjugacy testing;
//! * [`words`] — a small word language (`aa^(bab)`, `b(ab^2ab)^9`, ...)
//!   evaluated over named generators;
//! * [`triple`] / [`sigma`] / [`verify`] / [`search`] — generating triples,
//!   Σ-footprints, verification reports and exhaustive searches for
//!   unmixed, strongly real and mixed structures;
//! * [`lift`] — lifting checks through central quotients and order
//!   certificates;
//! * [`bray`] — the involution-centralizer construction used to build
//!   strongly real structures from random elements;
//! * [`dataset`] / [`tables`] — bundled permutation representations and the
//!   shipped word tables.
//!
//! Conventions used throughout: permutations act on points `1..=n`
//! externally (0-based internally), products compose left factor first
//! (`(pq)(k) = q(p(k))`), and conjugation is `x^y = y⁻¹xy`.

pub mod bray;
pub mod classes;
pub mod dataset;
pub mod error;
pub mod group;
pub mod lift;
pub mod perm;
pub mod search;
pub mod sigma;
pub mod tables;
pub mod triple;
pub mod verify;
pub mod words;

pub use classes::{is_conjugate, ClassTable, ConjClass};
pub use dataset::{bundled, load_group, resolve, GroupDataset};
pub use error::{Error, Result};
pub use group::PermGroup;
pub use lift::{check_lift, check_order_certificate, OrderCheck, QuotientMap};
pub use perm::Permutation;
pub use search::{
    mixed_order_filter, search_mixed, search_strongly_real, search_unmixed, strongly_generated,
    MixedSearch, StronglyRealSearch, UnmixedSearch,
};
pub use sigma::{sigma_disjoint, sigma_profile, SigmaCheck, SigmaClass};
pub use tables::{bundled_row, bundled_rows, WordRow};
pub use triple::{Automorphism, BeauvilleStructure, GeneratingTriple, MixedStructure};
pub use verify::{verify_mixed, verify_strongly_real, verify_unmixed, Report};
pub use words::{Binding, WordExpr};

/// Resource limits for enumeration and search operations.
///
/// `max_elements` caps how many permutations an operation may store
/// (element lists, class enumerations, witness maps).  `max_group_order`
/// caps the order of a group accepted for exhaustive structure searches.
/// `trials` bounds randomized scans.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_elements: usize,
    pub max_group_order: u64,
    pub trials: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_elements: 10_000_000,
            max_group_order: 100_000,
            trials: 200,
        }
    }
}

impl Budget {
    pub fn with_trials(mut self, trials: u64) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_max_elements(mut self, max: usize) -> Self {
        self.max_elements = max;
        self
    }

    pub fn with_max_group_order(mut self, max: u64) -> Self {
        self.max_group_order = max;
        self
    }
}
