//! Exact q-series toolkit: truncated big-integer power series, infinite
//! products and theta series, `m`-dissections of quintuple products, and
//! prediction and verification of periodic coefficient sign patterns.

pub mod dissection;
pub mod error;
pub mod products;
pub mod series;
pub mod signpattern;
pub mod spec;

pub use error::{Error, Result};
pub use series::{Series, SparseSeries};
pub use signpattern::{PatternReport, SignClass, SignPattern, Theorem1Certificate};
pub use spec::{EtaQuotientSpec, PochhammerFactor};
