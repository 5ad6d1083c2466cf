//! LCD and narrow-sense primitive BCH codes over GF(q).
//!
//! The crate is organised bottom-up:
//!
//! * [`cosets`]: q-cyclotomic cosets modulo `n = q^m - 1` and the
//!   combinatorics of leaders, exception sets and negated pairs.
//! * [`field`]: GF(p^e) arithmetic and the GF(q) subfield embedding.
//! * [`polyring`]: dense polynomials over GF(q) and minimal polynomials.
//! * [`bchcodes`]: code families, defining sets, generators, LCD checks.
//! * [`dimensions`]: closed-form dimension formulas with validity gates.
//! * [`distance`]: BCH bound, sphere packing, witnesses, exact search.
//! * [`report`] and [`sweep`]: assembled code reports and oracle sweeps.
//!
//! Parallel work goes through [`Exec`]; with the `parallel` feature
//! disabled every policy runs sequentially.

pub mod arith;
pub mod bchcodes;
pub mod cosets;
pub mod dimensions;
pub mod distance;
pub mod exec;
pub mod field;
pub mod polyring;
pub mod report;
pub mod sweep;

mod coverage;

pub use coverage::Coverage;
pub use exec::Exec;
