//! Exact spectra, Ramanujan classification, energies and spectral moments of
//! unitary Cayley graphs `Cay(R, R^×)` of finite commutative rings, with a
//! brute-force oracle to check them against.
//!
//! A ring is described up to the invariants that matter here: a list of local
//! factors, each given by its order and the order of its maximal ideal.
//!
//! ```
//! use uc_spectra::{parse_ring_expr, spectrum_unitary};
//!
//! let z6 = parse_ring_expr("Z/6").unwrap();
//! assert_eq!(spectrum_unitary(&z6).unwrap().to_string(), "{2:1, 1:2, -1:2, -2:1}");
//! ```

pub mod closed;
pub mod energy;
pub mod error;
pub mod json_int;
pub mod oracle;
pub mod ramanujan;
pub mod ring;
pub mod scalar;
pub mod spectrum;
pub mod verify;

pub use closed::{lambda_c, spectrum_complement, spectrum_line, spectrum_unitary};
pub use energy::{
    cycle_count, energy_of, line_energy, moment_line, moment_unitary, EnergyReport, Target,
};
pub use error::{Error, Result};
pub use ramanujan::{
    classify_complement, classify_unitary, classify_zn, ramanujan_check, GraphKind, Method, Verdict,
};
pub use ring::{
    canonicalize, enumerate_specs, from_modulus, parse_ring_expr, LocalRingSpec, RingSpec,
};
pub use spectrum::Spectrum;

/// Exact integer type used by every closed form.
pub type Int = num_bigint::BigInt;
/// Float type used by the default eigensolver.
pub type Real = f64;
