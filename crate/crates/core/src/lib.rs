//! Exact arithmetic for cyclotomic integers with ideal prime divisors —
//! congruence-based divisibility, valuations, and complete factorization —
//! cross-validated by brute-force oracles, plus an exact-rational geometry
//! companion for radical axes and ideal chords.
//!
//! All values are immutable and all operations are pure functions; sharing
//! across threads needs no synchronization.

pub mod cyclo;
pub mod divisors;
pub mod error;
pub mod geometry;
mod intfactor;
mod linalg;
mod modpoly;
pub mod oracle;
pub mod periods;

pub use cyclo::{is_prime_u64, CyclotomicInteger};
pub use divisors::{
    factor, prime_divisors_of, DivisorFactorization, DivisorKind, IdealPrimeDivisor,
};
pub use error::{Error, Result};
pub use geometry::{
    chord_configuration, common_chord_line, power_of_point, radical_axis,
    verify_chord_power_relation, verify_section_relation, ChordConfiguration, ChordKind, Circle,
    CommonChord, Line, Point,
};
pub use oracle::{
    brute_force_divisor_check, exact_divide, generator_census, norm_via_resultant,
    search_generator, DivisorCheckReport, DivisorCheckRow, SearchBudget, SearchOutcome,
};
pub use periods::{
    period_system, primitive_root, CongruenceAssignment, PeriodElement, PeriodSystem,
};
