//! Simulation time base: integer picoseconds.
//!
//! Picosecond resolution keeps every derived quantity exact: the 3.003 ns
//! PL clock period is 3003 ps, the 7.8 us refresh period is 7_800_000 ps,
//! and equality assertions between runs never depend on float rounding.

/// A timestamp or duration in picoseconds.
pub type Ps = u64;

pub const PS_PER_NS: u64 = 1_000;

/// Converts a (possibly fractional) nanosecond duration to picoseconds.
pub fn ns_to_ps(ns: f64) -> Ps {
    debug_assert!(ns >= 0.0, "durations must be non-negative");
    (ns * PS_PER_NS as f64).round() as Ps
}

pub fn ps_to_ns(ps: Ps) -> f64 {
    ps as f64 / PS_PER_NS as f64
}

/// Clock period in integer picoseconds for a frequency in MHz.
///
/// 333.0 MHz maps to 3003 ps, 300.0 MHz to 3333 ps.
pub fn mhz_to_period_ps(mhz: f64) -> Ps {
    assert!(mhz > 0.0, "clock frequency must be positive");
    (1.0e6 / mhz).round() as Ps
}

/// Exact decimal rendering of a picosecond timestamp in nanoseconds
/// (three fractional digits, no float involved).
pub fn format_ns(ps: Ps) -> String {
    format!("{}.{:03}", ps / PS_PER_NS, ps % PS_PER_NS)
}
