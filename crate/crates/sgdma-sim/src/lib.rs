//! Discrete-event simulator of a scatter-gather DMA control path.
//!
//! The model covers the MM2S (memory-mapped to streaming) side of an
//! SG-DMA engine sitting between a DDR memory and a streaming bus:
//!
//! - [`bdring`] builds and validates buffer-descriptor rings laid out in a
//!   dedicated DDR region,
//! - [`memmodel`] is the timed DDR model (region map, refresh stalls,
//!   access-cost model),
//! - [`fabric`] is the clocked streaming bus,
//! - [`engine`] walks a ring, issues the three DDR transactions per
//!   descriptor, and emits a timestamped [`engine::TransferTrace`],
//! - [`csm`] is the measurement state machine that converts a trace into
//!   setup/latency/throughput counter values,
//! - [`psmodel`] provides stochastic APU/RPU execution-time models and the
//!   RPMsg/GPIO handshake models,
//! - [`harness`] runs seeded parameter sweeps, order statistics, and the
//!   calibration search,
//! - [`config`] is the TOML configuration schema shared by the CLI and the
//!   browser demo.
//!
//! All timestamps are integer picoseconds ([`time::Ps`]); every run is fully
//! determined by its configuration and a single `u64` seed.

pub mod bdring;
pub mod config;
pub mod csm;
pub mod engine;
pub mod fabric;
pub mod harness;
pub mod memmodel;
pub mod psmodel;
pub mod rng;
pub mod time;

pub use bdring::{create_ring, serialize_ring, validate_ring, BdRing, BufferDescriptor, Placement, RingSpec};
pub use config::SimConfig;
pub use csm::{run_csm, CounterValues, LatencyMode, Scenario};
pub use engine::{count_ddr_transactions, run_mm2s, run_mm2s_summary, EngineConfig, RunSummary, TransferTrace};
pub use fabric::BusConfig;
pub use harness::{calibrate, run_sweep, summarize, CalibrationTargets, StatsSummary, SweepRow, SweepSpec};
pub use memmodel::{DdrConfig, DdrState, MemAccess, MemoryMap, RegionClass};
pub use psmodel::{CpuKind, CpuModel, HandshakeModel, Mechanism};
pub use time::Ps;
