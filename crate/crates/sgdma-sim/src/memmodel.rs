//! Timed DDR model: region map, periodic refresh stalls, access-cost model.
//!
//! An access costs a fixed base latency, a seeded contention jitter (the
//! SmartConnect/controller arbitration the hardware folds into observed
//! latency), a transfer term proportional to the controller-word count, and
//! a row-switch penalty whenever the region class differs from the previous
//! access. Refresh windows recur every `refresh_period_ns` with a per-run
//! random phase; a window that intersects an access's service interval
//! charges its full stall duration. A window already in progress when the
//! access is issued only delays it by the window's remainder, which keeps
//! `finish` monotone in `issue_time`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rng::{self, TAG_DDR};
use crate::time::{mhz_to_period_ps, ns_to_ps, Ps};

/// Fixed memory layout of the shared DDR aperture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemoryMap {
    pub aperture_base: u64,
    pub aperture_end: u64, // inclusive
    pub rpmsg_base: u64,
    pub rpmsg_len: u64,
    pub ring_base: u64,
    pub ring_len: u64,
    pub buffer_base: u64,
    pub buffer_len: u64,
}

pub const APERTURE_BASE: u64 = 0x8000_0000;
pub const APERTURE_END: u64 = 0x9FFF_FFFF;
pub const RPMSG_LEN: u64 = 2048;
pub const RING_LEN: u64 = 4 * 1024 * 1024;
pub const BUFFER_LEN: u64 = 256 * 1024 * 1024;

impl Default for MemoryMap {
    fn default() -> Self {
        let rpmsg_base = APERTURE_BASE;
        let ring_base = rpmsg_base + RPMSG_LEN;
        let buffer_base = ring_base + RING_LEN;
        let map = MemoryMap {
            aperture_base: APERTURE_BASE,
            aperture_end: APERTURE_END,
            rpmsg_base,
            rpmsg_len: RPMSG_LEN,
            ring_base,
            ring_len: RING_LEN,
            buffer_base,
            buffer_len: BUFFER_LEN,
        };
        debug_assert!(map.buffer_base + map.buffer_len - 1 <= map.aperture_end);
        map
    }
}

impl MemoryMap {
    pub fn contains(&self, addr: u64, len: u64) -> bool {
        len > 0
            && addr >= self.aperture_base
            && addr.checked_add(len - 1).is_some_and(|end| end <= self.aperture_end)
    }

    /// Region holding `addr`, or `None` for unallocated aperture space.
    pub fn region_of(&self, addr: u64) -> Option<RegionClass> {
        if addr >= self.rpmsg_base && addr < self.rpmsg_base + self.rpmsg_len {
            Some(RegionClass::Rpmsg)
        } else if addr >= self.ring_base && addr < self.ring_base + self.ring_len {
            Some(RegionClass::Ring)
        } else if addr >= self.buffer_base && addr < self.buffer_base + self.buffer_len {
            Some(RegionClass::Buffer)
        } else {
            None
        }
    }
}

/// DRAM region class used by the row-switch cost model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionClass {
    Rpmsg,
    Ring,
    Buffer,
}

/// What an access is for; determines the region the engine targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AccessKind {
    BdFetch,
    BufferFetch,
    StatusWrite,
}

#[derive(Debug, Clone)]
pub struct MemAccess {
    pub addr: u64,
    pub len: u64,
    pub kind: AccessKind,
    pub issue_time_ps: Ps,
}

/// Timing parameters of the DDR model. Durations are nanoseconds in the
/// configuration file and resolved to picoseconds at state construction.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct DdrConfig {
    pub refresh_period_ns: f64,
    pub refresh_stall_ns: f64,
    /// Calibrated fixed cost per access.
    pub base_access_ns: f64,
    /// Calibrated penalty when consecutive accesses cross region classes.
    pub row_switch_penalty_ns: f64,
    /// Calibrated contention jitter: a seeded uniform draw in
    /// `0..=contention_jitter_max_cycles` controller cycles added per access.
    pub contention_jitter_max_cycles: u32,
    pub controller_clock_mhz: f64,
    /// Bytes moved per controller cycle.
    pub word_bytes: u64,
}

impl Default for DdrConfig {
    fn default() -> Self {
        DdrConfig {
            refresh_period_ns: 7800.0,
            refresh_stall_ns: 210.0,
            base_access_ns: 35.0,
            row_switch_penalty_ns: 15.0,
            contention_jitter_max_cycles: 3,
            controller_clock_mhz: 300.0,
            word_bytes: 64,
        }
    }
}

impl DdrConfig {
    pub fn validate(&self) -> Result<(), MemError> {
        if self.refresh_period_ns <= 0.0
            || self.refresh_stall_ns < 0.0
            || self.base_access_ns < 0.0
            || self.row_switch_penalty_ns < 0.0
            || self.controller_clock_mhz <= 0.0
            || self.word_bytes == 0
        {
            return Err(MemError::InvalidConfig);
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MemError {
    #[error("access outside the DDR aperture")]
    OutOfAperture,
    #[error("invalid DDR configuration")]
    InvalidConfig,
}

/// Completion record for one access.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    /// When the request reached the controller (after serialization behind
    /// earlier accesses).
    pub start_ps: Ps,
    pub finish_ps: Ps,
    /// Refresh windows that delayed this access.
    pub stall_events: u32,
}

/// Mutable DDR timing state for one simulation run.
///
/// Owned by a single run; accesses must be issued in nondecreasing time
/// order (the refresh cursor only moves forward).
#[derive(Debug, Clone)]
pub struct DdrState {
    map: MemoryMap,
    seed: u64,
    base_ps: Ps,
    row_switch_ps: Ps,
    ctrl_cycle_ps: Ps,
    word_bytes: u64,
    jitter_max_cycles: u64,
    period_ps: Ps,
    stall_ps: Ps,
    phase_ps: Ps,
    next_refresh: Ps,
    free_at: Ps,
    last_region: Option<RegionClass>,
    rng: rand_xoshiro::Xoshiro256StarStar,
    stall_count: u64,
    stall_log: Option<Vec<Ps>>,
}

impl DdrState {
    /// Builds run state; the refresh phase is drawn uniformly in
    /// `[0, refresh_period)` from `seed`.
    pub fn new(cfg: &DdrConfig, map: MemoryMap, seed: u64) -> Self {
        cfg.validate().expect("DDR config must be valid");
        let mut rng = rng::stream(seed, TAG_DDR);
        let period_ps = ns_to_ps(cfg.refresh_period_ns);
        use rand_xoshiro::rand_core::RngCore;
        let phase_ps = rng::reduce(rng.next_u64(), period_ps.max(1));
        DdrState {
            map,
            seed,
            base_ps: ns_to_ps(cfg.base_access_ns),
            row_switch_ps: ns_to_ps(cfg.row_switch_penalty_ns),
            ctrl_cycle_ps: mhz_to_period_ps(cfg.controller_clock_mhz),
            word_bytes: cfg.word_bytes,
            jitter_max_cycles: cfg.contention_jitter_max_cycles as u64,
            period_ps,
            stall_ps: ns_to_ps(cfg.refresh_stall_ns),
            phase_ps,
            next_refresh: phase_ps,
            free_at: 0,
            last_region: None,
            rng,
            stall_count: 0,
            stall_log: None,
        }
    }

    /// Same state but with the refresh phase pinned (tests, oracles).
    pub fn with_phase(cfg: &DdrConfig, map: MemoryMap, seed: u64, phase_ps: Ps) -> Self {
        let mut s = Self::new(cfg, map, seed);
        assert!(phase_ps < s.period_ps);
        s.phase_ps = phase_ps;
        s.next_refresh = phase_ps;
        s
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn map(&self) -> &MemoryMap {
        &self.map
    }

    pub fn base_ps(&self) -> Ps {
        self.base_ps
    }

    pub fn ctrl_cycle_ps(&self) -> Ps {
        self.ctrl_cycle_ps
    }

    pub fn row_switch_ps(&self) -> Ps {
        self.row_switch_ps
    }

    pub fn jitter_max_cycles(&self) -> u64 {
        self.jitter_max_cycles
    }

    pub fn stall_ps(&self) -> Ps {
        self.stall_ps
    }

    pub fn period_ps(&self) -> Ps {
        self.period_ps
    }

    pub fn phase_ps(&self) -> Ps {
        self.phase_ps
    }

    pub fn free_at(&self) -> Ps {
        self.free_at
    }

    /// Total refresh windows charged so far in this run.
    pub fn stall_count(&self) -> u64 {
        self.stall_count
    }

    /// Enables recording of charged refresh-window start times.
    pub fn enable_stall_log(&mut self) {
        self.stall_log = Some(Vec::new());
    }

    pub fn take_stall_log(&mut self) -> Vec<Ps> {
        self.stall_log.take().unwrap_or_default()
    }

    /// Transfer term: one controller cycle per started word.
    pub fn transfer_ps(&self, len: u64) -> Ps {
        len.div_ceil(self.word_bytes) * self.ctrl_cycle_ps
    }

    /// Timed access per the cost model. Serializes behind any in-flight
    /// access (`start = max(issue, free_at)`).
    pub fn access(&mut self, req: &MemAccess) -> Result<Completion, MemError> {
        if !self.map.contains(req.addr, req.len) {
            return Err(MemError::OutOfAperture);
        }
        // Unallocated aperture space behaves like plain buffer DRAM.
        let region = self.map.region_of(req.addr).unwrap_or(RegionClass::Buffer);
        let jitter = self.draw_jitter_ps();
        let svc = self.base_ps + jitter + self.transfer_ps(req.len);
        let (start, finish, stalls) = self.service_raw(req.issue_time_ps, svc, region);
        Ok(Completion { start_ps: start, finish_ps: finish, stall_events: stalls })
    }

    #[inline]
    pub(crate) fn draw_jitter_ps(&mut self) -> Ps {
        if self.jitter_max_cycles == 0 {
            return 0;
        }
        use rand_xoshiro::rand_core::RngCore;
        rng::reduce(self.rng.next_u64(), self.jitter_max_cycles + 1) * self.ctrl_cycle_ps
    }

    /// Core service routine shared by [`DdrState::access`] and the engine's
    /// precomputed fast path. `svc` already contains base, jitter and
    /// transfer terms; the row-switch penalty is applied here.
    #[inline]
    pub(crate) fn service_raw(&mut self, request: Ps, svc: Ps, region: RegionClass) -> (Ps, Ps, u32) {
        let issue = request.max(self.free_at);
        let svc = if self.last_region.is_some() && self.last_region != Some(region) {
            svc + self.row_switch_ps
        } else {
            svc
        };
        self.last_region = Some(region);

        let mut stalls = 0u32;
        let mut start = issue;
        if self.stall_ps > 0 {
            // Skip windows fully elapsed before this access.
            while self.next_refresh + self.stall_ps <= issue {
                self.next_refresh += self.period_ps;
            }
            // A window already in progress delays the start by its remainder.
            if self.next_refresh <= issue {
                start = self.next_refresh + self.stall_ps;
                self.charge();
                stalls += 1;
                self.next_refresh += self.period_ps;
            }
            let mut finish = start + svc;
            // Every window beginning inside the (growing) service interval
            // charges its full stall.
            while self.next_refresh < finish {
                finish += self.stall_ps;
                self.charge();
                stalls += 1;
                self.next_refresh += self.period_ps;
            }
            self.free_at = finish;
            (issue, finish, stalls)
        } else {
            let finish = start + svc;
            self.free_at = finish;
            (issue, finish, stalls)
        }
    }

    #[inline]
    fn charge(&mut self, _full: bool) {
        self.stall_count += 1;
        if let Some(log) = self.stall_log.as_mut() {
            log.push(self.next_refresh);
        }
    }

    /// Refresh windows starting before `horizon`, as window start times.
    pub fn refresh_schedule(&self, horizon_ps: Ps) -> Vec<Ps> {
        let mut out = Vec::new();
        let mut t = self.phase_ps;
        while t < horizon_ps {
            out.push(t);
            t += self.period_ps;
        }
        out
    }
}
