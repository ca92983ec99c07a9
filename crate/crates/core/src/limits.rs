//! Size caps. `MODEXT_CAP_ORDER` overrides every group-order cap at once;
//! results beyond the defaults are best-effort.

pub const GENERATOR_CLOSURE: usize = 10_000;
pub const SUBGROUP_SEARCH: usize = 64;
pub const CHARACTER_TABLE: usize = 64;
pub const COHOMOLOGY_LOW: usize = 16;
pub const COHOMOLOGY_DEG4: usize = 8;
pub const DOUBLE: usize = 24;
pub const TWISTED_DOUBLE: usize = 32;
pub const ISOTROPIC: usize = 256;
pub const EQUIVALENCE_LABELS: usize = 64;

pub const ENV_CAP: &str = "MODEXT_CAP_ORDER";

/// The effective cap for a default, honouring the environment override.
pub fn order_cap(default: usize) -> usize {
    match std::env::var(ENV_CAP).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        Some(v) => v,
        None => default,
    }
}
