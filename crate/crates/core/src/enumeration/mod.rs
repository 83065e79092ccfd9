//! Small-order enumeration: canonical forms, regular digraphs, property
//! sweeps and the regular-digraph dib scan.

mod canon;
mod regular;
mod sweep;

pub use canon::{
    canonical_digraph, canonical_form, canonical_labeling, CanonicalForm, CANON_LIMIT,
};
pub use regular::{enumerate_profile, enumerate_regular};
pub use sweep::{
    all_digraphs, all_tournaments, conjecture_scan, property_sweep, revalidate_witness, DibClass,
    Instance, PropertyId, RegularCatalog, Sample, SweepReport, EXHAUSTIVE_DIGRAPH_LIMIT,
    EXHAUSTIVE_TOURNAMENT_LIMIT,
};
