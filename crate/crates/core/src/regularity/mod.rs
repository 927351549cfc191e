//! ε-regular pairs, cluster graphs of a given partition, the counting
//! lemmas on regular pairs and the parameter choices that tie them together.
//!
//! Constructing regularity partitions is not attempted; partitions are
//! supplied by the caller.

mod cluster;
mod density;
mod lemmas;
mod pair;
mod params;
mod partition;

pub use cluster::{
    classify_partition, cluster_book_bound, density_class, ClusterGraphs, PairClass, RegularityMode,
};
pub use density::{
    independent_rset_density, ramsey_floor, DensityEstimate, DensityMode, EXHAUSTIVE_CAP,
    RANDOM_CAP,
};
pub use lemmas::{
    bad_rset_count, counting_bound_dle, find_transversal_clique, key_lemma_check, BadSetReport,
    CliqueCountReport, KeyLemmaOutcome, KeyLemmaPremise,
};
pub use pair::{
    eps_regular_exact, eps_regular_exact_capped, eps_regular_refute, pair_density, threshold_size,
    violates, witness_density, RegularityVerdict, VerdictMode, DEFAULT_EXACT_CAP,
};
pub use params::{select_srl_parameters, SrlParams, PARAM_TOL};
pub use partition::Partition;
