//! Bisector weight sequences and the statistics built from them.

mod bichromatic;
mod checks;
mod profile;
mod stats;

pub use bichromatic::{
    bichromatic_census, bichromatic_census_check, bichromatic_census_from,
    bichromatic_census_relation_check, bichromatic_depths, bichromatic_maximin,
    bichromatic_pairs, BICHROMATIC_BOUND, BICHROMATIC_RELATION,
};
pub use checks::*;
pub use profile::{
    all_depths, all_pairs, maximin_pair, minimax_pair, oracle_weights, pair_depth, pair_weights,
    weight_sequence, weights, BisectorProfile, DepthSummary, Event, Frame,
};
pub use stats::{
    census_of_pairs, j_edge_counts, kset_counts, repeat_stats_of_pairs, repeated_weight_stats,
    segment_weight_census, triple_counts, EdgeStats, KSetStats, RepeatStats, TripleStats,
    WeightCensus,
};
