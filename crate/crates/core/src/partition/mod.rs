//! Mills'-Lemma bipartition, its iterated halving, and the two certified
//! partitioners (Riesz blocks and uniformly separated blocks).

mod certificate;
mod halving;
mod mills;
mod oracle;

pub use certificate::{
    certify_block, certify_blocks, feichtinger_partition, partition_sequence, uniform_partition, with_threads,
    BlockCertificate, PartitionCertificate, PartitionMode, PartitionOptions,
};
pub use halving::{halving_partition, level_target, levels_borderline, required_levels, Partition};
pub use mills::{max_within_row_sum, mills_bipartition, mills_local_search, Bipartition};
pub use oracle::{brute_force_bipartition, ORACLE_MAX_INDICES};
