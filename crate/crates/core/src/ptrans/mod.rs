//! Almost-translations of the integers and the infinite maps built from them.

mod almost;
mod infmap;

pub use almost::{
    embed_symmetric, lemma_qcycle, relation_suite, AlmostTranslation, CheckReport, CLOSURE_LIMIT,
    EmbeddingReport,
};
pub use infmap::{congruence_obstruction, window_action, Dart, InfiniteMap, Witness, WindowAction};
