//! Features computed straight from run data: projection profiles,
//! run-length histograms, transition statistics and entropy quantifiers.
//!
//! Naming follows the document-analysis convention used throughout this
//! crate: the *vertical* projection profile ([`vpp`]) holds one black count
//! per **row**, the *horizontal* profile ([`hpp`]) one per **column**.

mod entropy;
mod histogram;
mod profile;
mod transitions;

pub use entropy::{
    ceq, entropy_horizontal, entropy_vertical, entropy_vertical_metered, seq, EntropyReport,
    ENTROPY_FORMULA,
};
pub use histogram::{log_bin, run_histogram, LogHistogram, RunColor, RunHistogram, LOG_BIN_LABELS};
pub(crate) use profile::column_counts as profile_column_counts;
pub use profile::{hpp, hpp_metered, vpp, vpp_metered, Direction, ProfileCurve};
pub use transitions::{column_transitions, row_transitions, TransitionStats};
