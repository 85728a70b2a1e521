//! Kirby calculus on framed links at the level of linking matrices.
//!
//! A [`FramedLink`] is a list of component labels together with a symmetric
//! matrix whose diagonal holds framings and whose off-diagonal entries are
//! pairwise linking numbers. Moves act by integral congruence (handle
//! slides) or by Schur complement (blow-ups and blow-downs), so the
//! boundary 3-manifold's homology is preserved at every step.

mod generate;
mod link;
mod script;

pub use generate::{script_generator, target_link};
pub use link::{plumbing_to_link, FramedLink, Sign};
pub use script::{replay, replay_trace, KirbyMove, KirbyScript, ReplayError, ReplayTrace, TraceStep};
