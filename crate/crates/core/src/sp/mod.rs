//! Series-parallel structure: recognition, the homological criterion,
//! composition laws and Braess sites.

mod braess;
mod decompose;
mod laws;

pub use braess::{braess_sites, sites_from, verify_braess_embedding, BraessCase, BraessSite};
pub use decompose::{recognize_series_parallel, DecompositionTree};
pub use laws::{check_parallel_dimension_laws, check_series_dimension_laws, LawCheck, LawReport, Relation};

use crate::robust::{RobustPathIndex, TriangleSemantics};
use crate::simplex::ColoredRouteSimplex;

/// `dim Ω_3 = 0`.
pub fn is_sp_via_homology(simplex: &ColoredRouteSimplex) -> bool {
    RobustPathIndex::new(simplex, TriangleSemantics::Literal).level(3).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::route::DEFAULT_ROUTE_CAP;
    use crate::simplex::colored_route_simplex;

    #[test]
    fn homological_verdicts() {
        let verdict = |g| is_sp_via_homology(&colored_route_simplex(&g, DEFAULT_ROUTE_CAP).unwrap());
        assert!(verdict(fixtures::diamond()));
        assert!(verdict(fixtures::k12()));
        assert!(!verdict(fixtures::four_route()));
        assert!(!verdict(fixtures::braess()));
    }
}
