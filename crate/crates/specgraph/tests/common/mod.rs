//! Shared across integration tests: the family suite that the walk,
//! measure, and agreement batteries all run over.

use specgraph::graph::{generate, FamilySpec, Graph};

pub fn family_suite() -> Vec<(String, Graph)> {
    let specs = vec![
        FamilySpec::Path { n: 3 },
        FamilySpec::Path { n: 6 },
        FamilySpec::Path { n: 11 },
        FamilySpec::Cycle { m: 5 },
        FamilySpec::Cycle { m: 12 },
        FamilySpec::Complete { n: 5 },
        FamilySpec::Complete { n: 8 },
        FamilySpec::CompleteBipartite { m: 1, n: 4 },
        FamilySpec::CompleteBipartite { m: 2, n: 3 },
        FamilySpec::CompleteBipartite { m: 3, n: 3 },
        FamilySpec::CompleteBipartite { m: 4, n: 6 },
        FamilySpec::FiniteStar { k: 3, n: 2 },
        FamilySpec::FiniteStar { k: 4, n: 3 },
        FamilySpec::FiniteStar { k: 5, n: 2 },
        FamilySpec::DoubledFan { n: 2 },
        FamilySpec::DoubledFan { n: 10 },
        FamilySpec::DoubledFan { n: 20 },
        FamilySpec::GluedPaths { n: 4, k: 2 },
        FamilySpec::GluedPaths { n: 7, k: 3 },
        FamilySpec::GluedPaths { n: 9, k: 4 },
        FamilySpec::CycleComplement { m: 3, n: 4 },
        FamilySpec::CycleComplement { m: 3, n: 5 },
        FamilySpec::CycleComplement { m: 4, n: 5 },
        FamilySpec::KaryTree { k: 2, r: 2 },
        FamilySpec::KaryTree { k: 2, r: 3 },
        FamilySpec::KaryTree { k: 3, r: 2 },
        FamilySpec::CoxeterD { l: 4 },
        FamilySpec::CoxeterD { l: 7 },
        FamilySpec::CoxeterD { l: 12 },
        FamilySpec::CoxeterE6,
        FamilySpec::CoxeterE7,
        FamilySpec::CoxeterE8,
        FamilySpec::CoxeterE8Tilde,
        FamilySpec::Petersen,
        FamilySpec::Circulant {
            n: 8,
            connections: vec![1, 2],
        },
    ];
    specs
        .into_iter()
        .map(|s| (s.to_string(), generate(&s).unwrap()))
        .collect()
}
