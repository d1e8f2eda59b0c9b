//! Mapping from CLI flags to family specifications.

use clap::Args;
use specgraph::graph::{generate, FamilySpec, Graph};

#[derive(Args, Debug, Default)]
pub struct FamilyParams {
    /// Primary size parameter (path length, rim size, ...)
    #[arg(long)]
    pub n: Option<usize>,
    /// Secondary size parameter (cycle length, bipartite side, ...)
    #[arg(long)]
    pub m: Option<usize>,
    /// Arm count / branching factor
    #[arg(long)]
    pub k: Option<usize>,
    /// Tree depth
    #[arg(long)]
    pub r: Option<usize>,
    /// Coxeter rank
    #[arg(long)]
    pub l: Option<usize>,
    /// Truncation depth for the infinite families
    #[arg(long)]
    pub depth: Option<usize>,
    /// Circulant connection set, comma separated
    #[arg(long, value_delimiter = ',')]
    pub connections: Vec<usize>,
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, String> {
    value.ok_or_else(|| format!("family '{family}' needs --{flag}"))
}

/// Resolves a family name plus parameter flags into a graph and a display
/// name. Family names are case-insensitive.
pub fn build(name: &str, p: &FamilyParams) -> Result<(Graph, String), String> {
    let lower = name.to_ascii_lowercase();
    let spec = match lower.as_str() {
        "path" => FamilySpec::Path {
            n: need(p.n, "n", name)?,
        },
        "cycle" => FamilySpec::Cycle {
            m: need(p.m, "m", name)?,
        },
        "complete" => FamilySpec::Complete {
            n: need(p.n, "n", name)?,
        },
        "complete-bipartite" => FamilySpec::CompleteBipartite {
            m: need(p.m, "m", name)?,
            n: need(p.n, "n", name)?,
        },
        "star" => FamilySpec::FiniteStar {
            k: need(p.k, "k", name)?,
            n: need(p.n, "n", name)?,
        },
        "doubled-fan" => FamilySpec::DoubledFan {
            n: need(p.n, "n", name)?,
        },
        "glued-paths" => FamilySpec::GluedPaths {
            n: need(p.n, "n", name)?,
            k: need(p.k, "k", name)?,
        },
        "cycle-complement" => FamilySpec::CycleComplement {
            m: need(p.m, "m", name)?,
            n: need(p.n, "n", name)?,
        },
        "kary-tree" => FamilySpec::KaryTree {
            k: need(p.k, "k", name)?,
            r: need(p.r, "r", name)?,
        },
        "coxeter-a" => FamilySpec::CoxeterA {
            l: need(p.l, "l", name)?,
        },
        "coxeter-d" => FamilySpec::CoxeterD {
            l: need(p.l, "l", name)?,
        },
        "coxeter-e6" => FamilySpec::CoxeterE6,
        "coxeter-e7" => FamilySpec::CoxeterE7,
        "coxeter-e8" => FamilySpec::CoxeterE8,
        "coxeter-e8tilde" => FamilySpec::CoxeterE8Tilde,
        "petersen" => FamilySpec::Petersen,
        "circulant" => {
            if p.connections.is_empty() {
                return Err(format!("family '{name}' needs --connections"));
            }
            FamilySpec::Circulant {
                n: need(p.n, "n", name)?,
                connections: p.connections.clone(),
            }
        }
        "truncated-ray" => FamilySpec::TruncatedRay {
            depth: need(p.depth, "depth", name)?,
        },
        "truncated-dinf" => FamilySpec::TruncatedDInfinity {
            depth: need(p.depth, "depth", name)?,
        },
        "truncated-star" => FamilySpec::TruncatedStar {
            k: need(p.k, "k", name)?,
            depth: need(p.depth, "depth", name)?,
        },
        _ => return Err(format!("unknown family '{name}'; see `specgraph families`")),
    };
    let g = generate(&spec).map_err(|e| e.to_string())?;
    Ok((g, spec.to_string()))
}

pub fn describe_families() -> String {
    let rows: &[(&str, &str, &str)] = &[
        ("path", "--n >= 1", "path on n vertices"),
        ("cycle", "--m >= 3", "cycle on m vertices"),
        ("complete", "--n >= 1", "complete graph"),
        (
            "complete-bipartite",
            "--m, --n >= 1",
            "complete bipartite K_{m,n}",
        ),
        ("star", "--k >= 3, --n >= 1", "core with k arms of length n"),
        (
            "doubled-fan",
            "--n >= 2",
            "two joined hubs over n rim vertices",
        ),
        (
            "glued-paths",
            "--n >= 4, 2 <= --k <= (n+1)/2",
            "two n-paths glued at position k",
        ),
        (
            "cycle-complement",
            "--m, --n >= 3",
            "complement of two disjoint cycles",
        ),
        (
            "kary-tree",
            "--k >= 2, --r >= 1",
            "complete k-ary rooted tree of depth r",
        ),
        ("coxeter-a", "--l >= 1", "type-A diagram (a path)"),
        ("coxeter-d", "--l >= 4", "type-D diagram (forked path)"),
        ("coxeter-e6 / -e7 / -e8", "", "exceptional diagrams"),
        (
            "coxeter-e8tilde",
            "",
            "extended E8: glued paths on 2, 3, 6 vertices",
        ),
        ("petersen", "", "Petersen graph"),
        (
            "circulant",
            "--n >= 1, --connections s1,s2,...",
            "circulant graph",
        ),
        (
            "truncated-ray",
            "--depth >= 1",
            "ray truncation, vertices 0..=depth",
        ),
        ("truncated-dinf", "--depth >= 2", "doubled-ray truncation"),
        (
            "truncated-star",
            "--k >= 2, --depth >= 1",
            "star truncation",
        ),
    ];
    let mut out = String::from("available families:\n");
    for (name, params, what) in rows {
        out.push_str(&format!("  {name:<24} {params:<36} {what}\n"));
    }
    out
}
