//! Full per-graph dominance report: exact verdicts, the floating
//! cross-check, and graph-level summary facts, serialized under the
//! `dominance-report/1` schema.

use crate::exact::{self, IntPolynomial};
use crate::graph::Graph;
use crate::spectral::{self, Spectrum};
use serde::Serialize;

pub const SCHEMA_DOMINANCE_REPORT: &str = "dominance-report/1";

/// An irreducible factor of the minimal polynomial together with its real
/// roots, for display: the vertex is a null vertex exactly at those
/// eigenvalues.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct NullFactor {
    pub factor: IntPolynomial,
    pub roots: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexVerdict {
    pub vertex: usize,
    pub label: String,
    pub dominant_exact: bool,
    pub dominant_float: bool,
    pub cyclic: bool,
    pub local_degree: usize,
    pub null_factors: Vec<NullFactor>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub name: Option<String>,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// `null` encodes an infinite diameter (disconnected graph).
    pub diameter: Option<usize>,
}

/// Everything the analysis decides about one graph. The exact route is
/// authoritative for every boolean; `float_disagreements` lists vertices
/// where the floating route differed (at the weight threshold `dom_tol`).
#[derive(Debug, Clone, Serialize)]
pub struct DominanceReport {
    pub schema: &'static str,
    pub graph: GraphSummary,
    pub s: usize,
    pub char_poly: IntPolynomial,
    pub min_poly: IntPolynomial,
    pub irreducible_over_q: bool,
    pub dominant_count: usize,
    pub has_dominant: bool,
    pub all_dominant: bool,
    pub walk_regular: bool,
    pub tolerance_failure: bool,
    pub float_disagreements: Vec<usize>,
    pub vertices: Vec<VertexVerdict>,
}

impl DominanceReport {
    pub fn dominant_labels(&self) -> Vec<String> {
        self.vertices
            .iter()
            .filter(|v| v.dominant_exact)
            .map(|v| v.label.clone())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary, dominant vertices listed by label.
    pub fn text_summary(&self) -> String {
        let name = self.graph.name.clone().unwrap_or_else(|| "graph".into());
        let mut out = format!(
            "{name}: {} vertices, {} edges, s = {}\n",
            self.graph.vertex_count, self.graph.edge_count, self.s
        );
        out.push_str(&format!(
            "char poly: {}\nmin poly:  {}{}\n",
            self.char_poly,
            self.min_poly,
            if self.irreducible_over_q {
                "  (irreducible over Q)"
            } else {
                ""
            }
        ));
        out.push_str(&format!(
            "dominant vertices ({} of {}): [{}]\n",
            self.dominant_count,
            self.graph.vertex_count,
            self.dominant_labels().join(", ")
        ));
        let cyclic: Vec<String> = self
            .vertices
            .iter()
            .filter(|v| v.cyclic)
            .map(|v| v.label.clone())
            .collect();
        out.push_str(&format!("cyclic vertices: [{}]\n", cyclic.join(", ")));
        if self.walk_regular {
            out.push_str("walk-regular\n");
        }
        if self.tolerance_failure {
            out.push_str("WARNING: eigensolver tolerance failure; floating route unreliable\n");
        }
        if !self.float_disagreements.is_empty() {
            out.push_str(&format!(
                "WARNING: exact/floating dominance disagreement at vertices {:?}\n",
                self.float_disagreements
            ));
        }
        out
    }
}

/// Analyzes `g` with the default floating tolerances.
pub fn dominance_report(g: &Graph, name: Option<String>) -> DominanceReport {
    dominance_report_with(g, name, spectral::DEFAULT_DOM_TOL, None)
}

/// Analyzes `g`, reusing a precomputed spectrum when the caller has one.
pub fn dominance_report_with(
    g: &Graph,
    name: Option<String>,
    dom_tol: f64,
    spectrum: Option<&Spectrum>,
) -> DominanceReport {
    let n = g.vertex_count();
    assert!(n >= 1, "dominance analysis needs at least one vertex");

    let char_poly = exact::char_poly(g);
    let min_poly = char_poly.squarefree_part().expect("non-zero");
    let s = min_poly.degree().expect("non-constant");

    let factors = exact::factor_over_q(&min_poly).expect("graph spectra are totally real");
    let factor_roots: Vec<NullFactor> = factors
        .iter()
        .map(|(f, _)| NullFactor {
            factor: f.clone(),
            roots: exact::real_roots(f, 17)
                .expect("irreducible factors of a totally real polynomial")
                .iter()
                .map(exact::RealRoot::approx)
                .collect(),
        })
        .collect();
    let irreducible_over_q = factors.len() == 1 && factors[0].0 == char_poly.primitive_part();

    let owned_spectrum;
    let spectrum = match spectrum {
        Some(s) => s,
        None => {
            owned_spectrum = spectral::eigendecompose(g);
            &owned_spectrum
        }
    };

    let mut vertices = Vec::with_capacity(n);
    let mut float_disagreements = Vec::new();
    for v in 0..n {
        let local = exact::local_min_poly(g, v);
        let local_degree = local.degree();
        let dominant_exact = exact::krylov_matrix(g, v, s).bareiss_rank() == s;
        assert_eq!(
            dominant_exact,
            local_degree == s,
            "rank route and local-degree route must agree"
        );
        let cyclic = local_degree == n;
        let null_factors: Vec<NullFactor> = factor_roots
            .iter()
            .filter(|nf| !local.divisible_by_int(&nf.factor))
            .cloned()
            .collect();
        assert_eq!(dominant_exact, null_factors.is_empty());

        let dominant_float = (0..s).all(|j| spectrum.weight(v, j) > dom_tol);
        if dominant_float != dominant_exact {
            float_disagreements.push(v);
        }

        vertices.push(VertexVerdict {
            vertex: v,
            label: g.label(v),
            dominant_exact,
            dominant_float,
            cyclic,
            local_degree,
            null_factors,
        });
    }

    let dominant_count = vertices.iter().filter(|v| v.dominant_exact).count();
    DominanceReport {
        schema: SCHEMA_DOMINANCE_REPORT,
        graph: GraphSummary {
            name,
            vertex_count: n,
            edge_count: g.edge_count(),
            diameter: g.predicates().diameter,
        },
        s,
        char_poly,
        min_poly,
        irreducible_over_q,
        dominant_count,
        has_dominant: dominant_count > 0,
        all_dominant: dominant_count == n,
        walk_regular: spectral::is_walk_regular(g),
        tolerance_failure: spectrum.tolerance_failure(),
        float_disagreements,
        vertices,
    }
}
