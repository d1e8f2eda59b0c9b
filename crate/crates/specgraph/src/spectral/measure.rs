//! Finitely supported measures on the real line and projection-weight
//! tables.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Finitely supported positive measure: atoms `(location, mass)` with
/// locations strictly decreasing. Zero masses are kept so the support grid
/// of related measures (vertex measures of one graph) stays aligned.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomicMeasure {
    atoms: Vec<(f64, f64)>,
    total_mass: f64,
}

impl AtomicMeasure {
    /// Builds a measure from atoms; sorts locations decreasing and asserts
    /// they are distinct.
    pub fn new(mut atoms: Vec<(f64, f64)>) -> Self {
        atoms.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        debug_assert!(
            atoms.windows(2).all(|w| w[0].0 > w[1].0),
            "atom locations must be distinct"
        );
        debug_assert!(
            atoms.iter().all(|a| a.1 >= -1e-12),
            "masses must be non-negative"
        );
        let total_mass = atoms.iter().map(|a| a.1).sum();
        AtomicMeasure { atoms, total_mass }
    }

    /// Atoms in strictly decreasing location order.
    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn total_mass(&self) -> f64 {
        self.total_mass
    }

    /// n-th moment: integral of `t^n`.
    pub fn moment(&self, n: usize) -> f64 {
        self.atoms
            .iter()
            .map(|&(t, mass)| mass * t.powi(n as i32))
            .sum()
    }

    /// Total-variation distance between two measures on the same support
    /// grid; `None` when the grids differ.
    pub fn total_variation(&self, other: &AtomicMeasure) -> Option<f64> {
        if self.atoms.len() != other.atoms.len() {
            return None;
        }
        let mut tv = 0.0;
        for (a, b) in self.atoms.iter().zip(&other.atoms) {
            if (a.0 - b.0).abs() > 1e-9 * (1.0 + a.0.abs()) {
                return None;
            }
            tv += (a.1 - b.1).abs();
        }
        Some(tv / 2.0)
    }

    /// Pointwise average of measures sharing one support grid.
    pub fn average<I: IntoIterator<Item = AtomicMeasure>>(measures: I) -> Option<AtomicMeasure> {
        let mut iter = measures.into_iter();
        let first = iter.next()?;
        let mut locations: Vec<f64> = first.atoms.iter().map(|a| a.0).collect();
        let mut masses: Vec<f64> = first.atoms.iter().map(|a| a.1).collect();
        let mut count = 1usize;
        for m in iter {
            if m.atoms.len() != locations.len() {
                return None;
            }
            for (i, atom) in m.atoms.iter().enumerate() {
                if (atom.0 - locations[i]).abs() > 1e-9 * (1.0 + atom.0.abs()) {
                    return None;
                }
                masses[i] += atom.1;
            }
            count += 1;
        }
        for m in &mut masses {
            *m /= count as f64;
        }
        Some(AtomicMeasure::new(
            locations.drain(..).zip(masses).collect(),
        ))
    }
}

// JSON form: a sorted array of {"t": location, "mass": mass} objects.
impl Serialize for AtomicMeasure {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Atom {
            t: f64,
            mass: f64,
        }
        let mut seq = serializer.serialize_seq(Some(self.atoms.len()))?;
        for &(t, mass) in &self.atoms {
            seq.serialize_element(&Atom { t, mass })?;
        }
        seq.end()
    }
}

/// Projection weights `c_j^2(v)`: one row per vertex, one column per
/// eigenvalue cluster. Each row sums to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable {
    weights: Vec<Vec<f64>>,
}

impl WeightTable {
    pub fn new(weights: Vec<Vec<f64>>) -> Self {
        WeightTable { weights }
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.weights
    }

    pub fn weight(&self, v: usize, j: usize) -> f64 {
        self.weights[v][j]
    }

    /// CSV rendering: header `vertex,c2_1,...`, one row per vertex, LF
    /// line endings.
    pub fn to_csv(&self, labels: Option<&[String]>) -> String {
        let cols = self.weights.first().map_or(0, Vec::len);
        let mut out = String::from("vertex");
        for j in 1..=cols {
            out.push_str(&format!(",c2_{j}"));
        }
        out.push('\n');
        for (v, row) in self.weights.iter().enumerate() {
            let name = match labels {
                Some(l) => l[v].clone(),
                None => v.to_string(),
            };
            out.push_str(&name);
            for w in row {
                out.push_str(&format!(",{w:.17e}"));
            }
            out.push('\n');
        }
        out
    }
}
