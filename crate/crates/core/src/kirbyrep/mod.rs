//! Framed-link surgery presentations modeled by their linking matrices,
//! together with the Kirby moves that act on them.

mod appendix;
mod script;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::intform::{congruence_apply, det_exact, IntFormError, SymIntMatrix};
use crate::matrix::IntMatrix;
use crate::Sign;

pub use appendix::{appendix_matrix_a, appendix_matrix_b};
pub use script::{apply_moves, parse_move_script, Move};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KirbyError {
    #[error("FramingNotUnit: component {index} has framing {framing}")]
    FramingNotUnit { index: usize, framing: BigInt },
    #[error("SameComponent: cannot slide component {index} over itself")]
    SameComponent { index: usize },
    #[error("ComponentOutOfRange: component {index} of a {size}-component presentation")]
    ComponentOutOfRange { index: usize, size: usize },
    #[error("LabelMismatch: {labels} labels for a {size}x{size} linking matrix")]
    LabelMismatch { labels: usize, size: usize },
    #[error("NotHomologySphereBoundary: {which} presentation has determinant {det}")]
    NotHomologySphereBoundary { which: &'static str, det: BigInt },
    #[error("MoveScript: line {line}: {msg}")]
    Script { line: usize, msg: String },
    #[error(transparent)]
    Form(#[from] IntFormError),
}

/// A framed link up to the data seen by its linking matrix: framings on the
/// diagonal, pairwise linking numbers off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedPresentation {
    matrix: SymIntMatrix,
    labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomologyOrder {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for HomologyOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyOrder::Finite(n) => write!(f, "{n}"),
            HomologyOrder::Infinite => f.write_str("Infinite"),
        }
    }
}

/// First homology of the boundary 3-manifold, read off the linking matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryReport {
    pub determinant: BigInt,
    pub first_homology_order: HomologyOrder,
    pub is_homology_sphere: bool,
}

impl FramedPresentation {
    pub fn new(matrix: SymIntMatrix, labels: Vec<String>) -> Result<Self, KirbyError> {
        if labels.len() != matrix.size() {
            return Err(KirbyError::LabelMismatch { labels: labels.len(), size: matrix.size() });
        }
        Ok(FramedPresentation { matrix, labels })
    }

    /// Labels components `K1, K2, …`.
    pub fn unlabeled(matrix: SymIntMatrix) -> Self {
        let labels = (1..=matrix.size()).map(|i| format!("K{i}")).collect();
        FramedPresentation { matrix, labels }
    }

    /// The empty diagram, i.e. `S³` bounding `B⁴`.
    pub fn empty() -> Self {
        FramedPresentation { matrix: SymIntMatrix::empty(), labels: Vec::new() }
    }

    pub fn matrix(&self) -> &SymIntMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    fn check_component(&self, index: usize) -> Result<(), KirbyError> {
        if index >= self.size() {
            return Err(KirbyError::ComponentOutOfRange { index, size: self.size() });
        }
        Ok(())
    }

    pub fn boundary_report(&self) -> BoundaryReport {
        boundary_report(self)
    }
}

impl fmt::Display for FramedPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "components: {}", self.labels.join(" "))?;
        write!(f, "{}", self.matrix)
    }
}

/// The two-component diagram of a 0-framed `K1` simply linked with an
/// `n`-framed `K2`. Only the linking matrix is modeled, so the knot types of
/// `K1` and `K2` do not enter.
pub fn wn_presentation(n: i64) -> FramedPresentation {
    let m = SymIntMatrix::from_rows([[0, 1], [1, n]]).expect("symmetric by construction");
    FramedPresentation::new(m, vec!["K1".into(), "K2".into()]).expect("two labels")
}

/// Adds an unknotted, unlinked component with framing `sign`.
pub fn blow_up(p: &FramedPresentation, sign: Sign) -> FramedPresentation {
    let matrix = p.matrix.direct_sum(&SymIntMatrix::diagonal([sign.as_i64()]));
    let mut labels = p.labels.clone();
    let fresh = (1..).map(|k| format!("U{k}")).find(|l| !labels.contains(l)).unwrap();
    labels.push(fresh);
    FramedPresentation { matrix, labels }
}

/// Removes the ±1-framed component `i`, first sliding every component that
/// links it off of it.
pub fn blow_down(p: &FramedPresentation, i: usize) -> Result<FramedPresentation, KirbyError> {
    p.check_component(i)?;
    let framing = p.matrix.get(i, i).clone();
    let eps = if framing.is_one() {
        BigInt::one()
    } else if (-&framing).is_one() {
        -BigInt::one()
    } else {
        return Err(KirbyError::FramingNotUnit { index: i, framing });
    };

    let n = p.size();
    let mut e = IntMatrix::identity(n);
    for j in (0..n).filter(|&j| j != i) {
        let lk = p.matrix.get(j, i);
        if !lk.is_zero() {
            // b_j ← b_j - ε·lk·b_i clears the link with b_i
            e[(i, j)] = -(&eps * lk);
        }
    }
    let cleared = congruence_apply(&p.matrix, &e)?;
    debug_assert!((0..n).filter(|&j| j != i).all(|j| cleared.get(i, j).is_zero()));

    let mut labels = p.labels.clone();
    labels.remove(i);
    Ok(FramedPresentation { matrix: cleared.without(i), labels })
}

/// Slides component `i` over component `j` (band sum with sign `sign`):
/// the congruence by `I + sign·e_ji`, so the new framing of `i` is
/// `f_i + f_j + 2·sign·lk(i, j)`.
pub fn handle_slide(
    p: &FramedPresentation,
    i: usize,
    j: usize,
    sign: Sign,
) -> Result<FramedPresentation, KirbyError> {
    p.check_component(i)?;
    p.check_component(j)?;
    if i == j {
        return Err(KirbyError::SameComponent { index: i });
    }
    let e = IntMatrix::elementary(p.size(), j, i, sign.as_i64());
    let matrix = congruence_apply(&p.matrix, &e)?;
    Ok(FramedPresentation { matrix, labels: p.labels.clone() })
}

pub fn boundary_report(p: &FramedPresentation) -> BoundaryReport {
    let determinant = det_exact(&p.matrix);
    let first_homology_order = if determinant.is_zero() {
        HomologyOrder::Infinite
    } else {
        HomologyOrder::Finite(determinant.abs())
    };
    let is_homology_sphere = determinant.abs().is_one();
    BoundaryReport { determinant, first_homology_order, is_homology_sphere }
}

/// Intersection form of `X₁ ∪_∂ (-X₂)` for two handlebodies whose boundaries
/// are (by the caller's assertion) the same homology sphere.
pub fn union_closed_form(
    p1: &FramedPresentation,
    p2: &FramedPresentation,
) -> Result<SymIntMatrix, KirbyError> {
    for (which, p) in [("first", p1), ("second", p2)] {
        let r = boundary_report(p);
        if !r.is_homology_sphere {
            return Err(KirbyError::NotHomologySphereBoundary { which, det: r.determinant });
        }
    }
    Ok(p1.matrix.direct_sum(&p2.matrix.negated()))
}
