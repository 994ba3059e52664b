//! Chain spaces Ω_p, boundary matrices and their exact ranks.
//!
//! Ω_0 is spanned by the vertices, Ω_1 by the simplex edges and Ω_p for
//! p ≥ 2 by the robust p-paths. ∂_p sends a path to the alternating sum of
//! its one-vertex deletions; ∂_0 is zero.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rank::{rank_exact, rank_mod_prime};
use crate::robust::{RobustPathIndex, TriangleSemantics};
use crate::simplex::ColoredRouteSimplex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainBasis {
    pub order: usize,
    elements: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl ChainBasis {
    pub fn new(order: usize, elements: Vec<Vec<usize>>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Self { order, elements, index }
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, element: &[usize]) -> Option<usize> {
        self.index.get(element).copied()
    }

    pub fn contains(&self, element: &[usize]) -> bool {
        self.index.contains_key(element)
    }
}

/// Sparse column-major matrix of ∂_p in the canonical bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub order: usize,
    pub rows: usize,
    columns: Vec<Vec<(usize, i8)>>,
}

impl BoundaryMatrix {
    pub fn from_columns(order: usize, rows: usize, columns: Vec<Vec<(usize, i8)>>) -> Self {
        Self { order, rows, columns }
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, i8)] {
        &self.columns[c]
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.columns[col].iter().find(|&&(r, _)| r == row).map_or(0, |&(_, v)| v)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut dense = vec![vec![0i64; self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                dense[r][c] = v as i64;
            }
        }
        dense
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols() == 0 {
            return 0;
        }
        rank_exact(&self.to_dense())
    }

    pub fn rank_mod_prime(&self) -> usize {
        if self.rows == 0 || self.cols() == 0 {
            return 0;
        }
        rank_mod_prime(&self.to_dense())
    }

    /// First nonzero entry `(row, col, value)` of `lower · self`, if any.
    pub fn first_nonzero_of_product(&self, lower: &BoundaryMatrix) -> Option<(usize, usize, i64)> {
        for (c, col) in self.columns.iter().enumerate() {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(mid, v) in col {
                for &(r, w) in lower.column(mid) {
                    *acc.entry(r).or_default() += v as i64 * w as i64;
                }
            }
            if let Some((r, v)) = acc.into_iter().filter(|&(_, v)| v != 0).min() {
                return Some((r, c, v));
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    NonzeroComposite { order: usize, column: Vec<usize>, row: Vec<usize>, value: i64 },
    ClosureViolation { order: usize, path: Vec<usize>, face: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelCheck {
    pub order: usize,
    pub closed: bool,
    /// ∂_{p-1} ∂_p = 0; `None` for p < 2.
    pub boundary_squared_zero: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub p_max: usize,
    pub passed: bool,
    pub levels: Vec<LevelCheck>,
    pub counterexample: Option<Counterexample>,
}

pub struct ChainComplex<'a> {
    paths: RobustPathIndex<'a>,
    // Ω_0 ..= Ω_top; Ω_top is the first empty robust level.
    bases: Vec<ChainBasis>,
}

impl<'a> ChainComplex<'a> {
    pub fn new(simplex: &'a ColoredRouteSimplex, semantics: TriangleSemantics) -> Self {
        let paths = RobustPathIndex::new(simplex, semantics);
        let mut bases = vec![
            ChainBasis::new(0, (0..simplex.vertex_count()).map(|v| vec![v]).collect()),
            ChainBasis::new(1, simplex.edges().map(|e| vec![e.from, e.to]).collect()),
        ];
        for (k, level) in paths.levels().into_iter().enumerate() {
            bases.push(ChainBasis::new(k + 2, level.into_iter().map(|p| p.vertices).collect()));
        }
        let top = bases.len();
        bases.push(ChainBasis::new(top, Vec::new()));
        Self { paths, bases }
    }

    pub fn paths(&self) -> &RobustPathIndex<'a> {
        &self.paths
    }

    /// Largest order with a non-empty basis.
    pub fn max_order(&self) -> usize {
        self.bases.iter().rposition(|b| b.dim() > 0).unwrap_or(0)
    }

    pub fn basis(&self, p: usize) -> ChainBasis {
        self.bases.get(p).cloned().unwrap_or_else(|| ChainBasis::new(p, Vec::new()))
    }

    pub fn dim(&self, p: usize) -> usize {
        self.bases.get(p).map_or(0, ChainBasis::dim)
    }

    /// dim Ω_0 ..= dim Ω_{p_max}.
    pub fn dims(&self, p_max: usize) -> Vec<usize> {
        (0..=p_max).map(|p| self.dim(p)).collect()
    }

    /// ∂_p for p ≥ 1. Fails if a face is missing from the Ω_{p-1} basis.
    pub fn boundary(&self, p: usize) -> Result<BoundaryMatrix> {
        assert!(p >= 1, "∂_0 is the zero map");
        boundary_between(&self.basis(p), &self.basis(p - 1))
    }

    pub fn verify(&self, p_max: usize) -> VerificationReport {
        let mut levels = Vec::new();
        let mut counterexample = None;
        let mut lower: Option<BoundaryMatrix> = None;
        for p in 1..=p_max {
            let upper = match self.boundary(p) {
                Ok(m) => m,
                Err(Error::ClosureViolation { order, path, face }) => {
                    levels.push(LevelCheck { order: p, closed: false, boundary_squared_zero: None });
                    counterexample = Some(Counterexample::ClosureViolation { order, path, face });
                    break;
                }
                Err(e) => unreachable!("boundary assembly only fails on closure: {e}"),
            };
            let squared_zero = lower.as_ref().map(|low| match upper.first_nonzero_of_product(low) {
                None => true,
                Some((r, c, value)) => {
                    counterexample.get_or_insert(Counterexample::NonzeroComposite {
                        order: p,
                        column: self.bases[p].elements()[c].clone(),
                        row: self.bases[p - 2].elements()[r].clone(),
                        value,
                    });
                    false
                }
            });
            levels.push(LevelCheck { order: p, closed: true, boundary_squared_zero: squared_zero });
            lower = Some(upper);
        }
        VerificationReport { p_max, passed: counterexample.is_none(), levels, counterexample }
    }

    /// β_p = dim Ω_p − rank ∂_p − rank ∂_{p+1} for p in 0..=p_max.
    pub fn betti(&self, p_max: usize) -> Result<Vec<usize>> {
        let ranks: Vec<usize> = (0..=p_max + 1)
            .map(|p| if p == 0 { Ok(0) } else { self.boundary(p).map(|m| m.rank()) })
            .collect::<Result<_>>()?;
        Ok((0..=p_max).map(|p| self.dim(p) - ranks[p] - ranks[p + 1]).collect())
    }
}

pub fn boundary_between(upper: &ChainBasis, lower: &ChainBasis) -> Result<BoundaryMatrix> {
    let mut columns = Vec::with_capacity(upper.dim());
    for element in upper.elements() {
        let mut col = Vec::with_capacity(element.len());
        for k in 0..element.len() {
            let face: Vec<usize> = element.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &v)| v).collect();
            let row = lower.position(&face).ok_or_else(|| Error::ClosureViolation {
                order: upper.order,
                path: element.clone(),
                face: face.clone(),
            })?;
            col.push((row, if k % 2 == 0 { 1 } else { -1 }));
        }
        col.sort_unstable();
        columns.push(col);
    }
    Ok(BoundaryMatrix::from_columns(upper.order, lower.dim(), columns))
}

pub fn chain_basis(simplex: &ColoredRouteSimplex, p: usize) -> ChainBasis {
    ChainComplex::new(simplex, TriangleSemantics::Literal).basis(p)
}

pub fn boundary_matrix(simplex: &ColoredRouteSimplex, p: usize) -> Result<BoundaryMatrix> {
    ChainComplex::new(simplex, TriangleSemantics::Literal).boundary(p)
}

pub fn verify_complex(simplex: &ColoredRouteSimplex, p_max: usize) -> VerificationReport {
    ChainComplex::new(simplex, TriangleSemantics::Literal).verify(p_max)
}

pub fn betti_numbers(simplex: &ColoredRouteSimplex, p_max: usize) -> Result<Vec<usize>> {
    ChainComplex::new(simplex, TriangleSemantics::Literal).betti(p_max)
}
