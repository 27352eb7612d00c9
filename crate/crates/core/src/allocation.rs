//! Joint resource-assignment matrices whose row means are the defense marginals.
//!
//! Entry `(n, m)` is the probability that resource `m` guards asset `n`. Each
//! column is a distribution over assets and the average of row `n` over the
//! `M` resources is `D_n`. The row sum `M·D_n` can exceed 1.

use num::{One, Zero};

use crate::error::{GameError, Result};
use crate::model::DefenseVector;
use crate::rational::{self, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllocationMatrix {
    rows: Vec<Vec<Rational>>,
}

impl AllocationMatrix {
    /// Rows indexed by asset; every row must have the same nonzero length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let width = rows.first().map(Vec::len).unwrap_or(0);
        if width == 0 {
            return Err(GameError::ZeroResources);
        }
        if let Some(i) = rows.iter().position(|r| r.len() != width) {
            return Err(GameError::ShapeMismatch(format!("row {i} has {} columns, expected {width}", rows[i].len())));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn asset_count(&self) -> usize {
        self.rows.len()
    }

    pub fn resource_count(&self) -> usize {
        self.rows[0].len()
    }

    pub fn get(&self, asset: usize, resource: usize) -> Option<&Rational> {
        self.rows.get(asset)?.get(resource)
    }

    pub fn column_sum(&self, resource: usize) -> Rational {
        self.rows.iter().fold(Rational::zero(), |acc, r| acc + &r[resource])
    }

    pub fn row_sum(&self, asset: usize) -> Rational {
        rational::sum(&self.rows[asset])
    }

    pub fn row_mean(&self, asset: usize) -> Rational {
        self.row_sum(asset) / int(self.resource_count() as i64)
    }
}

/// Every resource follows the same distribution: each column equals `defense`.
pub fn uniform_allocation(defense: &DefenseVector, resources: usize) -> Result<AllocationMatrix> {
    if resources == 0 {
        return Err(GameError::ZeroResources);
    }
    let rows = defense.entries().iter().map(|d| vec![d.clone(); resources]).collect();
    AllocationMatrix::from_rows(rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AllocationViolation {
    EntryOutOfRange { asset: usize, resource: usize, value: Rational },
    ColumnSum { resource: usize, sum: Rational },
    RowMean { asset: usize, mean: Rational, expected: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AllocationVerdict {
    pub violations: Vec<AllocationViolation>,
}

impl AllocationVerdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks entry ranges, column sums and row means, reporting every violation.
pub fn validate_allocation(matrix: &AllocationMatrix, defense: &DefenseVector) -> Result<AllocationVerdict> {
    if matrix.asset_count() != defense.len() {
        return Err(GameError::ShapeMismatch(format!(
            "matrix has {} rows but the defense vector has {} entries",
            matrix.asset_count(),
            defense.len()
        )));
    }
    let mut violations = Vec::new();
    for (asset, row) in matrix.rows().iter().enumerate() {
        for (resource, value) in row.iter().enumerate() {
            if !rational::is_probability(value) {
                violations.push(AllocationViolation::EntryOutOfRange { asset, resource, value: value.clone() });
            }
        }
    }
    for resource in 0..matrix.resource_count() {
        let sum = matrix.column_sum(resource);
        if !sum.is_one() {
            violations.push(AllocationViolation::ColumnSum { resource, sum });
        }
    }
    for (asset, expected) in defense.entries().iter().enumerate() {
        let mean = matrix.row_mean(asset);
        if &mean != expected {
            violations.push(AllocationViolation::RowMean { asset, mean, expected: expected.clone() });
        }
    }
    Ok(AllocationVerdict { violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::best_response::defense_family_at;
    use crate::model::GameInstance;
    use crate::rational::ratio;

    #[test]
    fn uniform_allocation_of_family_zero() {
        let d = defense_family_at(&GameInstance::eight_tank_example(), &int(0)).unwrap();
        let m = uniform_allocation(&d, 5).unwrap();
        assert_eq!((m.asset_count(), m.resource_count()), (8, 5));
        for r in 0..5 {
            let column: Vec<_> = (0..8).map(|n| m.get(n, r).unwrap().clone()).collect();
            assert_eq!(column.as_slice(), d.entries());
        }
        assert!(validate_allocation(&m, &d).unwrap().is_valid());
        // Row sums are M·D_n.
        assert_eq!(m.row_sum(0), ratio(5, 3));
    }

    #[test]
    fn vertex_and_uniform_defenses() {
        let e = DefenseVector::vertex(4, 3).unwrap();
        let m = uniform_allocation(&e, 3).unwrap();
        assert!(m.rows()[3].iter().all(|v| v.is_one()));
        let u = DefenseVector::uniform(4).unwrap();
        let m = uniform_allocation(&u, 2).unwrap();
        assert!(m.rows().iter().flatten().all(|v| *v == ratio(1, 4)));
        assert_eq!(uniform_allocation(&u, 0), Err(GameError::ZeroResources));
    }

    #[test]
    fn reports_bad_column() {
        let d = DefenseVector::new(vec![ratio(1, 2), ratio(1, 2)]).unwrap();
        let m = AllocationMatrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 2)],
            vec![ratio(1, 2), ratio(2, 5)],
        ])
        .unwrap();
        let verdict = validate_allocation(&m, &d).unwrap();
        assert!(verdict.violations.contains(&AllocationViolation::ColumnSum { resource: 1, sum: ratio(9, 10) }));
    }

    #[test]
    fn reports_bad_row_mean_with_valid_columns() {
        // Moving 1/10 between rows inside column 0 keeps the column sum but
        // shifts both row means.
        let d = DefenseVector::new(vec![ratio(1, 2), ratio(1, 2)]).unwrap();
        let m = AllocationMatrix::from_rows(vec![
            vec![ratio(3, 5), ratio(1, 2)],
            vec![ratio(2, 5), ratio(1, 2)],
        ])
        .unwrap();
        let verdict = validate_allocation(&m, &d).unwrap();
        assert_eq!(
            verdict.violations,
            vec![
                AllocationViolation::RowMean { asset: 0, mean: ratio(11, 20), expected: ratio(1, 2) },
                AllocationViolation::RowMean { asset: 1, mean: ratio(9, 20), expected: ratio(1, 2) },
            ]
        );
    }

    #[test]
    fn shape_errors() {
        assert!(AllocationMatrix::from_rows(vec![vec![int(1)], vec![]]).is_err());
        assert_eq!(AllocationMatrix::from_rows(vec![]), Err(GameError::ZeroResources));
        let m = AllocationMatrix::from_rows(vec![vec![int(1)]]).unwrap();
        assert!(validate_allocation(&m, &DefenseVector::uniform(2).unwrap()).is_err());
    }
}
