//! Compact text forms for search parameters, as typed on a command line.
//!
//! - integer list: `2,3` (empty string is the empty list)
//! - integer matrix: rows separated by `;`, entries by `,`: `1,0;0,1`
//! - targets: comma-separated identity or suite names
//! - pool: comma-separated scalar literals

use std::sync::Arc;

use thiserror::Error;

use crate::graded::MAX_DIMENSION;
use crate::grading::{Bicharacter, FiniteAbelianGroup, Grading, GradingError, GroupElement};
use crate::identities::Target;
use crate::scalars::{CyclotomicField, LiteralError, Scalar};
use crate::search::SearchParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArgError {
    #[error("`{text}` is not an integer")]
    Integer { text: String },
    #[error("unknown identity or suite `{0}`")]
    Target(String),
    #[error("pool entry `{text}`: {source}")]
    Literal { text: String, source: LiteralError },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Grading(#[from] GradingError),
}

pub fn parse_int_list(text: &str) -> Result<Vec<i64>, ArgError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse().map_err(|_| ArgError::Integer { text: t.to_string() })
        })
        .collect()
}

pub fn parse_int_matrix(text: &str) -> Result<Vec<Vec<i64>>, ArgError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(';').map(parse_int_list).collect()
}

pub fn parse_targets(text: &str) -> Result<Vec<Target>, ArgError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| ArgError::Target(t.to_string())))
        .collect()
}

pub fn parse_pool(text: &str, field: &'static CyclotomicField) -> Result<Vec<Scalar>, ArgError> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            Scalar::parse(t, field).map_err(|source| ArgError::Literal {
                text: t.to_string(),
                source,
            })
        })
        .collect()
}

/// Raw search parameters. Omitted fields default to: trivial group, root
/// order equal to the group exponent, zero exponent matrix, all degrees zero.
#[derive(Debug, Clone, Default)]
pub struct SearchArgs {
    pub group: Option<String>,
    pub root_order: Option<u32>,
    pub bichar: Option<String>,
    pub dim: usize,
    pub degrees: Option<String>,
    pub targets: String,
    pub pool: String,
    pub trials: u64,
    pub seed: u64,
}

impl SearchArgs {
    pub fn resolve(&self) -> Result<SearchParams, ArgError> {
        if self.dim > MAX_DIMENSION {
            return Err(ArgError::Shape(format!(
                "dimension {} exceeds the supported maximum {MAX_DIMENSION}",
                self.dim
            )));
        }
        let orders = parse_int_list(self.group.as_deref().unwrap_or(""))?;
        let orders = orders
            .into_iter()
            .map(|d| u64::try_from(d).map_err(|_| ArgError::Shape(format!("group order {d} is negative"))))
            .collect::<Result<Vec<_>, _>>()?;
        let group = FiniteAbelianGroup::new(orders)?;
        let k = group.rank();
        let root_order = match self.root_order {
            Some(n) => n,
            None => u32::try_from(group.exponent()).map_err(|_| ArgError::Shape("group exponent too large".into()))?,
        };
        let exponents = match &self.bichar {
            Some(text) => parse_int_matrix(text)?,
            None => vec![vec![0; k]; k],
        };
        let grading = Grading::new(group, Bicharacter::new(root_order, exponents)?)?;
        let degrees = match &self.degrees {
            Some(text) => {
                let rows = parse_int_matrix(text)?;
                if rows.len() != self.dim {
                    return Err(ArgError::Shape(format!(
                        "{} degrees given for dimension {}",
                        rows.len(),
                        self.dim
                    )));
                }
                // the trivial group has empty degrees, written as `0`
                rows.iter()
                    .map(|r| {
                        let r: &[i64] = if k == 0 && r == &[0] { &[] } else { r };
                        grading.group().element(r).map_err(ArgError::from)
                    })
                    .collect::<Result<Vec<GroupElement>, _>>()?
            }
            None => vec![grading.group().zero(); self.dim],
        };
        Ok(SearchParams {
            pool: parse_pool(&self.pool, grading.field())?,
            targets: parse_targets(&self.targets)?,
            grading: Arc::clone(&grading),
            degrees,
            trials: self.trials,
            seed: self.seed,
        })
    }
}
