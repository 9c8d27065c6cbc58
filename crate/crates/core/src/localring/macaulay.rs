//! Independent check of local quotient dimensions by linear algebra.
//!
//! `dim O/(I + m^D) = #{monomials of degree < D} - rank{ x^a g mod m^D }`.
//! Once two consecutive truncation degrees give the same value, Nakayama's
//! lemma gives `m^D ⊂ I` and the common value is `dim O/I`. Nothing here
//! shares code with the standard-basis path.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::polycore::{Monomial, Polynomial};
use crate::scalar::Field;

/// Largest truncation degree tried by default.
pub const DEFAULT_MAX_DEGREE: u32 = 40;

type SparseRow<C> = Vec<(usize, C)>;

fn monomials_below(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn go(i: usize, left: u32, exps: &mut Vec<u32>, nvars: usize, out: &mut Vec<Monomial>) {
        if i == nvars {
            out.push(Monomial::from_exponents(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps.push(e);
            go(i + 1, left - e, exps, nvars, out);
            exps.pop();
        }
    }
    let mut out = Vec::new();
    if degree > 0 {
        go(0, degree - 1, &mut Vec::new(), nvars, &mut out);
    }
    out.sort_by_key(Monomial::degree);
    out
}

fn subtract_scaled<C: Field>(row: &SparseRow<C>, factor: &C, pivot: &SparseRow<C>) -> SparseRow<C> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_piv {
            out.push((pivot[j].0, -(factor.clone() * pivot[j].1.clone())));
            j += 1;
        } else {
            let v = row[i].1.clone() - factor.clone() * pivot[j].1.clone();
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `dim O/(I + m^degree)` for the ideal generated by `gens`.
pub fn truncated_quotient_dim<C: Field>(gens: &[Polynomial<C>], degree: u32) -> Result<u64> {
    let Some(first) = gens.first() else {
        return Err(Error::Invalid("an ideal needs at least one generator".into()));
    };
    let nvars = first.nvars();
    if gens.iter().any(|g| g.nvars() != nvars) {
        return Err(Error::VariableMismatch);
    }
    let columns = monomials_below(nvars, degree);
    let index: HashMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (m, i)).collect();

    // Pivot rows keyed by their first column (columns are sorted by degree,
    // so the pivot is a lowest-order term).
    let mut pivots: HashMap<usize, SparseRow<C>> = HashMap::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let ord = g.order().unwrap_or(0);
        for shift in &columns {
            if shift.degree() + ord >= degree {
                continue;
            }
            let mut row: SparseRow<C> = g
                .terms()
                .filter_map(|(m, c)| {
                    let prod = m.mul(shift);
                    index.get(&prod).map(|&col| (col, c.clone()))
                })
                .collect();
            row.sort_by_key(|(col, _)| *col);
            loop {
                let Some((col, lead)) = row.first().cloned() else { break };
                match pivots.get(&col) {
                    Some(p) => row = subtract_scaled(&row, &lead, p),
                    None => {
                        let inv = C::one() / lead;
                        let normalized = row.into_iter().map(|(c, v)| (c, v * inv.clone())).collect();
                        pivots.insert(col, normalized);
                        break;
                    }
                }
            }
        }
    }
    Ok((columns.len() - pivots.len()) as u64)
}

/// `dim O/I` by increasing the truncation degree until two consecutive
/// values agree. `None` if no agreement up to `max_degree` (the quotient is
/// then infinite-dimensional or larger than the search).
pub fn macaulay_quotient_dim<C: Field>(gens: &[Polynomial<C>], max_degree: u32) -> Result<Option<u64>> {
    let mut previous = truncated_quotient_dim(gens, 1)?;
    for degree in 2..=max_degree {
        let current = truncated_quotient_dim(gens, degree)?;
        if current == previous {
            return Ok(Some(current));
        }
        previous = current;
    }
    Ok(None)
}
