use super::polynomial::Polynomial;
use crate::combinat::combinations;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Rows `[∂f_i/∂x_1, ..., ∂f_i/∂x_m]`.
pub fn jacobian_matrix<C: Field>(f: &[Polynomial<C>]) -> Result<Vec<Vec<Polynomial<C>>>> {
    let Some(first) = f.first() else {
        return Ok(Vec::new());
    };
    let vars = first.variables().clone();
    f.iter()
        .map(|fi| {
            if *fi.variables() != vars {
                return Err(Error::VariableMismatch);
            }
            (0..fi.nvars()).map(|j| fi.partial_derivative(j)).collect()
        })
        .collect()
}

/// Determinant by cofactor expansion along the first row. Matrices here
/// are at most `(m-1) x (m-1)` for small `m`.
pub fn determinant<C: Field>(matrix: &[Vec<Polynomial<C>>]) -> Polynomial<C> {
    let n = matrix.len();
    assert!(n > 0 && matrix.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 1 {
        return matrix[0][0].clone();
    }
    let vars = matrix[0][0].variables().clone();
    let mut acc = Polynomial::zero(vars);
    for col in 0..n {
        if matrix[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial<C>>> = matrix[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &matrix[0][col] * &determinant(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// All `r x r` minors of the `r x m` Jacobian of `f`, one per column tuple
/// `j_1 < ... < j_r` in lexicographic order. Each minor is the determinant
/// of the selected columns as they stand; no alternating sign is applied
/// (ideals generated by minors do not depend on signs).
pub fn jacobian_minors<C: Field>(f: &[Polynomial<C>]) -> Result<Vec<Polynomial<C>>> {
    let r = f.len();
    let Some(first) = f.first() else {
        return Err(Error::OutOfRange("need at least one equation".into()));
    };
    let m = first.nvars();
    if r > m {
        return Err(Error::OutOfRange(format!("{r} equations in {m} variables have no {r}x{r} minors")));
    }
    let jac = jacobian_matrix(f)?;
    Ok(combinations(m, r)
        .into_iter()
        .map(|cols| {
            let sub: Vec<Vec<Polynomial<C>>> =
                jac.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
            determinant(&sub)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse::parse_polynomial;
    use crate::polycore::polynomial::{variables, Variables};
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    fn ps(vars: &Variables, items: &[&str]) -> Vec<P> {
        items.iter().map(|s| parse_polynomial(s, vars).unwrap()).collect()
    }

    #[test]
    fn chart_zero_minors() {
        let v = variables(&["x1", "x2", "x3"]);
        let minors = jacobian_minors(&ps(&v, &["x1 - x2^3", "x3^2 - x1"])).unwrap();
        assert_eq!(minors, ps(&v, &["-3*x2^2", "2*x3", "-6*x2^2*x3"]));
    }

    #[test]
    fn chart_one_minors() {
        let v = variables(&["y1", "y2", "y3"]);
        let minors = jacobian_minors(&ps(&v, &["y1^2 - y2^3", "y3^2 - y1"])).unwrap();
        assert_eq!(minors, ps(&v, &["-3*y2^2", "4*y1*y3", "-6*y2^2*y3"]));
    }

    #[test]
    fn identity_jacobian() {
        let v = variables(&["x1", "x2"]);
        assert_eq!(jacobian_minors(&ps(&v, &["x1", "x2"])).unwrap(), ps(&v, &["1"]));
    }

    #[test]
    fn coordinate_functions_give_one_unit_minor() {
        let v = variables(&["a", "b", "c", "d"]);
        for cols in combinations(4, 2) {
            let f: Vec<P> = cols.iter().map(|&c| P::var(v.clone(), c)).collect();
            let minors = jacobian_minors(&f).unwrap();
            let units = minors.iter().filter(|p| !p.is_zero()).count();
            assert_eq!(units, 1);
            let nz = minors.iter().find(|p| !p.is_zero()).unwrap();
            assert!(nz.order() == Some(0) && nz.num_terms() == 1);
        }
    }

    #[test]
    fn too_many_equations() {
        let v = variables(&["x"]);
        assert!(matches!(jacobian_minors(&ps(&v, &["x", "x^2"])), Err(Error::OutOfRange(_))));
    }
}
