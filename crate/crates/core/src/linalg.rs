use crate::field::FieldElement;

/// Determinant of a square matrix by cofactor expansion along the first row.
///
/// Only used for the small (2x2 and 4x4) determinant forms of Archimedes'
/// function and the Triple spread function.
pub(crate) fn det(m: &[Vec<FieldElement>]) -> FieldElement {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    match n {
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut acc = m[0][0].zero_like();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<FieldElement>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &det(&minor);
                acc = if col % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    #[test]
    fn small_determinants() {
        let q = FieldContext::rationals();
        let m = |rows: &[&[i64]]| -> Vec<Vec<FieldElement>> {
            rows.iter()
                .map(|r| r.iter().map(|&v| q.from_integer(v)).collect())
                .collect()
        };
        assert_eq!(det(&m(&[&[1, 2], &[3, 4]])), q.from_integer(-2));
        assert_eq!(det(&m(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]])), q.from_integer(24));
        // permutation matrix of a 4-cycle has sign -1
        let p = m(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0]]);
        assert_eq!(det(&p), q.from_integer(-1));
    }
}
