//! Parser for degree-vector expressions.
//!
//! Two forms, chosen by the presence of `^`:
//!
//! * multiplicity syntax `"3^1,2^6,1^3"` — each token `d^m` contributes `m`
//!   vertices of degree `d`; the expanded vector is sorted non-increasing
//!   and assigned to vertices in that order;
//! * plain comma list `"1,2,2,1"` — taken literally as the per-vertex
//!   degree vector.

use crate::graph::{DegreeVector, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DegreeExprError {
    #[error("token {index} ({token:?}): {message}")]
    Malformed {
        index: usize,
        token: String,
        message: String,
    },
    #[error(transparent)]
    Infeasible(#[from] GraphError),
}

/// Parses a degree expression into a validated [`DegreeVector`].
pub fn parse_degree_expression(expr: &str) -> Result<DegreeVector, DegreeExprError> {
    let tokens: Vec<&str> = expr.split(',').map(str::trim).collect();
    let multiplicity = expr.contains('^');
    let mut degrees = Vec::new();
    for (index, token) in tokens.iter().enumerate() {
        let malformed = |message: &str| DegreeExprError::Malformed {
            index,
            token: token.to_string(),
            message: message.to_string(),
        };
        if token.is_empty() {
            return Err(malformed("empty token"));
        }
        if multiplicity {
            let (d, m) = match token.split_once('^') {
                Some((d, m)) => (d, m),
                None => (*token, "1"),
            };
            let d: usize = d.parse().map_err(|_| malformed("invalid degree"))?;
            let m: usize = m.parse().map_err(|_| malformed("invalid multiplicity"))?;
            if m == 0 {
                return Err(malformed("multiplicity must be positive"));
            }
            degrees.extend(std::iter::repeat(d).take(m));
        } else {
            let d: usize = token.parse().map_err(|_| malformed("invalid degree"))?;
            degrees.push(d);
        }
    }
    if multiplicity {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
    }
    Ok(DegreeVector::new(degrees)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicity_syntax_sorts_descending() {
        let d = parse_degree_expression("3^1,2^6,1^3").unwrap();
        assert_eq!(d.as_slice(), &[3, 2, 2, 2, 2, 2, 2, 1, 1, 1]);
        let d = parse_degree_expression("1^4").unwrap();
        assert_eq!(d.as_slice(), &[1, 1, 1, 1]);
        // Degree vector of the leaf-decorated K_{3,3}.
        let d = parse_degree_expression("4^2,3^4,1^2").unwrap();
        assert_eq!(d.as_slice(), &[4, 4, 3, 3, 3, 3, 1, 1]);
        // Mixed tokens: bare degrees get multiplicity one.
        let d = parse_degree_expression("2^2,1,1").unwrap();
        assert_eq!(d.as_slice(), &[2, 2, 1, 1]);
    }

    #[test]
    fn plain_lists_stay_positional() {
        let d = parse_degree_expression("1,2,2,1").unwrap();
        assert_eq!(d.as_slice(), &[1, 2, 2, 1]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_degree_expression("2^x"),
            Err(DegreeExprError::Malformed { .. })
        ));
        assert!(matches!(
            parse_degree_expression(""),
            Err(DegreeExprError::Malformed { .. })
        ));
        assert!(matches!(
            parse_degree_expression("3^0"),
            Err(DegreeExprError::Malformed { .. })
        ));
        // Odd sum is infeasible.
        assert_eq!(
            parse_degree_expression("1^3"),
            Err(DegreeExprError::Infeasible(GraphError::OddDegreeSum))
        );
        assert!(matches!(
            parse_degree_expression("9^2"),
            Err(DegreeExprError::Infeasible(GraphError::DegreeTooLarge { .. }))
        ));
    }
}
