//! Named example algebras in their conventional bases.

use num_traits::{Signed, Zero};

use crate::lie::{LieAlgebra, LieError};
use crate::rational::{int, Rational};

pub const NAMES: [&str; 6] = ["abelian", "aff_r", "sl2", "so3", "h3", "oscillator"];

/// Optional parameters for [`by_name`].
#[derive(Debug, Clone, Default)]
pub struct Params {
    /// Dimension of `abelian` (default 1).
    pub n: Option<usize>,
    /// `λ` of `oscillator` (default 1).
    pub lambda: Option<Rational>,
}

pub fn by_name(name: &str, params: &Params) -> Result<LieAlgebra, LieError> {
    match name {
        "abelian" => Ok(LieAlgebra::abelian(params.n.unwrap_or(1))),
        "aff_r" => Ok(aff_r()),
        "sl2" => Ok(sl2()),
        "so3" => Ok(so3()),
        "h3" => Ok(h3()),
        "oscillator" => oscillator(params.lambda.clone().unwrap_or_else(|| int(1))),
        other => Err(LieError::UnknownName(other.to_string())),
    }
}

/// `[e1, e2] = e2`.
pub fn aff_r() -> LieAlgebra {
    LieAlgebra::builder("aff_r", 2)
        .bracket(0, 1, vec![(1, int(1))])
        .build()
        .expect("aff_r")
}

/// `[e1, e2] = -2 e2`, `[e1, e3] = 2 e3`, `[e2, e3] = -e1`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::builder("sl2", 3)
        .bracket(0, 1, vec![(1, int(-2))])
        .bracket(0, 2, vec![(2, int(2))])
        .bracket(1, 2, vec![(0, int(-1))])
        .build()
        .expect("sl2")
}

/// `[e1, e2] = -e3`, `[e1, e3] = e2`, `[e2, e3] = -e1`.
pub fn so3() -> LieAlgebra {
    LieAlgebra::builder("so3", 3)
        .bracket(0, 1, vec![(2, int(-1))])
        .bracket(0, 2, vec![(1, int(1))])
        .bracket(1, 2, vec![(0, int(-1))])
        .build()
        .expect("so3")
}

/// Heisenberg algebra, `[e1, e2] = e3`.
pub fn h3() -> LieAlgebra {
    LieAlgebra::builder("h3", 3)
        .bracket(0, 1, vec![(2, int(1))])
        .build()
        .expect("h3")
}

/// Oscillator algebra on `(e_-1, e_0, e_1, ě_1)`:
/// `[e_-1, e_1] = λ ě_1`, `[e_-1, ě_1] = -λ e_1`, `[e_1, ě_1] = e_0`.
pub fn oscillator(lambda: Rational) -> Result<LieAlgebra, LieError> {
    if lambda.is_zero() || lambda.is_negative() {
        return Err(LieError::InvalidParam(format!(
            "oscillator needs lambda > 0, got {lambda}"
        )));
    }
    let name = if lambda == int(1) {
        "oscillator".to_string()
    } else {
        format!("oscillator({lambda})")
    };
    LieAlgebra::builder(name, 4)
        .labels(["e-1", "e0", "e1", "ě1"])
        .bracket(0, 2, vec![(3, lambda.clone())])
        .bracket(0, 3, vec![(2, -lambda)])
        .bracket(2, 3, vec![(1, int(1))])
        .build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn lookup() {
        for name in NAMES {
            assert!(by_name(name, &Params::default()).is_ok(), "{name}");
        }
        let p = Params {
            n: Some(4),
            ..Params::default()
        };
        let a = by_name("abelian", &p).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.is_abelian());
        assert!(matches!(
            by_name("e8", &Params::default()),
            Err(LieError::UnknownName(_))
        ));
    }

    #[test]
    fn oscillator_brackets() {
        let g = oscillator(int(1)).unwrap();
        assert_eq!(g.basis_bracket(0, 2), &[int(0), int(0), int(0), int(1)]);
        assert_eq!(g.basis_bracket(0, 3), &[int(0), int(0), int(-1), int(0)]);
        assert_eq!(g.basis_bracket(2, 3), &[int(0), int(1), int(0), int(0)]);
        assert!(oscillator(frac(3, 2)).is_ok());
        assert!(matches!(oscillator(int(0)), Err(LieError::InvalidParam(_))));
        assert!(matches!(
            oscillator(int(-2)),
            Err(LieError::InvalidParam(_))
        ));
    }
}
