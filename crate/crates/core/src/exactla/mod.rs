//! Exact dense linear algebra over prime fields and the rationals.
//!
//! Every homological computation in this crate reduces to the three
//! primitives here: [`Matrix::rref`], [`Matrix::kernel_basis`] and
//! [`Matrix::solve`]. All of them are deterministic, so downstream bases and
//! reports are bit-stable.

mod field;
mod matrix;

pub use field::{FieldSpec, Scalar};
pub use matrix::{Matrix, Rref};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("cannot parse field element {0:?}")]
    Parse(String),
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn small_matrix(p: u32) -> impl Strategy<Value = Matrix> {
        (0usize..5, 0usize..5).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..p, r * c).prop_map(move |v| {
                let field = FieldSpec::Prime(p);
                Matrix::new(field, r, c, v.into_iter().map(Scalar::Mod).collect()).unwrap()
            })
        })
    }

    fn rational_matrix() -> impl Strategy<Value = Matrix> {
        (0usize..4, 0usize..4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-4i64..5, r * c).prop_map(move |v| {
                let q = FieldSpec::rationals();
                let data = v.into_iter().map(|x| q.from_i64(x)).collect();
                Matrix::new(q, r, c, data).unwrap()
            })
        })
    }

    fn check(m: &Matrix) {
        let r = m.rref();
        assert_eq!(r.rank, m.transpose().rank());
        assert_eq!(r.matrix.rref().matrix, r.matrix);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), m.cols() - r.rank);
        for v in &ker {
            assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    proptest! {
        #[test]
        fn rank_nullity_and_idempotence_f2(m in small_matrix(2)) { check(&m); }

        #[test]
        fn rank_nullity_and_idempotence_f7(m in small_matrix(7)) { check(&m); }

        #[test]
        fn rank_nullity_and_idempotence_q(m in rational_matrix()) { check(&m); }

        #[test]
        fn solve_returns_a_solution(m in small_matrix(5), seed in 0u32..5) {
            let f = m.field().clone();
            let x: Vec<Scalar> = (0..m.cols()).map(|i| Scalar::Mod((seed + i as u32) % 5)).collect();
            let b = m.mul_vec(&x).unwrap();
            let sol = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&sol).unwrap(), b);
            let _ = f;
        }
    }
}
