//! Yokonuma-type Hecke algebras ℋ_{b,n} over exact cyclotomic
//! rational-function fields: the algebra in its standard basis, the torus
//! idempotents and block decomposition, explicit matrices for every
//! irreducible module V^λ, and a verification engine that checks the
//! defining relations, dimension counts, irreducibility, and agreement with
//! double-coset convolution algebras of small finite general linear groups.
//!
//! ```
//! use yokonuma::hecke::HeckeAlgebra;
//! use yokonuma::repr::build_module;
//! use yokonuma::tableaux::BPartition;
//!
//! let alg = HeckeAlgebra::generic(2, 2);
//! let r = alg.r(1);
//! let sq = alg.mul(&r, &r);
//! assert_eq!(yokonuma::expr::format_result(&alg, &sq), "q·t_e + a·t_{(s1,(0,1))} + a·t_{(s1,(1,0))}");
//!
//! let v = build_module(&BPartition::parse("[[1],[1]]")?);
//! assert_eq!(v.r_matrix(1).mul(v.r_matrix(1)), v.act_matrix(&sq)?);
//! # Ok::<(), yokonuma::Error>(())
//! ```

pub mod characters;
pub mod cli;
pub mod error;
pub mod expr;
pub mod group;
pub mod hecke;
pub mod linalg;
pub mod repr;
pub mod scalars;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
