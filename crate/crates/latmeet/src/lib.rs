//! Computational commutative algebra for join-meet ideals of finite lattices.
//!
//! A finite lattice `L` has a presentation ideal in the polynomial ring with one
//! variable per lattice element: for every incomparable pair `a, b` the binomial
//! `x_a x_b - x_{a∧b} x_{a∨b}` is a generator. This crate builds those ideals and
//! computes the invariants that govern their homological behaviour:
//!
//! * [`lattice`] — finite posets and lattices: construction from cover relations,
//!   modularity / distributivity tests, pentagon and diamond sublattice search,
//!   standard families, and enumeration of all small lattices up to isomorphism.
//! * [`polyring`] — multivariate polynomials over an exact field, with lex,
//!   deglex, degrevlex and block elimination orders.
//! * [`groebner`] — Buchberger's algorithm (reduced bases), normal forms,
//!   elimination, ideal quotients, and combinatorial monomial-ideal arithmetic.
//! * [`hilbert`] — Hilbert series of monomial quotients by pivot recursion,
//!   Krull dimension, multiplicity.
//! * [`betti`] — graded Betti tables via Koszul complex homology with exact
//!   rank computations, monomial-ideal tables via upper-Koszul simplicial
//!   complexes, linear quotients, and the derived invariants (depth, projective
//!   dimension, regularity, Cohen-Macaulay / Gorenstein / linear-resolution flags).
//! * [`joinmeet`] — the lattice-to-ideal pipeline: presentations, algebra
//!   retracts onto induced sublattices, and verification suites for the known
//!   closed forms attached to the diamond and related families.
//!
//! All coefficient arithmetic is exact. The computational core is generic over a
//! [`Scalar`] field; the only instantiation shipped (and the one every public
//! pipeline uses) is arbitrary-precision rationals, aliased as [`Rat`].
//!
//! ```
//! use latmeet::joinmeet::{join_meet_ideal, JoinMeetPresentation, OrderSpec};
//! use latmeet::lattice::families::diamond;
//! use latmeet::Rat;
//!
//! let d5 = diamond(3).unwrap();
//! let pres: JoinMeetPresentation<Rat> = join_meet_ideal(&d5, &OrderSpec::default()).unwrap();
//! assert_eq!(pres.ideal().gens().len(), 3); // three incomparable middle pairs
//! ```

pub mod betti;
pub mod groebner;
pub mod hilbert;
pub mod joinmeet;
pub mod lattice;
pub mod linalg;
pub mod polyring;

use std::fmt;

use num_traits::{Num, Signed};

/// Exact field scalars the computational core is generic over.
///
/// Blanket-implemented for anything with exact ring and division operators from
/// `num-traits`. The shipped instantiation is [`Rat`]; floating point types are
/// deliberately not used anywhere in this crate (ranks, normal forms and series
/// coefficients must be exact).
pub trait Scalar:
    Num + Signed + Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Num + Signed + Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

/// Arbitrary-precision rational numbers, the working coefficient field.
pub type Rat = num_rational::BigRational;

/// Polynomials over [`Rat`].
pub type RatPoly = polyring::Polynomial<Rat>;

/// Ideals over [`Rat`].
pub type RatIdeal = groebner::Ideal<Rat>;

/// Gröbner bases over [`Rat`].
pub type RatBasis = groebner::GroebnerBasis<Rat>;

/// Resource ceilings for the iterative algorithms.
///
/// `max_pair_reductions` bounds the number of S-pair reductions Buchberger's
/// algorithm may perform; `max_degree` bounds the total degree of any element
/// appearing during the computation. Exceeding either aborts with a resource
/// error rather than looping or thrashing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_pair_reductions: usize,
    pub max_degree: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_pair_reductions: 50_000, max_degree: 40 }
    }
}

#[cfg(test)]
mod scalar_tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn rational_scalar_is_exact() {
        fn third<C: Scalar>() -> C {
            C::one() / (C::one() + C::one() + C::one())
        }
        let t: Rat = third();
        assert_eq!(t * Rat::from_integer(3.into()), Rat::one());
    }
}
