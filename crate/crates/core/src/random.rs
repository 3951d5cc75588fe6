//! Seeded random generators for presentations, orders and series, shared by
//! the property-test suites and the `check` subcommand of the CLI.
//!
//! Everything here is deterministic in the seed: same seed, same cases.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::monoid::MonoidPresentation;
use crate::monomial::{coeff, ExponentVector, MonomialOrder, Polynomial, WeightVector};
use crate::sagbi::SubalgebraPresentation;

/// The RNG used by all randomized suites.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random exponent vector of the given total degree (all weights one).
pub fn random_exponent_vector_of_degree(
    rng: &mut ChaCha8Rng,
    vars: usize,
    degree: u32,
) -> ExponentVector {
    let mut exps = vec![0u32; vars];
    for _ in 0..degree {
        exps[rng.random_range(0..vars)] += 1;
    }
    ExponentVector::new(exps)
}

/// Random monomial presentation: up to `max_vars` variables, between 1 and
/// `max_generators` generators of total degree in `[min_degree, max_degree]`
/// under the standard grading.
pub fn random_monoid(
    rng: &mut ChaCha8Rng,
    max_vars: usize,
    max_generators: usize,
    min_degree: u32,
    max_degree: u32,
) -> MonoidPresentation {
    let vars = rng.random_range(1..=max_vars);
    let count = rng.random_range(1..=max_generators);
    let generators = (0..count)
        .map(|_| {
            let degree = rng.random_range(min_degree..=max_degree);
            random_exponent_vector_of_degree(rng, vars, degree.max(1))
        })
        .collect();
    MonoidPresentation::with_unit_weights(vars, generators)
        .expect("generators have positive degree")
}

/// Random valid matrix order: one or two random non-negative weight rows
/// (the lex refinement appended by the constructor keeps it total), or one
/// of the named orders.
pub fn random_order(rng: &mut ChaCha8Rng, vars: usize) -> MonomialOrder {
    match rng.random_range(0..4u8) {
        0 => MonomialOrder::lex(vars),
        1 => MonomialOrder::grlex(vars),
        _ => {
            let rows = rng.random_range(1..=2usize);
            let rows = (0..rows)
                .map(|_| (0..vars).map(|_| rng.random_range(0..4i64)).collect())
                .collect();
            // rows with a zero-leading column are still valid thanks to the
            // appended lex rows, but the column criterion can reject rows
            // with negative entries; non-negative rows always pass
            MonomialOrder::from_rows(vars, rows).expect("non-negative rows are valid")
        }
    }
}

/// Random monomial with exponents below `max_exp` in each variable.
pub fn random_exponent_vector(rng: &mut ChaCha8Rng, vars: usize, max_exp: u32) -> ExponentVector {
    ExponentVector::new((0..vars).map(|_| rng.random_range(0..=max_exp)).collect())
}

/// Random homogeneous subalgebra presentation: 2-4 generators in 2-3
/// variables, degrees up to 3, integer coefficients in [-3, 3] with zero
/// polynomials discarded.
pub fn random_subalgebra(rng: &mut ChaCha8Rng) -> SubalgebraPresentation {
    let vars = rng.random_range(2..=3usize);
    let order = random_order(rng, vars);
    let count = rng.random_range(2..=4usize);
    let mut generators = Vec::with_capacity(count);
    while generators.len() < count {
        let degree = rng.random_range(1..=3u32);
        let monomials = monomials_of_degree(vars, degree);
        let mut p = Polynomial::zero(vars);
        for m in monomials {
            let c = rng.random_range(-3..=3i64);
            if c != 0 {
                p = p
                    .add(&Polynomial::term(vars, m, coeff(c, 1)))
                    .expect("same dimension");
            }
        }
        if !p.is_zero() {
            generators.push(p);
        }
    }
    SubalgebraPresentation::new(vars, WeightVector::ones(vars), generators, order)
        .expect("homogeneous nonzero generators")
}

/// All monomials of one total degree.
pub fn monomials_of_degree(vars: usize, degree: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut current = vec![0u32; vars];
    fn rec(vars: usize, idx: usize, rest: u32, current: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if idx + 1 == vars {
            current[idx] = rest;
            out.push(ExponentVector::new(current.clone()));
            return;
        }
        for e in 0..=rest {
            current[idx] = e;
            rec(vars, idx + 1, rest - e, current, out);
        }
    }
    if vars == 0 {
        return out;
    }
    rec(vars, 0, degree, &mut current, &mut out);
    out
}
