//! Degree-truncated initial algebras of homogeneous subalgebras.
//!
//! For a homogeneous subalgebra S = k[f_1, ..., f_m] of a polynomial ring,
//! the degree-n component of the initial algebra in_<(S) is exactly the set
//! of leading monomials of a row-echelon basis of S_n (columns sorted
//! descending by the order). That makes the truncated initial algebra
//! computable degree by degree even when no finite SAGBI basis exists, and
//! it is the primary path here; subduction is provided as a cross-check
//! and membership tool, since its termination is not guaranteed in general.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{row_echelon, RationalMatrix};
use crate::monoid::MonoidPresentation;
use crate::monomial::{Coeff, ExponentVector, MonomialOrder, Polynomial, WeightVector};
use crate::series::GradedSeries;

/// Default cap on the number of generator products expanded per degree.
pub const DEFAULT_MAX_PRODUCTS: usize = 200_000;

/// Default node budget for the bounded monoid-membership search.
pub const DEFAULT_SEARCH_NODES: usize = 1_000_000;

/// A homogeneous subalgebra of k[x_1..x_n] with a weighted grading and a
/// monomial order.
#[derive(Debug, Clone)]
pub struct SubalgebraPresentation {
    vars: usize,
    weights: WeightVector,
    generators: Vec<Polynomial>,
    degrees: Vec<u64>,
    order: MonomialOrder,
}

impl SubalgebraPresentation {
    /// Validate that every generator is nonzero, homogeneous for the given
    /// weights, and of degree >= 1.
    pub fn new(
        vars: usize,
        weights: WeightVector,
        generators: Vec<Polynomial>,
        order: MonomialOrder,
    ) -> Result<Self> {
        if weights.dim() != vars {
            return Err(Error::DimensionMismatch {
                expected: vars,
                got: weights.dim(),
            });
        }
        if order.vars() != vars {
            return Err(Error::DimensionMismatch {
                expected: vars,
                got: order.vars(),
            });
        }
        let mut degrees = Vec::with_capacity(generators.len());
        for (i, f) in generators.iter().enumerate() {
            if f.vars() != vars {
                return Err(Error::DimensionMismatch {
                    expected: vars,
                    got: f.vars(),
                });
            }
            if f.is_zero() {
                return Err(Error::InvalidGenerator {
                    index: i,
                    reason: "zero polynomial".into(),
                });
            }
            match f.homogeneous_degree(&weights)? {
                Some(0) => {
                    return Err(Error::InvalidGenerator {
                        index: i,
                        reason: "generators must have degree >= 1".into(),
                    })
                }
                Some(d) => degrees.push(d),
                None => {
                    return Err(Error::InvalidGenerator {
                        index: i,
                        reason: "generator is not homogeneous for the given weights".into(),
                    })
                }
            }
        }
        Ok(Self {
            vars,
            weights,
            generators,
            degrees,
            order,
        })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn generator_degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }
}

/// Echelon basis of the degree-n component with its leading-monomial set
/// (descending in the order).
#[derive(Debug, Clone)]
pub struct DegreeComponent {
    pub basis: Vec<Polynomial>,
    pub leading_monomials: Vec<ExponentVector>,
}

/// Compute a row-echelon basis of S_n.
///
/// Enumerates all monomials in the generators of weighted degree n (the
/// exponent tuples c with sum c_i deg(f_i) = n), expands the products,
/// row-reduces with columns sorted descending by the order, and reads off
/// the pivot monomials; in the homogeneous case those are exactly
/// in_<(S)_n. Exceeding `max_products` yields a capacity error carrying
/// the count that overflowed.
pub fn degree_component_basis(
    s: &SubalgebraPresentation,
    n: u64,
    max_products: usize,
) -> Result<DegreeComponent> {
    if n == 0 {
        return Ok(DegreeComponent {
            basis: vec![Polynomial::one(s.vars)],
            leading_monomials: vec![ExponentVector::one(s.vars)],
        });
    }
    let combos = degree_combinations(&s.degrees, n, max_products)?;
    if combos.is_empty() {
        return Ok(DegreeComponent {
            basis: Vec::new(),
            leading_monomials: Vec::new(),
        });
    }

    let mut products = Vec::with_capacity(combos.len());
    for combo in &combos {
        let mut p = Polynomial::one(s.vars);
        for (f, &e) in s.generators.iter().zip(combo) {
            if e > 0 {
                p = p.mul(&f.pow(e)?)?;
            }
        }
        products.push(p);
    }

    // all monomials that occur, sorted descending by the order
    let mut monomials: BTreeSet<ExponentVector> = BTreeSet::new();
    for p in &products {
        for (m, _) in p.terms() {
            monomials.insert(m.clone());
        }
    }
    let mut columns: Vec<ExponentVector> = monomials.into_iter().collect();
    columns.sort_by(|a, b| s.order.cmp_vectors(b, a));

    let rows: Vec<Vec<BigRational>> = products
        .iter()
        .map(|p| columns.iter().map(|m| p.coeff_of(m)).collect())
        .collect();
    let matrix = RationalMatrix::from_rows(rows)?;
    let pivot_order: Vec<usize> = (0..matrix.cols()).collect();
    let (echelon, pivots) = row_echelon(&matrix, &pivot_order)?;

    let mut basis = Vec::with_capacity(pivots.len());
    let mut leading = Vec::with_capacity(pivots.len());
    for (row, &col) in pivots.iter().enumerate() {
        let terms = columns
            .iter()
            .enumerate()
            .filter(|(c, _)| !echelon.get(row, *c).is_zero())
            .map(|(c, m)| (m.clone(), echelon.get(row, c).clone()));
        basis.push(Polynomial::from_terms(s.vars, terms)?);
        leading.push(columns[col].clone());
    }
    Ok(DegreeComponent {
        basis,
        leading_monomials: leading,
    })
}

/// All exponent tuples c with sum c_i * degrees_i = target.
fn degree_combinations(degrees: &[u64], target: u64, cap: usize) -> Result<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; degrees.len()];
    fn rec(
        degrees: &[u64],
        idx: usize,
        remaining: u64,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        cap: usize,
    ) -> Result<()> {
        if idx == degrees.len() {
            if remaining == 0 {
                if out.len() >= cap {
                    return Err(Error::CapacityExceeded {
                        count: out.len() + 1,
                        limit: cap,
                    });
                }
                out.push(current.clone());
            }
            return Ok(());
        }
        let max_e = remaining / degrees[idx];
        for e in 0..=max_e {
            current[idx] = e as u32;
            rec(degrees, idx + 1, remaining - e * degrees[idx], current, out, cap)?;
        }
        current[idx] = 0;
        Ok(())
    }
    rec(degrees, 0, target, &mut current, &mut out, cap)?;
    Ok(out)
}

/// Search for exponents e with sum e_i * gens_i = target (componentwise),
/// trying larger exponents first so the first hit is the lexicographically
/// greatest tuple over the generator list as given.
///
/// Returns `Ok(None)` when no factorization exists; errs when the node
/// budget runs out.
pub fn monoid_factorization(
    target: &ExponentVector,
    gens: &[ExponentVector],
    node_budget: usize,
) -> Result<Option<Vec<u32>>> {
    let mut remaining = node_budget;
    let mut exponents = vec![0u32; gens.len()];
    let found = search(target.clone(), gens, 0, &mut exponents, &mut remaining)
        .map_err(|_| Error::SearchBudget { budget: node_budget })?;
    Ok(found.then_some(exponents))
}

fn search(
    target: ExponentVector,
    gens: &[ExponentVector],
    idx: usize,
    exponents: &mut Vec<u32>,
    budget: &mut usize,
) -> Result<bool> {
    if *budget == 0 {
        return Err(Error::SearchBudget { budget: 0 });
    }
    *budget -= 1;
    if target.is_one() {
        for e in exponents[idx..].iter_mut() {
            *e = 0;
        }
        return Ok(true);
    }
    if idx == gens.len() {
        return Ok(false);
    }
    let g = &gens[idx];
    let max_e = if g.is_one() {
        0 // a trivial generator contributes nothing; pin its exponent
    } else {
        g.exps()
            .iter()
            .zip(target.exps())
            .filter(|(&ge, _)| ge > 0)
            .map(|(&ge, &te)| te / ge)
            .min()
            .unwrap_or(0)
    };
    for e in (0..=max_e).rev() {
        let mut rem = target.clone();
        if e > 0 {
            let mut scaled = g.clone();
            for _ in 1..e {
                scaled = scaled.add(g).expect("same dimension");
            }
            rem = match rem.checked_sub(&scaled) {
                Some(r) => r,
                None => continue,
            };
        }
        exponents[idx] = e;
        if search(rem, gens, idx + 1, exponents, budget)? {
            return Ok(true);
        }
    }
    exponents[idx] = 0;
    Ok(false)
}

/// Subduction: repeatedly cancel the leading term of `f` by a product of
/// elements of `F` whose leading monomials multiply to it.
///
/// Stops when the remainder is zero or its leading monomial admits no
/// factorization into the leading monomials of `F`; hitting `max_steps`
/// with a still-reducible remainder is an explicit error, never a silent
/// truncation. Returns the remainder together with the number of
/// reduction steps performed.
pub fn subduct(
    f: &Polynomial,
    basis: &[Polynomial],
    ord: &MonomialOrder,
    max_steps: usize,
) -> Result<(Polynomial, usize)> {
    let mut leads = Vec::with_capacity(basis.len());
    for (i, g) in basis.iter().enumerate() {
        if g.is_zero() {
            return Err(Error::InvalidGenerator {
                index: i,
                reason: "subduction basis contains the zero polynomial".into(),
            });
        }
        leads.push(g.leading_term(ord)?);
    }
    let lead_monomials: Vec<ExponentVector> = leads.iter().map(|(m, _)| m.clone()).collect();

    let mut remainder = f.clone();
    let mut steps = 0usize;
    loop {
        if remainder.is_zero() {
            return Ok((remainder, steps));
        }
        let (m, c) = remainder.leading_term(ord)?;
        let Some(exponents) =
            monoid_factorization(&m, &lead_monomials, DEFAULT_SEARCH_NODES)?
        else {
            return Ok((remainder, steps));
        };
        if steps >= max_steps {
            return Err(Error::SubductionBudget { max_steps });
        }
        let mut product = Polynomial::one(f.vars());
        let mut lead_coeff = Coeff::one();
        for ((g, (_, lc)), &e) in basis.iter().zip(&leads).zip(&exponents) {
            if e > 0 {
                product = product.mul(&g.pow(e)?)?;
                for _ in 0..e {
                    lead_coeff *= lc;
                }
            }
        }
        let scale = c / lead_coeff;
        remainder = remainder.sub(&product.scale(&scale))?;
        steps += 1;
    }
}

/// A discovered generator of the truncated initial algebra.
#[derive(Debug, Clone)]
pub struct NewGenerator {
    pub monomial: ExponentVector,
    pub degree: u64,
    /// An element of S whose leading monomial is `monomial`.
    pub witness: Polynomial,
}

/// The initial algebra of S computed through degree D.
#[derive(Debug, Clone)]
pub struct InitialAlgebraTruncation {
    pub degree_bound: u64,
    /// dim_k S_n for 0 <= n <= D.
    pub dims: Vec<usize>,
    /// in_<(S)_n for 1 <= n <= D (index n-1), descending in the order.
    pub leads_by_degree: Vec<Vec<ExponentVector>>,
    /// Monomials that are not products of previously discovered ones.
    pub new_generators: Vec<NewGenerator>,
    /// Least degree s with no new generators in (s, D]; absent when a new
    /// generator still appears at D itself.
    pub stabilized_at: Option<u64>,
}

impl InitialAlgebraTruncation {
    pub fn new_generator_monomials(&self) -> Vec<ExponentVector> {
        self.new_generators
            .iter()
            .map(|g| g.monomial.clone())
            .collect()
    }
}

/// Compute leading-monomial sets for all degrees up to D and mark the
/// monomials that cannot be factored into previously discovered ones.
///
/// Requires D at least the maximum generator degree.
pub fn initial_algebra_truncation(
    s: &SubalgebraPresentation,
    degree_bound: u64,
    max_products: usize,
) -> Result<InitialAlgebraTruncation> {
    let max_gen_degree = s.degrees.iter().copied().max().unwrap_or(0);
    if degree_bound < max_gen_degree {
        return Err(Error::SeriesPrecondition(format!(
            "degree bound {degree_bound} is below the maximum generator degree {max_gen_degree}"
        )));
    }
    let mut dims = vec![1usize];
    let mut leads_by_degree = Vec::new();
    let mut new_generators: Vec<NewGenerator> = Vec::new();
    let mut discovered: Vec<ExponentVector> = Vec::new();
    let mut last_new = 0u64;
    for n in 1..=degree_bound {
        let component = degree_component_basis(s, n, max_products)?;
        dims.push(component.leading_monomials.len());
        for (m, witness) in component
            .leading_monomials
            .iter()
            .zip(&component.basis)
        {
            if monoid_factorization(m, &discovered, DEFAULT_SEARCH_NODES)?.is_none() {
                discovered.push(m.clone());
                new_generators.push(NewGenerator {
                    monomial: m.clone(),
                    degree: n,
                    witness: witness.clone(),
                });
                last_new = n;
            }
        }
        leads_by_degree.push(component.leading_monomials);
    }
    let stabilized_at = (last_new < degree_bound).then_some(last_new);
    Ok(InitialAlgebraTruncation {
        degree_bound,
        dims,
        leads_by_degree,
        new_generators,
        stabilized_at,
    })
}

/// Outcome of comparing dim_k S_n against the Hilbert function of the
/// monoid generated by the discovered initial-algebra generators.
#[derive(Debug, Clone)]
pub struct PoincareEqualityReport {
    pub degree_bound: u64,
    pub subalgebra_dims: Vec<usize>,
    pub initial_algebra_counts: Vec<usize>,
    pub first_discrepancy: Option<usize>,
}

impl PoincareEqualityReport {
    pub fn equal(&self) -> bool {
        self.first_discrepancy.is_none()
    }

    pub fn subalgebra_series(&self) -> GradedSeries {
        GradedSeries::from_u64s(
            &self
                .subalgebra_dims
                .iter()
                .map(|&d| d as u64)
                .collect::<Vec<_>>(),
        )
    }
}

/// Check that P_S and P_{in(S)} agree degree by degree up to D.
///
/// The left side is counted by row-echelon ranks of the components of S;
/// the right side by the breadth-first monoid enumeration over the
/// discovered generators. A discrepancy would contradict the equality of
/// the two Poincare series and is reported, not thrown.
pub fn verify_poincare_equality(
    s: &SubalgebraPresentation,
    degree_bound: u64,
    max_products: usize,
    max_elements: usize,
) -> Result<PoincareEqualityReport> {
    let truncation = initial_algebra_truncation(s, degree_bound, max_products)?;
    let monoid = MonoidPresentation::new(
        s.vars,
        s.weights.clone(),
        truncation.new_generator_monomials(),
    )?;
    let h = monoid.hilbert_function(degree_bound as usize, max_elements)?;
    let counts: Vec<usize> = h
        .coeffs()
        .iter()
        .map(|c| c.try_into().unwrap_or(usize::MAX))
        .collect();
    let first_discrepancy = (0..=degree_bound as usize)
        .find(|&n| truncation.dims[n] != counts[n]);
    Ok(PoincareEqualityReport {
        degree_bound,
        subalgebra_dims: truncation.dims,
        initial_algebra_counts: counts,
        first_discrepancy,
    })
}

/// Report of the structural checks on the subalgebra k[x+y+z, xy, xy^2]
/// under the order that compares a_1 + a_2 first and breaks ties
/// lexicographically.
#[derive(Debug, Clone)]
pub struct PureYPowerReport {
    pub degree_bound: u64,
    /// No leading monomial of any echelon basis element is a pure power of y.
    pub no_pure_y_power: bool,
    /// The y-exponents m for which xy^m was discovered as a new generator.
    pub found_y_exponents: Vec<u64>,
    /// Expected but missing y-exponents (2..=D-1); empty on success.
    pub missing_y_exponents: Vec<u64>,
    /// The degree-1 component has leading monomial set {x}.
    pub degree_one_lead_is_x: bool,
}

impl PureYPowerReport {
    pub fn pass(&self) -> bool {
        self.no_pure_y_power && self.missing_y_exponents.is_empty() && self.degree_one_lead_is_x
    }
}

/// Build k[x+y+z, xy, xy^2] with the a_1+a_2-then-lex order and verify:
/// no pure power of y ever appears as a leading monomial, and xy^m is
/// discovered as a new generator for every 2 <= m <= D-1 (so the initial
/// algebra keeps growing). Requires D >= 3.
pub fn example53_invariant_check(degree_bound: u64, max_products: usize) -> Result<PureYPowerReport> {
    if degree_bound < 3 {
        return Err(Error::SeriesPrecondition(
            "the pure-y-power check needs degree bound >= 3".into(),
        ));
    }
    let s = regular_three_generator_subalgebra()?;
    let truncation = initial_algebra_truncation(&s, degree_bound, max_products)?;

    let is_pure_y = |m: &ExponentVector| m.exp(0) == 0 && m.exp(2) == 0 && m.exp(1) > 0;
    let no_pure_y_power = truncation
        .leads_by_degree
        .iter()
        .flatten()
        .all(|m| !is_pure_y(m));

    let mut found: Vec<u64> = truncation
        .new_generators
        .iter()
        .filter(|g| g.monomial.exp(0) == 1 && g.monomial.exp(2) == 0 && g.monomial.exp(1) >= 2)
        .map(|g| u64::from(g.monomial.exp(1)))
        .collect();
    found.sort_unstable();
    let missing: Vec<u64> = (2..=degree_bound - 1)
        .filter(|m| !found.contains(m))
        .collect();

    let degree_one_lead_is_x = truncation.leads_by_degree[0]
        == vec![ExponentVector::var(3, 0)];

    Ok(PureYPowerReport {
        degree_bound,
        no_pure_y_power,
        found_y_exponents: found,
        missing_y_exponents: missing,
        degree_one_lead_is_x,
    })
}

/// S = k[x+y+z, xy, xy^2] in k[x, y, z] with the order that compares
/// a_1 + a_2 first, then lex. The three generators are algebraically
/// independent, so S is a polynomial ring in them.
pub fn regular_three_generator_subalgebra() -> Result<SubalgebraPresentation> {
    let x = Polynomial::var(3, 0);
    let y = Polynomial::var(3, 1);
    let z = Polynomial::var(3, 2);
    let g1 = x.add(&y)?.add(&z)?;
    let g2 = x.mul(&y)?;
    let g3 = g2.mul(&y)?;
    SubalgebraPresentation::new(
        3,
        WeightVector::ones(3),
        vec![g1, g2, g3],
        MonomialOrder::from_rows(3, vec![vec![1, 1, 0]])?,
    )
}

/// S = k[x+y, xy, xy^2] in k[x, y]: the classic subalgebra whose initial
/// algebra is not finitely generated for any order with x > y.
pub fn hypersurface_three_generator_subalgebra(order: MonomialOrder) -> Result<SubalgebraPresentation> {
    let x = Polynomial::var(2, 0);
    let y = Polynomial::var(2, 1);
    let g1 = x.add(&y)?;
    let g2 = x.mul(&y)?;
    let g3 = g2.mul(&y)?;
    SubalgebraPresentation::new(2, WeightVector::ones(2), vec![g1, g2, g3], order)
}
