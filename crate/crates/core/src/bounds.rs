//! Lower/upper bound formulas for the elliptic Sombor and Euler Sombor
//! indices of joins and corona products, evaluated from factor
//! parameters alone.
//!
//! Every bound has the same shape: a factor-1 edge term, a factor-2 edge
//! term, and a cross-edge term, each evaluated at the degree extremes.
//! Writing `a = D1 + n2` for the first factor's shifted degree bound and
//! `b = D2 + n1` (join) or `c = D2 + 1` (corona) for the second's, the
//! upper bounds are
//!
//! * `eso-join`:   `2*sqrt(2)*m1*a^2 + 2*sqrt(2)*m2*b^2 + n1*n2*(a+b)*sqrt(a^2+b^2)`
//! * `eu-join`:    `sqrt(3)*m1*a + sqrt(3)*m2*b + n1*n2*sqrt(a^2+b^2+a*b)`
//! * `eso-corona`: `2*sqrt(2)*m1*a^2 + 2*sqrt(2)*n1*m2*c^2 + n1*n2*(a+c)*sqrt(a^2+c^2)`
//! * `eu-corona`:  `sqrt(3)*m1*a + sqrt(3)*n1*m2*c + n1*n2*sqrt(a^2+c^2+a*c)`
//!
//! and each lower bound substitutes the minimum degrees for the maxima.
//! When both factors are regular the two substitutions coincide and the
//! bound is exact; [`regular_exact`] evaluates that common value
//! (including the cross-term radical, which the bound formula requires).
//!
//! The `eu-join` bound exists in two variants. The default,
//! [`FormulaVariant::ProofConclusion`], uses `b = D2 + n1` factors,
//! consistent with the join shifting second-factor degrees by `n1`. The
//! alternative [`FormulaVariant::Statement`] uses corona-style `c = D2 + 1`
//! factors and `n1*m2` weighting; it is retained only so the verification
//! sweep can hunt for counterexamples to it. For every other kind the two
//! variants are the same formula.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, GraphParams};
use crate::indices::{elliptic_sombor, euler_sombor};
use crate::products::ProductKind;

/// Errors from bound evaluation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("exact evaluation requires both factors to be regular")]
    NotRegular,
}

/// Which index/product combination a bound targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    EsoJoin,
    EuJoin,
    EsoCorona,
    EuCorona,
}

impl BoundKind {
    pub const ALL: [BoundKind; 4] = [
        BoundKind::EsoJoin,
        BoundKind::EuJoin,
        BoundKind::EsoCorona,
        BoundKind::EuCorona,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::EsoJoin => "eso-join",
            BoundKind::EuJoin => "eu-join",
            BoundKind::EsoCorona => "eso-corona",
            BoundKind::EuCorona => "eu-corona",
        }
    }

    /// The product construction this bound applies to.
    pub fn product_kind(self) -> ProductKind {
        match self {
            BoundKind::EsoJoin | BoundKind::EuJoin => ProductKind::Join,
            BoundKind::EsoCorona | BoundKind::EuCorona => ProductKind::Corona,
        }
    }

    /// The index the bound brackets, evaluated on a concrete graph.
    pub fn index_of(self, g: &Graph) -> Result<f64, GraphError> {
        match self {
            BoundKind::EsoJoin | BoundKind::EsoCorona => elliptic_sombor(g),
            BoundKind::EuJoin | BoundKind::EuCorona => euler_sombor(g),
        }
    }

    /// The variant whose bracketing this toolkit vouches for.
    /// Only `eu-join` has a suspect alternative.
    pub fn corrected_variant(self) -> FormulaVariant {
        match self {
            BoundKind::EuJoin => FormulaVariant::ProofConclusion,
            _ => FormulaVariant::Statement,
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown bound kind {s:?} (expected one of eso-join, eu-join, eso-corona, eu-corona)"))
    }
}

/// Which of the two published forms of a bound formula to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaVariant {
    /// The form as stated. For `eu-join` this carries `D2 + 1` factors
    /// and fails bracketing; kept for counterexample reporting.
    Statement,
    /// The form with join-consistent `D2 + n1` factors. Default and
    /// corrected variant for `eu-join`; identical to `Statement`
    /// everywhere else.
    ProofConclusion,
}

impl FormulaVariant {
    pub const ALL: [FormulaVariant; 2] =
        [FormulaVariant::Statement, FormulaVariant::ProofConclusion];

    pub fn as_str(self) -> &'static str {
        match self {
            FormulaVariant::Statement => "statement",
            FormulaVariant::ProofConclusion => "proof-conclusion",
        }
    }
}

impl fmt::Display for FormulaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormulaVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FormulaVariant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| {
                format!("unknown formula variant {s:?} (expected statement or proof-conclusion)")
            })
    }
}

/// Lower and upper bound values for one kind applied to one factor pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundPair {
    pub alpha1: f64,
    pub alpha2: f64,
    pub kind: BoundKind,
    pub variant: FormulaVariant,
}

const SQRT2: f64 = std::f64::consts::SQRT_2;

fn sqrt3() -> f64 {
    3f64.sqrt()
}

/// One evaluation of a bound formula at chosen degree extremes `d1`, `d2`
/// (maxima for the upper bound, minima for the lower).
fn alpha(
    kind: BoundKind,
    variant: FormulaVariant,
    p1: &GraphParams,
    p2: &GraphParams,
    d1: usize,
    d2: usize,
) -> f64 {
    let n1 = p1.order as f64;
    let n2 = p2.order as f64;
    let m1 = p1.size as f64;
    let m2 = p2.size as f64;
    let a = d1 as f64 + n2;
    match (kind, variant) {
        (BoundKind::EsoJoin, _) => {
            let b = d2 as f64 + n1;
            2.0 * SQRT2 * m1 * a * a
                + 2.0 * SQRT2 * m2 * b * b
                + n1 * n2 * (a + b) * (a * a + b * b).sqrt()
        }
        (BoundKind::EuJoin, FormulaVariant::ProofConclusion) => {
            let b = d2 as f64 + n1;
            sqrt3() * m1 * a + sqrt3() * m2 * b + n1 * n2 * (a * a + b * b + a * b).sqrt()
        }
        (BoundKind::EuJoin, FormulaVariant::Statement) => {
            let c = d2 as f64 + 1.0;
            sqrt3() * m1 * a + sqrt3() * n1 * m2 * c + n1 * n2 * (a * a + c * c + a * c).sqrt()
        }
        (BoundKind::EsoCorona, _) => {
            let c = d2 as f64 + 1.0;
            2.0 * SQRT2 * m1 * a * a
                + 2.0 * SQRT2 * n1 * m2 * c * c
                + n1 * n2 * (a + c) * (a * a + c * c).sqrt()
        }
        (BoundKind::EuCorona, _) => {
            let c = d2 as f64 + 1.0;
            sqrt3() * m1 * a + sqrt3() * n1 * m2 * c + n1 * n2 * (a * a + c * c + a * c).sqrt()
        }
    }
}

/// Evaluates the bound pair for any kind/variant combination.
///
/// The variant only changes the result for [`BoundKind::EuJoin`].
pub fn bounds_for(
    kind: BoundKind,
    variant: FormulaVariant,
    p1: &GraphParams,
    p2: &GraphParams,
) -> BoundPair {
    BoundPair {
        alpha1: alpha(kind, variant, p1, p2, p1.min_deg, p2.min_deg),
        alpha2: alpha(kind, variant, p1, p2, p1.max_deg, p2.max_deg),
        kind,
        variant,
    }
}

/// Elliptic Sombor bounds for the join.
pub fn eso_join_bounds(p1: &GraphParams, p2: &GraphParams) -> BoundPair {
    bounds_for(BoundKind::EsoJoin, FormulaVariant::Statement, p1, p2)
}

/// Euler Sombor bounds for the join, in the default corrected form.
pub fn eu_join_bounds(p1: &GraphParams, p2: &GraphParams) -> BoundPair {
    bounds_for(BoundKind::EuJoin, FormulaVariant::ProofConclusion, p1, p2)
}

/// Elliptic Sombor bounds for the corona product.
pub fn eso_corona_bounds(p1: &GraphParams, p2: &GraphParams) -> BoundPair {
    bounds_for(BoundKind::EsoCorona, FormulaVariant::Statement, p1, p2)
}

/// Euler Sombor bounds for the corona product.
pub fn eu_corona_bounds(p1: &GraphParams, p2: &GraphParams) -> BoundPair {
    bounds_for(BoundKind::EuCorona, FormulaVariant::Statement, p1, p2)
}

/// Exact index value of the product of two regular graphs, obtained by
/// substituting the common degree into the bound formula (lower and
/// upper coincide there).
pub fn regular_exact(
    kind: BoundKind,
    p1: &GraphParams,
    p2: &GraphParams,
) -> Result<f64, BoundsError> {
    let (r1, r2) = match (p1.regular_deg, p2.regular_deg) {
        (Some(r1), Some(r2)) => (r1, r2),
        _ => return Err(BoundsError::NotRegular),
    };
    Ok(alpha(kind, kind.corrected_variant(), p1, p2, r1, r2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::{corona, join};
    use crate::verify::random_graph;
    use crate::Graph;
    use proptest::prelude::*;

    const TOL: f64 = 1e-9;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= TOL * b.abs().max(1.0)
    }

    fn params_of(g: &Graph) -> GraphParams {
        g.params().unwrap()
    }

    #[test]
    fn eso_join_collapses_on_squares() {
        let p = params_of(&Graph::cycle(4));
        let b = eso_join_bounds(&p, &p);
        let expected = 1728.0 * 2f64.sqrt();
        assert!(close(b.alpha1, expected));
        assert!(close(b.alpha2, expected));
        let true_value =
            elliptic_sombor(&join(&Graph::cycle(4), &Graph::cycle(4)).unwrap()).unwrap();
        assert!(close(true_value, expected));
    }

    #[test]
    fn eu_join_collapses_on_squares() {
        let p = params_of(&Graph::cycle(4));
        let b = eu_join_bounds(&p, &p);
        let expected = 144.0 * 3f64.sqrt();
        assert!(close(b.alpha1, expected));
        assert!(close(b.alpha2, expected));
        let true_value = euler_sombor(&join(&Graph::cycle(4), &Graph::cycle(4)).unwrap()).unwrap();
        assert!(close(true_value, expected));
    }

    #[test]
    fn singleton_pairs() {
        let p = params_of(&Graph::empty(1));
        assert!(close(eso_join_bounds(&p, &p).alpha2, 2.0 * 2f64.sqrt()));
        assert!(close(eu_join_bounds(&p, &p).alpha2, 3f64.sqrt()));
        assert!(close(eso_corona_bounds(&p, &p).alpha2, 2.0 * 2f64.sqrt()));
        assert!(close(eu_corona_bounds(&p, &p).alpha2, 3f64.sqrt()));
    }

    #[test]
    fn path_and_singleton_bracket_strictly() {
        let p3 = Graph::path(3);
        let k1 = Graph::empty(1);
        let (pp, pk) = (params_of(&p3), params_of(&k1));

        let b = eso_join_bounds(&pp, &pk);
        let t = elliptic_sombor(&join(&p3, &k1).unwrap()).unwrap();
        assert!(b.alpha1 < t && t < b.alpha2);

        let b = eu_join_bounds(&pp, &pk);
        let t = euler_sombor(&join(&p3, &k1).unwrap()).unwrap();
        assert!(b.alpha1 < t && t < b.alpha2);

        let b = eso_corona_bounds(&pp, &pk);
        let t = elliptic_sombor(&corona(&p3, &k1).unwrap()).unwrap();
        assert!(b.alpha1 < t && t < b.alpha2);
    }

    #[test]
    fn eu_join_statement_variant_can_fail() {
        // Two isolated vertices joined with K1 give a path; the
        // statement-variant upper bound falls below the true value.
        let e2 = Graph::empty(2);
        let k1 = Graph::empty(1);
        let b = bounds_for(
            BoundKind::EuJoin,
            FormulaVariant::Statement,
            &params_of(&e2),
            &params_of(&k1),
        );
        let t = euler_sombor(&join(&e2, &k1).unwrap()).unwrap();
        assert!(close(b.alpha2, 2.0 * 3f64.sqrt()));
        assert!(close(t, 2.0 * 7f64.sqrt()));
        assert!(b.alpha2 < t);
    }

    #[test]
    fn corona_exact_values() {
        let c3 = params_of(&Graph::cycle(3));
        let k1 = params_of(&Graph::empty(1));

        let b = eso_corona_bounds(&c3, &k1);
        let expected = 54.0 * 2f64.sqrt() + 12.0 * 10f64.sqrt();
        assert!(close(b.alpha1, expected));
        assert!(close(b.alpha2, expected));

        let b = eu_corona_bounds(&c3, &k1);
        let expected = 9.0 * 3f64.sqrt() + 3.0 * 13f64.sqrt();
        assert!(close(b.alpha1, expected));
        assert!(close(b.alpha2, expected));
        let t = euler_sombor(&corona(&Graph::cycle(3), &Graph::empty(1)).unwrap()).unwrap();
        assert!(close(t, expected));
    }

    #[test]
    fn eu_corona_collapses_on_square_and_edge() {
        let c4 = Graph::cycle(4);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let b = eu_corona_bounds(&params_of(&c4), &params_of(&k2));
        let t = euler_sombor(&corona(&c4, &k2).unwrap()).unwrap();
        assert!(close(b.alpha1, t));
        assert!(close(b.alpha2, t));
    }

    #[test]
    fn regular_exact_matches_bounds_and_truth() {
        let cases = [
            (BoundKind::EsoJoin, Graph::cycle(4), Graph::cycle(4)),
            (BoundKind::EuJoin, Graph::cycle(4), Graph::cycle(4)),
            (BoundKind::EsoCorona, Graph::cycle(3), Graph::empty(1)),
            (BoundKind::EuCorona, Graph::cycle(3), Graph::empty(1)),
            (
                BoundKind::EuCorona,
                Graph::cycle(4),
                Graph::from_edges(2, &[(0, 1)]).unwrap(),
            ),
        ];
        for (kind, g1, g2) in cases {
            let (p1, p2) = (params_of(&g1), params_of(&g2));
            let exact = regular_exact(kind, &p1, &p2).unwrap();
            let b = bounds_for(kind, kind.corrected_variant(), &p1, &p2);
            assert_eq!(exact, b.alpha1);
            assert_eq!(exact, b.alpha2);
            let product = match kind.product_kind() {
                ProductKind::Join => join(&g1, &g2).unwrap(),
                ProductKind::Corona => corona(&g1, &g2).unwrap(),
            };
            assert!(close(kind.index_of(&product).unwrap(), exact));
        }
    }

    #[test]
    fn regular_exact_on_singletons_gives_the_single_edge_index() {
        // Both products of K1 with K1 are a single edge.
        let p = params_of(&Graph::empty(1));
        for kind in BoundKind::ALL {
            let expected = match kind {
                BoundKind::EsoJoin | BoundKind::EsoCorona => 2.0 * 2f64.sqrt(),
                BoundKind::EuJoin | BoundKind::EuCorona => 3f64.sqrt(),
            };
            assert!(close(regular_exact(kind, &p, &p).unwrap(), expected));
        }
    }

    #[test]
    fn regular_exact_rejects_irregular() {
        let p3 = params_of(&Graph::path(3));
        let k1 = params_of(&Graph::empty(1));
        assert_eq!(
            regular_exact(BoundKind::EsoJoin, &p3, &k1),
            Err(BoundsError::NotRegular)
        );
    }

    #[test]
    fn kind_and_variant_strings_round_trip() {
        for kind in BoundKind::ALL {
            assert_eq!(kind.as_str().parse::<BoundKind>().unwrap(), kind);
        }
        for variant in FormulaVariant::ALL {
            assert_eq!(variant.as_str().parse::<FormulaVariant>().unwrap(), variant);
        }
        assert!("eso-tensor".parse::<BoundKind>().is_err());
    }

    fn arb_params() -> impl Strategy<Value = GraphParams> {
        (1usize..=7, 0.0f64..=1.0, any::<u64>())
            .prop_map(|(n, p, seed)| random_graph(n, p, seed).unwrap().params().unwrap())
    }

    proptest! {
        #[test]
        fn lower_never_exceeds_upper(p1 in arb_params(), p2 in arb_params()) {
            for kind in BoundKind::ALL {
                for variant in FormulaVariant::ALL {
                    let b = bounds_for(kind, variant, &p1, &p2);
                    prop_assert!(b.alpha1 <= b.alpha2 + 1e-12 * b.alpha2.abs().max(1.0));
                }
            }
        }

        #[test]
        fn regular_pairs_collapse(
            n1 in 3usize..=8, n2 in 3usize..=8,
        ) {
            // Cycles are 2-regular at every order >= 3.
            let p1 = Graph::cycle(n1).params().unwrap();
            let p2 = Graph::cycle(n2).params().unwrap();
            for kind in BoundKind::ALL {
                let b = bounds_for(kind, kind.corrected_variant(), &p1, &p2);
                prop_assert!((b.alpha2 - b.alpha1).abs() <= 1e-12 * b.alpha2.abs().max(1.0));
                let exact = regular_exact(kind, &p1, &p2).unwrap();
                prop_assert_eq!(exact, b.alpha1);
            }
        }

        #[test]
        fn monotone_in_degree_extremes(p1 in arb_params(), p2 in arb_params()) {
            for kind in BoundKind::ALL {
                for variant in FormulaVariant::ALL {
                    let base = bounds_for(kind, variant, &p1, &p2);
                    if p1.max_deg < p1.order - 1 {
                        let mut wider = p1;
                        wider.max_deg += 1;
                        wider.regular_deg = None;
                        let b = bounds_for(kind, variant, &wider, &p2);
                        prop_assert!(b.alpha2 >= base.alpha2);
                    }
                    if p1.min_deg > 0 {
                        let mut wider = p1;
                        wider.min_deg -= 1;
                        wider.regular_deg = None;
                        let b = bounds_for(kind, variant, &wider, &p2);
                        prop_assert!(b.alpha1 <= base.alpha1);
                    }
                }
            }
        }
    }
}
