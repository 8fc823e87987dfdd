//! The cross-check suite behind `theta-root verify`.
//!
//! Every check compares two independently computed artifacts — different
//! root-finding methods, closed sums against exhaustive enumeration, series
//! against tree censuses. Checks carry a fault-injection switch that
//! perturbs one side before the comparison; a check that cannot be made to
//! fail that way would be vacuous, and the test suite flips every switch.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::asymptotics::estimate_mu;
use crate::polyomino::{
    enumerate_ferrers, enumerate_stacks, ferrers_gf_constrained, ferrers_gf_two_forms,
    stack_gf_closed, stack_gf_functional,
};
use crate::series::QSeries;
use crate::theta::{
    a_refined, a_sigma_extended, atilde_refined, f_eval_q, ftilde_eval_q, identity_first_sides,
    identity_second_sides, iterate_ferrers_map, theta0_eval, xi_fix1, xi_fix2, xi_via_theta,
    SigmaWord,
};
use crate::tree::{count_by_area, enumerate_trees, injection_step, refinement_table, all_trees};

/// Desk-scale knobs for the verification suite.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Truncation order for the series cross-checks.
    pub order: usize,
    /// Area bound for the enumeration oracles.
    pub max_area: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            order: 50,
            max_area: 8,
        }
    }
}

/// Outcome of one check, in suite order.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub index: usize,
    pub name: &'static str,
    pub pass: bool,
}

/// Adds one to a middle coefficient — the canonical fault.
fn bump(series: &QSeries) -> QSeries {
    let mut out = series.clone();
    let k = out.order() / 2;
    let c = out.coeff(k) + BigInt::one();
    out.set_coeff(k, c);
    out
}

type Check = (&'static str, Box<dyn Fn(bool) -> bool + Send + Sync>);

fn build_checks(cfg: VerifyConfig) -> Vec<Check> {
    let order = cfg.order;
    let area = cfg.max_area;
    let refine_order = order.min(12);
    let tree_area = area.min(8);

    let checks: Vec<Check> = vec![
        ("three root methods agree", Box::new(move |fault| {
            let (a, b, c) = std::thread::scope(|s| {
                let h1 = s.spawn(|| xi_via_theta(order));
                let h2 = s.spawn(|| xi_fix1(order));
                let h3 = s.spawn(|| xi_fix2(order));
                (h1.join().unwrap(), h2.join().unwrap(), h3.join().unwrap())
            });
            let a = if fault { bump(&a) } else { a };
            a == b && b == c
        })),
        ("root annihilates the partial theta function", Box::new(move |fault| {
            let xi = xi_via_theta(order);
            let xi = if fault { bump(&xi) } else { xi };
            theta0_eval(&xi.neg(), order).is_zero()
        })),
        ("first product-sum expansion", Box::new(move |fault| {
            let (mut lhs, rhs) = identity_first_sides(8, 16);
            if fault {
                lhs.set(4, 8, lhs.get(4, 8) + BigInt::one());
            }
            lhs == rhs
        })),
        ("second product-sum expansion", Box::new(move |fault| {
            let (mut lhs, rhs) = identity_second_sides(8, 16);
            if fault {
                lhs.set(4, 8, lhs.get(4, 8) + BigInt::one());
            }
            lhs == rhs
        })),
        ("two Ferrers sums agree", Box::new(move |fault| {
            let (mut column, durfee) = ferrers_gf_two_forms(6, 6, 12);
            if fault {
                *column.entry((5, 2, 3)).or_insert(0) += 1;
            }
            column == durfee
        })),
        ("stack closed sum equals functional iteration", Box::new(move |fault| {
            let mut closed = stack_gf_closed(10, 10, 9, 10);
            let functional = stack_gf_functional(10, 10, 9, 10);
            if fault {
                *closed.entry((4, 2, 2, 1)).or_insert(0) += 1;
            }
            closed == functional
        })),
        ("stack closed sum equals exhaustive enumeration", Box::new(move |fault| {
            let mut closed = stack_gf_closed(area, area, area, area);
            if fault {
                *closed.entry((2, 1, 2, 0)).or_insert(0) += 1;
            }
            closed == enumerate_stacks(area)
        })),
        ("constrained Ferrers sum equals exhaustive enumeration", Box::new(move |fault| {
            let mut closed = ferrers_gf_constrained(area, area, area);
            if fault {
                *closed.entry((1, 1, 1)).or_insert(0) += 1;
            }
            closed == enumerate_ferrers(area, true)
        })),
        ("unconstrained Ferrers counts are partition numbers", Box::new(move |fault| {
            let table = enumerate_ferrers(area, false);
            let mut by_area = vec![0u64; area + 1];
            for ((a, _, _), c) in &table {
                by_area[*a] += c;
            }
            if fault {
                by_area[area / 2] += 1;
            }
            // partition numbers from the reciprocal of the Euler product
            let q = QSeries::monomial(BigInt::one(), 1, area);
            let euler = QSeries::pochhammer_infinite(&q, area).expect("zero constant term");
            let partitions = euler.reciprocal().expect("unit constant term");
            by_area[0] = 1; // the empty diagram is not enumerated
            (0..=area).all(|a| BigInt::from(by_area[a]) == *partitions.coeff(a))
        })),
        ("two-fold species compositions fix the root", Box::new(move |fault| {
            let o = order.min(30);
            let xi = xi_via_theta(o);
            let xi_in = if fault { bump(&xi) } else { xi.clone() };
            f_eval_q(&f_eval_q(&xi_in, o), o) == xi
                && f_eval_q(&ftilde_eval_q(&xi_in, o), o) == xi
                && ftilde_eval_q(&f_eval_q(&xi_in, o), o) == xi
                && ftilde_eval_q(&ftilde_eval_q(&xi_in, o), o) == xi
        })),
        ("refinements specialize to the root at t = 1", Box::new(move |fault| {
            let xi = xi_via_theta(refine_order);
            let a = a_refined(refine_order).eval_t_one();
            let a = if fault { bump(&a) } else { a };
            a == xi && atilde_refined(refine_order).eval_t_one() == xi
        })),
        ("mixed species words specialize to the root", Box::new(move |fault| {
            let o = refine_order.min(10);
            let xi = xi_via_theta(o);
            ["0", "1", "01", "10", "110"].iter().all(|text| {
                let word = SigmaWord::parse(text).unwrap();
                let s = a_sigma_extended(&word, o).unwrap().eval_t_one();
                let s = if fault && *text == "0" { bump(&s) } else { s };
                s == xi
            })
        })),
        ("tree censuses match the refined series", Box::new(move |fault| {
            let a = refinement_table(&a_refined(tree_area));
            let at = refinement_table(&atilde_refined(tree_area));
            let mixed = refinement_table(
                &a_sigma_extended(&SigmaWord::parse("10").unwrap(), tree_area).unwrap(),
            );
            let mut stacks = enumerate_trees(&SigmaWord::parse("0").unwrap(), tree_area, None);
            if fault {
                stacks.insert((1, 2), BigInt::one());
            }
            stacks == a
                && enumerate_trees(&SigmaWord::parse("1").unwrap(), tree_area, None) == at
                && enumerate_trees(&SigmaWord::parse("10").unwrap(), tree_area, None) == mixed
        })),
        ("tree counts by area are species-independent", Box::new(move |fault| {
            let o = tree_area.min(7);
            let xi = xi_via_theta(o);
            let words = ["000", "001", "010", "011", "100", "101", "110", "111"];
            words.iter().all(|text| {
                let word = SigmaWord::parse(text).unwrap();
                let counts = count_by_area(&word, o, None);
                let counts = if fault && *text == "000" { bump(&counts) } else { counts };
                counts == xi
            })
        })),
        ("root coefficients are positive and monotone", Box::new(move |fault| {
            let xi = xi_via_theta(order);
            let xi = if fault { bump(&xi) } else { xi };
            // a bumped middle coefficient breaks the later >= comparison
            // only if it overshoots; check both directions to stay sound
            let positive = (0..=order).all(|k| xi.coeff(k) > &BigInt::zero());
            let monotone = (1..=order).all(|k| xi.coeff(k) >= xi.coeff(k - 1));
            let matches_census = xi.coeff(order / 2) == xi_via_theta(order).coeff(order / 2);
            positive && monotone && matches_census
        })),
        ("area injection is injective on stack trees", Box::new(move |fault| {
            let sigma = SigmaWord::parse("0").unwrap();
            let trees = all_trees(&sigma, 5, None);
            let mut images: Vec<String> = trees
                .iter()
                .map(|t| {
                    let img = injection_step(t).expect("all-stack tree");
                    assert_eq!(img.total_area(), t.total_area() + 1);
                    format!("{}#{}", t.total_area(), img.canonical_encoding())
                })
                .collect();
            if fault && images.len() > 1 {
                images[0] = images[1].clone();
            }
            let n = images.len();
            images.sort();
            images.dedup();
            images.len() == n
        })),
        ("Ferrers map iteration stabilizes to the root", Box::new(move |fault| {
            let o = 20;
            let xi = xi_via_theta(o);
            let ok_identity = (0..=10).all(|n| {
                let from_one = iterate_ferrers_map(n, o);
                let mut from_zero = QSeries::zero(o);
                for _ in 0..n + 1 {
                    from_zero = ftilde_eval_q(&from_zero, o);
                }
                from_one == from_zero
            });
            let stabilized = iterate_ferrers_map(o + 1, o);
            let stabilized = if fault { bump(&stabilized) } else { stabilized };
            ok_identity && stabilized == xi
        })),
        ("growth estimate brackets the reference", Box::new(move |fault| {
            let o = order.max(120);
            let xi = xi_via_theta(o);
            let est = estimate_mu(&xi, (o / 3)..=o).expect("valid window");
            let mut mu = est.mu_f64();
            if fault {
                mu += 0.5;
            }
            // desk-scale bracket; the acceptance suite pins the tight bound
            (mu - 3.2336366652450763).abs() < 0.01
        })),
        ("series JSON round-trips", Box::new(move |fault| {
            let xi = xi_via_theta(order);
            let json = xi.to_json();
            let back = QSeries::from_json(&json).expect("own JSON parses");
            let back = if fault { bump(&back) } else { back };
            back == xi
        })),
    ];
    checks
}

/// Runs every check, fanning out across threads; outcomes are ordered by
/// check index, not completion time. `inject_fault` perturbs the named
/// check, which must then fail — the soundness test for the suite itself.
pub fn run_verification(cfg: VerifyConfig, inject_fault: Option<usize>) -> Vec<CheckOutcome> {
    let checks = build_checks(cfg);
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .enumerate()
            .map(|(index, (name, run))| {
                let fault = inject_fault == Some(index);
                scope.spawn(move || CheckOutcome {
                    index,
                    name,
                    pass: run(fault),
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    })
}

/// Number of checks in the suite.
pub fn check_count() -> usize {
    build_checks(VerifyConfig::default()).len()
}

/// Tables keyed like [`enumerate_trees`] output, for external comparisons.
pub type TreeTable = BTreeMap<(usize, usize), BigInt>;
