//! Contract checks for the multistart optimizer: results stay inside their
//! closed-form bounds, land on the known optima, and reproduce exactly.
//!
//! Start counts here are chosen for test runtime; the values being
//! recovered have far more slack than the tolerances they are held to.

use std::f64::consts::PI;

use ngon_core::optimizer::{
    diameter_graph_is_cycle_plus_pendant, graham_solve, solve, Constraint, Objective,
    OptimizationProblem, SolveConfig,
};

/// Best known area of the optimal unit-diameter hexagon, to twelve digits.
/// Recovered independently by two seeds in `solve_recovers_the_known_optima`
/// and re-derived from scratch by the acceptance suite's oracle run.
const HEXAGON_OPTIMUM: f64 = 0.674981442930;

fn area_problem(n: usize) -> OptimizationProblem {
    OptimizationProblem {
        objective: Objective::MaximizeArea,
        constraint: Constraint::DiameterAtMost(1.0),
        n,
        equilateral: false,
    }
}

fn config(starts: usize, seed: u64) -> SolveConfig {
    SolveConfig {
        starts,
        seed,
        ..SolveConfig::default()
    }
}

#[test]
fn results_respect_their_bounds_and_constraints() {
    let problems = [
        area_problem(4),
        area_problem(5),
        area_problem(6),
        OptimizationProblem {
            objective: Objective::MaximizePerimeter,
            constraint: Constraint::DiameterAtMost(1.0),
            n: 5,
            equilateral: false,
        },
        OptimizationProblem {
            objective: Objective::MaximizeWidth,
            constraint: Constraint::DiameterAtMost(1.0),
            n: 6,
            equilateral: false,
        },
        OptimizationProblem {
            objective: Objective::MaximizeArea,
            constraint: Constraint::PerimeterAtMost(4.0),
            n: 5,
            equilateral: false,
        },
        OptimizationProblem {
            objective: Objective::MaximizePerimeter,
            constraint: Constraint::WidthAtLeast(1.0),
            n: 5,
            equilateral: true,
        },
    ];
    for problem in problems {
        let r = solve(&problem, &config(16, 7)).unwrap();
        let bound = r.bound.expect("all these problems have closed forms");
        assert!(
            r.value <= bound + 1e-7 * bound.abs().max(1.0),
            "value {} above bound {} for {:?}",
            r.value,
            bound,
            problem
        );
        assert_eq!(r.gap, Some(bound - r.value));
        let m = r.best.metrics();
        match problem.constraint {
            Constraint::DiameterAtMost(v) => assert!(m.diameter <= v * (1.0 + 1e-7)),
            Constraint::WidthAtLeast(v) => assert!(m.width >= v * (1.0 - 1e-7)),
            Constraint::PerimeterAtMost(v) => assert!(m.perimeter <= v * (1.0 + 1e-7)),
        }
        assert_eq!(r.best.side_count(), problem.n);
        assert_eq!(r.starts, 16);
        assert_eq!(r.seed, 7);
    }
}

#[test]
fn repeated_runs_serialize_identically() {
    let problem = area_problem(5);
    let a = solve(&problem, &config(12, 3)).unwrap();
    let b = solve(&problem, &config(12, 3)).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap(),
        "same problem, same config, different bytes"
    );
}

#[test]
fn solve_recovers_the_known_optima() {
    // Odd n: the regular polygon is optimal under a diameter cap.
    for n in [3usize, 5] {
        let r = solve(&area_problem(n), &config(32, 0)).unwrap();
        let nf = n as f64;
        let regular = nf / 2.0 * (PI / nf).cos() * (PI / (2.0 * nf)).tan();
        assert!(
            (r.value - regular).abs() <= 1e-5,
            "n={n} reached {} instead of {regular}",
            r.value
        );
    }
    // n=6: the optimum is non-regular (Graham's hexagon).
    let r = solve(&area_problem(6), &config(64, 0)).unwrap();
    assert!(
        (r.value - HEXAGON_OPTIMUM).abs() <= 1e-5,
        "free hexagon search reached {}",
        r.value
    );
}

#[test]
fn perimeter_maximization_recovers_attained_equality() {
    for n in [3usize, 6] {
        let problem = OptimizationProblem {
            objective: Objective::MaximizePerimeter,
            constraint: Constraint::DiameterAtMost(1.0),
            n,
            equilateral: false,
        };
        let r = solve(&problem, &config(64, 0)).unwrap();
        let bound = r.bound.unwrap();
        assert!(
            r.value >= bound - 1e-5,
            "n={n} perimeter {} should reach the bound {}",
            r.value,
            bound
        );
    }
}

#[test]
fn equilateral_width_solves_stay_at_the_trapezoid_family_value() {
    for n in [3usize, 5] {
        let problem = OptimizationProblem {
            objective: Objective::MaximizePerimeter,
            constraint: Constraint::WidthAtLeast(1.0),
            n,
            equilateral: true,
        };
        let r = solve(&problem, &config(32, 0)).unwrap();
        let family = n as f64 * 2.0 / 3f64.sqrt();
        assert!(
            (r.value - family).abs() <= 1e-5,
            "n={n} equilateral perimeter {} vs family {family}",
            r.value
        );
        let sides = r.best.side_lengths();
        let mean: f64 = sides.iter().sum::<f64>() / sides.len() as f64;
        for s in sides {
            assert!((s - mean).abs() <= 1e-6, "sides not equal: {s} vs mean {mean}");
        }
    }
}

#[test]
fn graham_search_beats_regular_and_carries_the_right_diameter_graph() {
    let r = graham_solve(6, &config(64, 0)).unwrap();
    assert!(
        (r.value - HEXAGON_OPTIMUM).abs() <= 1e-5,
        "graham hexagon value {}",
        r.value
    );
    let regular = 3.0 * 3f64.sqrt() / 8.0;
    assert!(r.value > regular + 0.02);
    let graph = r.best.diameter_graph(1e-6);
    assert!(
        diameter_graph_is_cycle_plus_pendant(&graph),
        "expected an (n-1)-cycle plus pendant, got edges {:?}",
        graph.edges
    );
    let m = r.best.metrics();
    assert!(m.diameter <= 1.0 + 1e-9);
}

#[test]
fn infeasible_or_malformed_problems_are_rejected() {
    let too_small = OptimizationProblem {
        objective: Objective::MaximizeArea,
        constraint: Constraint::DiameterAtMost(1.0),
        n: 2,
        equilateral: false,
    };
    assert!(solve(&too_small, &config(4, 0)).is_err());

    let bad_value = OptimizationProblem {
        objective: Objective::MaximizeArea,
        constraint: Constraint::DiameterAtMost(-1.0),
        n: 5,
        equilateral: false,
    };
    assert!(solve(&bad_value, &config(4, 0)).is_err());

    assert!(graham_solve(7, &config(4, 0)).is_err(), "odd n has no pendant layout");
    assert!(graham_solve(4, &config(4, 0)).is_err(), "n=4 is below the cycle minimum");
}
