//! Numerical search for extremal polygons, plus the explicit constructions
//! for families where the optimum is known in closed form.
//!
//! The general search is deliberately plain: multistart over random convex
//! polygons, central finite differences, and a backtracking line search.
//! Two tricks keep it accurate without second-order machinery:
//!
//! * every trial point is *projected* onto the active constraint before
//!   scoring (translate to the centroid, rescale so the constrained
//!   measurement is exact), so the constraint penalty stays dormant and the
//!   landscape keeps O(1) conditioning instead of degrading with the
//!   penalty weight;
//! * quadratic penalties with a 10× weight schedule handle the remaining
//!   soft terms (convexity, equal sides), and kinks (caliper switches,
//!   penalty boundaries) are handled by having many starts rather than by
//!   smoothing.
//!
//! A maximization under `WidthAtLeast` would be unbounded as literally
//! stated — scaling any feasible polygon up stays feasible and improves
//! every objective — so the width floor is treated as active (`w = v`),
//! which is the classical reading of the fixed-width problems.
//!
//! Everything is deterministic given the seed: starts draw from per-index
//! substreams of one [`Rng`], and ties between equal-value optima resolve
//! by the lexicographically smallest vertex list.

mod rng;

pub use rng::Rng;

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds;
use crate::geometry::{canonical_cmp, strict_hull, ConvexPolygon, DiameterGraph, Point};
use crate::tol;

#[derive(Debug, Error)]
pub enum OptimizerError {
    #[error("invalid problem: {0}")]
    BadProblem(String),
    #[error("could not produce a feasible polygon: {0}")]
    Infeasible(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Objective {
    MaximizeArea,
    MaximizePerimeter,
    MaximizeWidth,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Constraint {
    DiameterAtMost(f64),
    WidthAtLeast(f64),
    PerimeterAtMost(f64),
}

impl Constraint {
    pub fn value(self) -> f64 {
        match self {
            Constraint::DiameterAtMost(v)
            | Constraint::WidthAtLeast(v)
            | Constraint::PerimeterAtMost(v) => v,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OptimizationProblem {
    pub objective: Objective,
    pub constraint: Constraint,
    pub n: usize,
    pub equilateral: bool,
}

impl OptimizationProblem {
    fn validate(&self) -> Result<(), OptimizerError> {
        if self.n < 3 {
            return Err(OptimizerError::BadProblem(format!(
                "need n >= 3, got {}",
                self.n
            )));
        }
        if self.n > 16 {
            return Err(OptimizerError::BadProblem(format!(
                "free-vertex search is sized for n <= 16, got {}",
                self.n
            )));
        }
        let v = self.constraint.value();
        if !(v > 0.0 && v.is_finite()) {
            return Err(OptimizerError::BadProblem(format!(
                "constraint value must be positive, got {v}"
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SolveConfig {
    pub starts: usize,
    pub seed: u64,
    /// Penalty rounds; the weight is 100 on the first and grows 10× each
    /// round.
    pub outer_rounds: usize,
    /// Line-search iterations per round.
    pub inner_iterations: usize,
    /// Relative step for central finite differences.
    pub fd_step: f64,
    /// Emit one machine-readable line per start on stderr.
    pub progress: bool,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            starts: 64,
            seed: 0,
            outer_rounds: 8,
            inner_iterations: 300,
            fd_step: 1e-6,
            progress: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OptimizationResult {
    pub best: ConvexPolygon,
    pub value: f64,
    /// Matching closed-form bound, when the catalog has one for this
    /// problem; `None` for the problems that are unbounded or unsolved.
    pub bound: Option<f64>,
    pub gap: Option<f64>,
    pub starts: usize,
    pub seed: u64,
    pub converged: bool,
}

// ---------------------------------------------------------------------------
// Lean measurements on raw vertex cycles (no allocation, no hull) for the
// inner loop. The official values reported in results always come from
// ConvexPolygon::metrics.

fn area_of(pts: &[Point]) -> f64 {
    let n = pts.len();
    let mut twice = 0.0;
    for i in 0..n {
        twice += pts[i].cross(pts[(i + 1) % n]);
    }
    twice / 2.0
}

fn perimeter_of(pts: &[Point]) -> f64 {
    let n = pts.len();
    (0..n).map(|i| pts[i].distance(pts[(i + 1) % n])).sum()
}

fn diameter_of(pts: &[Point]) -> f64 {
    let mut best = 0.0f64;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            best = best.max(pts[i].distance(pts[j]));
        }
    }
    best
}

/// Minimum over edges of the farthest vertex from the edge line. Exact for
/// convex vertex cycles; the optimizer only ever evaluates near-convex ones.
fn width_of(pts: &[Point]) -> f64 {
    let n = pts.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let a = pts[i];
        let e = pts[(i + 1) % n] - a;
        let len = e.norm();
        if len < 1e-15 {
            continue;
        }
        let mut h = 0.0f64;
        for &p in pts {
            h = h.max(e.cross(p - a) / len);
        }
        best = best.min(h);
    }
    best
}

fn centroid_of(pts: &[Point]) -> Point {
    let mut c = Point::new(0.0, 0.0);
    for &p in pts {
        c = c + p;
    }
    c.scale(1.0 / pts.len() as f64)
}

// ---------------------------------------------------------------------------

/// Random polygon in convex position (Valtr's construction): split sorted
/// coordinate differences into two monotone chains per axis, pair the axes
/// by a random shuffle, and walk the resulting edge vectors in angle order.
pub fn random_convex_polygon(n: usize, rng: &mut Rng) -> ConvexPolygon {
    assert!(n >= 3);
    loop {
        let deltas = |rng: &mut Rng| {
            let mut coords: Vec<f64> = (0..n).map(|_| rng.next_f64()).collect();
            coords.sort_by(f64::total_cmp);
            let (lo, hi) = (coords[0], coords[n - 1]);
            let mut up = vec![lo];
            let mut down = vec![lo];
            for &c in &coords[1..n - 1] {
                if rng.next_u64() & 1 == 0 {
                    up.push(c);
                } else {
                    down.push(c);
                }
            }
            up.push(hi);
            down.push(hi);
            let mut out: Vec<f64> = up.windows(2).map(|w| w[1] - w[0]).collect();
            out.extend(down.windows(2).map(|w| w[0] - w[1]));
            out
        };
        let dx = deltas(rng);
        let mut dy = deltas(rng);
        rng.shuffle(&mut dy);
        let mut vectors: Vec<Point> = dx
            .into_iter()
            .zip(dy)
            .map(|(x, y)| Point::new(x, y))
            .collect();
        vectors.sort_by(|a, b| a.y.atan2(a.x).total_cmp(&b.y.atan2(b.x)));
        let mut pts = Vec::with_capacity(n);
        let mut pos = Point::new(0.0, 0.0);
        for v in vectors {
            pts.push(pos);
            pos = pos + v;
        }
        if let Ok(p) = ConvexPolygon::new(pts) {
            return p;
        }
    }
}

/// Centers `pts` and rescales so the constrained measurement is met exactly.
/// For the `Maximize` objectives this never hurts: meeting a cap (or the
/// width floor, read as active) with equality is always at least as good.
fn scale_to_constraint(pts: &mut [Point], constraint: Constraint) {
    let c = centroid_of(pts);
    for p in pts.iter_mut() {
        *p = *p - c;
    }
    let current = match constraint {
        Constraint::DiameterAtMost(_) => diameter_of(pts),
        Constraint::WidthAtLeast(_) => width_of(pts),
        Constraint::PerimeterAtMost(_) => perimeter_of(pts),
    };
    if current > 1e-300 {
        let factor = constraint.value() / current;
        for p in pts.iter_mut() {
            *p = p.scale(factor);
        }
    }
}

struct Evaluator {
    objective: Objective,
    constraint: Constraint,
    equilateral: bool,
    /// Schedule weight for the soft terms (equal sides).
    weight: f64,
    /// Fixed wall for reflex turns. Convexity is the search manifold, not a
    /// constraint worth exploring around: a soft weight lets early rounds
    /// fold the polygon for objective gain (flattening buys unbounded p/w,
    /// say) and later rounds never recover. The quadratic is still C¹, and
    /// exactly zero for the collinear vertices of weakly convex optima.
    convexity_weight: f64,
}

impl Evaluator {
    fn score(&self, pts: &[Point]) -> f64 {
        let value = match self.objective {
            Objective::MaximizeArea => area_of(pts),
            Objective::MaximizePerimeter => perimeter_of(pts),
            Objective::MaximizeWidth => width_of(pts),
        };
        let mut wall = 0.0;
        let mut penalty = 0.0;
        let n = pts.len();
        for i in 0..n {
            let a = pts[i];
            let b = pts[(i + 1) % n];
            let c = pts[(i + 2) % n];
            let cross = (b - a).cross(c - b);
            if cross < 0.0 {
                wall += cross * cross;
            }
        }
        // Dormant whenever the point has been projected onto the
        // constraint, but kept as a guard for raw evaluations.
        match self.constraint {
            Constraint::DiameterAtMost(v) => {
                let over = diameter_of(pts) - v;
                if over > 0.0 {
                    penalty += over * over;
                }
            }
            Constraint::WidthAtLeast(v) => {
                let dev = width_of(pts) - v;
                penalty += dev * dev;
            }
            Constraint::PerimeterAtMost(v) => {
                let over = perimeter_of(pts) - v;
                if over > 0.0 {
                    penalty += over * over;
                }
            }
        }
        if self.equilateral {
            let mean = perimeter_of(pts) / n as f64;
            for i in 0..n {
                let dev = pts[i].distance(pts[(i + 1) % n]) - mean;
                penalty += dev * dev;
            }
        }
        value - self.weight * penalty - self.convexity_weight * wall
    }
}

/// Maximizes `f` over `x` by central finite differences and a backtracking
/// line search. Returns true when the iteration stalled (no improving step,
/// or three consecutive improvements at rounding level) rather than running
/// out of its budget.
fn ascend_vector(
    x: &mut Vec<f64>,
    mut f: impl FnMut(&[f64]) -> f64,
    iterations: usize,
    fd_step: f64,
) -> bool {
    let dim = x.len();
    let mut grad = vec![0.0f64; dim];
    let mut step = 1e-2;
    let mut value = f(x);
    let mut stalls = 0;
    for _ in 0..iterations {
        for i in 0..dim {
            let orig = x[i];
            let h = fd_step * orig.abs().max(1.0);
            x[i] = orig + h;
            let plus = f(x);
            x[i] = orig - h;
            let minus = f(x);
            x[i] = orig;
            grad[i] = (plus - minus) / (2.0 * h);
        }
        let gn2: f64 = grad.iter().map(|g| g * g).sum();
        if gn2 < 1e-24 {
            return true;
        }
        let base = x.clone();
        let mut accepted = false;
        while step > 1e-14 {
            for i in 0..dim {
                x[i] = base[i] + step * grad[i];
            }
            let trial = f(x);
            if trial > value + 1e-4 * step * gn2 {
                if trial - value < 1e-15 * (1.0 + value.abs()) {
                    stalls += 1;
                } else {
                    stalls = 0;
                }
                value = trial;
                step = (step * 1.7).min(1.0);
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            x.clone_from(&base);
            return true;
        }
        if stalls >= 3 {
            return true;
        }
    }
    false
}

/// Nelder–Mead refinement (standard reflection/expansion/contraction/shrink
/// coefficients), maximizing `f`. Run after the gradient rounds: finite
/// differences stop being reliable once the iterate reaches a crease of the
/// pointwise-max terms (two vertex pairs tying for the diameter, say), and
/// the optima of these problems sit exactly on such creases. The simplex
/// contracts along them without needing derivatives at all.
fn nelder_mead(
    x: &mut Vec<f64>,
    mut f: impl FnMut(&[f64]) -> f64,
    initial_step: f64,
    iterations: usize,
) {
    let dim = x.len();
    let mut simplex: Vec<(f64, Vec<f64>)> = Vec::with_capacity(dim + 1);
    simplex.push((f(x), x.clone()));
    for i in 0..dim {
        let mut v = x.clone();
        v[i] += initial_step;
        simplex.push((f(&v), v));
    }
    let mut scratch = vec![0.0f64; dim];
    for _ in 0..iterations {
        // Best first (maximization).
        simplex.sort_by(|a, b| b.0.total_cmp(&a.0));
        let spread = simplex[0].0 - simplex[dim].0;
        if spread < 1e-15 * (1.0 + simplex[0].0.abs()) {
            break;
        }
        for s in scratch.iter_mut() {
            *s = 0.0;
        }
        for (_, v) in &simplex[..dim] {
            for (s, c) in scratch.iter_mut().zip(v) {
                *s += c / dim as f64;
            }
        }
        let worst = simplex[dim].1.clone();
        let point_at = |t: f64, out: &mut Vec<f64>, centroid: &[f64]| {
            out.clear();
            out.extend(
                centroid
                    .iter()
                    .zip(&worst)
                    .map(|(c, w)| c + t * (c - w)),
            );
        };
        let mut trial = Vec::with_capacity(dim);
        point_at(1.0, &mut trial, &scratch);
        let reflected = f(&trial);
        if reflected > simplex[0].0 {
            let mut expanded = Vec::with_capacity(dim);
            point_at(2.0, &mut expanded, &scratch);
            let fe = f(&expanded);
            simplex[dim] = if fe > reflected {
                (fe, expanded)
            } else {
                (reflected, trial)
            };
        } else if reflected > simplex[dim - 1].0 {
            simplex[dim] = (reflected, trial);
        } else {
            let t = if reflected > simplex[dim].0 { 0.5 } else { -0.5 };
            let mut contracted = Vec::with_capacity(dim);
            point_at(t, &mut contracted, &scratch);
            let fc = f(&contracted);
            if fc > simplex[dim].0.max(reflected) {
                simplex[dim] = (fc, contracted);
            } else {
                // Shrink toward the best vertex.
                let best = simplex[0].1.clone();
                for entry in &mut simplex[1..] {
                    for (c, b) in entry.1.iter_mut().zip(&best) {
                        *c = b + 0.5 * (*c - b);
                    }
                    entry.0 = f(&entry.1);
                }
            }
        }
    }
    simplex.sort_by(|a, b| b.0.total_cmp(&a.0));
    *x = simplex.swap_remove(0).1;
}

/// Hill climb along random directions with a geometric step scan. The
/// simplex and the axis-aligned differences share blind spots on crease
/// networks (directions neither can represent); random directions have
/// none, so a few hundred of these probes reliably free a jammed iterate.
fn line_polish(
    x: &mut Vec<f64>,
    mut f: impl FnMut(&[f64]) -> f64,
    rng: &mut Rng,
    rounds: usize,
    scale: f64,
) {
    let dim = x.len();
    let mut dir = vec![0.0f64; dim];
    let mut trial = x.clone();
    let mut best = f(x);
    for _ in 0..rounds {
        let mut norm2 = 0.0;
        for d in dir.iter_mut() {
            *d = rng.range(-1.0, 1.0);
            norm2 += *d * *d;
        }
        if norm2 < 1e-12 {
            continue;
        }
        let norm = norm2.sqrt();
        let mut moved = false;
        for sign in [1.0, -1.0] {
            let mut t = 1e-8 * scale;
            while t < 0.1 * scale {
                for i in 0..dim {
                    trial[i] = x[i] + sign * t * dir[i] / norm;
                }
                let v = f(&trial);
                if v > best {
                    best = v;
                    x.clone_from(&trial);
                    moved = true;
                }
                t *= 3.0;
            }
            if moved {
                break;
            }
        }
    }
}

/// Nudges vertices toward equal side lengths (Jacobi-style averaging),
/// damped so a pass never folds the polygon worse than it came in. Only a
/// finishing touch: the penalty has already made sides nearly equal, this
/// removes the remaining spread.
fn equalize_sides(pts: &mut Vec<Point>) {
    let n = pts.len();
    let min_cross = |pts: &[Point]| {
        let mut worst = f64::INFINITY;
        for i in 0..n {
            let a = pts[i];
            let b = pts[(i + 1) % n];
            let c = pts[(i + 2) % n];
            worst = worst.min((b - a).cross(c - b));
        }
        worst
    };
    let mean_side = (0..n)
        .map(|i| pts[i].distance(pts[(i + 1) % n]))
        .sum::<f64>()
        / n as f64;
    // Transient dips during the averaging are fine as long as they stay
    // within what the collinearity repair can snap back afterwards.
    let floor = min_cross(pts).min(0.0) - 1e-7 * mean_side * mean_side;
    for _ in 0..200 {
        let lens: Vec<f64> = (0..n)
            .map(|i| pts[i].distance(pts[(i + 1) % n]))
            .collect();
        let mean = lens.iter().sum::<f64>() / n as f64;
        if lens.iter().all(|l| (l - mean).abs() < 1e-13) {
            break;
        }
        let old = pts.clone();
        let pushes: Vec<Point> = (0..n)
            .map(|i| {
                let prev = old[(i + n - 1) % n];
                let next = old[(i + 1) % n];
                let e_prev = old[i] - prev;
                let e_next = next - old[i];
                let (lp, ln) = (e_prev.norm(), e_next.norm());
                if lp < 1e-15 || ln < 1e-15 {
                    return Point::new(0.0, 0.0);
                }
                e_prev.scale((mean - lp) / lp).scale(0.25)
                    - e_next.scale((mean - ln) / ln).scale(0.25)
            })
            .collect();
        let mut alpha = 1.0;
        let mut committed = false;
        while alpha > 1e-3 {
            for i in 0..n {
                pts[i] = old[i] + pushes[i].scale(alpha);
            }
            if min_cross(pts) >= floor {
                committed = true;
                break;
            }
            alpha *= 0.5;
        }
        if !committed {
            pts.clone_from(&old);
            break;
        }
    }
}

/// Snaps marginally reflex vertices onto the chord of their neighbors.
/// Folds at rounding scale are equilibrium artifacts of the convexity wall
/// pressing against a weakly convex optimum; genuine folds are left alone
/// for validation to reject.
fn repair_collinear(pts: &mut [Point], scale: f64) {
    let n = pts.len();
    let threshold = 1e-6 * scale * scale;
    // First pass at chain level: project each maximal run of nearly-flat
    // vertices onto the chord between its anchoring corners. Fixing the
    // run in one shot avoids the ping-pong that local snapping falls into
    // when two neighbouring vertices sit on the same chain.
    let turn = |pts: &[Point], i: usize| {
        let a = pts[(i + n - 1) % n];
        let b = pts[i];
        let c = pts[(i + 1) % n];
        (b - a).cross(c - b)
    };
    let flat: Vec<bool> = (0..n).map(|i| turn(pts, i).abs() < threshold).collect();
    if let Some(c0) = (0..n).find(|&i| !flat[i]) {
        let mut k = 1;
        while k < n {
            if !flat[(c0 + k) % n] {
                k += 1;
                continue;
            }
            let start = k;
            let mut end = k;
            while flat[(c0 + end + 1) % n] {
                end += 1;
            }
            let p = pts[(c0 + start - 1) % n];
            let q = pts[(c0 + end + 1) % n];
            let chord = q - p;
            let len2 = chord.dot(chord);
            if len2 > 1e-30 {
                for j in start..=end {
                    let idx = (c0 + j) % n;
                    let t = (pts[idx] - p).dot(chord) / len2;
                    pts[idx] = p + chord.scale(t);
                }
            }
            k = end + 2;
        }
    }
    for _ in 0..4 {
        let mut dirty = false;
        for i in 0..n {
            let a = pts[i];
            let b = pts[(i + 1) % n];
            let c = pts[(i + 2) % n];
            let cross = (b - a).cross(c - b);
            if cross < 0.0 && cross > -threshold {
                let chord = c - a;
                let len2 = chord.dot(chord);
                if len2 > 1e-30 {
                    let t = (b - a).dot(chord) / len2;
                    pts[(i + 1) % n] = a + chord.scale(t);
                    dirty = true;
                }
            }
        }
        if !dirty {
            break;
        }
    }
}

fn project_and_validate(
    mut pts: Vec<Point>,
    problem: &OptimizationProblem,
) -> Option<(ConvexPolygon, f64)> {
    repair_collinear(&mut pts, problem.constraint.value());
    scale_to_constraint(&mut pts, problem.constraint);
    let polygon = ConvexPolygon::new(pts).ok()?;
    let m = polygon.metrics();
    let v = problem.constraint.value();
    let feasible = match problem.constraint {
        Constraint::DiameterAtMost(_) => m.diameter <= v * (1.0 + tol::FEASIBILITY_EPS),
        Constraint::WidthAtLeast(_) => m.width >= v * (1.0 - tol::FEASIBILITY_EPS),
        Constraint::PerimeterAtMost(_) => m.perimeter <= v * (1.0 + tol::FEASIBILITY_EPS),
    };
    if !feasible {
        return None;
    }
    let value = match problem.objective {
        Objective::MaximizeArea => m.area,
        Objective::MaximizePerimeter => m.perimeter,
        Objective::MaximizeWidth => m.width,
    };
    Some((polygon, value))
}

fn finish_candidate(
    pts: Vec<Point>,
    problem: &OptimizationProblem,
    converged: bool,
) -> Option<(ConvexPolygon, f64, bool)> {
    if problem.equilateral {
        // Equalizing can tip the tiny positive crosses of a weakly convex
        // candidate negative; keep the unequalized polygon in that case.
        let mut equalized = pts.clone();
        equalize_sides(&mut equalized);
        if let Some((polygon, value)) = project_and_validate(equalized, problem) {
            return Some((polygon, value, converged));
        }
    }
    project_and_validate(pts, problem).map(|(polygon, value)| (polygon, value, converged))
}

/// Closed-form reference for the problem, when one is known. Equilateral
/// width problems use the fixed-width family maxima; non-equilateral (or
/// even-n) width problems are unbounded and get `None`.
fn problem_bound(problem: &OptimizationProblem) -> Option<f64> {
    let n = problem.n;
    let v = problem.constraint.value();
    match (problem.objective, problem.constraint) {
        (Objective::MaximizeArea, Constraint::DiameterAtMost(_)) => Some(if problem.equilateral {
            equilateral_max_area_reference(n, v).unwrap()
        } else {
            bounds::max_area_given_diameter(n, v).unwrap()
        }),
        (Objective::MaximizePerimeter, Constraint::DiameterAtMost(_)) => {
            Some(bounds::max_perimeter_given_diameter(n, v).unwrap())
        }
        (Objective::MaximizeWidth, Constraint::DiameterAtMost(_)) => {
            Some(bounds::max_width_given_diameter(n, v).unwrap())
        }
        (Objective::MaximizeArea, Constraint::PerimeterAtMost(_)) => {
            Some(bounds::max_area_given_perimeter(n, v).unwrap())
        }
        (Objective::MaximizePerimeter, Constraint::PerimeterAtMost(_)) => Some(v),
        (Objective::MaximizeWidth, Constraint::PerimeterAtMost(_)) => {
            // Inverting the perimeter–width lower bound.
            Some(v / (2.0 * n as f64 * (PI / (2 * n) as f64).tan()))
        }
        (Objective::MaximizeWidth, Constraint::WidthAtLeast(_)) => Some(v),
        (Objective::MaximizeArea, Constraint::WidthAtLeast(_)) => (problem.equilateral
            && n % 2 == 1)
            .then(|| (n - 2) as f64 / 3f64.sqrt() * v * v),
        (Objective::MaximizePerimeter, Constraint::WidthAtLeast(_)) => (problem.equilateral
            && n % 2 == 1)
            .then(|| n as f64 * 2.0 / 3f64.sqrt() * v),
    }
}

/// Simplex restart scales for the polish sweeps.
const POLISH_LADDER: [f64; 6] = [1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7];

/// How many of the best exploration candidates get the deep polish.
const FINALISTS: usize = 4;

/// Multistart penalty search for the given problem. Two stages: every
/// start runs the penalty rounds plus a light simplex polish in parallel,
/// then the few best candidates get an adaptive deep polish (restart
/// sweeps until the value stops moving). Deterministic for a given
/// (problem, config); the reported value and polygon come from the
/// canonical metrics of the best feasible candidate.
pub fn solve(
    problem: &OptimizationProblem,
    config: &SolveConfig,
) -> Result<OptimizationResult, OptimizerError> {
    problem.validate()?;
    if config.starts == 0 {
        return Err(OptimizerError::BadProblem("need at least one start".into()));
    }
    let root = Rng::seed_from(config.seed);
    let n = problem.n;
    let scale = problem.constraint.value();
    let make_score = |weight: f64| {
        let mut scratch = vec![Point::new(0.0, 0.0); n];
        let ev = Evaluator {
            objective: problem.objective,
            constraint: problem.constraint,
            equilateral: problem.equilateral,
            weight,
            // Cross products scale with the square of the polygon size.
            // Stiff enough that the equilibrium fold at a weakly convex
            // optimum sits well below the validity tolerance.
            convexity_weight: 1e14 / (scale * scale),
        };
        move |x: &[f64]| {
            for (i, p) in scratch.iter_mut().enumerate() {
                *p = Point::new(x[2 * i], x[2 * i + 1]);
            }
            scale_to_constraint(&mut scratch, problem.constraint);
            ev.score(&scratch)
        }
    };

    let explored: Vec<(Vec<f64>, bool)> = (0..config.starts)
        .into_par_iter()
        .map(|s| {
            let mut rng = root.substream(s as u64);
            let start = random_convex_polygon(n, &mut rng);
            let mut pts = start.vertices().to_vec();
            scale_to_constraint(&mut pts, problem.constraint);
            let mut coords: Vec<f64> = pts.iter().flat_map(|p| [p.x, p.y]).collect();
            let mut converged = false;
            let mut weight = 1e2;
            for round in 0..config.outer_rounds {
                let mut score = make_score(weight);
                converged = ascend_vector(
                    &mut coords,
                    &mut score,
                    config.inner_iterations,
                    config.fd_step,
                );
                if round + 1 == config.outer_rounds {
                    // A fresh simplex per scale; a single pass degenerates
                    // along the crease network before reaching the optimum.
                    for step in POLISH_LADDER {
                        nelder_mead(&mut coords, &mut score, step * scale, 6000);
                    }
                }
                weight *= 10.0;
            }
            (coords, converged)
        })
        .collect();

    let points_of = |coords: &[f64]| -> Vec<Point> {
        (0..n)
            .map(|i| Point::new(coords[2 * i], coords[2 * i + 1]))
            .collect()
    };
    let values: Vec<Option<f64>> = explored
        .iter()
        .map(|(coords, converged)| {
            finish_candidate(points_of(coords), problem, *converged).map(|(_, v, _)| v)
        })
        .collect();
    if config.progress {
        for (i, v) in values.iter().enumerate() {
            match v {
                Some(v) => eprintln!("{{\"start\":{i},\"value\":{v}}}"),
                None => eprintln!("{{\"start\":{i},\"value\":null}}"),
            }
        }
    }

    let mut ranked: Vec<(f64, usize)> = values
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|v| (v, i)))
        .collect();
    ranked.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));

    let final_weight = 1e2 * 10f64.powi(config.outer_rounds.saturating_sub(1) as i32);
    let finalists: Vec<Option<(ConvexPolygon, f64, bool)>> = ranked
        .iter()
        .take(FINALISTS)
        .map(|&(_, idx)| {
            let (ref coords0, converged0) = explored[idx];
            let mut coords = coords0.clone();
            let mut score = make_score(final_weight);
            let mut polish_rng = root.substream(0x9E37_79B9 ^ idx as u64);
            let mut prev = score(&coords);
            let mut converged = converged0;
            // One near-idle sweep can just mean a jammed simplex that the
            // next restart frees, so stop only after two calm sweeps.
            let mut calm = 0;
            for _ in 0..16 {
                for step in POLISH_LADDER {
                    nelder_mead(&mut coords, &mut score, step * scale, 6000);
                }
                line_polish(&mut coords, &mut score, &mut polish_rng, 400, scale);
                let now = score(&coords);
                if now - prev < 1e-10 * (1.0 + now.abs()) {
                    calm += 1;
                    if calm >= 2 {
                        converged = true;
                        break;
                    }
                } else {
                    calm = 0;
                }
                prev = now;
            }
            finish_candidate(points_of(&coords), problem, converged)
        })
        .collect();

    let best = pick_best(finalists).ok_or_else(|| {
        OptimizerError::Infeasible("no start produced a feasible convex polygon".into())
    })?;
    let bound = problem_bound(problem);
    Ok(OptimizationResult {
        value: best.1,
        gap: bound.map(|b| b - best.1),
        bound,
        best: best.0,
        starts: config.starts,
        seed: config.seed,
        converged: best.2,
    })
}

/// Deterministic reduction: higher value wins; values within 1e-12 fall
/// back to the lexicographically smaller vertex list.
fn pick_best(
    candidates: Vec<Option<(ConvexPolygon, f64, bool)>>,
) -> Option<(ConvexPolygon, f64, bool)> {
    let mut best: Option<(ConvexPolygon, f64, bool)> = None;
    for cand in candidates.into_iter().flatten() {
        best = Some(match best.take() {
            None => cand,
            Some(cur) => {
                if cand.1 > cur.1 + 1e-12 {
                    cand
                } else if cur.1 > cand.1 + 1e-12 {
                    cur
                } else if canonical_cmp(&cand.0, &cur.0).is_lt() {
                    cand
                } else {
                    cur
                }
            }
        });
    }
    best
}

// ---------------------------------------------------------------------------
// Diameter-graph-structured search for even n.

/// Unit-distance skeleton for the even-`n` area maximizers: an (n−1)-cycle
/// of unit segments plus one pendant unit segment hanging off the
/// `attachment` vertex.
///
/// `angles` are the headings of the n−1 cycle edges in walk order; closure
/// (the edge vectors summing to zero) is the caller's responsibility. The
/// pendant vertex is placed at unit distance from the attachment vertex,
/// opposite the bisector of its two cycle edges — the optimal polygons are
/// symmetric about the pendant edge, so this loses nothing at the optimum.
#[derive(Clone, Debug, Serialize)]
pub struct GrahamParameterization {
    pub n: usize,
    pub angles: Vec<f64>,
    pub attachment: usize,
}

impl GrahamParameterization {
    /// The n−1 cycle vertices in walk order, followed by the pendant vertex.
    pub fn vertices(&self) -> Vec<Point> {
        let k = self.angles.len();
        let mut pts = Vec::with_capacity(k + 1);
        let mut pos = Point::new(0.0, 0.0);
        for &a in &self.angles[..k - 1] {
            pts.push(pos);
            pos = pos + Point::new(a.cos(), a.sin());
        }
        pts.push(pos);
        pts.push(pendant_vertex(&pts, &self.angles, self.attachment, 0.0));
        pts
    }

    /// Length of the residual vector left by walking every cycle edge;
    /// zero exactly when the cycle closes.
    pub fn closure_error(&self) -> f64 {
        let mut sum = Point::new(0.0, 0.0);
        for &a in &self.angles {
            sum = sum + Point::new(a.cos(), a.sin());
        }
        sum.norm()
    }
}

/// Unit-distance point hanging off cycle vertex `attachment`, opposite the
/// bisector of its two incident cycle edges and rotated by `deviation`.
fn pendant_vertex(cycle: &[Point], angles: &[f64], attachment: usize, deviation: f64) -> Point {
    let k = angles.len();
    let a = attachment % k;
    let out = angles[a];
    let inc = angles[(a + k - 1) % k];
    // Vectors from the attachment vertex toward its two cycle neighbors.
    let toward = Point::new(out.cos() - inc.cos(), out.sin() - inc.sin());
    let dir = if toward.norm() < 1e-12 {
        out + PI / 2.0
    } else {
        (-toward.y).atan2(-toward.x)
    } + deviation;
    cycle[a] + Point::new(dir.cos(), dir.sin())
}

/// The search variables behind [`graham_solve`]: all but the last two cycle
/// headings (those close the cycle in closed form — two-link inverse
/// kinematics, with `elbow` picking the branch) plus the pendant's angular
/// deviation from the bisector.
struct GrahamVars {
    free: usize,
    elbow: bool,
}

impl GrahamVars {
    /// Reconstructs the full cycle headings; the residual is nonzero only
    /// when the free headings leave a gap longer than two unit edges.
    fn headings(&self, x: &[f64]) -> (Vec<f64>, f64) {
        let mut sum = Point::new(0.0, 0.0);
        let mut angles = Vec::with_capacity(self.free + 2);
        for &a in &x[..self.free] {
            angles.push(a);
            sum = sum + Point::new(a.cos(), a.sin());
        }
        let target = -sum;
        let t = target.norm();
        let phi = target.y.atan2(target.x);
        let (delta, residual) = if t <= 2.0 {
            ((t / 2.0).acos(), 0.0)
        } else {
            (0.0, t - 2.0)
        };
        let signed = if self.elbow { delta } else { -delta };
        angles.push(phi + signed);
        angles.push(phi - signed);
        (angles, residual)
    }

    fn points(&self, x: &[f64]) -> (Vec<Point>, f64) {
        let (angles, residual) = self.headings(x);
        let k = angles.len();
        let mut pts = Vec::with_capacity(k + 1);
        let mut pos = Point::new(0.0, 0.0);
        for &a in &angles[..k - 1] {
            pts.push(pos);
            pos = pos + Point::new(a.cos(), a.sin());
        }
        pts.push(pos);
        let pendant = pendant_vertex(&pts, &angles, 0, x[self.free]);
        pts.push(pendant);
        (pts, residual)
    }

    fn score(&self, x: &[f64], weight: f64) -> f64 {
        let (pts, residual) = self.points(x);
        let hull = strict_hull(&pts);
        let area = if hull.len() >= 3 { area_of(&hull) } else { 0.0 };
        let mut penalty = residual * residual;
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let over = pts[i].distance(pts[j]) - 1.0;
                if over > 0.0 {
                    penalty += over * over;
                }
            }
        }
        area - weight * penalty
    }
}

/// True when the graph is an (n−1)-cycle with a single pendant edge: one
/// vertex of degree 1 hanging off a degree-3 vertex, everything else degree
/// 2 and forming one cycle with the anchor.
pub fn diameter_graph_is_cycle_plus_pendant(g: &DiameterGraph) -> bool {
    let n = g.n;
    if g.edges.len() != n {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &g.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let pendant = match (0..n).find(|&v| adj[v].len() == 1) {
        Some(v) => v,
        None => return false,
    };
    let anchor = adj[pendant][0];
    if adj[anchor].len() != 3 {
        return false;
    }
    if (0..n)
        .filter(|&v| v != pendant && v != anchor)
        .any(|v| adj[v].len() != 2)
    {
        return false;
    }
    // Dropping the pendant must leave one (n−1)-cycle: walk it back around
    // to the anchor.
    let mut visited = vec![false; n];
    visited[pendant] = true;
    visited[anchor] = true;
    let mut prev = anchor;
    let mut here = *adj[anchor].iter().find(|&&v| v != pendant).unwrap();
    let mut steps = 1;
    while here != anchor {
        if visited[here] {
            return false;
        }
        visited[here] = true;
        let next = match adj[here].iter().find(|&&v| v != prev && v != pendant) {
            Some(&v) => v,
            None => return false,
        };
        prev = here;
        here = next;
        steps += 1;
    }
    steps == n - 1
}

/// Area maximization for even `n` restricted to the known optimal diameter
/// structure. Only candidates whose final diameter graph matches the
/// cycle-plus-pendant shape are accepted.
pub fn graham_solve(n: usize, config: &SolveConfig) -> Result<OptimizationResult, OptimizerError> {
    if n % 2 != 0 || !(6..=12).contains(&n) {
        return Err(OptimizerError::BadProblem(format!(
            "diameter-graph search needs even n in 6..=12, got {n}"
        )));
    }
    if config.starts == 0 {
        return Err(OptimizerError::BadProblem("need at least one start".into()));
    }
    let root = Rng::seed_from(config.seed);
    let k = n - 1; // cycle edge count
    let free = k - 2;
    // Headings of the regular unit-edge (n−1)-star, the natural center of
    // the basin: each step turns by the star's exterior angle.
    let star_turn = PI - PI / k as f64;
    let candidates: Vec<Option<(ConvexPolygon, f64, bool)>> = (0..config.starts)
        .into_par_iter()
        .map(|s| {
            let mut rng = root.substream(s as u64);
            let vars = GrahamVars {
                free,
                elbow: s % 2 == 0,
            };
            let mut x: Vec<f64> = (0..free)
                .map(|j| j as f64 * star_turn + rng.range(-0.3, 0.3))
                .collect();
            x.push(rng.range(-0.3, 0.3));
            let mut weight = 1e2;
            let mut converged = false;
            for round in 0..config.outer_rounds {
                converged = ascend_vector(
                    &mut x,
                    |x| vars.score(x, weight),
                    config.inner_iterations,
                    config.fd_step,
                );
                if round + 1 == config.outer_rounds {
                    for step in [1e-2, 1e-4, 1e-6] {
                        nelder_mead(&mut x, |x| vars.score(x, weight), step, 4000);
                    }
                }
                weight *= 10.0;
            }
            let (mut pts, residual) = vars.points(&x);
            if residual > 1e-9 {
                return None;
            }
            // A residual pairwise overshoot (the penalties stop at rounding
            // level) is removed by shrinking; uniform scaling preserves the
            // diameter graph.
            let d = diameter_of(&pts);
            if d > 1.0 {
                for p in &mut pts {
                    *p = p.scale(1.0 / d);
                }
            }
            let hull = strict_hull(&pts);
            if hull.len() != n {
                return None;
            }
            let polygon = ConvexPolygon::new(hull).ok()?;
            if !diameter_graph_is_cycle_plus_pendant(&polygon.diameter_graph(1e-6)) {
                return None;
            }
            let value = polygon.metrics().area;
            Some((polygon, value, converged))
        })
        .collect();
    if config.progress {
        for (i, cand) in candidates.iter().enumerate() {
            match cand {
                Some((_, value, _)) => eprintln!("{{\"start\":{i},\"value\":{value}}}"),
                None => eprintln!("{{\"start\":{i},\"value\":null}}"),
            }
        }
    }
    let best = pick_best(candidates).ok_or_else(|| {
        OptimizerError::Infeasible(
            "no start reached the cycle-plus-pendant diameter structure".into(),
        )
    })?;
    let bound = bounds::max_area_given_diameter(n, 1.0).ok();
    Ok(OptimizationResult {
        value: best.1,
        gap: bound.map(|b| b - best.1),
        bound,
        best: best.0,
        starts: config.starts,
        seed: config.seed,
        converged: best.2,
    })
}

// ---------------------------------------------------------------------------
// Closed-form constructions.

/// Which measurement pins down the size of a regular polygon.
#[derive(Clone, Copy, Debug, Serialize)]
pub enum RegularSpec {
    Diameter(f64),
    Side(f64),
    Width(f64),
}

/// Regular `n`-gon with the requested measurement. Diameter and width mean
/// different chords for odd and even `n`: odd polygons span vertex to
/// opposite vertex-pair (`2R cos(π/2n)`) and vertex to opposite side
/// (`R(1 + cos(π/n))`), even ones vertex to antipodal vertex (`2R`) and
/// side to antipodal side (`2R cos(π/n)`).
pub fn regular_polygon(n: usize, spec: RegularSpec) -> Result<ConvexPolygon, OptimizerError> {
    if n < 3 {
        return Err(OptimizerError::BadProblem(format!("need n >= 3, got {n}")));
    }
    let nf = n as f64;
    let v = match spec {
        RegularSpec::Diameter(v) | RegularSpec::Side(v) | RegularSpec::Width(v) => v,
    };
    if !(v > 0.0 && v.is_finite()) {
        return Err(OptimizerError::BadProblem(format!(
            "measurement must be positive, got {v}"
        )));
    }
    let odd = n % 2 == 1;
    let r = match spec {
        RegularSpec::Side(s) => s / (2.0 * (PI / nf).sin()),
        RegularSpec::Diameter(d) => {
            if odd {
                d / (2.0 * (PI / (2.0 * nf)).cos())
            } else {
                d / 2.0
            }
        }
        RegularSpec::Width(w) => {
            if odd {
                w / (1.0 + (PI / nf).cos())
            } else {
                w / (2.0 * (PI / nf).cos())
            }
        }
    };
    let pts = (0..n)
        .map(|k| {
            let t = TAU * k as f64 / nf;
            Point::new(r * t.cos(), r * t.sin())
        })
        .collect();
    Ok(ConvexPolygon::new(pts).expect("regular polygons are convex"))
}

/// Largest area an *equilateral* `n`-gon of diameter `d` reaches — the
/// regular `n`-gon's area. For odd `n` that equals the closed form
/// `(n/2) cos(π/n) tan(π/2n) d²`; for even `n` the same expression would
/// overshoot what the regular polygon (the actual maximizer) attains, so
/// the regular area `(n/8) sin(2π/n) d²` is returned instead.
pub fn equilateral_max_area_reference(n: usize, d: f64) -> Result<f64, OptimizerError> {
    if n < 3 {
        return Err(OptimizerError::BadProblem(format!("need n >= 3, got {n}")));
    }
    if !(d > 0.0 && d.is_finite()) {
        return Err(OptimizerError::BadProblem(format!(
            "diameter must be positive, got {d}"
        )));
    }
    let nf = n as f64;
    Ok(if n % 2 == 1 {
        nf / 2.0 * (PI / nf).cos() * (PI / (2.0 * nf)).tan() * d * d
    } else {
        nf / 8.0 * (TAU / nf).sin() * d * d
    })
}

/// The maximal equilateral polygon of width `w` with an odd number of
/// sides: for `n = 3` the equilateral triangle of side `2w/√3`, for larger
/// odd `n` a trapezoid with the long parallel side cut into `m = (n−1)/2`
/// collinear pieces and the short one into `m − 1`, every side `2w/√3`.
/// It simultaneously maximizes area, perimeter, and diameter in its class.
/// Even `n` is rejected: those quantities are unbounded for even
/// equilateral polygons of fixed width.
pub fn audet_ninin_polygon(n: usize, w: f64) -> Result<ConvexPolygon, OptimizerError> {
    if n < 3 || n % 2 == 0 {
        return Err(OptimizerError::BadProblem(format!(
            "the fixed-width family needs odd n >= 3, got {n}"
        )));
    }
    if !(w > 0.0 && w.is_finite()) {
        return Err(OptimizerError::BadProblem(format!(
            "width must be positive, got {w}"
        )));
    }
    let s = 2.0 * w / 3f64.sqrt();
    if n == 3 {
        let pts = vec![
            Point::new(0.0, 0.0),
            Point::new(s, 0.0),
            Point::new(s / 2.0, w),
        ];
        return Ok(ConvexPolygon::new(pts).expect("triangle is convex"));
    }
    let m = (n - 1) / 2;
    let mut pts = Vec::with_capacity(n);
    for k in 0..=m {
        pts.push(Point::new(k as f64 * s, 0.0));
    }
    for j in (0..m - 1).rev() {
        pts.push(Point::new(s / 2.0 + (j as f64 + 1.0) * s, w));
    }
    pts.push(Point::new(s / 2.0, w));
    Ok(ConvexPolygon::new(pts).expect("trapezoid is weakly convex"))
}
