//! Two-objective benchmark over `[-5,5]²`: dense random sampling and an
//! evolutionary seed-and-grow loop that keeps the Pareto-optimal controls
//! separate from the dominated ones.
//!
//! `f1` has a single narrow well of depth 4.2 at `(π, π)`; `f2` is a scaled
//! Himmelblau function with four zeros. A control is safe when its `f2` value
//! does not exceed the threshold.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::Rng as _;
use rand_distr::{Distribution, Normal};
use serde::Serialize;

use crate::check::Rng;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::finset::FinSet;
use crate::pareto::{pareto_mask, Point};

pub type Control = Point<2, f64>;
pub type Objectives = Point<2, f64>;

pub const DEFAULT_THRESHOLD: f64 = 0.15;
pub const DEFAULT_EPSILON: f64 = 0.2;
pub const DEFAULT_SIGMA: f64 = 0.02;

/// The four zeros of [`f2`].
pub const HIMMELBLAU_MINIMA: [(f64, f64); 4] = [(3.0, 2.0), (-3.779, -3.283), (-2.805, 3.131), (3.584, -1.848)];

pub fn f1(x: f64, y: f64) -> f64 {
    5.2 - x.cos() * y.cos() * (-((x - PI).powi(2) + (y - PI).powi(2))).exp()
}

pub fn f2(x: f64, y: f64) -> f64 {
    ((x * x + y - 11.0).powi(2) + (x + y * y - 7.0).powi(2)) / 100.0
}

pub fn objectives(c: &Control) -> Objectives {
    let [x, y] = c.0;
    Point([f1(x, y), f2(x, y)])
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Rect2 {
    pub x: (f64, f64),
    pub y: (f64, f64),
}

impl Rect2 {
    pub fn new(x: (f64, f64), y: (f64, f64)) -> Result<Self> {
        let ok = |(lo, hi): (f64, f64)| lo.is_finite() && hi.is_finite() && lo <= hi;
        if ok(x) && ok(y) {
            Ok(Rect2 { x, y })
        } else {
            Err(Error::validity(
                "rect",
                format!("need finite lo <= hi on both axes, got {x:?} x {y:?}"),
            ))
        }
    }

    pub fn contains(&self, c: &Control) -> bool {
        let [a, b] = c.0;
        (self.x.0..=self.x.1).contains(&a) && (self.y.0..=self.y.1).contains(&b)
    }

    pub fn widths(&self) -> (f64, f64) {
        (self.x.1 - self.x.0, self.y.1 - self.y.0)
    }

    pub fn clamp(&self, c: Control) -> Control {
        let [a, b] = c.0;
        Point([a.clamp(self.x.0, self.x.1), b.clamp(self.y.0, self.y.1)])
    }

    pub fn sample(&self, rng: &mut Rng) -> Control {
        let (w, h) = self.widths();
        Point([self.x.0 + w * rng.random::<f64>(), self.y.0 + h * rng.random::<f64>()])
    }
}

impl Default for Rect2 {
    fn default() -> Self {
        Rect2 {
            x: (-5.0, 5.0),
            y: (-5.0, 5.0),
        }
    }
}

/// Parses `"xlo,xhi,ylo,yhi"`.
impl FromStr for Rect2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::validity("rect", format!("{s:?}: {e}")))?;
        match parts[..] {
            [a, b, c, d] => Rect2::new((a, b), (c, d)),
            _ => Err(Error::validity(
                "rect",
                format!("{s:?}: expected four comma-separated numbers"),
            )),
        }
    }
}

impl fmt::Display for Rect2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.x.0, self.x.1, self.y.0, self.y.1)
    }
}

/// `n` points drawn uniformly from `rect`, in generation order.
pub fn random_grid_2d(n: usize, rect: &Rect2, rng: &mut Rng) -> FinSet<Control> {
    (0..n).map(|_| rect.sample(rng)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LabeledPoint {
    pub control: Control,
    pub objectives: Objectives,
    pub safe: bool,
    pub pareto: bool,
}

/// Evaluates every control once and labels it.
pub fn classify<F>(exec: Exec, controls: &[Control], fs: F, threshold: f64) -> Vec<LabeledPoint>
where
    F: Fn(&Control) -> Objectives + Sync + Send,
{
    let images = exec.map_slice(controls, fs);
    label(exec, controls, &images, threshold)
}

fn label(exec: Exec, controls: &[Control], images: &[Objectives], threshold: f64) -> Vec<LabeledPoint> {
    let mask = pareto_mask(exec, images);
    controls
        .iter()
        .zip(images)
        .zip(mask)
        .map(|((&control, &objectives), pareto)| LabeledPoint {
            control,
            objectives,
            safe: objectives.0[1] <= threshold,
            pareto,
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Evolution

/// Evaluated controls split into the Pareto-optimal ones (`pys`) and the
/// rest (`npys`). Images are cached next to their controls.
#[derive(Clone, Debug, PartialEq)]
pub struct FrontState<C, const N: usize, S> {
    pys: Vec<(C, Point<N, S>)>,
    npys: Vec<(C, Point<N, S>)>,
}

impl<C, const N: usize, S> Default for FrontState<C, N, S> {
    fn default() -> Self {
        FrontState {
            pys: Vec::new(),
            npys: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    /// Dominated by a member of `pys`.
    Dominated,
    /// Same image as a member of `pys`.
    Tied,
    /// Joined `pys`; this many members moved to `npys`.
    Front { displaced: usize },
}

impl<C, const N: usize, S> FrontState<C, N, S>
where
    C: Clone + PartialEq + Send + Sync,
    S: PartialOrd + Copy + Send + Sync,
{
    /// Splits `ys` by Pareto optimality of their images.
    pub fn seed<F>(exec: Exec, fs: F, ys: &[C]) -> Self
    where
        F: Fn(&C) -> Point<N, S> + Sync + Send,
    {
        let images = exec.map_slice(ys, &fs);
        let mask = pareto_mask(exec, &images);
        let mut state = FrontState::default();
        for ((y, img), opt) in ys.iter().zip(images).zip(mask) {
            if opt {
                state.pys.push((y.clone(), img));
            } else {
                state.npys.push((y.clone(), img));
            }
        }
        state
    }

    /// Adds an evaluated control, keeping `pys` equal to the argmin set.
    pub fn insert(&mut self, y: C, img: Point<N, S>) -> Placement {
        if self.pys.iter().any(|(_, p)| p.dominates(&img)) {
            self.npys.push((y, img));
            return Placement::Dominated;
        }
        if self.pys.iter().any(|(_, p)| *p == img) {
            self.pys.push((y, img));
            return Placement::Tied;
        }
        let (kept, displaced): (Vec<_>, Vec<_>) = std::mem::take(&mut self.pys)
            .into_iter()
            .partition(|(_, p)| !img.dominates(p));
        let n = displaced.len();
        self.pys = kept;
        self.npys.extend(displaced);
        self.pys.push((y, img));
        Placement::Front { displaced: n }
    }

    pub fn pys(&self) -> FinSet<C> {
        self.pys.iter().map(|(c, _)| c.clone()).collect()
    }

    pub fn npys(&self) -> FinSet<C> {
        self.npys.iter().map(|(c, _)| c.clone()).collect()
    }

    pub fn pys_with_images(&self) -> &[(C, Point<N, S>)] {
        &self.pys
    }

    pub fn npys_with_images(&self) -> &[(C, Point<N, S>)] {
        &self.npys
    }

    pub fn len(&self) -> usize {
        self.pys.len() + self.npys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Re-evaluates every control and checks that `pys` is exactly the set of
    /// Pareto-optimal controls of `npys ∪ pys` and that the two are disjoint.
    pub fn invariant_holds<F>(&self, exec: Exec, fs: F) -> bool
    where
        F: Fn(&C) -> Point<N, S> + Sync + Send,
    {
        let all: Vec<C> = self.npys.iter().chain(&self.pys).map(|(c, _)| c.clone()).collect();
        let images = exec.map_slice(&all, &fs);
        let mask = pareto_mask(exec, &images);
        let opt: FinSet<C> = all
            .iter()
            .zip(mask)
            .filter(|(_, m)| *m)
            .map(|(c, _)| c.clone())
            .collect();
        let pys = self.pys();
        let npys = self.npys();
        opt.set_eq(&pys) && !pys.iter().any(|c| npys.contains(c))
    }
}

/// Next control to evaluate: uniform over `rect` with probability `epsilon`
/// (or always, while `pys` is empty), otherwise a Gaussian perturbation of a
/// random `pys` member with per-axis standard deviation `sigma × width`,
/// clamped to `rect`.
pub fn propose(state: &FrontState<Control, 2, f64>, rect: &Rect2, rng: &mut Rng, epsilon: f64, sigma: f64) -> Control {
    let pys = state.pys_with_images();
    if pys.is_empty() || rng.random::<f64>() < epsilon {
        return rect.sample(rng);
    }
    let (base, _) = pys[rng.random_range(0..pys.len())];
    let (w, h) = rect.widths();
    let mut jitter = |scale: f64| match Normal::new(0.0, sigma * scale) {
        Ok(n) if scale > 0.0 => n.sample(rng),
        _ => 0.0,
    };
    let dx = jitter(w);
    let dy = jitter(h);
    rect.clamp(Point([base.0[0] + dx, base.0[1] + dy]))
}

/// One evolutionary step: propose, evaluate once, insert.
pub fn evolve_step<F>(
    state: &mut FrontState<Control, 2, f64>,
    fs: F,
    rect: &Rect2,
    rng: &mut Rng,
    epsilon: f64,
    sigma: f64,
) -> Placement
where
    F: Fn(&Control) -> Objectives,
{
    let y = propose(state, rect, rng, epsilon, sigma);
    let img = fs(&y);
    state.insert(y, img)
}

// ---------------------------------------------------------------------------
// Runs

#[derive(Clone, Debug, PartialEq)]
pub struct SamplingConfig {
    pub n: usize,
    pub seed: u64,
    pub rect: Rect2,
    pub threshold: f64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            n: 250_000,
            seed: 137,
            rect: Rect2::default(),
            threshold: DEFAULT_THRESHOLD,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvolutionConfig {
    pub grid: usize,
    pub iters: usize,
    pub seed: u64,
    pub rect: Rect2,
    pub threshold: f64,
    pub epsilon: f64,
    pub sigma: f64,
    /// Recheck the invariant every this many steps; 0 checks only at the end.
    pub check_every: usize,
}

impl Default for EvolutionConfig {
    fn default() -> Self {
        EvolutionConfig {
            grid: 50,
            iters: 22_500,
            seed: 137,
            rect: Rect2::default(),
            threshold: DEFAULT_THRESHOLD,
            epsilon: DEFAULT_EPSILON,
            sigma: DEFAULT_SIGMA,
            check_every: 0,
        }
    }
}

impl EvolutionConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.epsilon) {
            return Err(Error::validity(
                "config",
                format!("epsilon {} outside [0, 1]", self.epsilon),
            ));
        }
        if !(self.sigma >= 0.0 && self.sigma.is_finite()) {
            return Err(Error::validity(
                "config",
                format!("sigma {} must be finite and >= 0", self.sigma),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Metrics {
    pub evaluations: usize,
    pub f1min: Option<f64>,
    pub f2min: Option<f64>,
    pub argmin_f1: Option<[f64; 2]>,
    pub argmin_f2: Option<[f64; 2]>,
    pub f2_at_argmin_f1: Option<f64>,
    pub f1_at_argmin_f2: Option<f64>,
    pub front_size: usize,
    pub safe_count: usize,
    pub unsafe_count: usize,
}

impl Metrics {
    /// Summary of labeled points; ties in an argmin go to the earliest point.
    pub fn of(points: &[LabeledPoint], evaluations: usize) -> Self {
        let best = |k: usize| {
            points.iter().fold(None::<&LabeledPoint>, |acc, p| match acc {
                Some(q) if q.objectives.0[k] <= p.objectives.0[k] => Some(q),
                _ => Some(p),
            })
        };
        let b1 = best(0);
        let b2 = best(1);
        let safe_count = points.iter().filter(|p| p.safe).count();
        Metrics {
            evaluations,
            f1min: b1.map(|p| p.objectives.0[0]),
            f2min: b2.map(|p| p.objectives.0[1]),
            argmin_f1: b1.map(|p| p.control.0),
            argmin_f2: b2.map(|p| p.control.0),
            f2_at_argmin_f1: b1.map(|p| p.objectives.0[1]),
            f1_at_argmin_f2: b2.map(|p| p.objectives.0[0]),
            front_size: points.iter().filter(|p| p.pareto).count(),
            safe_count,
            unsafe_count: points.len() - safe_count,
        }
    }
}

pub fn run_sampling(exec: Exec, config: &SamplingConfig) -> (Vec<LabeledPoint>, Metrics) {
    let mut rng = Rng::seed_from(config.seed);
    let controls = random_grid_2d(config.n, &config.rect, &mut rng);
    let points = classify(exec, controls.as_slice(), objectives, config.threshold);
    let metrics = Metrics::of(&points, config.n);
    (points, metrics)
}

#[derive(Clone, Debug)]
pub struct EvolutionRun {
    pub state: FrontState<Control, 2, f64>,
    pub evaluations: usize,
    /// Number of invariant rechecks that failed (0 on a correct run).
    pub invariant_failures: usize,
    pub invariant_checks: usize,
}

impl EvolutionRun {
    /// `pys` members first, then `npys`, each in insertion order.
    pub fn labeled(&self, threshold: f64) -> Vec<LabeledPoint> {
        let lab = |pareto: bool| {
            move |&(control, objectives): &(Control, Objectives)| LabeledPoint {
                control,
                objectives,
                safe: objectives.0[1] <= threshold,
                pareto,
            }
        };
        let state = &self.state;
        state
            .pys_with_images()
            .iter()
            .map(lab(true))
            .chain(state.npys_with_images().iter().map(lab(false)))
            .collect()
    }
}

pub fn run_evolution(exec: Exec, config: &EvolutionConfig) -> Result<(EvolutionRun, Metrics)> {
    config.validate()?;
    let mut rng = Rng::seed_from(config.seed);
    let seed = random_grid_2d(config.grid * config.grid, &config.rect, &mut rng);
    let mut run = EvolutionRun {
        state: FrontState::seed(exec, objectives, seed.as_slice()),
        evaluations: seed.len(),
        invariant_failures: 0,
        invariant_checks: 0,
    };
    for step in 1..=config.iters {
        evolve_step(
            &mut run.state,
            objectives,
            &config.rect,
            &mut rng,
            config.epsilon,
            config.sigma,
        );
        run.evaluations += 1;
        if config.check_every > 0 && step % config.check_every == 0 && step != config.iters {
            run.invariant_checks += 1;
            if !run.state.invariant_holds(exec, objectives) {
                run.invariant_failures += 1;
            }
        }
    }
    run.invariant_checks += 1;
    if !run.state.invariant_holds(exec, objectives) {
        run.invariant_failures += 1;
    }
    let metrics = Metrics::of(&run.labeled(config.threshold), run.evaluations);
    Ok((run, metrics))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pareto::{argpareto_min, example_points};

    #[test]
    fn objective_values() {
        assert!((f1(PI, PI) - 4.2).abs() < 1e-12);
        assert_eq!(f2(3.0, 2.0), 0.0);
        assert!((f2(3.132, 3.130) - 0.389).abs() < 5e-4);
        for (x, y) in HIMMELBLAU_MINIMA {
            assert!(f2(x, y) < 1e-4, "{x},{y}");
        }
    }

    #[test]
    fn rect_parsing() {
        let r: Rect2 = "-5,5,-5,5".parse().unwrap();
        assert_eq!(r, Rect2::default());
        assert_eq!(r.to_string(), "-5,5,-5,5");
        assert!("-5,5,-5".parse::<Rect2>().is_err());
        assert!("5,-5,-5,5".parse::<Rect2>().is_err());
        assert!("a,b,c,d".parse::<Rect2>().is_err());
    }

    #[test]
    fn grid_is_inside_and_deterministic() {
        let r = Rect2::default();
        let a = random_grid_2d(1000, &r, &mut Rng::seed_from(1));
        let b = random_grid_2d(1000, &r, &mut Rng::seed_from(1));
        assert_eq!(a, b);
        assert!(a.iter().all(|c| r.contains(c)));
        assert!(random_grid_2d(0, &r, &mut Rng::seed_from(1)).is_empty());
    }

    #[test]
    fn classify_example() {
        let pts = example_points();
        let controls: Vec<Control> = pts.iter().map(|(_, p)| *p).collect();
        let labeled = classify(Exec::Sequential, &controls, |c| *c, 1.0);
        let marked: Vec<&str> = pts
            .iter()
            .zip(&labeled)
            .filter(|(_, l)| l.pareto)
            .map(|((n, _), _)| *n)
            .collect();
        assert_eq!(marked, ["p1", "p2", "p3", "p4"]);
        assert!(classify(Exec::Sequential, &[], objectives, 0.15).is_empty());
    }

    #[test]
    fn safety_boundary_is_inclusive() {
        let labeled = classify(Exec::Sequential, &[Point([0.0, 0.0])], |_| Point([1.0, 0.15]), 0.15);
        assert!(labeled[0].safe);
        let labeled = classify(Exec::Sequential, &[Point([0.0, 0.0])], |_| Point([1.0, 0.150001]), 0.15);
        assert!(!labeled[0].safe);
    }

    #[test]
    fn seed_front_example() {
        let pts = example_points();
        let controls: Vec<Control> = pts.iter().map(|(_, p)| *p).collect();
        let s = FrontState::seed(Exec::Sequential, |c: &Control| *c, &controls);
        let front: FinSet<Control> = pts[..4].iter().map(|(_, p)| *p).collect();
        assert!(s.pys().set_eq(&front));
        assert!(s.invariant_holds(Exec::Sequential, |c: &Control| *c));
        let empty = FrontState::<Control, 2, f64>::seed(Exec::Sequential, objectives, &[]);
        assert!(empty.is_empty());
    }

    #[test]
    fn insert_cases() {
        let id = |c: &Control| *c;
        let mut s = FrontState::seed(Exec::Sequential, id, &[Point([1.0, 3.0]), Point([3.0, 1.0])]);
        assert_eq!(s.insert(Point([4.0, 4.0]), Point([4.0, 4.0])), Placement::Dominated);
        assert_eq!(s.pys().len(), 2);
        assert_eq!(s.insert(Point([9.0, 9.0]), Point([1.0, 3.0])), Placement::Tied);
        assert_eq!(s.pys().len(), 3);
        // new dominating point pushes (3,1) out but leaves the (1,3) pair
        assert_eq!(
            s.insert(Point([2.0, 0.5]), Point([2.0, 0.5])),
            Placement::Front { displaced: 1 }
        );
        assert!(s.npys().contains(&Point([3.0, 1.0])));
        let imgs = |c: &Control| if *c == Point([9.0, 9.0]) { Point([1.0, 3.0]) } else { *c };
        assert!(s.invariant_holds(Exec::Sequential, imgs));
    }

    #[test]
    fn empty_front_explores() {
        let s = FrontState::default();
        let r = Rect2::default();
        let mut rng = Rng::seed_from(3);
        for _ in 0..100 {
            assert!(r.contains(&propose(&s, &r, &mut rng, 0.0, 0.02)));
        }
    }

    #[test]
    fn seeded_front_matches_argpareto_min() {
        let r = Rect2::default();
        let ys = random_grid_2d(300, &r, &mut Rng::seed_from(8));
        let s = FrontState::seed(Exec::Parallel, objectives, ys.as_slice());
        assert!(s.pys().set_eq(&argpareto_min(objectives, &ys)));
        assert!(s.npys().set_eq(&ys.difference(&s.pys())));
    }

    #[test]
    fn small_evolution_keeps_invariant_and_budget() {
        let cfg = EvolutionConfig {
            grid: 5,
            iters: 400,
            seed: 4,
            check_every: 25,
            ..EvolutionConfig::default()
        };
        let (run, m) = run_evolution(Exec::Sequential, &cfg).unwrap();
        assert_eq!(run.evaluations, 425);
        assert_eq!(m.evaluations, 425);
        assert_eq!(run.state.len(), 425);
        assert_eq!(run.invariant_failures, 0);
        assert_eq!(run.invariant_checks, 16);
        let cfg0 = EvolutionConfig {
            grid: 0,
            iters: 50,
            ..cfg
        };
        let (run0, _) = run_evolution(Exec::Sequential, &cfg0).unwrap();
        assert_eq!(run0.evaluations, 50);
        assert_eq!(run0.invariant_failures, 0);
    }

    #[test]
    fn zero_iterations_is_the_seed_front() {
        let cfg = EvolutionConfig {
            grid: 10,
            iters: 0,
            seed: 9,
            ..EvolutionConfig::default()
        };
        let (run, _) = run_evolution(Exec::Sequential, &cfg).unwrap();
        let ys = random_grid_2d(100, &cfg.rect, &mut Rng::seed_from(9));
        assert!(run.state.pys().set_eq(&argpareto_min(objectives, &ys)));
    }

    #[test]
    fn strategies_agree_on_sampling() {
        let cfg = SamplingConfig {
            n: 5000,
            seed: 2,
            ..SamplingConfig::default()
        };
        let (a, ma) = run_sampling(Exec::Sequential, &cfg);
        let (b, mb) = run_sampling(Exec::Parallel, &cfg);
        assert_eq!(a, b);
        assert_eq!(ma, mb);
        assert_eq!(ma.safe_count + ma.unsafe_count, 5000);
    }

    #[test]
    fn bad_config_is_rejected() {
        let cfg = EvolutionConfig {
            epsilon: 1.5,
            ..EvolutionConfig::default()
        };
        assert!(run_evolution(Exec::Sequential, &cfg).is_err());
    }
}
