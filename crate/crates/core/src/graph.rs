//! Generic coordinates, the sweep path, and exact strand tracking producing
//! the ordered crossing sequence (the marked 2-graph).
//!
//! The sweep coordinate is x1 itself: the path is gamma(x) = x + i*h(x) with
//! h piecewise linear, horizontal around the image of every singular point.
//! Along a linear piece every strand's z2 is affine in x with Q(i)
//! coefficients, so crossing times are exact rationals.

use crate::arrangement::{singular_points, Arrangement, SingularPoint};
use crate::error::{Error, Result};
use crate::field::rational::{rat, rat_int, Rational};
use crate::field::GaussianRational;

/// One linear piece of the sweep path: h(x) = h0 + slope * (x - x0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSegment {
    pub x0: Rational,
    pub x1: Rational,
    pub h0: Rational,
    pub slope: Rational,
}

impl PathSegment {
    pub fn h_at(&self, x: &Rational) -> Rational {
        &self.h0 + &(&self.slope * &(x - &self.x0))
    }

    pub fn is_plateau(&self) -> bool {
        use num_traits::Zero;
        self.slope.is_zero()
    }
}

/// The generic frame: shear, basepoint, piecewise-linear sweep path, and
/// the bound R on tracked Im z2 values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericFrame {
    /// Shear (z1, z2) -> (z1 + lambda*z2, z2) already applied to the
    /// arrangement this frame belongs to.
    pub lambda: GaussianRational,
    /// x1 of the basepoint; the path starts here.
    pub base_x1: Rational,
    /// Linear pieces covering [base_x1, x_end], contiguous.
    pub segments: Vec<PathSegment>,
    /// x1 of each singular point in sweep order (plateau centers).
    pub plateau_centers: Vec<Rational>,
    /// Strict upper bound for Im z2 of every strand along the path.
    pub bound_r: Rational,
}

impl GenericFrame {
    pub fn x_end(&self) -> Rational {
        self.segments.last().expect("nonempty path").x1.clone()
    }

    pub fn h_at(&self, x: &Rational) -> Option<Rational> {
        self.segments
            .iter()
            .find(|s| &s.x0 <= x && x <= &s.x1)
            .map(|s| s.h_at(x))
    }
}

/// Affine description of one strand over one path segment:
/// z2(x) = (re_c + re_s x) + i (im_c + im_s x).
#[derive(Debug, Clone)]
struct StrandAffine {
    re_c: Rational,
    re_s: Rational,
    im_c: Rational,
    im_s: Rational,
}

impl StrandAffine {
    fn re_at(&self, x: &Rational) -> Rational {
        &self.re_c + &(&self.re_s * x)
    }

    fn im_at(&self, x: &Rational) -> Rational {
        &self.im_c + &(&self.im_s * x)
    }
}

/// z2 of `line` over the segment, as an affine function of x. Requires the
/// line to have b != 0 (Assumption 4.1).
fn strand_affine(line: &crate::arrangement::AffineLine, seg: &PathSegment) -> Result<StrandAffine> {
    if line.b.is_zero() {
        return Err(Error::StaleFrame("line is vertical (b = 0)".into()));
    }
    // z1(x) = x + i h(x) = i(h0 - slope*x0) + (1 + i slope) x
    let h_const = &seg.h0 - &(&seg.slope * &seg.x0);
    let z1_c = GaussianRational::new(rat_int(0), h_const);
    let z1_s = GaussianRational::new(rat_int(1), seg.slope.clone());
    // z2 = -(a z1 + c)/b
    let minus_inv_b = -&line.b.inverse()?;
    let p = &minus_inv_b * &(&(&line.a * &z1_c) + &line.c);
    let q = &minus_inv_b * &(&line.a * &z1_s);
    Ok(StrandAffine {
        re_c: p.re,
        re_s: q.re,
        im_c: p.im,
        im_s: q.im,
    })
}

/// Crossing kind: an actual crossing consumes a singular point; a virtual
/// crossing is a projection artifact with a sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossingKind {
    /// Index into the sweep-ordered singular point list.
    Actual { point: usize },
    /// +1 or -1 per the calibrated convention.
    Virtual { sign: i8 },
}

/// One crossing of the marked 2-graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    /// Sweep coordinate (x1) of the crossing, exact.
    pub time: Rational,
    pub kind: CrossingKind,
    /// Entering strands in bottom-up order (line indices); two for a
    /// virtual crossing, d_k for an actual one.
    pub strands: Vec<usize>,
    /// Bottom-up index of the lowest involved strand just before the
    /// crossing.
    pub position: usize,
}

/// The marked 2-graph: initial strand order and the crossing sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedTwoGraph {
    /// Line indices bottom-up by Re z2 at the basepoint fiber.
    pub initial_order: Vec<usize>,
    pub crossings: Vec<Crossing>,
    /// Line indices bottom-up at the end of the sweep.
    pub final_order: Vec<usize>,
}

/// A single named assumption check with an optional witness for failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssumptionCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Exact per-assumption verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssumptionReport {
    pub checks: Vec<AssumptionCheck>,
}

impl AssumptionReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&AssumptionCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

#[derive(Debug, Clone)]
struct Event {
    x: Rational,
    pair: (usize, usize),
    actual: bool,
    /// For virtual events: entering-lower line and the Im comparison.
    lower: usize,
    lower_im_smaller: bool,
    at_breakpoint: bool,
}

/// Sweep-ordered singular points of the (sheared) arrangement; errors if two
/// share an x1 coordinate (Assumption 4.2 fails for every path).
fn sweep_ordered_points(arr: &Arrangement) -> Result<Vec<SingularPoint>> {
    let mut pts = singular_points(arr);
    pts.sort_by(|p, q| p.coords.0.re.cmp(&q.coords.0.re));
    for w in pts.windows(2) {
        if w[0].coords.0.re == w[1].coords.0.re {
            return Err(Error::StaleFrame(format!(
                "two singular points share x1 = {}",
                w[0].coords.0.re
            )));
        }
    }
    Ok(pts)
}

/// Build the piecewise-linear path for a sheared arrangement: plateaus of
/// half-width min-gap/3 at each singular point image, linear connectors,
/// basepoint one unit left of the first point.
fn build_path(arr: &Arrangement) -> Result<(Vec<PathSegment>, Vec<Rational>, Rational)> {
    let pts = sweep_ordered_points(arr)?;
    if pts.is_empty() {
        return Err(Error::Precondition("essential arrangement required".into()));
    }
    let centers: Vec<Rational> = pts.iter().map(|p| p.coords.0.re.clone()).collect();
    let heights: Vec<Rational> = pts.iter().map(|p| p.coords.0.im.clone()).collect();
    let min_gap = centers
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .min()
        .unwrap_or_else(|| rat_int(1));
    let w = &min_gap * &rat(1, 3);
    let base_x1 = &centers[0] - &rat_int(1);
    let mut segments = Vec::new();
    // initial stretch and first plateau
    segments.push(PathSegment {
        x0: base_x1.clone(),
        x1: &centers[0] + &w,
        h0: heights[0].clone(),
        slope: rat_int(0),
    });
    for k in 1..centers.len() {
        let from = &centers[k - 1] + &w;
        let to = &centers[k] - &w;
        let rise = &heights[k] - &heights[k - 1];
        let run = &to - &from;
        segments.push(PathSegment {
            x0: from.clone(),
            x1: to.clone(),
            h0: heights[k - 1].clone(),
            slope: &rise / &run,
        });
        segments.push(PathSegment {
            x0: to,
            x1: &centers[k] + &w,
            h0: heights[k].clone(),
            slope: rat_int(0),
        });
    }
    Ok((segments, centers, base_x1))
}

/// Collect all crossing events over the path. The final segment is treated
/// as extending to +infinity; the returned x_end covers every event.
fn collect_events(
    arr: &Arrangement,
    segments: &[PathSegment],
) -> Result<(Vec<Event>, Rational)> {
    let m = arr.size();
    let mut events: Vec<Event> = Vec::new();
    let mut max_x = segments.last().unwrap().x1.clone();
    use num_traits::Zero;
    for (si, seg) in segments.iter().enumerate() {
        let last = si + 1 == segments.len();
        let strands: Vec<StrandAffine> = arr
            .lines()
            .iter()
            .map(|l| strand_affine(l, seg))
            .collect::<Result<_>>()?;
        for i in 0..m {
            for j in i + 1..m {
                let dc = &strands[i].re_c - &strands[j].re_c;
                let ds = &strands[i].re_s - &strands[j].re_s;
                if ds.is_zero() {
                    if dc.is_zero() {
                        return Err(Error::StaleFrame(format!(
                            "strands {} and {} have identical Re z2 on segment {} (non-transverse)",
                            i + 1,
                            j + 1,
                            si
                        )));
                    }
                    continue;
                }
                let x = -&dc / &ds;
                if x < seg.x0 || (!last && x > seg.x1) {
                    continue;
                }
                let at_breakpoint = x == seg.x0 || (!last && x == seg.x1);
                let im_i = strands[i].im_at(&x);
                let im_j = strands[j].im_at(&x);
                let actual = im_i == im_j;
                // Just before the crossing re_i - re_j = ds*(x - x*), so a
                // positive slope ds means strand i enters from below.
                let i_lower = ds > rat_int(0);
                let (lower, lower_im, upper_im) = if i_lower {
                    (i, im_i.clone(), im_j.clone())
                } else {
                    (j, im_j.clone(), im_i.clone())
                };
                if x > max_x {
                    max_x = x.clone();
                }
                events.push(Event {
                    x,
                    pair: (i, j),
                    actual,
                    lower,
                    lower_im_smaller: lower_im < upper_im,
                    at_breakpoint,
                });
            }
        }
    }
    events.sort_by(|a, b| a.x.cmp(&b.x));
    let x_end = &max_x + &rat_int(1);
    Ok((events, x_end))
}

/// Exact verification of Assumptions 4.1-4.5 plus path coverage for the
/// (sheared) arrangement and frame.
pub fn verify_assumptions(arr: &Arrangement, frame: &GenericFrame) -> AssumptionReport {
    let mut checks = Vec::new();
    let mut fail = |name: &str, witness: String, checks: &mut Vec<AssumptionCheck>| {
        checks.push(AssumptionCheck {
            name: name.into(),
            passed: false,
            witness: Some(witness),
        });
    };
    let mut pass = |name: &str, checks: &mut Vec<AssumptionCheck>| {
        checks.push(AssumptionCheck {
            name: name.into(),
            passed: true,
            witness: None,
        });
    };

    // 4.1: no vertical lines
    match arr.lines().iter().position(|l| l.b.is_zero()) {
        Some(i) => fail(
            "assumption-4.1",
            format!("line {} has the form z1 = const", i + 1),
            &mut checks,
        ),
        None => pass("assumption-4.1", &mut checks),
    }

    // 4.2: singular points separated by x1, in increasing order, matching
    // the plateau centers
    let pts = match sweep_ordered_points(arr) {
        Ok(p) => p,
        Err(e) => {
            fail("assumption-4.2", e.to_string(), &mut checks);
            return AssumptionReport { checks };
        }
    };
    let centers: Vec<Rational> = pts.iter().map(|p| p.coords.0.re.clone()).collect();
    if centers == frame.plateau_centers {
        pass("assumption-4.2", &mut checks);
    } else {
        fail(
            "assumption-4.2",
            "frame plateau centers do not match the singular points".into(),
            &mut checks,
        );
    }

    // path coverage: a horizontal plateau at the right height around every
    // center, and contiguous segments
    let mut coverage_ok = true;
    let mut coverage_witness = String::new();
    for w in frame.segments.windows(2) {
        if w[0].x1 != w[1].x0 || w[0].h_at(&w[0].x1) != w[1].h_at(&w[1].x0) {
            coverage_ok = false;
            coverage_witness = format!("path discontinuity at x = {}", w[0].x1);
        }
    }
    for (k, p) in pts.iter().enumerate() {
        let x = &p.coords.0.re;
        let y = &p.coords.0.im;
        let seg = frame
            .segments
            .iter()
            .find(|s| &s.x0 < x && x < &s.x1 && s.is_plateau());
        match seg {
            Some(s) if &s.h0 == y => {}
            _ => {
                coverage_ok = false;
                coverage_witness =
                    format!("no horizontal plateau at height Im = {} around x1 = {}", y, x);
                let _ = k;
            }
        }
    }
    if coverage_ok {
        pass("path-coverage", &mut checks);
    } else {
        fail("path-coverage", coverage_witness, &mut checks);
    }

    // event-based checks
    let events = match collect_events(arr, &frame.segments) {
        Ok((ev, _)) => ev,
        Err(e) => {
            fail("assumption-4.3", e.to_string(), &mut checks);
            return AssumptionReport { checks };
        }
    };
    pass("assumption-4.3", &mut checks);

    // 4.5: virtual crossings interior to linear pieces
    match events.iter().find(|e| !e.actual && e.at_breakpoint) {
        Some(e) => fail(
            "assumption-4.5",
            format!("virtual crossing at a path breakpoint, x1 = {}", e.x),
            &mut checks,
        ),
        None => pass("assumption-4.5", &mut checks),
    }

    // 4.4: distinct x1 for all crossings (virtual vs anything else); actual
    // events group exactly into singular points at their plateau centers
    let mut violation: Option<String> = None;
    let mut idx = 0;
    while idx < events.len() {
        let mut end = idx + 1;
        while end < events.len() && events[end].x == events[idx].x {
            end += 1;
        }
        let group = &events[idx..end];
        let any_virtual = group.iter().any(|e| !e.actual);
        let any_actual = group.iter().any(|e| e.actual);
        if any_virtual && group.len() > 1 {
            violation = Some(format!(
                "{} crossings share x1 = {}",
                group.len(),
                group[0].x
            ));
        } else if any_actual {
            // the group must be the full pair set of one singular point
            let x = &group[0].x;
            match pts.iter().position(|p| &p.coords.0.re == x) {
                None => {
                    violation = Some(format!(
                        "actual-looking crossing at x1 = {x} is not a singular point"
                    ));
                }
                Some(k) => {
                    let inc = &pts[k].incident;
                    let expected = inc.len() * (inc.len() - 1) / 2;
                    let all_incident = group.iter().all(|e| {
                        inc.contains(&e.pair.0) && inc.contains(&e.pair.1) && e.actual
                    });
                    if group.len() != expected || !all_incident {
                        violation = Some(format!(
                            "crossing group at x1 = {x} does not match singular point {}",
                            k + 1
                        ));
                    }
                }
            }
        }
        if violation.is_some() {
            break;
        }
        idx = end;
    }
    // initial fiber must have pairwise distinct Re z2
    if violation.is_none() {
        if let Some(seg) = frame.segments.first() {
            if let Ok(strands) = arr
                .lines()
                .iter()
                .map(|l| strand_affine(l, seg))
                .collect::<Result<Vec<_>>>()
            {
                let mut res: Vec<Rational> =
                    strands.iter().map(|s| s.re_at(&frame.base_x1)).collect();
                res.sort();
                if res.windows(2).any(|w| w[0] == w[1]) {
                    violation =
                        Some("two strands share Re z2 at the basepoint fiber".into());
                }
            }
        }
    }
    match violation {
        Some(w) => fail("assumption-4.4", w, &mut checks),
        None => pass("assumption-4.4", &mut checks),
    }

    // bound R is a strict upper bound for Im z2 along the tracked path
    let mut r_ok = true;
    'outer: for seg in &frame.segments {
        let strands = match arr
            .lines()
            .iter()
            .map(|l| strand_affine(l, seg))
            .collect::<Result<Vec<_>>>()
        {
            Ok(s) => s,
            Err(_) => break,
        };
        for s in &strands {
            for x in [&seg.x0, &seg.x1] {
                if s.im_at(x) >= frame.bound_r {
                    r_ok = false;
                    break 'outer;
                }
            }
        }
    }
    if r_ok {
        pass("bound-R", &mut checks);
    } else {
        fail("bound-R", "a strand reaches Im z2 >= R".into(), &mut checks);
    }

    AssumptionReport { checks }
}

/// Construct a frame for a fixed shear; errors if the sheared data cannot
/// support a path at all (vertical lines or colliding x1 coordinates).
pub fn build_frame_for_lambda(
    arr: &Arrangement,
    lambda: &GaussianRational,
) -> Result<(Arrangement, GenericFrame)> {
    let sheared = arr.shear(lambda);
    if sheared.lines().iter().any(|l| l.b.is_zero()) {
        return Err(Error::StaleFrame("shear leaves a vertical line".into()));
    }
    let (mut segments, centers, base_x1) = build_path(&sheared)?;
    let (events, x_end) = collect_events(&sheared, &segments)?;
    let _ = events;
    segments.last_mut().unwrap().x1 = x_end;
    // R: strict bound on Im z2 over all segments (affine => extrema at ends)
    let mut max_im: Option<Rational> = None;
    for seg in &segments {
        for l in sheared.lines() {
            let s = strand_affine(l, seg)?;
            for x in [&seg.x0, &seg.x1] {
                let v = s.im_at(x);
                if max_im.as_ref().map(|m| &v > m).unwrap_or(true) {
                    max_im = Some(v);
                }
            }
        }
    }
    let bound_r = &max_im.unwrap_or_else(|| rat_int(0)) + &rat_int(1);
    let frame = GenericFrame {
        lambda: lambda.clone(),
        base_x1,
        segments,
        plateau_centers: centers,
        bound_r,
    };
    Ok((sheared, frame))
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Deterministic shear candidates: 0 first (accepted whenever the input is
/// already generic), then small seed-derived Gaussian rationals alternating
/// real and complex.
fn shear_candidate(seed: u64, k: usize) -> GaussianRational {
    if k == 0 {
        return GaussianRational::zero();
    }
    let mut state = seed ^ 0xa076_1d64_78bd_642f ^ (k as u64).wrapping_mul(0x9e37_79b9);
    let draw = |state: &mut u64, lo: i64, hi: i64| -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (splitmix64(state) % span) as i64
    };
    let num = draw(&mut state, 1, 9);
    let den = draw(&mut state, 1, 9);
    let sign = if draw(&mut state, 0, 1) == 0 { 1 } else { -1 };
    let re = rat(sign * num, den);
    if k % 2 == 1 {
        GaussianRational::new(re, rat_int(0))
    } else {
        let inum = draw(&mut state, 1, 9);
        let iden = draw(&mut state, 1, 9);
        let isign = if draw(&mut state, 0, 1) == 0 { 1 } else { -1 };
        GaussianRational::new(re, rat(isign * inum, iden))
    }
}

const SHEAR_RETRY_CAP: usize = 1000;

/// Choose a shear and path satisfying all assumptions, deterministically
/// from the seed. The first accepted candidate wins; lambda = 0 is always
/// tried first.
pub fn choose_generic_frame(
    arr: &Arrangement,
    seed: u64,
) -> Result<(Arrangement, GenericFrame)> {
    if !crate::arrangement::is_essential(arr) {
        return Err(Error::Precondition(
            "arrangement is not essential (no singular points)".into(),
        ));
    }
    for k in 0..SHEAR_RETRY_CAP {
        let lambda = shear_candidate(seed, k);
        let Ok((sheared, frame)) = build_frame_for_lambda(arr, &lambda) else {
            continue;
        };
        if verify_assumptions(&sheared, &frame).all_passed() {
            return Ok((sheared, frame));
        }
    }
    Err(Error::FrameSearchExhausted)
}

/// Trace the strands through the sweep, producing the ordered crossing
/// sequence. Requires a frame that passes `verify_assumptions`.
pub fn trace_graph(arr: &Arrangement, frame: &GenericFrame) -> Result<MarkedTwoGraph> {
    let report = verify_assumptions(arr, frame);
    if !report.all_passed() {
        let first = report.failures()[0];
        return Err(Error::StaleFrame(format!(
            "{}: {}",
            first.name,
            first.witness.clone().unwrap_or_default()
        )));
    }
    let pts = sweep_ordered_points(arr)?;
    let (events, _) = collect_events(arr, &frame.segments)?;

    let order_at = |x: &Rational| -> Result<Vec<usize>> {
        let seg = frame
            .segments
            .iter()
            .find(|s| &s.x0 <= x && x <= &s.x1)
            .ok_or_else(|| Error::StaleFrame("x outside path".into()))?;
        let mut vals: Vec<(Rational, usize)> = arr
            .lines()
            .iter()
            .enumerate()
            .map(|(i, l)| Ok((strand_affine(l, seg)?.re_at(x), i)))
            .collect::<Result<_>>()?;
        vals.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(vals.into_iter().map(|(_, i)| i).collect())
    };

    let initial_order = order_at(&frame.base_x1)?;
    let mut order = initial_order.clone();
    let mut crossings = Vec::new();

    let mut idx = 0;
    while idx < events.len() {
        let mut end = idx + 1;
        while end < events.len() && events[end].x == events[idx].x {
            end += 1;
        }
        let group = &events[idx..end];
        let time = group[0].x.clone();
        if group[0].actual {
            // full singular point: involved strands are contiguous and
            // reverse their order
            let k = pts
                .iter()
                .position(|p| p.coords.0.re == time)
                .expect("verified actual crossing");
            let incident = &pts[k].incident;
            let positions: Vec<usize> = order
                .iter()
                .enumerate()
                .filter(|(_, l)| incident.contains(l))
                .map(|(p, _)| p)
                .collect();
            let start = positions[0];
            if positions
                .iter()
                .enumerate()
                .any(|(off, &p)| p != start + off)
            {
                return Err(Error::StaleFrame(format!(
                    "strands of singular point {} are not contiguous at x1 = {}",
                    k + 1,
                    time
                )));
            }
            let entering: Vec<usize> = order[start..start + incident.len()].to_vec();
            order[start..start + incident.len()].reverse();
            crossings.push(Crossing {
                time,
                kind: CrossingKind::Actual { point: k },
                strands: entering,
                position: start,
            });
        } else {
            let e = &group[0];
            let (i, j) = e.pair;
            let pi = order.iter().position(|&l| l == i).unwrap();
            let pj = order.iter().position(|&l| l == j).unwrap();
            let (lo, hi) = if pi < pj { (pi, pj) } else { (pj, pi) };
            if hi != lo + 1 {
                return Err(Error::StaleFrame(format!(
                    "crossing strands {} and {} are not adjacent at x1 = {}",
                    i + 1,
                    j + 1,
                    e.x
                )));
            }
            if order[lo] != e.lower {
                return Err(Error::StaleFrame(format!(
                    "strand order inconsistency at x1 = {}",
                    e.x
                )));
            }
            // Calibrated sign convention (fixed by the worked-example
            // regression): positive iff the rising (entering-lower) strand
            // has the smaller Im z2 at the crossing.
            let sign = if e.lower_im_smaller { 1 } else { -1 };
            let entering = vec![order[lo], order[hi]];
            order.swap(lo, hi);
            crossings.push(Crossing {
                time,
                kind: CrossingKind::Virtual { sign },
                strands: entering,
                position: lo,
            });
        }
        idx = end;
    }

    // the permutation composed over all crossings must land on the final
    // order computed independently
    let final_order = order_at(&frame.x_end())?;
    if order != final_order {
        return Err(Error::StaleFrame(
            "crossing permutations do not compose to the final order".into(),
        ));
    }
    Ok(MarkedTwoGraph {
        initial_order,
        crossings,
        final_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::AffineLine;

    fn gr(s: &str) -> GaussianRational {
        GaussianRational::parse(s).unwrap()
    }

    fn example45() -> Arrangement {
        Arrangement::new(vec![
            AffineLine::new(gr("1"), gr("-1"), gr("-1")).unwrap(),
            AffineLine::new(gr("1"), gr("-1"), gr("0")).unwrap(),
            AffineLine::new(gr("1"), gr("-1*i"), gr("0")).unwrap(),
            AffineLine::new(gr("1"), gr("2"), gr("0")).unwrap(),
        ])
        .unwrap()
    }

    fn falk_a1() -> Arrangement {
        Arrangement::new(vec![
            AffineLine::from_ints(1, 0, 1),
            AffineLine::from_ints(1, 0, -1),
            AffineLine::from_ints(1, 1, 0),
            AffineLine::from_ints(0, 1, 0),
            AffineLine::from_ints(1, -1, 0),
        ])
        .unwrap()
    }

    #[test]
    fn example45_accepts_lambda_zero() {
        let (sheared, frame) = choose_generic_frame(&example45(), 0).unwrap();
        assert_eq!(frame.lambda, GaussianRational::zero());
        assert_eq!(frame.base_x1, rat_int(-1));
        assert_eq!(
            frame.plateau_centers,
            vec![rat_int(0), rat(1, 2), rat(2, 3)]
        );
        assert!(verify_assumptions(&sheared, &frame).all_passed());
        // same result for any seed since candidate 0 is seed-independent
        let (_, frame7) = choose_generic_frame(&example45(), 7).unwrap();
        assert_eq!(frame, frame7);
    }

    #[test]
    fn example45_crossing_sequence() {
        let (sheared, frame) = choose_generic_frame(&example45(), 0).unwrap();
        let graph = trace_graph(&sheared, &frame).unwrap();
        // initial bottom-up: H1, H2, H3, H4
        assert_eq!(graph.initial_order, vec![0, 1, 2, 3]);
        let kinds: Vec<(bool, Vec<usize>)> = graph
            .crossings
            .iter()
            .map(|c| (matches!(c.kind, CrossingKind::Actual { .. }), c.strands.clone()))
            .collect();
        // P1(H2,H3,H4), v(H3,H4), P2(H1,H3), v(H1,H3), v(H3,H4), P3(H1,H4), v(H1,H3)
        assert_eq!(kinds.len(), 7);
        assert_eq!(kinds[0], (true, vec![1, 2, 3]));
        assert!(!kinds[1].0);
        assert_eq!(kinds[2], (true, vec![0, 2]));
        assert!(!kinds[3].0);
        assert!(!kinds[4].0);
        assert_eq!(kinds[5], (true, vec![0, 3]));
        assert!(!kinds[6].0);
        // virtual crossing times from the worked example geometry
        assert_eq!(graph.crossings[1].time, rat(1, 11));
        assert_eq!(graph.crossings[3].time, rat(9, 16));
        assert_eq!(graph.crossings[4].time, rat(11, 19));
        assert_eq!(graph.crossings[6].time, rat_int(1));
        // signs: negative, positive, positive, negative
        let signs: Vec<i8> = graph
            .crossings
            .iter()
            .filter_map(|c| match c.kind {
                CrossingKind::Virtual { sign } => Some(sign),
                _ => None,
            })
            .collect();
        assert_eq!(signs, vec![-1, 1, 1, -1]);
    }

    #[test]
    fn two_crossing_lines_single_actual() {
        let arr = Arrangement::new(vec![
            AffineLine::from_ints(1, -1, 0),
            AffineLine::from_ints(1, 1, 0),
        ])
        .unwrap();
        let (sheared, frame) = choose_generic_frame(&arr, 0).unwrap();
        let graph = trace_graph(&sheared, &frame).unwrap();
        assert_eq!(graph.crossings.len(), 1);
        assert!(matches!(graph.crossings[0].kind, CrossingKind::Actual { point: 0 }));
        assert_eq!(graph.final_order, vec![1, 0]);
    }

    #[test]
    fn vertical_line_forces_shear() {
        let arr = Arrangement::new(vec![
            AffineLine::from_ints(1, 0, 0),
            AffineLine::from_ints(0, 1, 0),
        ])
        .unwrap();
        let (sheared, frame) = choose_generic_frame(&arr, 0).unwrap();
        assert_ne!(frame.lambda, GaussianRational::zero());
        assert!(sheared.lines().iter().all(|l| !l.b.is_zero()));
        let graph = trace_graph(&sheared, &frame).unwrap();
        assert_eq!(graph.crossings.len(), 1);
    }

    #[test]
    fn real_arrangement_has_no_virtual_crossings() {
        let (sheared, frame) = choose_generic_frame(&falk_a1(), 0).unwrap();
        let graph = trace_graph(&sheared, &frame).unwrap();
        let actual = graph
            .crossings
            .iter()
            .filter(|c| matches!(c.kind, CrossingKind::Actual { .. }))
            .count();
        assert_eq!(actual, 7);
        assert_eq!(graph.crossings.len(), 7);
    }

    #[test]
    fn falk_a2_finds_a_frame() {
        let arr = Arrangement::new(vec![
            AffineLine::from_ints(1, 0, 1),
            AffineLine::from_ints(1, 0, -1),
            AffineLine::from_ints(0, 1, 1),
            AffineLine::from_ints(0, 1, -1),
            AffineLine::from_ints(1, -1, -1),
        ])
        .unwrap();
        let (sheared, frame) = choose_generic_frame(&arr, 0).unwrap();
        assert!(verify_assumptions(&sheared, &frame).all_passed());
        let graph = trace_graph(&sheared, &frame).unwrap();
        let actual = graph
            .crossings
            .iter()
            .filter(|c| matches!(c.kind, CrossingKind::Actual { .. }))
            .count();
        assert_eq!(actual, 8);
    }

    #[test]
    fn degenerate_coincidence_fails_assumption_4_4() {
        // L1, L2 cross at the origin (actual, x1 = 0); L3 and L4 are crafted
        // so their Re z2 values cross exactly at x1 = 0 with distinct Im.
        let arr = Arrangement::new(vec![
            AffineLine::from_ints(1, -1, 0),
            AffineLine::from_ints(1, 1, 0),
            // z2 = (1+i) + (1+i) z1  <=>  (1+i) z1 - z2 + (1+i) = 0
            AffineLine::new(gr("1+1*i"), gr("-1"), gr("1+1*i")).unwrap(),
            // z2 = (1-i) + (-2+2i) z1
            AffineLine::new(gr("-2+2*i"), gr("-1"), gr("1-1*i")).unwrap(),
        ])
        .unwrap();
        let (sheared, frame) = build_frame_for_lambda(&arr, &GaussianRational::zero()).unwrap();
        let report = verify_assumptions(&sheared, &frame);
        assert!(!report.all_passed());
        let f44 = report
            .checks
            .iter()
            .find(|c| c.name == "assumption-4.4")
            .unwrap();
        assert!(!f44.passed);
        assert!(f44.witness.as_ref().unwrap().contains("x1 = 0"));
        assert!(trace_graph(&sheared, &frame).is_err());
        // the frame search recovers with a different shear
        let (sheared2, frame2) = choose_generic_frame(&arr, 0).unwrap();
        assert!(verify_assumptions(&sheared2, &frame2).all_passed());
    }

    #[test]
    fn strand_values_continuous_across_breakpoints() {
        let (sheared, frame) = choose_generic_frame(&example45(), 0).unwrap();
        for w in frame.segments.windows(2) {
            let x = &w[0].x1;
            for l in sheared.lines() {
                let s0 = strand_affine(l, &w[0]).unwrap();
                let s1 = strand_affine(l, &w[1]).unwrap();
                assert_eq!(s0.re_at(x), s1.re_at(x));
                assert_eq!(s0.im_at(x), s1.im_at(x));
            }
        }
    }
}
