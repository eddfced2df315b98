//! Affine line arrangements in C^2 with exact Q(i) coefficients, and their
//! incidence combinatorics.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::GaussianRational;

/// The line { a*z1 + b*z2 + c = 0 } with (a, b) != (0, 0). Two lines are
/// equal iff their coefficient triples are proportional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLine {
    pub a: GaussianRational,
    pub b: GaussianRational,
    pub c: GaussianRational,
}

impl AffineLine {
    pub fn new(a: GaussianRational, b: GaussianRational, c: GaussianRational) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Parse("line with a = b = 0".into()));
        }
        Ok(AffineLine { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        AffineLine::new(
            GaussianRational::from_int(a),
            GaussianRational::from_int(b),
            GaussianRational::from_int(c),
        )
        .expect("nonzero normal")
    }

    /// Projective equality: proportional coefficient triples.
    pub fn same_line(&self, other: &Self) -> bool {
        let cross = |x: &GaussianRational, y: &GaussianRational, u: &GaussianRational, v: &GaussianRational| {
            (&(x * v) - &(y * u)).is_zero()
        };
        cross(&self.a, &self.b, &other.a, &other.b)
            && cross(&self.a, &self.c, &other.a, &other.c)
            && cross(&self.b, &self.c, &other.b, &other.c)
    }

    /// Parallel (or equal): proportional normal vectors (a, b).
    pub fn is_parallel(&self, other: &Self) -> bool {
        (&(&self.a * &other.b) - &(&self.b * &other.a)).is_zero()
    }

    /// Intersection point of two non-parallel lines.
    pub fn intersect(&self, other: &Self) -> Option<(GaussianRational, GaussianRational)> {
        let det = &(&self.a * &other.b) - &(&self.b * &other.a);
        if det.is_zero() {
            return None;
        }
        // Cramer: a1 z1 + b1 z2 = -c1 ; a2 z1 + b2 z2 = -c2
        let z1 = (&(&self.b * &other.c) - &(&self.c * &other.b)).div(&det).unwrap();
        let z2 = (&(&self.c * &other.a) - &(&self.a * &other.c)).div(&det).unwrap();
        Some((z1, z2))
    }

    /// Apply the shear (z1, z2) -> (z1 + lambda*z2, z2). In the new
    /// coordinates the line becomes a*w1 + (b - lambda*a)*w2 + c = 0.
    pub fn shear(&self, lambda: &GaussianRational) -> Self {
        AffineLine {
            a: self.a.clone(),
            b: &self.b - &(lambda * &self.a),
            c: self.c.clone(),
        }
    }
}

/// An ordered arrangement of pairwise distinct lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    lines: Vec<AffineLine>,
}

impl Arrangement {
    pub fn new(lines: Vec<AffineLine>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::Parse("arrangement needs at least one line".into()));
        }
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                if lines[i].same_line(&lines[j]) {
                    return Err(Error::Parse(format!(
                        "lines {} and {} coincide",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Arrangement { lines })
    }

    pub fn lines(&self) -> &[AffineLine] {
        &self.lines
    }

    pub fn size(&self) -> usize {
        self.lines.len()
    }

    pub fn shear(&self, lambda: &GaussianRational) -> Self {
        Arrangement {
            lines: self.lines.iter().map(|l| l.shear(lambda)).collect(),
        }
    }
}

/// A singular point with its sorted incident line set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPoint {
    pub coords: (GaussianRational, GaussianRational),
    /// 0-based indices of incident lines, sorted.
    pub incident: Vec<usize>,
}

impl SingularPoint {
    pub fn multiplicity(&self) -> usize {
        self.incident.len()
    }
}

/// Deterministic ordering key for exact complex points.
fn point_key(p: &(GaussianRational, GaussianRational)) -> impl Ord {
    (
        p.0.re.clone(),
        p.0.im.clone(),
        p.1.re.clone(),
        p.1.im.clone(),
    )
}

/// All points lying on at least two lines, each with its complete incident
/// set, in a deterministic coordinate order.
pub fn singular_points(arr: &Arrangement) -> Vec<SingularPoint> {
    let mut by_point: BTreeMap<_, SingularPoint> = BTreeMap::new();
    let lines = arr.lines();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if let Some(p) = lines[i].intersect(&lines[j]) {
                let entry = by_point
                    .entry(point_key(&p))
                    .or_insert_with(|| SingularPoint {
                        coords: p,
                        incident: vec![],
                    });
                for k in [i, j] {
                    if !entry.incident.contains(&k) {
                        entry.incident.push(k);
                    }
                }
            }
        }
    }
    let mut points: Vec<SingularPoint> = by_point.into_values().collect();
    for p in &mut points {
        p.incident.sort_unstable();
    }
    points
}

/// A line arrangement in C^2 is essential iff it has a singular point.
pub fn is_essential(arr: &Arrangement) -> bool {
    let lines = arr.lines();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if !lines[i].is_parallel(&lines[j]) {
                return true;
            }
        }
    }
    false
}

/// Incidence counts: s singular points with multiplicities d_k, per-line
/// counts s_i, and the Euler characteristic of the complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceSummary {
    pub s: usize,
    pub d: Vec<usize>,
    pub s_i: Vec<usize>,
    pub euler_chi: i64,
}

pub fn incidence_summary(arr: &Arrangement) -> Result<IncidenceSummary> {
    if !is_essential(arr) {
        return Err(Error::Precondition(
            "arrangement is not essential (no singular points)".into(),
        ));
    }
    let points = singular_points(arr);
    let m = arr.size();
    let d: Vec<usize> = points.iter().map(|p| p.multiplicity()).collect();
    let mut s_i = vec![0usize; m];
    for p in &points {
        for &i in &p.incident {
            s_i[i] += 1;
        }
    }
    let relation_count: i64 = d.iter().map(|&dk| dk as i64 - 1).sum();
    Ok(IncidenceSummary {
        s: points.len(),
        d,
        s_i,
        euler_chi: 1 - m as i64 + relation_count,
    })
}

/// Projective completion data: parallelism classes and the points at
/// infinity of the arrangement together with the line l_0 at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveCompletion {
    /// Partition of 0-based line indices by direction.
    pub direction_classes: Vec<Vec<usize>>,
    /// One point at infinity per class; multiplicity counts l_0.
    pub infinity_multiplicities: Vec<usize>,
    /// s-tilde for the affine lines (index i) = s_i + 1.
    pub s_tilde: Vec<usize>,
    /// s-tilde for l_0 = number of direction classes.
    pub s_tilde_infinity: usize,
}

pub fn projectivize(arr: &Arrangement) -> ProjectiveCompletion {
    let lines = arr.lines();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, l) in lines.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|c| lines[c[0]].is_parallel(l))
        {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    let infinity_multiplicities = classes.iter().map(|c| c.len() + 1).collect();
    let s_i = if is_essential(arr) {
        incidence_summary(arr).expect("essential").s_i
    } else {
        vec![0; lines.len()]
    };
    let s_tilde = s_i.iter().map(|&s| s + 1).collect();
    ProjectiveCompletion {
        s_tilde_infinity: classes.len(),
        direction_classes: classes,
        infinity_multiplicities,
        s_tilde,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational::rat;
    use crate::field::Rational;

    fn gr(s: &str) -> GaussianRational {
        GaussianRational::parse(s).unwrap()
    }

    /// The running example: z1 - z2 = 1, z1 - z2 = 0, z1 - i z2 = 0,
    /// z1 + 2 z2 = 0.
    pub fn example45() -> Arrangement {
        Arrangement::new(vec![
            AffineLine::new(gr("1"), gr("-1"), gr("-1")).unwrap(),
            AffineLine::new(gr("1"), gr("-1"), gr("0")).unwrap(),
            AffineLine::new(gr("1"), gr("-1*i"), gr("0")).unwrap(),
            AffineLine::new(gr("1"), gr("2"), gr("0")).unwrap(),
        ])
        .unwrap()
    }

    /// Zeros of (x+1)(x-1)(x+y)y(x-y).
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
    fn example45_singular_points() {
        let arr = example45();
        let pts = singular_points(&arr);
        assert_eq!(pts.len(), 3);
        // P1 = H2 n H3 n H4 = (0, 0)
        let p1 = pts
            .iter()
            .find(|p| p.coords.0.is_zero() && p.coords.1.is_zero())
            .unwrap();
        assert_eq!(p1.incident, vec![1, 2, 3]);
        // P2 = H1 n H3 = ((1-i)/2, -(1+i)/2)
        let p2 = pts
            .iter()
            .find(|p| p.coords.0 == gr("1/2-1/2*i"))
            .unwrap();
        assert_eq!(p2.incident, vec![0, 2]);
        assert_eq!(p2.coords.1, gr("-1/2-1/2*i"));
        // P3 = H1 n H4 = (2/3, -1/3)
        let p3 = pts
            .iter()
            .find(|p| p.coords.0 == GaussianRational::new(rat(2, 3), Rational::from_integer(0.into())))
            .unwrap();
        assert_eq!(p3.incident, vec![0, 3]);
        assert_eq!(p3.coords.1, GaussianRational::new(rat(-1, 3), rat(0, 1)));
    }

    #[test]
    fn parallel_lines_have_no_points() {
        let arr = Arrangement::new(vec![
            AffineLine::from_ints(0, 1, 0),
            AffineLine::from_ints(0, 1, -1),
        ])
        .unwrap();
        assert!(singular_points(&arr).is_empty());
        assert!(!is_essential(&arr));
        assert!(incidence_summary(&arr).is_err());
        let arr3 = Arrangement::new(vec![
            AffineLine::from_ints(0, 1, 0),
            AffineLine::from_ints(0, 1, -1),
            AffineLine::from_ints(0, 1, 2),
        ])
        .unwrap();
        assert!(!is_essential(&arr3));
    }

    #[test]
    fn falk_a1_points() {
        let pts = singular_points(&falk_a1());
        assert_eq!(pts.len(), 7);
        let triple: Vec<_> = pts.iter().filter(|p| p.multiplicity() == 3).collect();
        assert_eq!(triple.len(), 1);
        assert_eq!(triple[0].incident, vec![2, 3, 4]);
        assert!(triple[0].coords.0.is_zero() && triple[0].coords.1.is_zero());
        assert_eq!(pts.iter().filter(|p| p.multiplicity() == 2).count(), 6);
    }

    #[test]
    fn incidence_example45() {
        let inc = incidence_summary(&example45()).unwrap();
        assert_eq!(inc.s, 3);
        let mut d = inc.d.clone();
        d.sort_unstable();
        assert_eq!(d, vec![2, 2, 3]);
        assert_eq!(inc.s_i, vec![2, 1, 2, 2]);
        assert_eq!(inc.euler_chi, 1);
    }

    #[test]
    fn incidence_two_lines_and_falk() {
        let two = Arrangement::new(vec![
            AffineLine::from_ints(1, -1, 0),
            AffineLine::from_ints(1, 1, 0),
        ])
        .unwrap();
        let inc = incidence_summary(&two).unwrap();
        assert_eq!((inc.s, inc.d.clone(), inc.s_i.clone(), inc.euler_chi), (1, vec![2], vec![1, 1], 0));

        let inc = incidence_summary(&falk_a1()).unwrap();
        assert_eq!(inc.s, 7);
        assert_eq!(inc.s_i, vec![3, 3, 2, 2, 2]);
        assert_eq!(inc.euler_chi, 4);
        // sum s_i = sum d_k
        assert_eq!(
            inc.s_i.iter().sum::<usize>(),
            inc.d.iter().sum::<usize>()
        );
    }

    #[test]
    fn pair_counting_invariant() {
        // every unordered non-parallel pair appears in exactly one point
        for arr in [example45(), falk_a1()] {
            let pts = singular_points(&arr);
            let mut pair_count = 0usize;
            for p in &pts {
                pair_count += p.multiplicity() * (p.multiplicity() - 1) / 2;
            }
            let lines = arr.lines();
            let mut expected = 0usize;
            for i in 0..lines.len() {
                for j in i + 1..lines.len() {
                    if !lines[i].is_parallel(&lines[j]) {
                        expected += 1;
                    }
                }
            }
            assert_eq!(pair_count, expected);
        }
    }

    #[test]
    fn projectivize_falk_a1() {
        let proj = projectivize(&falk_a1());
        assert_eq!(proj.direction_classes.len(), 4);
        assert_eq!(proj.direction_classes[0], vec![0, 1]);
        assert_eq!(proj.s_tilde, vec![4, 4, 3, 3, 3]);
        assert_eq!(proj.s_tilde_infinity, 4);
        // s-tilde counts projective points on each line: for A1 every line
        // including l_0 lies on 4 projective singular points
        let affine_pts = singular_points(&falk_a1());
        let mut per_line = vec![0usize; 5];
        for p in &affine_pts {
            for &i in &p.incident {
                per_line[i] += 1;
            }
        }
        for i in 0..5 {
            assert_eq!(per_line[i] + 1, 4);
        }
    }

    #[test]
    fn projectivize_small_cases() {
        let two_parallel = Arrangement::new(vec![
            AffineLine::from_ints(0, 1, 0),
            AffineLine::from_ints(0, 1, -1),
        ])
        .unwrap();
        let proj = projectivize(&two_parallel);
        assert_eq!(proj.direction_classes, vec![vec![0, 1]]);
        assert_eq!(proj.infinity_multiplicities, vec![3]);

        let proj = projectivize(&example45());
        assert_eq!(proj.direction_classes, vec![vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn projective_pair_counting() {
        // every unordered pair of the m+1 projective lines lies in exactly
        // one projective singular point
        for arr in [example45(), falk_a1()] {
            let m = arr.size();
            let pts = singular_points(&arr);
            let proj = projectivize(&arr);
            let mut pairs = 0usize;
            for p in &pts {
                pairs += p.multiplicity() * (p.multiplicity() - 1) / 2;
            }
            for mult in &proj.infinity_multiplicities {
                pairs += mult * (mult - 1) / 2;
            }
            assert_eq!(pairs, (m + 1) * m / 2);
        }
    }

    #[test]
    fn shear_keeps_incidence() {
        let arr = falk_a1();
        let lambda = gr("1/2");
        let sheared = arr.shear(&lambda);
        let inc0 = incidence_summary(&arr).unwrap();
        let inc1 = incidence_summary(&sheared).unwrap();
        assert_eq!(inc0.s, inc1.s);
        assert_eq!(inc0.s_i, inc1.s_i);
        // shear with lambda=1/2 separates the x1 coordinates of the points
        let pts = singular_points(&sheared);
        let mut xs: Vec<_> = pts.iter().map(|p| p.coords.0.re.clone()).collect();
        xs.sort();
        xs.dedup();
        assert_eq!(xs.len(), pts.len());
    }

    #[test]
    fn line_equality_is_projective() {
        let l1 = AffineLine::from_ints(1, -1, 2);
        let l2 = AffineLine::from_ints(3, -3, 6);
        assert!(l1.same_line(&l2));
        assert!(Arrangement::new(vec![l1, l2]).is_err());
    }
}
