//! Matrices over the Laurent polynomial ring: determinants, Smith normal
//! form, and torsion orders of finitely presented modules.

use crate::error::{Error, Result};
use crate::laurent::{gcd, normalize, CanonicalPoly, LaurentPoly};

/// Rectangular matrix with Laurent polynomial entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        PolyMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other[(k, j)].is_zero() {
                        continue;
                    }
                    let term = self[(i, k)].mul(&other[(k, j)]);
                    out[(i, j)] = out[(i, j)].add(&term);
                }
            }
        }
        Ok(out)
    }

    /// Place `block` with its top-left corner at (r0, c0).
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &PolyMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut m = self.data.clone();
        let at = |m: &Vec<LaurentPoly>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                let pivot = (k + 1..n).find(|&i| !at(&m, i, k).is_zero());
                match pivot {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = !sign;
                    }
                    None => return Ok(LaurentPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&m, k, k)
                        .mul(&at(&m, i, j))
                        .sub(&at(&m, i, k).mul(&at(&m, k, j)));
                    m[i * n + j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[i * n + k] = LaurentPoly::zero();
            }
            prev = at(&m, k, k);
        }
        let det = at(&m, n - 1, n - 1);
        Ok(if sign { det.neg() } else { det })
    }

    /// All k x k minors (unnormalized determinants).
    pub fn minors(&self, k: usize) -> Result<Vec<LaurentPoly>> {
        let row_sets = subsets(self.rows, k);
        let col_sets = subsets(self.cols, k);
        let mut out = Vec::new();
        for rs in &row_sets {
            for cs in &col_sets {
                let mut sub = PolyMatrix::zero(k, k);
                for (a, &i) in rs.iter().enumerate() {
                    for (b, &j) in cs.iter().enumerate() {
                        sub[(a, b)] = self[(i, j)].clone();
                    }
                }
                out.push(sub.determinant()?);
            }
        }
        Ok(out)
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.data[i * self.cols + j]
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Number of k-subsets, saturating; used to gate minor enumeration.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Result of a Smith normal form computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// Canonical invariant factors, one per nonzero diagonal entry, each
    /// dividing the next.
    pub invariant_factors: Vec<CanonicalPoly>,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
    /// Free rank of the cokernel (rows - rank for a column-acting map).
    pub coker_free_rank: usize,
}

impl SnfResult {
    /// Product of the nonunit invariant factors: the torsion order of the
    /// cokernel.
    pub fn torsion_order(&self) -> CanonicalPoly {
        self.invariant_factors
            .iter()
            .filter(|f| !f.is_one())
            .fold(CanonicalPoly::one(), |acc, f| acc.mul(f))
    }
}

struct SnfWorking {
    m: PolyMatrix,
    // column transforms: d = p * original * q, with q_inv * q = id
    q: Option<PolyMatrix>,
    q_inv: Option<PolyMatrix>,
}

impl SnfWorking {
    fn new(m: &PolyMatrix, track_cols: bool) -> Self {
        let q = track_cols.then(|| PolyMatrix::identity(m.cols()));
        let q_inv = track_cols.then(|| PolyMatrix::identity(m.cols()));
        let mut w = SnfWorking {
            m: m.clone(),
            q,
            q_inv,
        };
        // Clear negative valuations: multiplying a row by the unit t^k is an
        // invertible row operation; afterwards all entries live in F[t].
        for i in 0..w.m.rows() {
            let min_val = (0..w.m.cols())
                .filter(|&j| !w.m[(i, j)].is_zero())
                .map(|j| w.m[(i, j)].valuation())
                .min();
            if let Some(v) = min_val {
                if v != 0 {
                    for j in 0..w.m.cols() {
                        w.m[(i, j)] = w.m[(i, j)].shift(-v);
                    }
                }
            }
        }
        w
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.m.cols() {
            let t = self.m[(a, j)].clone();
            self.m[(a, j)] = self.m[(b, j)].clone();
            self.m[(b, j)] = t;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.m.rows() {
            let t = self.m[(i, a)].clone();
            self.m[(i, a)] = self.m[(i, b)].clone();
            self.m[(i, b)] = t;
        }
        if let Some(q) = &mut self.q {
            for i in 0..q.rows() {
                let t = q[(i, a)].clone();
                q[(i, a)] = q[(i, b)].clone();
                q[(i, b)] = t;
            }
        }
        if let Some(qi) = &mut self.q_inv {
            for j in 0..qi.cols() {
                let t = qi[(a, j)].clone();
                qi[(a, j)] = qi[(b, j)].clone();
                qi[(b, j)] = t;
            }
        }
    }

    /// row a -= f * row b
    fn row_sub(&mut self, a: usize, b: usize, f: &LaurentPoly) {
        for j in 0..self.m.cols() {
            let delta = f.mul(&self.m[(b, j)]);
            self.m[(a, j)] = self.m[(a, j)].sub(&delta);
        }
    }

    /// col a -= f * col b; updates q by the same op and q_inv inversely.
    fn col_sub(&mut self, a: usize, b: usize, f: &LaurentPoly) {
        for i in 0..self.m.rows() {
            let delta = f.mul(&self.m[(i, b)]);
            self.m[(i, a)] = self.m[(i, a)].sub(&delta);
        }
        if let Some(q) = &mut self.q {
            for i in 0..q.rows() {
                let delta = f.mul(&q[(i, b)]);
                q[(i, a)] = q[(i, a)].sub(&delta);
            }
        }
        if let Some(qi) = &mut self.q_inv {
            // inverse of (col a -= f col b) acts on rows: row b += f * row a
            for j in 0..qi.cols() {
                let delta = f.mul(&qi[(a, j)]);
                qi[(b, j)] = qi[(b, j)].add(&delta);
            }
        }
    }

    fn min_degree_entry(&self, p: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i64, usize, usize)> = None;
        for i in p..self.m.rows() {
            for j in p..self.m.cols() {
                if self.m[(i, j)].is_zero() {
                    continue;
                }
                let d = self.m[(i, j)].degree() - self.m[(i, j)].valuation();
                if best.map(|(bd, _, _)| d < bd).unwrap_or(true) {
                    best = Some((d, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn diagonalize(&mut self) -> usize {
        let mut p = 0;
        while p < self.m.rows().min(self.m.cols()) {
            let Some((pi, pj)) = self.min_degree_entry(p) else {
                break;
            };
            self.swap_rows(p, pi);
            self.swap_cols(p, pj);
            let mut dirty = true;
            while dirty {
                dirty = false;
                // clear column p by division
                for i in p + 1..self.m.rows() {
                    if self.m[(i, p)].is_zero() {
                        continue;
                    }
                    let (quo, rem) = self.m[(i, p)]
                        .shift(-self.m[(i, p)].valuation())
                        .divrem(&self.m[(p, p)].shift(-self.m[(p, p)].valuation()))
                        .expect("pivot nonzero");
                    let shift_q = quo.shift(
                        self.m[(i, p)].valuation() - self.m[(p, p)].valuation(),
                    );
                    self.row_sub(i, p, &shift_q);
                    if !rem.is_zero() {
                        // remainder has smaller degree: promote it to pivot
                        self.swap_rows(p, i);
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                for j in p + 1..self.m.cols() {
                    if self.m[(p, j)].is_zero() {
                        continue;
                    }
                    let (quo, rem) = self.m[(p, j)]
                        .shift(-self.m[(p, j)].valuation())
                        .divrem(&self.m[(p, p)].shift(-self.m[(p, p)].valuation()))
                        .expect("pivot nonzero");
                    let shift_q = quo.shift(
                        self.m[(p, j)].valuation() - self.m[(p, p)].valuation(),
                    );
                    self.col_sub(j, p, &shift_q);
                    if !rem.is_zero() {
                        self.swap_cols(p, j);
                        dirty = true;
                    }
                }
            }
            // enforce divisibility of the remaining block by the pivot
            let mut fixed = false;
            'scan: for i in p + 1..self.m.rows() {
                for j in p + 1..self.m.cols() {
                    if self.m[(i, j)].is_zero() {
                        continue;
                    }
                    if self.m[(i, j)].exact_div(&self.m[(p, p)]).is_err() {
                        // fold row i into row p and redo this pivot
                        let one = LaurentPoly::one().neg();
                        self.row_sub(p, i, &one);
                        fixed = true;
                        break 'scan;
                    }
                }
            }
            if fixed {
                continue;
            }
            p += 1;
        }
        p
    }
}

/// Smith normal form over F[t, t^-1]; factors are canonical and form a
/// divisibility chain.
pub fn smith_normal_form(m: &PolyMatrix) -> SnfResult {
    let mut w = SnfWorking::new(m, false);
    let rank = w.diagonalize();
    let invariant_factors = (0..rank)
        .map(|i| normalize(&w.m[(i, i)]).expect("nonzero diagonal"))
        .collect();
    SnfResult {
        invariant_factors,
        rank,
        coker_free_rank: m.rows() - rank,
    }
}

/// Rank over the fraction field.
pub fn rank(m: &PolyMatrix) -> usize {
    smith_normal_form(m).rank
}

/// Torsion oracle from the Fitting-ideal definition: the gcd of all r x r
/// minors where r is the rank (largest size with a nonzero minor). Used as
/// an independent cross-check of the Smith normal form path.
pub fn torsion_order_by_minors(m: &PolyMatrix) -> Result<(CanonicalPoly, usize)> {
    let max_k = m.rows().min(m.cols());
    let mut result = (CanonicalPoly::one(), 0usize);
    for k in (1..=max_k).rev() {
        let minors = m.minors(k)?;
        let nonzero: Vec<&LaurentPoly> = minors.iter().filter(|p| !p.is_zero()).collect();
        if nonzero.is_empty() {
            continue;
        }
        let mut g = normalize(nonzero[0])?;
        for p in &nonzero[1..] {
            if g.is_one() {
                break;
            }
            g = gcd(g.as_poly(), p)?;
        }
        result = (g, k);
        break;
    }
    Ok(result)
}

/// Homology torsion order and free rank for a two-step complex, given in the
/// row-vector convention: `d_in` is (a x mid), `d_out` is (mid x b), and the
/// homology is ker(x -> x*d_out) / im(d_in) inside R^mid.
pub fn homology_torsion_order(
    d_in: &PolyMatrix,
    d_out: &PolyMatrix,
) -> Result<(CanonicalPoly, usize)> {
    if d_in.cols() != d_out.rows() {
        return Err(Error::Shape(format!(
            "chain maps are not composable: {}x{} then {}x{}",
            d_in.rows(),
            d_in.cols(),
            d_out.rows(),
            d_out.cols()
        )));
    }
    if !d_in.mul(d_out)?.is_zero() {
        return Err(Error::Precondition(
            "d_out o d_in is nonzero; not a chain complex".into(),
        ));
    }
    let mid = d_out.rows();
    // Left kernel of d_out = right kernel of its transpose. Column ops of
    // the SNF give an exact R-basis of the kernel: the last mid - rank
    // columns of Q, with Q^-1 giving coordinates.
    let mut w = SnfWorking::new(&d_out.transpose(), true);
    let r = w.diagonalize();
    let q_inv = w.q_inv.take().expect("tracked");
    let kernel_rank = mid - r;
    // Coordinates of the rows of d_in in the kernel basis: for row v of
    // d_in; y = Q^-1 v^T, entries 0..r must vanish (composition is zero).
    let coords = q_inv.mul(&d_in.transpose())?;
    for i in 0..r {
        for j in 0..coords.cols() {
            debug_assert!(coords[(i, j)].is_zero(), "image not inside kernel");
        }
    }
    let mut rel = PolyMatrix::zero(kernel_rank, coords.cols());
    for i in 0..kernel_rank {
        for j in 0..coords.cols() {
            rel[(i, j)] = coords[(r + i, j)].clone();
        }
    }
    let snf = smith_normal_form(&rel);
    Ok((snf.torsion_order(), kernel_rank - snf.rank))
}
