//! Integer matrices: row echelon form with transforms, Smith invariants,
//! lattice membership. Matrices are row lists; arithmetic is in `i128`.

type Mat = Vec<Vec<i128>>;

fn widen(m: &[Vec<i64>], ncols: usize) -> Mat {
    m.iter()
        .map(|r| {
            let mut row: Vec<i128> = r.iter().map(|&x| x as i128).collect();
            row.resize(ncols, 0);
            row
        })
        .collect()
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("integer matrix entry overflowed i64")
}

/// Row echelon form `H = U·M` with `U` unimodular. Pivots are positive and
/// strictly move right; zero rows come last.
fn echelon(m: &Mat, ncols: usize) -> (Mat, Mat) {
    let k = m.len();
    let mut h = m.clone();
    let mut u: Mat = (0..k)
        .map(|i| (0..k).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut r = 0;
    for c in 0..ncols {
        if r == k {
            break;
        }
        loop {
            let Some(p) = (r..k).filter(|&i| h[i][c] != 0).min_by_key(|&i| h[i][c].abs()) else {
                break;
            };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in r + 1..k {
                if h[i][c] != 0 {
                    let q = h[i][c] / h[r][c];
                    for j in 0..ncols {
                        h[i][j] -= q * h[r][j];
                    }
                    for j in 0..k {
                        u[i][j] -= q * u[r][j];
                    }
                    done &= h[i][c] == 0;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c] != 0 {
            if h[r][c] < 0 {
                h[r].iter_mut().for_each(|x| *x = -*x);
                u[r].iter_mut().for_each(|x| *x = -*x);
            }
            r += 1;
        }
    }
    (h, u)
}

/// Nonzero Smith invariants `d₁ | d₂ | …` of a matrix with `ncols` columns.
pub fn smith_diagonal(m: &[Vec<i64>], ncols: usize) -> Vec<i64> {
    let mut a = widen(m, ncols);
    let rows = a.len();
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(ncols) {
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let p = a[t][t];
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t] / p;
            if q != 0 {
                for j in t..ncols {
                    a[i][j] -= q * a[t][j];
                }
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..ncols {
            let q = a[t][j] / p;
            if q != 0 {
                for row in a.iter_mut().skip(t) {
                    row[j] -= q * row[t];
                }
            }
            clean &= a[t][j] == 0;
        }
        if !clean {
            continue;
        }
        // enforce divisibility of the remaining block
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..ncols).any(|j| a[i][j] % p != 0)) {
            let (head, tail) = a.split_at_mut(i);
            for (x, y) in head[t].iter_mut().zip(&tail[0]) {
                *x += *y;
            }
            continue;
        }
        out.push(narrow(p.abs()));
        t += 1;
    }
    out
}

/// Index of the row lattice of `m` in `Z^ncols`; `None` if not of full rank.
pub fn lattice_index(m: &[Vec<i64>], ncols: usize) -> Option<i64> {
    let d = smith_diagonal(m, ncols);
    (d.len() == ncols).then(|| d.iter().product())
}

/// A basis of `{x : x·M = 0}`.
pub fn left_kernel(m: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let (h, u) = echelon(&widen(m, ncols), ncols);
    h.iter()
        .zip(&u)
        .filter(|(row, _)| row.iter().all(|&x| x == 0))
        .map(|(_, t)| t.iter().map(|&x| narrow(x)).collect())
        .collect()
}

/// The row lattice of a matrix, kept in echelon form for membership tests.
#[derive(Debug, Clone)]
pub struct Lattice {
    rows: Mat,
}

impl Lattice {
    pub fn new(m: &[Vec<i64>], ncols: usize) -> Self {
        let (h, _) = echelon(&widen(m, ncols), ncols);
        Lattice {
            rows: h.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for row in &self.rows {
            let p = row.iter().position(|&x| x != 0).unwrap();
            if v[p] % row[p] != 0 {
                return false;
            }
            let q = v[p] / row[p];
            for (x, y) in v.iter_mut().zip(row) {
                *x -= q * y;
            }
        }
        v.iter().all(|&x| x == 0)
    }
}
