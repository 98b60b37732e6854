//! Dense linear algebra over a prime field `F_p`.

pub type Matrix = Vec<Vec<u32>>;

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u32
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce(m: &mut Matrix, cols: usize, p: u32) -> Vec<usize> {
    let pp = p as u64;
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(r) = (row..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(row, r);
        let inv = inv_mod(m[row][c], p) as u64;
        for x in m[row].iter_mut() {
            *x = (*x as u64 * inv % pp) as u32;
        }
        for r in 0..m.len() {
            if r != row && m[r][c] != 0 {
                let f = m[r][c] as u64;
                let pivot = m[row].clone();
                for (x, &y) in m[r].iter_mut().zip(&pivot).take(cols) {
                    *x = ((*x as u64 + pp * pp - f * y as u64) % pp) as u32;
                }
            }
        }
        pivots.push(c);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(m: &Matrix, cols: usize, p: u32) -> usize {
    let mut a = m.clone();
    row_reduce(&mut a, cols, p).len()
}

pub fn is_invertible(m: &Matrix, p: u32) -> bool {
    rank(m, m.len(), p) == m.len()
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace(a: &Matrix, cols: usize, p: u32) -> Vec<Vec<u32>> {
    let mut m = a.clone();
    let pivots = row_reduce(&mut m, cols, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u32; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[r][f] % p) % p;
            }
            v
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix, p: u32) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let pp = p as u64;
    (0..n)
        .map(|i| (0..m).map(|j| (a[i].iter().zip(b).map(|(&x, row)| x as u64 * row[j] as u64).sum::<u64>() % pp) as u32).collect())
        .collect()
}

/// `v M` for a row vector `v`.
pub fn vec_mul(v: &[u32], m: &Matrix, p: u32) -> Vec<u32> {
    let pp = p as u64;
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| (v.iter().zip(m).map(|(&x, row)| x as u64 * row[j] as u64).sum::<u64>() % pp) as u32).collect()
}
