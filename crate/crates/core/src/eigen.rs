//! Eigenvalues of dense real symmetric matrices.
//!
//! Householder reduction to tridiagonal form followed by the implicit-shift QL
//! iteration (the EISPACK `tred2`/`tql1` pair, eigenvalues only).

/// Maximum QL sweeps per eigenvalue before giving up.
const MAX_SWEEPS: usize = 60;

/// Reduces the symmetric `n x n` row-major matrix `a` to tridiagonal form.
/// Returns `(diagonal, subdiagonal)` where `subdiagonal[i]` couples `i - 1`
/// and `i` (`subdiagonal[0] = 0`). Only the lower triangle of `a` is read.
pub fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    debug_assert_eq!(a.len(), n * n);
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let at = |i: usize, j: usize| i * n + j;

    for i in (1..n).rev() {
        let l = i - 1;
        if l == 0 {
            e[i] = a[at(i, l)];
            continue;
        }
        let scale: f64 = (0..=l).map(|k| a[at(i, k)].abs()).sum();
        if scale == 0.0 {
            e[i] = a[at(i, l)];
            continue;
        }
        let mut h = 0.0;
        for k in 0..=l {
            a[at(i, k)] /= scale;
            h += a[at(i, k)] * a[at(i, k)];
        }
        let f = a[at(i, l)];
        let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
        e[i] = scale * g;
        h -= f * g;
        a[at(i, l)] = f - g;

        let mut f = 0.0;
        for j in 0..=l {
            let mut g = 0.0;
            for k in 0..=j {
                g += a[at(j, k)] * a[at(i, k)];
            }
            for k in j + 1..=l {
                g += a[at(k, j)] * a[at(i, k)];
            }
            e[j] = g / h;
            f += e[j] * a[at(i, j)];
        }
        let hh = f / (h + h);
        for j in 0..=l {
            let f = a[at(i, j)];
            let g = e[j] - hh * f;
            e[j] = g;
            for k in 0..=j {
                a[at(j, k)] -= f * e[k] + g * a[at(i, k)];
            }
        }
    }
    e[0] = 0.0;
    for (i, di) in d.iter_mut().enumerate() {
        *di = a[at(i, i)];
    }
    (d, e)
}

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
/// subdiagonal `e` (`e[i]` couples `i - 1` and `i`). Returns `None` if some
/// eigenvalue fails to converge. Result is unsorted.
pub fn tridiagonal_eigenvalues(mut d: Vec<f64>, mut e: Vec<f64>) -> Option<Vec<f64>> {
    let n = d.len();
    if n == 0 {
        return Some(d);
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return None;
            }

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            let signed_r = if g >= 0.0 { r } else { -r };
            g = d[m] - d[l] + e[l] / (g + signed_r);
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Some(d)
}

/// Eigenvalues of a symmetric row-major matrix, sorted descending.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Option<Vec<f64>> {
    let (d, e) = tridiagonalize(&mut a, n);
    let mut w = tridiagonal_eigenvalues(d, e)?;
    w.sort_by(|x, y| y.total_cmp(x));
    Some(w)
}
