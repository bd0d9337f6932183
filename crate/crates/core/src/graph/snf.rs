//! Smith normal form of small integer matrices.

/// Nonzero elementary divisors `d_1 | d_2 | ... | d_r` of an integer matrix
/// given as rows; `r` is its rank. Rows may have any common length.
pub fn elementary_divisors(rows: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut divisors = Vec::new();

    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_nonzero(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                let q = a[i][t].div_euclid(a[t][t]);
                if q != 0 {
                    sub_row(&mut a, i, t, q);
                }
                if a[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                let q = a[t][j].div_euclid(a[t][t]);
                if q != 0 {
                    sub_col(&mut a, j, t, q);
                }
                if a[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // Pivot must divide the whole trailing block.
                let bad = (t + 1..m)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % a[t][t] != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        let row = a[i].clone();
                        for (x, y) in a[t].iter_mut().zip(row).skip(t) {
                            *x += y;
                        }
                        continue;
                    }
                }
            }
            // A smaller remainder appeared in row or column t; move it to the pivot.
            let (pi, pj) = smallest_in_cross(&a, t);
            a.swap(t, pi);
            swap_cols(&mut a, t, pj);
        }
        divisors.push(a[t][t].unsigned_abs() as i64);
    }
    divisors
}

fn smallest_nonzero(a: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &x) in row.iter().enumerate().skip(t) {
            if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(a: &[Vec<i128>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    for i in t..a.len() {
        let x = a[i][t];
        if x != 0 && (a[best.0][best.1] == 0 || x.abs() < a[best.0][best.1].abs()) {
            best = (i, t);
        }
    }
    for j in t..a[t].len() {
        let x = a[t][j];
        if x != 0 && (a[best.0][best.1] == 0 || x.abs() < a[best.0][best.1].abs()) {
            best = (t, j);
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<i128>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

fn sub_row(a: &mut [Vec<i128>], target: usize, source: usize, q: i128) {
    for j in 0..a[target].len() {
        let s = a[source][j];
        a[target][j] -= q * s;
    }
}

fn sub_col(a: &mut [Vec<i128>], target: usize, source: usize, q: i128) {
    for row in a.iter_mut() {
        row[target] -= q * row[source];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_forms() {
        assert_eq!(elementary_divisors(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(elementary_divisors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(elementary_divisors(&[vec![2, 4], vec![4, 8]]), vec![2]);
        assert_eq!(elementary_divisors(&[vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(elementary_divisors(&[]), Vec::<i64>::new());
        assert_eq!(
            elementary_divisors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            vec![2, 6, 12]
        );
    }

    fn det2(a: &[Vec<i64>]) -> i64 {
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
    }

    proptest! {
        #[test]
        fn product_matches_determinant(a in -20i64..20, b in -20i64..20, c in -20i64..20, d in -20i64..20) {
            let m = vec![vec![a, b], vec![c, d]];
            let divs = elementary_divisors(&m);
            let det = det2(&m);
            if det != 0 {
                prop_assert_eq!(divs.len(), 2);
                prop_assert_eq!(divs[0] * divs[1], det.abs());
                prop_assert_eq!(divs[1] % divs[0], 0);
            } else {
                prop_assert!(divs.len() < 2);
            }
        }
    }
}
