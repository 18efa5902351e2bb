//! Reference computations that share no code with the library's complexes.

#![allow(dead_code)]

/// Multiplication table of the symmetric group on three letters, built from
/// permutations of `{0, 1, 2}` directly.
pub fn s3_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    perms
        .iter()
        .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
        .collect()
}

/// Rank of an integer matrix over `F_p` by forward elimination.
pub fn rank_mod_p(rows: usize, cols: usize, entries: &[(usize, usize, i64)], p: i64) -> usize {
    let p = p as u32;
    let mut m = vec![vec![0u32; cols]; rows];
    for &(r, c, v) in entries {
        m[r][c] = (m[r][c] + v.rem_euclid(p as i64) as u32) % p;
    }
    let inv = |a: u32| (1..p).find(|&x| a * x % p == 1).unwrap();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, pivot);
        let f = inv(m[rank][col]);
        let (done, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &mut done[rank];
        for x in pivot_row[col..].iter_mut() {
            *x = *x * f % p;
        }
        for row in rest.iter_mut() {
            let k = row[col];
            if k != 0 {
                for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = (*x + (p - k) * y) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// `∂_k` of the normalized bar complex tensored down to the trivial module:
/// basis of degree `k` is all `k`-tuples of non-identity elements, and
/// `∂[g_1|…|g_k] = [g_2|…|g_k] + Σ (-1)^i [… |g_i g_{i+1}| …] + (-1)^k [g_1|…|g_{k-1}]`
/// with tuples containing the identity dropped.
pub fn bar_boundary(table: &[Vec<usize>], k: usize) -> (usize, usize, Vec<(usize, usize, i64)>) {
    let n = table.len() - 1;
    let encode = |t: &[usize]| t.iter().fold(0usize, |acc, &g| acc * n + (g - 1));
    let cols = n.pow(k as u32);
    let rows = n.pow(k as u32 - 1);
    let mut entries = Vec::new();
    for c in 0..cols {
        let mut t = vec![0usize; k];
        let mut x = c;
        for slot in t.iter_mut().rev() {
            *slot = x % n + 1;
            x /= n;
        }
        entries.push((encode(&t[1..]), c, 1));
        for i in 0..k - 1 {
            let g = table[t[i]][t[i + 1]];
            if g != 0 {
                let mut f = t[..i].to_vec();
                f.push(g);
                f.extend_from_slice(&t[i + 2..]);
                entries.push((encode(&f), c, if (i + 1) % 2 == 0 { 1 } else { -1 }));
            }
        }
        entries.push((encode(&t[..k - 1]), c, if k % 2 == 0 { 1 } else { -1 }));
    }
    (rows, cols, entries)
}

/// `H_0 … H_{top}` of a finite group whose order has prime factors in
/// `primes`, written like the library's integral homology (`Z`, `Z/6`,
/// `Z/2 ⊕ Z/6`, `0`). Torsion in positive degrees is killed by the group
/// order, so mod-p ranks of the bar boundaries determine it once the order
/// is squarefree.
pub fn bar_homology(table: &[Vec<usize>], primes: &[i64], top: usize) -> Vec<String> {
    let generic = 101;
    let rank = |k: usize, p: i64| -> usize {
        if k == 0 {
            return 0;
        }
        let (r, c, e) = bar_boundary(table, k);
        rank_mod_p(r, c, &e, p)
    };
    let mut ranks_q = Vec::new();
    let mut ranks_p: Vec<Vec<usize>> = Vec::new();
    for k in 0..=top + 1 {
        ranks_q.push(rank(k, generic));
        ranks_p.push(primes.iter().map(|&p| rank(k, p)).collect());
    }
    let n = table.len() - 1;
    (0..=top)
        .map(|k| {
            let dim = if k == 0 { 1 } else { n.pow(k as u32) };
            let free = dim - ranks_q[k] - ranks_q[k + 1];
            // p-torsion summands of H_k come from ∂_{k+1} losing rank mod p
            let counts: Vec<usize> = (0..primes.len()).map(|i| ranks_q[k + 1] - ranks_p[k + 1][i]).collect();
            let summands = counts.iter().copied().max().unwrap_or(0);
            let mut factors: Vec<i64> = (0..summands)
                .map(|j| {
                    primes
                        .iter()
                        .zip(&counts)
                        .filter(|&(_, &c)| j + c >= summands)
                        .map(|(&p, _)| p)
                        .product()
                })
                .collect();
            factors.sort_unstable();
            let mut parts = Vec::new();
            match free {
                0 => {}
                1 => parts.push("Z".to_string()),
                r => parts.push(format!("Z^{r}")),
            }
            parts.extend(factors.iter().map(|d| format!("Z/{d}")));
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" ⊕ ")
            }
        })
        .collect()
}

/// `H_k(Z/2 * Z/2; Z)` from Mayer–Vietoris: the reduced homology of a free
/// product is the sum of the factors' reduced homology.
pub fn infinite_dihedral_homology(top: usize) -> Vec<String> {
    (0..=top)
        .map(|k| match k {
            0 => "Z".to_string(),
            k if k % 2 == 1 => "Z/2 ⊕ Z/2".to_string(),
            _ => "0".to_string(),
        })
        .collect()
}

/// `H_k(Z/2; Z)` from the periodic resolution.
pub fn cyclic_two_homology(top: usize) -> Vec<String> {
    (0..=top)
        .map(|k| match k {
            0 => "Z".to_string(),
            k if k % 2 == 1 => "Z/2".to_string(),
            _ => "0".to_string(),
        })
        .collect()
}
