//! Coefficient-vector kernels: multiplication (schoolbook / Karatsuba) and
//! division with remainder.
//!
//! Prime fields take a monomorphised fast path on reduced `u32` residues;
//! proper extensions go through [`Field`] element operations.

use crate::algebra::field::Field;

/// Default operand length below which schoolbook multiplication is used.
pub const KARATSUBA_THRESHOLD: usize = 32;

trait Kernel {
    fn add(&self, a: u32, b: u32) -> u32;
    fn sub(&self, a: u32, b: u32) -> u32;
    fn schoolbook(&self, a: &[u32], b: &[u32]) -> Vec<u32>;
}

struct PrimeKernel {
    p: u64,
}

impl Kernel for PrimeKernel {
    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (if s >= self.p { s - self.p } else { s }) as u32
    }

    #[inline]
    fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p - b as u64) as u32
        }
    }

    fn schoolbook(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p;
        let terms = a.len().min(b.len()) as u128;
        let worst = terms * ((p - 1) as u128) * ((p - 1) as u128) + p as u128;
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        if worst < u64::MAX as u128 {
            let mut acc = vec![0u64; a.len() + b.len() - 1];
            for (j, &s) in short.iter().enumerate() {
                if s == 0 {
                    continue;
                }
                let s = s as u64;
                for (slot, &l) in acc[j..j + long.len()].iter_mut().zip(long) {
                    *slot += s * l as u64;
                }
            }
            acc.into_iter().map(|v| (v % p) as u32).collect()
        } else {
            let mut acc = vec![0u128; a.len() + b.len() - 1];
            for (j, &s) in short.iter().enumerate() {
                for (slot, &l) in acc[j..j + long.len()].iter_mut().zip(long) {
                    *slot += s as u128 * l as u128;
                }
            }
            acc.into_iter().map(|v| (v % p as u128) as u32).collect()
        }
    }
}

struct ExtKernel<'a> {
    field: &'a Field,
}

impl Kernel for ExtKernel<'_> {
    fn add(&self, a: u32, b: u32) -> u32 {
        self.field.add(a, b)
    }

    fn sub(&self, a: u32, b: u32) -> u32 {
        self.field.sub(a, b)
    }

    fn schoolbook(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        out
    }
}

/// Product of two coefficient vectors (ascending order, may carry trailing
/// zeros). Returns an empty vector if either input is empty.
pub fn mul_coeffs(field: &Field, a: &[u32], b: &[u32], threshold: usize) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let threshold = threshold.max(2);
    if field.is_prime_field() {
        mul_rec(&PrimeKernel { p: field.characteristic() as u64 }, a, b, threshold)
    } else {
        mul_rec(&ExtKernel { field }, a, b, threshold)
    }
}

fn mul_rec<K: Kernel>(k: &K, a: &[u32], b: &[u32], thr: usize) -> Vec<u32> {
    let (la, lb) = (a.len(), b.len());
    if la.min(lb) < thr {
        return k.schoolbook(a, b);
    }
    let (long, short) = if la >= lb { (a, b) } else { (b, a) };
    if long.len() >= 2 * short.len() {
        // unbalanced: slice the long operand into blocks of the short length
        let mut out = vec![0u32; la + lb - 1];
        for (blk, chunk) in long.chunks(short.len()).enumerate() {
            let prod = mul_rec(k, chunk, short, thr);
            let off = blk * short.len();
            for (i, v) in prod.into_iter().enumerate() {
                out[off + i] = k.add(out[off + i], v);
            }
        }
        return out;
    }
    let m = long.len() / 2;
    let (a0, a1) = split(a, m);
    let (b0, b1) = split(b, m);
    let z0 = mul_rec(k, a0, b0, thr);
    let z2 = if a1.is_empty() || b1.is_empty() {
        Vec::new()
    } else {
        mul_rec(k, a1, b1, thr)
    };
    let sa = add_vec(k, a0, a1);
    let sb = add_vec(k, b0, b1);
    let mut z1 = mul_rec(k, &sa, &sb, thr);
    for (i, &v) in z0.iter().enumerate() {
        z1[i] = k.sub(z1[i], v);
    }
    for (i, &v) in z2.iter().enumerate() {
        z1[i] = k.sub(z1[i], v);
    }
    let mut out = vec![0u32; la + lb - 1];
    for (i, v) in z0.into_iter().enumerate() {
        out[i] = v;
    }
    for (i, v) in z2.into_iter().enumerate() {
        out[i + 2 * m] = k.add(out[i + 2 * m], v);
    }
    for (i, v) in z1.into_iter().enumerate() {
        if i + m < out.len() {
            out[i + m] = k.add(out[i + m], v);
        } else {
            debug_assert_eq!(v, 0);
        }
    }
    out
}

fn split(a: &[u32], m: usize) -> (&[u32], &[u32]) {
    if a.len() <= m {
        (a, &[])
    } else {
        a.split_at(m)
    }
}

fn add_vec<K: Kernel>(k: &K, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            k.add(x, y)
        })
        .collect()
}

/// Division with remainder of normalized coefficient vectors; `b` must be
/// nonempty with a nonzero top coefficient. When `want_quotient` is false the
/// returned quotient is empty.
pub fn divmod_coeffs(field: &Field, a: &[u32], b: &[u32], want_quotient: bool) -> (Vec<u32>, Vec<u32>) {
    debug_assert!(b.last().is_some_and(|&c| c != 0));
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let inv_lc = field.inv(*b.last().unwrap()).expect("nonzero leading coefficient");
    let db = b.len() - 1;
    let qlen = a.len() - db;
    let mut quot = if want_quotient { vec![0u32; qlen] } else { Vec::new() };
    if field.is_prime_field() {
        let p = field.characteristic() as u64;
        let pm1 = (p - 1) as u128;
        // reduction period for the lazily reduced accumulator
        let budget = ((u64::MAX as u128 - p as u128) / (pm1 * pm1).max(1)).min(u64::MAX as u128) as u64;
        let bb: Vec<u64> = b[..db].iter().map(|&x| x as u64).collect();
        let mut r: Vec<u64> = a.iter().map(|&x| x as u64).collect();
        let mut steps = 0u64;
        for top in (db..a.len()).rev() {
            let c = ((r[top] % p) * inv_lc as u64) % p;
            r[top] = 0;
            if want_quotient {
                quot[top - db] = c as u32;
            }
            if c == 0 {
                continue;
            }
            let m = p - c;
            let base = top - db;
            for (slot, &y) in r[base..top].iter_mut().zip(&bb) {
                *slot += m * y;
            }
            steps += 1;
            if steps >= budget {
                for v in r[..top].iter_mut() {
                    *v %= p;
                }
                steps = 0;
            }
        }
        let rem = r[..db].iter().map(|&v| (v % p) as u32).collect();
        (quot, rem)
    } else {
        let mut r = a.to_vec();
        for top in (db..a.len()).rev() {
            let c = field.mul(r[top], inv_lc);
            r[top] = 0;
            if want_quotient {
                quot[top - db] = c;
            }
            if c == 0 {
                continue;
            }
            let base = top - db;
            for (i, &y) in b[..db].iter().enumerate() {
                r[base + i] = field.sub(r[base + i], field.mul(c, y));
            }
        }
        r.truncate(db);
        (quot, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn naive(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        out
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &p in &[2u32, 5, 101, 2_147_483_629] {
            let f = Field::prime(p).unwrap();
            for _ in 0..20 {
                let la = rng.gen_range(1..300);
                let lb = rng.gen_range(1..300);
                let a: Vec<u32> = (0..la).map(|_| rng.gen_range(0..p)).collect();
                let b: Vec<u32> = (0..lb).map(|_| rng.gen_range(0..p)).collect();
                assert_eq!(mul_coeffs(&f, &a, &b, 4), naive(&f, &a, &b));
                assert_eq!(mul_coeffs(&f, &a, &b, KARATSUBA_THRESHOLD), naive(&f, &a, &b));
            }
        }
    }

    #[test]
    fn karatsuba_extension_field() {
        let f = Field::extension(3, &[1, 2, 0, 1]).unwrap(); // z^3 + 2z + 1 over F_3
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let a: Vec<u32> = (0..70).map(|_| rng.gen_range(0..27)).collect();
            let b: Vec<u32> = (0..45).map(|_| rng.gen_range(0..27)).collect();
            assert_eq!(mul_coeffs(&f, &a, &b, 3), naive(&f, &a, &b));
        }
    }
}
