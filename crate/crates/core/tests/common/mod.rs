//! Brute-force oracle, independent of the engine: its own GF(p) elimination,
//! its own monomial algebras and modules given by variable actions only.

#![allow(dead_code, clippy::needless_range_loop)]

pub type M = Vec<Vec<u64>>;

pub fn zeros(r: usize, c: usize) -> M {
    vec![vec![0; c]; r]
}

pub fn ident(n: usize) -> M {
    let mut a = zeros(n, n);
    for i in 0..n {
        a[i][i] = 1;
    }
    a
}

fn inv(a: u64, p: u64) -> u64 {
    let mut r = 1;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn mul(a: &M, b: &M, p: u64, inner: usize) -> M {
    let rows = a.len();
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    let mut out = zeros(rows, cols);
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k] != 0 {
                for j in 0..cols {
                    out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % p;
                }
            }
        }
    }
    out
}

/// Row-reduces in place; returns pivot columns.
pub fn rref(a: &mut M, p: u64) -> Vec<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..cols {
        let Some(s) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, s);
        let iv = inv(a[r][c], p);
        for j in 0..cols {
            a[r][j] = a[r][j] * iv % p;
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p * p - f * a[r][j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank_of_columns(cols: &[Vec<u64>], p: u64) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let mut a: M = cols.to_vec();
    rref(&mut a, p).len()
}

/// Basis of the null space of `a` (rows × cols), as vectors of length cols.
pub fn kernel(a: &M, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut r = a.clone();
    let piv = if r.is_empty() {
        vec![]
    } else {
        rref(&mut r, p)
    };
    let mut out = vec![];
    for f in (0..cols).filter(|c| !piv.contains(c)) {
        let mut v = vec![0; cols];
        v[f] = 1;
        for (i, &pc) in piv.iter().enumerate() {
            v[pc] = (p - r[i][f]) % p;
        }
        out.push(v);
    }
    out
}

/// A commutative local monomial algebra: basis monomials (exponent vectors)
/// and multiplication by each variable.
pub struct Ring {
    pub p: u64,
    pub nvars: usize,
    pub basis: Vec<Vec<u32>>,
    pub var_mult: Vec<M>,
}

pub fn monomial_ring(p: u64, nvars: usize, relations: &[Vec<u32>]) -> Ring {
    let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    let mut basis = vec![vec![0u32; nvars]];
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut next = vec![];
        for m in &frontier {
            for v in 0..nvars {
                let mut e = m.clone();
                e[v] += 1;
                if !relations.iter().any(|r| divides(r, &e))
                    && !basis.contains(&e)
                    && !next.contains(&e)
                {
                    next.push(e);
                }
            }
        }
        basis.extend(next.iter().cloned());
        frontier = next;
    }
    let d = basis.len();
    let var_mult = (0..nvars)
        .map(|v| {
            let mut a = zeros(d, d);
            for (j, m) in basis.iter().enumerate() {
                let mut e = m.clone();
                e[v] += 1;
                if let Some(i) = basis.iter().position(|b| *b == e) {
                    a[i][j] = 1;
                }
            }
            a
        })
        .collect();
    Ring {
        p,
        nvars,
        basis,
        var_mult,
    }
}

pub fn r1() -> Ring {
    monomial_ring(2, 2, &[vec![2, 0], vec![1, 1], vec![0, 2]])
}

pub fn r2() -> Ring {
    monomial_ring(3, 1, &[vec![3]])
}

pub fn r3() -> Ring {
    monomial_ring(2, 2, &[vec![2, 0], vec![0, 2]])
}

pub fn r4() -> Ring {
    let mut rel = vec![];
    for a in 0..3 {
        for b in a..3 {
            let mut e = vec![0u32; 3];
            e[a] += 1;
            e[b] += 1;
            rel.push(e);
        }
    }
    monomial_ring(5, 3, &rel)
}

/// A module by the actions of the variables.
#[derive(Clone)]
pub struct Mod {
    pub n: usize,
    pub act: Vec<M>,
}

impl Ring {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn regular(&self) -> Mod {
        Mod {
            n: self.dim(),
            act: self.var_mult.clone(),
        }
    }

    pub fn residue(&self) -> Mod {
        Mod {
            n: 1,
            act: vec![zeros(1, 1); self.nvars],
        }
    }

    pub fn dual(&self, m: &Mod) -> Mod {
        Mod {
            n: m.n,
            act: m.act.iter().map(|a| transpose(a, m.n, m.n)).collect(),
        }
    }

    pub fn sum(&self, a: &Mod, b: &Mod) -> Mod {
        let n = a.n + b.n;
        let act = (0..self.nvars)
            .map(|v| {
                let mut x = zeros(n, n);
                for i in 0..a.n {
                    for j in 0..a.n {
                        x[i][j] = a.act[v][i][j];
                    }
                }
                for i in 0..b.n {
                    for j in 0..b.n {
                        x[a.n + i][a.n + j] = b.act[v][i][j];
                    }
                }
                x
            })
            .collect();
        Mod { n, act }
    }

    /// Hom(A, B) as a module: matrices f (b × a) with f·A_v = B_v·f.
    pub fn hom(&self, a: &Mod, b: &Mod) -> Mod {
        let p = self.p;
        let unknowns = a.n * b.n;
        let mut eqs: M = vec![];
        for v in 0..self.nvars {
            for r in 0..b.n {
                for c in 0..a.n {
                    let mut row = vec![0u64; unknowns];
                    for k in 0..a.n {
                        let x = a.act[v][k][c];
                        row[r * a.n + k] = (row[r * a.n + k] + x) % p;
                    }
                    for k in 0..b.n {
                        let x = b.act[v][r][k];
                        row[k * a.n + c] = (row[k * a.n + c] + p - x) % p;
                    }
                    eqs.push(row);
                }
            }
        }
        let basis = kernel(&eqs, unknowns, p);
        self.restrict(&basis, unknowns, |v, f| {
            // (x f)[r][c] = Σ_k B_v[r][k] f[k][c]
            let mut out = vec![0; unknowns];
            for r in 0..b.n {
                for c in 0..a.n {
                    let mut s = 0;
                    for k in 0..b.n {
                        s += b.act[v][r][k] * f[k * a.n + c];
                    }
                    out[r * a.n + c] = s % p;
                }
            }
            out
        })
    }

    /// A ⊗ B as a module: the quotient of A ⊗_k B by (x⊗1 − 1⊗x) images.
    pub fn tensor(&self, a: &Mod, b: &Mod) -> Mod {
        let p = self.p;
        let n = a.n * b.n;
        let xa = |v: usize, w: &[u64]| {
            let mut out = vec![0; n];
            for i in 0..a.n {
                for j in 0..b.n {
                    for k in 0..a.n {
                        out[k * b.n + j] = (out[k * b.n + j] + a.act[v][k][i] * w[i * b.n + j]) % p;
                    }
                }
            }
            out
        };
        let xb = |v: usize, w: &[u64]| {
            let mut out = vec![0; n];
            for i in 0..a.n {
                for j in 0..b.n {
                    for k in 0..b.n {
                        out[i * b.n + k] = (out[i * b.n + k] + b.act[v][k][j] * w[i * b.n + j]) % p;
                    }
                }
            }
            out
        };
        let mut rel = vec![];
        for v in 0..self.nvars {
            for e in 0..n {
                let mut w = vec![0; n];
                w[e] = 1;
                let l = xa(v, &w);
                let r = xb(v, &w);
                rel.push(
                    l.iter()
                        .zip(&r)
                        .map(|(x, y)| (x + p - y) % p)
                        .collect::<Vec<_>>(),
                );
            }
        }
        self.quotient(n, &rel, |v, w| xa(v, w))
    }

    /// The submodule spanned by `basis` (vectors in an ambient of length
    /// `amb`), with the ambient action given by `apply`.
    pub fn restrict(
        &self,
        basis: &[Vec<u64>],
        amb: usize,
        apply: impl Fn(usize, &[u64]) -> Vec<u64>,
    ) -> Mod {
        let p = self.p;
        let k = basis.len();
        let act = (0..self.nvars)
            .map(|v| {
                let mut y = zeros(k, k);
                for (j, b) in basis.iter().enumerate() {
                    let img = apply(v, b);
                    let c = coords(basis, &img, amb, p).expect("submodule is closed");
                    for i in 0..k {
                        y[i][j] = c[i];
                    }
                }
                y
            })
            .collect();
        Mod { n: k, act }
    }

    /// Quotient of an ambient of length `amb` by the span of `rel`.
    pub fn quotient(
        &self,
        amb: usize,
        rel: &[Vec<u64>],
        apply: impl Fn(usize, &[u64]) -> Vec<u64>,
    ) -> Mod {
        let p = self.p;
        let mut r: M = rel.to_vec();
        let piv = if r.is_empty() {
            vec![]
        } else {
            rref(&mut r, p)
        };
        let r: M = r.into_iter().take(piv.len()).collect();
        let free: Vec<usize> = (0..amb).filter(|c| !piv.contains(c)).collect();
        let reduce = |w: &[u64]| {
            let mut w = w.to_vec();
            for (i, &pc) in piv.iter().enumerate() {
                let f = w[pc];
                if f != 0 {
                    for j in 0..amb {
                        w[j] = (w[j] + p * p - f * r[i][j]) % p;
                    }
                }
            }
            free.iter().map(|&c| w[c]).collect::<Vec<u64>>()
        };
        let k = free.len();
        let act = (0..self.nvars)
            .map(|v| {
                let mut y = zeros(k, k);
                for (j, &c) in free.iter().enumerate() {
                    let mut e = vec![0; amb];
                    e[c] = 1;
                    let img = reduce(&apply(v, &e));
                    for i in 0..k {
                        y[i][j] = img[i];
                    }
                }
                y
            })
            .collect();
        Mod { n: k, act }
    }

    /// The action of a basis monomial on M.
    pub fn monomial_action(&self, m: &Mod, mono: &[u32]) -> M {
        let mut a = ident(m.n);
        for (v, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                a = mul(&m.act[v], &a, self.p, m.n);
            }
        }
        a
    }

    /// Columns spanning m·M.
    pub fn radical_span(&self, m: &Mod) -> Vec<Vec<u64>> {
        let mut out = vec![];
        for v in 0..self.nvars {
            for j in 0..m.n {
                out.push((0..m.n).map(|i| m.act[v][i][j]).collect());
            }
        }
        out
    }

    pub fn num_generators(&self, m: &Mod) -> usize {
        m.n - rank_of_columns(&self.radical_span(m), self.p)
    }

    pub fn socle_dim(&self, m: &Mod) -> usize {
        let mut eqs: M = vec![];
        for v in 0..self.nvars {
            eqs.extend(m.act[v].iter().cloned());
        }
        kernel(&eqs, m.n, self.p).len()
    }

    /// Betti numbers β_0..=β_top by iterated minimal covers and kernels.
    pub fn betti(&self, m: &Mod, top: usize) -> Vec<usize> {
        let p = self.p;
        let d = self.dim();
        let mut out = vec![];
        let mut cur = m.clone();
        for _ in 0..=top {
            if cur.n == 0 {
                out.push(0);
                continue;
            }
            // generators: standard vectors completing a basis of m·cur
            let mut span = self.radical_span(&cur);
            let mut rank = rank_of_columns(&span, p);
            let mut gens = vec![];
            for e in 0..cur.n {
                let mut v = vec![0; cur.n];
                v[e] = 1;
                span.push(v.clone());
                let r = rank_of_columns(&span, p);
                if r > rank {
                    rank = r;
                    gens.push(v);
                } else {
                    span.pop();
                }
            }
            let b = gens.len();
            out.push(b);
            // cover matrix: column (j, monomial) = monomial · g_j
            let mut cover = zeros(cur.n, b * d);
            for (j, g) in gens.iter().enumerate() {
                for (t, mono) in self.basis.iter().enumerate() {
                    let a = self.monomial_action(&cur, mono);
                    for i in 0..cur.n {
                        let mut s = 0;
                        for k in 0..cur.n {
                            s += a[i][k] * g[k];
                        }
                        cover[i][j * d + t] = s % p;
                    }
                }
            }
            let ker = kernel(&cover, b * d, p);
            let vm = &self.var_mult;
            cur = self.restrict(&ker, b * d, |v, w| {
                let mut o = vec![0; b * d];
                for j in 0..b {
                    for i in 0..d {
                        let mut s = 0;
                        for k in 0..d {
                            s += vm[v][i][k] * w[j * d + k];
                        }
                        o[j * d + i] = s % p;
                    }
                }
                o
            });
        }
        out
    }
}

pub fn transpose(a: &M, rows: usize, cols: usize) -> M {
    let mut t = zeros(cols, rows);
    for i in 0..rows {
        for j in 0..cols {
            t[j][i] = a[i][j];
        }
    }
    t
}

/// Coordinates of `w` in the independent vectors `basis`.
pub fn coords(basis: &[Vec<u64>], w: &[u64], amb: usize, p: u64) -> Option<Vec<u64>> {
    let k = basis.len();
    let mut a = zeros(amb, k + 1);
    for i in 0..amb {
        for j in 0..k {
            a[i][j] = basis[j][i];
        }
        a[i][k] = w[i] % p;
    }
    let piv = rref(&mut a, p);
    if piv.contains(&k) {
        return None;
    }
    let mut x = vec![0; k];
    for (i, &pc) in piv.iter().enumerate() {
        x[pc] = a[i][k];
    }
    Some(x)
}
