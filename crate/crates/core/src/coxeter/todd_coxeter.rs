//! Coset enumeration for the trivial subgroup of a Coxeter presentation.
//!
//! Generators are involutions, so one table column per generator serves for
//! both `s` and `s^-1`. Strategy is HLT with coincidence processing.

const NONE: u32 = u32::MAX;

pub(crate) struct CosetTable {
    rank: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    limit: usize,
}

impl CosetTable {
    fn new(rank: usize, limit: usize) -> Self {
        Self {
            rank,
            table: vec![NONE; rank],
            parent: vec![0],
            limit,
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    fn get(&self, c: u32, s: usize) -> u32 {
        self.table[c as usize * self.rank + s]
    }

    fn set(&mut self, c: u32, s: usize, d: u32) {
        self.table[c as usize * self.rank + s] = d;
    }

    fn live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != r {
            let next = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = next;
        }
        r
    }

    fn define(&mut self, c: u32, s: usize) -> Option<u32> {
        if self.len() >= self.limit {
            return None;
        }
        let d = self.len() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.rank));
        self.set(c, s, d);
        self.set(d, s, c);
        Some(d)
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let g = queue[i];
            i += 1;
            for s in 0..self.rank {
                let d = self.get(g, s);
                if d == NONE {
                    continue;
                }
                if self.get(d, s) == g {
                    self.set(d, s, NONE);
                }
                let (mu, nu) = (self.rep(g), self.rep(d));
                let mu_s = self.get(mu, s);
                if mu_s != NONE {
                    self.merge(nu, mu_s, &mut queue);
                } else {
                    let nu_s = self.get(nu, s);
                    if nu_s != NONE {
                        self.merge(mu, nu_s, &mut queue);
                    } else {
                        self.set(mu, s, nu);
                        self.set(nu, s, mu);
                    }
                }
            }
        }
    }

    /// Scans `rel` from coset `c`, defining cosets as needed.
    fn scan_and_fill(&mut self, c: u32, rel: &[usize]) -> bool {
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = rel.len() as isize - 1;
        loop {
            while (i as isize) <= j && self.get(f, rel[i]) != NONE {
                f = self.get(f, rel[i]);
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j >= i as isize && self.get(b, rel[j as usize]) != NONE {
                b = self.get(b, rel[j as usize]);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return true;
            }
            if j == i as isize {
                self.set(f, rel[i], b);
                self.set(b, rel[i], f);
                return true;
            }
            if self.define(f, rel[i]).is_none() {
                return false;
            }
        }
    }
}

/// Right regular action of the group: `result[w][s]` is the index of `w s`,
/// with cosets renumbered densely. `None` if more than `limit` cosets were needed.
pub(crate) fn enumerate(matrix: &[Vec<u32>], limit: usize) -> Option<Vec<Vec<u32>>> {
    let rank = matrix.len();
    let mut relators: Vec<Vec<usize>> = Vec::new();
    for (s, row) in matrix.iter().enumerate() {
        for (t, &m) in row.iter().enumerate().skip(s + 1) {
            let m = m as usize;
            relators.push((0..2 * m).map(|k| if k % 2 == 0 { s } else { t }).collect());
        }
    }
    let mut ct = CosetTable::new(rank, limit);
    let mut c = 0u32;
    while (c as usize) < ct.len() {
        if ct.live(c) {
            for rel in &relators {
                if !ct.scan_and_fill(c, rel) {
                    return None;
                }
                if !ct.live(c) {
                    break;
                }
            }
            if ct.live(c) {
                for s in 0..rank {
                    if ct.get(c, s) == NONE && ct.define(c, s).is_none() {
                        return None;
                    }
                }
            }
        }
        c += 1;
    }
    let mut renumber = vec![NONE; ct.len()];
    let mut next = 0u32;
    for x in 0..ct.len() as u32 {
        if ct.live(x) {
            renumber[x as usize] = next;
            next += 1;
        }
    }
    let mut out = Vec::with_capacity(next as usize);
    for x in 0..ct.len() as u32 {
        if ct.live(x) {
            let row: Vec<u32> = (0..rank)
                .map(|s| {
                    let y = ct.get(x, s);
                    renumber[ct.rep(y) as usize]
                })
                .collect();
            out.push(row);
        }
    }
    Some(out)
}
