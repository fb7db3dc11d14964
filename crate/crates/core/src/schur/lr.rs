//! Littlewood–Richardson coefficients by enumeration of LR skew tableaux.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::partitions::Partition;

/// The coefficient `c^λ_{μ,ν}` of `s_λ` in `s_μ · s_ν`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LrQuery {
    pub outer: Partition,
    pub inner: Partition,
    pub content: Partition,
}

impl LrQuery {
    pub fn new(outer: Partition, inner: Partition, content: Partition) -> Self {
        LrQuery { outer, inner, content }
    }

    pub fn coefficient(&self) -> u64 {
        lr_coefficient(self)
    }
}

type Cache = RwLock<HashMap<LrQuery, u64>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Number of semistandard fillings of `λ/μ` with content `ν` whose reverse
/// reading word (rows top to bottom, each read right to left) is a lattice
/// word. Results are memoized process-wide.
pub fn lr_coefficient(q: &LrQuery) -> u64 {
    if q.inner.weight() + q.content.weight() != q.outer.weight()
        || !q.outer.contains(&q.inner)
        || !q.outer.contains(&q.content)
    {
        return 0;
    }
    if let Some(&c) = cache().read().expect("LR cache poisoned").get(q) {
        return c;
    }
    let c = count_tableaux(q);
    cache()
        .write()
        .expect("LR cache poisoned")
        .insert(q.clone(), c);
    c
}

struct Filler<'a> {
    outer: &'a [usize],
    inner: Vec<usize>,
    content: &'a [usize],
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    used: Vec<usize>,
}

impl Filler<'_> {
    fn in_skew(&self, i: usize, j: usize) -> bool {
        j >= self.inner[i] && j < self.outer[i]
    }

    fn count(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return 1;
        }
        let (i, j) = self.cells[idx];
        // rows weakly increase left to right; the cell to the right is filled
        let upper = if j + 1 < self.outer[i] {
            self.grid[i][j + 1]
        } else {
            self.content.len()
        };
        // columns strictly increase downwards
        let lower = if i > 0 && self.in_skew(i - 1, j) {
            self.grid[i - 1][j] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lower..=upper {
            let slot = v - 1;
            if self.used[slot] >= self.content[slot] {
                continue;
            }
            if slot > 0 && self.used[slot] + 1 > self.used[slot - 1] {
                continue;
            }
            self.used[slot] += 1;
            self.grid[i][j] = v;
            total += self.count(idx + 1);
            self.used[slot] -= 1;
        }
        self.grid[i][j] = 0;
        total
    }
}

fn count_tableaux(q: &LrQuery) -> u64 {
    let outer = q.outer.parts();
    let inner: Vec<usize> = (1..=outer.len()).map(|i| q.inner.part(i)).collect();
    let cells = outer
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (inner[i]..len).rev().map(move |j| (i, j)))
        .collect();
    let mut filler = Filler {
        outer,
        grid: outer.iter().map(|&l| vec![0; l]).collect(),
        inner,
        content: q.content.parts(),
        cells,
        used: vec![0; q.content.length()],
    };
    filler.count(0)
}
