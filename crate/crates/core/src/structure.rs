//! Combinatorial classification of sign patterns.
//!
//! The associated digraph has an edge `j -> i` whenever `P[i][j]` is set, and
//! the bipartite graph joins row `i` to column `j` on the same condition.
//! Every test here is a pure function of the pattern.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::SignPattern;

/// Strongly connected classes in block lower-triangular order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusForm {
    /// Concatenation of `blocks`; position `k` holds the original index
    /// placed at row/column `k` of the permuted matrix.
    pub permutation: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

impl FrobeniusForm {
    pub fn is_irreducible(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Block index of every original index.
    pub fn block_of(&self) -> Vec<usize> {
        let mut of = vec![0; self.permutation.len()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                of[i] = b;
            }
        }
        of
    }
}

/// Cyclic classes of an irreducible pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicForm {
    pub period: usize,
    /// Every set cell `(i, j)` with `j` in class `k` has `i` in class
    /// `(k + 1) mod period`.
    pub classes: Vec<Vec<usize>>,
}

impl CyclicForm {
    pub fn permutation(&self) -> Vec<usize> {
        self.classes.iter().flatten().copied().collect()
    }

    /// Checks the class-advance property against `pattern`.
    pub fn is_consistent_with(&self, pattern: &SignPattern) -> bool {
        let mut class_of = vec![usize::MAX; pattern.n()];
        for (k, class) in self.classes.iter().enumerate() {
            for &i in class {
                class_of[i] = k;
            }
        }
        class_of.iter().all(|&c| c != usize::MAX)
            && pattern
                .cells()
                .all(|(i, j)| class_of[i] == (class_of[j] + 1) % self.period)
    }
}

/// Full classification record of a sign pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub irreducible: bool,
    /// Index of imprimitivity; `None` for reducible patterns.
    pub period: Option<usize>,
    pub primitive: bool,
    pub a2_irreducible: bool,
    pub ata_irreducible: bool,
    pub aat_irreducible: bool,
    pub two_fold: bool,
    pub chainable: bool,
    pub fully_indecomposable: bool,
    pub total_support: bool,
    pub scrambling: bool,
    pub nnz: usize,
    pub column_components: Vec<Vec<usize>>,
    pub frobenius: FrobeniusForm,
    pub cyclic: Option<CyclicForm>,
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Groups sorted by smallest member, members ascending.
    pub(crate) fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(x);
        }
        groups
    }
}

/// Vertices reachable from `start` following `P[i][j]` as `j -> i`
/// (`forward`) or `i -> j` (`!forward`).
fn reachable(p: &SignPattern, start: usize, forward: bool) -> Vec<bool> {
    let n = p.n();
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for v in 0..n {
            let edge = if forward { p.get(v, u) } else { p.get(u, v) };
            if edge && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

/// Strong connectivity of the associated digraph. `n = 1` is irreducible
/// whatever the single entry.
pub fn is_irreducible(p: &SignPattern) -> bool {
    if p.n() == 1 {
        return true;
    }
    reachable(p, 0, true).iter().all(|&b| b) && reachable(p, 0, false).iter().all(|&b| b)
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// BFS levels from vertex 0 along `j -> i` edges.
fn bfs_levels(p: &SignPattern) -> Vec<usize> {
    let n = p.n();
    let mut level = vec![usize::MAX; n];
    level[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for v in p.col_support(u) {
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    level
}

/// Index of imprimitivity: gcd of all directed cycle lengths, computed as
/// the gcd of `level(j) + 1 - level(i)` over edges `j -> i`.
pub fn period(p: &SignPattern) -> Result<usize> {
    if !is_irreducible(p) {
        return Err(Error::Reducible);
    }
    if p.n() == 1 {
        return Ok(1);
    }
    let level = bfs_levels(p);
    let g = p
        .cells()
        .map(|(i, j)| (level[j] + 1).abs_diff(level[i]))
        .fold(0, gcd);
    Ok(g)
}

pub fn is_primitive(p: &SignPattern) -> bool {
    is_irreducible(p) && period(p) == Ok(1)
}

pub fn product_pattern(p: &SignPattern, q: &SignPattern) -> Result<SignPattern> {
    p.product(q)
}

/// `A` and `AᵀA` irreducible. For `n = 1` this is whether the entry is set.
pub fn is_two_fold(p: &SignPattern) -> bool {
    if p.n() == 1 {
        return p.get(0, 0);
    }
    is_irreducible(p) && is_irreducible(&p.gram_columns())
}

/// Connected components of the columns, two columns joined when they share
/// a nonzero row (the connectivity classes of the `AᵀA` pattern).
pub fn column_components(p: &SignPattern) -> Vec<Vec<usize>> {
    let n = p.n();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        let mut cols = p.row_support(i);
        if let Some(first) = cols.next() {
            for j in cols {
                uf.union(first, j);
            }
        }
    }
    uf.groups()
}

/// Connectivity of the row/column bipartite graph. Patterns with an
/// all-zero row or column are not chainable.
pub fn is_chainable(p: &SignPattern) -> bool {
    if p.has_zero_line() {
        return false;
    }
    let n = p.n();
    let mut uf = UnionFind::new(2 * n);
    let mut components = 2 * n;
    for (i, j) in p.cells() {
        if uf.union(i, n + j) {
            components -= 1;
        }
    }
    components == 1
}

/// Augmenting-path bipartite matching (Kuhn). Rows index `adj`; entries
/// are column indices.
fn maximum_matching(adj: &[Vec<usize>], n_cols: usize) -> usize {
    fn augment(
        row: usize,
        adj: &[Vec<usize>],
        visited: &mut [bool],
        col_match: &mut [Option<usize>],
    ) -> bool {
        for &c in &adj[row] {
            if visited[c] {
                continue;
            }
            visited[c] = true;
            if col_match[c].is_none_or(|r| augment(r, adj, visited, col_match)) {
                col_match[c] = Some(row);
                return true;
            }
        }
        false
    }

    let mut col_match = vec![None; n_cols];
    let mut size = 0;
    for row in 0..adj.len() {
        let mut visited = vec![false; n_cols];
        if augment(row, adj, &mut visited, &mut col_match) {
            size += 1;
        }
    }
    size
}

/// Whether the cell `(r, c)` lies on a positive diagonal: the pattern with
/// row `r` and column `c` removed has a perfect matching.
fn on_positive_diagonal(p: &SignPattern, r: usize, c: usize) -> bool {
    let n = p.n();
    let col_index = |j: usize| if j < c { j } else { j - 1 };
    let adj: Vec<Vec<usize>> = (0..n)
        .filter(|&i| i != r)
        .map(|i| {
            p.row_support(i)
                .filter(|&j| j != c)
                .map(col_index)
                .collect()
        })
        .collect();
    maximum_matching(&adj, n - 1) == n - 1
}

/// Total support: the pattern is nonzero and every set cell lies on a
/// positive diagonal, which is exactly when some doubly stochastic matrix
/// has this sign pattern.
pub fn has_total_support(p: &SignPattern) -> bool {
    !p.is_zero() && p.cells().all(|(i, j)| on_positive_diagonal(p, i, j))
}

/// Chainable with total support. For `n = 1`, whether the entry is set.
pub fn is_fully_indecomposable(p: &SignPattern) -> bool {
    if p.n() == 1 {
        return p.get(0, 0);
    }
    is_chainable(p) && has_total_support(p)
}

/// Every pair of distinct rows shares a nonzero column.
pub fn is_scrambling(p: &SignPattern) -> bool {
    let n = p.n();
    (0..n).all(|i| (i + 1..n).all(|k| (0..n).any(|j| p.get(i, j) && p.get(k, j))))
}

/// Tarjan's algorithm over the `i -> j` orientation; iterative so large
/// patterns do not exhaust the stack.
fn strongly_connected_components(p: &SignPattern) -> Vec<Vec<usize>> {
    let n = p.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|i| p.row_support(i).collect()).collect();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut counter = 0;

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&(v, next)) = call.last() {
            if next < adj[v].len() {
                let w = adj[v][next];
                call.last_mut().expect("nonempty").1 += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// Frobenius normal form. Blocks are ordered so that the permuted matrix is
/// block lower-triangular (a set cell `(i, j)` never has the block of `j`
/// after the block of `i`); ties go to the block with the lowest index.
pub fn frobenius_form(p: &SignPattern) -> FrobeniusForm {
    let n = p.n();
    let comps = strongly_connected_components(p);
    let mut comp_of = vec![0; n];
    for (c, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = c;
        }
    }

    // Edge cb -> ca when some cell (i, j) has i in ca, j in cb: cb first.
    let k = comps.len();
    let mut succ = vec![Vec::new(); k];
    let mut indegree = vec![0usize; k];
    let mut seen = vec![false; k * k];
    for (i, j) in p.cells() {
        let (ca, cb) = (comp_of[i], comp_of[j]);
        if ca != cb && !seen[cb * k + ca] {
            seen[cb * k + ca] = true;
            succ[cb].push(ca);
            indegree[ca] += 1;
        }
    }

    let mut ready: BinaryHeap<Reverse<(usize, usize)>> = (0..k)
        .filter(|&c| indegree[c] == 0)
        .map(|c| Reverse((comps[c][0], c)))
        .collect();
    let mut blocks = Vec::with_capacity(k);
    while let Some(Reverse((_, c))) = ready.pop() {
        blocks.push(comps[c].clone());
        for &d in &succ[c] {
            indegree[d] -= 1;
            if indegree[d] == 0 {
                ready.push(Reverse((comps[d][0], d)));
            }
        }
    }
    debug_assert_eq!(blocks.len(), k);
    FrobeniusForm {
        permutation: blocks.iter().flatten().copied().collect(),
        blocks,
    }
}

/// Cyclic normal form: BFS levels modulo the period.
pub fn cyclic_form(p: &SignPattern) -> Result<CyclicForm> {
    let gamma = period(p)?;
    let n = p.n();
    if gamma == 1 {
        return Ok(CyclicForm {
            period: 1,
            classes: vec![(0..n).collect()],
        });
    }
    let level = bfs_levels(p);
    let mut classes = vec![Vec::new(); gamma];
    for (v, &l) in level.iter().enumerate() {
        classes[l % gamma].push(v);
    }
    Ok(CyclicForm {
        period: gamma,
        classes,
    })
}

/// Direction of the second move in [`board_move_irreducible_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoardMove {
    Horizontal,
    Vertical,
}

/// Board-move characterization of irreducibility with horizontal moves.
pub fn board_move_irreducible(p: &SignPattern) -> bool {
    board_move_irreducible_with(p, BoardMove::Horizontal)
}

/// Every row and column has a set cell, and every set cell reaches every
/// other by repeating: reflect `(i, j)` to `(j, i)`, then slide along row
/// `j` (horizontal) or column `i` (vertical) to a set cell.
pub fn board_move_irreducible_with(p: &SignPattern, step: BoardMove) -> bool {
    if p.has_zero_line() {
        return false;
    }
    let cells: Vec<(usize, usize)> = p.cells().collect();
    let n = p.n();
    let mut id = vec![usize::MAX; n * n];
    for (k, &(i, j)) in cells.iter().enumerate() {
        id[i * n + j] = k;
    }
    let next = |(i, j): (usize, usize)| -> Vec<usize> {
        match step {
            BoardMove::Horizontal => p.row_support(j).map(|k| id[j * n + k]).collect(),
            BoardMove::Vertical => p.col_support(i).map(|k| id[k * n + i]).collect(),
        }
    };
    let adj: Vec<Vec<usize>> = cells.iter().map(|&c| next(c)).collect();
    let radj = {
        let mut r = vec![Vec::new(); cells.len()];
        for (u, vs) in adj.iter().enumerate() {
            for &v in vs {
                r[v].push(u);
            }
        }
        r
    };
    let covers = |graph: &[Vec<usize>]| {
        let mut seen = vec![false; cells.len()];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for &v in &graph[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|b| b)
    };
    covers(&adj) && covers(&radj)
}

/// Runs every classification and assembles the report.
pub fn classify(p: &SignPattern) -> StructureReport {
    let irreducible = is_irreducible(p);
    let period = period(p).ok();
    let gram_cols = p.gram_columns();
    let gram_rows = p.gram_rows();
    let ata_irreducible = is_irreducible(&gram_cols);
    let aat_irreducible = is_irreducible(&gram_rows);
    let a2_irreducible = is_irreducible(&p.pow(2));
    let chainable = is_chainable(p);
    let total_support = has_total_support(p);
    let report = StructureReport {
        n: p.n(),
        irreducible,
        period,
        primitive: period == Some(1),
        a2_irreducible,
        ata_irreducible,
        aat_irreducible,
        two_fold: is_two_fold(p),
        chainable,
        fully_indecomposable: is_fully_indecomposable(p),
        total_support,
        scrambling: is_scrambling(p),
        nnz: p.nnz(),
        column_components: column_components(p),
        frobenius: frobenius_form(p),
        cyclic: cyclic_form(p).ok(),
    };

    if p.n() > 1 {
        debug_assert_eq!(report.two_fold, irreducible && ata_irreducible);
        debug_assert!(!report.two_fold || report.nnz >= 2 * p.n() - 1);
        debug_assert!(!report.two_fold || report.primitive);
    }
    debug_assert!(!report.fully_indecomposable || report.two_fold);
    debug_assert_eq!(report.frobenius.is_irreducible(), irreducible);
    report
}
