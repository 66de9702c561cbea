use super::group::PermGroup;
use crate::error::{Error, Result};

/// A partition of `{0, .., n-1}`: blocks sorted internally and ordered by
/// their least point.
pub type Partition = Vec<Vec<usize>>;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    /// Keeps the smaller root so representatives stay canonical.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// The finest block system in which `a` and `b` share a block.
pub fn block_system_merging(group: &PermGroup, a: usize, b: usize) -> Partition {
    let n = group.degree();
    let mut uf = UnionFind::new(n);
    let mut queue = Vec::new();
    if uf.union(a, b) {
        queue.push((a, b));
    }
    while let Some((u, v)) = queue.pop() {
        for g in group.generators() {
            let (gu, gv) = (g.apply(u), g.apply(v));
            if uf.union(gu, gv) {
                queue.push((gu, gv));
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for p in 0..n {
        let r = uf.find(p);
        blocks[r].push(p);
    }
    blocks.retain(|b| !b.is_empty());
    blocks
}

/// Minimal nontrivial block systems; an empty result means primitive.
///
/// Every nontrivial system refines to some `block_system_merging(0, β)`,
/// and such a system is minimal exactly when each `γ` in the block of `0`
/// generates the same system. Ordered by block size, then by the block
/// containing point `0`.
pub fn minimal_blocks(group: &PermGroup) -> Result<Vec<Partition>> {
    let n = group.degree();
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let mut systems: Vec<Option<Partition>> = vec![None; n];
    for beta in 1..n {
        systems[beta] = Some(block_system_merging(group, 0, beta));
    }
    let mut out: Vec<Partition> = Vec::new();
    for beta in 1..n {
        let sys = systems[beta].as_ref().unwrap();
        if sys.len() == 1 {
            continue;
        }
        let minimal = sys[0]
            .iter()
            .filter(|&&g| g != 0)
            .all(|&g| systems[g].as_ref() == Some(sys));
        if minimal && !out.contains(sys) {
            out.push(sys.clone());
        }
    }
    out.sort_by(|a, b| a[0].len().cmp(&b[0].len()).then_with(|| a[0].cmp(&b[0])));
    Ok(out)
}

pub fn is_primitive(group: &PermGroup) -> Result<bool> {
    Ok(minimal_blocks(group)?.is_empty())
}

/// True when every generator maps every block onto a block.
pub fn is_block_system(group: &PermGroup, partition: &Partition) -> bool {
    let n = group.degree();
    let mut which = vec![usize::MAX; n];
    for (i, b) in partition.iter().enumerate() {
        for &p in b {
            which[p] = i;
        }
    }
    if which.contains(&usize::MAX) {
        return false;
    }
    group.generators().iter().all(|g| {
        partition.iter().all(|b| {
            let target = which[g.apply(b[0])];
            b.iter().all(|&p| which[g.apply(p)] == target)
        })
    })
}
