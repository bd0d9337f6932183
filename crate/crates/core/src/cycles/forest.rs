use crate::graph::LatticeVector;

/// Outcome of offering an edge to an [`OffsetForest`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Link {
    /// The endpoints were in different trees, which are now joined.
    Merged,
    /// The edge closes a cycle; carries the index of that cycle.
    Cycle(LatticeVector),
}

/// Disjoint-set forest in which every vertex carries a `Z^d` offset relative
/// to its root. Joined edges satisfy `τ(u, v) = p(v) - p(u)`, so an edge
/// inside a tree closes a cycle of index `τ(u, v) - (p(v) - p(u))`.
#[derive(Clone, Debug)]
pub struct OffsetForest {
    parent: Vec<usize>,
    size: Vec<usize>,
    // p(x) - p(parent[x])
    offset: Vec<LatticeVector>,
}

impl OffsetForest {
    pub fn new(n: usize, dim: usize) -> Self {
        OffsetForest {
            parent: (0..n).collect(),
            size: vec![1; n],
            offset: vec![LatticeVector::zero(dim); n],
        }
    }

    /// Root of `x` and `p(x) - p(root)`.
    pub fn find(&mut self, x: usize) -> (usize, LatticeVector) {
        let p = self.parent[x];
        if p == x {
            return (x, self.offset[x].clone());
        }
        let (root, to_root) = self.find(p);
        self.offset[x] += &to_root;
        self.parent[x] = root;
        (root, self.offset[x].clone())
    }

    /// Offers the oriented edge `(u, v)` with index `tau`.
    pub fn link(&mut self, u: usize, v: usize, tau: &LatticeVector) -> Link {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            return Link::Cycle(&(tau + &pu) - &pv);
        }
        // Attach rv below ru: p(rv) - p(ru) = pu + tau - pv.
        let mut delta = &(&pu + tau) - &pv;
        let (mut small, mut big) = (rv, ru);
        if self.size[rv] > self.size[ru] {
            std::mem::swap(&mut small, &mut big);
            delta = -delta;
        }
        self.parent[small] = big;
        self.offset[small] = delta;
        self.size[big] += self.size[small];
        Link::Merged
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_cycle_index() {
        let mut f = OffsetForest::new(3, 1);
        assert_eq!(f.link(0, 1, &vec![0].into()), Link::Merged);
        assert_eq!(f.link(1, 2, &vec![2].into()), Link::Merged);
        assert_eq!(f.link(2, 0, &vec![-2].into()), Link::Cycle(vec![0].into()));
        assert_eq!(f.link(2, 0, &vec![1].into()), Link::Cycle(vec![3].into()));
        assert_eq!(f.link(0, 2, &vec![2].into()), Link::Cycle(vec![0].into()));
    }

    #[test]
    fn offsets_consistent_after_union_by_size() {
        let mut f = OffsetForest::new(5, 2);
        f.link(3, 4, &vec![1, 0].into());
        f.link(0, 1, &vec![0, 1].into());
        f.link(1, 2, &vec![0, 1].into());
        f.link(4, 2, &vec![5, 5].into());
        let (_, p0) = f.find(0);
        let (_, p3) = f.find(3);
        // p3 = p2 - (5,5) - (1,0) = p0 + (0,2) - (6,5)
        assert_eq!(&p3 - &p0, LatticeVector::from([-6, -3]));
    }
}
