//! Join and corona products with a fixed, reproducible vertex layout.
//!
//! Both constructions place the first factor on `0..n1`. The join puts
//! the second factor on `n1..n1+n2`; the corona places copy `i` of the
//! second factor on `n1 + i*n2 .. n1 + (i+1)*n2`. Fixing the layout makes
//! products testable edge-for-edge and keeps graph6 output stable.

use crate::graph::{Graph, GraphError};

/// Which product a [`ProductLayout`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    /// Disjoint union plus all edges across the two factors.
    Join,
    /// One copy of the second factor per vertex of the first, each copy
    /// fully attached to its base vertex.
    Corona,
}

/// Vertex numbering of a product of factors with orders `n1` and `n2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductLayout {
    pub kind: ProductKind,
    pub n1: usize,
    pub n2: usize,
}

impl ProductLayout {
    pub fn new(kind: ProductKind, n1: usize, n2: usize) -> Self {
        ProductLayout { kind, n1, n2 }
    }

    /// Number of copies of the second factor.
    pub fn copies(&self) -> usize {
        match self.kind {
            ProductKind::Join => 1,
            ProductKind::Corona => self.n1,
        }
    }

    /// Order of the product: `n1 + n2` for the join, `n1(1 + n2)` for
    /// the corona.
    pub fn order(&self) -> usize {
        self.n1 + self.copies() * self.n2
    }

    /// Size of the product from the factor sizes: `m1 + m2 + n1*n2` for
    /// the join, `m1 + n1*m2 + n1*n2` for the corona.
    pub fn size(&self, m1: usize, m2: usize) -> usize {
        self.n1 * self.n2 + m1 + self.copies() * m2
    }

    /// Product vertex carrying vertex `u` of the first factor.
    pub fn first(&self, u: usize) -> usize {
        debug_assert!(u < self.n1);
        u
    }

    /// Product vertex carrying vertex `v` of copy `copy` of the second
    /// factor. The join has a single copy (`copy == 0`).
    pub fn second(&self, copy: usize, v: usize) -> usize {
        debug_assert!(copy < self.copies() && v < self.n2);
        self.n1 + copy * self.n2 + v
    }
}

fn product(kind: ProductKind, g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    if g1.order() == 0 || g2.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let layout = ProductLayout::new(kind, g1.order(), g2.order());
    let mut edges = Vec::with_capacity(layout.size(g1.size(), g2.size()));

    edges.extend(g1.edges().map(|(u, v)| (layout.first(u), layout.first(v))));
    for copy in 0..layout.copies() {
        edges.extend(
            g2.edges()
                .map(|(u, v)| (layout.second(copy, u), layout.second(copy, v))),
        );
    }
    match kind {
        ProductKind::Join => {
            for u in 0..layout.n1 {
                for v in 0..layout.n2 {
                    edges.push((layout.first(u), layout.second(0, v)));
                }
            }
        }
        ProductKind::Corona => {
            for u in 0..layout.n1 {
                for v in 0..layout.n2 {
                    edges.push((layout.first(u), layout.second(u, v)));
                }
            }
        }
    }

    Graph::from_edges(layout.order(), &edges)
}

/// Join of two graphs: both factors plus every edge across them. The
/// degree of a first-factor vertex rises by `n2`, of a second-factor
/// vertex by `n1`.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    product(ProductKind::Join, g1, g2)
}

/// Corona product: `n1` copies of the second factor, with vertex `i` of
/// the first adjacent to all of copy `i`. The degree of a first-factor
/// vertex rises by `n2`; every copy vertex gains exactly 1.
pub fn corona(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    product(ProductKind::Corona, g1, g2)
}
