//! Typed flags and the finite flag calculus: densities, joint densities,
//! products, unlabelling and symbolic square expansion.

mod algebra;
mod density;
pub mod identify;

pub use algebra::{basis_coefficients, flag_product, square_expand, unlabel, unlabel_factor};
pub use density::{enumerate_flags, flag_density, joint_density, MAX_FLAG_ORDER};
pub use identify::{
    diff, expand, identify_flags, load_fixture, CoefficientDiff, FlagFixture, Identification, FLAG_FIXTURE, FLAG_FIXTURE_NAME,
};

use crate::error::{Error, Result};
use crate::exactmath::RationalFunction;
use crate::graphs::{canonical_form_colored, Graph};
use std::collections::BTreeMap;
use std::fmt;

/// A fully labelled graph on `k` vertices; label `i` is vertex `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Type {
    graph: Graph,
}

impl Type {
    pub fn new(graph: Graph) -> Self {
        Type { graph }
    }

    /// The type on zero vertices; its flags are plain graphs.
    pub fn empty() -> Self {
        Type {
            graph: Graph::empty(0).expect("order 0"),
        }
    }

    /// Two labelled vertices, not adjacent.
    pub fn sigma1() -> Self {
        Type {
            graph: Graph::empty(2).expect("order 2"),
        }
    }

    /// Two labelled vertices joined by an edge.
    pub fn sigma2() -> Self {
        Type {
            graph: Graph::complete(2).expect("order 2"),
        }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn name(&self) -> String {
        if *self == Type::sigma1() {
            "sigma1".into()
        } else if *self == Type::sigma2() {
            "sigma2".into()
        } else if self.order() == 0 {
            "empty".into()
        } else {
            format!("type:{}", self.graph)
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "sigma1" => Ok(Type::sigma1()),
            "sigma2" => Ok(Type::sigma2()),
            "empty" => Ok(Type::empty()),
            other => match other.strip_prefix("type:") {
                Some(g6) => Ok(Type::new(crate::graphs::from_graph6(g6)?)),
                None => Err(Error::Parse(format!("unknown type {other:?}"))),
            },
        }
    }
}

impl fmt::Debug for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A graph with the type embedded on its first `k` vertices, stored in
/// canonical form: two flags are isomorphic (by a map fixing the labels)
/// exactly when they compare equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    ty: Type,
    graph: Graph,
}

impl Flag {
    /// Flag `(graph, theta)`; `theta[i]` is the vertex carrying label `i`.
    pub fn new(ty: Type, graph: &Graph, theta: &[usize]) -> Result<Self> {
        let k = ty.order();
        let n = graph.order();
        if n < k {
            return Err(Error::FlagTooSmall { flag: n, ty: k });
        }
        if theta.len() != k {
            return Err(Error::InvalidEmbedding);
        }
        for (i, &v) in theta.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if theta[..i].contains(&v) {
                return Err(Error::InvalidEmbedding);
            }
        }
        if graph.induced(theta) != ty.graph {
            return Err(Error::InvalidEmbedding);
        }
        Ok(Self::canonical(ty, graph, theta))
    }

    /// Unchecked canonicalisation; `theta` must embed the type.
    pub(crate) fn canonical(ty: Type, graph: &Graph, theta: &[usize]) -> Self {
        let k = ty.order() as u8;
        let mut colors = vec![k; graph.order()];
        for (i, &v) in theta.iter().enumerate() {
            colors[v] = i as u8;
        }
        Flag {
            ty,
            graph: canonical_form_colored(graph, &colors).graph,
        }
    }

    /// Flag whose labelled vertices are already `0..k`.
    pub fn from_labelled_prefix(ty: Type, graph: &Graph) -> Result<Self> {
        let theta: Vec<usize> = (0..ty.order()).collect();
        Self::new(ty, graph, &theta)
    }

    /// The type viewed as a flag with no free vertices.
    pub fn of_type(ty: Type) -> Self {
        Flag { ty, graph: ty.graph }
    }

    /// A plain graph as a flag of the empty type.
    pub fn unlabelled(graph: &Graph) -> Self {
        Self::canonical(Type::empty(), graph, &[])
    }

    pub fn ty(&self) -> Type {
        self.ty
    }

    /// Canonical graph; the labelled vertices are `0..k` in label order.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn free_vertices(&self) -> usize {
        self.order() - self.ty.order()
    }
}

impl fmt::Debug for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.ty.name(), self.graph)
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Finite linear combination of flags of one type and one order, with
/// coefficients in `Q(r)`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct FlagVector {
    ty: Type,
    order: Option<usize>,
    terms: BTreeMap<Flag, RationalFunction>,
}

impl FlagVector {
    pub fn zero(ty: Type) -> Self {
        FlagVector {
            ty,
            order: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_flag(flag: Flag) -> Self {
        let mut v = Self::zero(flag.ty());
        v.add_term(flag, RationalFunction::one()).expect("same type");
        v
    }

    pub fn from_terms(ty: Type, terms: impl IntoIterator<Item = (Flag, RationalFunction)>) -> Result<Self> {
        let mut v = Self::zero(ty);
        for (f, c) in terms {
            v.add_term(f, c)?;
        }
        Ok(v)
    }

    pub fn ty(&self) -> Type {
        self.ty
    }

    /// Common order of the flags in the support; `None` when zero.
    pub fn order(&self) -> Option<usize> {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, flag: &Flag) -> RationalFunction {
        self.terms.get(flag).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Flag, &RationalFunction)> {
        self.terms.iter()
    }

    /// Adds `c * flag`. Fails if the flag's type or order differs from the
    /// vector's.
    pub fn add_term(&mut self, flag: Flag, c: RationalFunction) -> Result<()> {
        if flag.ty() != self.ty {
            return Err(Error::TypeMismatch);
        }
        if let Some(n) = self.order {
            if n != flag.order() {
                return Err(Error::SizeOverflow {
                    needed: flag.order(),
                    available: n,
                });
            }
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(flag).or_insert_with(RationalFunction::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&flag);
        }
        self.order = self.terms.keys().next().map(Flag::order);
        Ok(())
    }

    pub fn scale(&self, c: &RationalFunction) -> FlagVector {
        let mut out = FlagVector::zero(self.ty);
        for (f, a) in &self.terms {
            out.add_term(*f, a * c).expect("same type");
        }
        out
    }

    pub fn add(&self, other: &FlagVector) -> Result<FlagVector> {
        let mut out = self.clone();
        for (f, c) in &other.terms {
            out.add_term(*f, c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FlagVector) -> Result<FlagVector> {
        self.add(&other.scale(&-RationalFunction::one()))
    }
}

impl fmt::Debug for FlagVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(fl, c)| format!("({c})*[{fl}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}
