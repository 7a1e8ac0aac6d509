use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    cmp_padded, primitive_integer_vector, rank, solve_in_span, InnerProductForm, IntLattice,
    RatVector, Rational,
};

/// A simplicial rational cone `C` together with a lattice `Λ_C` of full rank
/// in its linear span.
///
/// Generators are primitive in `Z^k` and sorted lexicographically, so two
/// cones are structurally equal exactly when they have the same rays and the
/// same lattice. The zero cone `({0}, {0})` is the coaugmentation `J`.
#[derive(Clone, Debug)]
pub struct LatticeCone {
    ambient_dim: usize,
    generators: Vec<Vec<BigInt>>,
    lattice: IntLattice,
}

fn trim(v: &[BigInt]) -> &[BigInt] {
    let end = v.iter().rposition(|x| !x.is_zero()).map_or(0, |p| p + 1);
    &v[..end]
}

impl LatticeCone {
    /// The zero cone `J`.
    pub fn zero(ambient_dim: usize) -> Self {
        LatticeCone { ambient_dim, generators: Vec::new(), lattice: IntLattice::zero(ambient_dim) }
    }

    /// Builds a cone from integer generators; the default lattice is the
    /// group generated by the primitivised generators.
    pub fn new(generators: &[Vec<BigInt>], lattice: Option<&[Vec<BigInt>]>) -> Result<Self> {
        let gens: Vec<RatVector> = generators.iter().map(|g| RatVector::from_bigints(g)).collect();
        let lat: Option<Vec<RatVector>> =
            lattice.map(|l| l.iter().map(|g| RatVector::from_bigints(g)).collect());
        Self::from_rational(&gens, lat.as_deref())
    }

    /// Convenience constructor from `i64` rows.
    pub fn from_ints(generators: &[&[i64]]) -> Result<Self> {
        let g: Vec<RatVector> = generators.iter().map(|x| RatVector::from_ints(x)).collect();
        Self::from_rational(&g, None)
    }

    /// Convenience constructor with an explicit lattice given by `i64` rows.
    pub fn with_lattice(generators: &[&[i64]], lattice: &[&[i64]]) -> Result<Self> {
        let g: Vec<RatVector> = generators.iter().map(|x| RatVector::from_ints(x)).collect();
        let l: Vec<RatVector> = lattice.iter().map(|x| RatVector::from_ints(x)).collect();
        Self::from_rational(&g, Some(&l))
    }

    /// Builds a cone from rational ray directions. The explicit lattice, if
    /// given, is canonicalised and must have full rank in the span of the
    /// rays.
    pub fn from_rational(rays: &[RatVector], lattice: Option<&[RatVector]>) -> Result<Self> {
        let mut generators = Vec::with_capacity(rays.len());
        for r in rays {
            let (p, _) = primitive_integer_vector(r.coords())
                .ok_or_else(|| Error::BadCone("zero generator".into()))?;
            generators.push(p);
        }
        let prim: Vec<RatVector> = generators.iter().map(|g| RatVector::from_bigints(g)).collect();
        if rank(&prim) != prim.len() {
            return Err(Error::NonSimplicial);
        }
        let lattice = match lattice {
            None => IntLattice::generated_by(&prim),
            Some(l) => IntLattice::generated_by(l),
        };
        Self::assemble(generators, lattice, rays.iter().map(RatVector::dim).max().unwrap_or(0))
    }

    /// Builds from primitive generators and a canonical lattice, checking
    /// that the lattice spans the same subspace.
    pub(crate) fn assemble(
        mut generators: Vec<Vec<BigInt>>,
        lattice: IntLattice,
        dim_hint: usize,
    ) -> Result<Self> {
        let ambient_dim = generators
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .max(lattice.ambient_dim())
            .max(dim_hint);
        for g in generators.iter_mut() {
            g.resize(ambient_dim, BigInt::zero());
        }
        generators.sort_by(|a, b| cmp_padded(a, b));
        let prim: Vec<RatVector> = generators.iter().map(|g| RatVector::from_bigints(g)).collect();
        if rank(&prim) != prim.len() {
            return Err(Error::NonSimplicial);
        }
        if lattice.rank() != prim.len() {
            return Err(Error::BadCone(format!(
                "lattice has rank {} but the cone has {} generators",
                lattice.rank(),
                prim.len()
            )));
        }
        let lb = lattice.basis();
        if prim.iter().any(|g| solve_in_span(&lb, g).is_none()) {
            return Err(Error::BadCone("lattice does not span the cone's linear span".into()));
        }
        Ok(LatticeCone { ambient_dim, generators, lattice })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// The same cone viewed in a (possibly) larger ambient space.
    pub fn with_ambient_dim(mut self, k: usize) -> Self {
        if k > self.ambient_dim {
            self.ambient_dim = k;
            for g in self.generators.iter_mut() {
                g.resize(k, BigInt::zero());
            }
        }
        self
    }

    /// Number of generators, which is the dimension of the cone.
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn generator_vectors(&self) -> Vec<RatVector> {
        self.generators.iter().map(|g| RatVector::from_bigints(g)).collect()
    }

    pub fn lattice(&self) -> &IntLattice {
        &self.lattice
    }

    /// The shortest lattice vector on each ray, in generator order.
    pub fn lattice_rays(&self) -> Vec<RatVector> {
        self.generator_vectors()
            .into_iter()
            .map(|g| {
                let line = self.lattice.intersect_span(std::slice::from_ref(&g));
                let b = line.basis().pop().expect("ray meets the lattice");
                if g.dot(&b).is_negative() {
                    -&b
                } else {
                    b
                }
            })
            .collect()
    }

    /// `[Λ_C : Z u_1 + ... + Z u_n]` for the lattice rays `u_i`.
    pub fn smoothness_index(&self) -> BigInt {
        if self.is_zero() {
            return BigInt::from(1);
        }
        IntLattice::generated_by(&self.lattice_rays())
            .index_in(&self.lattice)
            .expect("rays generate a full-rank sublattice")
    }

    /// Smooth (unimodular): the lattice rays form a basis of `Λ_C`.
    pub fn is_smooth(&self) -> bool {
        self.smoothness_index() == BigInt::from(1)
    }

    /// Coordinates of `p` in the generator basis, if `p` lies in the span.
    pub fn generator_coordinates(&self, p: &RatVector) -> Option<Vec<Rational>> {
        solve_in_span(&self.generator_vectors(), p)
    }

    /// Whether `p` lies in the relative interior of the cone.
    pub fn contains_in_relative_interior(&self, p: &RatVector) -> bool {
        if self.is_zero() {
            return p.is_zero();
        }
        self.generator_coordinates(p)
            .is_some_and(|c| c.iter().all(Signed::is_positive))
    }

    pub fn contains(&self, p: &RatVector) -> bool {
        self.generator_coordinates(p)
            .is_some_and(|c| c.iter().all(|x| !x.is_negative()))
    }

    /// The face spanned by the generators selected by `mask`, with lattice
    /// `Λ_C ∩ span(F)`.
    pub fn face(&self, mask: u64) -> LatticeCone {
        let gens: Vec<Vec<BigInt>> = self
            .generators
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, g)| g.clone())
            .collect();
        let span: Vec<RatVector> = gens.iter().map(|g| RatVector::from_bigints(g)).collect();
        let lattice = self.lattice.intersect_span(&span);
        LatticeCone::assemble(gens, lattice, self.ambient_dim)
            .expect("faces of a simplicial cone are simplicial")
    }

    /// All `2^n` faces, indexed by generator subsets in increasing bitmask
    /// order: the zero cone first, the cone itself last.
    pub fn faces(&self) -> Vec<LatticeCone> {
        let n = self.dim();
        (0..1u64 << n).map(|mask| self.face(mask)).collect()
    }

    /// Bitmask of `f`'s generators among ours, if `f` is a face.
    pub fn face_mask(&self, f: &LatticeCone) -> Option<u64> {
        let mut mask = 0u64;
        for g in &f.generators {
            let i = self
                .generators
                .iter()
                .position(|h| cmp_padded(g, h) == Ordering::Equal)?;
            mask |= 1 << i;
        }
        (self.face(mask) == *f).then_some(mask)
    }

    /// `t(C, F)`: the Q-orthogonal projection of `(C, Λ_C)` onto
    /// `span(F)^⊥`.
    pub fn transverse_cone(&self, q: &InnerProductForm, face: &LatticeCone) -> Result<LatticeCone> {
        let mask = self
            .face_mask(face)
            .ok_or_else(|| Error::NotAFace(face.to_string()))?;
        Ok(self.transverse_cone_by_mask(q, mask))
    }

    pub(crate) fn transverse_cone_by_mask(&self, q: &InnerProductForm, mask: u64) -> LatticeCone {
        let all = self.generator_vectors();
        let face_span: Vec<RatVector> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, g)| g.clone())
            .collect();
        let rays: Vec<Vec<BigInt>> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 0)
            .map(|(_, g)| {
                let p = q.project_orthogonal(g, &face_span);
                primitive_integer_vector(p.coords())
                    .expect("generator outside the face projects to a nonzero vector")
                    .0
            })
            .collect();
        let lattice_images: Vec<RatVector> = self
            .lattice
            .basis()
            .iter()
            .map(|b| q.project_orthogonal(b, &face_span))
            .collect();
        let lattice = IntLattice::generated_by(&lattice_images);
        LatticeCone::assemble(rays, lattice, self.ambient_dim)
            .expect("projection of a simplicial cone along a face is simplicial")
    }

    /// Minkowski product: the cone on the union of generators with lattice
    /// `Λ_C + Λ_D`.
    pub fn minkowski_product(&self, other: &LatticeCone) -> Result<LatticeCone> {
        let mut gens = self.generators.clone();
        for g in &other.generators {
            if !gens.iter().any(|h| cmp_padded(g, h) == Ordering::Equal) {
                gens.push(g.clone());
            }
        }
        let mut lattice_gens = self.lattice.basis();
        lattice_gens.extend(other.lattice.basis());
        let lattice = IntLattice::generated_by(&lattice_gens);
        LatticeCone::assemble(gens, lattice, self.ambient_dim.max(other.ambient_dim))
            .map_err(|_| Error::ProductNotSimplicial)
    }

    /// `Q(u, v) = 0` for all `u ∈ Λ_C`, `v ∈ Λ_D`.
    pub fn is_orthogonal_to(&self, q: &InnerProductForm, other: &LatticeCone) -> bool {
        let a = self.lattice.basis();
        let b = other.lattice.basis();
        a.iter().all(|u| b.iter().all(|v| q.inner_product(u, v).is_zero()))
    }

    fn key(&self) -> (Vec<&[BigInt]>, &IntLattice) {
        (self.generators.iter().map(|g| trim(g)).collect(), &self.lattice)
    }
}

/// Free-function form of [`LatticeCone::is_orthogonal_to`].
pub fn are_orthogonal(q: &InnerProductForm, a: &LatticeCone, b: &LatticeCone) -> bool {
    a.is_orthogonal_to(q, b)
}

impl PartialEq for LatticeCone {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for LatticeCone {}

impl Hash for LatticeCone {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for LatticeCone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LatticeCone {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| {
                for (a, b) in self.generators.iter().zip(&other.generators) {
                    let c = cmp_padded(a, b);
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            })
            .then_with(|| self.lattice.cmp(&other.lattice))
    }
}

impl fmt::Display for LatticeCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "J");
        }
        let gens: Vec<String> = self
            .generator_vectors()
            .iter()
            .map(|g| g.to_string())
            .collect();
        write!(f, "<{}>", gens.join(", "))?;
        if self.lattice != IntLattice::generated_by(&self.generator_vectors()) {
            write!(f, " [{}]", self.lattice)?;
        }
        Ok(())
    }
}
