use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::json;

use super::lattice::{integer_kernel, Hnf};
use super::matrix::IntMatrix;
use super::snf::{smith, Smith};
use crate::error::{Error, Result};

/// The abelian group Z^n / L, optionally with an action of an elementary
/// abelian 2-group given by one matrix per generator (column convention).
pub struct PresentedGroup {
    n: usize,
    relators: Vec<Vec<BigInt>>,
    lattice: Hnf,
    smith: Smith,
    action: Vec<IntMatrix>,
}

impl fmt::Debug for PresentedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PresentedGroup(gens={}, invariants={:?})", self.n, self.invariant_factors())
    }
}

impl PresentedGroup {
    /// Group on `n_gens` generators with the columns of `relations` as relators.
    pub fn present(n_gens: usize, relations: &IntMatrix) -> Result<Arc<Self>> {
        if relations.cols() > 0 && relations.rows() != n_gens {
            return Err(Error::DimensionMismatch(format!(
                "relation matrix has {} rows for {n_gens} generators",
                relations.rows()
            )));
        }
        Self::new(n_gens, relations.columns(), Vec::new())
    }

    pub fn new(n_gens: usize, relators: Vec<Vec<BigInt>>, action: Vec<IntMatrix>) -> Result<Arc<Self>> {
        for r in &relators {
            if r.len() != n_gens {
                return Err(Error::DimensionMismatch(format!(
                    "relator of length {} for {n_gens} generators",
                    r.len()
                )));
            }
        }
        let lattice = Hnf::from_vectors(n_gens, relators.iter().cloned());
        Self::build(n_gens, relators, lattice, action)
    }

    pub fn free(n: usize) -> Arc<Self> {
        Self::new(n, Vec::new(), Vec::new()).expect("free group")
    }

    pub fn cyclic(m: i64) -> Arc<Self> {
        Self::new(1, vec![vec![BigInt::from(m)]], Vec::new()).expect("cyclic group")
    }

    pub fn trivial() -> Arc<Self> {
        Self::free(0)
    }

    fn build(n: usize, relators: Vec<Vec<BigInt>>, lattice: Hnf, action: Vec<IntMatrix>) -> Result<Arc<Self>> {
        for (i, a) in action.iter().enumerate() {
            if a.rows() != n || a.cols() != n {
                return Err(Error::DimensionMismatch(format!("action matrix {i} is not {n}x{n}")));
            }
            for l in lattice.basis() {
                if !lattice.contains(&a.apply(l)?) {
                    return Err(Error::ActionNotStabilizing(i));
                }
            }
            let sq = a.mul(a)?;
            for j in 0..n {
                let mut c = sq.column(j);
                c[j] -= 1;
                if !lattice.contains(&c) {
                    return Err(Error::ActionNotInvolution(i));
                }
            }
        }
        for i in 0..action.len() {
            for j in 0..i {
                let d = action[i].mul(&action[j])?;
                let e = action[j].mul(&action[i])?;
                for k in 0..n {
                    let c: Vec<BigInt> = d.column(k).iter().zip(e.column(k)).map(|(x, y)| x - y).collect();
                    if !lattice.contains(&c) {
                        return Err(Error::BadArgument(format!("action matrices {j} and {i} do not commute")));
                    }
                }
            }
        }
        let basis = IntMatrix::from_rows(lattice.basis().to_vec(), n)?;
        let smith = smith(&basis);
        Ok(Arc::new(PresentedGroup { n, relators, lattice, smith, action }))
    }

    pub fn n_gens(&self) -> usize {
        self.n
    }

    /// The relation matrix, one relator per column.
    pub fn relations(&self) -> IntMatrix {
        IntMatrix::from_columns(self.n, &self.relators).expect("consistent relators")
    }

    pub fn relators(&self) -> &[Vec<BigInt>] {
        &self.relators
    }

    pub fn lattice(&self) -> &Hnf {
        &self.lattice
    }

    pub fn action(&self) -> &[IntMatrix] {
        &self.action
    }

    fn rank(&self) -> usize {
        self.smith.diag.len()
    }

    /// Invariant factors `d_1 | d_2 | ...`, all greater than one.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.smith.diag.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn free_rank(&self) -> usize {
        self.n - self.rank()
    }

    /// Group order, or `None` when the group is infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank() > 0 {
            None
        } else {
            Some(self.smith.diag.iter().product())
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order().is_some_and(|o| o.is_one())
    }

    /// Diagonal entry attached to Smith coordinate `i` (zero for free coordinates).
    pub fn smith_modulus(&self, i: usize) -> BigInt {
        self.smith.diag.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn smith(&self) -> &Smith {
        &self.smith
    }

    pub fn elem(self: &Arc<Self>, coords: Vec<BigInt>) -> Result<GroupElement> {
        if coords.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "element of length {} in a group on {} generators",
                coords.len(),
                self.n
            )));
        }
        let coords = self.lattice.reduce(&coords);
        Ok(GroupElement { group: self.clone(), coords })
    }

    pub fn elem_i64(self: &Arc<Self>, coords: &[i64]) -> Result<GroupElement> {
        self.elem(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(self: &Arc<Self>) -> GroupElement {
        GroupElement { group: self.clone(), coords: vec![BigInt::zero(); self.n] }
    }

    pub fn gen(self: &Arc<Self>, i: usize) -> GroupElement {
        let mut c = vec![BigInt::zero(); self.n];
        c[i] = BigInt::one();
        self.elem(c).expect("generator index in range")
    }

    /// Element with the given Smith coordinates.
    pub fn from_smith(self: &Arc<Self>, y: &[BigInt]) -> Result<GroupElement> {
        let x = self.smith.right_inv.apply_left(y)?;
        self.elem(x)
    }

    /// Quotient by the subgroup generated by `elems`, with the projection.
    pub fn quotient(self: &Arc<Self>, elems: &[GroupElement]) -> Result<(Arc<PresentedGroup>, GroupHom)> {
        let mut relators = self.relators.clone();
        let mut lattice = self.lattice.clone();
        let mut extra = Vec::with_capacity(elems.len());
        for e in elems {
            if !Arc::ptr_eq(&e.group, self) {
                return Err(Error::ParentMismatch);
            }
            extra.push(e.coords.clone());
        }
        lattice.extend(extra.iter().cloned());
        relators.extend(extra);
        let q = Self::build(self.n, relators, lattice, self.action.clone())?;
        let proj = GroupHom::new(self.clone(), q.clone(), IntMatrix::identity(self.n))?;
        Ok((q, proj))
    }

    /// Whether two families of elements generate the same subgroup.
    pub fn same_span(self: &Arc<Self>, a: &[GroupElement], b: &[GroupElement]) -> Result<bool> {
        if a.iter().chain(b).any(|e| !Arc::ptr_eq(&e.group, self)) {
            return Err(Error::ParentMismatch);
        }
        let span = |xs: &[GroupElement]| {
            let mut l = self.lattice.clone();
            l.extend(xs.iter().map(|e| e.coords.clone()));
            l
        };
        let (la, lb) = (span(a), span(b));
        Ok(b.iter().all(|e| la.contains(&e.coords)) && a.iter().all(|e| lb.contains(&e.coords)))
    }


    /// Isomorphic copy on the nontrivial Smith generators, with maps both ways.
    pub fn simplified(self: &Arc<Self>) -> Result<(Arc<PresentedGroup>, GroupHom, GroupHom)> {
        let sel: Vec<usize> = (0..self.n).filter(|&i| !self.smith_modulus(i).is_one()).collect();
        let m = sel.len();
        let mut to = IntMatrix::zeros(m, self.n);
        let mut from = IntMatrix::zeros(self.n, m);
        for (k, &i) in sel.iter().enumerate() {
            for j in 0..self.n {
                to.set(k, j, self.smith.right.get(j, i).clone());
                from.set(j, k, self.smith.right_inv.get(i, j).clone());
            }
        }
        let relators: Vec<Vec<BigInt>> = sel
            .iter()
            .enumerate()
            .filter(|(_, &i)| i < self.rank())
            .map(|(k, &i)| {
                let mut r = vec![BigInt::zero(); m];
                r[k] = self.smith.diag[i].clone();
                r
            })
            .collect();
        let mut action = Vec::with_capacity(self.action.len());
        for a in &self.action {
            action.push(to.mul(a)?.mul(&from)?);
        }
        let lattice = Hnf::from_vectors(m, relators.iter().cloned());
        let s = Self::build(m, relators, lattice, action)?;
        let to = GroupHom::new(self.clone(), s.clone(), to)?;
        let from = GroupHom::new(s.clone(), self.clone(), from)?;
        Ok((s, to, from))
    }

    pub fn describe(&self) -> serde_json::Value {
        json!({
            "generators": self.n,
            "invariant_factors": self.invariant_factors().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "free_rank": self.free_rank(),
        })
    }
}

/// Element of a presented group, stored in canonical (Hermite-reduced) coordinates.
#[derive(Clone)]
pub struct GroupElement {
    group: Arc<PresentedGroup>,
    coords: Vec<BigInt>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.coords == other.coords
    }
}

impl Eq for GroupElement {}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let y = self.invariant_coords();
        let parts: Vec<String> = y
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.group.smith_modulus(*i).is_one())
            .map(|(i, c)| {
                let d = self.group.smith_modulus(i);
                if d.is_zero() {
                    format!("{c}")
                } else {
                    format!("{c} mod {d}")
                }
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl GroupElement {
    pub fn group(&self) -> &Arc<PresentedGroup> {
        &self.group
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    fn same(&self, other: &GroupElement) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement> {
        self.same(other)?;
        let c = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        self.group.elem(c)
    }

    pub fn sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.same(other)?;
        let c = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        self.group.elem(c)
    }

    pub fn neg(&self) -> GroupElement {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> GroupElement {
        let c = self.coords.iter().map(|a| a * k).collect();
        self.group.elem(c).expect("same length")
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Action of the `i`-th involution.
    pub fn act(&self, i: usize) -> Result<GroupElement> {
        let a = self
            .group
            .action
            .get(i)
            .ok_or_else(|| Error::BadArgument(format!("no action generator {i}")))?;
        self.group.elem(a.apply(&self.coords)?)
    }

    /// Coordinates in the Smith basis: torsion ones reduced, free ones exact.
    pub fn invariant_coords(&self) -> Vec<BigInt> {
        let y = self.group.smith.right.apply_left(&self.coords).expect("dimensions");
        y.into_iter()
            .enumerate()
            .map(|(i, c)| {
                let d = self.group.smith_modulus(i);
                if d.is_zero() {
                    c
                } else {
                    c.mod_floor(&d)
                }
            })
            .collect()
    }

    /// Order of the element, `None` if it has infinite order.
    pub fn order(&self) -> Option<BigInt> {
        let y = self.invariant_coords();
        let mut ord = BigInt::one();
        for (i, c) in y.iter().enumerate() {
            let d = self.group.smith_modulus(i);
            if d.is_zero() {
                if !c.is_zero() {
                    return None;
                }
            } else {
                ord = ord.lcm(&(&d / d.gcd(c)));
            }
        }
        Some(ord)
    }
}

/// Homomorphism of presented groups given by an integer matrix
/// (`target.n_gens` rows, `source.n_gens` columns).
#[derive(Clone)]
pub struct GroupHom {
    source: Arc<PresentedGroup>,
    target: Arc<PresentedGroup>,
    matrix: IntMatrix,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom({:?} -> {:?})", self.source, self.target)
    }
}

impl GroupHom {
    pub fn new(source: Arc<PresentedGroup>, target: Arc<PresentedGroup>, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.n || matrix.cols() != source.n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map from {} to {} generators",
                matrix.rows(),
                matrix.cols(),
                source.n,
                target.n
            )));
        }
        // checking a lattice basis suffices; report the first offending original relator
        let bad = source
            .lattice
            .basis()
            .iter()
            .any(|l| !target.lattice.contains(&matrix.apply(l).expect("dimensions")));
        if bad {
            for (i, r) in source.relators.iter().enumerate() {
                if !target.lattice.contains(&matrix.apply(r)?) {
                    return Err(Error::RelationNotKilled(i));
                }
            }
        }
        Ok(GroupHom { source, target, matrix })
    }

    /// Map sending generator `j` to `images[j]`.
    pub fn from_images(source: Arc<PresentedGroup>, target: Arc<PresentedGroup>, images: &[GroupElement]) -> Result<Self> {
        if images.len() != source.n {
            return Err(Error::DimensionMismatch(format!("{} images for {} generators", images.len(), source.n)));
        }
        for im in images {
            if !Arc::ptr_eq(&im.group, &target) {
                return Err(Error::ParentMismatch);
            }
        }
        let cols: Vec<Vec<BigInt>> = images.iter().map(|e| e.coords.clone()).collect();
        let m = IntMatrix::from_columns(target.n, &cols)?;
        Self::new(source, target, m)
    }

    pub fn identity(g: &Arc<PresentedGroup>) -> Self {
        GroupHom { source: g.clone(), target: g.clone(), matrix: IntMatrix::identity(g.n) }
    }

    pub fn source(&self) -> &Arc<PresentedGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PresentedGroup> {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        if !Arc::ptr_eq(&x.group, &self.source) {
            return Err(Error::ParentMismatch);
        }
        self.target.elem(self.matrix.apply(&x.coords)?)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom> {
        if !Arc::ptr_eq(&first.target, &self.source) {
            return Err(Error::ParentMismatch);
        }
        Ok(GroupHom {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix)?,
        })
    }

    /// Same matrix, viewed between other presentations; relators are rechecked.
    pub fn reinterpret(&self, source: Arc<PresentedGroup>, target: Arc<PresentedGroup>) -> Result<GroupHom> {
        GroupHom::new(source, target, self.matrix.clone())
    }

    pub fn is_zero(&self) -> bool {
        (0..self.source.n).all(|j| self.target.lattice.contains(&self.matrix.column(j)))
    }

    pub fn is_equivariant(&self) -> Result<bool> {
        if self.source.action.len() != self.target.action.len() {
            return Ok(false);
        }
        for (a, b) in self.source.action.iter().zip(&self.target.action) {
            let l = self.matrix.mul(a)?;
            let r = b.mul(&self.matrix)?;
            for j in 0..self.source.n {
                let d: Vec<BigInt> = l.column(j).iter().zip(r.column(j)).map(|(x, y)| x - y).collect();
                if !self.target.lattice.contains(&d) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Does the image contain `y`?
    pub fn image_contains(&self, y: &GroupElement) -> Result<bool> {
        if !Arc::ptr_eq(&y.group, &self.target) {
            return Err(Error::ParentMismatch);
        }
        let mut cols = self.matrix.columns();
        cols.extend(self.target.lattice.basis().iter().cloned());
        let span = Hnf::from_vectors(self.target.n, cols);
        Ok(span.contains(&y.coords))
    }

    pub fn kernel(&self) -> Result<Kernel> {
        let src = &self.source;
        let tgt = &self.target;
        let n = src.n;
        // images in the Smith coordinates of the target
        let phi = tgt.smith.right.transpose().mul(&self.matrix)?;
        let sel: Vec<usize> = (0..tgt.n).filter(|&i| !tgt.smith_modulus(i).is_one()).collect();
        let s = sel.len();
        let torsion: Vec<usize> = sel.iter().copied().filter(|&i| !tgt.smith_modulus(i).is_zero()).collect();
        let mut cols: Vec<Vec<BigInt>> = (0..n)
            .map(|j| sel.iter().map(|&i| phi.get(i, j).clone()).collect())
            .collect();
        for &i in &torsion {
            let mut c = vec![BigInt::zero(); s];
            let k = sel.iter().position(|&x| x == i).expect("selected");
            c[k] = tgt.smith_modulus(i);
            cols.push(c);
        }
        let ker = integer_kernel(s, &cols);
        let k_basis = Hnf::from_vectors(n, ker.into_iter().map(|z| z[..n].to_vec()));
        let kr = k_basis.rank();
        let mut rel = Vec::new();
        for l in src.lattice.basis() {
            rel.push(k_basis.solve(l).ok_or_else(|| {
                Error::BadArgument("relation lattice is not contained in the kernel".into())
            })?);
        }
        let raw = PresentedGroup::new(kr, rel, Vec::new())?;
        let (group, to, from) = raw.simplified()?;
        // inclusion: reduced generator -> K-basis coefficients -> ambient coordinates
        let kmat = IntMatrix::from_columns(n, k_basis.basis())?;
        let incl = kmat.mul(from.matrix())?;
        let mut kernel = Kernel {
            inclusion: GroupHom::new(group.clone(), src.clone(), incl.clone())?,
            group,
            basis: k_basis,
            to_reduced: to.matrix().clone(),
        };
        if !src.action.is_empty() && self.is_equivariant()? {
            let mut action = Vec::new();
            for a in &src.action {
                let mut cols = Vec::new();
                for j in 0..kernel.group.n {
                    let moved = a.apply(&incl.column(j))?;
                    cols.push(kernel.lift_coords(&moved)?);
                }
                action.push(IntMatrix::from_columns(kernel.group.n, &cols)?);
            }
            let g = PresentedGroup::new(kernel.group.n, kernel.group.relators.clone(), action)?;
            kernel.inclusion = GroupHom::new(g.clone(), src.clone(), incl)?;
            kernel.group = g;
        }
        Ok(kernel)
    }
}

/// Kernel of a homomorphism, presented on its own generators.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub group: Arc<PresentedGroup>,
    pub inclusion: GroupHom,
    basis: Hnf,
    to_reduced: IntMatrix,
}

impl Kernel {
    fn lift_coords(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        let c = self.basis.solve(x).ok_or(Error::ForeignElement)?;
        self.to_reduced.apply(&c)
    }

    /// Expresses an ambient element lying in the kernel in kernel coordinates.
    pub fn lift(&self, x: &GroupElement) -> Result<GroupElement> {
        if !Arc::ptr_eq(&x.group, self.inclusion.target()) {
            return Err(Error::ParentMismatch);
        }
        let c = self.lift_coords(&x.coords)?;
        self.group.elem(c)
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.basis.contains(&x.coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn presentations() {
        let g = PresentedGroup::present(2, &IntMatrix::diagonal(&[2, 3], 2)).unwrap();
        assert_eq!(g.invariant_factors(), vec![b(6)]);
        assert_eq!(g.order(), Some(b(6)));
        assert_eq!(g.gen(0).order(), Some(b(2)));
        assert_eq!(g.gen(0).add(&g.gen(1)).unwrap().order(), Some(b(6)));

        let z = PresentedGroup::present(1, &IntMatrix::zeros(1, 0)).unwrap();
        assert_eq!(z.free_rank(), 1);
        assert!(z.invariant_factors().is_empty());

        let m = PresentedGroup::present(2, &IntMatrix::from_i64(2, 2, &[2, 0, 0, 0]).unwrap()).unwrap();
        assert_eq!(m.invariant_factors(), vec![b(2)]);
        assert_eq!(m.free_rank(), 1);
    }

    #[test]
    fn homs_and_kernels() {
        let z2 = PresentedGroup::cyclic(2);
        let z = PresentedGroup::free(1);
        let bad = GroupHom::new(z2.clone(), z.clone(), IntMatrix::identity(1));
        assert_eq!(bad.unwrap_err(), Error::RelationNotKilled(0));
        let ok = GroupHom::new(z.clone(), z2.clone(), IntMatrix::identity(1)).unwrap();
        let k = ok.kernel().unwrap();
        assert_eq!(k.group.free_rank(), 1);
        let two = z.elem_i64(&[2]).unwrap();
        assert!(k.contains(&two));
        let l = k.lift(&two).unwrap();
        assert_eq!(k.inclusion.apply(&l).unwrap(), two);

        let double = GroupHom::new(z.clone(), z.clone(), IntMatrix::diagonal(&[2], 1)).unwrap();
        assert!(double.kernel().unwrap().group.is_trivial());

        let (q, p) = z.quotient(&[two.clone()]).unwrap();
        assert_eq!(q.invariant_factors(), vec![b(2)]);
        assert!(p.apply(&two).unwrap().is_zero());
    }

    #[test]
    fn kernel_of_projection_between_finite_groups() {
        // Z/4 x Z/6 -> Z/2, (a, b) -> a + b
        let g = PresentedGroup::present(2, &IntMatrix::diagonal(&[4, 6], 2)).unwrap();
        let t = PresentedGroup::cyclic(2);
        let h = GroupHom::new(g.clone(), t, IntMatrix::from_i64(1, 2, &[1, 1]).unwrap()).unwrap();
        let k = h.kernel().unwrap();
        assert_eq!(k.group.order(), Some(b(12)));
        assert_eq!(k.group.invariant_factors(), vec![b(12)]);
        for j in 0..k.group.n_gens() {
            let x = k.inclusion.apply(&k.group.gen(j)).unwrap();
            assert!(h.apply(&x).unwrap().is_zero());
        }
    }

    #[test]
    fn action_checks() {
        let swap = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]).unwrap();
        assert!(PresentedGroup::new(2, vec![], vec![swap]).is_ok());
        let shear = IntMatrix::from_i64(2, 2, &[1, 1, 0, 1]).unwrap();
        assert_eq!(PresentedGroup::new(2, vec![], vec![shear]).unwrap_err(), Error::ActionNotInvolution(0));
        let dbl = IntMatrix::from_i64(1, 1, &[-1]).unwrap();
        let g = PresentedGroup::new(1, vec![vec![b(3)]], vec![dbl]).unwrap();
        assert_eq!(g.gen(0).act(0).unwrap(), g.elem_i64(&[2]).unwrap());
        let stretch = IntMatrix::from_i64(2, 2, &[1, 0, 0, -1]).unwrap();
        let h = PresentedGroup::new(2, vec![vec![b(1), b(1)]], vec![stretch]);
        assert_eq!(h.unwrap_err(), Error::ActionNotStabilizing(0));
    }
}
