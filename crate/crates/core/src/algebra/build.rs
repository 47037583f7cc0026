use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar};

use super::presentation::AlgebraPresentation;
use super::quiver::{Path, Quiver};

/// Hard cap on the number of enumerated paths.
const MAX_PATHS: usize = 200_000;

/// Sparse coordinate vector over the basis of an algebra.
pub type Coords = Vec<(usize, Scalar)>;

/// A finite-dimensional bounded quiver algebra `kQ / (relations + J^N)`.
///
/// Products follow the left-module convention: `x * y` means apply `y`
/// first, then `x`. For paths, `product(p, q)` is nonzero only if `q` ends
/// where `p` starts.
pub struct Algebra {
    presentation: AlgebraPresentation,
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    reductions: HashMap<Path, Coords>,
    structure: Vec<Vec<Coords>>,
    by_ends: Vec<Vec<Vec<usize>>>,
    fingerprint: [u8; 32],
    opposite: OnceLock<Arc<Algebra>>,
    mirror_of: OnceLock<Weak<Algebra>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.presentation.name)
            .field("field", &self.presentation.field)
            .field("vertices", &self.presentation.quiver.num_vertices())
            .field("dim", &self.basis.len())
            .finish()
    }
}

fn enumerate_paths(quiver: &Quiver, max_len: usize) -> Result<Vec<Vec<Path>>> {
    let mut levels: Vec<Vec<Path>> = vec![(0..quiver.num_vertices()).map(Path::trivial).collect()];
    let mut total = levels[0].len();
    for len in 1..=max_len {
        let mut next = Vec::new();
        for p in &levels[len - 1] {
            for (ai, a) in quiver.arrows().iter().enumerate() {
                if a.source == p.target() {
                    let mut arrows = p.arrows().to_vec();
                    arrows.push(ai);
                    next.push(Path { source: p.source(), target: a.target, arrows });
                }
            }
        }
        next.sort();
        total += next.len();
        if total > MAX_PATHS {
            return Err(Error::Presentation(format!(
                "more than {MAX_PATHS} paths of length <= {max_len}; the nilpotency bound is too large for this quiver"
            )));
        }
        levels.push(next);
    }
    Ok(levels)
}

/// Ideal elements `w * rel * u` truncated to terms of length `<= max_len`,
/// grouped by `(source, target)` block.
fn ideal_elements(
    pres: &AlgebraPresentation,
    levels: &[Vec<Path>],
    max_len: usize,
) -> BTreeMap<(usize, usize), Vec<BTreeMap<Path, Scalar>>> {
    let field = &pres.field;
    let mut blocks: BTreeMap<(usize, usize), Vec<BTreeMap<Path, Scalar>>> = BTreeMap::new();
    for rel in &pres.relations {
        let base = rel.min_len();
        if base > max_len {
            continue;
        }
        let before: Vec<&Path> =
            levels.iter().take(max_len - base + 1).flatten().filter(|w| w.target() == rel.source()).collect();
        for w in &before {
            let room = max_len - base - w.len();
            let after = levels.iter().take(room + 1).flatten().filter(|u| u.source() == rel.target());
            for u in after {
                let mut elem = BTreeMap::new();
                for t in &rel.terms {
                    let full = w.then(&t.path).and_then(|x| x.then(u)).expect("endpoints match");
                    if full.len() <= max_len {
                        let e = elem.entry(full).or_insert_with(|| field.zero());
                        *e = field.add(e, &t.coef);
                    }
                }
                elem.retain(|_, c: &mut Scalar| !c.is_zero());
                if !elem.is_empty() {
                    blocks.entry((w.source(), u.target())).or_default().push(elem);
                }
            }
        }
    }
    blocks
}

/// Rows of `elems` as a matrix whose columns are `cols` (largest path first).
fn block_matrix(field: &FieldSpec, cols: &[&Path], elems: &[BTreeMap<Path, Scalar>]) -> Matrix {
    let pos: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut m = Matrix::zeros(field, elems.len(), cols.len());
    for (r, e) in elems.iter().enumerate() {
        for (p, c) in e {
            if let Some(&j) = pos.get(p) {
                m.set(r, j, c.clone());
            }
        }
    }
    m
}

impl Algebra {
    /// Realizes the algebra: computes a path basis, reduction of every short
    /// path onto it, and the structure constants.
    pub fn build(presentation: AlgebraPresentation) -> Result<Arc<Algebra>> {
        let pres = presentation.normalized()?;
        let n = pres.nilpotency_bound;
        let field = pres.field.clone();
        let levels = enumerate_paths(&pres.quiver, n)?;
        let nv = pres.quiver.num_vertices();

        // J^N must already lie in (relations) + J^(N+1).
        let wide = ideal_elements(&pres, &levels, n);
        let mut long_blocks: BTreeMap<(usize, usize), Vec<&Path>> = BTreeMap::new();
        for p in &levels[n] {
            long_blocks.entry((p.source(), p.target())).or_default().push(p);
        }
        for (&(s, t), long) in &long_blocks {
            let mut cols: Vec<&Path> = levels.iter().flatten().filter(|p| p.source() == s && p.target() == t).collect();
            cols.sort_by(|a, b| b.cmp(a));
            let rows = block_matrix(&field, &cols, wide.get(&(s, t)).map_or(&[][..], |v| v.as_slice()));
            let units: Vec<_> = long.iter().map(|p| BTreeMap::from([((*p).clone(), field.one())])).collect();
            let extended = rows.vstack(&block_matrix(&field, &cols, &units))?;
            if extended.rank() != rows.rank() {
                let witness = long
                    .iter()
                    .find(|p| {
                        let unit = block_matrix(&field, &cols, &[BTreeMap::from([((**p).clone(), field.one())])]);
                        rows.vstack(&unit).map(|m| m.rank() != rows.rank()).unwrap_or(true)
                    })
                    .expect("some long path escapes the ideal");
                return Err(Error::NilpotencyBound {
                    bound: n,
                    detail: format!(
                        "the path {} of length {n} does not reduce to zero modulo the relations",
                        pres.quiver.describe_path(witness)
                    ),
                });
            }
        }

        // Basis: standard paths of length < N with respect to the order in
        // which the largest term of an ideal element is its leading term.
        let narrow = ideal_elements(&pres, &levels, n - 1);
        let short: Vec<&Path> = levels.iter().take(n).flatten().collect();
        let mut blocks: BTreeMap<(usize, usize), Vec<&Path>> = BTreeMap::new();
        for p in &short {
            blocks.entry((p.source(), p.target())).or_default().push(p);
        }
        let mut basis: Vec<Path> = Vec::new();
        let mut reductions_raw: Vec<(Path, Vec<(Path, Scalar)>)> = Vec::new();
        for (key, mut cols) in blocks {
            cols.sort_by(|a, b| b.cmp(a));
            let rows = block_matrix(&field, &cols, narrow.get(&key).map_or(&[][..], |v| v.as_slice()));
            let r = rows.rref();
            let mut is_pivot = vec![false; cols.len()];
            for &p in &r.pivots {
                is_pivot[p] = true;
            }
            for (j, p) in cols.iter().enumerate() {
                if !is_pivot[j] {
                    basis.push((*p).clone());
                }
            }
            for (i, &pc) in r.pivots.iter().enumerate() {
                let combo: Vec<(Path, Scalar)> = (0..cols.len())
                    .filter(|&j| !is_pivot[j] && !r.matrix.get(i, j).is_zero())
                    .map(|j| (cols[j].clone(), field.neg(r.matrix.get(i, j))))
                    .collect();
                reductions_raw.push((cols[pc].clone(), combo));
            }
        }
        basis.sort();
        let basis_index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut reductions: HashMap<Path, Coords> = HashMap::new();
        for (i, p) in basis.iter().enumerate() {
            reductions.insert(p.clone(), vec![(i, field.one())]);
        }
        for (p, combo) in reductions_raw {
            let mut coords: Coords = combo.into_iter().map(|(q, c)| (basis_index[&q], c)).collect();
            coords.sort_by_key(|(i, _)| *i);
            reductions.insert(p, coords);
        }

        let mut by_ends = vec![vec![Vec::new(); nv]; nv];
        for (i, p) in basis.iter().enumerate() {
            by_ends[p.source()][p.target()].push(i);
        }

        let dim = basis.len();
        let mut structure = vec![vec![Vec::new(); dim]; dim];
        for (i, left) in basis.iter().enumerate() {
            for (j, right) in basis.iter().enumerate() {
                if let Some(prod) = right.then(left) {
                    if prod.len() < n {
                        structure[i][j] = reductions[&prod].clone();
                    }
                }
            }
        }

        let fingerprint: [u8; 32] = Sha256::digest(pres.canonical_text().as_bytes()).into();
        Ok(Arc::new(Algebra {
            presentation: pres,
            basis,
            basis_index,
            reductions,
            structure,
            by_ends,
            fingerprint,
            opposite: OnceLock::new(),
            mirror_of: OnceLock::new(),
        }))
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn name(&self) -> &str {
        self.presentation.name.as_deref().unwrap_or("algebra")
    }

    pub fn field(&self) -> &FieldSpec {
        &self.presentation.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn num_vertices(&self) -> usize {
        self.presentation.quiver.num_vertices()
    }

    pub fn num_arrows(&self) -> usize {
        self.presentation.quiver.arrows().len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    /// Basis elements forming the radical: every nontrivial basis path.
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.basis[i].is_trivial()).collect()
    }

    /// Index of the primitive idempotent at `v` (the trivial path).
    pub fn idempotent(&self, v: usize) -> usize {
        self.basis_index[&Path::trivial(v)]
    }

    /// Basis indices of paths from `s` to `t`, in basis order.
    pub fn paths_between(&self, s: usize, t: usize) -> &[usize] {
        &self.by_ends[s][t]
    }

    /// Residue of an arbitrary path in basis coordinates.
    pub fn reduce(&self, p: &Path) -> Coords {
        if p.len() >= self.presentation.nilpotency_bound {
            return Vec::new();
        }
        self.reductions.get(p).cloned().unwrap_or_default()
    }

    /// Structure constants of `basis[left] * basis[right]`.
    pub fn product(&self, left: usize, right: usize) -> &Coords {
        &self.structure[left][right]
    }

    pub fn fingerprint(&self) -> &[u8; 32] {
        &self.fingerprint
    }

    pub fn same_as(&self, other: &Algebra) -> bool {
        std::ptr::eq(self, other) || self.fingerprint == other.fingerprint
    }

    /// The opposite algebra, cached. Taking the opposite twice returns the
    /// original `Arc` while it is alive.
    pub fn opposite(self: &Arc<Self>) -> Result<Arc<Algebra>> {
        if let Some(orig) = self.mirror_of.get().and_then(Weak::upgrade) {
            return Ok(orig);
        }
        if let Some(op) = self.opposite.get() {
            return Ok(op.clone());
        }
        let op = Algebra::build(self.presentation.opposite())?;
        let _ = op.mirror_of.set(Arc::downgrade(self));
        Ok(self.opposite.get_or_init(|| op).clone())
    }

    /// Multiplication as a dense `dim x dim` matrix for left multiplication by
    /// a basis element.
    pub fn left_multiplication(&self, left: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim(), self.dim());
        for j in 0..self.dim() {
            for (k, c) in self.product(left, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presentation::{Relation, Term};

    fn f() -> FieldSpec {
        FieldSpec::prime(101).unwrap()
    }

    fn a2() -> AlgebraPresentation {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
        AlgebraPresentation::new(f(), q, vec![], 2)
    }

    fn loop2() -> AlgebraPresentation {
        let q = Quiver::from_names(&["1"], &[("x", "1", "1")]).unwrap();
        let xx = q.path(&["x", "x"]).unwrap();
        AlgebraPresentation::new(f(), q, vec![Relation::monomial(&f(), xx)], 2)
    }

    fn check_associative(alg: &Algebra) {
        let field = alg.field();
        let mul = |x: &[(usize, Scalar)], y: &[(usize, Scalar)]| {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (i, a) in x {
                for (j, b) in y {
                    for (k, c) in alg.product(*i, *j) {
                        let e = acc.entry(*k).or_insert_with(|| field.zero());
                        *e = field.add(e, &field.mul(&field.mul(a, b), c));
                    }
                }
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>()
        };
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                for k in 0..alg.dim() {
                    let one = |x| vec![(x, field.one())];
                    let lhs = mul(&mul(&one(i), &one(j)), &one(k));
                    let rhs = mul(&one(i), &mul(&one(j), &one(k)));
                    assert_eq!(lhs, rhs, "associativity at ({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn a2_basis() {
        let alg = Algebra::build(a2()).unwrap();
        assert_eq!(alg.dim(), 3);
        let names: Vec<String> = alg.basis().iter().map(|p| alg.quiver().describe_path(p)).collect();
        assert_eq!(names, ["e1", "e2", "a"]);
        check_associative(&alg);
    }

    #[test]
    fn loop2_basis() {
        let alg = Algebra::build(loop2()).unwrap();
        assert_eq!(alg.dim(), 2);
        let x = alg.basis_index(&alg.quiver().path(&["x"]).unwrap()).unwrap();
        assert!(alg.product(x, x).is_empty());
        check_associative(&alg);
    }

    #[test]
    fn identity_is_sum_of_idempotents() {
        let alg = Algebra::build(loop2()).unwrap();
        for j in 0..alg.dim() {
            let mut total = Vec::new();
            for v in 0..alg.num_vertices() {
                total.extend(alg.product(alg.idempotent(v), j).iter().cloned());
            }
            assert_eq!(total, vec![(j, alg.field().one())]);
        }
    }

    #[test]
    fn commutativity_relation_picks_smaller_path() {
        // Square 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd.
        let q = Quiver::from_names(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let field = f();
        let rel = Relation::new(vec![
            Term { coef: field.one(), path: q.path(&["a", "b"]).unwrap() },
            Term { coef: field.from_i64(-1), path: q.path(&["c", "d"]).unwrap() },
        ]);
        let alg = Algebra::build(AlgebraPresentation::new(field.clone(), q.clone(), vec![rel], 3)).unwrap();
        assert_eq!(alg.dim(), 4 + 4 + 1);
        let ab = q.path(&["a", "b"]).unwrap();
        let cd = q.path(&["c", "d"]).unwrap();
        assert!(alg.basis_index(&ab).is_some());
        assert_eq!(alg.reduce(&cd), vec![(alg.basis_index(&ab).unwrap(), field.one())]);
        check_associative(&alg);
        let op = alg.as_ref().presentation().opposite();
        let op = Algebra::build(op).unwrap();
        assert_eq!(op.dim(), alg.dim());
        check_associative(&op);
    }

    #[test]
    fn short_relation_rejected() {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let rel = Relation::monomial(&f(), q.path(&["a"]).unwrap());
        let err = Algebra::build(AlgebraPresentation::new(f(), q, vec![rel], 2)).unwrap_err();
        assert!(matches!(err, Error::Presentation(_)), "{err}");
    }

    #[test]
    fn nilpotency_bound_checked() {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let err = Algebra::build(AlgebraPresentation::new(f(), q, vec![], 1)).unwrap_err();
        assert!(matches!(err, Error::NilpotencyBound { bound: 1, .. }), "{err}");
        let q = Quiver::from_names(&["1"], &[("x", "1", "1")]).unwrap();
        let x3 = q.path(&["x", "x", "x"]).unwrap();
        let err =
            Algebra::build(AlgebraPresentation::new(f(), q.clone(), vec![Relation::monomial(&f(), x3.clone())], 2))
                .unwrap_err();
        assert!(matches!(err, Error::NilpotencyBound { .. }));
        let alg = Algebra::build(AlgebraPresentation::new(f(), q, vec![Relation::monomial(&f(), x3)], 3)).unwrap();
        assert_eq!(alg.dim(), 3);
    }

    #[test]
    fn double_opposite_is_identical() {
        let alg = Algebra::build(AlgebraPresentation::new(
            f(),
            Quiver::from_names(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap(),
            vec![],
            3,
        ))
        .unwrap();
        let op = alg.opposite().unwrap();
        assert_eq!(op.dim(), alg.dim());
        assert!(!op.same_as(&alg));
        let back = op.opposite().unwrap();
        assert!(Arc::ptr_eq(&back, &alg));
        let rebuilt = Algebra::build(op.presentation().opposite()).unwrap();
        assert!(rebuilt.same_as(&alg));
        assert_eq!(rebuilt.structure, alg.structure);
    }
}
