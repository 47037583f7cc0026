use rand::Rng;

use crate::algebra::Representation;
use crate::error::Result;
use crate::exactla::{FieldSpec, Matrix, Scalar};

use super::cover::{socle, top};
use super::maps::{hom_basis, image, kernel, ModuleMap};

/// Knobs for the randomized and exhaustive steps of the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub random_trials: usize,
    /// Largest `|k|^{dim End}` for which End is enumerated outright.
    pub enumeration_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { random_trials: 32, enumeration_budget: 4096 }
    }
}

/// Why a factor was declared indecomposable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Indecomposable {
    OneDimensionalEnd,
    SimpleTop,
    SimpleSocle,
    /// End has a nilpotent ideal of codimension one (the trace-form radical).
    LocalEnd,
    /// No nontrivial idempotent among all elements of End.
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Representation,
    /// Into the decomposed module.
    pub inclusion: ModuleMap,
    /// Out of the decomposed module; `projection ∘ inclusion = id`.
    pub projection: ModuleMap,
    /// `None` when no certificate was found.
    pub certificate: Option<Indecomposable>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
}

impl Decomposition {
    /// Every summand certified indecomposable.
    pub fn is_complete(&self) -> bool {
        self.summands.iter().all(|s| s.certificate.is_some())
    }

    pub fn undetermined(&self) -> Vec<usize> {
        (0..self.summands.len()).filter(|&i| self.summands[i].certificate.is_none()).collect()
    }

    /// Groups certified summands into isomorphism classes:
    /// `(index of first representative, multiplicity)`. `None` if incomplete.
    pub fn multiplicities(&self) -> Result<Option<Vec<(usize, usize)>>> {
        if !self.is_complete() {
            return Ok(None);
        }
        let mut classes: Vec<(usize, usize)> = Vec::new();
        'outer: for (i, s) in self.summands.iter().enumerate() {
            for class in classes.iter_mut() {
                if indecomposables_isomorphic(&self.summands[class.0].module, &s.module)?.is_some() {
                    class.1 += 1;
                    continue 'outer;
                }
            }
            classes.push((i, 1));
        }
        Ok(Some(classes))
    }
}

/// For indecomposable `X`, `Y`: the non-isomorphisms form a proper subspace
/// of `Hom(X, Y)` when `X ≅ Y`, so some canonical basis element is invertible.
pub fn indecomposables_isomorphic(x: &Representation, y: &Representation) -> Result<Option<ModuleMap>> {
    if x.dims() != y.dims() {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(ModuleMap::zero(x, y)?));
    }
    Ok(hom_basis(x, y)?.into_iter().find(ModuleMap::is_iso))
}

struct Piece {
    module: Representation,
    inclusion: ModuleMap,
    projection: ModuleMap,
}

/// Fitting decomposition `M = ker f^d ⊕ im f^d`, `d = dim M`, when it is
/// nontrivial.
fn fitting_split(f: &ModuleMap) -> Result<Option<(Piece, Piece)>> {
    let m = f.source();
    let d = m.total_dim();
    let g = f.pow(d);
    let r = g.rank();
    if r == 0 || r == d {
        return Ok(None);
    }
    let (k, ik) = kernel(&g)?;
    let (i, ii) = image(&g)?;
    let mut pk = Vec::new();
    let mut pi = Vec::new();
    for v in 0..m.dims().len() {
        let change = ik.comp(v).hstack(ii.comp(v))?;
        let inv = change.inverse().expect("Fitting decomposition is direct");
        let kd = k.dims()[v];
        pk.push(inv.block(0, 0, kd, m.dims()[v]));
        pi.push(inv.block(kd, 0, i.dims()[v], m.dims()[v]));
    }
    let pk = ModuleMap::new_unchecked(m.clone(), k.clone(), pk)?;
    let pi = ModuleMap::new_unchecked(m.clone(), i.clone(), pi)?;
    Ok(Some((Piece { module: k, inclusion: ik, projection: pk }, Piece { module: i, inclusion: ii, projection: pi })))
}

/// Values `c` with `f - c·id` singular at some vertex: all of them over a
/// small prime field, the diagonal entries otherwise.
fn shift_candidates(f: &ModuleMap) -> Vec<Scalar> {
    let field = f.source().algebra().field();
    let mut out: Vec<Scalar> = Vec::new();
    match field.order() {
        Some(p) if p <= 257 => {
            for c in field.elements().into_iter().flatten() {
                if c.is_zero() {
                    continue;
                }
                let singular = f.comps().iter().any(|m| {
                    !m.sub(&Matrix::identity(field, m.rows()).scale(&c)).map(|x| x.is_invertible()).unwrap_or(true)
                });
                if singular {
                    out.push(c);
                }
            }
        }
        _ => {
            for m in f.comps() {
                for i in 0..m.rows() {
                    let c = m.get(i, i);
                    if !c.is_zero() && !out.contains(c) {
                        out.push(c.clone());
                    }
                }
            }
        }
    }
    out
}

fn shifted(f: &ModuleMap, c: &Scalar) -> Result<ModuleMap> {
    f.add(&ModuleMap::identity(f.source()).scale(&f.source().algebra().field().neg(c)))
}

fn try_candidate(f: &ModuleMap, shifts: bool) -> Result<Option<(Piece, Piece)>> {
    if let Some(s) = fitting_split(f)? {
        return Ok(Some(s));
    }
    if shifts {
        for c in shift_candidates(f) {
            if let Some(s) = fitting_split(&shifted(f, &c)?)? {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

fn search_split<R: Rng + ?Sized>(
    end: &[ModuleMap],
    field: &FieldSpec,
    opts: &SearchOptions,
    rng: &mut R,
) -> Result<Option<(Piece, Piece)>> {
    for f in end {
        if let Some(s) = try_candidate(f, true)? {
            return Ok(Some(s));
        }
    }
    for i in 0..end.len() {
        for j in i + 1..end.len() {
            if let Some(s) = try_candidate(&end[i].add(&end[j])?, false)? {
                return Ok(Some(s));
            }
        }
    }
    for _ in 0..opts.random_trials {
        let mut f = end[0].scale(&field.random(rng));
        for e in &end[1..] {
            f = f.add(&e.scale(&field.random(rng)))?;
        }
        if let Some(s) = try_candidate(&f, true)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn combine(end: &[ModuleMap], coef: &[Scalar]) -> Result<ModuleMap> {
    let mut f = end[0].scale(&coef[0]);
    for (e, c) in end[1..].iter().zip(&coef[1..]) {
        f = f.add(&e.scale(c))?;
    }
    Ok(f)
}

/// Basis of the span of the given maps (all `M -> M`).
fn span_basis(m: &Representation, maps: &[ModuleMap]) -> Result<Vec<ModuleMap>> {
    let field = m.algebra().field();
    let n = super::maps::hom_coords(m, m);
    let cols: Vec<Vec<Scalar>> = maps.iter().map(ModuleMap::flatten).collect();
    let basis = Matrix::from_columns(field, n, &cols).column_space();
    (0..basis.cols()).map(|c| ModuleMap::from_flat(m, m, &basis.column(c))).collect()
}

/// Whether the trace-form radical of End is a nilpotent ideal of
/// codimension one, which makes End local.
fn end_is_local(m: &Representation, end: &[ModuleMap]) -> Result<bool> {
    let field = m.algebra().field();
    let n = end.len();
    let trace = |f: &ModuleMap| f.comps().iter().fold(field.zero(), |acc, c| field.add(&acc, &c.trace()));
    let mut gram = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, trace(&end[i].after(&end[j])?));
        }
    }
    let kernel = gram.kernel_basis();
    if kernel.len() + 1 != n {
        return Ok(false);
    }
    let rad: Vec<ModuleMap> = kernel.iter().map(|c| combine(end, c)).collect::<Result<_>>()?;
    let mut power = rad.clone();
    for _ in 0..=m.total_dim() {
        if power.is_empty() {
            return Ok(true);
        }
        let mut next = Vec::new();
        for x in &power {
            for y in &rad {
                let p = x.after(y)?;
                if !p.is_zero() {
                    next.push(p);
                }
            }
        }
        let next = span_basis(m, &next)?;
        if next.len() >= power.len() {
            return Ok(false);
        }
        power = next;
    }
    Ok(power.is_empty())
}

enum Enumerated {
    NoIdempotent,
    Split(Box<(Piece, Piece)>),
    OverBudget,
}

fn enumerate_idempotents(m: &Representation, end: &[ModuleMap], budget: u64) -> Result<Enumerated> {
    let field = m.algebra().field();
    let Some(q) = field.order() else {
        return Ok(Enumerated::OverBudget);
    };
    let total = match q.checked_pow(end.len() as u32) {
        Some(t) if t <= budget => t,
        _ => return Ok(Enumerated::OverBudget),
    };
    let id = ModuleMap::identity(m);
    for code in 0..total {
        let mut x = code;
        let coef: Vec<Scalar> = (0..end.len())
            .map(|_| {
                let c = field.from_i64((x % q) as i64);
                x /= q;
                c
            })
            .collect();
        let e = combine(end, &coef)?;
        if e.is_zero() || e == id {
            continue;
        }
        if e.after(&e)? == e {
            if let Some(s) = fitting_split(&e)? {
                return Ok(Enumerated::Split(Box::new(s)));
            }
        }
    }
    Ok(Enumerated::NoIdempotent)
}

/// Krull–Schmidt decomposition by Fitting splitting. Factors that resist
/// every candidate and every certificate are returned uncertified.
pub fn decompose<R: Rng + ?Sized>(m: &Representation, opts: &SearchOptions, rng: &mut R) -> Result<Decomposition> {
    let field = m.algebra().field().clone();
    let mut work =
        vec![Piece { module: m.clone(), inclusion: ModuleMap::identity(m), projection: ModuleMap::identity(m) }];
    let mut done = Vec::new();
    while let Some(piece) = work.pop() {
        let x = &piece.module;
        if x.is_zero() {
            continue;
        }
        let mut finish = |cert: Option<Indecomposable>, piece: Piece| {
            done.push(Summand {
                module: piece.module,
                inclusion: piece.inclusion,
                projection: piece.projection,
                certificate: cert,
            });
        };
        if top(x)?.iter().sum::<usize>() == 1 {
            finish(Some(Indecomposable::SimpleTop), piece);
            continue;
        }
        if socle(x)?.iter().sum::<usize>() == 1 {
            finish(Some(Indecomposable::SimpleSocle), piece);
            continue;
        }
        let end = hom_basis(x, x)?;
        if end.len() == 1 {
            finish(Some(Indecomposable::OneDimensionalEnd), piece);
            continue;
        }
        let split = match search_split(&end, &field, opts, rng)? {
            Some(s) => Some(s),
            None if end_is_local(x, &end)? => {
                finish(Some(Indecomposable::LocalEnd), piece);
                continue;
            }
            None => match enumerate_idempotents(x, &end, opts.enumeration_budget)? {
                Enumerated::Split(s) => Some(*s),
                Enumerated::NoIdempotent => {
                    finish(Some(Indecomposable::Exhaustive), piece);
                    continue;
                }
                Enumerated::OverBudget => None,
            },
        };
        match split {
            Some((a, b)) => {
                // Push in reverse so the kernel part is processed first.
                for part in [b, a] {
                    work.push(Piece {
                        inclusion: piece.inclusion.after(&part.inclusion)?,
                        projection: part.projection.after(&piece.projection)?,
                        module: part.module,
                    });
                }
            }
            None => finish(None, piece),
        }
    }
    Ok(Decomposition { summands: done })
}
