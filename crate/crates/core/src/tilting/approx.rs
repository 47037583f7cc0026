use crate::algebra::{direct_sum, Representation};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::repmod::{cokernel, column_map, decompose, hom_basis, in_add, AddWitness, ModuleMap};
use crate::Engine;

/// One representative per isomorphism class of indecomposable summands of
/// `T`, in decomposition order. Falls back to `[T]` when the decomposition
/// is not certified.
pub(crate) fn basic_summands(engine: &Engine, t: &Representation) -> Result<Vec<Representation>> {
    if t.is_zero() {
        return Ok(Vec::new());
    }
    let d = decompose(t, &engine.search_options(), &mut engine.rng())?;
    Ok(match d.multiplicities()? {
        Some(classes) => classes.into_iter().map(|(i, _)| d.summands[i].module.clone()).collect(),
        None => vec![t.clone()],
    })
}

/// `φ: X -> T_0` with `Hom(φ, T)` surjective, `T_0` a sum of summands of `T`.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: ModuleMap,
    /// Index into the basic summands of `T` of each copy in `T_0`, in order.
    pub copies: Vec<usize>,
}

/// Left `add T`-approximation from the canonical hom bases, pruned greedily
/// in summand order while every `Hom(X, U)` remains reachable.
pub fn left_add_approximation(engine: &Engine, x: &Representation, t: &Representation) -> Result<Approximation> {
    x.same_algebra(t)?;
    let alg = x.algebra().clone();
    let field = alg.field();
    let basics = basic_summands(engine, t)?;
    // between[s][u] is a basis of Hom(U_s, U_u)
    let mut between = Vec::with_capacity(basics.len());
    for a in &basics {
        between.push(basics.iter().map(|b| hom_basis(a, b)).collect::<Result<Vec<_>>>()?);
    }
    let targets: Vec<usize> = basics.iter().map(|u| hom_basis(x, u).map(|h| h.len())).collect::<Result<_>>()?;
    let mut parts: Vec<(usize, ModuleMap)> = Vec::new();
    for (s, u) in basics.iter().enumerate() {
        for f in hom_basis(x, u)? {
            parts.push((s, f));
        }
    }
    let reaches_all = |parts: &[(usize, ModuleMap)]| -> Result<bool> {
        for (u, &need) in targets.iter().enumerate() {
            let mut cols = Vec::new();
            for (s, f) in parts {
                for g in &between[*s][u] {
                    cols.push(g.after(f)?.flatten());
                }
            }
            let len = cols.first().map_or(0, Vec::len);
            if Matrix::from_columns(field, len, &cols).rank() != need {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut k = 0;
    while k < parts.len() {
        let mut trial = parts.clone();
        trial.remove(k);
        if reaches_all(&trial)? {
            parts = trial;
        } else {
            k += 1;
        }
    }
    if !reaches_all(&parts)? {
        return Err(Error::OracleMismatch("approximation does not reach Hom(X, T)".into()));
    }
    let modules: Vec<Representation> = parts.iter().map(|(s, _)| basics[*s].clone()).collect();
    let t0 = direct_sum(&alg, &modules)?;
    let maps: Vec<ModuleMap> = parts.iter().map(|(_, f)| f.clone()).collect();
    let map = column_map(x, &t0, &maps)?;
    Ok(Approximation { map, copies: parts.into_iter().map(|(s, _)| s).collect() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoresolutionFailure {
    /// The approximation of the stage's cokernel is not injective.
    NotInjective {
        stage: usize,
    },
    MaxlenExceeded {
        maxlen: usize,
    },
}

impl std::fmt::Display for CoresolutionFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoresolutionFailure::NotInjective { stage } => write!(f, "approximation not injective at stage {stage}"),
            CoresolutionFailure::MaxlenExceeded { maxlen } => write!(f, "no cokernel in add T within {maxlen} steps"),
        }
    }
}

/// `0 -> X -> T_0 -> ... -> T_n -> 0` built from approximations.
#[derive(Clone, Debug)]
pub struct CoresolutionResult {
    pub source: Representation,
    /// `T_0, ..., T_n` on success; the terms built so far on failure.
    pub terms: Vec<Representation>,
    /// `d_0: X -> T_0` and `d_i: T_{i-1} -> T_i`.
    pub maps: Vec<ModuleMap>,
    /// `T_i` as a summand of copies of `T`.
    pub witnesses: Vec<AddWitness>,
    /// The images `Im d_i ⊆ T_i` for `i ≥ 1`, which are the cokernels.
    pub images: Vec<Representation>,
    pub failure: Option<CoresolutionFailure>,
}

impl CoresolutionResult {
    pub fn success(&self) -> bool {
        self.failure.is_none()
    }

    /// `n` in `0 -> X -> T_0 -> ... -> T_n -> 0`.
    pub fn length(&self) -> Option<usize> {
        self.success().then(|| self.terms.len() - 1)
    }

    /// Consecutive composites vanish, the sequence is exact by rank count at
    /// every vertex, and every add-witness composes to the identity.
    pub fn verify(&self) -> Result<bool> {
        if !self.success() {
            return Ok(false);
        }
        for w in &self.witnesses {
            if !w.verify()? {
                return Ok(false);
            }
        }
        let nv = self.source.dims().len();
        if !self.maps[0].is_injective() || !self.maps.last().expect("nonempty").is_surjective() {
            return Ok(false);
        }
        for i in 1..self.maps.len() {
            let (f, g) = (&self.maps[i - 1], &self.maps[i]);
            if !g.after(f)?.is_zero() {
                return Ok(false);
            }
            for v in 0..nv {
                if g.source().dims()[v] - g.comp(v).rank() != f.comp(v).rank() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Iterates left `add T`-approximations from `X` until a cokernel lies in
/// `add T`, which then becomes the last term.
pub fn coresolution_in_add(
    engine: &Engine,
    x: &Representation,
    t: &Representation,
    maxlen: usize,
) -> Result<CoresolutionResult> {
    x.same_algebra(t)?;
    let mut out = CoresolutionResult {
        source: x.clone(),
        terms: Vec::new(),
        maps: Vec::new(),
        witnesses: Vec::new(),
        images: Vec::new(),
        failure: None,
    };
    let mut current = x.clone();
    // `into` maps the previous term onto `current`
    let mut into: Option<ModuleMap> = None;
    for stage in 0..=maxlen {
        let membership = in_add(&current, t)?;
        if membership.member {
            let witness = membership.witness.expect("member has a witness");
            let d = match &into {
                Some(p) => p.clone(),
                None => ModuleMap::identity(&current),
            };
            out.terms.push(current.clone());
            out.maps.push(d);
            out.witnesses.push(witness);
            return Ok(out);
        }
        let approx = left_add_approximation(engine, &current, t)?;
        if !approx.map.is_injective() {
            out.failure = Some(CoresolutionFailure::NotInjective { stage });
            return Ok(out);
        }
        let t_i = approx.map.target().clone();
        let witness =
            in_add(&t_i, t)?.witness.ok_or_else(|| Error::OracleMismatch("approximation term outside add T".into()))?;
        let d = match &into {
            Some(p) => approx.map.after(p)?,
            None => approx.map.clone(),
        };
        out.terms.push(t_i);
        out.maps.push(d);
        out.witnesses.push(witness);
        let (c, proj) = cokernel(&approx.map)?;
        out.images.push(c.clone());
        current = c;
        into = Some(proj);
    }
    out.failure = Some(CoresolutionFailure::MaxlenExceeded { maxlen });
    Ok(out)
}
