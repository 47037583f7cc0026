use serde_json::{json, Value};

use crate::algebra::{zero_module, Representation};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::repmod::{kernel, projective_cover, radical, ModuleMap, ProjectiveCover};

/// Minimal projective resolution `⋯ -> P_1 -> P_0 -> M -> 0`, computed
/// term by term and extendable.
#[derive(Clone, Debug)]
pub struct MinimalResolution {
    /// `Ω^0 M = M, Ω^1 M, …`; one more entry than `covers` unless the last
    /// computed syzygy is zero.
    syzygies: Vec<Representation>,
    /// `covers[k]: P_k -> Ω^k M`.
    covers: Vec<ProjectiveCover>,
    /// `inclusions[k]: Ω^{k+1} M -> P_k`.
    inclusions: Vec<ModuleMap>,
}

impl MinimalResolution {
    pub fn new(m: &Representation) -> Self {
        MinimalResolution { syzygies: vec![m.clone()], covers: Vec::new(), inclusions: Vec::new() }
    }

    /// Resolution with the terms `P_0..P_len` (fewer if it terminates).
    pub fn compute(m: &Representation, len: usize) -> Result<Self> {
        let mut r = MinimalResolution::new(m);
        r.extend_to(len)?;
        Ok(r)
    }

    pub fn extend_to(&mut self, len: usize) -> Result<()> {
        while self.covers.len() <= len && !self.terminated() {
            let last = self.syzygies.last().expect("nonempty");
            let cover = projective_cover(last)?;
            let (omega, incl) = kernel(&cover.map)?;
            self.covers.push(cover);
            self.inclusions.push(incl);
            self.syzygies.push(omega);
        }
        Ok(())
    }

    /// Whether `P_0..P_len` are all known.
    pub fn covers(&self, len: usize) -> bool {
        self.terminated() || self.covers.len() > len
    }

    pub fn module(&self) -> &Representation {
        &self.syzygies[0]
    }

    /// Some computed syzygy is zero.
    pub fn terminated(&self) -> bool {
        self.syzygies.last().expect("nonempty").is_zero()
    }

    /// Number of computed terms.
    pub fn computed_terms(&self) -> usize {
        self.covers.len()
    }

    /// `Ω^k M`; zero beyond termination, `None` if not yet computed.
    pub fn syzygy(&self, k: usize) -> Option<Representation> {
        match self.syzygies.get(k) {
            Some(s) => Some(s.clone()),
            None if self.terminated() => Some(zero_module(self.module().algebra())),
            None => None,
        }
    }

    /// Generator vertices of `P_k`; empty beyond termination.
    pub fn generators(&self, k: usize) -> &[usize] {
        self.covers.get(k).map(|c| c.generators.as_slice()).unwrap_or(&[])
    }

    pub fn cover(&self, k: usize) -> Option<&ProjectiveCover> {
        self.covers.get(k)
    }

    pub fn inclusion(&self, k: usize) -> Option<&ModuleMap> {
        self.inclusions.get(k)
    }

    /// `m^(k)`: multiplicity of each `P(i)` in `P_k`.
    pub fn multiplicities(&self, k: usize) -> Vec<usize> {
        let mut out = vec![0; self.module().algebra().num_vertices()];
        for &g in self.generators(k) {
            out[g] += 1;
        }
        out
    }

    /// `d_k = ι_k ∘ π_k : P_k -> P_{k-1}` for `k ≥ 1`.
    pub fn differential(&self, k: usize) -> Result<Option<ModuleMap>> {
        if k == 0 || k >= self.covers.len() {
            return Ok(None);
        }
        Ok(Some(self.inclusions[k - 1].after(&self.covers[k].map)?))
    }

    /// `pd M` when the resolution has terminated (`0` for the zero module).
    pub fn pd(&self) -> Option<usize> {
        if !self.terminated() {
            return None;
        }
        Some(self.syzygies.len().saturating_sub(2))
    }

    /// Re-checks exactness (`dim P_k = rank π_k + dim Ω^{k+1}`, `ι` injective
    /// onto `ker π`) and minimality (`Ω^{k+1} ⊆ rad P_k`).
    pub fn verify(&self) -> Result<()> {
        for (k, cover) in self.covers.iter().enumerate() {
            let incl = &self.inclusions[k];
            if !cover.map.is_surjective() || !incl.is_injective() {
                return Err(Error::OracleMismatch(format!("resolution step {k} is not exact")));
            }
            if !cover.map.after(incl)?.is_zero()
                || cover.projective.total_dim() != cover.map.rank() + self.syzygies[k + 1].total_dim()
            {
                return Err(Error::OracleMismatch(format!("resolution step {k} is not exact")));
            }
            let (_, rad) = radical(&cover.projective)?;
            for v in 0..incl.comps().len() {
                if !rad.comp(v).spans(incl.comp(v))? {
                    return Err(Error::OracleMismatch(format!("resolution step {k} is not minimal")));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn to_cache_json(&self) -> String {
        let mats = |ms: &[Matrix]| Value::Array(ms.iter().map(|m| json!(m.to_string_rows())).collect());
        let syz: Vec<Value> =
            self.syzygies[1..].iter().map(|s| json!({ "dims": s.dims(), "maps": mats(s.maps()) })).collect();
        let inc: Vec<Value> = self.inclusions.iter().map(|f| mats(f.comps())).collect();
        json!({ "syzygies": syz, "inclusions": inc }).to_string()
    }

    /// Rebuilds a cached resolution; the covers are recomputed (they are
    /// cheap and deterministic) and checked against the stored syzygies.
    pub(crate) fn from_cache_json(m: &Representation, text: &str) -> Result<Self> {
        let bad = || Error::format("resolution cache", "malformed entry");
        let v: Value = serde_json::from_str(text).map_err(|_| bad())?;
        let alg = m.algebra().clone();
        let field = alg.field();
        let parse_mats = |v: &Value, shapes: Vec<(usize, usize)>| -> Result<Vec<Matrix>> {
            let arr = v.as_array().ok_or_else(bad)?;
            if arr.len() != shapes.len() {
                return Err(bad());
            }
            arr.iter()
                .zip(shapes)
                .map(|(rows, (r, c))| {
                    let rows = rows.as_array().ok_or_else(bad)?;
                    let mut data = Vec::with_capacity(r * c);
                    for row in rows {
                        for e in row.as_array().ok_or_else(bad)? {
                            data.push(field.parse(e.as_str().ok_or_else(bad)?)?);
                        }
                    }
                    Ok(Matrix::new(field.clone(), r, c, data)?)
                })
                .collect()
        };
        let syz = v["syzygies"].as_array().ok_or_else(bad)?;
        let inc = v["inclusions"].as_array().ok_or_else(bad)?;
        if syz.len() != inc.len() {
            return Err(bad());
        }
        let mut res = MinimalResolution::new(m);
        for (s, i) in syz.iter().zip(inc) {
            let dims: Vec<usize> = serde_json::from_value(s["dims"].clone()).map_err(|_| bad())?;
            if dims.len() != alg.num_vertices() {
                return Err(bad());
            }
            let shapes = alg.quiver().arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect();
            let maps = parse_mats(&s["maps"], shapes)?;
            let omega = Representation::new_unchecked(alg.clone(), dims, maps)?;
            let cover = projective_cover(res.syzygies.last().expect("nonempty"))?;
            let shapes = (0..alg.num_vertices()).map(|v| (cover.projective.dims()[v], omega.dims()[v])).collect();
            let incl = ModuleMap::new(omega.clone(), cover.projective.clone(), parse_mats(i, shapes)?)?;
            if !cover.map.after(&incl)?.is_zero() || !incl.is_injective() {
                return Err(bad());
            }
            res.covers.push(cover);
            res.inclusions.push(incl);
            res.syzygies.push(omega);
        }
        res.verify()?;
        Ok(res)
    }
}
