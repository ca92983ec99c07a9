//! Metric groups (A, q): pointed modular categories.

use crate::error::{check_cap, Error, Result};
use crate::groups::{abelian_invariants, FiniteGroup, Subgroup};
use crate::limits;
use crate::modular::ModularData;
use crate::scalars::{Cyc, Phase};

#[derive(Clone, Debug)]
pub struct QuadraticForm {
    pub dims: Vec<u64>,
    pub group: FiniteGroup,
    /// q on every element, in the lexicographic order of `group`.
    pub q: Vec<Phase>,
    /// Optional element names used as modular-data labels.
    pub names: Option<Vec<String>>,
}

impl QuadraticForm {
    /// Validates q(0) = 0, q(−x) = q(x) and bilinearity of the associated
    /// form b.
    pub fn new(dims: &[u64], q: Vec<Phase>) -> Result<QuadraticForm> {
        let group = FiniteGroup::abelian(dims);
        if q.len() != group.order() {
            return Err(Error::invalid(format!("quadratic form needs {} values, got {}", group.order(), q.len())));
        }
        let form = QuadraticForm {
            dims: dims.to_vec(),
            group,
            q,
            names: None,
        };
        if !form.q[0].is_zero() {
            return Err(Error::invalid("q(0) must vanish"));
        }
        let n = form.order();
        for x in 0..n {
            if form.q[form.group.inv(x)] != form.q[x] {
                return Err(Error::invalid("q must be even: q(-x) = q(x)"));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = form.bilinear(form.group.mul(x, y), z);
                    if lhs != form.bilinear(x, z) + form.bilinear(y, z) {
                        return Err(Error::invalid("associated form b is not bilinear"));
                    }
                }
            }
        }
        Ok(form)
    }

    pub fn with_names(mut self, names: &[&str]) -> QuadraticForm {
        assert_eq!(names.len(), self.order());
        self.names = Some(names.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// b(x, y) = q(x+y) − q(x) − q(y).
    pub fn bilinear(&self, x: usize, y: usize) -> Phase {
        self.q[self.group.mul(x, y)] - self.q[x] - self.q[y]
    }

    pub fn orthogonal(&self, h: &[usize]) -> Vec<usize> {
        (0..self.order()).filter(|&x| h.iter().all(|&y| self.bilinear(x, y).is_zero())).collect()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.orthogonal(&(0..self.order()).collect::<Vec<_>>()) == vec![0]
    }

    pub fn label(&self, x: usize) -> String {
        match &self.names {
            Some(n) => n[x].clone(),
            None => {
                let c = self.group.coords_of(x).unwrap_or_default();
                if c.is_empty() {
                    "0".into()
                } else {
                    format!("({})", c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
                }
            }
        }
    }

    /// Standard forms used across the test corpus.
    pub fn toric_code() -> QuadraticForm {
        QuadraticForm::new(&[2, 2], vec![Phase::ZERO, Phase::ZERO, Phase::ZERO, Phase::HALF])
            .unwrap()
            .with_names(&["1", "e", "m", "f"])
    }

    pub fn double_semion() -> QuadraticForm {
        QuadraticForm::new(&[2, 2], vec![Phase::ZERO, Phase::new(1, 4), Phase::new(3, 4), Phase::ZERO])
            .unwrap()
            .with_names(&["1", "s", "sbar", "b"])
    }

    pub fn semion() -> QuadraticForm {
        QuadraticForm::new(&[2], vec![Phase::ZERO, Phase::new(1, 4)]).unwrap().with_names(&["1", "s"])
    }
}

pub fn metric_to_modular(form: &QuadraticForm) -> Result<ModularData> {
    if !form.is_nondegenerate() {
        return Err(Error::invalid("bilinear form is degenerate"));
    }
    let n = form.order();
    let s = (0..n)
        .map(|x| (0..n).map(|y| Cyc::from_phase(form.bilinear(x, y))).collect())
        .collect();
    ModularData::new(
        (0..n).map(|x| form.label(x)).collect(),
        vec![Cyc::one(); n],
        form.q.clone(),
        s,
        Cyc::sqrt_int(n as u64),
        0,
    )
}

/// The induced form on H^⊥/H, in invariant-factor coordinates.
pub fn condense_metric(form: &QuadraticForm, h: &[usize]) -> Result<QuadraticForm> {
    let mut hs = h.to_vec();
    hs.sort_unstable();
    hs.dedup();
    if form.group.closure(&hs) != hs {
        return Err(Error::invalid("H is not a subgroup"));
    }
    if hs.iter().any(|&x| !form.q[x].is_zero()) {
        return Err(Error::invalid("H is not isotropic"));
    }
    let perp = Subgroup::new(&form.group, &form.orthogonal(&hs))?;
    let local_h: Vec<usize> = hs.iter().map(|&x| perp.index_of(x).expect("isotropic H lies in its orthogonal")).collect();
    let (quot, coset_of) = perp.group.quotient(&local_h)?;
    let dec = abelian_invariants(&quot)?;
    let coord = dec.coordinate_group();
    let mut q = vec![None; coord.order()];
    for (i, &parent) in perp.elements.iter().enumerate() {
        let ci = dec.to_coordinate[coset_of[i]];
        let v = form.q[parent];
        match q[ci] {
            None => q[ci] = Some(v),
            Some(w) if w == v => {}
            Some(_) => return Err(Error::Verification("q is not constant on H-cosets".into())),
        }
    }
    QuadraticForm::new(&dec.invariants, q.into_iter().map(|v| v.unwrap()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropicSubgroup {
    pub elements: Vec<usize>,
    pub lagrangian: bool,
}

pub fn isotropic_subgroups(form: &QuadraticForm) -> Result<Vec<IsotropicSubgroup>> {
    check_cap("group order", form.order(), limits::order_cap(limits::ISOTROPIC))?;
    let subs = form.group.subgroups_where(usize::MAX, |h, g| {
        form.q[g].is_zero() && h.iter().all(|&x| form.bilinear(x, g).is_zero())
    })?;
    Ok(subs
        .into_iter()
        .map(|elements| {
            let lagrangian = elements.len() * elements.len() == form.order();
            IsotropicSubgroup { elements, lagrangian }
        })
        .collect())
}
