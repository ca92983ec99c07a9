//! Finite groups given by multiplication tables.
//!
//! Elements are indices `0..order` with `0` the identity. Groups built from
//! permutations are enumerated breadth-first over words in the generators,
//! so element numbering (and everything derived from it) is deterministic.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{check_cap, Error, Result};
use crate::limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    perms: Option<Vec<Vec<u32>>>,
    gens: Option<Vec<Vec<u32>>>,
    coords: Option<Vec<u64>>,
}

impl FiniteGroup {
    /// Builds a group from a full Cayley table, validating the axioms.
    pub fn from_table(name: &str, rows: &[Vec<usize>]) -> Result<FiniteGroup> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("empty Cayley table"));
        }
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::invalid("Cayley table is not square"));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || seen[x] {
                    return Err(Error::invalid("Cayley table row is not a permutation"));
                }
                seen[x] = true;
            }
            table.extend(row.iter().map(|&x| x as u32));
        }
        for i in 0..n {
            if table[i] as usize != i || table[i * n] as usize != i {
                return Err(Error::invalid("element 0 is not the identity"));
            }
        }
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a * n + b] == 0)
                .ok_or_else(|| Error::invalid("element without inverse"))?;
            if table[b * n + a] != 0 {
                return Err(Error::invalid("left and right inverses differ"));
            }
            inverse[a] = b as u32;
        }
        let g = FiniteGroup {
            name: name.to_string(),
            order: n,
            table,
            inverse,
            perms: None,
            gens: None,
            coords: None,
        };
        if !g.is_associative() {
            return Err(Error::invalid("multiplication table is not associative"));
        }
        Ok(g)
    }

    /// Closure of a list of permutations of `0..m` under composition.
    ///
    /// The product `a·b` acts as `i ↦ a[b[i]]`.
    pub fn from_generators(name: &str, gens: &[Vec<usize>]) -> Result<FiniteGroup> {
        Self::from_generators_capped(name, gens, limits::GENERATOR_CLOSURE)
    }

    pub fn from_generators_capped(name: &str, gens: &[Vec<usize>], cap: usize) -> Result<FiniteGroup> {
        let m = gens.first().map(|g| g.len()).unwrap_or(0);
        for g in gens {
            if g.len() != m {
                return Err(Error::invalid("generators act on different point sets"));
            }
            let mut seen = vec![false; m];
            for &x in g {
                if x >= m || seen[x] {
                    return Err(Error::invalid("generator is not a bijection"));
                }
                seen[x] = true;
            }
        }
        let gens: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| g.iter().map(|&x| x as u32).collect())
            .collect();
        let id: Vec<u32> = (0..m as u32).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y: Vec<u32> = s.iter().map(|&i| elems[x][i as usize]).collect();
                if !index.contains_key(&y) {
                    check_cap("group closure", elems.len() + 1, cap)?;
                    index.insert(y.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(y);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod: Vec<u32> = elems[b].iter().map(|&i| elems[a][i as usize]).collect();
                table[a * n + b] = index[&prod] as u32;
            }
        }
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            inverse[a] = (0..n).find(|&b| table[a * n + b] == 0).unwrap() as u32;
        }
        Ok(FiniteGroup {
            name: name.to_string(),
            order: n,
            table,
            inverse,
            perms: Some(elems),
            gens: Some(gens),
            coords: None,
        })
    }

    /// Z_{d1} × … × Z_{dk}; elements in lexicographic coordinate order with
    /// the first coordinate most significant.
    pub fn abelian(dims: &[u64]) -> FiniteGroup {
        let dims: Vec<u64> = dims.iter().copied().filter(|&d| d > 1).collect();
        let n: usize = dims.iter().product::<u64>() as usize;
        let name = if dims.is_empty() {
            "Z1".to_string()
        } else {
            dims.iter().map(|d| format!("Z{}", d)).collect::<Vec<_>>().join("x")
        };
        let to_coords = |mut x: usize| -> Vec<u64> {
            let mut c = vec![0u64; dims.len()];
            for i in (0..dims.len()).rev() {
                c[i] = x as u64 % dims[i];
                x /= dims[i] as usize;
            }
            c
        };
        let from_coords = |c: &[u64]| -> usize {
            c.iter().zip(dims.iter()).fold(0usize, |acc, (&x, &d)| acc * d as usize + x as usize)
        };
        let all: Vec<Vec<u64>> = (0..n).map(to_coords).collect();
        let mut table = vec![0u32; n * n];
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                let s: Vec<u64> = (0..dims.len()).map(|i| (all[a][i] + all[b][i]) % dims[i]).collect();
                table[a * n + b] = from_coords(&s) as u32;
            }
            let ng: Vec<u64> = (0..dims.len()).map(|i| (dims[i] - all[a][i]) % dims[i]).collect();
            inverse[a] = from_coords(&ng) as u32;
        }
        FiniteGroup {
            name,
            order: n,
            table,
            inverse,
            perms: None,
            gens: None,
            coords: Some(dims),
        }
    }

    pub fn cyclic(n: u64) -> FiniteGroup {
        FiniteGroup::abelian(&[n])
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::abelian(&[])
    }

    pub fn symmetric(n: usize) -> FiniteGroup {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push((0..n).map(|i| (i + 1) % n).collect());
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(t);
        }
        if n < 2 {
            return FiniteGroup::trivial().renamed(&format!("S{}", n));
        }
        FiniteGroup::from_generators(&format!("S{}", n), &gens).expect("symmetric group")
    }

    /// Dihedral group of order 2n.
    pub fn dihedral(n: usize) -> FiniteGroup {
        let r: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let s: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        FiniteGroup::from_generators(&format!("D{}", n), &[r, s]).expect("dihedral group")
    }

    /// The quaternion group, via its left-regular action on ±{1,i,j,k}.
    pub fn quaternion() -> FiniteGroup {
        // unit products: (sign, unit) for u*v, units 1,i,j,k = 0..3
        const T: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let left = |u: usize| -> Vec<usize> {
            (0..8)
                .map(|p| {
                    let (neg, v) = (p >= 4, p % 4);
                    let (s, w) = T[u][v];
                    if neg ^ s {
                        w + 4
                    } else {
                        w
                    }
                })
                .collect()
        };
        FiniteGroup::from_generators("Q8", &[left(1), left(2)]).expect("quaternion group")
    }

    pub fn renamed(mut self, name: &str) -> FiniteGroup {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1usize, |acc, g| num_integer::lcm(acc, self.element_order(g)))
    }

    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn permutations(&self) -> Option<&[Vec<u32>]> {
        self.perms.as_deref()
    }

    /// The generating permutations the group was built from.
    pub fn generators(&self) -> Option<&[Vec<u32>]> {
        self.gens.as_deref()
    }

    /// Invariant dims when the group was built in coordinate form.
    pub fn coordinate_dims(&self) -> Option<&[u64]> {
        self.coords.as_deref()
    }

    /// Coordinates of an element of a coordinate-form abelian group.
    pub fn coords_of(&self, mut x: usize) -> Option<Vec<u64>> {
        let dims = self.coords.as_ref()?;
        let mut c = vec![0u64; dims.len()];
        for i in (0..dims.len()).rev() {
            c[i] = x as u64 % dims[i];
            x /= dims[i] as usize;
        }
        Some(c)
    }

    pub fn element_at(&self, c: &[u64]) -> Option<usize> {
        let dims = self.coords.as_ref()?;
        if c.len() != dims.len() {
            return None;
        }
        Some(c.iter().zip(dims.iter()).fold(0usize, |acc, (&x, &d)| acc * d as usize + (x % d) as usize))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.order).all(|g| self.mul(g, z) == self.mul(z, g))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&z| self.is_central(z)).collect()
    }

    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..n).map(|g| self.conj(g, x)).collect();
            cls.sort_unstable();
            cls.dedup();
            for &y in &cls {
                class_of[y] = classes.len();
            }
            classes.push(cls);
        }
        ConjugacyClasses { classes, class_of }
    }

    /// Subgroup generated by the given elements, as a sorted element list.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let n = self.order;
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut elems = vec![0usize];
        let gens: Vec<usize> = seed.iter().copied().filter(|&g| g != 0).collect();
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &s in &gens {
                let y = self.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup> {
        Subgroup::new(self, elements)
    }

    pub fn centralizer(&self, h: usize) -> Subgroup {
        let elems: Vec<usize> = (0..self.order).filter(|&g| self.mul(g, h) == self.mul(h, g)).collect();
        Subgroup::new(self, &elems).expect("centralizer is a subgroup")
    }

    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let n = self.order;
        let mut comms = HashSet::new();
        for a in 0..n {
            for b in 0..n {
                comms.insert(self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b))));
            }
        }
        let gens: Vec<usize> = comms.into_iter().collect();
        self.closure(&gens)
    }

    /// All subgroups, smallest first.
    pub fn all_subgroups(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        self.subgroups_where(cap, |_, _| true)
    }

    /// Subgroups reachable from the trivial one by repeatedly adjoining an
    /// element `g` with `extend(H, g)` true. With a permissive predicate this
    /// is the full subgroup lattice.
    pub fn subgroups_where<F>(&self, cap: usize, extend: F) -> Result<Vec<Vec<usize>>>
    where
        F: Fn(&[usize], usize) -> bool,
    {
        check_cap("group order for subgroup search", self.order, cap)?;
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let trivial = vec![0usize];
        seen.insert(trivial.clone());
        let mut queue = VecDeque::from([trivial]);
        let mut out = Vec::new();
        while let Some(h) = queue.pop_front() {
            let mut inside = vec![false; self.order];
            for &x in &h {
                inside[x] = true;
            }
            for g in 0..self.order {
                if inside[g] || !extend(&h, g) {
                    continue;
                }
                let mut seed = h.clone();
                seed.push(g);
                let k = self.closure(&seed);
                if seen.insert(k.clone()) {
                    queue.push_back(k);
                }
            }
            out.push(h);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Quotient by a normal subgroup. Returns the quotient group and the
    /// coset index of every element; cosets are numbered by minimal element.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let n = self.order;
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &k in normal {
                let y = self.mul(x, k);
                if coset_of[y] != usize::MAX {
                    return Err(Error::invalid("not a subgroup"));
                }
                coset_of[y] = reps.len();
            }
            reps.push(x);
        }
        let m = reps.len();
        let rows: Vec<Vec<usize>> = (0..m)
            .map(|a| (0..m).map(|b| coset_of[self.mul(reps[a], reps[b])]).collect())
            .collect();
        // normality: product must be independent of representatives
        for &a in &reps {
            for &k in normal {
                for &b in &reps {
                    if coset_of[self.mul(self.mul(a, k), b)] != coset_of[self.mul(a, b)] {
                        return Err(Error::invalid("subgroup is not normal"));
                    }
                }
            }
        }
        let q = FiniteGroup::from_table(&format!("{}/N", self.name), &rows)?;
        Ok((q, coset_of))
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }
}

/// A subgroup with its own multiplication table and the inclusion map.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: FiniteGroup,
    /// `elements[i]` is the parent index of subgroup element `i`.
    pub elements: Vec<usize>,
    position: HashMap<usize, usize>,
}

impl Subgroup {
    pub fn new(parent: &FiniteGroup, elements: &[usize]) -> Result<Subgroup> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(Error::invalid("subgroup must contain the identity"));
        }
        let position: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let m = elems.len();
        let mut rows = vec![vec![0usize; m]; m];
        for i in 0..m {
            for j in 0..m {
                let p = parent.mul(elems[i], elems[j]);
                rows[i][j] = *position.get(&p).ok_or_else(|| Error::invalid("subset is not closed"))?;
            }
        }
        let mut group = FiniteGroup::from_table(&format!("{}<sub>", parent.name), &rows)?;
        if parent.coords.is_some() && elems.len() == parent.order {
            group.coords = parent.coords.clone();
        }
        Ok(Subgroup {
            group,
            elements: elems,
            position,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn embed(&self, i: usize) -> usize {
        self.elements[i]
    }

    pub fn index_of(&self, parent_element: usize) -> Option<usize> {
        self.position.get(&parent_element).copied()
    }

    pub fn contains(&self, parent_element: usize) -> bool {
        self.position.contains_key(&parent_element)
    }
}

/// A group with a central involution generating fermion parity.
#[derive(Clone, Debug)]
pub struct FermionicSymmetry {
    pub group: FiniteGroup,
    pub z: usize,
}

impl FermionicSymmetry {
    pub fn new(group: FiniteGroup, z: usize) -> Result<FermionicSymmetry> {
        if z == 0 || z >= group.order() {
            return Err(Error::invalid("z must be a non-identity element"));
        }
        if group.mul(z, z) != 0 {
            return Err(Error::invalid("z must square to the identity"));
        }
        if !group.is_central(z) {
            return Err(Error::invalid("z must be central"));
        }
        Ok(FermionicSymmetry { group, z })
    }

    /// A subgroup `G_b` with `G = G_b × ⟨z⟩`, if one exists.
    pub fn detect_split(&self) -> Result<Option<Subgroup>> {
        let g = &self.group;
        let cap = limits::order_cap(limits::SUBGROUP_SEARCH);
        check_cap("group order for split detection", g.order(), cap)?;
        let half = g.order() / 2;
        let z = self.z;
        // adjoining z is never useful; subgroups avoiding z are closed under this search
        let subs = g.subgroups_where(cap, |_, x| x != z)?;
        for h in subs {
            if h.len() != half || h.contains(&z) {
                continue;
            }
            let sub = Subgroup::new(g, &h)?;
            // z central and z ∉ H with |H| = |G|/2 gives G = H × ⟨z⟩; verify by table
            let mut hit = vec![false; g.order()];
            for &a in &h {
                for b in [0, z] {
                    hit[g.mul(a, b)] = true;
                }
            }
            if hit.iter().all(|&x| x) {
                return Ok(Some(sub));
            }
        }
        Ok(None)
    }
}

/// Invariant-factor decomposition of an abelian group with an explicit
/// isomorphism to the coordinate form `FiniteGroup::abelian(&invariants)`.
#[derive(Clone, Debug)]
pub struct AbelianDecomposition {
    /// d1 | d2 | … , all > 1.
    pub invariants: Vec<u64>,
    /// Basis element of each cyclic factor.
    pub basis: Vec<usize>,
    /// Coordinate-form index of every element.
    pub to_coordinate: Vec<usize>,
    /// Element for every coordinate-form index.
    pub from_coordinate: Vec<usize>,
}

impl AbelianDecomposition {
    pub fn coordinate_group(&self) -> FiniteGroup {
        FiniteGroup::abelian(&self.invariants)
    }
}

pub fn abelian_invariants(g: &FiniteGroup) -> Result<AbelianDecomposition> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = g.order();
    let mut span = vec![0usize];
    let mut in_span = vec![false; n];
    in_span[0] = true;
    let mut chosen: Vec<(usize, u64)> = Vec::new();
    while span.len() < n {
        // order of the coset x + span
        let quotient_order = |x: usize| -> usize {
            let mut y = x;
            let mut k = 1;
            while !in_span[y] {
                y = g.mul(y, x);
                k += 1;
            }
            k
        };
        let (best, m) = (0..n)
            .filter(|&x| !in_span[x])
            .map(|x| (x, quotient_order(x)))
            .fold((usize::MAX, 0usize), |acc, (x, m)| if m > acc.1 { (x, m) } else { acc });
        let lift = span
            .iter()
            .map(|&s| g.mul(best, s))
            .filter(|&y| g.element_order(y) == m)
            .min()
            .ok_or_else(|| Error::Verification("no lift of maximal order in abelian decomposition".into()))?;
        chosen.push((lift, m as u64));
        let seeds: Vec<usize> = chosen.iter().map(|c| c.0).collect();
        span = g.closure(&seeds);
        in_span.iter_mut().for_each(|b| *b = false);
        for &s in &span {
            in_span[s] = true;
        }
    }
    chosen.reverse();
    let invariants: Vec<u64> = chosen.iter().map(|c| c.1).collect();
    let basis: Vec<usize> = chosen.iter().map(|c| c.0).collect();
    for w in invariants.windows(2) {
        if w[1] % w[0] != 0 {
            return Err(Error::Verification("invariant factors do not divide".into()));
        }
    }
    let coord = FiniteGroup::abelian(&invariants);
    let mut from_coordinate = vec![usize::MAX; n];
    let mut to_coordinate = vec![usize::MAX; n];
    for ci in 0..n {
        let c = coord.coords_of(ci).unwrap();
        let mut x = 0usize;
        for (k, &b) in c.iter().zip(basis.iter()) {
            x = g.mul(x, g.pow(b, *k as i64));
        }
        if to_coordinate[x] != usize::MAX {
            return Err(Error::Verification("abelian decomposition is not injective".into()));
        }
        to_coordinate[x] = ci;
        from_coordinate[ci] = x;
    }
    Ok(AbelianDecomposition {
        invariants,
        basis,
        to_coordinate,
        from_coordinate,
    })
}
