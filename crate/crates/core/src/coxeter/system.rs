use std::collections::VecDeque;
use std::fmt;

use rustc_hash::FxHashMap;

use super::cartan::CartanType;
use super::element::{Element, Repr};
use crate::error::{Error, Result};

/// Multiplication data for `I2(m)`: elements are stored as alternating
/// words `(start letter, length)` and multiplied in the rotation/reflection
/// picture `r^k s1^f` with `r = s1 s2`.
#[derive(Debug, Clone)]
struct DihedralTable {
    m: u32,
    /// normal form indexed by `2k + f`
    normal_form: Vec<(u8, u32)>,
}

impl DihedralTable {
    fn new(m: u32) -> Self {
        let mut normal_form: Vec<Option<(u8, u32)>> = vec![None; 2 * m as usize];
        for len in 0..=m {
            for start in [1u8, 2] {
                let (k, f) = Self::alternating_to_rotation(m, start, len);
                let slot = &mut normal_form[(2 * k + f) as usize];
                if slot.is_none() {
                    *slot = Some(if len == 0 { (0, 0) } else { (start, len) });
                }
            }
        }
        Self {
            m,
            normal_form: normal_form
                .into_iter()
                .map(|x| x.expect("dihedral table covers group"))
                .collect(),
        }
    }

    fn alternating_to_rotation(m: u32, start: u8, len: u32) -> (u32, u32) {
        // s1 = (0, 1), s2 = s1 r = (m - 1, 1)
        let mut acc = (0u32, 0u32);
        let mut letter = start;
        for _ in 0..len {
            let g = if letter == 1 { (0, 1) } else { (m - 1, 1) };
            acc = Self::mul_rot(m, acc, g);
            letter = 3 - letter;
        }
        acc
    }

    fn mul_rot(m: u32, (a, f): (u32, u32), (b, g): (u32, u32)) -> (u32, u32) {
        // r^a s^f r^b s^g = r^(a + (-1)^f b) s^(f+g)
        let b = if f == 1 { (m - b) % m } else { b };
        ((a + b) % m, (f + g) % 2)
    }

    fn to_rotation(&self, start: u8, len: u32) -> (u32, u32) {
        Self::alternating_to_rotation(self.m, start.max(1), len)
    }

    fn rotation_to_word(&self, (k, f): (u32, u32)) -> (u8, u32) {
        self.normal_form[(2 * k + f) as usize]
    }
}

/// A finite Coxeter system with exact root data.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    cartan_type: CartanType,
    coxeter_matrix: Vec<Vec<u32>>,
    cartan_matrix: Option<Vec<Vec<i32>>>,
    positive_roots: Vec<Vec<i32>>,
    /// `simple_index[i]` is the index in `positive_roots` of the simple root of node `i + 1`.
    simple_index: Vec<usize>,
    /// `reflections[i][k]` is the signed image `±(j + 1)` of root `k` under `s_{i+1}`.
    reflections: Vec<Vec<i16>>,
    dihedral: Option<DihedralTable>,
}

impl CoxeterSystem {
    /// Builds the system, generating the positive roots by closing the simple
    /// roots under the simple reflections.
    pub fn new(cartan_type: CartanType) -> Self {
        let r = cartan_type.rank();
        let coxeter_matrix: Vec<Vec<u32>> = (1..=r)
            .map(|i| (1..=r).map(|j| cartan_type.coxeter_entry(i, j)).collect())
            .collect();
        if !cartan_type.is_crystallographic() {
            let m = cartan_type.gonality().expect("dihedral");
            return Self {
                cartan_type,
                coxeter_matrix,
                cartan_matrix: None,
                positive_roots: Vec::new(),
                simple_index: Vec::new(),
                reflections: Vec::new(),
                dihedral: Some(DihedralTable::new(m)),
            };
        }

        let mut cartan = vec![vec![0i32; r]; r];
        for i in 0..r {
            for j in 0..r {
                cartan[i][j] = match (i.cmp(&j), coxeter_matrix[i][j]) {
                    (std::cmp::Ordering::Equal, _) => 2,
                    (_, 2) => 0,
                    (_, 3) => -1,
                    (std::cmp::Ordering::Less, _) => -1,
                    (std::cmp::Ordering::Greater, 4) => -2,
                    (std::cmp::Ordering::Greater, 6) => -3,
                    (_, m) => unreachable!("m = {m} is not crystallographic"),
                };
            }
        }

        let reflect = |i: usize, root: &[i32]| -> Vec<i32> {
            // s_i(beta) = beta - <alpha_i^vee, beta> alpha_i
            let pairing: i32 = (0..r).map(|j| cartan[i][j] * root[j]).sum();
            let mut out = root.to_vec();
            out[i] -= pairing;
            out
        };

        let mut roots: Vec<Vec<i32>> = Vec::new();
        let mut index: FxHashMap<Vec<i32>, usize> = FxHashMap::default();
        let mut queue = VecDeque::new();
        for i in 0..r {
            let mut e = vec![0; r];
            e[i] = 1;
            index.insert(e.clone(), roots.len());
            roots.push(e.clone());
            queue.push_back(e);
        }
        while let Some(root) = queue.pop_front() {
            for i in 0..r {
                let image = reflect(i, &root);
                if image.iter().all(|&c| c >= 0) && !index.contains_key(&image) {
                    index.insert(image.clone(), roots.len());
                    roots.push(image.clone());
                    queue.push_back(image);
                }
            }
        }

        let reflections = (0..r)
            .map(|i| {
                roots
                    .iter()
                    .map(|root| {
                        let image = reflect(i, root);
                        let (sign, key) = if image.iter().all(|&c| c >= 0) {
                            (1i16, image)
                        } else {
                            (-1i16, image.iter().map(|c| -c).collect())
                        };
                        sign * (index[&key] as i16 + 1)
                    })
                    .collect()
            })
            .collect();

        Self {
            cartan_type,
            coxeter_matrix,
            cartan_matrix: Some(cartan),
            positive_roots: roots,
            simple_index: (0..r).collect(),
            reflections,
            dihedral: None,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    /// `m_ij` for 1-based labels.
    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.coxeter_matrix[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> Option<&[Vec<i32>]> {
        self.cartan_matrix.as_deref()
    }

    /// Positive roots in simple-root coordinates (empty for `I2(m)`).
    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive_roots
    }

    pub fn node_labels(&self) -> Vec<usize> {
        (1..=self.rank()).collect()
    }

    /// Length of the longest element.
    pub fn longest_length(&self) -> usize {
        match &self.dihedral {
            Some(t) => t.m as usize,
            None => self.positive_roots.len(),
        }
    }

    pub fn order(&self) -> u128 {
        self.cartan_type.group_order()
    }

    pub(crate) fn check_letter(&self, letter: usize) -> Result<()> {
        if letter == 0 || letter > self.rank() {
            return Err(Error::LetterOutOfRange {
                letter,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_member(&self, w: &Element) -> Result<()> {
        if w.cartan_type() != self.cartan_type {
            return Err(Error::SystemMismatch(
                w.cartan_type().to_string(),
                self.cartan_type.to_string(),
            ));
        }
        Ok(())
    }

    pub fn identity(&self) -> Element {
        match &self.dihedral {
            Some(_) => Element::new(self.cartan_type, Repr::Dihedral { start: 0, len: 0 }, 0),
            None => {
                let perm: Box<[i16]> = (1..=self.positive_roots.len() as i16).collect();
                Element::new(self.cartan_type, Repr::Roots(perm), 0)
            }
        }
    }

    /// The simple reflection `s_i` (1-based).
    pub fn generator(&self, i: usize) -> Result<Element> {
        self.check_letter(i)?;
        Ok(self.right_mul_unchecked(&self.identity(), i))
    }

    /// Group law. Errors when either argument comes from another system.
    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element> {
        self.check_member(u)?;
        self.check_member(v)?;
        Ok(self.multiply_unchecked(u, v))
    }

    pub(crate) fn multiply_unchecked(&self, u: &Element, v: &Element) -> Element {
        match (u.repr(), v.repr()) {
            (Repr::Roots(a), Repr::Roots(b)) => {
                // (uv)(alpha_k) = u(v(alpha_k))
                let mut neg = 0;
                let perm: Box<[i16]> = b
                    .iter()
                    .map(|&x| {
                        let y = a[x.unsigned_abs() as usize - 1];
                        let z = if x < 0 { -y } else { y };
                        if z < 0 {
                            neg += 1;
                        }
                        z
                    })
                    .collect();
                Element::new(self.cartan_type, Repr::Roots(perm), neg)
            }
            (Repr::Dihedral { start: s1, len: l1 }, Repr::Dihedral { start: s2, len: l2 }) => {
                let t = self.dihedral.as_ref().expect("dihedral system");
                let prod =
                    DihedralTable::mul_rot(t.m, t.to_rotation(*s1, *l1), t.to_rotation(*s2, *l2));
                let (start, len) = t.rotation_to_word(prod);
                Element::new(self.cartan_type, Repr::Dihedral { start, len }, len)
            }
            _ => unreachable!("mixed representations"),
        }
    }

    /// `w s_i`.
    pub fn right_mul(&self, w: &Element, i: usize) -> Result<Element> {
        self.check_member(w)?;
        self.check_letter(i)?;
        Ok(self.right_mul_unchecked(w, i))
    }

    pub(crate) fn right_mul_unchecked(&self, w: &Element, i: usize) -> Element {
        match w.repr() {
            Repr::Roots(a) => {
                let table = &self.reflections[i - 1];
                let mut neg = 0;
                let perm: Box<[i16]> = table
                    .iter()
                    .map(|&x| {
                        let y = a[x.unsigned_abs() as usize - 1];
                        let z = if x < 0 { -y } else { y };
                        if z < 0 {
                            neg += 1;
                        }
                        z
                    })
                    .collect();
                Element::new(self.cartan_type, Repr::Roots(perm), neg)
            }
            Repr::Dihedral { start, len } => {
                let t = self.dihedral.as_ref().expect("dihedral system");
                let g = if i == 1 { (0, 1) } else { (t.m - 1, 1) };
                let (start, len) =
                    t.rotation_to_word(DihedralTable::mul_rot(t.m, t.to_rotation(*start, *len), g));
                Element::new(self.cartan_type, Repr::Dihedral { start, len }, len)
            }
        }
    }

    /// `s_i w`.
    pub fn left_mul(&self, i: usize, w: &Element) -> Result<Element> {
        self.check_member(w)?;
        self.check_letter(i)?;
        Ok(self.left_mul_unchecked(i, w))
    }

    pub(crate) fn left_mul_unchecked(&self, i: usize, w: &Element) -> Element {
        match w.repr() {
            Repr::Roots(a) => {
                let table = &self.reflections[i - 1];
                let mut neg = 0;
                let perm: Box<[i16]> = a
                    .iter()
                    .map(|&x| {
                        let y = table[x.unsigned_abs() as usize - 1];
                        let z = if x < 0 { -y } else { y };
                        if z < 0 {
                            neg += 1;
                        }
                        z
                    })
                    .collect();
                Element::new(self.cartan_type, Repr::Roots(perm), neg)
            }
            Repr::Dihedral { start, len } => {
                let t = self.dihedral.as_ref().expect("dihedral system");
                let g = if i == 1 { (0, 1) } else { (t.m - 1, 1) };
                let (start, len) =
                    t.rotation_to_word(DihedralTable::mul_rot(t.m, g, t.to_rotation(*start, *len)));
                Element::new(self.cartan_type, Repr::Dihedral { start, len }, len)
            }
        }
    }

    pub fn inverse(&self, w: &Element) -> Element {
        match w.repr() {
            Repr::Roots(a) => {
                let mut inv = vec![0i16; a.len()];
                for (k, &x) in a.iter().enumerate() {
                    let j = x.unsigned_abs() as usize - 1;
                    inv[j] = x.signum() * (k as i16 + 1);
                }
                Element::new(self.cartan_type, Repr::Roots(inv.into()), w.length() as u32)
            }
            Repr::Dihedral { start, len } => {
                let t = self.dihedral.as_ref().expect("dihedral system");
                let (k, f) = t.to_rotation(*start, *len);
                let inv = if f == 1 { (k, 1) } else { ((t.m - k) % t.m, 0) };
                let (start, len) = t.rotation_to_word(inv);
                Element::new(self.cartan_type, Repr::Dihedral { start, len }, len)
            }
        }
    }

    /// Coxeter length.
    pub fn length(&self, w: &Element) -> usize {
        w.length()
    }

    /// `l(w s_i) < l(w)`.
    pub fn is_right_descent(&self, w: &Element, i: usize) -> bool {
        match w.repr() {
            Repr::Roots(a) => a[self.simple_index[i - 1]] < 0,
            Repr::Dihedral { start, len } => {
                if *len == 0 {
                    false
                } else if *len == self.longest_length() as u32 {
                    true
                } else {
                    let last = if len % 2 == 1 { *start } else { 3 - *start };
                    last as usize == i
                }
            }
        }
    }

    /// `l(s_i w) < l(w)`.
    pub fn is_left_descent(&self, w: &Element, i: usize) -> bool {
        match w.repr() {
            Repr::Roots(a) => {
                let target = self.simple_index[i - 1] as i16 + 1;
                // w^{-1}(alpha_i) < 0  iff  w maps some positive root to -alpha_i
                a.iter().any(|&x| x == -target)
            }
            Repr::Dihedral { start, len } => {
                *len != 0 && (*len == self.longest_length() as u32 || *start as usize == i)
            }
        }
    }

    /// Left descent set `J(w)`, as sorted 1-based labels.
    pub fn left_descents(&self, w: &Element) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&i| self.is_left_descent(w, i))
            .collect()
    }

    pub fn right_descents(&self, w: &Element) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&i| self.is_right_descent(w, i))
            .collect()
    }

    /// The unique element of maximal length.
    pub fn longest_element(&self) -> Element {
        let mut w = self.identity();
        'grow: loop {
            for i in 1..=self.rank() {
                if !self.is_right_descent(&w, i) {
                    w = self.right_mul_unchecked(&w, i);
                    continue 'grow;
                }
            }
            return w;
        }
    }

    /// Lexicographically first reduced word, built from left descents.
    pub fn reduced_word(&self, w: &Element) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while cur.length() > 0 {
            let i = (1..=self.rank())
                .find(|&i| self.is_left_descent(&cur, i))
                .expect("nonidentity has a left descent");
            word.push(i);
            cur = self.left_mul_unchecked(i, &cur);
        }
        word
    }

    /// Nodes adjacent in the Coxeter diagram (`m_ij >= 3`).
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.m(i, j) >= 3
    }

    /// Length of the longest element of the parabolic subgroup on `nodes`.
    pub fn parabolic_longest_length(&self, nodes: &[usize]) -> usize {
        if nodes.is_empty() {
            return 0;
        }
        match &self.dihedral {
            Some(t) => {
                if nodes.len() == 2 {
                    t.m as usize
                } else {
                    1
                }
            }
            None => self
                .positive_roots
                .iter()
                .filter(|root| {
                    root.iter()
                        .enumerate()
                        .all(|(j, &c)| c == 0 || nodes.contains(&(j + 1)))
                })
                .count(),
        }
    }

    /// Connected components of the induced subdiagram on `subset`, with the
    /// per-component budgets `l(w0^(z)) + #vertices`.
    pub fn decompose_subset(&self, subset: &[usize]) -> Result<ComponentDecomposition> {
        let mut nodes: Vec<usize> = subset.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        for &i in &nodes {
            self.check_letter(i)?;
        }
        let mut seen = vec![false; self.rank() + 1];
        let mut components = Vec::new();
        for &start in &nodes {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for &u in &nodes {
                    if !seen[u] && self.adjacent(u, v) {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            components.push(comp);
        }
        let long_lengths: Vec<usize> = components
            .iter()
            .map(|c| self.parabolic_longest_length(c))
            .collect();
        let budgets = components
            .iter()
            .zip(&long_lengths)
            .map(|(c, l)| l + c.len())
            .collect();
        let mut component_of = vec![None; self.rank() + 1];
        for (z, comp) in components.iter().enumerate() {
            for &v in comp {
                component_of[v] = Some(z);
            }
        }
        Ok(ComponentDecomposition {
            subset: nodes,
            components,
            long_lengths,
            budgets,
            component_of,
        })
    }
}

impl fmt::Display for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cartan_type)
    }
}

/// Components of the subdiagram induced by a node subset `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    subset: Vec<usize>,
    components: Vec<Vec<usize>>,
    long_lengths: Vec<usize>,
    budgets: Vec<usize>,
    component_of: Vec<Option<usize>>,
}

impl ComponentDecomposition {
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// Components, each sorted, ordered by smallest node.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// `l(w0^(z))` per component.
    pub fn long_lengths(&self) -> &[usize] {
        &self.long_lengths
    }

    /// `l(w0^(z)) + #vertices(C^(z))` per component.
    pub fn budgets(&self) -> &[usize] {
        &self.budgets
    }

    pub fn component_of(&self, node: usize) -> Option<usize> {
        self.component_of.get(node).copied().flatten()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.component_of(node).is_some()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}
