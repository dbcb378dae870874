//! Root data for the group catalog, Weyl group actions and Levi subdata.
//!
//! Coordinates: `Torus(n)`, `GL(n)` and `Sp(2n)` use the standard basis
//! `L_1..L_n` of X(T). `SL(n)` uses `L_1..L_{n-1}` with
//! `L_n = -(L_1+…+L_{n-1})`, so X(T) is exactly ℤ^{n-1}. Coweights are written
//! in the dual basis and the pairing is the dot product. Positive roots are
//! `L_i - L_j` (`i<j`), plus `L_i + L_j` and `2L_i` for `Sp`; dominant weights
//! therefore have weakly decreasing coordinates.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::error::{Result, SodError};
use crate::kernel::{rat, span_basis, CoweightVector, Matrix, Rational, RationalVector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupTag {
    Torus(usize),
    SL(usize),
    GL(usize),
    /// `Sp(2n)`; the payload is `2n`.
    Sp(usize),
    Product(Vec<GroupTag>),
}

impl GroupTag {
    pub fn rank(&self) -> usize {
        match self {
            GroupTag::Torus(n) | GroupTag::GL(n) => *n,
            GroupTag::SL(n) => n.saturating_sub(1),
            GroupTag::Sp(m) => m / 2,
            GroupTag::Product(fs) => fs.iter().map(GroupTag::rank).sum(),
        }
    }

    pub fn parse(s: &str) -> Result<GroupTag> {
        let mut p = TagParser { s: s.as_bytes(), pos: 0, src: s };
        let tag = p.tag()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err());
        }
        Ok(tag)
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Torus(n) => write!(f, "Torus({n})"),
            GroupTag::SL(n) => write!(f, "SL({n})"),
            GroupTag::GL(n) => write!(f, "GL({n})"),
            GroupTag::Sp(n) => write!(f, "Sp({n})"),
            GroupTag::Product(fs) => {
                write!(f, "Product(")?;
                for (i, g) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, ")")
            }
        }
    }
}

struct TagParser<'a> {
    s: &'a [u8],
    pos: usize,
    src: &'a str,
}

impl TagParser<'_> {
    fn err(&self) -> SodError {
        SodError::UnknownGroup(self.src.to_string())
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err())
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        self.src[start..self.pos].to_string()
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| self.err())
    }

    fn tag(&mut self) -> Result<GroupTag> {
        let name = self.ident();
        self.expect(b'(')?;
        let tag = if name == "Product" {
            let mut fs = vec![self.tag()?];
            loop {
                self.skip_ws();
                if self.s.get(self.pos) == Some(&b',') {
                    self.pos += 1;
                    fs.push(self.tag()?);
                } else {
                    break;
                }
            }
            GroupTag::Product(fs)
        } else {
            let n = self.number()?;
            match name.as_str() {
                "Torus" => GroupTag::Torus(n),
                "SL" if n >= 1 => GroupTag::SL(n),
                "GL" if n >= 1 => GroupTag::GL(n),
                "Sp" if n >= 2 && n % 2 == 0 => GroupTag::Sp(n),
                _ => return Err(self.err()),
            }
        };
        self.expect(b')')?;
        Ok(tag)
    }
}

/// A Weyl group element with its canonical (shortest, then lexicographically
/// least) word in the simple reflections. `matrix = s_{w0} s_{w1} …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub matrix: Matrix,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { word: Vec::new(), matrix: Matrix::identity(rank) }
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `det(w) = (-1)^{ℓ(w)}`.
    pub fn sign(&self) -> i8 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, chi: &RationalVector) -> RationalVector {
        self.matrix.apply(chi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDominant {
    pub weight: RationalVector,
    pub sign: i8,
    pub element: WeylElement,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    rank: usize,
    label: String,
    roots: Vec<RationalVector>,
    positive_roots: Vec<RationalVector>,
    positive_coroots: Vec<CoweightVector>,
    simple_roots: Vec<RationalVector>,
    simple_coroots: Vec<CoweightVector>,
    gram: Matrix,
    weyl_generators: Vec<Matrix>,
    rho_bar: RationalVector,
    weyl_group: OnceLock<Vec<WeylElement>>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.label == other.label
            && self.positive_roots == other.positive_roots
            && self.gram == other.gram
    }
}

impl Eq for RootDatum {}

/// `α̌ = 2Qα / (αᵀQα)` as a coweight.
fn coroot(gram: &Matrix, alpha: &RationalVector) -> CoweightVector {
    let qa = gram.apply(alpha);
    let norm = alpha.dot(&qa);
    qa.scale(&(rat(2) / norm))
}

fn reflection(alpha: &RationalVector, coroot: &CoweightVector) -> Matrix {
    let n = alpha.dim();
    let mut m = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let v = &alpha[i] * &coroot[j];
            m[(i, j)] -= v;
        }
    }
    m
}

impl RootDatum {
    pub fn build(tag: &GroupTag) -> Result<RootDatum> {
        let (gram, pos) = catalog_data(tag)?;
        Ok(RootDatum::from_positive_roots(tag.to_string(), gram, pos))
    }

    pub fn from_tag(s: &str) -> Result<RootDatum> {
        RootDatum::build(&GroupTag::parse(s)?)
    }

    /// Datum from a positive system of a reduced root system and an
    /// invariant form.
    pub fn from_positive_roots(label: String, gram: Matrix, positive_roots: Vec<RationalVector>) -> RootDatum {
        let rank = gram.rows;
        let mut roots: Vec<RationalVector> = positive_roots.clone();
        roots.extend(positive_roots.iter().map(|a| -a));
        roots.sort();
        let positive_coroots: Vec<CoweightVector> = positive_roots.iter().map(|a| coroot(&gram, a)).collect();
        let simple_idx: Vec<usize> = (0..positive_roots.len())
            .filter(|&k| {
                let a = &positive_roots[k];
                !positive_roots
                    .iter()
                    .any(|b| b != a && positive_roots.contains(&(a - b)))
            })
            .collect();
        let simple_roots: Vec<RationalVector> = simple_idx.iter().map(|&k| positive_roots[k].clone()).collect();
        let simple_coroots: Vec<CoweightVector> = simple_idx.iter().map(|&k| positive_coroots[k].clone()).collect();
        let weyl_generators = simple_roots
            .iter()
            .zip(&simple_coroots)
            .map(|(a, c)| reflection(a, c))
            .collect();
        let mut rho_bar = RationalVector::zeros(rank);
        for a in &positive_roots {
            rho_bar.add_scaled(&Rational::new(1.into(), 2.into()), a);
        }
        RootDatum {
            rank,
            label,
            roots,
            positive_roots,
            positive_coroots,
            simple_roots,
            simple_coroots,
            gram,
            weyl_generators,
            rho_bar,
            weyl_group: OnceLock::new(),
        }
    }

    /// Same datum with the invariant form multiplied by `s > 0`.
    pub fn with_scaled_gram(&self, s: &Rational) -> RootDatum {
        RootDatum::from_positive_roots(self.label.clone(), self.gram.scale(s), self.positive_roots.clone())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn roots(&self) -> &[RationalVector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[RationalVector] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[CoweightVector] {
        &self.positive_coroots
    }

    pub fn simple_roots(&self) -> &[RationalVector] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[CoweightVector] {
        &self.simple_coroots
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn weyl_generators(&self) -> &[Matrix] {
        &self.weyl_generators
    }

    pub fn rho_bar(&self) -> &RationalVector {
        &self.rho_bar
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn check_dim(&self, v: &RationalVector) -> Result<()> {
        if v.dim() == self.rank {
            Ok(())
        } else {
            Err(SodError::DimensionMismatch { expected: self.rank, found: v.dim() })
        }
    }

    /// `⟨λ, χ⟩`.
    pub fn pairing(&self, lambda: &CoweightVector, chi: &RationalVector) -> Result<Rational> {
        self.check_dim(lambda)?;
        self.check_dim(chi)?;
        Ok(lambda.dot(chi))
    }

    /// `(α̌, χ) ≥ 0` for every positive root of the group, or of the Levi
    /// subgroup when given.
    pub fn is_dominant(&self, chi: &RationalVector, levi: Option<&LeviDatum>) -> bool {
        let d = levi.map_or(self, |l| &l.datum);
        d.simple_coroots.iter().all(|c| !c.dot(chi).is_negative())
    }

    /// All elements in canonical-word order, by breadth-first search.
    pub fn weyl_group(&self) -> &[WeylElement] {
        self.weyl_group.get_or_init(|| {
            let mut seen: HashMap<Matrix, ()> = HashMap::new();
            let id = WeylElement::identity(self.rank);
            seen.insert(id.matrix.clone(), ());
            let mut out = vec![id];
            let mut head = 0;
            while head < out.len() {
                let w = out[head].clone();
                head += 1;
                for (g, s) in self.weyl_generators.iter().enumerate() {
                    let m = w.matrix.mul(s);
                    if seen.insert(m.clone(), ()).is_none() {
                        let mut word = w.word.clone();
                        word.push(g);
                        out.push(WeylElement { word, matrix: m });
                    }
                }
            }
            out
        })
    }

    fn canonical_element(&self, m: &Matrix) -> WeylElement {
        self.weyl_group()
            .iter()
            .find(|w| &w.matrix == m)
            .cloned()
            .expect("product of simple reflections lies in the Weyl group")
    }

    /// Dominant representative of the plain Weyl orbit and the shortest
    /// element taking `chi` there.
    pub fn make_dominant(&self, chi: &RationalVector) -> (RationalVector, WeylElement) {
        let mut v = chi.clone();
        let mut m = Matrix::identity(self.rank);
        while let Some(k) = self.simple_coroots.iter().position(|c| c.dot(&v).is_negative()) {
            v = self.weyl_generators[k].apply(&v);
            m = self.weyl_generators[k].mul(&m);
        }
        let w = if m == Matrix::identity(self.rank) {
            WeylElement::identity(self.rank)
        } else {
            self.canonical_element(&m)
        };
        (v, w)
    }

    /// `w∗χ = w(χ+ρ̄)−ρ̄`.
    pub fn star_act(&self, w: &WeylElement, chi: &RationalVector) -> RationalVector {
        &w.apply(&(chi + &self.rho_bar)) - &self.rho_bar
    }

    /// The dominant member `χ⁺` of the ∗-orbit of `chi`, or `None` when
    /// `χ+ρ̄` is fixed by a reflection.
    pub fn star_dominate(&self, chi: &RationalVector) -> Option<StarDominant> {
        let (v, element) = self.make_dominant(&(chi + &self.rho_bar));
        if self.simple_coroots.iter().any(|c| c.dot(&v).is_zero()) {
            return None;
        }
        Some(StarDominant { weight: &v - &self.rho_bar, sign: element.sign(), element })
    }

    /// Average of the Weyl group matrices acting on X(T).
    pub fn invariant_projector(&self) -> Matrix {
        let group = self.weyl_group();
        let mut p = Matrix::zeros(self.rank, self.rank);
        for w in group {
            p = p.add(&w.matrix);
        }
        p.scale(&Rational::new(1.into(), group.len().into()))
    }

    /// Basis of the Weyl-fixed subspace of X(T)_ℚ.
    pub fn invariant_subspace(&self) -> Vec<RationalVector> {
        let p = self.invariant_projector();
        let cols: Vec<RationalVector> = (0..self.rank).map(|j| p.col(j)).collect();
        span_basis(&cols, self.rank)
    }

    pub fn is_invariant(&self, chi: &RationalVector) -> bool {
        self.weyl_generators.iter().all(|g| &g.apply(chi) == chi)
    }

    /// Weyl average of a coweight. Coweights transform contragrediently,
    /// which for a full group average is the transpose of the weight average.
    pub fn average_coweight(&self, sigma: &CoweightVector) -> CoweightVector {
        self.invariant_projector().transpose().apply(sigma)
    }

    pub fn is_invariant_coweight(&self, lambda: &CoweightVector) -> bool {
        self.weyl_generators.iter().all(|g| &g.transpose().apply(lambda) == lambda)
    }

    /// `ℓ` is antidominant: `⟨λ,α⟩ ≤ 0` on positive roots.
    pub fn is_antidominant(&self, lambda: &CoweightVector) -> bool {
        self.positive_roots.iter().all(|a| !lambda.dot(a).is_positive())
    }

    /// The centralizer `G^λ` as a root subdatum.
    pub fn levi(&self, lambda: &CoweightVector) -> LeviDatum {
        let pos: Vec<RationalVector> = self
            .positive_roots
            .iter()
            .filter(|a| lambda.dot(a).is_zero())
            .cloned()
            .collect();
        let mut datum = RootDatum::from_positive_roots(String::new(), self.gram.clone(), pos);
        datum.label = datum.dynkin_label();
        let projector = datum.invariant_projector();
        LeviDatum { lambda: lambda.clone(), datum, invariant_projector: projector }
    }

    /// Cartan type of the derived group times the central torus rank, e.g.
    /// `A1×C2×T1`.
    pub fn dynkin_label(&self) -> String {
        let k = self.simple_roots.len();
        let mut comp: Vec<usize> = (0..k).collect();
        fn find(c: &mut [usize], i: usize) -> usize {
            if c[i] != i {
                let r = find(c, c[i]);
                c[i] = r;
            }
            c[i]
        }
        for i in 0..k {
            for j in i + 1..k {
                let ip = self.simple_roots[i].dot(&self.gram.apply(&self.simple_roots[j]));
                if !ip.is_zero() {
                    let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                    comp[a] = b;
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..k {
            let r = find(&mut comp, i);
            groups.entry(r).or_default().push(i);
        }
        let mut parts: Vec<(char, usize)> = groups
            .values()
            .map(|members| {
                let lens: Vec<Rational> = members
                    .iter()
                    .map(|&i| self.simple_roots[i].dot(&self.gram.apply(&self.simple_roots[i])))
                    .collect();
                let two_lengths = lens.iter().any(|l| l != &lens[0]);
                (if two_lengths { 'C' } else { 'A' }, members.len())
            })
            .collect();
        parts.sort();
        let mut labels: Vec<String> = parts.iter().map(|(t, n)| format!("{t}{n}")).collect();
        let central = self.rank - k;
        if central > 0 || labels.is_empty() {
            labels.push(format!("T{central}"));
        }
        labels.join("×")
    }
}

fn catalog_data(tag: &GroupTag) -> Result<(Matrix, Vec<RationalVector>)> {
    let unit = RationalVector::unit;
    match tag {
        GroupTag::Torus(n) => Ok((Matrix::identity(*n), Vec::new())),
        GroupTag::GL(n) => {
            let mut pos = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    pos.push(&unit(*n, i) - &unit(*n, j));
                }
            }
            Ok((Matrix::identity(*n), pos))
        }
        GroupTag::SL(n) => {
            if *n == 0 {
                return Err(SodError::UnknownGroup(tag.to_string()));
            }
            let r = n - 1;
            // L_n = -(L_1+…+L_{n-1}).
            let l = |i: usize| {
                if i < r {
                    unit(r, i)
                } else {
                    RationalVector(vec![-Rational::one(); r])
                }
            };
            let mut pos = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    pos.push(&l(i) - &l(j));
                }
            }
            let mut gram = Matrix::identity(r);
            let shift = Rational::new(1.into(), (*n).into());
            for i in 0..r {
                for j in 0..r {
                    gram[(i, j)] -= &shift;
                }
            }
            Ok((gram, pos))
        }
        GroupTag::Sp(m) => {
            if *m == 0 || m % 2 == 1 {
                return Err(SodError::UnknownGroup(tag.to_string()));
            }
            let n = m / 2;
            let mut pos = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    pos.push(&unit(n, i) - &unit(n, j));
                    pos.push(&unit(n, i) + &unit(n, j));
                }
                pos.push(unit(n, i).scale(&rat(2)));
            }
            Ok((Matrix::identity(n), pos))
        }
        GroupTag::Product(fs) => {
            let rank = tag.rank();
            let mut gram = Matrix::zeros(rank, rank);
            let mut pos = Vec::new();
            let mut off = 0;
            for f in fs {
                let (g, p) = catalog_data(f)?;
                let k = g.rows;
                for i in 0..k {
                    for j in 0..k {
                        gram[(off + i, off + j)] = g[(i, j)].clone();
                    }
                }
                for a in p {
                    let mut v = RationalVector::zeros(rank);
                    for i in 0..k {
                        v[off + i] = a[i].clone();
                    }
                    pos.push(v);
                }
                off += k;
            }
            Ok((gram, pos))
        }
    }
}

/// The root subdatum of `G^λ` together with its Weyl-averaging projector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviDatum {
    pub lambda: CoweightVector,
    pub datum: RootDatum,
    pub invariant_projector: Matrix,
}

impl LeviDatum {
    pub fn phi_lambda(&self) -> &[RationalVector] {
        self.datum.roots()
    }

    pub fn positive_roots(&self) -> &[RationalVector] {
        self.datum.positive_roots()
    }

    pub fn rho_bar_lambda(&self) -> &RationalVector {
        self.datum.rho_bar()
    }

    pub fn weyl_generators(&self) -> &[Matrix] {
        self.datum.weyl_generators()
    }

    pub fn label(&self) -> &str {
        self.datum.label()
    }

    pub fn is_dominant(&self, chi: &RationalVector) -> bool {
        self.datum.is_dominant(chi, None)
    }

    pub fn is_invariant(&self, chi: &RationalVector) -> bool {
        self.datum.is_invariant(chi)
    }

    /// Basis of the `𝒲_{G^λ}`-fixed subspace.
    pub fn invariant_subspace(&self) -> Vec<RationalVector> {
        let cols: Vec<RationalVector> = (0..self.datum.rank()).map(|j| self.invariant_projector.col(j)).collect();
        span_basis(&cols, self.datum.rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::frac;

    fn v(x: &[i64]) -> RationalVector {
        RationalVector::from_ints(x)
    }

    #[test]
    fn tags_roundtrip() {
        for s in ["Torus(3)", "SL(2)", "GL(4)", "Sp(4)", "Product(SL(2),Torus(1))"] {
            assert_eq!(GroupTag::parse(s).unwrap().to_string(), s);
        }
        assert!(GroupTag::parse("Sp(3)").is_err());
        assert!(GroupTag::parse("E(8)").is_err());
        assert!(GroupTag::parse("GL(2) x").is_err());
    }

    #[test]
    fn sp4_rho() {
        let g = RootDatum::from_tag("Sp(4)").unwrap();
        assert_eq!(g.rho_bar(), &v(&[2, 1]));
        assert_eq!(g.weyl_group().len(), 8);
        assert_eq!(g.simple_roots(), &[v(&[1, -1]), v(&[0, 2])]);
    }

    #[test]
    fn torus_and_sl2() {
        let t = RootDatum::from_tag("Torus(3)").unwrap();
        assert!(t.roots().is_empty());
        assert!(t.rho_bar().is_zero());
        let s = RootDatum::from_tag("SL(2)").unwrap();
        assert_eq!(s.positive_roots().len(), 1);
        assert_eq!(s.positive_coroots()[0].dot(s.rho_bar()), rat(1));
        assert_eq!(s.positive_coroots()[0].dot(&s.positive_roots()[0]), rat(2));
    }

    #[test]
    fn gl_rho_is_half_integral() {
        let g = RootDatum::from_tag("GL(2)").unwrap();
        assert_eq!(g.rho_bar(), &RationalVector(vec![frac(1, 2), frac(-1, 2)]));
    }

    #[test]
    fn dominance_and_star_action() {
        let s = RootDatum::from_tag("SL(2)").unwrap();
        assert!(s.is_dominant(&v(&[3]), None));
        assert!(!s.is_dominant(&v(&[-1]), None));
        let d = s.star_dominate(&v(&[-2])).unwrap();
        assert_eq!((d.weight, d.sign), (v(&[0]), -1));
        assert!(s.star_dominate(&v(&[-1])).is_none());
        let d = s.star_dominate(&v(&[5])).unwrap();
        assert_eq!((d.weight, d.sign), (v(&[5]), 1));
        assert_eq!(s.make_dominant(&v(&[-4])).0, v(&[4]));
    }

    #[test]
    fn sp4_make_dominant() {
        let g = RootDatum::from_tag("Sp(4)").unwrap();
        let (d, w) = g.make_dominant(&v(&[-1, 2]));
        assert_eq!(d, v(&[2, 1]));
        assert_eq!(w.apply(&v(&[-1, 2])), d);
        let (d, w) = g.make_dominant(&v(&[3, 1]));
        assert_eq!(d, v(&[3, 1]));
        assert_eq!(w.length(), 0);
    }

    #[test]
    fn levi_of_sp4() {
        let g = RootDatum::from_tag("Sp(4)").unwrap();
        let l = g.levi(&v(&[-1, -1]));
        assert_eq!(l.phi_lambda(), &[v(&[-1, 1]), v(&[1, -1])]);
        assert_eq!(l.rho_bar_lambda(), &RationalVector(vec![frac(1, 2), frac(-1, 2)]));
        assert_eq!(l.label(), "A1×T1");
        let full = g.levi(&v(&[0, 0]));
        assert_eq!(full.phi_lambda(), g.roots());
        assert_eq!(full.label(), "C2");
        // Only the surviving root 2L_2 matters for Levi dominance.
        let l2 = g.levi(&v(&[-1, 0]));
        assert_eq!(l2.positive_roots(), &[v(&[0, 2])]);
        assert!(g.is_dominant(&v(&[-3, 1]), Some(&l2)));
        assert!(!g.is_dominant(&v(&[-3, 1]), None));
    }

    #[test]
    fn invariant_subspaces() {
        let gl = RootDatum::from_tag("GL(3)").unwrap();
        let inv = gl.invariant_subspace();
        assert_eq!(inv.len(), 1);
        assert_eq!(inv[0].primitive(), v(&[1, 1, 1]));
        assert!(RootDatum::from_tag("Sp(6)").unwrap().invariant_subspace().is_empty());
        assert_eq!(RootDatum::from_tag("Torus(2)").unwrap().invariant_subspace().len(), 2);
    }

    #[test]
    fn weyl_orders() {
        for (tag, order) in [("GL(3)", 6), ("SL(4)", 24), ("Sp(6)", 48), ("Product(SL(2),Sp(4))", 16)] {
            assert_eq!(RootDatum::from_tag(tag).unwrap().weyl_group().len(), order, "{tag}");
        }
    }
}
