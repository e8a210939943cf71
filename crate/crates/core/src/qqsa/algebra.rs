use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use smallvec::SmallVec;

use super::{Element, Letter, Letters, Tensor, Word};
use crate::cartan::{LatticeVector, ParamMatrix};
use crate::error::{Error, Result};
use crate::grouplike::{Character, GradingGroup, GroupElement};
use crate::scalars::Field;

/// Structure constants of one quantum quasi-symmetric algebra: parameters,
/// grading group, letter gradings and letter characters.
#[derive(Clone, Debug)]
pub struct Algebra<F> {
    params: ParamMatrix,
    group: GradingGroup,
    lambda: Option<LatticeVector>,
    q: Vec<Vec<F>>,
    c: Vec<F>,
    chi_e: Vec<Character<F>>,
    chi_f: Vec<Character<F>>,
    chi_xi: Character<F>,
    chi_v: Option<Character<F>>,
    antipode_cache: RefCell<HashMap<Word, Element<F>>>,
}

impl<F: Field> Algebra<F> {
    /// The algebra for `params`, with the letter `V` of weight `lambda` when
    /// given.
    pub fn new(params: &ParamMatrix, lambda: Option<LatticeVector>) -> Result<Self> {
        let n = params.rank();
        let bad = params.constraint_violations();
        if !bad.is_empty() {
            return Err(Error::ConstraintViolation { pairs: bad });
        }
        if let Some(l) = &lambda {
            if l.rank() != n {
                return Err(Error::Dimension(format!("weight {l} for rank {n}")));
            }
        }
        let group = GradingGroup::new(n, lambda.is_some(), params.ell());
        let q: Vec<Vec<F>> = (0..n)
            .map(|i| (0..n).map(|j| params.entry_in(i, j)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let one = F::one();
        let c = (0..n)
            .map(|i| q[i][i].div(&q[i][i].sub(&one)))
            .collect::<Result<Vec<F>>>()?;
        let count = group.generator_count();
        let datum = params.datum();
        // q_{α_i λ}, q_{λ α_i}, q_{λ λ}
        let lam = match &lambda {
            Some(l) => {
                let al: Vec<F> = (0..n)
                    .map(|i| params.q_pairing_in(&datum.simple_root(i), l))
                    .collect::<Result<_>>()?;
                let la: Vec<F> = (0..n)
                    .map(|i| params.q_pairing_in(l, &datum.simple_root(i)))
                    .collect::<Result<_>>()?;
                let ll: F = params.q_pairing_in(l, l)?;
                Some((al, la, ll))
            }
            None => None,
        };
        let mut chi_e = Vec::with_capacity(n);
        let mut chi_f = Vec::with_capacity(n);
        for j in 0..n {
            let mut ve = Vec::with_capacity(count);
            let mut vf = Vec::with_capacity(count);
            for i in 0..n {
                ve.push(q[i][j].clone());
                vf.push(q[i][j].inv()?);
            }
            for i in 0..n {
                ve.push(q[j][i].inv()?);
                vf.push(q[j][i].clone());
            }
            if let Some((al, _, _)) = &lam {
                ve.push(al[j].inv()?);
                vf.push(al[j].clone());
            }
            chi_e.push(Character::new(ve)?);
            chi_f.push(Character::new(vf)?);
        }
        let chi_v = match &lam {
            Some((al, la, ll)) => {
                let mut v: Vec<F> = al.clone();
                for x in la {
                    v.push(x.inv()?);
                }
                v.push(ll.clone());
                Some(Character::new(v)?)
            }
            None => None,
        };
        Ok(Algebra {
            params: params.clone(),
            group,
            lambda,
            q,
            c,
            chi_e,
            chi_f,
            chi_xi: Character::trivial(count),
            chi_v,
            antipode_cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn params(&self) -> &ParamMatrix {
        &self.params
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.q.len()
    }

    pub fn lambda(&self) -> Option<&LatticeVector> {
        self.lambda.as_ref()
    }

    /// `q_ij` in `F`.
    pub fn q(&self, i: usize, j: usize) -> &F {
        &self.q[i][j]
    }

    pub fn q_matrix(&self) -> &[Vec<F>] {
        &self.q
    }

    /// `q_ii / (q_ii − 1)`.
    pub fn c(&self, i: usize) -> &F {
        &self.c[i]
    }

    pub fn grading(&self, l: &Letter) -> GroupElement {
        let g = &self.group;
        match *l {
            Letter::E(i) => g.k(usize::from(i)),
            Letter::F(i) => g.inv(&g.k_prime(usize::from(i))),
            Letter::Xi(i) => {
                let i = usize::from(i);
                g.mul(&g.k(i), &g.inv(&g.k_prime(i)))
            }
            Letter::V => g.k_lambda().expect("letter v needs K_λ"),
        }
    }

    pub fn character(&self, l: &Letter) -> &Character<F> {
        match *l {
            Letter::E(i) => &self.chi_e[usize::from(i)],
            Letter::F(i) => &self.chi_f[usize::from(i)],
            Letter::Xi(_) => &self.chi_xi,
            Letter::V => self.chi_v.as_ref().expect("letter v needs a weight"),
        }
    }

    pub fn letters_grading(&self, letters: &[Letter]) -> GroupElement {
        letters
            .iter()
            .fold(self.group.identity(), |acc, l| self.group.mul(&acc, &self.grading(l)))
    }

    /// Grading of the whole word, tail included.
    pub fn word_grading(&self, w: &Word) -> GroupElement {
        self.group.mul(&self.letters_grading(&w.letters), &w.tail)
    }

    /// The group element of each slot.
    pub fn slot_groups(&self, w: &Word) -> Vec<GroupElement> {
        let n = w.len();
        let mut out = vec![w.tail.clone(); n];
        for j in (0..n.saturating_sub(1)).rev() {
            out[j] = self.group.mul(&self.grading(&w.letters[j + 1]), &out[j + 1]);
        }
        out
    }

    /// Root-lattice weight of the letters: `E_i ↦ α_i`, `F_i ↦ −α_i`,
    /// `ξ_i ↦ 0`, `v ↦ λ`.
    pub fn weight(&self, w: &Word) -> LatticeVector {
        let n = self.rank();
        let mut acc = LatticeVector::zero(n);
        for l in &w.letters {
            match *l {
                Letter::E(i) => acc = acc.add(&LatticeVector::simple(n, usize::from(i))),
                Letter::F(i) => acc = acc.sub(&LatticeVector::simple(n, usize::from(i))),
                Letter::Xi(_) => {}
                Letter::V => {
                    if let Some(l) = &self.lambda {
                        acc = acc.add(l);
                    }
                }
            }
        }
        acc
    }

    pub fn one(&self) -> Element<F> {
        Element::from_word(Word::group(self.group.identity()))
    }

    pub fn group_element(&self, g: GroupElement) -> Element<F> {
        Element::from_word(Word::group(g))
    }

    /// `a K` for one letter `a` and a group element `K`.
    pub fn letter(&self, l: Letter, tail: GroupElement) -> Element<F> {
        Element::from_word(Word::new(&[l], tail))
    }

    fn check_letter(&self, l: &Letter) -> Result<()> {
        match l.index() {
            Some(i) if i >= self.rank() => Err(Error::InvalidArgument(format!("letter {l} out of range"))),
            None if self.lambda.is_none() => Err(Error::InvalidArgument("letter v needs a weight".into())),
            _ => Ok(()),
        }
    }

    /// Checks letter indices and tail length.
    pub fn validate(&self, x: &Element<F>) -> Result<()> {
        for (w, _) in x.terms() {
            if w.tail.0.len() != self.group.generator_count() {
                return Err(Error::Dimension("tail length".into()));
            }
            for l in &w.letters {
                self.check_letter(l)?;
            }
        }
        Ok(())
    }

    /// Product of two basis words, accumulated into `out` with factor `coeff`.
    fn word_product(&self, x: &Word, y: &Word, coeff: &F, out: &mut BTreeMap<Word, F>) {
        let m = x.len();
        let p = y.len();
        // sx[i] = grading(x[i..]) · T_x
        let mut sx = vec![x.tail.clone(); m + 1];
        for i in (0..m).rev() {
            sx[i] = self.group.mul(&self.grading(&x.letters[i]), &sx[i + 1]);
        }
        let chi: Vec<Vec<F>> = y
            .letters
            .iter()
            .map(|l| {
                let ch = self.character(l);
                sx.iter().map(|g| ch.eval(g)).collect()
            })
            .collect();
        let tail = self.group.mul(&x.tail, &y.tail);
        let mut buf: Letters = SmallVec::new();
        let ctx = Merge {
            alg: self,
            x: &x.letters,
            y: &y.letters,
            chi: &chi,
            tail: &tail,
            m,
            p,
        };
        ctx.run(0, 0, coeff.clone(), &mut buf, out);
    }

    pub fn mul(&self, a: &Element<F>, b: &Element<F>) -> Element<F> {
        let mut out = BTreeMap::new();
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                self.word_product(x, y, &cx.mul(cy), &mut out);
            }
        }
        Element::from_terms(out)
    }

    /// Left-to-right product of several elements.
    pub fn mul_all(&self, factors: &[&Element<F>]) -> Element<F> {
        factors
            .iter()
            .fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn power(&self, x: &Element<F>, r: u32) -> Element<F> {
        let mut acc = self.one();
        for _ in 0..r {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// `h · x` for a group-like `h`.
    pub fn act_left(&self, h: &GroupElement, x: &Element<F>) -> Element<F> {
        Element::from_terms(x.terms().map(|(w, c)| {
            let coeff = w
                .letters
                .iter()
                .fold(c.clone(), |acc, l| acc.mul(&self.character(l).eval(h)));
            (
                Word {
                    letters: w.letters.clone(),
                    tail: self.group.mul(h, &w.tail),
                },
                coeff,
            )
        }))
    }

    /// `x · h` for a group-like `h`.
    pub fn act_right(&self, x: &Element<F>, h: &GroupElement) -> Element<F> {
        x.map_words(|w| Word {
            letters: w.letters.clone(),
            tail: self.group.mul(&w.tail, h),
        })
    }

    /// Deconcatenation of one word.
    fn word_coproduct(&self, w: &Word) -> Vec<(Word, Word)> {
        let n = w.len();
        let mut out = Vec::with_capacity(n + 1);
        let mut g = w.tail.clone();
        let mut cuts = vec![g.clone(); n + 1];
        for j in (0..n).rev() {
            g = self.group.mul(&self.grading(&w.letters[j]), &g);
            cuts[j] = g.clone();
        }
        for j in 0..=n {
            let left = Word {
                letters: w.letters[..j].iter().copied().collect(),
                tail: cuts[j].clone(),
            };
            let right = Word {
                letters: w.letters[j..].iter().copied().collect(),
                tail: w.tail.clone(),
            };
            out.push((left, right));
        }
        out
    }

    pub fn coproduct(&self, x: &Element<F>) -> Tensor<F> {
        let mut t = Tensor::zero();
        for (w, c) in x.terms() {
            for (l, r) in self.word_coproduct(w) {
                t.add_term(vec![l, r], c.clone());
            }
        }
        t
    }

    /// Applies `Δ` to tensor factor `pos`.
    pub fn coproduct_at(&self, t: &Tensor<F>, pos: usize) -> Tensor<F> {
        let mut out = Tensor::zero();
        for (k, c) in t.terms() {
            for (l, r) in self.word_coproduct(&k[pos]) {
                let mut key = Vec::with_capacity(k.len() + 1);
                key.extend_from_slice(&k[..pos]);
                key.push(l);
                key.push(r);
                key.extend_from_slice(&k[pos + 1..]);
                out.add_term(key, c.clone());
            }
        }
        out
    }

    /// Factorwise product in `A^{⊗n}`.
    pub fn tensor_mul(&self, a: &Tensor<F>, b: &Tensor<F>) -> Tensor<F> {
        let mut out = Tensor::zero();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let mut partial: Vec<(Vec<Word>, F)> = vec![(Vec::new(), ca.mul(cb))];
                for (wa, wb) in ka.iter().zip(kb) {
                    let mut prod = BTreeMap::new();
                    self.word_product(wa, wb, &F::one(), &mut prod);
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (key, c) in &partial {
                        for (w, d) in &prod {
                            let mut k2 = key.clone();
                            k2.push(w.clone());
                            next.push((k2, c.mul(d)));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    out.add_term(k, c);
                }
            }
        }
        out
    }

    pub fn counit(&self, x: &Element<F>) -> F {
        x.terms()
            .filter(|(w, _)| w.is_empty())
            .fold(F::zero(), |acc, (_, c)| acc.add(c))
    }

    /// Left coaction of the group algebra: `a K ↦ grading(a)K ⊗ a K`.
    pub fn left_coaction(&self, x: &Element<F>) -> Tensor<F> {
        let mut t = Tensor::zero();
        for (w, c) in x.terms() {
            t.add_term(vec![Word::group(self.word_grading(w)), w.clone()], c.clone());
        }
        t
    }

    /// Right coaction: `a K ↦ a K ⊗ K`.
    pub fn right_coaction(&self, x: &Element<F>) -> Tensor<F> {
        let mut t = Tensor::zero();
        for (w, c) in x.terms() {
            t.add_term(vec![w.clone(), Word::group(w.tail.clone())], c.clone());
        }
        t
    }

    fn word_antipode(&self, w: &Word) -> Element<F> {
        if w.is_empty() {
            return self.group_element(self.group.inv(&w.tail));
        }
        if let Some(v) = self.antipode_cache.borrow().get(w) {
            return v.clone();
        }
        // m(S ⊗ id)Δ(w) = 0, solved for the last deconcatenation term.
        let mut acc = Element::zero();
        let parts = self.word_coproduct(w);
        for (l, r) in &parts[..w.len()] {
            acc = acc.add(&self.mul(&self.word_antipode(l), &Element::from_word(r.clone())));
        }
        let s = self.act_right(&acc, &self.group.inv(&w.tail)).neg();
        self.antipode_cache.borrow_mut().insert(w.clone(), s.clone());
        s
    }

    pub fn antipode(&self, x: &Element<F>) -> Element<F> {
        let mut out = Element::zero();
        for (w, c) in x.terms() {
            out = out.add(&self.word_antipode(w).scale(c));
        }
        out
    }

    /// `m ∘ (f ⊗ g)` applied to a two-fold tensor.
    pub fn multiply_tensor(&self, t: &Tensor<F>) -> Element<F> {
        let mut out = BTreeMap::new();
        for (k, c) in t.terms() {
            if let [a, b] = k.as_slice() {
                self.word_product(a, b, c, &mut out);
            }
        }
        Element::from_terms(out)
    }

    /// `x_{(1)} y S(x_{(2)})`.
    pub fn ad_left(&self, x: &Element<F>, y: &Element<F>) -> Element<F> {
        let mut out = Element::zero();
        for (k, c) in self.coproduct(x).terms() {
            let a = Element::term(k[0].clone(), c.clone());
            let s = self.word_antipode(&k[1]);
            out = out.add(&self.mul(&self.mul(&a, y), &s));
        }
        out
    }

    /// `S(x_{(1)}) y x_{(2)}`.
    pub fn ad_right(&self, x: &Element<F>, y: &Element<F>) -> Element<F> {
        let mut out = Element::zero();
        for (k, c) in self.coproduct(x).terms() {
            let s = self.word_antipode(&k[0]).scale(c);
            let b = Element::from_word(k[1].clone());
            out = out.add(&self.mul(&self.mul(&s, y), &b));
        }
        out
    }
}

struct Merge<'a, F> {
    alg: &'a Algebra<F>,
    x: &'a [Letter],
    y: &'a [Letter],
    chi: &'a [Vec<F>],
    tail: &'a GroupElement,
    m: usize,
    p: usize,
}

impl<F: Field> Merge<'_, F> {
    fn run(&self, i: usize, j: usize, c: F, buf: &mut Letters, out: &mut BTreeMap<Word, F>) {
        if i == self.m && j == self.p {
            let w = Word {
                letters: buf.clone(),
                tail: self.tail.clone(),
            };
            use std::collections::btree_map::Entry;
            match out.entry(w) {
                Entry::Vacant(v) => {
                    v.insert(c);
                }
                Entry::Occupied(mut o) => {
                    let s = o.get().add(&c);
                    if s.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = s;
                    }
                }
            }
            return;
        }
        if i < self.m {
            buf.push(self.x[i]);
            self.run(i + 1, j, c.clone(), buf, out);
            buf.pop();
        }
        if j < self.p {
            buf.push(self.y[j]);
            self.run(i, j + 1, c.mul(&self.chi[j][i]), buf, out);
            buf.pop();
        }
        if i < self.m && j < self.p {
            if let (Letter::E(a), Letter::F(b)) = (self.x[i], self.y[j]) {
                if a == b {
                    let k = usize::from(a);
                    let f = self.alg.c(k).mul(&self.chi[j][i + 1]);
                    buf.push(Letter::Xi(a));
                    self.run(i + 1, j + 1, c.mul(&f), buf, out);
                    buf.pop();
                }
            }
        }
    }
}
