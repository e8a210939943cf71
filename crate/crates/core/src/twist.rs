//! Cocycle twists by a bicharacter of the grading group.
//!
//! The twisted product is `x ∘ y = σ(G_x, G_y) (x * y) σ^{-1}(T_x, T_y)` on
//! basis words, where `G` is the full grading (first slot group) and `T` the
//! tail; these are the only group-like components of the iterated coproduct
//! at the two ends.

use crate::cartan::ParamMatrix;
use crate::error::{Error, Result};
use crate::grouplike::{build_bicharacter, Bicharacter, GroupElement};
use crate::qqsa::{Algebra, Element, Letter, Word};
use crate::scalars::Field;
use crate::uq::{psi_gen, relation_expressions, GeneratorExpr, JOutcome, JReducer, RelationId, RelationStatus};

#[derive(Clone, Debug)]
pub struct TwistContext<F> {
    alg: Algebra<F>,
    hat: Algebra<F>,
    sigma: Bicharacter<F>,
}

impl<F: Field> TwistContext<F> {
    /// Twist the `q`-structure by the gauge bicharacter relating it to `q̂`.
    pub fn new(q: &ParamMatrix, qhat: &ParamMatrix) -> Result<Self> {
        if q.datum() != qhat.datum() {
            return Err(Error::InvalidArgument("parameter matrices for different Cartan data".into()));
        }
        let alg = Algebra::new(q, None)?;
        let hat = Algebra::new(qhat, None)?;
        if alg.group() != hat.group() {
            return Err(Error::InvalidArgument("grading groups differ".into()));
        }
        let sigma = build_bicharacter(alg.q_matrix(), hat.q_matrix(), alg.group())?;
        Ok(TwistContext { alg, hat, sigma })
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }

    pub fn hat(&self) -> &Algebra<F> {
        &self.hat
    }

    pub fn sigma(&self) -> &Bicharacter<F> {
        &self.sigma
    }

    /// `h ·_σ a = σ(h, g_a) σ^{-1}(g_a, h) (h · a)`, as the scalar factor.
    pub fn twisted_action(&self, h: &GroupElement, l: &Letter) -> F {
        let g = self.alg.grading(l);
        self.sigma
            .eval(h, &g)
            .mul(&self.sigma.eval_inv(&g, h))
            .mul(&self.alg.character(l).eval(h))
    }

    pub fn twisted_product(&self, x: &Element<F>, y: &Element<F>) -> Element<F> {
        let mut out = Element::zero();
        for (wx, cx) in x.terms() {
            let gx = self.alg.word_grading(wx);
            for (wy, cy) in y.terms() {
                let gy = self.alg.word_grading(wy);
                let f = self
                    .sigma
                    .eval(&gx, &gy)
                    .mul(&self.sigma.eval_inv(&wx.tail, &wy.tail))
                    .mul(cx)
                    .mul(cy);
                let prod = self
                    .alg
                    .mul(&Element::from_word(wx.clone()), &Element::from_word(wy.clone()));
                out = out.add(&prod.scale(&f));
            }
        }
        out
    }

    /// `∏_j σ(grading(a_j), K_j^{-1})` over the slots of a word.
    pub fn phi_factor(&self, w: &Word) -> F {
        let grp = self.alg.group();
        self.alg
            .slot_groups(w)
            .iter()
            .zip(&w.letters)
            .fold(F::one(), |acc, (k, l)| {
                acc.mul(&self.sigma.eval(&self.alg.grading(l), &grp.inv(k)))
            })
    }

    /// The comparison map from the twisted algebra to the `q̂` algebra.
    pub fn phi(&self, x: &Element<F>) -> Element<F> {
        Element::from_terms(x.terms().map(|(w, c)| (w.clone(), c.mul(&self.phi_factor(w)))))
    }

    pub fn phi_inverse(&self, x: &Element<F>) -> Result<Element<F>> {
        let mut out = Element::zero();
        for (w, c) in x.terms() {
            out.add_term(w.clone(), c.div(&self.phi_factor(w))?);
        }
        Ok(out)
    }

    /// `ψ` evaluated with the twisted product.
    pub fn psi_twisted(&self, x: &GeneratorExpr<F>) -> Result<Element<F>> {
        let mut out = Element::zero();
        for (gens, c) in x.terms() {
            let mut acc = self.alg.one();
            for &g in gens {
                acc = self.twisted_product(&acc, &psi_gen(&self.alg, g)?);
            }
            out = out.add(&acc.scale(c));
        }
        Ok(out)
    }

    /// The `ξ`-parts of `E_i K ∘ F_j K'` and of `Φ^{-1}(Φ(E_i K) *̂ Φ(F_j K'))`.
    pub fn alpha_pair(&self, i: usize, j: usize, k: &GroupElement, kp: &GroupElement) -> Result<(Element<F>, Element<F>)> {
        let x = self.alg.letter(Letter::E(i as u8), k.clone());
        let y = self.alg.letter(Letter::F(j as u8), kp.clone());
        let xi = |w: &Word| w.xi_count() > 0;
        let lhs = self.twisted_product(&x, &y).filter(xi);
        let rhs = self.phi_inverse(&self.hat.mul(&self.phi(&x), &self.phi(&y)).filter(xi))?;
        Ok((lhs, rhs))
    }

    /// Checks every `R'` relation with hatted constants under `∘`.
    pub fn verify_twisted_relations(&self, reducer: &JReducer) -> Result<Vec<(RelationId, RelationStatus)>> {
        let mut out = Vec::new();
        for id in RelationId::all(self.alg.rank()) {
            let mut status = RelationStatus::Zero;
            for e in relation_expressions(&self.hat, id)? {
                let r = self.psi_twisted(&e)?;
                if r.is_zero() {
                    continue;
                }
                match reducer.reduce(&self.alg, &r)? {
                    JOutcome::Zero { .. } => status = RelationStatus::ZeroModJ { bound: reducer.bound() },
                    JOutcome::NonZero { residue } => {
                        status = RelationStatus::Failed {
                            residual: self.alg.display(&residue),
                        };
                        break;
                    }
                    JOutcome::Undecided { .. } => {
                        status = RelationStatus::Undecided { bound: reducer.bound() };
                        break;
                    }
                }
            }
            out.push((id, status));
        }
        Ok(out)
    }
}
