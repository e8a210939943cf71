//! The verification suites behind each subcommand.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qqsa::cartan::{CartanDatum, ParamMatrix};
use qqsa::grouplike::gauge_violations;
use qqsa::qqsa::{Algebra, Element, Letter, Word};
use qqsa::repr::{alcove_check, weyl_dimension, ModuleSetup};
use qqsa::scalars::{Cyclo, Field, Scalar};
use qqsa::twist::TwistContext;
use qqsa::uq::{
    ad_closed_form, ad_power, check_relation, gram_matrix, letter_power_closed_form, psi_gen, Gen, JReducer,
    RelationId, RelationStatus, Side,
};

use crate::config::{ConfigError, Mode, RunConfig};
use crate::report::{Report, Status};

fn lib_status(e: &qqsa::Error) -> Status {
    match e {
        qqsa::Error::Undecided { .. } => Status::Undecided,
        _ => Status::Fail,
    }
}

fn check(cond: bool) -> Status {
    if cond {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Runs `body` in the field matching the configured parameter mode.
macro_rules! in_field {
    ($cfg:expr, $f:ident, $body:expr) => {
        if $cfg.parameters.mode == Mode::RootOfUnity {
            $f::<Cyclo>($cfg, $body)
        } else {
            $f::<Scalar>($cfg, $body)
        }
    };
}

fn algebra<F: Field>(cfg: &RunConfig) -> Result<Algebra<F>, ConfigError> {
    Ok(Algebra::new(&cfg.params(1)?, None)?)
}

pub fn relations(cfg: &RunConfig, bound: usize) -> Result<Report, ConfigError> {
    fn go<F: Field>(cfg: &RunConfig, bound: usize) -> Result<Report, ConfigError> {
        let alg = algebra::<F>(cfg)?;
        let reducer = JReducer::new(bound);
        let mut rep = Report::default();
        for id in RelationId::all(alg.rank()) {
            let (status, detail) = match check_relation(&alg, id, &reducer) {
                Ok(RelationStatus::Zero) => (Status::Pass, "zero".to_string()),
                Ok(RelationStatus::ZeroModJ { bound }) => (Status::Pass, format!("zero-mod-J({bound})")),
                Ok(RelationStatus::Undecided { bound }) => (Status::Undecided, format!("undecided at bound {bound}")),
                Ok(RelationStatus::Failed { residual }) => (Status::Fail, format!("residual {residual}")),
                Err(e) => (lib_status(&e), e.to_string()),
            };
            rep.push("relations", id.to_string(), status, detail);
        }
        Ok(rep)
    }
    in_field!(cfg, go, bound)
}

fn letters<F: Field>(alg: &Algebra<F>) -> Vec<Letter> {
    (0..alg.rank() as u8)
        .flat_map(|i| [Letter::E(i), Letter::F(i), Letter::Xi(i)])
        .collect()
}

fn words<F: Field>(alg: &Algebra<F>, len: usize) -> Vec<Word> {
    let ls = letters(alg);
    let g = alg.group();
    let tail = g.mul(&g.k(0), &g.inv(&g.k_prime(alg.rank() - 1)));
    let mut out = vec![Word::group(tail.clone())];
    let mut layer: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for l in &ls {
                let mut v = w.clone();
                v.push(*l);
                out.push(Word::new(&v, tail.clone()));
                next.push(v);
            }
        }
        layer = next;
    }
    out
}

fn antipode_holds<F: Field>(alg: &Algebra<F>, x: &Element<F>) -> bool {
    let mut left = Element::zero();
    let mut right = Element::zero();
    for (k, c) in alg.coproduct(x).terms() {
        let a = Element::term(k[0].clone(), c.clone());
        let b = Element::from_word(k[1].clone());
        left = left.add(&alg.mul(&alg.antipode(&a), &b));
        right = right.add(&alg.mul(&a, &alg.antipode(&b)));
    }
    let unit = alg.one().scale(&alg.counit(x));
    left == unit && right == unit
}

pub fn hopf(cfg: &RunConfig, seed: u64) -> Result<Report, ConfigError> {
    fn go<F: Field>(cfg: &RunConfig, seed: u64) -> Result<Report, ConfigError> {
        let alg = algebra::<F>(cfg)?;
        let len = cfg.bounds.max_word_length;
        let mut rep = Report::default();
        let ws = words(&alg, len);
        let bad: Vec<_> = ws
            .iter()
            .filter(|w| {
                let d = alg.coproduct(&Element::from_word((*w).clone()));
                alg.coproduct_at(&d, 0) != alg.coproduct_at(&d, 1)
            })
            .collect();
        rep.push("coassociativity", format!("words len <= {len}"), check(bad.is_empty()), format!("{} words", ws.len()));
        let g = alg.group();
        let tails = [g.identity(), g.k(0), g.inv(&g.k_prime(0))];
        let ls: Vec<_> = letters(&alg)
            .into_iter()
            .enumerate()
            .map(|(k, l)| alg.letter(l, tails[k % 3].clone()))
            .collect();
        let (mut bialg, mut assoc) = (true, true);
        for a in &ls {
            for b in &ls {
                let ab = alg.mul(a, b);
                bialg &= alg
                    .coproduct(&ab)
                    .sub(&alg.tensor_mul(&alg.coproduct(a), &alg.coproduct(b)))
                    .is_zero();
                for c in &ls {
                    assoc &= alg.mul(&ab, c) == alg.mul(a, &alg.mul(b, c));
                }
            }
        }
        let n = ls.len();
        rep.push("bialgebra", "letter pairs", check(bialg), format!("{} pairs", n * n));
        rep.push("associativity", "letter triples", check(assoc), format!("{} triples", n * n * n));
        let short: Vec<_> = ws.iter().filter(|w| w.len() <= len.min(3)).collect();
        let anti = short.iter().all(|w| antipode_holds(&alg, &Element::from_word((*w).clone())));
        rep.push("antipode", format!("words len <= {}", len.min(3)), check(anti), format!("{} words", short.len()));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all = letters(&alg);
        let mut sampled = true;
        for _ in 0..cfg.bounds.samples {
            let mut pick = |k: usize| -> Element<F> {
                let v: Vec<Letter> = (0..k).map(|_| all[rng.gen_range(0..all.len())]).collect();
                let t = tails[rng.gen_range(0..tails.len())].clone();
                Element::from_word(Word::new(&v, t))
            };
            let (x, y, z) = (pick(2), pick(1), pick(2));
            let xy = alg.mul(&x, &y);
            sampled &= alg.mul(&xy, &z) == alg.mul(&x, &alg.mul(&y, &z));
            sampled &= alg
                .coproduct(&xy)
                .sub(&alg.tensor_mul(&alg.coproduct(&x), &alg.coproduct(&y)))
                .is_zero();
        }
        rep.push(
            "sampled",
            format!("seed {seed}"),
            check(sampled),
            format!("{} random triples", cfg.bounds.samples),
        );
        Ok(rep)
    }
    in_field!(cfg, go, seed)
}

pub fn closed_forms(cfg: &RunConfig) -> Result<Report, ConfigError> {
    fn go<F: Field>(cfg: &RunConfig, _: ()) -> Result<Report, ConfigError> {
        let alg = algebra::<F>(cfg)?;
        let d = alg.params().datum().clone();
        let mut rep = Report::default();
        for i in 0..d.rank() {
            for j in (0..d.rank()).filter(|&j| j != i) {
                let top = (1 - d.a(i, j)) as u32;
                for side in [Side::Left, Side::Right] {
                    let mut ok = true;
                    for s in 1..=top {
                        let got = ad_power(&alg, side, i, j, s)?;
                        ok &= got == ad_closed_form(&alg, side, i, j, s)?;
                        ok &= s != top || got.is_zero();
                    }
                    let name = if side == Side::Left { "ad_l(E)" } else { "ad_r(FK')" };
                    rep.push(
                        "ad-power",
                        format!("{name} ({},{}) s <= {top}", i + 1, j + 1),
                        check(ok),
                        "matches closed form, zero at s = 1 - a_ij",
                    );
                }
            }
            let mut ok = true;
            for r in 1..=4 {
                let e = alg.power(&psi_gen(&alg, Gen::E(i))?, r);
                let f = alg.power(&psi_gen(&alg, Gen::F(i))?, r);
                ok &= e == letter_power_closed_form(&alg, Side::Left, i, r);
                ok &= f == letter_power_closed_form(&alg, Side::Right, i, r);
            }
            rep.push("letter-power", format!("E{0}, F{0}K'{0} r <= 4", i + 1), check(ok), "");
        }
        Ok(rep)
    }
    in_field!(cfg, go, ())
}

pub fn pairing(cfg: &RunConfig, max_height: u32) -> Result<Report, ConfigError> {
    fn go<F: Field>(cfg: &RunConfig, max_height: u32) -> Result<Report, ConfigError> {
        let alg = algebra::<F>(cfg)?;
        let n = alg.rank();
        let mut rep = Report::default();
        let mut betas: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..n {
            betas = betas
                .into_iter()
                .flat_map(|v| (0..=i64::from(max_height)).map(move |k| [v.clone(), vec![k]].concat()))
                .collect();
        }
        betas.retain(|b| (1..=i64::from(max_height)).contains(&b.iter().sum::<i64>()));
        betas.sort_by_key(|b| (b.iter().sum::<i64>(), b.clone()));
        for beta in betas {
            let b = qqsa::cartan::LatticeVector::from_ints(&beta);
            match gram_matrix(&alg, &b).and_then(|g| Ok((g.rows(), g.det()?))) {
                Ok((dim, det)) => rep.push(
                    "gram",
                    format!("beta {b}"),
                    check(!det.is_zero()),
                    format!("dim {dim}, det {}", if det.is_zero() { "0" } else { "nonzero" }),
                ),
                Err(e) => rep.push("gram", format!("beta {b}"), lib_status(&e), e.to_string()),
            }
        }
        Ok(rep)
    }
    in_field!(cfg, go, max_height)
}

fn module_records<F: Field>(rep: &mut Report, check_name: &str, params: &ParamMatrix, labels: &[i64], depth: usize) {
    let d = params.datum();
    let inputs = format!("lambda {labels:?}");
    let run = || -> qqsa::Result<(usize, i64, Vec<usize>, Vec<(RelationId, bool)>)> {
        let s = ModuleSetup::<F>::from_labels(params, labels, depth)?;
        let t = s.lowering_closure()?;
        let weyl = weyl_dimension(d, s.lambda())?;
        let mut thresholds = Vec::new();
        for i in 0..d.rank() {
            let r = s.nilpotency_threshold(i)?;
            if r != s.expected_threshold(i) {
                return Err(qqsa::Error::Internal(format!("threshold {r} at i = {}", i + 1)));
            }
            thresholds.push(r);
        }
        Ok((t.dim(), weyl, thresholds, s.check_matrix_relations(&t)?))
    };
    match run() {
        Ok((dim, weyl, th, rels)) => {
            rep.push(check_name, inputs.clone(), check(dim as i64 == weyl), format!("dim {dim}, Weyl {weyl}"));
            rep.push(check_name, inputs.clone(), Status::Pass, format!("nilpotency thresholds {th:?}"));
            let bad: Vec<String> = rels.iter().filter(|(_, ok)| !ok).map(|(id, _)| id.to_string()).collect();
            let detail = if bad.is_empty() {
                format!("{} relation matrices vanish", rels.len())
            } else {
                format!("nonzero: {}", bad.join(" "))
            };
            rep.push(check_name, inputs, check(bad.is_empty()), detail);
        }
        Err(e) => rep.push(check_name, inputs, lib_status(&e), e.to_string()),
    }
}

pub fn module(cfg: &RunConfig, lambdas: &[Vec<i64>]) -> Result<Report, ConfigError> {
    let d = cfg.datum()?;
    let mut rep = Report::default();
    for l in lambdas {
        if l.len() != d.rank() {
            return Err(ConfigError::Invalid(format!("weight {l:?} has the wrong length")));
        }
        let lambda = d.weight_from_labels(l)?;
        let params = cfg.params(CartanDatum::denominator(&[&lambda]))?;
        if cfg.parameters.mode == Mode::RootOfUnity {
            module_records::<Cyclo>(&mut rep, "module", &params, l, cfg.bounds.max_depth);
        } else {
            module_records::<Scalar>(&mut rep, "module", &params, l, cfg.bounds.max_depth);
        }
    }
    Ok(rep)
}

pub fn twist(cfg: &RunConfig, qhat: Mode, bound: usize) -> Result<Report, ConfigError> {
    let source = cfg.twist.source.unwrap_or(Mode::Tied);
    if [source, qhat].iter().any(|m| matches!(m, Mode::RootOfUnity | Mode::Numeric)) {
        return Err(ConfigError::Invalid("twists are run between symbolic parameter modes".into()));
    }
    let q = cfg.params_for(source, 1)?;
    let qh = cfg.params_for(qhat, 1)?;
    let mut rep = Report::default();
    let c: TwistContext<Scalar> = match TwistContext::new(&q, &qh) {
        Ok(c) => c,
        Err(e) => {
            rep.push("twist", "gauge", Status::Fail, e.to_string());
            return Ok(rep);
        }
    };
    let bad = gauge_violations(c.algebra().q_matrix(), c.hat().q_matrix());
    let g = c.algebra().group();
    let unit = (0..c.algebra().rank()).all(|i| c.sigma().eval(&g.k(i), &g.k_prime(i)).is_one());
    rep.push("twist", "gauge", check(bad.is_empty() && unit), "constraints hold, sigma(K_i, K'_i) = 1");
    match c.verify_twisted_relations(&JReducer::new(bound)) {
        Ok(rs) => {
            for (id, status) in rs {
                let (s, detail) = match status {
                    RelationStatus::Zero => (Status::Pass, "zero".to_string()),
                    RelationStatus::ZeroModJ { bound } => (Status::Pass, format!("zero-mod-J({bound})")),
                    RelationStatus::Undecided { bound } => (Status::Undecided, format!("undecided at bound {bound}")),
                    RelationStatus::Failed { residual } => (Status::Fail, format!("residual {residual}")),
                };
                rep.push("twisted-relation", format!("{id}'"), s, detail);
            }
        }
        Err(e) => rep.push("twisted-relation", "all", lib_status(&e), e.to_string()),
    }
    let n = c.algebra().rank();
    let gens: Vec<Gen> = (0..n)
        .flat_map(|i| [Gen::E(i), Gen::F(i), Gen::Omega(i, 1), Gen::OmegaPrime(i, 1), Gen::Omega(i, -1), Gen::OmegaPrime(i, -1)])
        .collect();
    let mut ok = true;
    for a in &gens {
        for b in &gens {
            let x = psi_gen(c.algebra(), *a)?;
            let y = psi_gen(c.algebra(), *b)?;
            ok &= c.phi(&c.twisted_product(&x, &y)) == c.hat().mul(&c.phi(&x), &c.phi(&y));
        }
    }
    rep.push("phi", "generator pairs", check(ok), format!("{} pairs", gens.len() * gens.len()));
    let mut alpha = true;
    let tails = [g.identity(), g.k(0), g.inv(&g.k_prime(n - 1))];
    for i in 0..n {
        for j in 0..n {
            for k in &tails {
                for kp in &tails {
                    let (l, r) = c.alpha_pair(i, j, k, kp)?;
                    alpha &= l == r;
                }
            }
        }
    }
    rep.push("alpha", "E_iK, F_jK' pairs", check(alpha), "");
    Ok(rep)
}

pub fn smallqg(cfg: &RunConfig, ell: u32) -> Result<Report, ConfigError> {
    let d = cfg.datum()?;
    let params = ParamMatrix::root_of_unity(&d, ell)?;
    let alg: Algebra<Cyclo> = Algebra::new(&params, None)?;
    let mut rep = Report::default();
    let orders = params.root_orders().unwrap_or_default();
    for i in 0..d.rank() {
        let r = orders.get(i).copied().unwrap_or(ell);
        let e = alg.power(&psi_gen(&alg, Gen::E(i))?, r).is_zero();
        let f = alg.power(&psi_gen(&alg, Gen::F(i))?, r).is_zero();
        rep.push("nilpotency", format!("E{0}, F{0}K'{0} power {r}", i + 1), check(e && f), "");
    }
    let order = alg.group().order();
    let want = u64::from(ell).pow(2 * d.rank() as u32);
    rep.push(
        "group",
        format!("order {ell}"),
        check(order == Some(want)),
        format!("|G| = {}", order.map_or("infinite".to_string(), |o| o.to_string())),
    );
    for l in &cfg.smallqg.lambdas {
        let lambda = d.weight_from_labels(l)?;
        match alcove_check(&d, &lambda, ell) {
            Ok(true) => module_records::<Cyclo>(&mut rep, "alcove-module", &params, l, cfg.bounds.max_depth),
            Ok(false) => rep.push("alcove-module", format!("lambda {l:?}"), Status::Pass, "outside the alcove, not built"),
            Err(e) => rep.push("alcove-module", format!("lambda {l:?}"), lib_status(&e), e.to_string()),
        }
    }
    Ok(rep)
}
