use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::presentation::{act_on, eval_dyadic, Flavor, PreBlochPresentation};
use crate::error::{Error, Result};
use crate::exactalg::{GroupElement, GroupHom, IntMatrix, Kernel, OddElement, OddLocalized, PresentedGroup};
use crate::fields::FqField;
use crate::groupring::GroupRingElement;
use crate::identities::{c_const, psi1, psi2, SymbolSum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeName {
    RP,
    RPtilde,
    RPhat,
    RPbar,
    P,
    RedP,
    RedPbar,
}

impl NodeName {
    pub const ALL: [NodeName; 7] = [
        NodeName::RP,
        NodeName::RPtilde,
        NodeName::RPhat,
        NodeName::RPbar,
        NodeName::P,
        NodeName::RedP,
        NodeName::RedPbar,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NodeName::RP => "RP",
            NodeName::RPtilde => "RPtilde",
            NodeName::RPhat => "RPhat",
            NodeName::RPbar => "RPbar",
            NodeName::P => "P",
            NodeName::RedP => "RedP",
            NodeName::RedPbar => "RedPbar",
        }
    }

    /// Whether the node is a quotient of `RP` (as opposed to `P`).
    pub fn is_refined(self) -> bool {
        matches!(self, NodeName::RP | NodeName::RPtilde | NodeName::RPhat | NodeName::RPbar)
    }
}

impl fmt::Display for NodeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NodeName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NodeName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown node {s}")))
    }
}

/// A quotient of `RP(k)` or `P(k)` together with its induced Bloch-Wigner map.
#[derive(Debug)]
pub struct TowerNode {
    name: NodeName,
    group: Arc<PresentedGroup>,
    projection: GroupHom,
    lambda: GroupHom,
    bloch: Kernel,
    odd: Arc<OddLocalized>,
    bloch_odd: Arc<OddLocalized>,
}

impl TowerNode {
    fn new(name: NodeName, projection: GroupHom, lambda: GroupHom) -> Result<Self> {
        let bloch = lambda.kernel()?;
        let group = projection.target().clone();
        Ok(TowerNode {
            name,
            odd: OddLocalized::new(&group),
            bloch_odd: OddLocalized::new(&bloch.group),
            group,
            projection,
            lambda,
            bloch,
        })
    }

    fn child(&self, name: NodeName, root_elems: &[GroupElement]) -> Result<Self> {
        let elems = root_elems.iter().map(|e| self.projection.apply(e)).collect::<Result<Vec<_>>>()?;
        let images = elems.iter().map(|e| self.lambda.apply(e)).collect::<Result<Vec<_>>>()?;
        let (g, proj) = self.group.quotient(&elems)?;
        let (t, _) = self.lambda.target().quotient(&images)?;
        let lambda = GroupHom::new(g, t, self.lambda.matrix().clone())?;
        Self::new(name, proj.compose(&self.projection)?, lambda)
    }

    pub fn name(&self) -> NodeName {
        self.name
    }

    pub fn group(&self) -> &Arc<PresentedGroup> {
        &self.group
    }

    /// Projection from `RP` or `P`.
    pub fn projection(&self) -> &GroupHom {
        &self.projection
    }

    pub fn lambda(&self) -> &GroupHom {
        &self.lambda
    }

    pub fn bloch(&self) -> &Kernel {
        &self.bloch
    }

    pub fn bloch_group(&self) -> &Arc<PresentedGroup> {
        &self.bloch.group
    }

    pub fn odd(&self) -> &Arc<OddLocalized> {
        &self.odd
    }

    pub fn bloch_odd(&self) -> &Arc<OddLocalized> {
        &self.bloch_odd
    }

    /// Image in the odd localization of the Bloch kernel of an element lying in it.
    pub fn to_bloch_odd(&self, x: &GroupElement) -> Result<OddElement> {
        self.bloch_odd.map(&self.bloch.lift(x)?)
    }

    pub fn in_bloch(&self, x: &GroupElement) -> Result<bool> {
        Ok(self.lambda.apply(x)?.is_zero())
    }
}

/// The quotient tower of `RP(F_q)` and `P(F_q)` with the distinguished elements.
#[derive(Debug)]
pub struct Tower {
    refined: Arc<PreBlochPresentation>,
    classical: Arc<PreBlochPresentation>,
    b: GroupElement,
    b_classical: GroupElement,
    k1: Vec<GroupElement>,
    k2: Vec<GroupElement>,
    kappa: Vec<GroupElement>,
    nodes: Vec<TowerNode>,
}

fn with_translates(p: &PreBlochPresentation, x: GroupElement) -> Result<Vec<GroupElement>> {
    let mut v = vec![x.clone()];
    if p.classes() == 2 {
        v.push(x.act(0)?);
    }
    Ok(v)
}

impl Tower {
    pub fn build(field: &FqField) -> Result<Self> {
        let refined = Arc::new(PreBlochPresentation::build(field, Flavor::Refined)?);
        let classical = Arc::new(PreBlochPresentation::build(field, Flavor::Classical)?);
        Self::from_presentations(refined, classical)
    }

    /// The ad hoc groups for `F_2` and `F_3`.
    pub fn small_field_table(q: u64) -> Result<Self> {
        if q != 2 && q != 3 {
            return Err(Error::BadArgument(format!("small field table exists for q = 2, 3 only, got {q}")));
        }
        Self::build(&FqField::prime(q)?)
    }

    pub fn from_presentations(refined: Arc<PreBlochPresentation>, classical: Arc<PreBlochPresentation>) -> Result<Self> {
        let field = refined.field().clone();
        let (b, b_classical) = match (refined.small_generator(), classical.small_generator()) {
            (Some(b), Some(bc)) => (b, bc),
            _ => {
                let c = c_const(&field, &field.primitive())?;
                (refined.eval(&c)?, classical.eval(&c)?)
            }
        };
        let mut k1 = Vec::new();
        let mut k2 = Vec::new();
        let mut kappa = Vec::new();
        for x in field.nonzero() {
            let p1 = psi1(&field, &x)?;
            k1.extend(with_translates(&refined, refined.eval(&p1)?)?);
            k2.extend(with_translates(&refined, refined.eval(&psi2(&field, &x)?)?)?);
            kappa.push(classical.eval(&p1)?);
        }
        let c = b.scale(&BigInt::from(2));
        let c_classical = b_classical.scale(&BigInt::from(2));
        let rc = with_translates(&refined, c)?;

        let rp = TowerNode::new(NodeName::RP, GroupHom::identity(refined.group()), refined.lambda().clone())?;
        let rpt = rp.child(NodeName::RPtilde, &k1)?;
        let rph = rpt.child(NodeName::RPhat, &k2)?;
        let rpb = rpt.child(NodeName::RPbar, &rc)?;
        let p = TowerNode::new(NodeName::P, GroupHom::identity(classical.group()), classical.lambda().clone())?;
        let redp = p.child(NodeName::RedP, &kappa)?;
        let redpb = redp.child(NodeName::RedPbar, &[c_classical])?;
        Ok(Tower {
            refined,
            classical,
            b,
            b_classical,
            k1,
            k2,
            kappa,
            nodes: vec![rp, rpt, rph, rpb, p, redp, redpb],
        })
    }

    pub fn field(&self) -> &FqField {
        self.refined.field()
    }

    pub fn refined(&self) -> &Arc<PreBlochPresentation> {
        &self.refined
    }

    pub fn classical(&self) -> &Arc<PreBlochPresentation> {
        &self.classical
    }

    pub fn node(&self, name: NodeName) -> &TowerNode {
        self.nodes.iter().find(|n| n.name == name).expect("every node is built")
    }

    pub fn nodes(&self) -> &[TowerNode] {
        &self.nodes
    }

    fn root(&self, name: NodeName) -> &PreBlochPresentation {
        if name.is_refined() {
            &self.refined
        } else {
            &self.classical
        }
    }

    /// `K^{(1)}` generators (with class translates) in `RP`.
    pub fn k1(&self) -> &[GroupElement] {
        &self.k1
    }

    pub fn k2(&self) -> &[GroupElement] {
        &self.k2
    }

    /// Images of the `ψ₁(x)` in `P`.
    pub fn kappa(&self) -> &[GroupElement] {
        &self.kappa
    }

    /// `b` in the given node.
    pub fn b(&self, name: NodeName) -> Result<GroupElement> {
        let root = if name.is_refined() { &self.b } else { &self.b_classical };
        self.node(name).projection.apply(root)
    }

    /// `c = 2b` in the given node.
    pub fn c(&self, name: NodeName) -> Result<GroupElement> {
        Ok(self.b(name)?.scale(&BigInt::from(2)))
    }

    pub fn eval(&self, name: NodeName, s: &SymbolSum<FqField>) -> Result<GroupElement> {
        self.node(name).projection.apply(&self.root(name).eval(s)?)
    }

    /// Evaluation in the odd localization of a node; dyadic coefficients are allowed.
    pub fn eval_odd(&self, name: NodeName, s: &SymbolSum<FqField>) -> Result<OddElement> {
        eval_dyadic(s, |t| self.eval(name, t), &self.node(name).odd)
    }

    /// Group-ring element acting on an element of a node.
    pub fn act(&self, name: NodeName, a: &GroupRingElement, x: &GroupElement) -> Result<GroupElement> {
        act_on(&self.node(name).group, self.root(name).classes(), a, x)
    }

    /// Checks `K1 + K2 = K1 + I·c` and `K1 ∩ I·c = 0` inside `RP`.
    pub fn check_kk(&self) -> Result<bool> {
        let g = self.refined.group();
        let field = self.field();
        let ic: Vec<GroupElement> = match field.smallest_nonsquare() {
            Some(u) => {
                let pf = GroupRingElement::pf(field, &u)?;
                vec![self.refined.act(&pf, &self.b.scale(&BigInt::from(2)))?]
            }
            None => Vec::new(),
        };
        let mut a: Vec<GroupElement> = self.k1.clone();
        a.extend(self.k2.iter().cloned());
        let mut b: Vec<GroupElement> = self.k1.clone();
        b.extend(ic.iter().cloned());
        let same = g.same_span(&a, &b)?;
        // Z·e meets K1 trivially iff m·e = 0 for m the order of e modulo K1
        let (_, p1) = g.quotient(&self.k1)?;
        let mut disjoint = true;
        for e in &ic {
            if let Some(m) = p1.apply(e)?.order() {
                disjoint &= e.scale(&m).is_zero();
            }
        }
        Ok(same && disjoint)
    }

    /// The coinvariants map from a refined node onto a classical node, `<g>[x] -> [x]`.
    pub fn coinvariants(&self, from: NodeName, to: NodeName) -> Result<GroupHom> {
        if !from.is_refined() || to.is_refined() {
            return Err(Error::BadArgument(format!("no coinvariants map {from} -> {to}")));
        }
        let classes = self.refined.classes();
        let n = self.classical.group().n_gens();
        let mut m = IntMatrix::zeros(n, self.refined.group().n_gens());
        for s in 0..n {
            for g in 0..classes {
                m.set(s, s * classes + g, BigInt::from(1));
            }
        }
        GroupHom::new(self.node(from).group.clone(), self.node(to).group.clone(), m)
    }

    pub fn report(&self, name: NodeName) -> Value {
        let n = self.node(name);
        let inv = |g: &PresentedGroup| g.invariant_factors().iter().map(|d| d.to_string()).collect::<Vec<_>>();
        json!({
            "q": self.field().q(),
            "flavor": if name.is_refined() { "refined" } else { "classical" },
            "node": name.as_str(),
            "invariant_factors": inv(&n.group),
            "order": n.group.order().map(|o| o.to_string()),
            "bloch_invariant_factors": inv(&n.bloch.group),
            "bloch_order": n.bloch.group.order().map(|o| o.to_string()),
        })
    }
}
