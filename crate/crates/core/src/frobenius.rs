//! Frobenius pairs and the exact checker for their axiom diagrams.
//!
//! A left Frobenius pair is `(X, Y, η, μ, ψ, ε, δ, φ)` with
//!
//! ```text
//! η: I → X        μ: X⊗X → X      ψ: X⊗Y → Y
//! ε: Y → I        δ: Y → Y⊗Y      φ: X → Y⊗X
//! ```
//!
//! such that `(X, η, μ)` is a monoid, `(Y, ε, δ)` a comonoid, `ψ` a left
//! `X`-action, `φ` a left `Y`-coaction, `φ` is `X`-linear and `ψ` is
//! `Y`-colinear. Every diagram is evaluated in full and compared exactly.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gvect::{EntryDiff, GradedObj, Mor};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusPairData {
    pub x: GradedObj,
    pub y: GradedObj,
    pub eta: Mor,
    pub mu: Mor,
    pub psi: Mor,
    pub eps: Mor,
    pub delta: Mor,
    pub phi: Mor,
}

/// The six structure maps, by role.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureMap {
    Eta,
    Mu,
    Psi,
    Eps,
    Delta,
    Phi,
}

impl StructureMap {
    pub const ALL: [StructureMap; 6] = [
        StructureMap::Eta,
        StructureMap::Mu,
        StructureMap::Psi,
        StructureMap::Eps,
        StructureMap::Delta,
        StructureMap::Phi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureMap::Eta => "eta",
            StructureMap::Mu => "mu",
            StructureMap::Psi => "psi",
            StructureMap::Eps => "eps",
            StructureMap::Delta => "delta",
            StructureMap::Phi => "phi",
        }
    }
}

impl fmt::Display for StructureMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StructureMap::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// The diagrams of the left-pair definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Assoc,
    UnitLeft,
    UnitRight,
    Coassoc,
    CounitLeft,
    CounitRight,
    Action,
    ActionUnit,
    Coaction,
    CoactionCounit,
    ModuleHom,
    ComoduleHom,
}

impl Axiom {
    pub const ALL: [Axiom; 12] = [
        Axiom::Assoc,
        Axiom::UnitLeft,
        Axiom::UnitRight,
        Axiom::Coassoc,
        Axiom::CounitLeft,
        Axiom::CounitRight,
        Axiom::Action,
        Axiom::ActionUnit,
        Axiom::Coaction,
        Axiom::CoactionCounit,
        Axiom::ModuleHom,
        Axiom::ComoduleHom,
    ];

    fn code(self) -> &'static str {
        match self {
            Axiom::Assoc => "1a-assoc",
            Axiom::UnitLeft => "1a-unit-left",
            Axiom::UnitRight => "1a-unit-right",
            Axiom::Coassoc => "1b-coassoc",
            Axiom::CounitLeft => "1b-counit-left",
            Axiom::CounitRight => "1b-counit-right",
            Axiom::Action => "2a-action",
            Axiom::ActionUnit => "2a-unit",
            Axiom::Coaction => "2b-coaction",
            Axiom::CoactionCounit => "2b-counit",
            Axiom::ModuleHom => "3a",
            Axiom::ComoduleHom => "3b",
        }
    }

    fn label(self) -> &'static str {
        match self {
            Axiom::Assoc => "associativity of μ",
            Axiom::UnitLeft => "μ∘(η⊗X) = X",
            Axiom::UnitRight => "μ∘(X⊗η) = X",
            Axiom::Coassoc => "coassociativity of δ",
            Axiom::CounitLeft => "(ε⊗Y)∘δ = Y",
            Axiom::CounitRight => "(Y⊗ε)∘δ = Y",
            Axiom::Action => "ψ is an X-action",
            Axiom::ActionUnit => "ψ∘(η⊗Y) = Y",
            Axiom::Coaction => "φ is a Y-coaction",
            Axiom::CoactionCounit => "(ε⊗X)∘φ = X",
            Axiom::ModuleHom => "φ is a map of left X-modules",
            Axiom::ComoduleHom => "ψ is a map of left Y-comodules",
        }
    }

    /// Whether the diagram is one of the unit/counit laws.
    pub fn is_unit_law(self) -> bool {
        matches!(
            self,
            Axiom::UnitLeft
                | Axiom::UnitRight
                | Axiom::CounitLeft
                | Axiom::CounitRight
                | Axiom::ActionUnit
                | Axiom::CoactionCounit
        )
    }
}

/// Stable identifier of every check this crate performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Left(Axiom),
    Right(Axiom),
    CommMu,
    CommDelta,
    RightModulePhi,
    RightComodulePsi,
    ZigzagX,
    ZigzagY,
    CorLambdaMu,
    CorRhoPsi,
    CorLambdaPsi,
    CorRhoEps,
    DualComparison,
}

impl CheckId {
    pub fn all() -> Vec<CheckId> {
        let mut v: Vec<CheckId> = Axiom::ALL.iter().map(|&a| CheckId::Left(a)).collect();
        v.extend(Axiom::ALL.iter().map(|&a| CheckId::Right(a)));
        v.extend([
            CheckId::CommMu,
            CheckId::CommDelta,
            CheckId::RightModulePhi,
            CheckId::RightComodulePsi,
            CheckId::ZigzagX,
            CheckId::ZigzagY,
            CheckId::CorLambdaMu,
            CheckId::CorRhoPsi,
            CheckId::CorLambdaPsi,
            CheckId::CorRhoEps,
            CheckId::DualComparison,
        ]);
        v
    }

    pub fn code(&self) -> String {
        match self {
            CheckId::Left(a) => a.code().to_string(),
            CheckId::Right(a) => format!("right-pair-{}", a.code()),
            CheckId::CommMu => "comm-mu".into(),
            CheckId::CommDelta => "comm-delta".into(),
            CheckId::RightModulePhi => "right-module-phi".into(),
            CheckId::RightComodulePsi => "right-comodule-psi".into(),
            CheckId::ZigzagX => "zigzag-x".into(),
            CheckId::ZigzagY => "zigzag-y".into(),
            CheckId::CorLambdaMu => "cor-lambda-mu".into(),
            CheckId::CorRhoPsi => "cor-rho-psi".into(),
            CheckId::CorLambdaPsi => "cor-lambda-psi".into(),
            CheckId::CorRhoEps => "cor-rho-eps".into(),
            CheckId::DualComparison => "dual-comparison".into(),
        }
    }

    /// Human-readable label.
    pub fn label(&self) -> String {
        match self {
            CheckId::Left(a) => a.label().to_string(),
            CheckId::Right(a) => format!("right {}", a.label()),
            CheckId::CommMu => "μ∘σ = μ".into(),
            CheckId::CommDelta => "σ∘δ = δ".into(),
            CheckId::RightModulePhi => "φ is a map of right X-modules".into(),
            CheckId::RightComodulePsi => "ψ is a map of right Y-comodules".into(),
            CheckId::ZigzagX => "(β⊗X)∘(X⊗α) = X".into(),
            CheckId::ZigzagY => "(Y⊗β)∘(α⊗Y) = Y".into(),
            CheckId::CorLambdaMu => "λ(μ) = φ".into(),
            CheckId::CorRhoPsi => "ρ(ψ) = φ".into(),
            CheckId::CorLambdaPsi => "λ(ψ) = δ".into(),
            CheckId::CorRhoEps => "ρ(ε) = η".into(),
            CheckId::DualComparison => "Y → Hom(X, I) invertible".into(),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::all()
            .into_iter()
            .find(|c| c.code() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Outcome of one diagram: `witness` is `None` exactly when it commutes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: CheckId,
    pub witness: Option<EntryDiff>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<CheckResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn get(&self, id: CheckId) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn passed(&self, id: CheckId) -> Option<bool> {
        self.get(id).map(CheckResult::passed)
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.results.extend(other.results);
    }
}

/// Compares two composites; the witness is the first differing entry.
pub(crate) fn compare(id: CheckId, lhs: &Mor, rhs: &Mor) -> CheckResult {
    let witness = lhs
        .first_difference(rhs)
        .expect("diagram composites are parallel");
    CheckResult { id, witness }
}

/// `f1 ∘ f2 ∘ ... ∘ fn`.
pub(crate) fn comp(maps: &[&Mor]) -> Mor {
    let (last, rest) = maps.split_last().expect("at least one map");
    rest.iter().rev().fold((*last).clone(), |acc, f| {
        f.compose(&acc).expect("validated shapes compose")
    })
}

pub(crate) fn id(obj: &GradedObj) -> Mor {
    Mor::identity(obj)
}

impl FrobeniusPairData {
    pub fn field(&self) -> FieldSpec {
        self.x.field()
    }

    pub fn map(&self, which: StructureMap) -> &Mor {
        match which {
            StructureMap::Eta => &self.eta,
            StructureMap::Mu => &self.mu,
            StructureMap::Psi => &self.psi,
            StructureMap::Eps => &self.eps,
            StructureMap::Delta => &self.delta,
            StructureMap::Phi => &self.phi,
        }
    }

    fn map_mut(&mut self, which: StructureMap) -> &mut Mor {
        match which {
            StructureMap::Eta => &mut self.eta,
            StructureMap::Mu => &mut self.mu,
            StructureMap::Psi => &mut self.psi,
            StructureMap::Eps => &mut self.eps,
            StructureMap::Delta => &mut self.delta,
            StructureMap::Phi => &mut self.phi,
        }
    }

    pub fn unit(&self) -> GradedObj {
        GradedObj::unit(self.field())
    }

    /// Expected `(dom, cod)` of a structure map.
    pub fn expected_type(&self, which: StructureMap) -> (GradedObj, GradedObj) {
        let (x, y, i) = (&self.x, &self.y, self.unit());
        match which {
            StructureMap::Eta => (i, x.clone()),
            StructureMap::Mu => (x.tensor(x), x.clone()),
            StructureMap::Psi => (x.tensor(y), y.clone()),
            StructureMap::Eps => (y.clone(), i),
            StructureMap::Delta => (y.clone(), y.tensor(y)),
            StructureMap::Phi => (x.clone(), y.tensor(x)),
        }
    }

    pub fn validate_shapes(&self) -> Result<()> {
        if self.x.field() != self.y.field() {
            return Err(Error::FieldMismatch(self.x.field(), self.y.field()));
        }
        for which in StructureMap::ALL {
            let (dom, cod) = self.expected_type(which);
            let f = self.map(which);
            if *f.dom() != dom || *f.cod() != cod {
                return Err(Error::WrongStructureMap {
                    map: which.name().into(),
                    expected: format!("{dom} -> {cod}"),
                    actual: format!("{} -> {}", f.dom(), f.cod()),
                });
            }
        }
        Ok(())
    }

    /// Builds `(A, A, η, μ, μ, ε, δ, δ)` from a Frobenius object.
    pub fn from_frobenius_object(
        a: GradedObj,
        eta: Mor,
        mu: Mor,
        eps: Mor,
        delta: Mor,
    ) -> Result<Self> {
        let pair = FrobeniusPairData {
            x: a.clone(),
            y: a,
            eta,
            psi: mu.clone(),
            mu,
            eps,
            phi: delta.clone(),
            delta,
        };
        pair.validate_shapes()?;
        Ok(pair)
    }

    /// `X = Y` and `ψ = μ`, `φ = δ`.
    pub fn is_frobenius_object(&self) -> bool {
        self.x == self.y && self.psi == self.mu && self.phi == self.delta
    }

    /// A copy differing in exactly one entry of one structure map.
    pub fn mutate(
        &self,
        which: StructureMap,
        degree: i32,
        row: usize,
        col: usize,
        value: Scalar,
    ) -> Result<Self> {
        let f = self.map(which);
        if !f.in_range(degree, row, col) {
            return Err(Error::OutOfRange {
                map: which.name().into(),
                degree,
                row,
                col,
            });
        }
        let mut out = self.clone();
        *out.map_mut(which) = f.with_entry(degree, row, col, value)?;
        Ok(out)
    }

    /// The right structure derived through the symmetry:
    /// `ψ' = ψ∘σ_{Y,X}: Y⊗X → Y` and `φ' = σ_{Y,X}∘φ: X → X⊗Y`.
    /// The result is a left pair for the reversed tensor product.
    pub fn sigma_right_structure(&self) -> FrobeniusPairData {
        let sigma = Mor::symmetry(&self.y, &self.x);
        FrobeniusPairData {
            psi: comp(&[&self.psi, &sigma]),
            phi: comp(&[&sigma, &self.phi]),
            ..self.clone()
        }
    }

    /// Both composites of one left-axiom diagram. With `reversed`, every
    /// `A⊗B` is read as `B⊗A`, which turns the left axioms into the right ones.
    fn composites(&self, axiom: Axiom, reversed: bool) -> (Mor, Mor) {
        let t = |f: &Mor, g: &Mor| if reversed { g.tensor(f) } else { f.tensor(g) };
        let (x, y) = (&self.x, &self.y);
        let (idx, idy) = (id(x), id(y));
        let (eta, mu, psi) = (&self.eta, &self.mu, &self.psi);
        let (eps, delta, phi) = (&self.eps, &self.delta, &self.phi);
        match axiom {
            Axiom::Assoc => (comp(&[mu, &t(mu, &idx)]), comp(&[mu, &t(&idx, mu)])),
            Axiom::UnitLeft => (comp(&[mu, &t(eta, &idx)]), idx),
            Axiom::UnitRight => (comp(&[mu, &t(&idx, eta)]), idx),
            Axiom::Coassoc => (
                comp(&[&t(delta, &idy), delta]),
                comp(&[&t(&idy, delta), delta]),
            ),
            Axiom::CounitLeft => (comp(&[&t(eps, &idy), delta]), idy),
            Axiom::CounitRight => (comp(&[&t(&idy, eps), delta]), idy),
            Axiom::Action => (comp(&[psi, &t(mu, &idy)]), comp(&[psi, &t(&idx, psi)])),
            Axiom::ActionUnit => (comp(&[psi, &t(eta, &idy)]), idy),
            Axiom::Coaction => (comp(&[&t(delta, &idx), phi]), comp(&[&t(&idy, phi), phi])),
            Axiom::CoactionCounit => (comp(&[&t(eps, &idx), phi]), idx),
            Axiom::ModuleHom => (comp(&[phi, mu]), comp(&[&t(psi, &idx), &t(&idx, phi)])),
            Axiom::ComoduleHom => (comp(&[delta, psi]), comp(&[&t(&idy, psi), &t(phi, &idy)])),
        }
    }

    /// Evaluates one left-axiom diagram.
    pub fn check_axiom(&self, axiom: Axiom) -> Result<CheckResult> {
        self.validate_shapes()?;
        let (lhs, rhs) = self.composites(axiom, false);
        Ok(compare(CheckId::Left(axiom), &lhs, &rhs))
    }

    /// All twelve left-pair diagrams.
    pub fn check_left_frobenius(&self) -> Result<AxiomReport> {
        self.validate_shapes()?;
        Ok(AxiomReport {
            results: Axiom::ALL
                .iter()
                .map(|&a| {
                    let (lhs, rhs) = self.composites(a, false);
                    compare(CheckId::Left(a), &lhs, &rhs)
                })
                .collect(),
        })
    }

    /// The mirrored axioms on the σ-derived right structure (a left pair
    /// for `A ⊗op B = B⊗A`).
    pub fn check_right_frobenius(&self) -> Result<AxiomReport> {
        self.validate_shapes()?;
        let right = self.sigma_right_structure();
        Ok(AxiomReport {
            results: Axiom::ALL
                .iter()
                .map(|&a| {
                    let (lhs, rhs) = right.composites(a, true);
                    compare(CheckId::Right(a), &lhs, &rhs)
                })
                .collect(),
        })
    }

    /// `μ∘σ_{X,X} = μ` and `σ_{Y,Y}∘δ = δ`.
    pub fn check_commutative(&self) -> Result<AxiomReport> {
        self.validate_shapes()?;
        let sx = Mor::symmetry(&self.x, &self.x);
        let sy = Mor::symmetry(&self.y, &self.y);
        Ok(AxiomReport {
            results: vec![
                compare(CheckId::CommMu, &comp(&[&self.mu, &sx]), &self.mu),
                compare(CheckId::CommDelta, &comp(&[&sy, &self.delta]), &self.delta),
            ],
        })
    }

    /// `φ` is right `X`-linear and `ψ` right `Y`-colinear:
    /// `φ∘μ = (Y⊗μ)∘(φ⊗X)` and `δ∘ψ = (ψ⊗Y)∘(X⊗δ)`.
    pub fn check_derived_right_structure(&self) -> Result<AxiomReport> {
        self.validate_shapes()?;
        let (idx, idy) = (id(&self.x), id(&self.y));
        let module = compare(
            CheckId::RightModulePhi,
            &comp(&[&self.phi, &self.mu]),
            &comp(&[&idy.tensor(&self.mu), &self.phi.tensor(&idx)]),
        );
        let comodule = compare(
            CheckId::RightComodulePsi,
            &comp(&[&self.delta, &self.psi]),
            &comp(&[&self.psi.tensor(&idy), &idx.tensor(&self.delta)]),
        );
        Ok(AxiomReport {
            results: vec![module, comodule],
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use std::collections::BTreeMap;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn trivial() -> FrobeniusPairData {
        let i = GradedObj::unit(Q);
        let one = Mor::identity(&i);
        FrobeniusPairData {
            x: i.clone(),
            y: i,
            eta: one.clone(),
            mu: one.clone(),
            psi: one.clone(),
            eps: one.clone(),
            delta: one.clone(),
            phi: one,
        }
    }

    #[test]
    fn trivial_pair_passes_everything() {
        let p = trivial();
        p.validate_shapes().unwrap();
        assert!(p.check_left_frobenius().unwrap().all_pass());
        assert!(p.check_right_frobenius().unwrap().all_pass());
        assert!(p.check_commutative().unwrap().all_pass());
        assert!(p.check_derived_right_structure().unwrap().all_pass());
        assert!(p.check_axiom(Axiom::Assoc).unwrap().passed());
    }

    #[test]
    fn wrong_arity_is_named() {
        let mut p = trivial();
        let x = GradedObj::new(Q, [(0, 2)]);
        p.x = x.clone();
        p.mu = Mor::identity(&x);
        match p.validate_shapes() {
            Err(Error::WrongStructureMap { map, .. }) => assert_eq!(map, "eta"),
            other => panic!("unexpected {other:?}"),
        }
        let mut p = trivial();
        let two = GradedObj::new(Q, [(0, 2)]);
        p.mu = Mor::zero(two.clone(), GradedObj::unit(Q));
        match p.validate_shapes() {
            Err(Error::WrongStructureMap { map, .. }) => assert_eq!(map, "mu"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zeroing_eta_breaks_unit_laws() {
        let p = trivial()
            .mutate(StructureMap::Eta, 0, 0, 0, Q.zero())
            .unwrap();
        let report = p.check_left_frobenius().unwrap();
        assert_eq!(report.passed(CheckId::Left(Axiom::UnitLeft)), Some(false));
        assert_eq!(report.passed(CheckId::Left(Axiom::UnitRight)), Some(false));
        assert_eq!(report.passed(CheckId::Left(Axiom::ActionUnit)), Some(false));
        let w = report
            .get(CheckId::Left(Axiom::UnitLeft))
            .unwrap()
            .witness
            .clone()
            .unwrap();
        assert_eq!((w.degree, w.row, w.col), (0, 0, 0));
        assert_eq!((w.lhs, w.rhs), (Q.zero(), Q.one()));
    }

    #[test]
    fn mutate_then_restore() {
        let p = trivial();
        let m = p.mutate(StructureMap::Mu, 0, 0, 0, Q.from_i64(2)).unwrap();
        assert!(!m.check_left_frobenius().unwrap().all_pass());
        let back = m.mutate(StructureMap::Mu, 0, 0, 0, Q.one()).unwrap();
        assert_eq!(back, p);
        assert!(back.check_left_frobenius().unwrap().all_pass());
        assert!(matches!(
            p.mutate(StructureMap::Mu, 1, 0, 0, Q.one()),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn zero_objects_commute_trivially() {
        let z = GradedObj::zero(Q);
        let i = GradedObj::unit(Q);
        let p = FrobeniusPairData {
            x: z.clone(),
            y: z.clone(),
            eta: Mor::zero(i.clone(), z.clone()),
            mu: Mor::zero(z.clone(), z.clone()),
            psi: Mor::zero(z.clone(), z.clone()),
            eps: Mor::zero(z.clone(), i.clone()),
            delta: Mor::zero(z.clone(), z.clone()),
            phi: Mor::zero(z.clone(), z.clone()),
        };
        assert!(p.check_left_frobenius().unwrap().all_pass());
    }

    #[test]
    fn check_ids_round_trip() {
        for id in CheckId::all() {
            assert_eq!(id.code().parse::<CheckId>().unwrap(), id);
        }
        assert!("4c".parse::<CheckId>().is_err());
    }

    #[test]
    fn frobenius_object_embedding() {
        let i = GradedObj::unit(Q);
        let one = Mor::identity(&i);
        let p =
            FrobeniusPairData::from_frobenius_object(i, one.clone(), one.clone(), one.clone(), one)
                .unwrap();
        assert_eq!(p, trivial());
        assert!(p.is_frobenius_object());
        let mut blocks = BTreeMap::new();
        blocks.insert(0, Matrix::from_i64(Q, &[&[1]]));
        let a = GradedObj::new(Q, [(0, 2)]);
        let bad = Mor::new(GradedObj::unit(Q), GradedObj::unit(Q), blocks).unwrap();
        assert!(FrobeniusPairData::from_frobenius_object(
            a.clone(),
            bad.clone(),
            bad.clone(),
            bad.clone(),
            bad
        )
        .is_err());
    }
}
