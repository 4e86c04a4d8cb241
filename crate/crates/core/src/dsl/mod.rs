//! A small language for objects and morphism terms over named generators,
//! with a line-based script format on top.

mod lexer;
mod script;
mod syntax;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::frobenius::{FrobeniusPairData, StructureMap};
use crate::gvect::{GradedObj, Mor};
use crate::scalar::FieldSpec;

pub use script::{
    check_pair_with_script, parse_script, run_script, standard_diagrams, Script, ScriptCheck,
    ScriptRun, Statement,
};
pub use syntax::{format, parse, parse_object, ObjExpr, Term};

/// Named objects and generators over one field.
#[derive(Clone, Debug)]
pub struct Env {
    field: FieldSpec,
    objects: BTreeMap<String, GradedObj>,
    gens: BTreeMap<String, Mor>,
}

impl Env {
    pub fn new(field: FieldSpec) -> Self {
        Env {
            field,
            objects: BTreeMap::new(),
            gens: BTreeMap::new(),
        }
    }

    /// Objects `X`, `Y` and the six structure maps under their role names.
    pub fn for_pair(pair: &FrobeniusPairData) -> Self {
        let mut env = Env::new(pair.field());
        env.objects.insert("X".into(), pair.x.clone());
        env.objects.insert("Y".into(), pair.y.clone());
        for m in StructureMap::ALL {
            env.gens.insert(m.name().into(), pair.map(m).clone());
        }
        env
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn objects(&self) -> &BTreeMap<String, GradedObj> {
        &self.objects
    }

    pub fn gens(&self) -> &BTreeMap<String, Mor> {
        &self.gens
    }

    fn check_name(name: &str) -> Result<()> {
        if syntax::is_reserved(name) {
            return Err(Error::InvalidArgument(format!("`{name}` is reserved")));
        }
        Ok(())
    }

    pub fn define_object(&mut self, name: &str, obj: GradedObj) -> Result<()> {
        Self::check_name(name)?;
        if obj.field() != self.field {
            return Err(Error::FieldMismatch(self.field, obj.field()));
        }
        if self.objects.contains_key(name) {
            return Err(Error::InvalidArgument(format!(
                "object `{name}` already defined"
            )));
        }
        self.objects.insert(name.into(), obj);
        Ok(())
    }

    pub fn define_gen(&mut self, name: &str, mor: Mor) -> Result<()> {
        Self::check_name(name)?;
        if mor.field() != self.field {
            return Err(Error::FieldMismatch(self.field, mor.field()));
        }
        if self.gens.contains_key(name) {
            return Err(Error::InvalidArgument(format!(
                "generator `{name}` already defined"
            )));
        }
        self.gens.insert(name.into(), mor);
        Ok(())
    }

    pub fn object(&self, name: &str) -> Result<&GradedObj> {
        self.objects
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn gen(&self, name: &str) -> Result<&Mor> {
        self.gens
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn resolve(&self, o: &ObjExpr) -> Result<GradedObj> {
        Ok(match o {
            ObjExpr::Unit => GradedObj::unit(self.field),
            ObjExpr::Name(n) => self.object(n)?.clone(),
            ObjExpr::Tensor(a, b) => self.resolve(a)?.tensor(&self.resolve(b)?),
        })
    }
}

/// Domain and codomain of a term.
pub fn typecheck(t: &Term, env: &Env) -> Result<(GradedObj, GradedObj)> {
    Ok(match t {
        Term::Generator(n) => {
            let g = env.gen(n)?;
            (g.dom().clone(), g.cod().clone())
        }
        Term::Identity(o) => {
            let a = env.resolve(o)?;
            (a.clone(), a)
        }
        Term::Symmetry(a, b) => {
            let (a, b) = (env.resolve(a)?, env.resolve(b)?);
            (a.tensor(&b), b.tensor(&a))
        }
        Term::Compose(f, g) => {
            let (fd, fc) = typecheck(f, env)?;
            let (gd, gc) = typecheck(g, env)?;
            if gc != fd {
                return Err(Error::Type(format!(
                    "cannot compose `{f}` : {fd} -> {fc} after `{g}` : {gd} -> {gc}"
                )));
            }
            (gd, fc)
        }
        Term::Tensor(f, g) => {
            let (fd, fc) = typecheck(f, env)?;
            let (gd, gc) = typecheck(g, env)?;
            (fd.tensor(&gd), fc.tensor(&gc))
        }
    })
}

fn eval(t: &Term, env: &Env) -> Result<Mor> {
    Ok(match t {
        Term::Generator(n) => env.gen(n)?.clone(),
        Term::Identity(o) => Mor::identity(&env.resolve(o)?),
        Term::Symmetry(a, b) => Mor::symmetry(&env.resolve(a)?, &env.resolve(b)?),
        Term::Compose(f, g) => eval(f, env)?.compose(&eval(g, env)?)?,
        Term::Tensor(f, g) => eval(f, env)?.tensor(&eval(g, env)?),
    })
}

/// The morphism a term denotes; type errors are reported before any
/// arithmetic.
pub fn evaluate(t: &Term, env: &Env) -> Result<Mor> {
    typecheck(t, env)?;
    eval(t, env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{frobenius_object_from_trace, truncated_polynomial};
    use crate::matrix::Matrix;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn dual_numbers() -> Env {
        let a = truncated_polynomial(2, Q).unwrap();
        Env::for_pair(&frobenius_object_from_trace(&a, a.trace().unwrap()).unwrap())
    }

    #[test]
    fn unit_composite_types_and_evaluates() {
        let env = dual_numbers();
        let t = parse("mu . (eta * id X)").unwrap();
        let (d, c) = typecheck(&t, &env).unwrap();
        let x = env.object("X").unwrap().clone();
        assert_eq!((&d, &c), (&x, &x));
        assert!(evaluate(&t, &env)
            .unwrap()
            .equal(&Mor::identity(&x))
            .unwrap());
    }

    #[test]
    fn eps_after_mu_is_a_type_error() {
        let mut env = dual_numbers();
        let y2 = GradedObj::new(Q, [(0, 3)]);
        env.objects.insert("Y".into(), y2.clone());
        env.gens
            .insert("eps".into(), Mor::zero(y2, GradedObj::unit(Q)));
        match typecheck(&parse("eps . mu").unwrap(), &env) {
            Err(Error::Type(msg)) => assert!(msg.contains("`eps`") && msg.contains("`mu`")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mixed_composite_shape() {
        let env = dual_numbers();
        let t = parse("(id Y * mu) . (sigma(X, Y) * id X)").unwrap();
        let (x, y) = (env.object("X").unwrap(), env.object("Y").unwrap());
        let (d, c) = typecheck(&t, &env).unwrap();
        assert_eq!(d, x.tensor(y).tensor(x));
        assert_eq!(c, y.tensor(x));
        let m = evaluate(&t, &env).unwrap();
        assert_eq!((m.dom(), m.cod()), (&d, &c));
    }

    #[test]
    fn odd_symmetry_sign() {
        let mut env = Env::new(Q);
        env.define_object("E", GradedObj::new(Q, [(1, 1)])).unwrap();
        let m = evaluate(&parse("sigma(E, E)").unwrap(), &env).unwrap();
        assert_eq!(m.block(2).unwrap(), &Matrix::from_i64(Q, &[&[-1]]));
        let one = evaluate(&parse("id I").unwrap(), &env).unwrap();
        assert_eq!(one.block(0).unwrap(), &Matrix::from_i64(Q, &[&[1]]));
    }

    #[test]
    fn names_are_checked() {
        let mut env = Env::new(Q);
        assert!(env.define_object("id", GradedObj::unit(Q)).is_err());
        env.define_object("A", GradedObj::unit(Q)).unwrap();
        assert!(env.define_object("A", GradedObj::unit(Q)).is_err());
        assert!(matches!(
            evaluate(&parse("nope").unwrap(), &env),
            Err(Error::UnknownName(_))
        ));
    }
}
